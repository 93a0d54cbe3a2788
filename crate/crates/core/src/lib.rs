//! Exact-arithmetic machinery for Schur functors and hyperdeterminants.
//!
//! The crate computes Young symmetrizers and isotypic projectors in the
//! rational group algebra of `Σ_p`, applies them to dense tensors, and
//! certifies degeneracy of tensors in each Schur component by explicit
//! kernel witnesses. The 2×2×2 hyperdeterminant and the Pfaffian are
//! available for direct cross-checks.
//!
//! Everything is exact: scalars are arbitrary-precision rationals and every
//! vanishing check is an equality test.

pub mod degeneracy;
pub mod error;
pub mod hyperdet;
pub mod linalg;
pub mod partitions;
pub mod perm_algebra;
pub mod rational;
pub mod rng;
pub mod suites;
pub mod tensor_space;

pub use degeneracy::{
    antisymmetrize, diagonal_kernel_check, is_in_kernel, lemma1_det, lemma1_eigencheck,
    lemma1_matrix, lemma1_slot_values, main_theorem_suite, positive_equation_residual,
    theorem_t2_check, DegeneracyReport, KernelWitness, Verdict,
};
pub use error::{Error, Result};
pub use hyperdet::{degeneracy_crosscheck_222, det2, hyperdet_222, pfaffian, PencilQuadratic};
pub use linalg::Matrix;
pub use partitions::{
    all_partitions, conjugate, critical_set, cycle_partition, dominance_leq, is_exceptional,
    refines, shape_of, syt_count, Partition, SetPartition,
};
pub use perm_algebra::{
    a_element, b_element, central_symmetrizer, column_group, pos_element, row_group,
    young_symmetrizer, AlgebraElement, Permutation,
};
pub use rational::Rational;
pub use tensor_space::{
    algebra_action, evaluate, permute_action, project_isotypic, projector_rank, random_tensor,
    rank_one, slice, Covector, IsotypicProjector, Tensor, Vector,
};
