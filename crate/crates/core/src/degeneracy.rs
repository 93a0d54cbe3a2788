//! Kernel witnesses, positive equations and the diagonal degeneracy
//! certificate for tensors in a Schur component.

use serde::{Deserialize, Serialize};

use crate::error::{guard, Error, Result};
use crate::linalg::Matrix;
use crate::partitions::{
    all_partitions, all_set_partitions, critical_set, is_exceptional, Partition, SetPartition,
};
use crate::perm_algebra::{all_permutations, pos_element, AlgebraElement, MAX_CENTRAL_DEGREE};
use crate::rational::{self, Rational};
use crate::rng::{derive_seed, SplitMix64};
use crate::tensor_space::{
    algebra_action, evaluate, random_tensor, slice, IsotypicProjector, Tensor, Vector,
};

pub const MAX_LEMMA1_MU: usize = 64;
pub const MAX_EIGENCHECK_MU: usize = 16;
pub const MAX_SUITE_ORDER: usize = 5;
pub const MAX_SUITE_DIM: usize = 3;

/// Nonzero vectors `(x¹,…,x^p)` standing for `x¹⊗…⊗x^p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelWitness {
    vectors: Vec<Vector>,
}

impl KernelWitness {
    pub fn new(vectors: Vec<Vector>) -> Result<Self> {
        let n = vectors
            .first()
            .ok_or_else(|| Error::InvalidWitness("no vectors".into()))?
            .dim();
        for (k, v) in vectors.iter().enumerate() {
            if v.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.dim(),
                });
            }
            if v.is_zero() {
                return Err(Error::InvalidWitness(format!("vector {} is zero", k + 1)));
            }
        }
        Ok(Self { vectors })
    }

    /// `(x, …, x)` with `p` copies.
    pub fn diagonal(x: &Vector, p: usize) -> Result<Self> {
        Self::new(vec![x.clone(); p])
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }
}

/// First nonvanishing slice of `A` at `w`, as `(1-based slot, component
/// index, value)`.
pub fn first_nonzero_slice(
    a: &Tensor,
    w: &KernelWitness,
) -> Result<Option<(usize, usize, Rational)>> {
    if a.order() != w.vectors.len() {
        return Err(Error::DegreeMismatch {
            expected: a.order(),
            found: w.vectors.len(),
        });
    }
    for slot in 1..=a.order() {
        let mut others = w.vectors.clone();
        others.remove(slot - 1);
        let s = slice(a, slot, &others)?;
        if let Some((k, v)) = s.first_nonzero() {
            return Ok(Some((slot, k, v.clone())));
        }
    }
    Ok(None)
}

/// `true` iff every slice `A(x¹,…,V,…,x^p)` vanishes.
pub fn is_in_kernel(a: &Tensor, w: &KernelWitness) -> Result<bool> {
    Ok(first_nonzero_slice(a, w)?.is_none())
}

/// Kernel test at the diagonal point `x⊗…⊗x`.
pub fn diagonal_kernel_check(a: &Tensor, x: &Vector) -> Result<bool> {
    is_in_kernel(a, &KernelWitness::diagonal(x, a.order())?)
}

/// Signed average over `Σ_p`.
pub fn antisymmetrize(a: &Tensor) -> Result<Tensor> {
    signed_average(a, true)
}

/// Plain average over `Σ_p`.
pub fn symmetrize(a: &Tensor) -> Result<Tensor> {
    signed_average(a, false)
}

fn signed_average(a: &Tensor, signed: bool) -> Result<Tensor> {
    let p = a.order();
    guard("symmetrization degree <= 6", p, MAX_CENTRAL_DEGREE)?;
    let perms = all_permutations(p)?;
    let weight = rational::frac(1, perms.len() as i64);
    let u = AlgebraElement::from_terms(
        p,
        perms.into_iter().map(|s| {
            let c = if signed {
                &weight * rational::int(s.sign().into())
            } else {
                weight.clone()
            };
            (s, c)
        }),
    )?;
    algebra_action(&u, a)
}

/// `Pos(π)·A`; the positive equation for `π` holds iff this is zero.
pub fn positive_equation_residual(pi: &SetPartition, a: &Tensor) -> Result<Tensor> {
    if pi.ground_size() != a.order() {
        return Err(Error::DegreeMismatch {
            expected: a.order(),
            found: pi.ground_size(),
        });
    }
    algebra_action(&pos_element(pi)?, a)
}

/// Set partitions whose shape is critical for `λ` but whose positive
/// equation fails on `A`. Empty means every equation holds.
pub fn positive_equation_failures(lambda: &Partition, a: &Tensor) -> Result<Vec<SetPartition>> {
    if lambda.weight() != a.order() {
        return Err(Error::DegreeMismatch {
            expected: a.order(),
            found: lambda.weight(),
        });
    }
    let critical = critical_set(lambda)?;
    if critical.is_empty() {
        return Ok(Vec::new());
    }
    let mut failures = Vec::new();
    for pi in all_set_partitions(a.order())? {
        if critical.contains(&pi.shape()) && !positive_equation_residual(&pi, a)?.is_zero() {
            failures.push(pi);
        }
    }
    Ok(failures)
}

/// Checks `Pos(π)·A = 0` for every `π` with critical shape.
pub fn theorem_t2_check(lambda: &Partition, a: &Tensor) -> Result<bool> {
    Ok(positive_equation_failures(lambda, a)?.is_empty())
}

/// The `(μ₁+1)×(μ₁+1)` all-ones matrix with zero diagonal.
pub fn lemma1_matrix(mu1: usize) -> Result<Matrix> {
    if mu1 == 0 {
        return Err(Error::InvalidMatrix("mu1 must be positive".into()));
    }
    guard("lemma1 mu <= 64", mu1, MAX_LEMMA1_MU)?;
    let n = mu1 + 1;
    Ok(Matrix::from_fn(n, n, |i, j| {
        if i == j {
            rational::zero()
        } else {
            rational::one()
        }
    }))
}

/// Determinant of [`lemma1_matrix`] by elimination.
pub fn lemma1_det(mu1: usize) -> Result<Rational> {
    lemma1_matrix(mu1)?.determinant()
}

/// `(-1)^μ₁ · μ₁`.
pub fn lemma1_det_closed_form(mu1: usize) -> Rational {
    let sign = if mu1.is_multiple_of(2) { 1 } else { -1 };
    rational::int(sign * mu1 as i64)
}

/// `M + I` has rank one and the all-ones vector is a `μ₁`-eigenvector,
/// so the spectrum is `-1` (μ₁ times) and `μ₁`.
pub fn lemma1_eigencheck(mu1: usize) -> Result<bool> {
    guard("lemma1 eigencheck mu <= 16", mu1, MAX_EIGENCHECK_MU)?;
    let m = lemma1_matrix(mu1)?;
    let n = m.rows();
    let shifted = m.add(&Matrix::identity(n))?;
    let ones = vec![rational::one(); n];
    let image = m.mul_vec(&ones)?;
    let eigen = image.iter().all(|v| *v == rational::int(mu1 as i64));
    Ok(shifted.rank() == 1 && eigen && m.trace() == rational::zero())
}

/// `A(y,x,…,x), A(x,y,x,…,x), …, A(x,…,x,y)`.
pub fn lemma1_slot_values(a: &Tensor, x: &Vector, y: &Vector) -> Result<Vec<Rational>> {
    let p = a.order();
    (0..p)
        .map(|k| {
            let mut args = vec![x.clone(); p];
            args[k] = y.clone();
            evaluate(a, &args)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

/// One nonzero value where the degeneracy argument requires zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// Seed of the tensor or vector pair that exposed the value.
    pub seed: u64,
    /// Which check: `"t2"`, `"slot_value"` or `"diagonal_slice"`.
    pub check: String,
    /// 1-based slot; for `"t2"` this is zero.
    pub slot: usize,
    #[serde(with = "crate::rational::as_string")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyReport {
    pub lambda: Partition,
    pub n: usize,
    pub trials: usize,
    pub witnesses_found: usize,
    pub verdict: Verdict,
    pub failures: Vec<Failure>,
}

pub(crate) fn check_suite_size(p: usize, n: usize, trials: usize) -> Result<()> {
    guard("suite order p <= 5", p, MAX_SUITE_ORDER)?;
    guard("suite dimension n <= 3", n, MAX_SUITE_DIM)?;
    if p == 0 || n == 0 {
        return Err(Error::InvalidTensor("p and n must be positive".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidTensor("trials must be at least 1".into()));
    }
    Ok(())
}

/// Seed of the tensor used in trial `trial` for shape number `case`.
pub fn tensor_seed(seed: u64, case: usize, trial: usize) -> u64 {
    derive_seed(seed, &[0, case as u64, trial as u64])
}

/// Seed of the `(x, y)` pair used in trial `trial` for shape number `case`.
pub fn vector_seed(seed: u64, case: usize, trial: usize) -> u64 {
    derive_seed(seed, &[1, case as u64, trial as u64])
}

/// Non-exceptional shapes of weight `p` whose component is nonzero at `n`,
/// each paired with its index in [`all_partitions`] order.
pub fn main_theorem_shapes(p: usize, n: usize) -> Result<Vec<(usize, IsotypicProjector)>> {
    let mut out = Vec::new();
    for (case, lambda) in all_partitions(p)?.into_iter().enumerate() {
        if is_exceptional(&lambda) {
            continue;
        }
        let projector = IsotypicProjector::new(&lambda)?;
        if projector.rank(n)? > 0 {
            out.push((case, projector));
        }
    }
    Ok(out)
}

/// For every non-exceptional `λ` with a nonzero component in dimension `n`,
/// projects `trials` random tensors onto `λ` and checks the positive
/// equations, the diagonal kernel witness and all `p` slot values.
pub fn main_theorem_suite(
    p: usize,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<DegeneracyReport>> {
    check_suite_size(p, n, trials)?;
    main_theorem_shapes(p, n)?
        .into_iter()
        .map(|(case, projector)| main_theorem_case(case, &projector, n, trials, seed))
        .collect()
}

fn main_theorem_case(
    case: usize,
    projector: &IsotypicProjector,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<DegeneracyReport> {
    let lambda = projector.lambda().clone();
    let p = lambda.weight();
    let mut failures = Vec::new();
    let mut witnesses_found = 0;
    for trial in 0..trials {
        let t_seed = tensor_seed(seed, case, trial);
        let a = projector.apply(&random_tensor(p, n, t_seed)?)?;
        if !theorem_t2_check(&lambda, &a)? {
            failures.push(Failure {
                seed: t_seed,
                check: "t2".into(),
                slot: 0,
                value: rational::one(),
            });
        }

        let v_seed = vector_seed(seed, case, trial);
        let mut rng = SplitMix64::new(v_seed);
        let x = Vector::random(n, &mut rng);
        let y = Vector::random(n, &mut rng);
        match first_nonzero_slice(&a, &KernelWitness::diagonal(&x, p)?)? {
            None => witnesses_found += 1,
            Some((slot, _, value)) => failures.push(Failure {
                seed: v_seed,
                check: "diagonal_slice".into(),
                slot,
                value,
            }),
        }
        for (k, value) in lemma1_slot_values(&a, &x, &y)?.into_iter().enumerate() {
            if value != rational::zero() {
                failures.push(Failure {
                    seed: v_seed,
                    check: "slot_value".into(),
                    slot: k + 1,
                    value,
                });
            }
        }
    }
    Ok(DegeneracyReport {
        lambda,
        n,
        trials,
        witnesses_found,
        verdict: Verdict::from_ok(failures.is_empty()),
        failures,
    })
}
