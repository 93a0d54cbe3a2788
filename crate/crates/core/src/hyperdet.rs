//! Hyperdeterminants in the formats small enough to write down: the 2×2
//! determinant, the Pfaffian of a skew matrix, and the 2×2×2 hyperdeterminant
//! as the discriminant of the Schläfli pencil `det(A₀ + t·A₁)`.
//!
//! Normalisation: the diagonal tensor `e₁⊗e₁⊗e₁ + e₂⊗e₂⊗e₂` has
//! hyperdeterminant `+1`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::degeneracy::{is_in_kernel, KernelWitness};
use crate::error::{guard, Error, Result};
use crate::linalg::Matrix;
use crate::rational::{self, Rational};
use crate::tensor_space::{Tensor, Vector};

pub const MAX_PFAFFIAN_SIZE: usize = 8;

pub type Matrix2 = [[Rational; 2]; 2];

pub fn det2(m: &Matrix2) -> Rational {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

/// Pfaffian by expansion along the first row:
/// `pf(A) = Σ_{j≥2} (-1)^j a₁ⱼ pf(A without rows/cols 1, j)` (1-based `j`).
pub fn pfaffian(m: &Matrix) -> Result<Rational> {
    if !m.is_square() || !m.rows().is_multiple_of(2) {
        return Err(Error::InvalidMatrix(format!(
            "Pfaffian needs an even square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    guard("pfaffian size <= 8", m.rows(), MAX_PFAFFIAN_SIZE)?;
    if !m.is_skew_symmetric() {
        return Err(Error::InvalidMatrix("matrix is not skew-symmetric".into()));
    }
    let indices: Vec<usize> = (0..m.rows()).collect();
    Ok(pfaffian_on(m, &indices))
}

fn pfaffian_on(m: &Matrix, idx: &[usize]) -> Rational {
    if idx.is_empty() {
        return rational::one();
    }
    let first = idx[0];
    let mut total = Rational::zero();
    for k in 1..idx.len() {
        let entry = &m[(first, idx[k])];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&i| i != idx[k]).collect();
        let term = entry * pfaffian_on(m, &rest);
        // k = 1 is the 1-based column 2, which carries a plus sign.
        if k % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Reads an order-2 tensor as a square matrix (first index = row).
pub fn matrix_from_tensor(t: &Tensor) -> Result<Matrix> {
    if t.order() != 2 {
        return Err(Error::InvalidTensor(format!(
            "expected an order-2 tensor (matrix), got order {}",
            t.order()
        )));
    }
    let n = t.dim();
    Ok(Matrix::from_fn(n, n, |i, j| t.get(&[i, j]).clone()))
}

/// Coefficients of `det(A₀ + t·A₁) = b₀ + b₁t + b₂t²`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilQuadratic {
    #[serde(with = "crate::rational::as_string")]
    pub b0: Rational,
    #[serde(with = "crate::rational::as_string")]
    pub b1: Rational,
    #[serde(with = "crate::rational::as_string")]
    pub b2: Rational,
}

impl PencilQuadratic {
    pub fn discriminant(&self) -> Rational {
        &self.b1 * &self.b1 - rational::int(4) * &self.b0 * &self.b2
    }
}

fn check_222(a: &Tensor) -> Result<()> {
    if a.order() != 3 || a.dim() != 2 {
        return Err(Error::InvalidTensor(format!(
            "expected format 2x2x2, got order {} dim {}",
            a.order(),
            a.dim()
        )));
    }
    Ok(())
}

/// The two slices `A[0,·,·]` and `A[1,·,·]` along the first slot.
pub fn first_slot_slices(a: &Tensor) -> Result<(Matrix2, Matrix2)> {
    check_222(a)?;
    let s = |i: usize| -> Matrix2 {
        [
            [a.get(&[i, 0, 0]).clone(), a.get(&[i, 0, 1]).clone()],
            [a.get(&[i, 1, 0]).clone(), a.get(&[i, 1, 1]).clone()],
        ]
    };
    Ok((s(0), s(1)))
}

pub fn pencil_quadratic(a: &Tensor) -> Result<PencilQuadratic> {
    let (p, q) = first_slot_slices(a)?;
    let b1 = &p[0][0] * &q[1][1] + &q[0][0] * &p[1][1] - &p[0][1] * &q[1][0] - &q[0][1] * &p[1][0];
    Ok(PencilQuadratic {
        b0: det2(&p),
        b1,
        b2: det2(&q),
    })
}

/// The 2×2×2 hyperdeterminant.
pub fn hyperdet_222(a: &Tensor) -> Result<Rational> {
    Ok(pencil_quadratic(a)?.discriminant())
}

/// The fixed probe directions: primitive integer vectors with entries in
/// `{-2,…,2}`, one per line through the origin, with a positive leading
/// nonzero entry.
pub fn probe_vectors() -> Vec<Vector> {
    let mut out = Vec::new();
    for a in -2i64..=2 {
        for b in -2i64..=2 {
            let leading_positive = a > 0 || (a == 0 && b > 0);
            if leading_positive && num_integer::gcd(a, b) == 1 {
                out.push(Vector::from_ints(&[a, b]));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Consistency {
    Consistent,
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crosscheck {
    #[serde(with = "crate::rational::as_string")]
    pub det: Rational,
    /// Validity of the supplied witness, if any.
    pub witness_valid: Option<bool>,
    /// Probe triples (out of `probe_vectors().len()³`) lying in the kernel.
    pub probe_hits: usize,
    pub verdict: Consistency,
}

/// Checks `Det(A) = 0 ⟺ K(A) ≠ ∅` as far as finite evidence allows: a valid
/// witness forces `Det = 0`, and `Det ≠ 0` forces every probe to fail.
pub fn degeneracy_crosscheck_222(
    a: &Tensor,
    witness: Option<&KernelWitness>,
) -> Result<Crosscheck> {
    let det = hyperdet_222(a)?;
    let witness_valid = witness.map(|w| is_in_kernel(a, w)).transpose()?;
    let probes = probe_vectors();
    let mut probe_hits = 0;
    for x in &probes {
        for y in &probes {
            for z in &probes {
                let w = KernelWitness::new(vec![x.clone(), y.clone(), z.clone()])?;
                if is_in_kernel(a, &w)? {
                    probe_hits += 1;
                }
            }
        }
    }
    let consistent = if det.is_zero() {
        true
    } else {
        witness_valid != Some(true) && probe_hits == 0
    };
    Ok(Crosscheck {
        det,
        witness_valid,
        probe_hits,
        verdict: if consistent {
            Consistency::Consistent
        } else {
            Consistency::Inconsistent
        },
    })
}
