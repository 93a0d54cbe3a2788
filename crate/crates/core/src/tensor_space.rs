//! Dense order-`p` tensors over an `n`-dimensional space with exact entries.
//!
//! Entries are stored in lexicographic index order, first index slowest.
//! `Σ_p` acts by `(σ·A)[i₁…i_p] = A[i_{σ(1)}…i_{σ(p)}]`, which is a left
//! action under the composition convention of [`crate::perm_algebra`].

use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{guard, Error, Result};
use crate::linalg::Matrix;
use crate::partitions::{all_partitions, Partition};
use crate::perm_algebra::{central_symmetrizer, AlgebraElement, Permutation, MAX_CENTRAL_DEGREE};
use crate::rational::{self, Rational};
use crate::rng::SplitMix64;

/// Upper bound on `n^p` for any tensor this crate builds.
pub const MAX_TENSOR_ENTRIES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(components: Vec<Rational>) -> Self {
        Self(components)
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| rational::int(x)).collect())
    }

    /// Standard basis vector `e_k`, with `k` 0-based.
    pub fn basis(n: usize, k: usize) -> Self {
        let mut v = vec![Rational::zero(); n];
        v[k] = Rational::one();
        Self(v)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![Rational::zero(); n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Rational) -> Vector {
        Vector(self.0.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        check_dim(self.dim(), other.dim())?;
        Ok(Vector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn dot(&self, other: &Vector) -> Result<Rational> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum())
    }

    /// Random nonzero vector with entries in `[-9, 9]`.
    pub fn random(n: usize, rng: &mut SplitMix64) -> Vector {
        loop {
            let v = Vector((0..n).map(|_| rational::int(rng.small_int())).collect());
            if !v.is_zero() {
                return v;
            }
        }
    }
}

/// A linear functional on the space, e.g. a slice of a tensor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Covector(Vec<Rational>);

impl Covector {
    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// First nonzero component as `(0-based index, value)`.
    pub fn first_nonzero(&self) -> Option<(usize, &Rational)> {
        self.0.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    pub fn pair(&self, x: &Vector) -> Result<Rational> {
        check_dim(self.0.len(), x.dim())?;
        Ok(self.0.iter().zip(x.components()).map(|(a, b)| a * b).sum())
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

fn check_order(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DegreeMismatch { expected, found })
    }
}

fn entry_count(order: usize, dim: usize) -> Result<usize> {
    if order == 0 || dim == 0 {
        return Err(Error::InvalidTensor(
            "order and dimension must be positive".into(),
        ));
    }
    let mut count: usize = 1;
    for _ in 0..order {
        count = count.saturating_mul(dim);
    }
    guard("tensor entries n^p <= 4096", count, MAX_TENSOR_ENTRIES)?;
    Ok(count)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TensorWire", into = "TensorWire")]
pub struct Tensor {
    order: usize,
    dim: usize,
    entries: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct TensorWire {
    order: usize,
    dim: usize,
    #[serde(with = "crate::rational::vec_as_string")]
    entries: Vec<Rational>,
}

impl TryFrom<TensorWire> for Tensor {
    type Error = Error;
    fn try_from(w: TensorWire) -> Result<Self> {
        Tensor::from_entries(w.order, w.dim, w.entries)
    }
}

impl From<Tensor> for TensorWire {
    fn from(t: Tensor) -> Self {
        TensorWire {
            order: t.order,
            dim: t.dim,
            entries: t.entries,
        }
    }
}

impl Tensor {
    pub fn zeros(order: usize, dim: usize) -> Result<Self> {
        let count = entry_count(order, dim)?;
        Ok(Self {
            order,
            dim,
            entries: vec![Rational::zero(); count],
        })
    }

    pub fn from_entries(order: usize, dim: usize, entries: Vec<Rational>) -> Result<Self> {
        let count = entry_count(order, dim)?;
        if entries.len() != count {
            return Err(Error::InvalidTensor(format!(
                "expected {count} entries for order {order}, dim {dim}; got {}",
                entries.len()
            )));
        }
        Ok(Self {
            order,
            dim,
            entries,
        })
    }

    pub fn from_ints(order: usize, dim: usize, entries: &[i64]) -> Result<Self> {
        Self::from_entries(
            order,
            dim,
            entries.iter().map(|&v| rational::int(v)).collect(),
        )
    }

    /// Builds entries from their 0-based multi-index.
    pub fn from_fn(
        order: usize,
        dim: usize,
        mut f: impl FnMut(&[usize]) -> Rational,
    ) -> Result<Self> {
        let count = entry_count(order, dim)?;
        let mut idx = vec![0; order];
        let entries = (0..count)
            .map(|flat| {
                decode_into(flat, dim, &mut idx);
                f(&idx)
            })
            .collect();
        Ok(Self {
            order,
            dim,
            entries,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Entry at a 0-based multi-index.
    pub fn get(&self, index: &[usize]) -> &Rational {
        &self.entries[encode(index, self.dim)]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Rational) -> Tensor {
        Tensor {
            entries: self.entries.iter().map(|e| e * k).collect(),
            ..self.clone()
        }
    }

    fn same_format(&self, other: &Tensor) -> Result<()> {
        check_order(self.order, other.order)?;
        check_dim(self.dim, other.dim)
    }

    fn zip_with(
        &self,
        other: &Tensor,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<Tensor> {
        self.same_format(other)?;
        Ok(Tensor {
            order: self.order,
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tensors always serialize")
    }

    pub fn from_json(json: &str) -> Result<Tensor> {
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Add for &Tensor {
    type Output = Result<Tensor>;
    fn add(self, rhs: &Tensor) -> Result<Tensor> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Tensor {
    type Output = Result<Tensor>;
    fn sub(self, rhs: &Tensor) -> Result<Tensor> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

fn decode_into(mut flat: usize, dim: usize, idx: &mut [usize]) {
    for slot in idx.iter_mut().rev() {
        *slot = flat % dim;
        flat /= dim;
    }
}

fn encode(idx: &[usize], dim: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * dim + i)
}

/// `x¹ ⊗ … ⊗ x^p`.
pub fn rank_one(factors: &[Vector]) -> Result<Tensor> {
    let first = factors
        .first()
        .ok_or_else(|| Error::InvalidTensor("rank-one tensor needs at least one factor".into()))?;
    let n = first.dim();
    for f in factors {
        check_dim(n, f.dim())?;
    }
    Tensor::from_fn(factors.len(), n, |idx| {
        idx.iter()
            .zip(factors)
            .map(|(&i, x)| x.components()[i].clone())
            .product()
    })
}

/// Flat source index for every target entry of `σ·A`.
fn action_table(sigma: &Permutation, order: usize, dim: usize) -> Vec<usize> {
    let count = dim.pow(order as u32);
    let mut idx = vec![0; order];
    let mut src = vec![0; order];
    (0..count)
        .map(|flat| {
            decode_into(flat, dim, &mut idx);
            for (k, s) in src.iter_mut().enumerate() {
                *s = idx[sigma.apply(k)];
            }
            encode(&src, dim)
        })
        .collect()
}

/// `σ·A`, permuting tensor factors.
pub fn permute_action(sigma: &Permutation, a: &Tensor) -> Result<Tensor> {
    check_order(a.order, sigma.degree())?;
    let table = action_table(sigma, a.order, a.dim);
    Ok(Tensor {
        order: a.order,
        dim: a.dim,
        entries: table.into_iter().map(|s| a.entries[s].clone()).collect(),
    })
}

/// Linear extension of [`permute_action`] to the group algebra.
pub fn algebra_action(u: &AlgebraElement, a: &Tensor) -> Result<Tensor> {
    check_order(a.order, u.degree())?;
    let mut out = vec![Rational::zero(); a.entries.len()];
    for (sigma, coeff) in u.terms() {
        let table = action_table(sigma, a.order, a.dim);
        for (target, src) in out.iter_mut().zip(table) {
            if !a.entries[src].is_zero() {
                *target += coeff * &a.entries[src];
            }
        }
    }
    Ok(Tensor {
        order: a.order,
        dim: a.dim,
        entries: out,
    })
}

/// Contracts the last slot of a flat order-`k` array against `x`.
fn contract_last(entries: &[Rational], dim: usize, x: &Vector) -> Vec<Rational> {
    entries
        .chunks(dim)
        .map(|chunk| chunk.iter().zip(x.components()).map(|(a, b)| a * b).sum())
        .collect()
}

/// `A(x¹,…,x^p) = Σ A[i₁…i_p] x¹[i₁]⋯x^p[i_p]`.
pub fn evaluate(a: &Tensor, xs: &[Vector]) -> Result<Rational> {
    check_order(a.order, xs.len())?;
    for x in xs {
        check_dim(a.dim, x.dim())?;
    }
    let mut acc = a.entries.clone();
    for x in xs.iter().rev() {
        acc = contract_last(&acc, a.dim, x);
    }
    Ok(acc.pop().expect("full contraction leaves one scalar"))
}

/// `A(x¹,…,V,…,x^p)` with the free slot at 1-based `slot`; `others` fills
/// the remaining slots in order.
pub fn slice(a: &Tensor, slot: usize, others: &[Vector]) -> Result<Covector> {
    if slot == 0 || slot > a.order {
        return Err(Error::InvalidSlot {
            slot,
            order: a.order,
        });
    }
    check_order(a.order - 1, others.len())?;
    for x in others {
        check_dim(a.dim, x.dim())?;
    }
    let free = slot - 1;
    let n = a.dim;
    // Contract slots after the free one from the back, then those before it
    // from the front by regrouping as (prefix, rest).
    let mut acc = a.entries.clone();
    for x in others[free..].iter().rev() {
        acc = contract_last(&acc, n, x);
    }
    for x in &others[..free] {
        let stride = acc.len() / n;
        acc = (0..stride)
            .map(|j| {
                (0..n)
                    .map(|i| &acc[i * stride + j] * &x.components()[i])
                    .sum()
            })
            .collect();
    }
    Ok(Covector(acc))
}

/// The central idempotent for `λ`, ready to apply to tensors.
#[derive(Debug, Clone)]
pub struct IsotypicProjector {
    lambda: Partition,
    element: AlgebraElement,
}

impl IsotypicProjector {
    pub fn new(lambda: &Partition) -> Result<Self> {
        let (element, _) = central_symmetrizer(lambda)?;
        Ok(Self {
            lambda: lambda.clone(),
            element,
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn element(&self) -> &AlgebraElement {
        &self.element
    }

    pub fn apply(&self, a: &Tensor) -> Result<Tensor> {
        algebra_action(&self.element, a)
    }

    /// Rank of `A ↦ P_λ·A` on the `n^p`-dimensional tensor space.
    ///
    /// The action only permutes index positions, so the map preserves the
    /// multiset of indices, and two multisets with the same multiplicity
    /// profile give the same block up to relabelling. Each distinct profile
    /// block is eliminated once and weighted by how many multisets share it.
    pub fn rank(&self, n: usize) -> Result<usize> {
        let p = self.lambda.weight();
        entry_count(p, n)?;
        let mut profiles: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for counts in compositions(p, n) {
            let mut profile: Vec<usize> = counts.into_iter().filter(|&c| c > 0).collect();
            profile.sort_unstable_by(|a, b| b.cmp(a));
            *profiles.entry(profile).or_insert(0) += 1;
        }
        let mut total = 0;
        for (profile, multiplicity) in profiles {
            total += multiplicity * self.block_rank(&profile);
        }
        Ok(total)
    }

    /// Rank on the span of words whose letter `k` occurs `profile[k]` times.
    fn block_rank(&self, profile: &[usize]) -> usize {
        let letters: Vec<usize> = profile
            .iter()
            .enumerate()
            .flat_map(|(k, &m)| std::iter::repeat_n(k, m))
            .collect();
        let words = distinct_arrangements(&letters);
        let position: BTreeMap<&[usize], usize> = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.as_slice(), i))
            .collect();
        let mut m = Matrix::zeros(words.len(), words.len());
        let mut permuted = vec![0; letters.len()];
        for (row, w) in words.iter().enumerate() {
            for (sigma, coeff) in self.element.terms() {
                for (k, slot) in permuted.iter_mut().enumerate() {
                    *slot = w[sigma.apply(k)];
                }
                let col = position[permuted.as_slice()];
                m[(row, col)] += coeff;
            }
        }
        m.rank()
    }
}

/// All `counts` of length `n` summing to `p`.
fn compositions(p: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![p]];
    }
    (0..=p)
        .flat_map(|first| {
            compositions(p - first, n - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Distinct orderings of a sorted multiset, lexicographic.
fn distinct_arrangements(sorted: &[usize]) -> Vec<Vec<usize>> {
    let mut current = sorted.to_vec();
    let mut out = vec![current.clone()];
    // Standard next-permutation step.
    loop {
        let Some(i) = (1..current.len())
            .rev()
            .find(|&i| current[i - 1] < current[i])
        else {
            return out;
        };
        let j = (i..current.len())
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// The `λ`-isotypic component of `A`.
pub fn project_isotypic(lambda: &Partition, a: &Tensor) -> Result<Tensor> {
    check_order(a.order, lambda.weight())?;
    guard(
        "isotypic projection degree <= 6",
        a.order,
        MAX_CENTRAL_DEGREE,
    )?;
    IsotypicProjector::new(lambda)?.apply(a)
}

pub fn projector_rank(lambda: &Partition, n: usize) -> Result<usize> {
    guard(
        "isotypic projection degree <= 6",
        lambda.weight(),
        MAX_CENTRAL_DEGREE,
    )?;
    IsotypicProjector::new(lambda)?.rank(n)
}

/// Deterministic tensor with integer entries in `[-9, 9]`, drawn in
/// lexicographic index order from [`SplitMix64`] seeded with `seed`.
pub fn random_tensor(p: usize, n: usize, seed: u64) -> Result<Tensor> {
    let count = entry_count(p, n)?;
    let mut rng = SplitMix64::new(seed);
    Ok(Tensor {
        order: p,
        dim: n,
        entries: (0..count).map(|_| rational::int(rng.small_int())).collect(),
    })
}

/// Shapes of weight `p` whose isotypic component is nonzero in dimension `n`.
pub fn shapes_fitting(p: usize, n: usize) -> Result<Vec<Partition>> {
    Ok(all_partitions(p)?
        .into_iter()
        .filter(|l| l.len() <= n)
        .collect())
}
