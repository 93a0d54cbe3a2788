//! Permutations of `{1,…,p}` and the rational group algebra `QΣ_p`.
//!
//! Composition is fixed as `(σ∘τ)(i) = σ(τ(i))`: the right factor acts
//! first. Every product of algebra elements and the tensor action in
//! [`crate::tensor_space`] follow from this one convention.
//!
//! Young symmetrizers use the row-major filling of the diagram: boxes are
//! numbered `1..=p` left to right, top to bottom.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{guard, Error, Result};
use crate::partitions::{conjugate, syt_count, Partition, SetPartition, MAX_EXHAUSTIVE_WEIGHT};
use crate::rational::{self, Rational};

/// Largest degree for which the central symmetrizer is formed.
pub const MAX_CENTRAL_DEGREE: usize = 6;

/// A bijection of `{0,…,p-1}` stored in one-line notation. Public
/// constructors that take 1-based data say so in their name.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From 0-based images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
        }
        Ok(Self { images })
    }

    /// From 1-based images, e.g. `[2,3,1]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let shifted = images
            .iter()
            .map(|&i| {
                i.checked_sub(1)
                    .ok_or_else(|| Error::InvalidPermutation("images are 1-based".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(shifted)
    }

    /// Product of disjoint 1-based cycles; `(a b c)` sends a→b→c→a.
    pub fn from_cycles(p: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..p).collect();
        let mut touched = vec![false; p];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > p || b == 0 || b > p {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle entry outside 1..={p}"
                    )));
                }
                if std::mem::replace(&mut touched[a - 1], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "{a} appears twice in cycles"
                    )));
                }
                images[a - 1] = b - 1;
            }
        }
        Self::new(images)
    }

    pub fn identity(p: usize) -> Self {
        Self {
            images: (0..p).collect(),
        }
    }

    /// Swaps the 1-based points `a` and `b`.
    pub fn transposition(p: usize, a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidPermutation(
                "transposition needs two points".into(),
            ));
        }
        Self::from_cycles(p, &[&[a, b]])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`, i.e. `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_degree(self.degree(), other.degree())?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Orbits as 0-based cycles, each starting at its least point, ordered
    /// by that point. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.images[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.images[next];
            }
            out.push(cycle);
        }
        out
    }

    /// `(-1)^(p - #cycles)`.
    pub fn sign(&self) -> i32 {
        if (self.degree() - self.cycles().len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            let pts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_based(&raw).map_err(serde::de::Error::custom)
    }
}

fn check_degree(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DegreeMismatch { expected, found })
    }
}

/// All of `Σ_p` in lexicographic order of one-line notation.
pub fn all_permutations(p: usize) -> Result<Vec<Permutation>> {
    guard("symmetric group degree <= 8", p, MAX_EXHAUSTIVE_WEIGHT)?;
    Ok(permutations_of(&(0..p).collect::<Vec<_>>())
        .into_iter()
        .map(|images| Permutation { images })
        .collect())
}

/// Every ordering of `items`, lexicographic when `items` is sorted.
fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (k, &head) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// The subgroup of `Σ_p` permuting each block (0-based points) within itself.
fn block_stabilizer(p: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut group = vec![Permutation::identity(p)];
    for block in blocks.iter().filter(|b| b.len() > 1) {
        let arrangements = permutations_of(block);
        let mut next = Vec::with_capacity(group.len() * arrangements.len());
        for g in &group {
            for arr in &arrangements {
                let mut images = g.images.clone();
                for (&from, &to) in block.iter().zip(arr) {
                    images[from] = to;
                }
                next.push(Permutation { images });
            }
        }
        group = next;
    }
    group.sort();
    group
}

/// Boxes of each row under the row-major filling, 0-based.
pub fn row_blocks(lambda: &Partition) -> Vec<Vec<usize>> {
    let mut start = 0;
    lambda
        .parts()
        .iter()
        .map(|&len| {
            let row = (start..start + len).collect();
            start += len;
            row
        })
        .collect()
}

/// Boxes of each column under the row-major filling, 0-based.
pub fn column_blocks(lambda: &Partition) -> Vec<Vec<usize>> {
    let rows = row_blocks(lambda);
    (0..lambda.part(0))
        .map(|j| rows.iter().filter_map(|r| r.get(j).copied()).collect())
        .collect()
}

/// `P_λ`: permutations preserving every row of the filled diagram.
pub fn row_group(lambda: &Partition) -> Result<Vec<Permutation>> {
    let p = lambda.weight();
    guard("symmetric group degree <= 8", p, MAX_EXHAUSTIVE_WEIGHT)?;
    Ok(block_stabilizer(p, &row_blocks(lambda)))
}

/// `Q_λ`: permutations preserving every column of the filled diagram.
pub fn column_group(lambda: &Partition) -> Result<Vec<Permutation>> {
    let p = lambda.weight();
    guard("symmetric group degree <= 8", p, MAX_EXHAUSTIVE_WEIGHT)?;
    Ok(block_stabilizer(p, &column_blocks(lambda)))
}

/// A finite rational combination of permutations of a fixed degree.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl AlgebraElement {
    pub fn zero(p: usize) -> Self {
        Self {
            degree: p,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `e`.
    pub fn unit(p: usize) -> Self {
        Self::basis(Permutation::identity(p))
    }

    /// `e_σ`.
    pub fn basis(sigma: Permutation) -> Self {
        let degree = sigma.degree();
        Self {
            degree,
            terms: BTreeMap::from([(sigma, Rational::one())]),
        }
    }

    /// Sums repeated permutations and drops zero coefficients.
    pub fn from_terms(
        p: usize,
        terms: impl IntoIterator<Item = (Permutation, Rational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(p);
        for (sigma, c) in terms {
            check_degree(p, sigma.degree())?;
            out.add_term(sigma, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, sigma: Permutation, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(sigma) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `Σ_{σ∈group} e_σ`, or the signed sum when `signed`.
    fn group_sum(p: usize, group: Vec<Permutation>, signed: bool) -> Self {
        let terms = group
            .into_iter()
            .map(|g| {
                let c = if signed {
                    rational::int(g.sign().into())
                } else {
                    Rational::one()
                };
                (g, c)
            })
            .collect();
        Self { degree: p, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, sigma: &Permutation) -> Rational {
        self.terms
            .get(sigma)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    /// Number of permutations with nonzero coefficient.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        check_degree(self.degree, other.degree)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> AlgebraElement {
        if k.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            terms: self.terms.iter().map(|(s, c)| (s.clone(), c * k)).collect(),
        }
    }

    /// Bilinear extension of composition: `e_σ · e_τ = e_{σ∘τ}`.
    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        check_degree(self.degree, other.degree)?;
        let mut acc: HashMap<Permutation, Rational> = HashMap::new();
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                *acc.entry(s.compose_unchecked(t))
                    .or_insert_with(Rational::zero) += a * b;
            }
        }
        Ok(Self {
            degree: self.degree,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// `e_g · self · e_{g⁻¹}`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<AlgebraElement> {
        check_degree(self.degree, g.degree())?;
        let g_inv = g.inverse();
        Ok(Self {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (g.compose_unchecked(&s.compose_unchecked(&g_inv)), c.clone()))
                .collect(),
        })
    }

    /// Parses the `[{"perm": [...], "coeff": "a/b"}, ...]` wire form. The
    /// degree is explicit so that the empty list (zero) is unambiguous.
    pub fn from_json(json: &str, p: usize) -> Result<Self> {
        let wire: Vec<TermWire> =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_terms(p, wire.into_iter().map(|t| (t.perm, t.coeff)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("algebra elements always serialize")
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    perm: Permutation,
    #[serde(with = "crate::rational::as_string")]
    coeff: Rational,
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (perm, coeff) in &self.terms {
            seq.serialize_element(&TermWire {
                perm: perm.clone(),
                coeff: coeff.clone(),
            })?;
        }
        seq.end()
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (s, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·e{}", rational::format(c), s)?;
        }
        Ok(())
    }
}

/// `a_λ = Σ_{σ∈P_λ} e_σ`.
pub fn a_element(lambda: &Partition) -> Result<AlgebraElement> {
    Ok(AlgebraElement::group_sum(
        lambda.weight(),
        row_group(lambda)?,
        false,
    ))
}

/// `b_λ = Σ_{σ∈Q_λ} sign(σ) e_σ`.
pub fn b_element(lambda: &Partition) -> Result<AlgebraElement> {
    Ok(AlgebraElement::group_sum(
        lambda.weight(),
        column_group(lambda)?,
        true,
    ))
}

/// `c_λ = a_λ · b_λ`.
pub fn young_symmetrizer(lambda: &Partition) -> Result<AlgebraElement> {
    a_element(lambda)?.multiply(&b_element(lambda)?)
}

/// Sum of `e_σ` over every σ whose cycles each sit inside a block of `pi`.
/// That set is the Young subgroup of the blocks.
pub fn pos_element(pi: &SetPartition) -> Result<AlgebraElement> {
    let p = pi.ground_size();
    guard("symmetric group degree <= 8", p, MAX_EXHAUSTIVE_WEIGHT)?;
    let blocks: Vec<Vec<usize>> = pi
        .blocks()
        .iter()
        .map(|b| b.iter().map(|e| e - 1).collect())
        .collect();
    Ok(AlgebraElement::group_sum(
        p,
        block_stabilizer(p, &blocks),
        false,
    ))
}

/// Central idempotent for the λ-isotypic block.
///
/// Forms `z = Σ_g g·c_λ·g⁻¹`, reads off `s` from `z·z = s·z` and returns
/// `(z/s, s)`.
pub fn central_symmetrizer(lambda: &Partition) -> Result<(AlgebraElement, Rational)> {
    let p = lambda.weight();
    guard("central symmetrizer degree <= 6", p, MAX_CENTRAL_DEGREE)?;
    let c = young_symmetrizer(lambda)?;
    let mut z = AlgebraElement::zero(p);
    for g in all_permutations(p)? {
        for (s, coeff) in c.conjugate_by(&g)?.terms {
            z.add_term(s, coeff);
        }
    }
    let (probe, z_probe) = z
        .terms
        .iter()
        .next()
        .ok_or_else(|| Error::Inconsistent(format!("central sum for {lambda} vanished")))?;
    let z2 = z.multiply(&z)?;
    let s = z2.coefficient(probe) / z_probe;
    if s.is_zero() || z2 != z.scale(&s) {
        return Err(Error::Inconsistent(format!(
            "central sum for {lambda} is not proportional to an idempotent"
        )));
    }
    Ok((z.scale(&s.recip()), s))
}

/// `p! / f^λ`, the scalar with `c_λ² = k·c_λ`.
pub fn symmetrizer_scalar(lambda: &Partition) -> Result<Rational> {
    let factorial: u64 = (1..=lambda.weight() as u64).product();
    Ok(rational::frac(factorial as i64, syt_count(lambda)? as i64))
}

/// Column lengths of the diagram (the conjugate partition).
pub fn column_lengths(lambda: &Partition) -> Vec<usize> {
    conjugate(lambda).parts().to_vec()
}
