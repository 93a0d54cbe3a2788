//! Young diagrams, set partitions of `{1,…,p}`, dominance order and
//! critical sets.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{guard, Error, Result};
use crate::perm_algebra::Permutation;

/// Largest weight accepted by the enumeration routines.
pub const MAX_PARTITION_WEIGHT: usize = 12;
/// Largest weight for tableau and set-partition enumeration.
pub const MAX_EXHAUSTIVE_WEIGHT: usize = 8;

/// An integer partition (Young diagram): positive, weakly decreasing parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self { parts })
    }

    /// The one-row diagram `(p)`.
    pub fn row(p: usize) -> Result<Self> {
        Self::new(vec![p])
    }

    /// The one-column diagram `(1,…,1)`.
    pub fn column(p: usize) -> Result<Self> {
        Self::new(vec![1; p])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    pub fn dominated_by(&self, other: &Partition) -> bool {
        dominance_leq(self, other)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses `"3,1"`; surrounding parentheses or brackets are tolerated.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Every partition of `p`, in reverse-lexicographic order.
pub fn all_partitions(p: usize) -> Result<Vec<Partition>> {
    if p == 0 {
        return Err(Error::InvalidPartition("weight must be positive".into()));
    }
    guard("partition weight <= 12", p, MAX_PARTITION_WEIGHT)?;
    fn extend(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=remaining.min(max)).rev() {
            prefix.push(first);
            extend(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(p, p, &mut Vec::new(), &mut out);
    Ok(out)
}

pub fn conjugate(lambda: &Partition) -> Partition {
    let parts = (1..=lambda.part(0))
        .map(|i| lambda.parts.iter().filter(|&&l| l >= i).count())
        .collect();
    Partition { parts }
}

/// Dominance order with trailing-zero padding. Partitions of different
/// weight are incomparable (the result is `false`).
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> bool {
    if lambda.weight() != mu.weight() {
        return false;
    }
    let len = lambda.len().max(mu.len());
    let (mut sl, mut sm) = (0, 0);
    for i in 0..len {
        sl += lambda.part(i);
        sm += mu.part(i);
        if sl > sm {
            return false;
        }
    }
    true
}

/// `true` iff `lambda` is `(p)` or `(p-1,1)`.
pub fn is_exceptional(lambda: &Partition) -> bool {
    lambda.part(1) <= 1 && lambda.part(2) == 0
}

/// Dominance-minimal partitions outside the down-set of `lambda`, listed in
/// reverse-lexicographic order.
pub fn critical_set(lambda: &Partition) -> Result<Vec<Partition>> {
    let all = all_partitions(lambda.weight())?;
    let complement: Vec<&Partition> = all.iter().filter(|mu| !dominance_leq(mu, lambda)).collect();
    Ok(complement
        .iter()
        .filter(|mu| {
            !complement
                .iter()
                .any(|nu| nu != *mu && dominance_leq(nu, mu))
        })
        .map(|mu| (*mu).clone())
        .collect())
}

/// Number of standard Young tableaux of shape `lambda`, by enumerating every
/// filling that places `1..=p` in turn on an addable corner.
pub fn syt_count(lambda: &Partition) -> Result<u64> {
    guard(
        "tableau weight <= 8",
        lambda.weight(),
        MAX_EXHAUSTIVE_WEIGHT,
    )?;
    fn fill(target: &[usize], rows: &mut Vec<usize>) -> u64 {
        if rows.iter().zip(target).all(|(r, t)| r == t) {
            return 1;
        }
        let mut total = 0;
        for i in 0..target.len() {
            let fits_row = rows[i] < target[i];
            let fits_above = i == 0 || rows[i - 1] > rows[i];
            if fits_row && fits_above {
                rows[i] += 1;
                total += fill(target, rows);
                rows[i] -= 1;
            }
        }
        total
    }
    Ok(fill(lambda.parts(), &mut vec![0; lambda.len()]))
}

/// A partition of `{1,…,p}` into nonempty blocks, kept in canonical form:
/// blocks sorted internally and ordered by their least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates that the blocks cover `{1,…,p}` exactly once.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.iter().any(Vec::is_empty) {
            return Err(Error::InvalidSetPartition("empty block".into()));
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        let p: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; p];
        for &e in blocks.iter().flatten() {
            if e == 0 || e > p {
                return Err(Error::InvalidSetPartition(format!(
                    "element {e} outside ground set 1..={p}"
                )));
            }
            if std::mem::replace(&mut seen[e - 1], true) {
                return Err(Error::InvalidSetPartition(format!("element {e} repeated")));
            }
        }
        Ok(Self { blocks })
    }

    /// Every element in its own block.
    pub fn discrete(p: usize) -> Self {
        Self {
            blocks: (1..=p).map(|i| vec![i]).collect(),
        }
    }

    /// A single block holding everything.
    pub fn full(p: usize) -> Self {
        Self {
            blocks: vec![(1..=p).collect()],
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        shape_of(self)
    }

    /// 0-based block index of each 1-based element.
    fn block_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.ground_size()];
        for (k, b) in self.blocks.iter().enumerate() {
            for &e in b {
                labels[e - 1] = k;
            }
        }
        labels
    }
}

impl TryFrom<Vec<Vec<usize>>> for SetPartition {
    type Error = Error;
    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(blocks)
    }
}

impl From<SetPartition> for Vec<Vec<usize>> {
    fn from(p: SetPartition) -> Self {
        p.blocks
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(ToString::to_string).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        write!(f, "{{{}}}", blocks.join(","))
    }
}

pub fn shape_of(pi: &SetPartition) -> Partition {
    let mut parts: Vec<usize> = pi.blocks.iter().map(Vec::len).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition { parts }
}

/// Orbits of `sigma` as a set partition; fixed points become singletons.
pub fn cycle_partition(sigma: &Permutation) -> SetPartition {
    let blocks = sigma
        .cycles()
        .into_iter()
        .map(|c| c.into_iter().map(|i| i + 1).collect())
        .collect();
    SetPartition::new(blocks).expect("cycles of a permutation partition its domain")
}

/// `true` iff every block of `finer` lies inside some block of `coarser`.
pub fn refines(finer: &SetPartition, coarser: &SetPartition) -> Result<bool> {
    if finer.ground_size() != coarser.ground_size() {
        return Err(Error::DegreeMismatch {
            expected: coarser.ground_size(),
            found: finer.ground_size(),
        });
    }
    let labels = coarser.block_labels();
    Ok(finer
        .blocks
        .iter()
        .all(|b| b.iter().all(|&e| labels[e - 1] == labels[b[0] - 1])))
}

/// All set partitions of `{1,…,p}` via restricted growth strings.
pub fn all_set_partitions(p: usize) -> Result<Vec<SetPartition>> {
    guard("set partition ground size <= 8", p, MAX_EXHAUSTIVE_WEIGHT)?;
    fn grow(i: usize, p: usize, rgs: &mut Vec<usize>, max: usize, out: &mut Vec<SetPartition>) {
        if i == p {
            let mut blocks = vec![Vec::new(); max];
            for (e, &b) in rgs.iter().enumerate() {
                blocks[b].push(e + 1);
            }
            out.push(SetPartition { blocks });
            return;
        }
        for b in 0..=max {
            rgs.push(b);
            grow(i + 1, p, rgs, max.max(b + 1), out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    if p == 0 {
        return Ok(out);
    }
    grow(0, p, &mut Vec::with_capacity(p), 0, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sp(blocks: &[&[usize]]) -> SetPartition {
        SetPartition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    /// Every weakly decreasing sequence of positive integers below `p`,
    /// filtered by sum; independent of the recursive generator.
    fn brute_partitions(p: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![Vec::<usize>::new()];
        while let Some(seq) = stack.pop() {
            let s: usize = seq.iter().sum();
            if s == p {
                out.push(seq);
                continue;
            }
            for next in 1..=p - s {
                if seq.last().is_none_or(|&l| next <= l) {
                    let mut ext = seq.clone();
                    ext.push(next);
                    stack.push(ext);
                }
            }
        }
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    #[test]
    fn all_partitions_small() {
        assert_eq!(all_partitions(1).unwrap(), vec![lam(&[1])]);
        let four: Vec<Vec<usize>> = all_partitions(4)
            .unwrap()
            .into_iter()
            .map(Into::into)
            .collect();
        assert_eq!(
            four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(all_partitions(5).unwrap().len(), 7);
    }

    #[test]
    fn all_partitions_matches_brute_force() {
        for p in 1..=10 {
            let got: Vec<Vec<usize>> = all_partitions(p)
                .unwrap()
                .into_iter()
                .map(Into::into)
                .collect();
            assert_eq!(got, brute_partitions(p), "p = {p}");
        }
    }

    #[test]
    fn all_partitions_guard() {
        assert!(matches!(all_partitions(13), Err(Error::SizeGuard { .. })));
        assert!(all_partitions(0).is_err());
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_err());
        assert_eq!("3,1".parse::<Partition>().unwrap(), lam(&[3, 1]));
        assert_eq!("(2,2)".parse::<Partition>().unwrap(), lam(&[2, 2]));
        assert!("3,,1".parse::<Partition>().is_err());
        assert!("1,3".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&lam(&[4])), lam(&[1, 1, 1, 1]));
        assert_eq!(conjugate(&lam(&[3, 1])), lam(&[2, 1, 1]));
        assert_eq!(conjugate(&lam(&[2, 2])), lam(&[2, 2]));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&lam(&[1, 1, 1]), &lam(&[2, 1])));
        assert!(dominance_leq(&lam(&[2, 1]), &lam(&[3])));
        assert!(dominance_leq(&lam(&[2, 2]), &lam(&[3, 1])));
        assert!(!dominance_leq(&lam(&[3, 1]), &lam(&[2, 2])));
        assert!(!dominance_leq(&lam(&[2, 1]), &lam(&[2, 2])));
    }

    #[test]
    fn shapes_and_cycles() {
        assert_eq!(shape_of(&sp(&[&[1], &[2], &[3]])), lam(&[1, 1, 1]));
        assert_eq!(shape_of(&sp(&[&[1, 3], &[2]])), lam(&[2, 1]));
        assert_eq!(shape_of(&sp(&[&[1, 2, 3, 4]])), lam(&[4]));

        let id = Permutation::identity(3);
        assert_eq!(cycle_partition(&id), SetPartition::discrete(3));
        let t = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        assert_eq!(cycle_partition(&t), sp(&[&[1, 2], &[3]]));
        let c = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(cycle_partition(&c), SetPartition::full(3));
    }

    #[test]
    fn set_partition_canonical_form() {
        let a = sp(&[&[3], &[2, 1]]);
        assert_eq!(a.blocks(), &[vec![1, 2], vec![3]]);
        assert!(SetPartition::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(SetPartition::new(vec![vec![1], vec![3]]).is_err());
        assert!(SetPartition::new(vec![vec![1], vec![]]).is_err());
        assert_eq!(a.to_string(), "{{1,2},{3}}");
    }

    #[test]
    fn refinement_examples() {
        let discrete = SetPartition::discrete(3);
        for pi in all_set_partitions(3).unwrap() {
            assert!(refines(&discrete, &pi).unwrap());
        }
        assert!(refines(&sp(&[&[1, 2], &[3]]), &SetPartition::full(3)).unwrap());
        assert!(!refines(&sp(&[&[1, 2], &[3]]), &sp(&[&[1, 3], &[2]])).unwrap());
        assert!(refines(&SetPartition::discrete(3), &SetPartition::discrete(4)).is_err());
    }

    #[test]
    fn bell_numbers() {
        let bell = [1usize, 2, 5, 15, 52, 203, 877, 4140];
        for (p, &b) in (1..=8).zip(&bell) {
            let all = all_set_partitions(p).unwrap();
            assert_eq!(all.len(), b);
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), b);
        }
    }

    #[test]
    fn critical_set_examples() {
        for p in 2..=8 {
            assert_eq!(critical_set(&lam(&[p - 1, 1])).unwrap(), vec![lam(&[p])]);
            assert!(critical_set(&lam(&[p])).unwrap().is_empty());
        }
        // Down-set of (2,2,1) in weight 5 is {(2,2,1),(2,1,1,1),(1^5)}; of the
        // rest {(5),(4,1),(3,2),(3,1,1)} only (3,1,1) is minimal.
        assert_eq!(
            critical_set(&lam(&[2, 2, 1])).unwrap(),
            vec![lam(&[3, 1, 1])]
        );
        assert_eq!(critical_set(&lam(&[1, 1, 1])).unwrap(), vec![lam(&[2, 1])]);
    }

    #[test]
    fn syt_examples() {
        assert_eq!(syt_count(&lam(&[5])).unwrap(), 1);
        assert_eq!(syt_count(&lam(&[1, 1, 1, 1])).unwrap(), 1);
        assert_eq!(syt_count(&lam(&[2, 1])).unwrap(), 2);
        assert_eq!(syt_count(&lam(&[2, 2])).unwrap(), 2);
        assert_eq!(syt_count(&lam(&[3, 2])).unwrap(), 5);
        assert!(syt_count(&lam(&[9])).is_err());
    }

    #[test]
    fn exceptional_shapes() {
        assert!(is_exceptional(&lam(&[4])));
        assert!(is_exceptional(&lam(&[3, 1])));
        assert!(!is_exceptional(&lam(&[2, 2])));
        assert!(!is_exceptional(&lam(&[2, 1, 1])));
        assert!(is_exceptional(&lam(&[1, 1])));
    }

    #[test]
    fn json_shapes() {
        assert_eq!(serde_json::to_string(&lam(&[3, 1])).unwrap(), "[3,1]");
        assert_eq!(
            serde_json::to_string(&sp(&[&[1, 2], &[3]])).unwrap(),
            "[[1,2],[3]]"
        );
        let back: SetPartition = serde_json::from_str("[[3],[1,2]]").unwrap();
        assert_eq!(back, sp(&[&[1, 2], &[3]]));
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
