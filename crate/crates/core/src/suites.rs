//! Seeded verification suites behind the command-line `verify` and `report`
//! commands. Every suite is deterministic given its configuration.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::degeneracy::{
    check_suite_size, lemma1_det, lemma1_det_closed_form, lemma1_eigencheck, main_theorem_suite,
    positive_equation_failures, tensor_seed, DegeneracyReport, KernelWitness, Verdict,
    MAX_EIGENCHECK_MU, MAX_LEMMA1_MU,
};
use crate::error::{guard, Error, Result};
use crate::hyperdet::{degeneracy_crosscheck_222, hyperdet_222, pfaffian, Consistency};
use crate::linalg::Matrix;
use crate::partitions::{all_partitions, critical_set, is_exceptional, Partition, SetPartition};
use crate::perm_algebra::Permutation;
use crate::rational::{self, Rational};
use crate::rng::{derive_seed, SplitMix64};
use crate::tensor_space::{
    permute_action, random_tensor, rank_one, IsotypicProjector, Tensor, Vector,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub p: usize,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub max_mu: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            p: 3,
            n: 3,
            trials: 5,
            seed: 0,
            max_mu: 10,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        check_suite_size(self.p, self.n, self.trials)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct T2Failure {
    pub seed: u64,
    pub partition: SetPartition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct T2Case {
    pub lambda: Partition,
    pub n: usize,
    pub trials: usize,
    pub component_rank: usize,
    pub critical_set: Vec<Partition>,
    pub verdict: Verdict,
    pub failures: Vec<T2Failure>,
}

/// Positive equations on projected random tensors, one case per shape.
pub fn t2_suite(config: &SuiteConfig) -> Result<Vec<T2Case>> {
    config.validate()?;
    let (p, n) = (config.p, config.n);
    let mut cases = Vec::new();
    for (case, lambda) in all_partitions(p)?.into_iter().enumerate() {
        let projector = IsotypicProjector::new(&lambda)?;
        let mut failures = Vec::new();
        for trial in 0..config.trials {
            let seed = tensor_seed(config.seed, case, trial);
            let a = projector.apply(&random_tensor(p, n, seed)?)?;
            for partition in positive_equation_failures(&lambda, &a)? {
                failures.push(T2Failure { seed, partition });
            }
        }
        cases.push(T2Case {
            critical_set: critical_set(&lambda)?,
            component_rank: projector.rank(n)?,
            lambda,
            n,
            trials: config.trials,
            verdict: Verdict::from_ok(failures.is_empty()),
            failures,
        });
    }
    Ok(cases)
}

pub fn main_suite(config: &SuiteConfig) -> Result<Vec<DegeneracyReport>> {
    config.validate()?;
    main_theorem_suite(config.p, config.n, config.trials, config.seed)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Case {
    pub mu: usize,
    #[serde(with = "crate::rational::as_string")]
    pub det: Rational,
    #[serde(with = "crate::rational::as_string")]
    pub closed_form: Rational,
    /// `None` above the eigencheck size guard.
    pub eigencheck: Option<bool>,
    pub verdict: Verdict,
}

pub fn lemma1_suite(max_mu: usize) -> Result<Vec<Lemma1Case>> {
    if max_mu == 0 {
        return Err(Error::InvalidMatrix("max-mu must be at least 1".into()));
    }
    guard("lemma1 mu <= 64", max_mu, MAX_LEMMA1_MU)?;
    (1..=max_mu)
        .map(|mu| {
            let det = lemma1_det(mu)?;
            let closed_form = lemma1_det_closed_form(mu);
            let eigencheck = if mu <= MAX_EIGENCHECK_MU {
                Some(lemma1_eigencheck(mu)?)
            } else {
                None
            };
            let ok = det == closed_form && eigencheck != Some(false);
            Ok(Lemma1Case {
                mu,
                det,
                closed_form,
                eigencheck,
                verdict: Verdict::from_ok(ok),
            })
        })
        .collect()
}

/// Random skew-symmetric integer matrix with upper entries in `[-9, 9]`.
pub fn random_skew(size: usize, seed: u64) -> Matrix {
    let mut rng = SplitMix64::new(seed);
    let mut m = Matrix::zeros(size, size);
    for i in 0..size {
        for j in i + 1..size {
            let v = rational::int(rng.small_int());
            m[(j, i)] = -v.clone();
            m[(i, j)] = v;
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PfaffianCase {
    pub size: usize,
    pub trials: usize,
    pub verdict: Verdict,
    /// Seeds whose matrix violated `pf² = det`.
    pub failures: Vec<u64>,
}

pub const PFAFFIAN_SIZES: [usize; 3] = [2, 4, 6];

/// `pf(m)² = det(m)` on `trials` random skew matrices of each size.
pub fn pfaffian_suite(trials: usize, seed: u64) -> Result<Vec<PfaffianCase>> {
    if trials == 0 {
        return Err(Error::InvalidMatrix("trials must be at least 1".into()));
    }
    PFAFFIAN_SIZES
        .iter()
        .map(|&size| {
            let mut failures = Vec::new();
            for trial in 0..trials {
                let s = derive_seed(seed, &[2, size as u64, trial as u64]);
                let m = random_skew(size, s);
                let pf = pfaffian(&m)?;
                if &pf * &pf != m.determinant()? {
                    failures.push(s);
                }
            }
            Ok(PfaffianCase {
                size,
                trials,
                verdict: Verdict::from_ok(failures.is_empty()),
                failures,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedCheck {
    pub name: String,
    pub cases: usize,
    pub verdict: Verdict,
    /// Seeds of the failing cases.
    pub failures: Vec<u64>,
}

impl NamedCheck {
    fn from_results(name: &str, results: Vec<(u64, bool)>) -> Self {
        let cases = results.len();
        let failures: Vec<u64> = results
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(s, _)| s)
            .collect();
        Self {
            name: name.into(),
            cases,
            verdict: Verdict::from_ok(failures.is_empty()),
            failures,
        }
    }
}

/// `e₁⊗e₁⊗e₁ + e₂⊗e₂⊗e₂`.
pub fn diagonal_222() -> Tensor {
    Tensor::from_fn(3, 2, |i| {
        rational::int((i[0] == i[1] && i[1] == i[2]) as i64)
    })
    .expect("2x2x2 fits")
}

/// `e₁⊗e₁⊗e₂ + e₁⊗e₂⊗e₁ + e₂⊗e₁⊗e₁`.
pub fn w_tensor_222() -> Tensor {
    Tensor::from_fn(3, 2, |i| {
        rational::int((i.iter().sum::<usize>() == 1) as i64)
    })
    .expect("2x2x2 fits")
}

/// Applies the 2×2 matrix `g` to slot `slot` (0-based) of a 2×2×2 tensor.
pub fn act_on_slot(g: &[[i64; 2]; 2], slot: usize, a: &Tensor) -> Result<Tensor> {
    Tensor::from_fn(a.order(), a.dim(), |idx| {
        let mut src = idx.to_vec();
        (0..2)
            .map(|k| {
                src[slot] = k;
                rational::int(g[idx[slot]][k]) * a.get(&src)
            })
            .sum()
    })
}

/// Random integer matrix of determinant one: a product of elementary shears.
pub fn random_unimodular(rng: &mut SplitMix64) -> [[i64; 2]; 2] {
    let mut g = [[1i64, 0], [0, 1]];
    for step in 0..3 {
        let k = rng.int_in(-3, 3);
        let shear = if step % 2 == 0 {
            [[1, k], [0, 1]]
        } else {
            [[1, 0], [k, 1]]
        };
        g = [
            [
                g[0][0] * shear[0][0] + g[0][1] * shear[1][0],
                g[0][0] * shear[0][1] + g[0][1] * shear[1][1],
            ],
            [
                g[1][0] * shear[0][0] + g[1][1] * shear[1][0],
                g[1][0] * shear[0][1] + g[1][1] * shear[1][1],
            ],
        ];
    }
    g
}

/// Hyperdeterminant checks for format 2×2×2.
pub fn hyperdet222_suite(trials: usize, seed: u64) -> Result<Vec<NamedCheck>> {
    if trials == 0 {
        return Err(Error::InvalidTensor("trials must be at least 1".into()));
    }
    let stream = |k: u64, t: usize| derive_seed(seed, &[3, k, t as u64]);
    let mut checks = vec![
        NamedCheck::from_results(
            "diagonal_is_one",
            vec![(0, hyperdet_222(&diagonal_222())? == rational::one())],
        ),
        NamedCheck::from_results(
            "w_tensor_is_zero",
            vec![(0, hyperdet_222(&w_tensor_222())? == rational::zero())],
        ),
    ];

    let mut rank_one_results = Vec::new();
    let mut witness_results = Vec::new();
    for t in 0..trials {
        let s = stream(0, t);
        let mut rng = SplitMix64::new(s);
        let factors: Vec<Vector> = (0..3).map(|_| Vector::random(2, &mut rng)).collect();
        let a = rank_one(&factors)?;
        rank_one_results.push((s, hyperdet_222(&a)? == rational::zero()));
        // x ⊥ a, y ⊥ b, any z is a kernel witness of a⊗b⊗c.
        let perp = |v: &Vector| {
            let c = v.components();
            Vector::new(vec![-c[1].clone(), c[0].clone()])
        };
        let w = KernelWitness::new(vec![
            perp(&factors[0]),
            perp(&factors[1]),
            Vector::random(2, &mut rng),
        ])?;
        let out = degeneracy_crosscheck_222(&a, Some(&w))?;
        witness_results.push((
            s,
            out.verdict == Consistency::Consistent && out.witness_valid == Some(true),
        ));
    }
    checks.push(NamedCheck::from_results(
        "rank_one_is_zero",
        rank_one_results,
    ));
    checks.push(NamedCheck::from_results(
        "rank_one_witness_consistent",
        witness_results,
    ));

    let slot_perms: Vec<Permutation> = crate::perm_algebra::all_permutations(3)?;
    let mut perm_results = Vec::new();
    let mut homog_results = Vec::new();
    let mut sl2_results = Vec::new();
    let mut probe_results = Vec::new();
    for t in 0..trials {
        let s = stream(1, t);
        let a = random_tensor(3, 2, s)?;
        let det = hyperdet_222(&a)?;
        let mut ok = true;
        for sigma in &slot_perms {
            ok &= hyperdet_222(&permute_action(sigma, &a)?)? == det;
        }
        perm_results.push((s, ok));

        let mut rng = SplitMix64::new(stream(2, t));
        let scale = rational::frac(rng.int_in(-9, 9), rng.int_in(1, 9));
        let scaled = hyperdet_222(&a.scale(&scale))?;
        homog_results.push((s, scaled == &det * &scale * &scale * &scale * &scale));

        let g = random_unimodular(&mut rng);
        let slot = rng.index(3);
        sl2_results.push((s, hyperdet_222(&act_on_slot(&g, slot, &a)?)? == det));

        let out = degeneracy_crosscheck_222(&a, None)?;
        probe_results.push((s, out.verdict == Consistency::Consistent));
    }
    checks.push(NamedCheck::from_results(
        "slot_permutation_invariance",
        perm_results,
    ));
    checks.push(NamedCheck::from_results(
        "degree_four_homogeneity",
        homog_results,
    ));
    checks.push(NamedCheck::from_results(
        "unimodular_invariance",
        sl2_results,
    ));
    checks.push(NamedCheck::from_results(
        "probe_crosscheck_consistent",
        probe_results,
    ));
    Ok(checks)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub notes: Vec<String>,
    pub t2: Vec<T2Case>,
    pub main: Vec<DegeneracyReport>,
    pub lemma1: Vec<Lemma1Case>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pfaffian: Option<Vec<PfaffianCase>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyperdet222: Option<Vec<NamedCheck>>,
    pub verdict: Verdict,
    /// Wall-clock milliseconds per suite; outside the determinism contract.
    pub timings_ms: BTreeMap<String, u64>,
}

impl SuiteReport {
    /// The report without its timing field, which is the part that must be
    /// identical across runs with the same configuration.
    pub fn deterministic_part(&self) -> SuiteReport {
        SuiteReport {
            timings_ms: BTreeMap::new(),
            ..self.clone()
        }
    }
}

fn timed<T>(
    timings: &mut BTreeMap<String, u64>,
    name: &str,
    f: impl FnOnce() -> Result<T>,
) -> Result<T> {
    let start = Instant::now();
    let out = f()?;
    timings.insert(name.into(), start.elapsed().as_millis() as u64);
    Ok(out)
}

/// Every suite applicable at `(p, n)`: positive equations, the degeneracy
/// suite and the `J - I` determinant suite always; the Pfaffian suite at `p = 2`; the 2×2×2
/// hyperdeterminant suite at `p = 3, n = 2`.
pub fn full_report(config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate()?;
    let mut timings = BTreeMap::new();
    let mut notes = Vec::new();
    let shapes = all_partitions(config.p)?;
    if shapes.iter().all(is_exceptional) {
        let listed: Vec<String> = shapes.iter().map(ToString::to_string).collect();
        notes.push(format!(
            "only exceptional shapes exist at p = {}: {}",
            config.p,
            listed.join(", ")
        ));
    }
    let t2 = timed(&mut timings, "t2", || t2_suite(config))?;
    let main = timed(&mut timings, "main", || main_suite(config))?;
    let lemma1 = timed(&mut timings, "lemma1", || lemma1_suite(config.max_mu))?;
    let pfaffian = if config.p == 2 {
        Some(timed(&mut timings, "pfaffian", || {
            pfaffian_suite(config.trials, config.seed)
        })?)
    } else {
        None
    };
    let hyperdet222 = if config.p == 3 && config.n == 2 {
        Some(timed(&mut timings, "hyperdet222", || {
            hyperdet222_suite(config.trials, config.seed)
        })?)
    } else {
        None
    };
    if main.is_empty() && !shapes.iter().all(is_exceptional) {
        notes.push(format!(
            "no non-exceptional shape of weight {} has a nonzero component at n = {}",
            config.p, config.n
        ));
    }
    let ok = t2.iter().all(|c| c.verdict.passed())
        && main.iter().all(|r| r.verdict.passed())
        && lemma1.iter().all(|c| c.verdict.passed())
        && pfaffian.iter().flatten().all(|c| c.verdict.passed())
        && hyperdet222.iter().flatten().all(|c| c.verdict.passed());
    Ok(SuiteReport {
        config: config.clone(),
        notes,
        t2,
        main,
        lemma1,
        pfaffian,
        hyperdet222,
        verdict: Verdict::from_ok(ok),
        timings_ms: timings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(p: usize, n: usize) -> SuiteConfig {
        SuiteConfig {
            p,
            n,
            trials: 2,
            seed: 1,
            max_mu: 6,
        }
    }

    #[test]
    fn config_guards() {
        assert!(config(6, 3).validate().is_err());
        assert!(config(3, 4).validate().is_err());
        assert!(SuiteConfig {
            trials: 0,
            ..config(3, 3)
        }
        .validate()
        .is_err());
        assert!(config(5, 3).validate().is_ok());
    }

    #[test]
    fn unimodular_matrices_have_det_one() {
        let mut rng = SplitMix64::new(4);
        for _ in 0..50 {
            let g = random_unimodular(&mut rng);
            assert_eq!(g[0][0] * g[1][1] - g[0][1] * g[1][0], 1);
        }
    }

    #[test]
    fn suites_pass() {
        assert!(t2_suite(&config(3, 3))
            .unwrap()
            .iter()
            .all(|c| c.verdict.passed()));
        assert!(lemma1_suite(20).unwrap().iter().all(|c| c.verdict.passed()));
        assert_eq!(lemma1_suite(20).unwrap()[19].eigencheck, None);
        assert!(lemma1_suite(65).is_err());
        assert!(pfaffian_suite(3, 0)
            .unwrap()
            .iter()
            .all(|c| c.verdict.passed()));
        assert!(hyperdet222_suite(3, 0)
            .unwrap()
            .iter()
            .all(|c| c.verdict.passed()));
    }

    #[test]
    fn report_for_p2_notes_exceptional_shapes() {
        let r = full_report(&config(2, 2)).unwrap();
        assert!(r.main.is_empty());
        assert_eq!(r.notes.len(), 1);
        assert!(r.notes[0].contains("only exceptional"));
        assert!(r
            .pfaffian
            .as_ref()
            .unwrap()
            .iter()
            .all(|c| c.verdict.passed()));
        assert!(r.verdict.passed());
    }

    #[test]
    fn report_is_deterministic_and_round_trips() {
        let a = full_report(&config(3, 2)).unwrap();
        let b = full_report(&config(3, 2)).unwrap();
        assert_eq!(a.deterministic_part(), b.deterministic_part());
        assert!(a.hyperdet222.is_some());
        let json = serde_json::to_string_pretty(&a).unwrap();
        let back: SuiteReport = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), json);
    }
}
