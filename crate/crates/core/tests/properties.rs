mod common;

use hyperdet_schur::partitions::all_set_partitions;
use hyperdet_schur::perm_algebra::{all_permutations, symmetrizer_scalar};
use hyperdet_schur::rational::{frac, int};
use hyperdet_schur::*;
use proptest::prelude::*;

#[test]
fn conjugation_is_an_involution() {
    for p in 1..=8 {
        for l in all_partitions(p).unwrap() {
            assert_eq!(conjugate(&conjugate(&l)), l);
            assert_eq!(conjugate(&l).weight(), p);
        }
    }
}

#[test]
fn dominance_is_a_partial_order_reversed_by_conjugation() {
    for p in 1..=8 {
        let all = all_partitions(p).unwrap();
        for a in &all {
            assert!(dominance_leq(a, a));
            for b in &all {
                let ab = dominance_leq(a, b);
                if ab && dominance_leq(b, a) {
                    assert_eq!(a, b);
                }
                assert_eq!(
                    ab,
                    dominance_leq(&conjugate(b), &conjugate(a)),
                    "{a} vs {b}"
                );
                for c in &all {
                    if ab && dominance_leq(b, c) {
                        assert!(dominance_leq(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn critical_sets_are_antichains_outside_the_down_set() {
    for p in 1..=8 {
        for l in all_partitions(p).unwrap() {
            let crit = critical_set(&l).unwrap();
            for a in &crit {
                assert!(!dominance_leq(a, &l));
                for b in &crit {
                    if a != b {
                        assert!(!dominance_leq(a, b));
                    }
                }
            }
        }
    }
}

#[test]
fn critical_shapes_have_two_rows() {
    for p in 3..=8 {
        for l in all_partitions(p)
            .unwrap()
            .into_iter()
            .filter(|l| !is_exceptional(l))
        {
            assert!(
                critical_set(&l).unwrap().iter().all(|m| m.len() >= 2),
                "λ = {l}"
            );
        }
    }
}

#[test]
fn squared_tableau_counts_sum_to_group_order() {
    for p in 1..=6 {
        let total: u64 = all_partitions(p)
            .unwrap()
            .iter()
            .map(|l| syt_count(l).unwrap().pow(2))
            .sum();
        assert_eq!(total, (1..=p as u64).product::<u64>());
    }
}

#[test]
fn symmetrizer_square_scalar_is_group_order_over_tableaux() {
    for p in 1..=5 {
        for l in all_partitions(p).unwrap() {
            let c = young_symmetrizer(&l).unwrap();
            assert_eq!(
                c.multiply(&c).unwrap(),
                c.scale(&symmetrizer_scalar(&l).unwrap())
            );
        }
    }
}

#[test]
fn projector_rank_factors_through_tableau_counts() {
    for p in 1..=4 {
        for n in 1..=3 {
            for l in all_partitions(p).unwrap() {
                let expected = syt_count(&l).unwrap() as usize * common::ssyt_count(&l, n);
                assert_eq!(projector_rank(&l, n).unwrap(), expected, "λ = {l}, n = {n}");
            }
        }
    }
}

#[test]
fn set_partition_shapes_cover_all_partitions() {
    for p in 1..=6 {
        let mut shapes: Vec<Partition> = all_set_partitions(p)
            .unwrap()
            .iter()
            .map(shape_of)
            .collect();
        shapes.sort();
        shapes.dedup();
        assert_eq!(shapes.len(), all_partitions(p).unwrap().len());
    }
}

fn sparse_element(p: usize) -> impl Strategy<Value = AlgebraElement> {
    let group = all_permutations(p).unwrap();
    let size = group.len();
    prop::collection::vec((0..size, -5i64..=5, 1i64..=3), 1..6).prop_map(move |terms| {
        AlgebraElement::from_terms(
            p,
            terms
                .into_iter()
                .map(|(i, a, b)| (group[i].clone(), frac(a, b))),
        )
        .unwrap()
    })
}

fn small_tensor(p: usize, n: usize) -> impl Strategy<Value = Tensor> {
    prop::collection::vec(-9i64..=9, n.pow(p as u32))
        .prop_map(move |v| Tensor::from_ints(p, n, &v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn multiplication_is_associative(u in sparse_element(4), v in sparse_element(4), w in sparse_element(4)) {
        let left = u.multiply(&v).unwrap().multiply(&w).unwrap();
        let right = u.multiply(&v.multiply(&w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes(u in sparse_element(3), v in sparse_element(3), w in sparse_element(3)) {
        let left = u.multiply(&v.add(&w).unwrap()).unwrap();
        let right = u.multiply(&v).unwrap().add(&u.multiply(&w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn algebra_action_respects_products(u in sparse_element(3), v in sparse_element(3), a in small_tensor(3, 2)) {
        let lhs = algebra_action(&u.multiply(&v).unwrap(), &a).unwrap();
        let rhs = algebra_action(&u, &algebra_action(&v, &a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn schlafli_matches_cayley(a in small_tensor(3, 2)) {
        prop_assert_eq!(hyperdet_222(&a).unwrap(), common::cayley_expanded(&a));
    }

    #[test]
    fn hyperdet_is_slot_symmetric(a in small_tensor(3, 2)) {
        let det = hyperdet_222(&a).unwrap();
        for s in all_permutations(3).unwrap() {
            prop_assert_eq!(hyperdet_222(&permute_action(&s, &a).unwrap()).unwrap(), det.clone());
        }
    }

    #[test]
    fn tensor_json_round_trips(a in small_tensor(2, 3), k in 1i64..7) {
        let t = a.scale(&frac(1, k));
        prop_assert_eq!(Tensor::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn algebra_json_round_trips(u in sparse_element(3)) {
        prop_assert_eq!(AlgebraElement::from_json(&u.to_json(), 3).unwrap(), u);
    }

    #[test]
    fn sign_is_a_homomorphism(i in 0usize..120, j in 0usize..120) {
        let all = all_permutations(5).unwrap();
        let (s, t) = (&all[i], &all[j]);
        prop_assert_eq!(s.compose(t).unwrap().sign(), s.sign() * t.sign());
    }

    #[test]
    fn rank_one_is_degenerate_with_orthogonal_witness(v in prop::collection::vec(-9i64..=9, 6)) {
        let f: Vec<Vector> = v.chunks(2).map(Vector::from_ints).collect();
        prop_assume!(f.iter().all(|x| !x.is_zero()));
        let a = rank_one(&f).unwrap();
        prop_assert_eq!(hyperdet_222(&a).unwrap(), int(0));
        let perp = |x: &Vector| Vector::new(vec![-x.components()[1].clone(), x.components()[0].clone()]);
        let w = KernelWitness::new(vec![perp(&f[0]), perp(&f[1]), f[2].clone()]).unwrap();
        prop_assert!(is_in_kernel(&a, &w).unwrap());
    }
}
