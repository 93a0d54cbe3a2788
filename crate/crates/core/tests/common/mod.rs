//! Independent oracles shared by the integration tests. None of these call
//! into the code path they are used to check.
#![allow(dead_code)]

use hyperdet_schur::rational::{int, Rational};
use hyperdet_schur::{Partition, Tensor};

/// Semistandard tableaux of shape `lambda` with entries in `1..=n`, counted
/// by testing every one of the `n^p` fillings.
pub fn ssyt_count(lambda: &Partition, n: usize) -> usize {
    let parts = lambda.parts();
    let p = lambda.weight();
    let cell = |r: usize, c: usize| parts[..r].iter().sum::<usize>() + c;
    let mut count = 0;
    let mut filling = vec![0usize; p];
    loop {
        let rows_ok = (0..parts.len())
            .all(|r| (1..parts[r]).all(|c| filling[cell(r, c - 1)] <= filling[cell(r, c)]));
        let cols_ok = (1..parts.len())
            .all(|r| (0..parts[r]).all(|c| filling[cell(r - 1, c)] < filling[cell(r, c)]));
        if rows_ok && cols_ok {
            count += 1;
        }
        // Odometer increment over {0..n-1}^p.
        let mut k = 0;
        loop {
            if k == p {
                return count;
            }
            filling[k] += 1;
            if filling[k] < n {
                break;
            }
            filling[k] = 0;
            k += 1;
        }
    }
}

/// Cayley's expanded 2×2×2 hyperdeterminant.
pub fn cayley_expanded(t: &Tensor) -> Rational {
    let a = |i: usize, j: usize, k: usize| t.get(&[i, j, k]).clone();
    let sq = |x: Rational| &x * &x;
    let (a000, a001, a010, a011) = (a(0, 0, 0), a(0, 0, 1), a(0, 1, 0), a(0, 1, 1));
    let (a100, a101, a110, a111) = (a(1, 0, 0), a(1, 0, 1), a(1, 1, 0), a(1, 1, 1));
    let squares = sq(&a000 * &a111) + sq(&a001 * &a110) + sq(&a010 * &a101) + sq(&a100 * &a011);
    let pairs = &a000 * &a001 * &a110 * &a111
        + &a000 * &a010 * &a101 * &a111
        + &a000 * &a100 * &a011 * &a111
        + &a001 * &a010 * &a101 * &a110
        + &a001 * &a100 * &a011 * &a110
        + &a010 * &a100 * &a011 * &a101;
    let quads = &a000 * &a011 * &a101 * &a110 + &a001 * &a010 * &a100 * &a111;
    squares - int(2) * pairs + int(4) * quads
}

/// The displayed chain of diagrams of weight `p`:
/// `(1^p) ≤ (2,1^{p-2}) ≤ (2,2,1^{p-4}) ≤ … ≤ (p-2,2) ≤ (p-1,1) ≤ (p)`,
/// taking the explicitly written members (deduplicated, in order).
pub fn displayed_chain(p: usize) -> Vec<Partition> {
    let mut chain: Vec<Vec<usize>> = vec![vec![1; p]];
    if p >= 2 {
        let mut v = vec![2];
        v.extend(vec![1; p - 2]);
        chain.push(v);
    }
    if p >= 4 {
        let mut v = vec![2, 2];
        v.extend(vec![1; p - 4]);
        chain.push(v);
        chain.push(vec![p - 2, 2]);
    }
    if p >= 2 {
        chain.push(vec![p - 1, 1]);
    }
    chain.push(vec![p]);
    chain.dedup();
    chain
        .into_iter()
        .map(|v| Partition::new(v).unwrap())
        .collect()
}
