//! Independent reference implementations for the integration tests.
//!
//! Nothing here calls the engines: membership is a divisibility scan,
//! ranks are dense Gaussian elimination over `BigRational`, and Stanley
//! depth is an exhaustive enumeration of interval partitions.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use pathideal_core::{Monomial, MonomialIdeal};
use proptest::prelude::*;

/// Some generator divides `a`.
pub fn member(gens: &[Vec<u32>], a: &[u32]) -> bool {
    gens.iter().any(|g| g.iter().zip(a).all(|(x, y)| x <= y))
}

pub fn raw(i: &MonomialIdeal) -> Vec<Vec<u32>> {
    i.gens().iter().map(|g| g.exps().to_vec()).collect()
}

/// Every exponent vector `a <= top`.
pub fn boxed(top: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &t in top {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=t).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

/// Minimal elements of a finite set of exponent vectors, by pairwise scan.
pub fn naive_minimal(mut v: Vec<Vec<u32>>) -> BTreeSet<Vec<u32>> {
    v.sort();
    v.dedup();
    v.iter()
        .filter(|a| !v.iter().any(|b| b != *a && b.iter().zip(a.iter()).all(|(x, y)| x <= y)))
        .cloned()
        .collect()
}

pub fn gen_set(i: &MonomialIdeal) -> BTreeSet<Vec<u32>> {
    raw(i).into_iter().collect()
}

pub fn zero_q() -> BigRational {
    BigRational::from_integer(BigInt::from(0))
}

/// Rank over `Q` by dense elimination with exact fractions.
pub fn dense_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let zero = zero_q();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != zero) else { continue };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && m[r][c] != zero {
                let f = &m[r][c] / &pivot;
                let pivot_row = m[rank].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row).skip(c) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced homology ranks `H̃_{-1}, H̃_0, ...` of the complex with the given
/// faces (bitmasks, closed under subsets).
pub fn naive_homology(faces: &[u64]) -> Vec<usize> {
    if faces.is_empty() {
        return vec![];
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap();
    let by_size: Vec<Vec<u64>> =
        (0..=top).map(|s| faces.iter().copied().filter(|f| f.count_ones() as usize == s).collect()).collect();
    let boundary = |s: usize| -> usize {
        if s == 0 || by_size[s].is_empty() || by_size[s - 1].is_empty() {
            return 0;
        }
        let lower = &by_size[s - 1];
        let m: Vec<Vec<BigRational>> = by_size[s]
            .iter()
            .map(|&f| {
                let mut row = vec![zero_q(); lower.len()];
                let mut sign = 1i64;
                for v in 0..64 {
                    if f >> v & 1 == 1 {
                        let j = lower.iter().position(|&g| g == f ^ (1 << v)).unwrap();
                        row[j] = BigRational::from_integer(BigInt::from(sign));
                        sign = -sign;
                    }
                }
                row
            })
            .collect();
        dense_rank(m)
    };
    let ranks: Vec<usize> = (0..=top + 1).map(|s| if s <= top { boundary(s) } else { 0 }).collect();
    (0..=top).map(|s| by_size[s].len() - ranks[s] - ranks[s + 1]).collect()
}

/// Points of the characteristic poset: `a <= g` with `x^a` outside the ideal.
pub fn naive_poset(gens: &[Vec<u32>], g: &[u32]) -> Vec<Vec<u32>> {
    boxed(g).into_iter().filter(|a| !member(gens, a)).collect()
}

/// Best minimum label over every interval partition of the poset.
///
/// The smallest uncovered point must be the lower end of its interval, so
/// branching on its upper end enumerates each partition exactly once.
pub fn brute_sdepth(gens: &[Vec<u32>], g: &[u32]) -> usize {
    let points = naive_poset(gens, g);
    let label = |b: &[u32]| b.iter().zip(g).filter(|(x, y)| x == y).count();
    let le = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
    fn go(
        points: &[Vec<u32>],
        covered: &mut Vec<bool>,
        label: &dyn Fn(&[u32]) -> usize,
        le: &dyn Fn(&[u32], &[u32]) -> bool,
    ) -> Option<usize> {
        let Some(p) = (0..points.len()).find(|&i| !covered[i]) else { return Some(usize::MAX) };
        let mut best: Option<usize> = None;
        for b in 0..points.len() {
            if covered[b] || !le(&points[p], &points[b]) {
                continue;
            }
            let members: Vec<usize> =
                (0..points.len()).filter(|&c| le(&points[p], &points[c]) && le(&points[c], &points[b])).collect();
            if members.iter().any(|&c| covered[c]) {
                continue;
            }
            for &c in &members {
                covered[c] = true;
            }
            if let Some(rest) = go(points, covered, label, le) {
                let v = rest.min(label(&points[b]));
                best = Some(best.map_or(v, |x| x.max(v)));
            }
            for &c in &members {
                covered[c] = false;
            }
        }
        best
    }
    // Points are in lex order, so the first uncovered one is minimal.
    let mut covered = vec![false; points.len()];
    go(&points, &mut covered, &label, &le).expect("singletons always partition")
}

/// Proper nonzero monomial ideals with `n <= n_max` and exponents `<= e_max`.
pub fn ideal_strategy(n_max: usize, e_max: u32, gens_max: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=n_max).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..=e_max, n), 1..=gens_max).prop_filter_map(
            "unit generator",
            move |gens| {
                let gens: Vec<Monomial> = gens.into_iter().filter(|g| g.iter().any(|&e| e > 0)).map(Monomial::new).collect();
                if gens.is_empty() {
                    return None;
                }
                MonomialIdeal::from_generators(n, gens).ok()
            },
        )
    })
}

pub fn monomial_strategy(n: usize, e_max: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=e_max, n).prop_map(Monomial::new)
}
