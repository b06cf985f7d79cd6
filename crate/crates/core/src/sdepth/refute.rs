//! Weight certificates that no partition of minimum label `k` exists.
//!
//! Give every deficient point an integer weight `y`. For a top `d` of label
//! `k` let `z(d)` be the largest total weight of `[c, d] \ {d}` over all
//! lower corners `c`, or zero if that is larger. Each top carries at most one
//! fiber and the fibers cover the deficient points exactly once, so any
//! partition forces `sum y <= sum z`. Weights with `sum y > sum z` therefore
//! refute `k`.
//!
//! Candidate weights come from the linear relaxation, solved in floating
//! point; they are rounded to integers and only accepted after the exact
//! check above.

use std::time::Duration;

use microlp::{ComparisonOp, OptimizationDirection, Problem};

use super::poset::CharacteristicPoset;

/// Largest set of fibers handed to the relaxation.
pub const RELAXATION_ROW_CAP: usize = 200_000;
const SCALES: [f64; 3] = [65_536.0, 16_777_216.0, 4_294_967_296.0];

/// Deficient points of a fiber, by index into `deficient`, and its top.
pub(crate) struct FiberRow<'a> {
    pub primary: &'a [u32],
    pub top: u32,
}

/// Solve the relaxation and return rounded weights per deficient point if
/// they pass the exact test on the given fibers.
pub(crate) fn find_weights(n_primary: usize, n_tops: usize, rows: &[FiberRow<'_>], time_limit: Duration) -> Option<Vec<i64>> {
    if rows.len() > RELAXATION_ROW_CAP || n_primary == 0 {
        return None;
    }
    let mut lp = Problem::new(OptimizationDirection::Maximize);
    lp.set_time_limit(time_limit);
    let y: Vec<_> = (0..n_primary).map(|_| lp.add_var(1.0, (-1.0, 1.0))).collect();
    let z: Vec<_> = (0..n_tops).map(|_| lp.add_var(-1.0, (0.0, f64::INFINITY))).collect();
    for r in rows {
        let mut terms: Vec<_> = r.primary.iter().map(|&p| (y[p as usize], 1.0)).collect();
        terms.push((z[r.top as usize], -1.0));
        lp.add_constraint(terms.as_slice(), ComparisonOp::Le, 0.0);
    }
    let solution = lp.solve().ok()?.into_solution().ok()?;
    if solution.objective() <= 1e-7 {
        return None;
    }
    let weights: Vec<f64> = y.iter().map(|&v| solution.var_value(v)).collect();
    SCALES.iter().find_map(|&s| {
        let w: Vec<i64> = weights.iter().map(|&v| (v * s).round() as i64).collect();
        rows_refute(&w, n_tops, rows).then_some(w)
    })
}

fn rows_refute(w: &[i64], n_tops: usize, rows: &[FiberRow<'_>]) -> bool {
    let mut z = vec![0i128; n_tops];
    for r in rows {
        let s: i128 = r.primary.iter().map(|&p| w[p as usize] as i128).sum();
        let t = &mut z[r.top as usize];
        *t = (*t).max(s);
    }
    let total: i128 = w.iter().map(|&v| v as i128).sum();
    total > z.iter().sum::<i128>()
}

/// Exact check of a weight refutation directly on the poset, independent of
/// how the search enumerated fibers. `weights` is indexed by point id;
/// entries at points of label `>= k` must be zero.
pub fn verify_weight_refutation(poset: &CharacteristicPoset, k: usize, weights: &[i64]) -> bool {
    let n = poset.n_vars();
    let g = poset.cap();
    if weights.len() != poset.len() || k > n {
        return false;
    }
    let mut total: i128 = 0;
    for (id, a) in poset.points().enumerate() {
        if poset.label(a) >= k {
            if weights[id] != 0 {
                return false;
            }
        } else {
            total += weights[id] as i128;
        }
    }
    let mut bound: i128 = 0;
    for a in poset.points() {
        if poset.label(a) != k {
            continue;
        }
        let zs: Vec<usize> = (0..n).filter(|&j| a[j] == g[j]).collect();
        // best[c] = weight of [c, d] \ {d}, accumulated as suffix sums over
        // the Z coordinates of the box below d.
        let dims: Vec<usize> = zs.iter().map(|&j| g[j] as usize + 1).collect();
        let size: usize = dims.iter().product();
        let mut acc = vec![0i128; size];
        let mut cur = a.to_vec();
        for (flat, slot) in acc.iter_mut().enumerate() {
            let mut rem = flat;
            for (i, &j) in zs.iter().enumerate().rev() {
                cur[j] = (rem % dims[i]) as u32;
                rem /= dims[i];
            }
            let id = poset.id_of(&cur).expect("below a poset point");
            if cur.as_slice() != a {
                *slot = weights[id] as i128;
            }
        }
        let mut stride = 1;
        for i in (0..zs.len()).rev() {
            for flat in (0..size).rev() {
                if (flat / stride) % dims[i] + 1 < dims[i] {
                    acc[flat] += acc[flat + stride];
                }
            }
            stride *= dims[i];
        }
        let last = size - 1;
        let best = acc.iter().enumerate().filter(|&(f, _)| f != last).map(|(_, &v)| v).max().unwrap_or(0);
        bound += best.max(0);
    }
    total > bound
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;
    use crate::sdepth::poset::build_poset;

    #[test]
    fn maximal_ideal_refuted_by_unit_weight() {
        // Only the origin, label 0; k = 1 has no tops at all.
        let p = build_poset(&MonomialIdeal::maximal(2), None, 10).unwrap();
        assert!(verify_weight_refutation(&p, 1, &[1]));
        assert!(!verify_weight_refutation(&p, 1, &[0]));
        assert!(!verify_weight_refutation(&p, 1, &[1, 2]));
    }

    #[test]
    fn feasible_instance_has_no_refutation() {
        // S/(x1x2) has sdepth 1: the points (0,0), (0,1), (1,0).
        let p = build_poset(&MonomialIdeal::parse("x1*x2", 2).unwrap(), None, 10).unwrap();
        for w in [[1, 0, 0], [5, 0, 0]] {
            assert!(!verify_weight_refutation(&p, 1, &w));
        }
    }

    #[test]
    fn nonzero_weight_on_a_top_is_rejected() {
        let p = build_poset(&MonomialIdeal::parse("x1*x2", 2).unwrap(), None, 10).unwrap();
        assert!(!verify_weight_refutation(&p, 1, &[1, 1, 0]));
    }
}
