//! Path and cycle ideals, their numeric invariants and witness monomials.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// `(n, m, t)`: variables, path length and power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PathFamilyParams {
    pub n: u32,
    pub m: u32,
    pub t: u32,
}

impl PathFamilyParams {
    /// Parameters valid for the path family: `1 <= m <= n`, `t >= 1`.
    pub fn path(n: u32, m: u32, t: u32) -> Result<Self> {
        if m < 1 || m > n || t < 1 {
            return Err(Error::Parameter(format!("path ideal needs 1 <= m <= n and t >= 1, got n={n} m={m} t={t}")));
        }
        Ok(PathFamilyParams { n, m, t })
    }

    /// Parameters valid for the cycle family: `2 <= m < n`, `t >= 1`.
    pub fn cycle(n: u32, m: u32, t: u32) -> Result<Self> {
        if m < 2 || m >= n || t < 1 {
            return Err(Error::Parameter(format!("cycle ideal needs 2 <= m < n and t >= 1, got n={n} m={m} t={t}")));
        }
        Ok(PathFamilyParams { n, m, t })
    }
}

/// Constants attached to the cycle ideal `J_{n,m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CycleColonData {
    pub d: u32,
    pub t0: u32,
    pub alpha: u32,
    pub r: u32,
    pub s: u32,
}

/// `I_{n,m}`: products of `m` consecutive variables along the path on `n` vertices.
pub fn path_ideal(n: u32, m: u32) -> Result<MonomialIdeal> {
    PathFamilyParams::path(n, m, 1)?;
    let n = n as usize;
    let m = m as usize;
    let gens = (0..=n - m).map(|i| Monomial::squarefree(n, i..i + m));
    MonomialIdeal::from_generators(n, gens)
}

/// `J_{n,m}`: products of `m` cyclically consecutive variables on the `n`-cycle.
pub fn cycle_ideal(n: u32, m: u32) -> Result<MonomialIdeal> {
    PathFamilyParams::cycle(n, m, 1)?;
    let n = n as usize;
    let m = m as usize;
    let gens = (0..n).map(|i| Monomial::squarefree(n, (i..i + m).map(|j| j % n)));
    MonomialIdeal::from_generators(n, gens)
}

/// The closed-form depth of `S/I_{n,m}^t`:
/// `n-t+2 - floor((n-t+2)/(m+1)) - ceil((n-t+2)/(m+1))` while `t <= n+1-m`,
/// and `m-1` afterwards.
pub fn phi(n: u32, m: u32, t: u32) -> i64 {
    let (n, m, t) = (n as i64, m as i64, t as i64);
    if t <= n + 1 - m {
        let a = n - t + 2;
        let b = m + 1;
        a - a.div_euclid(b) - ceil_div(a, b)
    } else {
        m - 1
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

pub fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `d = gcd(n,m)` and the largest `t0 <= n-1` with `m*t0 = alpha*n + d` for a
/// positive integer `alpha`.
pub fn t0_alpha(n: u32, m: u32) -> Result<CycleColonData> {
    PathFamilyParams::cycle(n, m, 1)?;
    let d = gcd(n, m);
    for t0 in (1..n).rev() {
        let lhs = m as u64 * t0 as u64;
        if lhs <= d as u64 {
            continue;
        }
        let rest = lhs - d as u64;
        if rest.is_multiple_of(n as u64) {
            return Ok(CycleColonData {
                d,
                t0,
                alpha: (rest / n as u64) as u32,
                r: n / d,
                s: m / d,
            });
        }
    }
    Err(Error::NoColonSolution { n, m })
}

/// `w_t = (x1...xn)^alpha * (x1...xm)^(t-t0)` for `t >= t0`.
pub fn witness_w(n: u32, m: u32, t: u32) -> Result<Monomial> {
    let data = t0_alpha(n, m)?;
    if t < data.t0 {
        return Err(Error::Parameter(format!("witness needs t >= t0 = {}, got t={t}", data.t0)));
    }
    let n = n as usize;
    let extra = t - data.t0;
    let exps = (0..n)
        .map(|i| if i < m as usize { data.alpha + extra } else { data.alpha })
        .collect();
    Ok(Monomial::new(exps))
}

/// `x1^(t-1) ... x_{n-1}^(t-1) * xn^(n-2)`, a socle witness for `J_{n,n-1}^t`.
pub fn witness_l1(n: u32, t: u32) -> Result<Monomial> {
    if n < 2 || t + 1 < n {
        return Err(Error::Parameter(format!("need n >= 2 and t >= n-1, got n={n} t={t}")));
    }
    let n = n as usize;
    let mut exps = vec![t - 1; n];
    exps[n - 1] = n as u32 - 2;
    Ok(Monomial::new(exps))
}

/// Intersection of prime ideals generated by the given blocks of variables.
pub fn prime_intersection(n: usize, blocks: &[Vec<usize>]) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(n);
    for block in blocks {
        if block.iter().any(|&i| i >= n) {
            return Err(Error::Parameter(format!("block {block:?} outside {n} variables")));
        }
        acc = acc.intersect(&MonomialIdeal::variables(n, block.iter().copied()))?;
    }
    Ok(acc)
}

/// `U_{n,d}`: the intersection of the `d` primes spanned by the residue classes
/// of variable indices mod `d`.
pub fn u_ideal(n: u32, d: u32) -> Result<MonomialIdeal> {
    if d < 2 || !n.is_multiple_of(d) {
        return Err(Error::Parameter(format!("U_(n,d) needs d >= 2 and d | n, got n={n} d={d}")));
    }
    let blocks: Vec<Vec<usize>> = (0..d as usize)
        .map(|c| (c..n as usize).step_by(d as usize).collect())
        .collect();
    prime_intersection(n as usize, &blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, n).unwrap()
    }

    #[test]
    fn path_ideal_examples() {
        assert_eq!(path_ideal(3, 2).unwrap(), p("x1*x2, x2*x3", 3));
        assert_eq!(path_ideal(4, 4).unwrap(), p("x1*x2*x3*x4", 4));
        assert_eq!(path_ideal(5, 3).unwrap(), p("x1*x2*x3, x2*x3*x4, x3*x4*x5", 5));
        assert!(path_ideal(3, 4).is_err());
        assert!(path_ideal(3, 0).is_err());
    }

    #[test]
    fn cycle_ideal_examples() {
        assert_eq!(cycle_ideal(4, 2).unwrap(), p("x1*x2, x2*x3, x3*x4, x4*x1", 4));
        let j = cycle_ideal(6, 3).unwrap();
        assert_eq!(j.gens().len(), 6);
        assert!(j.gens().iter().all(|g| g.degree() == 3));
        assert!(cycle_ideal(4, 4).is_err());
        assert!(cycle_ideal(4, 1).is_err());
    }

    #[test]
    fn cycle_is_path_plus_wraparound() {
        let i = path_ideal(4, 2).unwrap();
        let wrap = p("x4*x1", 4);
        assert_eq!(i.sum(&wrap).unwrap(), cycle_ideal(4, 2).unwrap());
        for n in 3..=9u32 {
            for m in 2..n {
                let i = path_ideal(n, m).unwrap();
                let j = cycle_ideal(n, m).unwrap();
                assert!(i.gens().iter().all(|g| j.gens().contains(g)));
                assert_eq!(j.gens().len() - i.gens().len(), m as usize - 1);
                for s in 0..n as usize {
                    assert_eq!(j.cyclic_shift(s), j);
                }
            }
        }
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(5, 4, 2), 3);
        assert_eq!(phi(3, 3, 1), 2);
        // Direct evaluation: n-t+2 = 5, floor(5/4) = 1, ceil(5/4) = 2.
        assert_eq!(phi(5, 3, 2), 2);
        for n in 1..=10 {
            for m in 1..=n {
                for t in (n + 2 - m)..(n + 6) {
                    assert_eq!(phi(n, m, t), m as i64 - 1);
                }
            }
        }
    }

    #[test]
    fn phi_nonincreasing_in_t() {
        for n in 1..=12 {
            for m in 1..=n {
                for t in 1..12 {
                    assert!(phi(n, m, t + 1) <= phi(n, m, t), "phi({n},{m},{t})");
                }
            }
        }
    }

    #[test]
    fn t0_examples() {
        for n in (5..=15).step_by(2) {
            assert_eq!(t0_alpha(n, n - 2).unwrap().t0, (n - 1) / 2);
        }
        // Exhaustive scan t0 in 1..=5 of 4*t0 = 6*alpha + 2: t0 = 2 (alpha 1), t0 = 5 (alpha 3).
        let data = t0_alpha(6, 4).unwrap();
        assert_eq!((data.d, data.t0, data.alpha, data.r, data.s), (2, 5, 3, 3, 2));
        assert_eq!(t0_alpha(6, 3).unwrap().d, 3);
    }

    #[test]
    fn t0_invariants_hold_on_grid() {
        for n in 3..=30 {
            for m in 2..n {
                let c = t0_alpha(n, m).unwrap();
                assert_eq!(c.d, gcd(n, m));
                assert_eq!(m * c.t0, c.alpha * n + c.d);
                assert!(c.alpha >= 1 && c.t0 < n);
                assert_eq!(c.r * c.d, n);
                assert_eq!(c.s * c.d, m);
                for t in c.t0 + 1..n {
                    let admissible = m * t > c.d && (m * t - c.d).is_multiple_of(n);
                    assert!(!admissible, "t0({n},{m}) not maximal: {t}");
                }
            }
        }
    }

    #[test]
    fn witnesses() {
        let data = t0_alpha(5, 3).unwrap();
        let w = witness_w(5, 3, data.t0).unwrap();
        assert_eq!(w, Monomial::new(vec![data.alpha; 5]));
        let w2 = witness_w(5, 3, data.t0 + 2).unwrap();
        assert_eq!(w2.degree(), (data.alpha * 5 + 3 * 2) as u64);
        assert!(witness_w(5, 3, data.t0 - 1).is_err());

        let l1 = witness_l1(4, 3).unwrap();
        assert_eq!(l1, Monomial::new(vec![2, 2, 2, 2]));
        for n in 2..8u32 {
            for t in n - 1..n + 3 {
                assert_eq!(witness_l1(n, t).unwrap().degree(), ((n - 1) * t - 1) as u64);
            }
        }
        assert!(witness_l1(4, 2).is_err());
    }

    #[test]
    fn u_ideal_examples() {
        let u = u_ideal(4, 2).unwrap();
        assert_eq!(u, p("x1, x3", 4).intersect(&p("x2, x4", 4)).unwrap());
        let u6 = u_ideal(6, 2).unwrap();
        assert_eq!(u6, p("x1, x3, x5", 6).intersect(&p("x2, x4, x6", 6)).unwrap());
        assert!(u_ideal(6, 4).is_err());
        assert!(u_ideal(6, 1).is_err());
    }
}
