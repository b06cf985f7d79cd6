//! Claims about powers of the cycle ideal for long paths and long cycles.

use super::background::cycle_cells;
use super::{grid, ClaimReport, Harness, Rb};
use crate::depth::max_ideal_associated;
use crate::error::Result;
use crate::families::{cycle_ideal, path_ideal, phi, u_ideal, witness_l1};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// `x_{n-m+1} ... x_{n-1}`, the block whose power is divided out.
fn block(n: u32, m: u32) -> Monomial {
    Monomial::squarefree(n as usize, (n - m) as usize..(n - 1) as usize)
}

/// `(x_{n-m}, x_n)` in `n` variables.
fn two_vars(n: u32, m: u32) -> MonomialIdeal {
    MonomialIdeal::variables(n as usize, [(n - m - 1) as usize, (n - 1) as usize])
}

/// The right-hand side of the block colon before taking powers.
fn block_colon_base(n: u32, m: u32) -> Result<MonomialIdeal> {
    if n <= 2 * m {
        Ok(two_vars(n, m))
    } else {
        path_ideal(n - m - 1, m)?.extend((m + 1) as usize).sum(&two_vars(n, m))
    }
}

fn associated(rb: &mut Rb, j: &MonomialIdeal) -> Result<bool> {
    let check = max_ideal_associated(j)?;
    rb.flag("associated", check.associated);
    if let Some(w) = &check.witness {
        rb.text("socle_witness", w.to_string());
        // An independent look at the witness: w is outside, every x_i w inside.
        let n = j.n_vars();
        let valid = !j.contains(w)? && (0..n).all(|i| j.contains(&w.mul(&Monomial::var(n, i)).expect("same ring")).unwrap_or(false));
        rb.flag("witness_valid", valid);
        if !valid {
            return Ok(false);
        }
    }
    if let Some(d) = check.diagnostic {
        rb.text("diagnostic", d);
    }
    Ok(check.associated)
}

/// Membership of the maximal ideal among the associated primes of
/// `S/J_{n,n-1}^t` and `S/J_{n,n-2}^t`, for whichever parts apply to `(n, t)`.
pub fn check_l1(h: &Harness, n: u32, t: u32) -> Vec<ClaimReport> {
    let mut out = Vec::new();
    if n >= 3 && t + 1 >= n {
        out.push(Rb::new(h, "lemma-2.1", "m in Ass(S/J_(n,n-1)^t)").p("n", n).p("m", n - 1).p("t", t).p("part", 1).run(
            |rb| {
                let j = cycle_ideal(n, n - 1)?.power(t)?;
                let w = witness_l1(n, t)?;
                let colon = j.colon(&w)?;
                rb.text("w_t", w.to_string());
                rb.ideal("colon", &colon);
                let explicit = colon == MonomialIdeal::maximal(n as usize);
                Ok(associated(rb, &j)? && explicit)
            },
        ));
    }
    if n >= 5 && n % 2 == 1 && 2 * t + 1 >= n {
        out.push(Rb::new(h, "lemma-2.1", "m in Ass(S/J_(n,n-2)^t), n odd").p("n", n).p("m", n - 2).p("t", t).p("part", 2).run(
            |rb| associated(rb, &cycle_ideal(n, n - 2)?.power(t)?),
        ));
    }
    if n >= 4 && n.is_multiple_of(2) {
        out.push(Rb::new(h, "lemma-2.1", "m not in Ass(S/J_(n,n-2)^t), n even").p("n", n).p("m", n - 2).p("t", t).p("part", 3).run(
            |rb| Ok(!associated(rb, &cycle_ideal(n, n - 2)?.power(t)?)?),
        ));
    }
    out
}

pub(crate) fn l1_grid(h: &Harness) -> Vec<ClaimReport> {
    let mut cells = Vec::new();
    for n in 3..=h.cfg.high_power_n_max.max(3) {
        let mut ts: Vec<u32> = vec![n - 1, n];
        if n % 2 == 1 && n >= 5 {
            ts.extend([(n - 1) / 2, (n - 1) / 2 + 1]);
        }
        if n.is_multiple_of(2) {
            ts.extend(1..=h.cfg.t_max);
        }
        ts.sort_unstable();
        ts.dedup();
        cells.extend(ts.into_iter().filter(|&t| h.cfg.selects(n, None, Some(t))).map(|t| (n, t)));
    }
    grid(h, &cells, |&(n, t)| check_l1(h, n, t))
}

/// Exact depth and Stanley depth for `m = n-1` and `m = n-2` at large `t`.
pub fn check_t1(h: &Harness, n: u32, t: u32) -> Vec<ClaimReport> {
    let mut out = Vec::new();
    let zero_case = |rb: &mut Rb, m: u32| -> Result<bool> {
        let j = cycle_ideal(n, m)?.power(t)?;
        let d = h.depth(&j)?;
        rb.int("depth", d);
        if d != 0 {
            return Ok(false);
        }
        let s = h.sdepth(&j)?;
        rb.int("sdepth", s);
        Ok(s == 0)
    };
    if n >= 3 && t + 1 >= n {
        out.push(Rb::new(h, "theorem-2.2", "sdepth(S/J_(n,n-1)^t) = depth(S/J_(n,n-1)^t) = 0").p("n", n).p("m", n - 1).p("t", t).p("part", 1).run(
            |rb| zero_case(rb, n - 1),
        ));
    }
    if n >= 5 && n % 2 == 1 && 2 * t + 1 >= n {
        out.push(Rb::new(h, "theorem-2.2", "sdepth(S/J_(n,n-2)^t) = depth(S/J_(n,n-2)^t) = 0, n odd").p("n", n).p("m", n - 2).p("t", t).p("part", 2).run(
            |rb| zero_case(rb, n - 2),
        ));
    }
    if n >= 4 && n.is_multiple_of(2) && t + 1 >= n {
        let m = n - 2;
        out.push(Rb::new(h, "theorem-2.2", "depth(S/J_(n,n-2)^t) = 1, n even").p("n", n).p("m", m).p("t", t).p("part", 3).run(|rb| {
            let d = h.depth(&cycle_ideal(n, m)?.power(t)?)?;
            let du = h.depth(&u_ideal(n, 2)?)?;
            rb.int("depth", d);
            rb.int("depth_U", du);
            Ok(d == 1 && du == 1)
        }));
        out.push(Rb::new(h, "theorem-2.2", "n/2 >= sdepth(S/J_(n,n-2)^t) >= 1, n even").p("n", n).p("m", m).p("t", t).p("part", 3).run(
            |rb| {
                let su = h.sdepth(&u_ideal(n, 2)?)?;
                rb.int("sdepth_U", su);
                let s = h.sdepth(&cycle_ideal(n, m)?.power(t)?)?;
                rb.int("sdepth", s);
                Ok(1 <= s && 2 * s <= n as usize && 2 * su <= n as usize)
            },
        ));
    }
    out
}

pub(crate) fn t1_grid(h: &Harness) -> Vec<ClaimReport> {
    let mut cells = Vec::new();
    for n in 3..=h.cfg.high_power_n_max.max(3) {
        let mut ts = vec![n - 1];
        if n <= 5 {
            ts.push(n);
        }
        if n % 2 == 1 && n >= 5 {
            ts.extend([(n - 1) / 2, (n - 1) / 2 + 1]);
        }
        ts.sort_unstable();
        ts.dedup();
        cells.extend(ts.into_iter().filter(|&t| h.cfg.selects(n, None, Some(t))).map(|t| (n, t)));
    }
    grid(h, &cells, |&(n, t)| check_t1(h, n, t))
}

/// `(J^t : (x_{n-m+1} ... x_{n-1})^t)` in closed form.
pub fn check_inmt2(h: &Harness, n: u32, m: u32, t: u32) -> ClaimReport {
    let relation = if n <= 2 * m {
        "(J^t : u^t) = (x_(n-m), x_n)^t"
    } else {
        "(J^t : u^t) = (I_(n-m-1,m) S + (x_(n-m), x_n))^t"
    };
    Rb::new(h, "lemma-2.3", relation).p("n", n).p("m", m).p("t", t).run(|rb| {
        let j = cycle_ideal(n, m)?;
        let colon = j.power(t)?.colon(&block(n, m).pow(t)?)?;
        let expected = block_colon_base(n, m)?.power(t)?;
        rb.ideal("colon", &colon);
        rb.ideal("expected", &expected);
        Ok(colon == expected)
    })
}

pub(crate) fn inmt2_grid(h: &Harness) -> Vec<ClaimReport> {
    let cells = cycle_cells(h, 3, h.cfg.colon_n_max, |_, _| true);
    grid(h, &cells, |&(n, m, t)| vec![check_inmt2(h, n, m, t)])
}

/// Depth of the block colon `V` for `n >= 2m+1`.
pub fn check_intermed(h: &Harness, n: u32, m: u32, t: u32) -> Vec<ClaimReport> {
    let formula = if t + 2 * m <= n { phi(n, m, t) } else { 2 * (m as i64 - 1) };
    let v = || -> Result<MonomialIdeal> { cycle_ideal(n, m)?.power(t)?.colon(&block(n, m).pow(t)?) };
    let depth = Rb::new(h, "lemma-2.4", "depth(S/V) = phi(n,m,t) if t <= n-2m, else 2(m-1)").p("n", n).p("m", m).p("t", t).run(
        |rb| {
            let v = v()?;
            let split = block_colon_base(n, m)?.power(t)?;
            let l = MonomialIdeal::variables((m + 1) as usize, [0, m as usize]);
            let dim = l.dim_quotient()? as i64;
            let d = h.depth(&v)? as i64;
            rb.flag("V_splits", v == split);
            rb.int("dim_L", dim);
            rb.int("phi_n_minus_m_minus_1_plus_dim", phi(n - m - 1, m, t) + dim);
            rb.int("formula", formula);
            rb.int("depth", d);
            Ok(v == split && dim == m as i64 - 1 && d == formula && d == phi(n - m - 1, m, t) + dim)
        },
    );
    let sdepth = Rb::new(h, "lemma-2.4", "sdepth(S/V) >= depth(S/V)").p("n", n).p("m", m).p("t", t).run(|rb| {
        let v = v()?;
        let s = h.sdepth(&v)?;
        let d = h.depth(&v)?;
        rb.int("sdepth", s);
        rb.int("depth", d);
        Ok(s >= d)
    });
    vec![depth, sdepth]
}

pub(crate) fn intermed_grid(h: &Harness) -> Vec<ClaimReport> {
    let cells = cycle_cells(h, 5, h.cfg.depth_n_max, |n, m| n > 2 * m);
    grid(h, &cells, |&(n, m, t)| check_intermed(h, n, m, t))
}

/// The three-branch upper bound on `depth(S/J^t)` for `n >= 2m+1`.
pub fn t3_bound(n: u32, m: u32, t: u32) -> i64 {
    if t + 2 * m <= n {
        phi(n, m, t)
    } else if t + m <= n {
        phi(n - 1, m, t) + 1
    } else {
        m as i64
    }
}

pub fn check_t3(h: &Harness, n: u32, m: u32, t: u32) -> ClaimReport {
    Rb::new(h, "theorem-2.5", "depth(S/J^t) <= three-branch bound").p("n", n).p("m", m).p("t", t).run(|rb| {
        let d = h.depth(&cycle_ideal(n, m)?.power(t)?)? as i64;
        let bound = t3_bound(n, m, t);
        rb.int("depth", d);
        rb.int("bound", bound);
        rb.int("depth_path", h.depth(&path_ideal(n, m)?.power(t)?)? as i64);
        Ok(d <= bound)
    })
}

pub(crate) fn t3_grid(h: &Harness) -> Vec<ClaimReport> {
    let cells = cycle_cells(h, 5, h.cfg.depth_n_max, |n, m| n > 2 * m);
    grid(h, &cells, |&(n, m, t)| vec![check_t3(h, n, m, t)])
}

/// For `m < n <= 2m` both invariants of `S/J^t` are at most `n - 2`.
pub(crate) fn short_cycle_remark(h: &Harness) -> Vec<ClaimReport> {
    let cells = cycle_cells(h, 3, h.cfg.depth_n_max, |n, m| n <= 2 * m);
    grid(h, &cells, |&(n, m, t)| {
        let depth = Rb::new(h, "remark-2.6", "depth(S/J^t) <= depth(S/(x_(n-m), x_n)^t) = n-2").p("n", n).p("m", m).p("t", t).run(
            |rb| {
                let d = h.depth(&cycle_ideal(n, m)?.power(t)?)? as i64;
                let d2 = h.depth(&two_vars(n, m).power(t)?)? as i64;
                rb.int("depth", d);
                rb.int("depth_two_vars", d2);
                Ok(d2 == n as i64 - 2 && d <= d2)
            },
        );
        let sdepth = Rb::new(h, "remark-2.6", "sdepth(S/J^t) <= sdepth(S/(x_(n-m), x_n)^t) = n-2").p("n", n).p("m", m).p("t", t);
        let sdepth = if t > h.cfg.sdepth_t_max {
            sdepth.skip(format!("t above the Stanley depth grid ({})", h.cfg.sdepth_t_max))
        } else {
            sdepth.run(|rb| {
                let s2 = h.sdepth(&two_vars(n, m).power(t)?)? as i64;
                rb.int("sdepth_two_vars", s2);
                let s = h.sdepth(&cycle_ideal(n, m)?.power(t)?)? as i64;
                rb.int("sdepth", s);
                Ok(s2 == n as i64 - 2 && s <= s2)
            })
        };
        vec![depth, sdepth]
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_and_colon_base() {
        assert_eq!(block(6, 4).to_string(), "x3*x4*x5");
        assert_eq!(block_colon_base(6, 4).unwrap(), MonomialIdeal::parse("x2, x6", 6).unwrap());
        assert_eq!(block_colon_base(7, 3).unwrap(), MonomialIdeal::parse("x1*x2*x3, x4, x7", 7).unwrap());
    }

    #[test]
    fn third_branch_is_m() {
        assert_eq!(t3_bound(7, 3, 5), 3);
        assert_eq!(t3_bound(7, 3, 1), phi(7, 3, 1));
    }
}
