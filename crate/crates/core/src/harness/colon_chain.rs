//! Slicing `S/J^t` along powers of the last variable.
//!
//! Notation: `J = J_{n,m}`, `S' = K[x1..x_{n-1}]`, `J' = (J : x_n) ∩ S'`,
//! `I = I_{n-1,m}`, `Q_k = (J^t : x_n^k)` and
//! `d_k, s_k` the depth and Stanley depth of `S'/I^{t+1-k} J'^{k-1}`.

use super::{grid, ClaimReport, Harness, Rb};
use crate::error::Result;
use crate::families::{cycle_ideal, path_ideal, phi};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub(crate) struct Slices {
    pub n: u32,
    pub m: u32,
    pub t: u32,
    /// `J` and `J^t` in `S`.
    pub j: MonomialIdeal,
    pub jt: MonomialIdeal,
    /// `I` and `J'` in `S'`.
    pub i: MonomialIdeal,
    pub jp: MonomialIdeal,
}

impl Slices {
    pub(crate) fn new(n: u32, m: u32, t: u32) -> Result<Self> {
        let j = cycle_ideal(n, m)?;
        let jt = j.power(t)?;
        let jp = j.colon(&Monomial::var(n as usize, n as usize - 1))?.restrict(n as usize - 1)?;
        let i = path_ideal(n - 1, m)?;
        Ok(Slices { n, m, t, j, jt, i, jp })
    }

    fn nv(&self) -> usize {
        self.n as usize
    }

    pub(crate) fn xn_pow(&self, k: u32) -> Result<Monomial> {
        Monomial::var(self.nv(), self.nv() - 1).pow(k)
    }

    fn xn_ideal(&self, k: u32) -> Result<MonomialIdeal> {
        Ok(MonomialIdeal::principal(self.xn_pow(k)?))
    }

    /// `Q_k = (J^t : x_n^k)`.
    pub(crate) fn q(&self, k: u32) -> Result<MonomialIdeal> {
        self.jt.colon(&self.xn_pow(k)?)
    }

    /// `I^{t+1-k} J'^{k-1}` in `S'`.
    pub(crate) fn slice(&self, k: u32) -> Result<MonomialIdeal> {
        self.i.power(self.t + 1 - k)?.product(&self.jp.power(k - 1)?)
    }

    /// `(J^t, x_n^k)`.
    pub(crate) fn sum_xn(&self, k: u32) -> Result<MonomialIdeal> {
        self.jt.sum(&self.xn_ideal(k)?)
    }
}

fn params(rb: Rb, s: &Slices) -> Rb {
    rb.p("n", s.n).p("m", s.m).p("t", s.t)
}

/// The identities for one `k`, and the upper bound through `J'` when `k = t`.
pub fn check_inmt(h: &Harness, n: u32, m: u32, t: u32, k: u32) -> Vec<ClaimReport> {
    let s = match Slices::new(n, m, t) {
        Ok(s) => s,
        Err(e) => return vec![Rb::new(h, "lemma-3.1", "setup").p("n", n).p("m", m).p("t", t).run(|_| Err(e))],
    };
    if k < 1 || k > t {
        return vec![params(Rb::new(h, "lemma-3.1", "1 <= k <= t"), &s).p("k", k).run(|_| {
            Err(crate::Error::Parameter(format!("k = {k} outside 1..={t}")))
        })];
    }
    let mut out = Vec::new();
    out.push(params(Rb::new(h, "lemma-3.1", "(J^t, x_n^k) = (I^{t+1-k} J^{k-1}, x_n^k)"), &s).p("k", k).p("part", 1).run(
        |rb| {
            let lhs = s.sum_xn(k)?;
            let rhs = s.i.extend(1).power(t + 1 - k)?.product(&s.j.power(k - 1)?)?.sum(&s.xn_ideal(k)?)?;
            rb.ideal("lhs", &lhs);
            Ok(lhs == rhs)
        },
    ));
    out.push(params(Rb::new(h, "lemma-3.1", "((J^t : x_n^{k-1}), x_n) = (I^{t+1-k} J'^{k-1}, x_n)"), &s).p("k", k).p("part", 2).run(
        |rb| {
            let lhs = s.q(k - 1)?.sum(&s.xn_ideal(1)?)?;
            let rhs = s.slice(k)?.extend(1).sum(&s.xn_ideal(1)?)?;
            rb.ideal("lhs", &lhs);
            Ok(lhs == rhs)
        },
    ));
    if k == 1 {
        out.push(params(Rb::new(h, "lemma-3.1", "(J^t, x_n) = (I^t, x_n)"), &s).p("part", 3).run(|rb| {
            let lhs = s.sum_xn(1)?;
            rb.ideal("lhs", &lhs);
            Ok(lhs == s.i.power(t)?.extend(1).sum(&s.xn_ideal(1)?)?)
        }));
    }
    if k == t {
        out.push(params(Rb::new(h, "lemma-3.1", "(J^t : x_n^t) = J'^t S"), &s).p("part", 3).run(|rb| {
            let lhs = s.q(t)?;
            rb.ideal("J_prime", &s.jp);
            rb.ideal("lhs", &lhs);
            Ok(lhs == s.jp.power(t)?.extend(1))
        }));
        out.push(
            params(Rb::new(h, "lemma-3.1", "depth(S/J^t) <= depth(S/Q_1) <= ... <= depth(S/Q_t) = depth(S'/J'^t) + 1"), &s)
                .p("part", 4)
                .run(|rb| {
                    let chain = (0..=t).map(|i| h.depth(&s.q(i)?)).collect::<Result<Vec<_>>>()?;
                    let dj = h.depth(&s.jp.power(t)?)?;
                    rb.text("chain", format!("{chain:?}"));
                    rb.int("depth_J_prime_power", dj);
                    Ok(chain.windows(2).all(|w| w[0] <= w[1]) && chain[t as usize] == dj + 1)
                }),
        );
        let sdepth = params(Rb::new(h, "lemma-3.1", "sdepth(S/J^t) <= sdepth(S/Q_1) <= ... <= sdepth(S/Q_t) = sdepth(S'/J'^t) + 1"), &s)
            .p("part", 4);
        out.push(if t > h.cfg.sdepth_t_max {
            sdepth.skip(format!("t above the Stanley depth grid ({})", h.cfg.sdepth_t_max))
        } else {
            sdepth.run(|rb| {
                let sj = h.sdepth(&s.jp.power(t)?)?;
                rb.int("sdepth_J_prime_power", sj);
                let chain = (0..=t).map(|i| h.sdepth(&s.q(i)?)).collect::<Result<Vec<_>>>()?;
                rb.text("chain", format!("{chain:?}"));
                Ok(chain.windows(2).all(|w| w[0] <= w[1]) && chain[t as usize] == sj + 1)
            })
        });
    }
    out
}

fn chain_cells(h: &Harness) -> Vec<(u32, u32, u32)> {
    let mut cells = vec![(6, 3, 2), (6, 4, 2), (7, 3, 2)];
    for n in 4..=h.cfg.depth_n_max.min(6) {
        for m in 2..n {
            for t in 2..=h.cfg.t_max {
                if !cells.contains(&(n, m, t)) {
                    cells.push((n, m, t));
                }
            }
        }
    }
    cells.retain(|&(n, m, t)| n <= h.cfg.depth_n_max && h.cfg.selects(n, Some(m), Some(t)));
    cells
}

pub(crate) fn inmt_grid(h: &Harness) -> Vec<ClaimReport> {
    let cells: Vec<(u32, u32, u32, u32)> =
        chain_cells(h).into_iter().flat_map(|(n, m, t)| (1..=t).map(move |k| (n, m, t, k))).collect();
    grid(h, &cells, |&(n, m, t, k)| check_inmt(h, n, m, t, k))
}

/// `d_k` against the depths of consecutive colons, with the two conditional
/// parts evaluated only when their hypotheses hold.
pub fn check_obsy(h: &Harness, n: u32, m: u32, t: u32) -> Vec<ClaimReport> {
    let s = match Slices::new(n, m, t) {
        Ok(s) => s,
        Err(e) => return vec![Rb::new(h, "proposition-3.2", "setup").p("n", n).p("m", m).p("t", t).run(|_| Err(e))],
    };
    let mut out = Vec::new();
    out.push(params(Rb::new(h, "proposition-3.2", "s_1 >= d_1 = phi(n-1,m,t)"), &s).run(|rb| {
        let d1 = h.depth(&s.slice(1)?)? as i64;
        rb.int("d_1", d1);
        rb.int("phi", phi(n - 1, m, t));
        if d1 != phi(n - 1, m, t) {
            return Ok(false);
        }
        let s1 = h.sdepth(&s.slice(1)?)? as i64;
        rb.int("s_1", s1);
        Ok(s1 >= d1)
    }));
    for k in 1..=t {
        out.push(params(Rb::new(h, "proposition-3.2", "d_k >= depth(S/Q_{k-1}) - 1"), &s).p("k", k).p("part", 1).run(|rb| {
            let dk = h.depth(&s.slice(k)?)? as i64;
            let prev = h.depth(&s.q(k - 1)?)? as i64;
            rb.int("d_k", dk);
            rb.int("depth_Q_k_minus_1", prev);
            Ok(dk >= prev - 1)
        }));
        out.push(
            params(Rb::new(h, "proposition-3.2", "depth(S/Q_k) > depth(S/Q_{k-1}) implies d_k = depth(S/Q_{k-1})"), &s)
                .p("k", k)
                .p("part", 2)
                .run(|rb| {
                    let (cur, prev) = (h.depth(&s.q(k)?)?, h.depth(&s.q(k - 1)?)?);
                    rb.int("depth_Q_k", cur);
                    rb.int("depth_Q_k_minus_1", prev);
                    rb.hypothesis(cur > prev);
                    if cur <= prev {
                        return Ok(true);
                    }
                    let dk = h.depth(&s.slice(k)?)?;
                    rb.int("d_k", dk);
                    Ok(dk == prev)
                }),
        );
        let part3 = params(Rb::new(h, "proposition-3.2", "sdepth(S/Q_k) > sdepth(S/Q_{k-1}) implies s_k <= sdepth(S/Q_{k-1})"), &s)
            .p("k", k)
            .p("part", 3);
        out.push(if t > h.cfg.sdepth_t_max {
            part3.skip(format!("t above the Stanley depth grid ({})", h.cfg.sdepth_t_max))
        } else {
            part3.run(|rb| {
                let (cur, prev) = (h.sdepth(&s.q(k)?)?, h.sdepth(&s.q(k - 1)?)?);
                rb.int("sdepth_Q_k", cur);
                rb.int("sdepth_Q_k_minus_1", prev);
                rb.hypothesis(cur > prev);
                if cur <= prev {
                    return Ok(true);
                }
                let sk = h.sdepth(&s.slice(k)?)?;
                rb.int("s_k", sk);
                Ok(sk <= prev)
            })
        });
    }
    out
}

pub(crate) fn obsy_grid(h: &Harness) -> Vec<ClaimReport> {
    grid(h, &chain_cells(h), |&(n, m, t)| check_obsy(h, n, m, t))
}

/// Bounds through `(J^t, x_n^t)`.
pub fn check_obsy2(h: &Harness, n: u32, m: u32, t: u32) -> Vec<ClaimReport> {
    let s = match Slices::new(n, m, t) {
        Ok(s) => s,
        Err(e) => return vec![Rb::new(h, "proposition-3.3", "setup").p("n", n).p("m", m).p("t", t).run(|_| Err(e))],
    };
    let f = phi(n - 1, m, t);
    let mut out = Vec::new();
    out.push(params(Rb::new(h, "proposition-3.3", "depth(S/(J^t, x_n^t)) >= min(phi(n-1,m,t), d_2, ..., d_t)"), &s).p("part", 1).run(
        |rb| {
            let mut bound = f;
            for k in 2..=t {
                bound = bound.min(h.depth(&s.slice(k)?)? as i64);
            }
            let d = h.depth(&s.sum_xn(t)?)? as i64;
            rb.int("bound", bound);
            rb.int("depth_sum", d);
            Ok(d >= bound)
        },
    ));
    let part2 = params(Rb::new(h, "proposition-3.3", "sdepth(S/(J^t, x_n^t)) >= min(phi(n-1,m,t), s_2, ..., s_t)"), &s).p("part", 2);
    out.push(if t > h.cfg.sdepth_t_max {
        part2.skip(format!("t above the Stanley depth grid ({})", h.cfg.sdepth_t_max))
    } else {
        part2.run(|rb| {
            let mut bound = f;
            for k in 2..=t {
                bound = bound.min(h.sdepth(&s.slice(k)?)? as i64);
            }
            let sd = h.sdepth(&s.sum_xn(t)?)? as i64;
            rb.int("bound", bound);
            rb.int("sdepth_sum", sd);
            Ok(sd >= bound)
        })
    });
    out.push(params(Rb::new(h, "proposition-3.3", "depth(S/J^t) <= depth(S/(J^t, x_n^t)) + 1"), &s).p("part", 3).run(|rb| {
        let (d, ds) = (h.depth(&s.jt)?, h.depth(&s.sum_xn(t)?)?);
        rb.int("depth", d);
        rb.int("depth_sum", ds);
        Ok(d <= ds + 1)
    }));
    out.push(
        params(Rb::new(h, "proposition-3.3", "depth(S/Q_t) > depth(S/J^t) implies depth(S/J^t) >= depth(S/(J^t, x_n^t))"), &s)
            .p("part", 4)
            .run(|rb| {
                let (d, dq) = (h.depth(&s.jt)?, h.depth(&s.q(t)?)?);
                rb.int("depth", d);
                rb.int("depth_Q_t", dq);
                rb.hypothesis(dq > d);
                if dq <= d {
                    return Ok(true);
                }
                let ds = h.depth(&s.sum_xn(t)?)?;
                rb.int("depth_sum", ds);
                Ok(d >= ds)
            }),
    );
    let part4s = params(Rb::new(h, "proposition-3.3", "sdepth(S/Q_t) > sdepth(S/J^t) implies sdepth(S/J^t) >= sdepth(S/(J^t, x_n^t))"), &s)
        .p("part", 4);
    out.push(if t > h.cfg.sdepth_t_max {
        part4s.skip(format!("t above the Stanley depth grid ({})", h.cfg.sdepth_t_max))
    } else {
        part4s.run(|rb| {
            let (sd, sq) = (h.sdepth(&s.jt)?, h.sdepth(&s.q(t)?)?);
            rb.int("sdepth", sd);
            rb.int("sdepth_Q_t", sq);
            rb.hypothesis(sq > sd);
            if sq <= sd {
                return Ok(true);
            }
            let ss = h.sdepth(&s.sum_xn(t)?)?;
            rb.int("sdepth_sum", ss);
            Ok(sd >= ss)
        })
    });
    out
}

pub(crate) fn obsy2_grid(h: &Harness) -> Vec<ClaimReport> {
    grid(h, &chain_cells(h), |&(n, m, t)| check_obsy2(h, n, m, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_prime_of_the_six_cycle() {
        let s = Slices::new(6, 3, 2).unwrap();
        assert_eq!(s.jp, MonomialIdeal::parse("x1*x2, x2*x3*x4, x4*x5, x5*x1", 5).unwrap());
        let s = Slices::new(6, 4, 2).unwrap();
        assert_eq!(s.jp, MonomialIdeal::parse("x1*x2*x3, x3*x4*x5, x4*x5*x1, x5*x1*x2", 5).unwrap());
    }
}
