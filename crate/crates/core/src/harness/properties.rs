//! Seeded property checks for the colon and extension lemmas, the socle
//! characterization of depth zero, agreement of the two depth engines and
//! the Stanley inequality over everything measured in a run.

use std::ops::RangeInclusive;

use rand::Rng;

use super::{grid, ClaimReport, Harness, Rb};
use crate::depth::depth_via_polarization_with;
use crate::error::Result;
use crate::families::{cycle_ideal, path_ideal};
use crate::ideal::{box_monomials, MonomialIdeal};
use crate::monomial::Monomial;

fn random_monomial(rng: &mut impl Rng, n: usize, max_exp: u32) -> Monomial {
    loop {
        let m = Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect());
        if !m.is_one() {
            return m;
        }
    }
}

/// A proper nonzero ideal with at most `max_gens` generators.
pub(crate) fn random_ideal(rng: &mut impl Rng, n: RangeInclusive<usize>, max_exp: u32, max_gens: usize) -> MonomialIdeal {
    let n = rng.gen_range(n);
    let k = rng.gen_range(1..=max_gens);
    crate::ideal::minimalize((0..k).map(|_| random_monomial(rng, n, max_exp)), n)
}

/// Pairs `(I, u)` with `u` a nonconstant monomial outside `I`.
pub(crate) fn colon_sequences(h: &Harness) -> Vec<(MonomialIdeal, Monomial)> {
    let mut rng = h.rng("colon-sequences");
    let mut out = Vec::with_capacity(h.cfg.instances);
    while out.len() < h.cfg.instances {
        let i = random_ideal(&mut rng, 2..=4, 2, 4);
        let u = random_monomial(&mut rng, i.n_vars(), 2);
        if !i.contains(&u).unwrap_or(true) {
            out.push((i, u));
        }
    }
    out
}

fn pair_rb(h: &Harness, claim: &str, relation: &str, i: &MonomialIdeal, u: &Monomial) -> Rb {
    let mut rb = Rb::new(h, claim, relation).p("n", i.n_vars() as i64);
    rb.ideal("I", i);
    rb.text("u", u.to_string());
    rb
}

pub(crate) fn colon_monotone(h: &Harness) -> Vec<ClaimReport> {
    let seqs = colon_sequences(h);
    grid(h, &seqs, |(i, u)| {
        let d = pair_rb(h, "lemma-1.4", "depth(S/(I:u)) >= depth(S/I)", i, u).run(|rb| {
            let (dc, d) = (h.depth(&i.colon(u)?)?, h.depth(i)?);
            rb.int("depth_colon", dc);
            rb.int("depth", d);
            Ok(dc >= d)
        });
        let s = pair_rb(h, "lemma-1.4", "sdepth(S/(I:u)) >= sdepth(S/I)", i, u).run(|rb| {
            let (sc, s) = (h.sdepth(&i.colon(u)?)?, h.sdepth(i)?);
            rb.int("sdepth_colon", sc);
            rb.int("sdepth", s);
            Ok(sc >= s)
        });
        vec![d, s]
    })
}

pub(crate) fn colon_multiple(h: &Harness) -> Vec<ClaimReport> {
    let mut rng = h.rng("lemma-1.5");
    let pairs: Vec<(MonomialIdeal, Monomial)> = (0..h.cfg.instances)
        .map(|_| {
            let i0 = random_ideal(&mut rng, 2..=4, 2, 3);
            let u = random_monomial(&mut rng, i0.n_vars(), 2);
            (i0.scale(&u).expect("same ring"), u)
        })
        .collect();
    grid(h, &pairs, |(i, u)| {
        vec![pair_rb(h, "lemma-1.5", "I = u(I:u) implies equal depth and sdepth of S/(I:u) and S/I", i, u).run(|rb| {
            let holds = i.is_multiple_of_colon(u)?;
            rb.hypothesis(holds);
            if !holds {
                return Ok(false);
            }
            let c = i.colon(u)?;
            let (dc, d) = (h.depth(&c)?, h.depth(i)?);
            let (sc, s) = (h.sdepth(&c)?, h.sdepth(i)?);
            rb.int("depth", d);
            rb.int("sdepth", s);
            Ok(dc == d && sc == s)
        })]
    })
}

pub(crate) fn extension_shift(h: &Harness) -> Vec<ClaimReport> {
    let mut rng = h.rng("lemma-1.6");
    let ideals: Vec<MonomialIdeal> = (0..h.cfg.instances).map(|_| random_ideal(&mut rng, 1..=4, 2, 4)).collect();
    grid(h, &ideals, |i| {
        vec![Rb::new(h, "lemma-1.6", "one new variable raises depth and sdepth by one")
            .p("n", i.n_vars() as i64)
            .run(|rb| {
                rb.ideal("I", i);
                let e = i.extend(1);
                let (d, de) = (h.depth(i)?, h.depth(&e)?);
                let (s, se) = (h.sdepth(i)?, h.sdepth(&e)?);
                rb.int("depth", d);
                rb.int("sdepth", s);
                Ok(de == d + 1 && se == s + 1)
            })]
    })
}

/// A monomial outside `I` that every variable multiplies into `I`, by
/// search of the box below the lcm.
pub(crate) fn socle_witness(i: &MonomialIdeal) -> Result<Option<Monomial>> {
    let lcm = i.lcm_exponents();
    if i.is_zero() || lcm.contains(&0) {
        return Ok(None);
    }
    let top: Vec<u32> = lcm.iter().map(|e| e - 1).collect();
    for w in box_monomials(&top) {
        if i.contains(&w)? {
            continue;
        }
        let mut all = true;
        for v in 0..i.n_vars() {
            if !i.contains(&w.mul(&Monomial::var(i.n_vars(), v))?)? {
                all = false;
                break;
            }
        }
        if all {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn family_powers(n_max: u32, t_max: u32) -> Vec<MonomialIdeal> {
    let mut out = Vec::new();
    for n in 3..=n_max {
        for m in 2..n {
            for t in 1..=t_max {
                for base in [path_ideal(n, m), cycle_ideal(n, m)] {
                    if let Ok(p) = base.and_then(|b| b.power(t)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

pub(crate) fn depth_zero(h: &Harness) -> Vec<ClaimReport> {
    let mut rng = h.rng("lemma-1.7");
    let mut ideals: Vec<MonomialIdeal> = (0..h.cfg.instances).map(|_| random_ideal(&mut rng, 1..=4, 2, 5)).collect();
    ideals.push(MonomialIdeal::maximal(4));
    for (n, m, t) in [(4, 2, 2), (4, 2, 3), (4, 3, 3), (5, 2, 3), (5, 3, 2), (6, 2, 2)] {
        if let Ok(p) = cycle_ideal(n, m).and_then(|j| j.power(t)) {
            ideals.push(p);
        }
    }
    grid(h, &ideals, |i| {
        vec![Rb::new(h, "lemma-1.7", "socle element exists iff depth = 0 iff sdepth = 0")
            .p("n", i.n_vars() as i64)
            .run(|rb| {
                rb.ideal("I", i);
                let w = socle_witness(i)?;
                rb.text("witness", w.as_ref().map_or("none".to_string(), |w| w.to_string()));
                let d = h.depth(i)?;
                rb.int("depth", d);
                let s = h.sdepth(i)?;
                rb.int("sdepth", s);
                Ok(w.is_some() == (d == 0) && (d == 0) == (s == 0))
            })]
    })
}

pub(crate) fn engine_agreement(h: &Harness) -> Vec<ClaimReport> {
    let mut rng = h.rng("engine-agreement");
    let mut ideals: Vec<MonomialIdeal> = (0..h.cfg.instances).map(|_| random_ideal(&mut rng, 1..=4, 2, 5)).collect();
    ideals.extend(
        family_powers(h.cfg.depth_n_max.min(6), h.cfg.t_max)
            .into_iter()
            .filter(|i| i.polarize().1 <= h.cfg.polarization_cap),
    );
    grid(h, &ideals, |i| {
        vec![Rb::new(h, "engine-agreement", "lattice depth = depth after polarization")
            .p("n", i.n_vars() as i64)
            .run(|rb| {
                rb.ideal("I", i);
                let d = h.depth(i)?;
                let p = depth_via_polarization_with(i, h.cfg.polarization_cap, h.cfg.exec)?.depth;
                rb.int("depth", d);
                rb.int("depth_polarized", p);
                Ok(d == p)
            })]
    })
}

pub(crate) fn stanley_inequality(h: &Harness) -> Vec<ClaimReport> {
    let measured = h.measured();
    let mut out: Vec<ClaimReport> = measured
        .iter()
        .map(|(i, d, s)| {
            Rb::new(h, super::STANLEY_INEQUALITY, "sdepth(S/I) >= depth(S/I)")
                .p("n", i.n_vars() as i64)
                .run(|rb| {
                    rb.ideal("I", i);
                    rb.int("depth", *d);
                    rb.int("sdepth", *s);
                    Ok(s >= d)
                })
        })
        .collect();
    out.push(Rb::new(h, super::STANLEY_INEQUALITY, "every Stanley depth certificate verifies").run(|rb| {
        let bad = h.bad_certificates();
        rb.int("certificates", h.sdepth_count());
        rb.int("quotients_with_both", measured.len());
        rb.text("bad", bad.join("; "));
        Ok(bad.is_empty())
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn socle_of_small_ideals() {
        let m = MonomialIdeal::maximal(3);
        assert_eq!(socle_witness(&m).unwrap(), Some(Monomial::one(3)));
        let i = MonomialIdeal::parse("x1^2, x1*x2, x2^2", 2).unwrap();
        assert!(socle_witness(&i).unwrap().is_some());
        let i = MonomialIdeal::parse("x1*x2", 2).unwrap();
        assert!(socle_witness(&i).unwrap().is_none());
    }
}
