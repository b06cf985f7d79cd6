//! Depth of `S/I` through multigraded Betti numbers.
//!
//! The main engine walks the lcm lattice: Betti numbers of `S/I` live in
//! multidegrees of the lattice, and `β_{i,b}(S/I)` is the rank of
//! `H̃_{i-2}` of the open interval `(0̂, b)`. The same ranks are read off the
//! upper Koszul simplicial complex
//! `K^b(I) = { F ⊆ supp(b) squarefree : x^(b-F) ∈ I }`, which has at most
//! `2^n` faces no matter how large the interval is, with the index shift
//! `β_{i,b}(S/I) = dim H̃_{i-2}(K^b(I))`.
//!
//! The cross-check engine polarizes and applies Hochster's formula to the
//! Stanley–Reisner complex of the squarefree ideal. Both work over `Q`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::homology::{ReducedHomology, SimplicialComplex};
use crate::ideal::{box_monomials, MonomialIdeal};
use crate::lattice::build_lcm_lattice;
use crate::monomial::Monomial;

/// Default cap on the number of variables after polarization.
pub const DEFAULT_POLARIZATION_CAP: usize = 14;
const POLARIZATION_HARD_CAP: usize = 24;
const WITNESS_BOX_CAP: usize = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DepthMethod {
    Lattice,
    Polarization,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthResult {
    pub depth: usize,
    pub pd: usize,
    pub n_vars: usize,
    pub method: DepthMethod,
    /// Characteristic of the coefficient field used for homology ranks.
    pub characteristic: u32,
}

impl DepthResult {
    fn from_pd(pd: usize, n_vars: usize, method: DepthMethod) -> Self {
        assert!(pd <= n_vars, "projective dimension {pd} exceeds {n_vars} variables");
        let r = DepthResult { depth: n_vars - pd, pd, n_vars, method, characteristic: 0 };
        debug_assert_eq!(r.depth + r.pd, r.n_vars);
        r
    }
}

/// Multigraded Betti numbers `β_{i,b}(S/I)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    pub n_vars: usize,
    pub entries: BTreeMap<(usize, Monomial), u64>,
}

impl BettiTable {
    /// Total Betti number `β_i = Σ_b β_{i,b}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|((j, _), _)| *j == i).map(|(_, &v)| v).sum()
    }

    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0; self.projective_dimension() + 1];
        for ((i, _), &v) in &self.entries {
            out[*i] += v;
        }
        out
    }

    pub fn total_sum(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }
}

/// The upper Koszul simplicial complex `K^b(I)` on the support of `b`.
pub fn koszul_complex(ideal: &MonomialIdeal, b: &Monomial) -> SimplicialComplex {
    let support = b.support();
    let k = support.len();
    let mut faces = Vec::new();
    let mut shifted = b.exps().to_vec();
    for mask in 0u64..(1u64 << k) {
        for (bit, &v) in support.iter().enumerate() {
            shifted[v] = b.exps()[v] - ((mask >> bit) & 1) as u32;
        }
        if ideal.contains_unchecked(&shifted) {
            faces.push(mask);
        }
    }
    SimplicialComplex::from_faces(faces)
}

/// All multigraded Betti numbers of `S/I`.
pub fn betti(ideal: &MonomialIdeal, exec: Exec) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.n_vars();
    let mut table = BettiTable { n_vars: n, entries: BTreeMap::new() };
    table.entries.insert((0, Monomial::one(n)), 1);
    if ideal.is_zero() {
        return Ok(table);
    }
    let lattice = build_lcm_lattice(ideal)?;
    let homologies: Vec<ReducedHomology> =
        exec.map(lattice.elements(), |b| koszul_complex(ideal, b).reduced_homology());
    for (b, h) in lattice.elements().iter().zip(homologies) {
        for (dim, rank) in h.nonzero() {
            let i = (dim + 2) as usize;
            *table.entries.entry((i, b.clone())).or_insert(0) += rank as u64;
        }
    }
    Ok(table)
}

/// `depth(S/I) = n - pd(S/I)`. The zero ideal has depth `n`.
pub fn depth_quotient(ideal: &MonomialIdeal) -> Result<DepthResult> {
    depth_quotient_with(ideal, Exec::default())
}

pub fn depth_quotient_with(ideal: &MonomialIdeal, exec: Exec) -> Result<DepthResult> {
    let table = betti(ideal, exec)?;
    Ok(DepthResult::from_pd(table.projective_dimension(), ideal.n_vars(), DepthMethod::Lattice))
}

/// Depth through polarization and Hochster's formula
/// `β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ|σ)`, `Δ` the Stanley–Reisner complex.
pub fn depth_via_polarization(ideal: &MonomialIdeal, cap: usize) -> Result<DepthResult> {
    depth_via_polarization_with(ideal, cap, Exec::default())
}

pub fn depth_via_polarization_with(ideal: &MonomialIdeal, cap: usize, exec: Exec) -> Result<DepthResult> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.n_vars();
    if ideal.is_zero() {
        return Ok(DepthResult::from_pd(0, n, DepthMethod::Polarization));
    }
    let (pol, added) = ideal.polarize();
    let total = n + added;
    let cap = cap.min(POLARIZATION_HARD_CAP);
    if total > cap {
        return Err(Error::CapExceeded { what: "polarized variable count", size: total, cap });
    }
    let gen_masks: Vec<u64> = pol
        .gens()
        .iter()
        .map(|g| g.support().iter().fold(0u64, |acc, &i| acc | (1 << i)))
        .collect();
    let full = 1u64 << total;
    let nonfaces = |f: u64| gen_masks.iter().any(|&g| g & !f == 0);
    let delta: Vec<u64> = (0..full).filter(|&f| !nonfaces(f)).collect();
    // Betti multidegrees are unions of generator supports.
    let sigmas: Vec<u64> = (1..full)
        .filter(|&s| gen_masks.iter().filter(|&&g| g & s == g).fold(0, |acc, &g| acc | g) == s)
        .collect();
    let pds: Vec<usize> = exec.map(&sigmas, |&sigma| {
        let restricted = SimplicialComplex::from_faces(delta.iter().copied().filter(|&f| f & sigma == f));
        let size = sigma.count_ones() as isize;
        restricted
            .reduced_homology()
            .nonzero()
            .map(|(dim, _)| (size - 1 - dim) as usize)
            .max()
            .unwrap_or(0)
    });
    let pd = pds.into_iter().max().unwrap_or(0);
    // pd(S/I) = pd(S_pol/I_pol), and depth is measured in the original ring.
    Ok(DepthResult::from_pd(pd, n, DepthMethod::Polarization))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalIdealCheck {
    pub associated: bool,
    pub witness: Option<Monomial>,
    pub diagnostic: Option<String>,
}

/// Whether `m = (x1..xn)` is an associated prime of `S/I`, i.e. depth zero,
/// together with a socle monomial `w ∉ I`, `x_j w ∈ I` for all `j`.
///
/// Any socle monomial satisfies `w <= lcm(G(I)) - (1..1)`, so the witness
/// search over that box is exhaustive.
pub fn max_ideal_associated(ideal: &MonomialIdeal) -> Result<MaximalIdealCheck> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.is_zero() {
        return Ok(MaximalIdealCheck { associated: false, witness: None, diagnostic: None });
    }
    let associated = depth_quotient(ideal)?.depth == 0;
    if !associated {
        return Ok(MaximalIdealCheck { associated, witness: None, diagnostic: None });
    }
    let bound: Vec<u32> = ideal.lcm_exponents().iter().map(|&e| e.saturating_sub(1)).collect();
    let box_size: usize = bound.iter().map(|&e| e as usize + 1).product();
    if box_size > WITNESS_BOX_CAP {
        return Ok(MaximalIdealCheck {
            associated,
            witness: None,
            diagnostic: Some(format!("witness box of {box_size} monomials above cap")),
        });
    }
    let mut cands = box_monomials(&bound);
    cands.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    let n = ideal.n_vars();
    let witness = cands.into_iter().find(|w| {
        !ideal.contains_unchecked(w.exps())
            && (0..n).all(|j| {
                let mut e = w.exps().to_vec();
                e[j] += 1;
                ideal.contains_unchecked(&e)
            })
    });
    let diagnostic = witness.is_none().then(|| "depth is zero but no socle monomial was found".to_string());
    Ok(MaximalIdealCheck { associated, witness, diagnostic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle_ideal, path_ideal, u_ideal};

    fn p(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, n).unwrap()
    }

    #[test]
    fn koszul_betti_of_variables() {
        for n in 1..=6usize {
            let t = betti(&MonomialIdeal::maximal(n), Exec::Sequential).unwrap();
            let mut binom = 1u64;
            for i in 0..=n {
                assert_eq!(t.total(i), binom, "beta_{i} of the maximal ideal in {n} vars");
                binom = binom * (n - i) as u64 / (i as u64 + 1);
            }
        }
    }

    #[test]
    fn betti_of_two_edges() {
        let t = betti(&p("x1*x2, x2*x3", 3), Exec::Sequential).unwrap();
        assert_eq!(t.totals(), vec![1, 2, 1]);
    }

    #[test]
    fn depth_examples() {
        for n in 1..=5 {
            let d = depth_quotient(&MonomialIdeal::maximal(n)).unwrap();
            assert_eq!(d.depth, 0);
            assert_eq!(d.depth + d.pd, d.n_vars);
        }
        assert_eq!(depth_quotient(&u_ideal(6, 2).unwrap()).unwrap().depth, 1);
        assert_eq!(depth_quotient(&MonomialIdeal::zero(4)).unwrap().depth, 4);
        assert_eq!(depth_quotient(&MonomialIdeal::unit(4)), Err(Error::UnitIdeal));
        let principal = path_ideal(3, 3).unwrap();
        assert_eq!(depth_quotient(&principal).unwrap().depth, 2);
    }

    #[test]
    fn polarization_oracle_examples() {
        let i = p("x1*x2, x2*x3", 3);
        assert_eq!(
            depth_via_polarization(&i, 14).unwrap().depth,
            depth_quotient(&i).unwrap().depth
        );
        let sq = p("x1^2", 3);
        assert_eq!(depth_via_polarization(&sq, 14).unwrap().depth, 2);
        let big = p("x1^20", 1);
        assert!(matches!(depth_via_polarization(&big, 14), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn polarization_preserves_pd() {
        let i = p("x1^2, x1*x2", 2);
        let (pol, _) = i.polarize();
        let pd_orig = betti(&i, Exec::Sequential).unwrap().projective_dimension();
        let pd_pol = betti(&pol, Exec::Sequential).unwrap().projective_dimension();
        assert_eq!(pd_orig, pd_pol);
    }

    #[test]
    fn maximal_ideal_membership() {
        let m = max_ideal_associated(&MonomialIdeal::maximal(3)).unwrap();
        assert!(m.associated);
        assert_eq!(m.witness, Some(Monomial::one(3)));

        let j = cycle_ideal(4, 3).unwrap().power(3).unwrap();
        let r = max_ideal_associated(&j).unwrap();
        assert!(r.associated);
        assert_eq!(r.witness, Some(Monomial::new(vec![2, 2, 2, 2])));

        for t in 1..=3 {
            let j = cycle_ideal(4, 2).unwrap().power(t).unwrap();
            let r = max_ideal_associated(&j).unwrap();
            assert!(!r.associated && r.witness.is_none());
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let j = cycle_ideal(5, 2).unwrap().power(2).unwrap();
        let a = betti(&j, Exec::Sequential).unwrap();
        let b = betti(&j, Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
