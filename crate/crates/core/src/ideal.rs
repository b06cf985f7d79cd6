//! Monomial ideals with canonical minimal generating sets.

use std::collections::HashSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A monomial ideal stored by its minimal generators.
///
/// Generators are kept in decreasing lexicographic order of exponent vectors,
/// so `x1*x2` is listed before `x2*x3`. The zero ideal has no generators; the
/// whole ring is the single generator `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n_vars: usize,
    gens: Vec<Monomial>,
}

/// Unique minimal generating set of the ideal generated by `raw`.
pub fn minimalize(raw: impl IntoIterator<Item = Monomial>, n: usize) -> MonomialIdeal {
    let mut cands: Vec<Monomial> = raw.into_iter().collect();
    debug_assert!(cands.iter().all(|g| g.n_vars() == n));
    cands.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    cands.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(cands.len());
    // Boundary in `kept` between generators of strictly smaller degree and the
    // current degree: equal-degree divisibility means equality, already deduped.
    let mut lower_end = 0;
    let mut current_degree = None;
    for c in cands {
        let deg = c.degree();
        if current_degree != Some(deg) {
            lower_end = kept.len();
            current_degree = Some(deg);
        }
        if !kept[..lower_end].iter().any(|g| g.divides_unchecked(&c)) {
            kept.push(c);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    MonomialIdeal { n_vars: n, gens: kept }
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n_vars: n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n_vars: n, gens: vec![Monomial::one(n)] }
    }

    /// The maximal homogeneous ideal `(x1, ..., xn)`.
    pub fn maximal(n: usize) -> Self {
        minimalize((0..n).map(|i| Monomial::var(n, i)), n)
    }

    pub fn principal(u: Monomial) -> Self {
        let n = u.n_vars();
        MonomialIdeal { n_vars: n, gens: vec![u] }
    }

    /// Ideal generated by the given variables (0-based indices).
    pub fn variables(n: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        minimalize(vars.into_iter().map(|i| Monomial::var(n, i)), n)
    }

    pub fn from_generators(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| g.n_vars() != n) {
            return Err(Error::AmbientMismatch { left: n, right: g.n_vars() });
        }
        Ok(minimalize(gens, n))
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Minimal generators `G(I)` in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::AmbientMismatch { left: self.n_vars, right: other.n_vars });
        }
        Ok(())
    }

    fn check_mono(&self, u: &Monomial) -> Result<()> {
        if self.n_vars != u.n_vars() {
            return Err(Error::AmbientMismatch { left: self.n_vars, right: u.n_vars() });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(minimalize(self.gens.iter().chain(&other.gens).cloned(), self.n_vars))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                raw.push(g.mul_unchecked(h)?);
            }
        }
        Ok(minimalize(raw, self.n_vars))
    }

    /// `I^t` by iterated multiplication, minimalizing after every step.
    /// `I^0` is the whole ring.
    pub fn power(&self, t: u32) -> Result<Self> {
        let mut acc = Self::unit(self.n_vars);
        for _ in 0..t {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                raw.push(g.lcm_unchecked(h));
            }
        }
        Ok(minimalize(raw, self.n_vars))
    }

    /// `(I : u)` for a monomial `u`.
    pub fn colon(&self, u: &Monomial) -> Result<Self> {
        self.check_mono(u)?;
        Ok(minimalize(self.gens.iter().map(|g| g.colon_unchecked(u)), self.n_vars))
    }

    /// `u * I`.
    pub fn scale(&self, u: &Monomial) -> Result<Self> {
        self.check_mono(u)?;
        let gens = self.gens.iter().map(|g| g.mul_unchecked(u)).collect::<Result<Vec<_>>>()?;
        Ok(minimalize(gens, self.n_vars))
    }

    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        self.check_mono(u)?;
        Ok(self.contains_unchecked(u.exps()))
    }

    #[inline]
    pub(crate) fn contains_unchecked(&self, exps: &[u32]) -> bool {
        self.gens.iter().any(|g| crate::monomial::divides_slice(g.exps(), exps))
    }

    /// Ideal equality; sound because minimal generating sets are unique.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.gens == other.gens)
    }

    /// `I ∩ K[x1..xk]`, re-embedded in `k` variables.
    pub fn restrict(&self, k: usize) -> Result<Self> {
        if k == 0 || k >= self.n_vars {
            return Err(Error::Parameter(format!(
                "restrict to {k} variables needs 1 <= k < {}",
                self.n_vars
            )));
        }
        Ok(minimalize(self.gens.iter().filter_map(|g| g.restrict(k)), k))
    }

    /// `I` viewed in `n + extra` variables.
    pub fn extend(&self, extra: usize) -> Self {
        MonomialIdeal {
            n_vars: self.n_vars + extra,
            gens: self.gens.iter().map(|g| g.extend(extra)).collect(),
        }
    }

    /// Relabel variable `i` as `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n_vars {
            return Err(Error::AmbientMismatch { left: self.n_vars, right: perm.len() });
        }
        Ok(minimalize(self.gens.iter().map(|g| g.permute(perm)), self.n_vars))
    }

    /// Relabel `x_i -> x_{i+shift}` cyclically.
    pub fn cyclic_shift(&self, shift: usize) -> Self {
        let n = self.n_vars;
        let perm: Vec<usize> = (0..n).map(|i| (i + shift) % n.max(1)).collect();
        minimalize(self.gens.iter().map(|g| g.permute(&perm)), n)
    }

    /// Exponent vector of `lcm(G(I))`; all zeros for the zero ideal.
    pub fn lcm_exponents(&self) -> Vec<u32> {
        let mut top = vec![0; self.n_vars];
        for g in &self.gens {
            for (t, &e) in top.iter_mut().zip(g.exps()) {
                *t = (*t).max(e);
            }
        }
        top
    }

    /// Standard polarization. Variable `i` with largest exponent `e > 1`
    /// gains `e - 1` new variables appended after the original ones, and
    /// `x_i^a` becomes `x_i * y_{i,2} * ... * y_{i,a}`.
    pub fn polarize(&self) -> (Self, usize) {
        let top = self.lcm_exponents();
        let mut offsets = Vec::with_capacity(self.n_vars);
        let mut next = self.n_vars;
        for &e in &top {
            offsets.push(next);
            next += e.saturating_sub(1) as usize;
        }
        let total = next;
        let gens = self.gens.iter().map(|g| {
            let mut exps = vec![0u32; total];
            for (i, &a) in g.exps().iter().enumerate() {
                if a >= 1 {
                    exps[i] = 1;
                }
                for k in 1..a as usize {
                    exps[offsets[i] + k - 1] = 1;
                }
            }
            Monomial::new(exps)
        });
        (minimalize(gens, total), total - self.n_vars)
    }

    /// Generators with pairwise disjoint supports (vacuous for zero).
    pub fn is_complete_intersection(&self) -> bool {
        let mut seen = vec![false; self.n_vars];
        for g in &self.gens {
            for i in g.support() {
                if seen[i] {
                    return false;
                }
                seen[i] = true;
            }
        }
        true
    }

    /// Krull dimension of `S/I`: the largest set of variables containing
    /// the support of no generator.
    pub fn dim_quotient(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let n = self.n_vars;
        if n > 24 {
            return Err(Error::CapExceeded { what: "variables for dimension", size: n, cap: 24 });
        }
        let supports: Vec<u32> = self
            .gens
            .iter()
            .map(|g| g.support().iter().fold(0u32, |acc, &i| acc | 1 << i))
            .collect();
        Ok((0u32..1 << n)
            .filter(|&z| supports.iter().all(|&s| s & !z != 0))
            .map(|z| z.count_ones() as usize)
            .max()
            .unwrap_or(0))
    }

    /// Certificate for `I = u (I : u)`.
    pub fn is_multiple_of_colon(&self, u: &Monomial) -> Result<bool> {
        let colon = self.colon(u)?;
        Ok(colon.scale(u)? == *self)
    }

    /// Parse a comma-separated generator list; `0` (or blank) is the zero ideal.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::zero(n));
        }
        let gens = s
            .split(',')
            .map(|g| Monomial::parse(g, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(minimalize(gens, n))
    }

    /// Parse, taking the ambient ring from the largest variable index unless given.
    pub fn parse_infer(s: &str, n: Option<usize>) -> Result<Self> {
        let n = match n {
            Some(n) => n,
            None => {
                let t = s.trim();
                if t.is_empty() || t == "0" {
                    return Err(Error::Parse("the zero ideal needs an explicit variable count".into()));
                }
                let mut best = 0;
                for g in t.split(',') {
                    best = best.max(Monomial::max_var_index(g)?);
                }
                best.max(1)
            }
        };
        Self::parse(s, n)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Every monomial `u` with `0 <= u <= top` componentwise.
pub fn box_monomials(top: &[u32]) -> Vec<Monomial> {
    let n = top.len();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        out.push(Monomial::new(cur.clone()));
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < top[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Set of generators as a hash set, for order-insensitive comparisons in tests and reports.
pub fn generator_set(i: &MonomialIdeal) -> HashSet<Monomial> {
    i.gens.iter().cloned().collect()
}
