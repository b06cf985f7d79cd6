use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Default cap on the number of poset points.
pub const DEFAULT_POSET_CAP: usize = 100_000;
/// Boxes larger than this are not scanned at all.
const BOX_SCAN_CAP: usize = 1 << 26;
const DENSE_LOOKUP_CAP: usize = 1 << 24;

#[derive(Clone, Debug)]
enum Lookup {
    Dense(Vec<u32>),
    Sparse(HashMap<usize, u32>),
}

/// The characteristic poset of `S/I` below the cap vector `g`: every
/// exponent vector `a <= g` with `x^a ∉ I`, ordered componentwise.
///
/// Points are stored in increasing lexicographic order, which is a linear
/// extension of the componentwise order.
#[derive(Clone, Debug)]
pub struct CharacteristicPoset {
    n: usize,
    g: Vec<u32>,
    strides: Vec<usize>,
    coords: Vec<u32>,
    count: usize,
    lookup: Lookup,
}

/// All `a <= g` with `x^a ∉ I`; `g` defaults to the exponent of `lcm(G(I))`.
pub fn build_poset(ideal: &MonomialIdeal, g: Option<&Monomial>, cap: usize) -> Result<CharacteristicPoset> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.n_vars();
    let lcm = ideal.lcm_exponents();
    let g: Vec<u32> = match g {
        Some(g) => {
            if g.n_vars() != n {
                return Err(Error::AmbientMismatch { left: n, right: g.n_vars() });
            }
            if g.exps().iter().zip(&lcm).any(|(a, b)| a < b) {
                return Err(Error::Parameter(format!("cap {g} does not dominate lcm of the generators")));
            }
            g.exps().to_vec()
        }
        None => lcm,
    };
    let mut strides = vec![1usize; n];
    let mut box_size: usize = 1;
    for j in (0..n).rev() {
        strides[j] = box_size;
        box_size = box_size
            .checked_mul(g[j] as usize + 1)
            .filter(|&s| s <= BOX_SCAN_CAP)
            .ok_or(Error::CapExceeded { what: "poset box", size: usize::MAX, cap: BOX_SCAN_CAP })?;
    }
    let mut coords = Vec::new();
    let mut ids: Vec<(usize, u32)> = Vec::new();
    let mut cur = vec![0u32; n];
    let mut idx = 0usize;
    loop {
        if !ideal.contains_unchecked(&cur) {
            if ids.len() == cap {
                return Err(Error::CapExceeded { what: "characteristic poset", size: cap + 1, cap });
            }
            ids.push((idx, ids.len() as u32));
            coords.extend_from_slice(&cur);
        }
        // Odometer, last coordinate fastest, so `idx` increases by one.
        let mut j = n;
        loop {
            if j == 0 {
                let count = ids.len();
                let lookup = if box_size <= DENSE_LOOKUP_CAP {
                    let mut dense = vec![u32::MAX; box_size];
                    for (i, id) in ids {
                        dense[i] = id;
                    }
                    Lookup::Dense(dense)
                } else {
                    Lookup::Sparse(ids.into_iter().collect())
                };
                return Ok(CharacteristicPoset { n, g, strides, coords, count, lookup });
            }
            j -= 1;
            if cur[j] < g[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = 0;
        }
        idx += 1;
    }
}

impl CharacteristicPoset {
    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> &[u32] {
        &self.g
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn point(&self, id: usize) -> &[u32] {
        &self.coords[id * self.n..(id + 1) * self.n]
    }

    pub fn points(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.len()).map(move |i| self.point(i))
    }

    /// Index into the bounding box; `None` outside `[0, g]`.
    pub(crate) fn box_index(&self, a: &[u32]) -> Option<usize> {
        let mut idx = 0;
        for ((&x, &g), &stride) in a.iter().zip(&self.g).zip(&self.strides).take(self.n) {
            if x > g {
                return None;
            }
            idx += x as usize * stride;
        }
        Some(idx)
    }

    pub(crate) fn id_at(&self, box_idx: usize) -> Option<usize> {
        match &self.lookup {
            Lookup::Dense(d) => match d[box_idx] {
                u32::MAX => None,
                id => Some(id as usize),
            },
            Lookup::Sparse(m) => m.get(&box_idx).map(|&id| id as usize),
        }
    }

    pub fn id_of(&self, a: &[u32]) -> Option<usize> {
        if a.len() != self.n {
            return None;
        }
        self.box_index(a).and_then(|i| self.id_at(i))
    }

    pub fn contains(&self, a: &[u32]) -> bool {
        self.id_of(a).is_some()
    }

    /// `|{i : a_i = g_i}|`.
    pub fn label(&self, a: &[u32]) -> usize {
        a.iter().zip(&self.g).filter(|(x, y)| x == y).count()
    }

    pub fn contains_origin(&self) -> bool {
        self.contains(&vec![0; self.n])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, n).unwrap()
    }

    #[test]
    fn single_edge() {
        let poset = build_poset(&p("x1*x2", 2), None, DEFAULT_POSET_CAP).unwrap();
        let pts: Vec<Vec<u32>> = poset.points().map(|a| a.to_vec()).collect();
        assert_eq!(pts, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        assert_eq!(poset.label(&[1, 0]), 1);
        assert!(poset.contains_origin());
    }

    #[test]
    fn maximal_ideal_is_a_point() {
        let poset = build_poset(&MonomialIdeal::maximal(4), None, DEFAULT_POSET_CAP).unwrap();
        assert_eq!(poset.len(), 1);
        assert_eq!(poset.label(poset.point(0)), 0);
    }

    #[test]
    fn down_closed() {
        let i = p("x1^2*x2, x2^2*x3, x1*x3^2", 3);
        let poset = build_poset(&i, None, DEFAULT_POSET_CAP).unwrap();
        for a in poset.points() {
            for j in 0..3 {
                if a[j] > 0 {
                    let mut b = a.to_vec();
                    b[j] -= 1;
                    assert!(poset.contains(&b));
                }
            }
        }
    }

    #[test]
    fn caps_and_errors() {
        let i = p("x1*x2", 2);
        assert!(matches!(build_poset(&i, None, 2), Err(Error::CapExceeded { .. })));
        let bad = Monomial::new(vec![0, 1]);
        assert!(build_poset(&i, Some(&bad), 10).is_err());
        assert_eq!(build_poset(&MonomialIdeal::unit(2), None, 10).unwrap_err(), Error::UnitIdeal);
        let zero = build_poset(&MonomialIdeal::zero(3), None, 10).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero.label(zero.point(0)), 3);
    }
}
