//! The lcm lattice of a monomial ideal and the homology of its open intervals.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::homology::{ReducedHomology, SimplicialComplex};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Largest open interval handed to the order-complex construction.
pub const ORDER_COMPLEX_VERTEX_CAP: usize = 64;
/// Largest number of chains materialized for one order complex.
pub const ORDER_COMPLEX_FACE_CAP: usize = 1 << 21;

/// All lcms of nonempty subsets of `G(I)`, ordered by divisibility, plus a
/// formal bottom element that is not stored.
#[derive(Clone, Debug)]
pub struct LcmLattice {
    n_vars: usize,
    elements: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    atoms: Vec<usize>,
}

/// Close `G(I)` under pairwise lcm.
pub fn build_lcm_lattice(ideal: &MonomialIdeal) -> Result<LcmLattice> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let gens = ideal.gens();
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let mut elements: Vec<Monomial> = Vec::new();
    for g in gens {
        index.insert(g.clone(), elements.len());
        elements.push(g.clone());
    }
    // Every lcm of a subset is an iterated lcm with single generators.
    let mut next = 0;
    while next < elements.len() {
        let e = elements[next].clone();
        next += 1;
        for g in gens {
            let l = e.lcm_unchecked(g);
            if !index.contains_key(&l) {
                index.insert(l.clone(), elements.len());
                elements.push(l);
            }
        }
    }
    elements.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    let index: HashMap<Monomial, usize> =
        elements.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let atoms = gens.iter().map(|g| index[g]).collect();
    Ok(LcmLattice { n_vars: ideal.n_vars(), elements, index, atoms })
}

impl LcmLattice {
    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Elements in a linear extension of divisibility (degree, then lex).
    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.index.contains_key(m)
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Element indices of the minimal generators.
    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    /// `lcm(G(I))`.
    pub fn top(&self) -> &Monomial {
        self.elements.last().expect("lattice of a nonzero ideal is nonempty")
    }

    /// Indices of elements strictly dividing `m`, in linear-extension order.
    pub fn strictly_below(&self, m: &Monomial) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&i| self.elements[i] != *m && self.elements[i].divides_unchecked(m))
            .collect()
    }

    /// Lower covers of element `i` in the Hasse diagram.
    pub fn lower_covers(&self, i: usize) -> Vec<usize> {
        let below = self.strictly_below(&self.elements[i]);
        below
            .iter()
            .copied()
            .filter(|&j| {
                !below.iter().any(|&k| {
                    k != j
                        && self.elements[j].divides_unchecked(&self.elements[k])
                        && self.elements[j] != self.elements[k]
                })
            })
            .collect()
    }
}

/// Reduced homology of the order complex of the open interval `(0̂, top)`.
///
/// An empty interval (top is a generator) gives `H̃_{-1} = 1`.
pub fn open_interval_homology(lattice: &LcmLattice, top: &Monomial) -> Result<ReducedHomology> {
    if !lattice.contains(top) {
        return Err(Error::Parameter(format!("{top} is not in the lcm lattice")));
    }
    let below = lattice.strictly_below(top);
    if below.len() > ORDER_COMPLEX_VERTEX_CAP {
        return Err(Error::CapExceeded {
            what: "open interval",
            size: below.len(),
            cap: ORDER_COMPLEX_VERTEX_CAP,
        });
    }
    let elems: Vec<&Monomial> = below.iter().map(|&i| &lattice.elements()[i]).collect();
    let k = elems.len();
    // succ[i]: later elements strictly above element i.
    let succ: Vec<u64> = (0..k)
        .map(|i| {
            (i + 1..k)
                .filter(|&j| elems[i] != elems[j] && elems[i].divides_unchecked(elems[j]))
                .fold(0u64, |acc, j| acc | (1u64 << j))
        })
        .collect();
    let mut faces = vec![0u64];
    let mut stack: Vec<(u64, u64)> = (0..k).map(|i| (1u64 << i, succ[i])).collect();
    while let Some((chain, ext)) = stack.pop() {
        faces.push(chain);
        if faces.len() > ORDER_COMPLEX_FACE_CAP {
            return Err(Error::CapExceeded {
                what: "order complex",
                size: faces.len(),
                cap: ORDER_COMPLEX_FACE_CAP,
            });
        }
        let mut rest = ext;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            stack.push((chain | (1u64 << j), ext & succ[j]));
        }
    }
    Ok(SimplicialComplex::from_faces(faces).reduced_homology())
}
