//! Reduced simplicial homology over `Q` for complexes on at most 64 vertices.

use std::collections::HashMap;

use serde::Serialize;

use crate::linalg::{rank_q, SparseRow};

/// A finite simplicial complex; each face is a bitmask of vertices.
///
/// The void complex (no faces at all) differs from the irrelevant complex
/// `{∅}`: the first has no homology, the second has `H̃_{-1} = 1`.
#[derive(Clone, Debug, Default)]
pub struct SimplicialComplex {
    by_size: Vec<Vec<u64>>,
}

/// Ranks of reduced homology; `ranks[0]` is `H̃_{-1}`, `ranks[i]` is `H̃_{i-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct ReducedHomology {
    pub ranks: Vec<usize>,
}

impl ReducedHomology {
    /// Rank of `H̃_dim`, zero outside the stored range.
    pub fn get(&self, dim: isize) -> usize {
        let idx = dim + 1;
        if idx < 0 {
            return 0;
        }
        self.ranks.get(idx as usize).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// `(dim, rank)` for every nonzero group.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(i, &r)| (i as isize - 1, r))
    }
}

impl SimplicialComplex {
    /// Build from a face list that is already closed under taking subsets.
    pub fn from_faces(faces: impl IntoIterator<Item = u64>) -> Self {
        let mut by_size: Vec<Vec<u64>> = Vec::new();
        for f in faces {
            let s = f.count_ones() as usize;
            if by_size.len() <= s {
                by_size.resize(s + 1, Vec::new());
            }
            by_size[s].push(f);
        }
        for level in &mut by_size {
            level.sort_unstable();
            level.dedup();
        }
        SimplicialComplex { by_size }
    }

    /// Downward closure of the given facets.
    pub fn from_facets(facets: &[u64]) -> Self {
        let mut all = std::collections::HashSet::new();
        for &f in facets {
            // Enumerate all submasks of f.
            let mut sub = f;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        Self::from_faces(all)
    }

    pub fn is_void(&self) -> bool {
        self.by_size.iter().all(Vec::is_empty)
    }

    pub fn face_count(&self) -> usize {
        self.by_size.iter().map(Vec::len).sum()
    }

    /// Faces with `size` vertices.
    pub fn faces_of_size(&self, size: usize) -> &[u64] {
        self.by_size.get(size).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Reduced homology ranks with rational coefficients.
    pub fn reduced_homology(&self) -> ReducedHomology {
        if self.is_void() {
            return ReducedHomology::default();
        }
        let top = self.by_size.len();
        // rank_of_boundary[s] = rank of the map from faces of size s to size s-1.
        let mut boundary_rank = vec![0usize; top + 1];
        for (s, r) in boundary_rank.iter_mut().enumerate().take(top).skip(1) {
            *r = self.boundary_rank(s);
        }
        let ranks = (0..top)
            .map(|s| {
                let f = self.by_size[s].len();
                f - boundary_rank[s] - boundary_rank[s + 1]
            })
            .collect();
        ReducedHomology { ranks }
    }

    fn boundary_rank(&self, size: usize) -> usize {
        let upper = &self.by_size[size];
        let lower = &self.by_size[size - 1];
        if upper.is_empty() || lower.is_empty() {
            return 0;
        }
        let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let rows: Vec<SparseRow> = upper
            .iter()
            .map(|&face| {
                let mut row: SparseRow = Vec::with_capacity(size);
                let mut rest = face;
                let mut k = 0;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    let facet = face ^ bit;
                    let col = *index.get(&facet).expect("complex not closed under subsets");
                    row.push((col, if k % 2 == 0 { 1 } else { -1 }));
                    k += 1;
                }
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect();
        rank_q(rows)
    }
}
