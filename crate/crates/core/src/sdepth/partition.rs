use std::fmt;

use serde::Serialize;

use super::poset::CharacteristicPoset;
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Interval `[lower, upper]` of the characteristic poset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PosetInterval {
    pub lower: Vec<u32>,
    pub upper: Vec<u32>,
}

/// A partition of the characteristic poset into intervals.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct StanleyPartition {
    pub intervals: Vec<PosetInterval>,
}

impl StanleyPartition {
    /// `min label(upper)` over the intervals; `None` for the empty partition.
    pub fn min_label(&self, poset: &CharacteristicPoset) -> Option<usize> {
        self.intervals.iter().map(|iv| poset.label(&iv.upper)).min()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "defect", rename_all = "kebab-case")]
pub enum PartitionDefect {
    WrongAmbient { interval: usize },
    NotAnInterval { interval: usize },
    OutsidePoset { interval: usize, point: Vec<u32> },
    Overlap { point: Vec<u32> },
    Uncovered { point: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PartitionCheck {
    Valid { min_label: usize },
    Invalid(PartitionDefect),
}

impl PartitionCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, PartitionCheck::Valid { .. })
    }
}

/// Check a partition point by point: every interval lies in the poset, no
/// point is covered twice, every point is covered.
pub fn verify_partition(poset: &CharacteristicPoset, partition: &StanleyPartition) -> PartitionCheck {
    let n = poset.n_vars();
    let mut hits = vec![0u8; poset.len()];
    for (k, iv) in partition.intervals.iter().enumerate() {
        if iv.lower.len() != n || iv.upper.len() != n {
            return PartitionCheck::Invalid(PartitionDefect::WrongAmbient { interval: k });
        }
        if iv.lower.iter().zip(&iv.upper).any(|(a, b)| a > b) {
            return PartitionCheck::Invalid(PartitionDefect::NotAnInterval { interval: k });
        }
        let mut cur = iv.lower.clone();
        loop {
            match poset.id_of(&cur) {
                None => {
                    return PartitionCheck::Invalid(PartitionDefect::OutsidePoset { interval: k, point: cur })
                }
                Some(id) => {
                    if hits[id] > 0 {
                        return PartitionCheck::Invalid(PartitionDefect::Overlap { point: cur });
                    }
                    hits[id] = 1;
                }
            }
            let mut j = n;
            let mut done = true;
            while j > 0 {
                j -= 1;
                if cur[j] < iv.upper[j] {
                    cur[j] += 1;
                    done = false;
                    break;
                }
                cur[j] = iv.lower[j];
            }
            if done {
                break;
            }
        }
    }
    if let Some(id) = hits.iter().position(|&h| h == 0) {
        return PartitionCheck::Invalid(PartitionDefect::Uncovered { point: poset.point(id).to_vec() });
    }
    match partition.min_label(poset) {
        Some(min_label) => PartitionCheck::Valid { min_label },
        None => PartitionCheck::Valid { min_label: n },
    }
}

/// One summand `x^a K[Z]` of a Stanley decomposition; `vars` are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StanleySummand {
    pub monomial: Monomial,
    pub vars: Vec<usize>,
}

impl fmt::Display for StanleySummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*K[", self.monomial)?;
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{}", v + 1)?;
        }
        write!(f, "]")
    }
}

/// `[a, b] ↦ x^a K[{x_i : b_i = g_i}]`.
pub fn partition_to_decomposition(
    poset: &CharacteristicPoset,
    partition: &StanleyPartition,
) -> Result<Vec<StanleySummand>> {
    if let PartitionCheck::Invalid(defect) = verify_partition(poset, partition) {
        return Err(Error::Parameter(format!("invalid partition: {defect:?}")));
    }
    let g = poset.cap();
    Ok(partition
        .intervals
        .iter()
        .map(|iv| StanleySummand {
            monomial: Monomial::new(iv.lower.clone()),
            vars: (0..g.len()).filter(|&i| iv.upper[i] == g[i]).collect(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;
    use crate::sdepth::poset::build_poset;

    fn iv(a: &[u32], b: &[u32]) -> PosetInterval {
        PosetInterval { lower: a.to_vec(), upper: b.to_vec() }
    }

    fn edge_poset() -> CharacteristicPoset {
        build_poset(&MonomialIdeal::parse("x1*x2", 2).unwrap(), None, 100).unwrap()
    }

    #[test]
    fn valid_partition_of_an_edge() {
        let poset = edge_poset();
        let part = StanleyPartition { intervals: vec![iv(&[0, 0], &[1, 0]), iv(&[0, 1], &[0, 1])] };
        assert_eq!(verify_partition(&poset, &part), PartitionCheck::Valid { min_label: 1 });
        let dec = partition_to_decomposition(&poset, &part).unwrap();
        assert_eq!(dec[0], StanleySummand { monomial: Monomial::one(2), vars: vec![0] });
        assert_eq!(dec[0].to_string(), "1*K[x1]");
        assert_eq!(dec[1].to_string(), "x2*K[x2]");
    }

    #[test]
    fn defects_are_reported() {
        let poset = edge_poset();
        let dropped = StanleyPartition { intervals: vec![iv(&[0, 0], &[1, 0])] };
        assert!(matches!(
            verify_partition(&poset, &dropped),
            PartitionCheck::Invalid(PartitionDefect::Uncovered { .. })
        ));
        let overlap = StanleyPartition {
            intervals: vec![iv(&[0, 0], &[1, 0]), iv(&[0, 0], &[0, 1])],
        };
        assert!(matches!(
            verify_partition(&poset, &overlap),
            PartitionCheck::Invalid(PartitionDefect::Overlap { .. })
        ));
        let outside = StanleyPartition { intervals: vec![iv(&[0, 0], &[1, 1])] };
        assert!(matches!(
            verify_partition(&poset, &outside),
            PartitionCheck::Invalid(PartitionDefect::OutsidePoset { .. })
        ));
        let reversed = StanleyPartition { intervals: vec![iv(&[1, 0], &[0, 0])] };
        assert!(!verify_partition(&poset, &reversed).is_valid());
        assert!(partition_to_decomposition(&poset, &dropped).is_err());
    }

    #[test]
    fn full_singleton_decomposition() {
        let poset = build_poset(&MonomialIdeal::parse("x1^2", 1).unwrap(), None, 100).unwrap();
        let part = StanleyPartition { intervals: vec![iv(&[0], &[0]), iv(&[1], &[1])] };
        let dec = partition_to_decomposition(&poset, &part).unwrap();
        assert_eq!(dec[1].monomial, Monomial::new(vec![1]));
        assert_eq!(dec[0].vars, Vec::<usize>::new());
    }
}
