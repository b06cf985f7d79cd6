//! Bounds forced by a short exact sequence `0 -> U -> M -> N -> 0`.

use serde::Serialize;

use crate::error::{Error, Result};

/// An exact value or a lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Known {
    Exact(i64),
    AtLeast(i64),
}

impl Known {
    /// The best lower bound this carries.
    pub fn lower(self) -> i64 {
        match self {
            Known::Exact(v) | Known::AtLeast(v) => v,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Known::Exact(_))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Slot {
    pub depth: Option<Known>,
    pub sdepth: Option<Known>,
}

impl Slot {
    pub fn depth(v: i64) -> Self {
        Slot { depth: Some(Known::Exact(v)), sdepth: None }
    }

    pub fn both(depth: i64, sdepth: i64) -> Self {
        Slot { depth: Some(Known::Exact(depth)), sdepth: Some(Known::Exact(sdepth)) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Position {
    U,
    M,
    N,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SesRule {
    /// `depth M >= min(depth N, depth U)`.
    DepthMiddle,
    /// `depth U >= min(depth M, depth N + 1)`.
    DepthSub,
    /// `depth N >= min(depth U - 1, depth M)`.
    DepthQuotient,
    /// `sdepth M >= min(sdepth U, sdepth N)`.
    StanleyMiddle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SesBound {
    pub target: Position,
    pub stanley: bool,
    pub at_least: i64,
    pub rule: SesRule,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SesTriple {
    pub u: Slot,
    pub m: Slot,
    pub n: Slot,
    pub bounds: Vec<SesBound>,
}

impl SesTriple {
    pub fn new(u: Slot, m: Slot, n: Slot) -> Self {
        SesTriple { u, m, n, bounds: Vec::new() }
    }

    fn slot_mut(&mut self, p: Position) -> &mut Slot {
        match p {
            Position::U => &mut self.u,
            Position::M => &mut self.m,
            Position::N => &mut self.n,
        }
    }

    /// Derived bounds that an exact value falls short of.
    pub fn violations(&self) -> Vec<SesBound> {
        self.bounds
            .iter()
            .filter(|b| {
                let slot = match b.target {
                    Position::U => self.u,
                    Position::M => self.m,
                    Position::N => self.n,
                };
                let v = if b.stanley { slot.sdepth } else { slot.depth };
                matches!(v, Some(Known::Exact(x)) if x < b.at_least)
            })
            .copied()
            .collect()
    }
}

/// Apply the depth lemma (and its Stanley analogue for the middle term)
/// to every position whose two inputs are known.
///
/// Each rule is computed from the values given on entry, so the order of
/// the rules does not matter. Exact values are never replaced; an unknown
/// or weaker lower bound is raised to the derived one.
pub fn ses_depth_bounds(triple: SesTriple) -> Result<SesTriple> {
    let known = [triple.u.depth, triple.m.depth, triple.n.depth].iter().filter(|d| d.is_some()).count();
    if known < 2 {
        return Err(Error::Parameter("short exact sequence needs at least two known depths".into()));
    }
    let mut out = triple.clone();
    let (u, m, n) = (triple.u.depth.map(Known::lower), triple.m.depth.map(Known::lower), triple.n.depth.map(Known::lower));
    let mut derived = Vec::new();
    if let (Some(n), Some(u)) = (n, u) {
        derived.push((Position::M, false, n.min(u), SesRule::DepthMiddle));
    }
    if let (Some(m), Some(n)) = (m, n) {
        derived.push((Position::U, false, m.min(n + 1), SesRule::DepthSub));
    }
    if let (Some(u), Some(m)) = (u, m) {
        derived.push((Position::N, false, (u - 1).min(m), SesRule::DepthQuotient));
    }
    if let (Some(su), Some(sn)) = (triple.u.sdepth, triple.n.sdepth) {
        derived.push((Position::M, true, su.lower().min(sn.lower()), SesRule::StanleyMiddle));
    }
    for (target, stanley, at_least, rule) in derived {
        let slot = out.slot_mut(target);
        let field = if stanley { &mut slot.sdepth } else { &mut slot.depth };
        match *field {
            Some(Known::Exact(_)) => {}
            Some(Known::AtLeast(v)) if v >= at_least => {}
            _ => *field = Some(Known::AtLeast(at_least)),
        }
        out.bounds.push(SesBound { target, stanley, at_least, rule });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unknown() -> Slot {
        Slot::default()
    }

    #[test]
    fn middle_from_ends() {
        let t = ses_depth_bounds(SesTriple::new(Slot::depth(2), unknown(), Slot::depth(2))).unwrap();
        assert_eq!(t.m.depth, Some(Known::AtLeast(2)));
        assert_eq!(t.bounds[0].rule, SesRule::DepthMiddle);
    }

    #[test]
    fn sub_from_middle_and_quotient() {
        let t = ses_depth_bounds(SesTriple::new(unknown(), Slot::depth(3), Slot::depth(2))).unwrap();
        assert_eq!(t.u.depth, Some(Known::AtLeast(3)));
    }

    #[test]
    fn exact_values_are_kept() {
        let t = ses_depth_bounds(SesTriple::new(Slot::depth(1), Slot::depth(0), Slot::depth(4))).unwrap();
        assert_eq!(t.m.depth, Some(Known::Exact(0)));
        assert_eq!(t.violations().len(), 1);
        assert_eq!(t.violations()[0].target, Position::M);
    }

    #[test]
    fn under_specified() {
        assert!(ses_depth_bounds(SesTriple::new(Slot::depth(1), unknown(), unknown())).is_err());
    }

    #[test]
    fn stanley_rule() {
        let t = ses_depth_bounds(SesTriple::new(Slot::both(2, 3), unknown(), Slot::both(2, 2))).unwrap();
        assert_eq!(t.m.sdepth, Some(Known::AtLeast(2)));
    }
}
