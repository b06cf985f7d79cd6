//! Monomials as exponent vectors over a fixed number of variables.
//!
//! Text form: `x1^2*x3` (variables 1-indexed, exponent 1 elided), `1` for the
//! unit monomial.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A monomial `x^a` in `n` variables. The all-zero vector is the unit monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    /// Squarefree monomial on the given 0-based variable indices.
    pub fn squarefree(n: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut exps = vec![0; n];
        for i in support {
            exps[i] = 1;
        }
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// 0-based indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::AmbientMismatch {
                left: self.exps.len(),
                right: other.exps.len(),
            });
        }
        Ok(())
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect(),
        })
    }

    /// True iff `self | other`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        self.mul_unchecked(other)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let exps = self
            .exps
            .iter()
            .map(|&e| e.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// `self / gcd(self, u)`: the generator of `(self) : u`.
    pub fn colon(&self, u: &Self) -> Result<Self> {
        self.check_ambient(u)?;
        Ok(self.colon_unchecked(u))
    }

    /// Exact quotient `self / u`, `None` unless `u | self`.
    pub fn div(&self, u: &Self) -> Result<Option<Self>> {
        self.check_ambient(u)?;
        if !u.divides_unchecked(self) {
            return Ok(None);
        }
        Ok(Some(self.colon_unchecked(u)))
    }

    /// Pad with `extra` trailing zero exponents.
    pub fn extend(&self, extra: usize) -> Self {
        let mut exps = self.exps.clone();
        exps.resize(self.exps.len() + extra, 0);
        Monomial { exps }
    }

    /// Drop all variables from index `k` on; `None` if one of them occurs.
    pub fn restrict(&self, k: usize) -> Option<Self> {
        if self.exps[k..].iter().any(|&e| e > 0) {
            return None;
        }
        Some(Monomial { exps: self.exps[..k].to_vec() })
    }

    /// Relabel variables: variable `i` becomes variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut exps = vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm[i]] = e;
        }
        Monomial { exps }
    }

    pub(crate) fn lcm_unchecked(&self, other: &Self) -> Self {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    #[inline]
    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        divides_slice(&self.exps, &other.exps)
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Result<Self> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub(crate) fn colon_unchecked(&self, u: &Self) -> Self {
        Monomial {
            exps: self.exps.iter().zip(&u.exps).map(|(&a, &b)| a.saturating_sub(b)).collect(),
        }
    }

    /// Parse the text form in an ambient ring of `n` variables.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let mut exps = vec![0u32; n];
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial { exps });
        }
        if s.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        for factor in s.split('*') {
            let (index, exp) = parse_factor(factor.trim())?;
            if index == 0 || index > n {
                return Err(Error::Parse(format!(
                    "variable x{index} outside x1..x{n}"
                )));
            }
            exps[index - 1] = exps[index - 1].checked_add(exp).ok_or(Error::Overflow)?;
        }
        Ok(Monomial { exps })
    }

    /// Largest variable index mentioned in a text form, used to infer the ambient ring.
    pub fn max_var_index(s: &str) -> Result<usize> {
        let s = s.trim();
        if s == "1" {
            return Ok(0);
        }
        let mut best = 0;
        for factor in s.split('*') {
            best = best.max(parse_factor(factor.trim())?.0);
        }
        Ok(best)
    }
}

#[inline]
pub(crate) fn divides_slice(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn parse_factor(f: &str) -> Result<(usize, u32)> {
    let body = f
        .strip_prefix('x')
        .ok_or_else(|| Error::Parse(format!("expected a variable like x3, got `{f}`")))?;
    let (idx, exp) = match body.split_once('^') {
        Some((i, e)) => (i.trim(), e.trim()),
        None => (body, "1"),
    };
    let index = idx
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("bad variable index in `{f}`")))?;
    let exp = exp
        .parse::<u32>()
        .map_err(|_| Error::Parse(format!("bad exponent in `{f}`")))?;
    Ok((index, exp))
}

/// Lexicographic order on exponent vectors.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(m(&[1, 0]).lcm(&m(&[0, 1])).unwrap(), m(&[1, 1]));
        assert_eq!(m(&[2, 1]).lcm(&m(&[1, 3])).unwrap(), m(&[2, 3]));
        let a = m(&[3, 0, 2]);
        assert_eq!(a.lcm(&a).unwrap(), a);
        assert_eq!(
            m(&[1]).lcm(&m(&[1, 2])),
            Err(Error::AmbientMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn divides_examples() {
        assert!(m(&[1, 0]).divides(&m(&[1, 1])).unwrap());
        assert!(!m(&[2, 0]).divides(&m(&[1, 1])).unwrap());
        assert!(Monomial::one(3).divides(&m(&[0, 4, 1])).unwrap());
        assert!(m(&[1, 0]).divides(&m(&[1, 0, 0])).is_err());
    }

    #[test]
    fn text_form() {
        let a = m(&[2, 0, 1]);
        assert_eq!(a.to_string(), "x1^2*x3");
        assert_eq!(Monomial::parse("x1^2*x3", 3).unwrap(), a);
        assert_eq!(Monomial::parse(" x3 * x1^2 ", 3).unwrap(), a);
        assert_eq!(Monomial::parse("1", 2).unwrap(), Monomial::one(2));
        assert_eq!(Monomial::one(2).to_string(), "1");
        assert!(Monomial::parse("x4", 3).is_err());
        assert!(Monomial::parse("y1", 3).is_err());
        assert_eq!(Monomial::max_var_index("x2*x7^3").unwrap(), 7);
    }

    #[test]
    fn overflow_is_reported() {
        let big = m(&[u32::MAX]);
        assert_eq!(big.mul(&m(&[1])), Err(Error::Overflow));
        assert_eq!(m(&[u32::MAX / 2 + 1]).pow(2), Err(Error::Overflow));
    }

    #[test]
    fn colon_and_div() {
        assert_eq!(m(&[1, 1]).colon(&m(&[1, 0])).unwrap(), m(&[0, 1]));
        assert_eq!(m(&[2, 1]).div(&m(&[1, 1])).unwrap(), Some(m(&[1, 0])));
        assert_eq!(m(&[2, 0]).div(&m(&[1, 1])).unwrap(), None);
    }

    #[test]
    fn restrict_and_extend() {
        let a = m(&[1, 2]);
        assert_eq!(a.extend(2), m(&[1, 2, 0, 0]));
        assert_eq!(a.extend(2).restrict(2), Some(a.clone()));
        assert_eq!(m(&[1, 0, 1]).restrict(2), None);
    }
}
