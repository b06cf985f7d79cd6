//! Scripts for CoCoA 5 and Macaulay2 that rebuild an ideal and print its depth.

use clap::ValueEnum;
use pathideal_core::{Error, MonomialIdeal, Monomial, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Dialect {
    Cocoa,
    Macaulay2,
}

fn term(m: &Monomial, d: Dialect) -> String {
    if m.is_one() {
        return "1".into();
    }
    let var = |i: usize| match d {
        Dialect::Cocoa => format!("x[{}]", i + 1),
        Dialect::Macaulay2 => format!("x_{}", i + 1),
    };
    m.exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { var(i) } else { format!("{}^{e}", var(i)) })
        .collect::<Vec<_>>()
        .join("*")
}

fn generator_list(i: &MonomialIdeal, d: Dialect) -> String {
    if i.is_zero() {
        return "0".into();
    }
    i.gens().iter().map(|g| term(g, d)).collect::<Vec<_>>().join(", ")
}

pub fn export(i: &MonomialIdeal, d: Dialect) -> String {
    let n = i.n_vars();
    let gens = generator_list(i, d);
    match d {
        Dialect::Cocoa => format!(
            "-- S/I with I = ({i})\n\
             use S ::= QQ[x[1..{n}]];\n\
             I := ideal({gens});\n\
             println \"depth(S/I) = \", depth(S/I);\n"
        ),
        Dialect::Macaulay2 => format!(
            "-- S/I with I = ({i})\n\
             needsPackage \"Depth\";\n\
             S = QQ[x_1..x_{n}];\n\
             I = ideal({gens});\n\
             print(\"depth(S/I) = \" | toString depth(S/I));\n"
        ),
    }
}

/// The ideal defined by a script from [`export`].
pub fn parse_export(script: &str, d: Dialect) -> Result<MonomialIdeal> {
    let bad = |what: &str| Error::Parse(format!("script has no {what}"));
    let (ring_open, ring_close, ideal_line) = match d {
        Dialect::Cocoa => ("x[1..", "]]", "I := ideal("),
        Dialect::Macaulay2 => ("x_1..x_", "]", "I = ideal("),
    };
    let ring = script.lines().find(|l| l.contains(ring_open)).ok_or_else(|| bad("ring"))?;
    let from = ring.find(ring_open).unwrap() + ring_open.len();
    let n: usize = ring[from..]
        .split(ring_close)
        .next()
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| bad("variable count"))?;
    let line = script.lines().find(|l| l.starts_with(ideal_line)).ok_or_else(|| bad("ideal"))?;
    let body = line[ideal_line.len()..].trim_end_matches(';').trim_end_matches(')');
    let plain = match d {
        Dialect::Cocoa => body.replace("x[", "x").replace(']', ""),
        Dialect::Macaulay2 => body.replace("x_", "x"),
    };
    MonomialIdeal::parse(&plain, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terms() {
        let m = Monomial::parse("x1^2*x3", 3).unwrap();
        assert_eq!(term(&m, Dialect::Cocoa), "x[1]^2*x[3]");
        assert_eq!(term(&m, Dialect::Macaulay2), "x_1^2*x_3");
    }

    #[test]
    fn zero_ideal() {
        let z = MonomialIdeal::zero(3);
        for d in [Dialect::Cocoa, Dialect::Macaulay2] {
            let s = export(&z, d);
            assert!(s.contains("ideal(0)"));
            assert_eq!(parse_export(&s, d).unwrap(), z);
        }
    }
}
