//! Depth tables for the path and cycle families.

use std::ops::RangeInclusive;

use clap::ValueEnum;
use pathideal_core::families::{cycle_ideal, path_ideal, phi};
use pathideal_core::harness::t3_bound;
use pathideal_core::sdepth::{sdepth_quotient_with, SdepthConfig};
use pathideal_core::{depth::depth_quotient_with, Exec, MonomialIdeal, Result};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Cycle,
}

/// One `(n, m, t)` cell.
///
/// For paths `phi` is `phi(n,m,t)`, the exact depth, and `sdepth_upper` is
/// `phi(n,m,1)`. For cycles `phi` is `phi(n-1,m,t)` and `depth_upper` the
/// smallest known upper bound on the depth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub family: Family,
    pub n: u32,
    pub m: u32,
    pub t: u32,
    pub depth: Option<usize>,
    pub sdepth: Option<usize>,
    pub phi: i64,
    pub depth_upper: Option<i64>,
    pub sdepth_upper: Option<i64>,
    pub verdict: String,
}

pub struct TableSpec {
    pub family: Family,
    pub n: RangeInclusive<u32>,
    pub m: RangeInclusive<u32>,
    pub t: RangeInclusive<u32>,
    pub with_sdepth: bool,
}

fn cells(spec: &TableSpec) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for n in spec.n.clone() {
        for m in spec.m.clone() {
            let valid = match spec.family {
                Family::Path => (1..=n).contains(&m),
                Family::Cycle => m >= 2 && m < n,
            };
            if valid {
                out.extend(spec.t.clone().filter(|&t| t >= 1).map(|t| (n, m, t)));
            }
        }
    }
    out
}

fn row(spec: &TableSpec, (n, m, t): (u32, u32, u32), exec: Exec, sdepth: &SdepthConfig) -> Result<TableRow> {
    let (ideal, f, depth_upper, sdepth_upper): (MonomialIdeal, i64, Option<i64>, Option<i64>) = match spec.family {
        Family::Path => (path_ideal(n, m)?.power(t)?, phi(n, m, t), Some(phi(n, m, t)), Some(phi(n, m, 1))),
        Family::Cycle => {
            let f = phi(n - 1, m, t);
            let mut upper = f + 1;
            if n > 2 * m {
                upper = upper.min(t3_bound(n, m, t));
            }
            let s_upper = (n <= 2 * m).then_some(n as i64 - 2);
            (cycle_ideal(n, m)?.power(t)?, f, Some(upper), s_upper)
        }
    };
    let depth = depth_quotient_with(&ideal, exec)?.depth;
    let mut ok = match spec.family {
        Family::Path => depth as i64 == f,
        Family::Cycle => depth_upper.is_none_or(|u| depth as i64 <= u),
    };
    let mut row = TableRow {
        family: spec.family,
        n,
        m,
        t,
        depth: Some(depth),
        sdepth: None,
        phi: f,
        depth_upper,
        sdepth_upper,
        verdict: String::new(),
    };
    if spec.with_sdepth {
        match sdepth_quotient_with(&ideal, sdepth) {
            Ok(r) => {
                let s = r.sdepth as i64;
                ok &= s >= depth as i64 && sdepth_upper.is_none_or(|u| s <= u);
                if spec.family == Family::Path {
                    ok &= s >= f;
                }
                row.sdepth = Some(r.sdepth);
            }
            Err(e) if e.is_resource_limit() => {
                row.verdict = format!("skipped: {e}");
                return Ok(row);
            }
            Err(e) => return Err(e),
        }
    }
    row.verdict = if ok { "pass" } else { "fail" }.into();
    Ok(row)
}

/// Rows in `(n, m, t)` order whatever the scheduling.
pub fn build_table(spec: &TableSpec, exec: Exec, sdepth: &SdepthConfig) -> Result<Vec<TableRow>> {
    exec.map(&cells(spec), |&c| row(spec, c, exec, sdepth)).into_iter().collect()
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or(String::new(), |v| v.to_string())
}

pub fn to_csv(rows: &[TableRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| pathideal_core::Error::Parse(e.to_string());
    w.write_record(["family", "n", "m", "t", "depth", "sdepth", "phi", "depth_upper", "sdepth_upper", "verdict"]).map_err(io)?;
    for r in rows {
        let family = match r.family {
            Family::Path => "path",
            Family::Cycle => "cycle",
        };
        w.write_record([
            family.to_string(),
            r.n.to_string(),
            r.m.to_string(),
            r.t.to_string(),
            opt(r.depth),
            opt(r.sdepth),
            r.phi.to_string(),
            opt(r.depth_upper),
            opt(r.sdepth_upper),
            r.verdict.clone(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| pathideal_core::Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn to_markdown(rows: &[TableRow]) -> String {
    let mut s = String::from("| family | n | m | t | depth | sdepth | phi | depth upper | sdepth upper | verdict |\n");
    s.push_str("|---|---|---|---|---|---|---|---|---|---|\n");
    for r in rows {
        let family = if r.family == Family::Path { "path" } else { "cycle" };
        s.push_str(&format!(
            "| {family} | {} | {} | {} | {} | {} | {} | {} | {} | {} |\n",
            r.n,
            r.m,
            r.t,
            opt(r.depth),
            opt(r.sdepth),
            r.phi,
            opt(r.depth_upper),
            opt(r.sdepth_upper),
            r.verdict
        ));
    }
    s
}
