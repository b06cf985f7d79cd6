//! Checkable claims about path and cycle ideals.
//!
//! Every claim id expands to a list of [`ClaimReport`]s, one per parameter
//! instance and relation. Depth and Stanley depth values are memoized per
//! canonical ideal for the whole run, so claims that touch the same quotient
//! share work, and the final Stanley inequality sweep sees every quotient
//! that was measured.

mod background;
mod colon_chain;
mod cycle;
mod examples;
mod properties;
pub mod ses;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::depth::{depth_quotient_with, DEFAULT_POLARIZATION_CAP};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::ideal::MonomialIdeal;
use crate::sdepth::{build_poset, sdepth_quotient_with, verify_partition, SdepthConfig};

pub use background::{
    check_depth_lemma, check_phi, check_lucky, check_t212, check_teo_iran, check_variable_partitions,
};
pub use colon_chain::{check_inmt, check_obsy, check_obsy2};
pub use cycle::{check_inmt2, check_intermed, check_l1, check_t1, check_t3, t3_bound};
pub use examples::{run_example_1, run_example_2};
pub use ses::{ses_depth_bounds, Known, Position, SesBound, SesRule, SesTriple, Slot};

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Bool(bool),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub params: BTreeMap<String, i64>,
    pub values: Vec<NamedValue>,
    pub relation: String,
    /// For conditional statements: whether the hypothesis held. A false
    /// hypothesis makes the statement hold vacuously.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<bool>,
    pub verdict: Verdict,
    pub seed: u64,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn skipped(&self) -> bool {
        matches!(self.verdict, Verdict::Skipped { .. })
    }

    pub fn value(&self, name: &str) -> Option<&Value> {
        self.values.iter().find(|v| v.name == name).map(|v| &v.value)
    }

    pub fn int(&self, name: &str) -> Option<i64> {
        match self.value(name) {
            Some(Value::Int(v)) => Some(*v),
            _ => None,
        }
    }
}

/// Builder for one report.
pub(crate) struct Rb {
    report: ClaimReport,
}

impl Rb {
    pub(crate) fn new(h: &Harness, claim: &str, relation: impl Into<String>) -> Self {
        Rb {
            report: ClaimReport {
                claim: claim.to_string(),
                params: BTreeMap::new(),
                values: Vec::new(),
                relation: relation.into(),
                hypothesis: None,
                verdict: Verdict::Pass,
                seed: h.cfg.seed,
            },
        }
    }

    pub(crate) fn p(mut self, name: &str, v: impl Into<i64>) -> Self {
        self.report.params.insert(name.to_string(), v.into());
        self
    }

    pub(crate) fn int(&mut self, name: &str, v: impl TryInto<i64>) {
        let v = v.try_into().unwrap_or(i64::MAX);
        self.push(name, Value::Int(v));
    }

    pub(crate) fn flag(&mut self, name: &str, v: bool) {
        self.push(name, Value::Bool(v));
    }

    pub(crate) fn text(&mut self, name: &str, v: impl Into<String>) {
        self.push(name, Value::Text(v.into()));
    }

    pub(crate) fn ideal(&mut self, name: &str, i: &MonomialIdeal) {
        self.push(name, Value::Text(i.to_string()));
    }

    pub(crate) fn hypothesis(&mut self, holds: bool) {
        self.report.hypothesis = Some(holds);
    }

    fn push(&mut self, name: &str, value: Value) {
        self.report.values.push(NamedValue { name: name.to_string(), value });
    }

    /// Evaluate the relation; resource limits become skips, other errors fail.
    pub(crate) fn run(mut self, f: impl FnOnce(&mut Rb) -> Result<bool>) -> ClaimReport {
        match f(&mut self) {
            Ok(true) => self.report.verdict = Verdict::Pass,
            Ok(false) => self.report.verdict = Verdict::Fail,
            Err(e) if e.is_resource_limit() => self.report.verdict = Verdict::Skipped { reason: e.to_string() },
            Err(e) => {
                self.text("error", e.to_string());
                self.report.verdict = Verdict::Fail;
            }
        }
        self.report
    }

    pub(crate) fn skip(mut self, reason: impl Into<String>) -> ClaimReport {
        self.report.verdict = Verdict::Skipped { reason: reason.into() };
        self.report
    }
}

#[derive(Clone, Debug)]
pub struct HarnessConfig {
    pub seed: u64,
    /// Largest `n` for claims that only need depth.
    pub depth_n_max: u32,
    /// Largest number of variables for any Stanley depth computation.
    pub sdepth_n_max: u32,
    /// Largest `n` for Stanley depth of powers of path ideals.
    pub path_sdepth_n_max: u32,
    pub t_max: u32,
    /// Largest `t` for Stanley depth of cycle powers beyond the fixed cases.
    pub sdepth_t_max: u32,
    /// Largest `n` for the colon identities, which need no engine.
    pub colon_n_max: u32,
    /// Largest `n` for powers with exponent near `n`.
    pub high_power_n_max: u32,
    /// Number of random instances per property claim.
    pub instances: usize,
    pub polarization_cap: usize,
    pub sdepth: SdepthConfig,
    pub exec: Exec,
    /// Restrict grids to one `n`, `m` or `t`.
    pub n: Option<u32>,
    pub m: Option<u32>,
    pub t: Option<u32>,
}

/// A tenth of the engine's node budget and a short relaxation: instances
/// that need more stay undecided and are reported as skipped.
pub fn harness_sdepth_config() -> SdepthConfig {
    let mut c = SdepthConfig::default();
    c.search.node_budget = HARNESS_NODE_BUDGET;
    c.search.relaxation_time_limit = Duration::from_secs(15);
    c
}

pub const HARNESS_NODE_BUDGET: u64 = 2_000_000;

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            seed: DEFAULT_SEED,
            depth_n_max: 7,
            sdepth_n_max: 6,
            path_sdepth_n_max: 5,
            t_max: 3,
            sdepth_t_max: 3,
            colon_n_max: 8,
            high_power_n_max: 6,
            instances: 50,
            polarization_cap: DEFAULT_POLARIZATION_CAP,
            sdepth: harness_sdepth_config(),
            exec: Exec::default(),
            n: None,
            m: None,
            t: None,
        }
    }
}

impl HarnessConfig {
    /// Whether a grid cell passes the `n`, `m`, `t` filters.
    pub fn selects(&self, n: u32, m: Option<u32>, t: Option<u32>) -> bool {
        self.n.is_none_or(|x| x == n)
            && (m.is_none() || self.m.is_none_or(|x| Some(x) == m))
            && (t.is_none() || self.t.is_none_or(|x| Some(x) == t))
    }

    /// Clamp every `n` bound to `n_max`.
    pub fn with_n_max(mut self, n_max: u32) -> Self {
        self.depth_n_max = self.depth_n_max.min(n_max);
        self.sdepth_n_max = self.sdepth_n_max.min(n_max);
        self.path_sdepth_n_max = self.path_sdepth_n_max.min(n_max);
        self.colon_n_max = self.colon_n_max.min(n_max);
        self.high_power_n_max = self.high_power_n_max.min(n_max);
        self
    }
}

type Memo = Mutex<HashMap<MonomialIdeal, Arc<OnceLock<Result<usize>>>>>;

/// Shared state of one harness run.
pub struct Harness {
    pub cfg: HarnessConfig,
    depths: Memo,
    sdepths: Memo,
    bad_certificates: Mutex<Vec<String>>,
}

fn memoized(memo: &Memo, i: &MonomialIdeal, f: impl FnOnce() -> Result<usize>) -> Result<usize> {
    let cell = memo.lock().unwrap().entry(i.clone()).or_default().clone();
    cell.get_or_init(f).clone()
}

impl Harness {
    pub fn new(cfg: HarnessConfig) -> Self {
        Harness {
            cfg,
            depths: Mutex::default(),
            sdepths: Mutex::default(),
            bad_certificates: Mutex::default(),
        }
    }

    pub fn depth(&self, i: &MonomialIdeal) -> Result<usize> {
        memoized(&self.depths, i, || depth_quotient_with(i, self.cfg.exec).map(|r| r.depth))
    }

    /// Stanley depth; every certificate is re-checked against its poset.
    pub fn sdepth(&self, i: &MonomialIdeal) -> Result<usize> {
        if i.n_vars() > self.cfg.sdepth_n_max as usize {
            return Err(Error::CapExceeded {
                what: "variables for Stanley depth",
                size: i.n_vars(),
                cap: self.cfg.sdepth_n_max as usize,
            });
        }
        memoized(&self.sdepths, i, || {
            let r = sdepth_quotient_with(i, &self.cfg.sdepth)?;
            let poset = build_poset(i, self.cfg.sdepth.g.as_ref(), self.cfg.sdepth.poset_cap)?;
            if !verify_partition(&poset, &r.certificate).is_valid() {
                self.bad_certificates.lock().unwrap().push(i.to_string());
            }
            Ok(r.sdepth)
        })
    }

    pub(crate) fn rng(&self, claim: &str) -> ChaCha8Rng {
        // Each claim draws from its own stream, independent of run order.
        let salt = claim.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
        ChaCha8Rng::seed_from_u64(self.cfg.seed ^ salt)
    }

    /// Quotients with both invariants known: `(ideal, depth, sdepth)`.
    pub fn measured(&self) -> Vec<(MonomialIdeal, usize, usize)> {
        let depths = self.depths.lock().unwrap();
        let sdepths = self.sdepths.lock().unwrap();
        let mut out: Vec<_> = sdepths
            .iter()
            .filter_map(|(i, s)| {
                let s = *s.get()?.as_ref().ok()?;
                let d = *depths.get(i)?.get()?.as_ref().ok()?;
                Some((i.clone(), d, s))
            })
            .collect();
        out.sort_by_key(|a| (a.0.n_vars(), a.0.to_string()));
        out
    }

    pub fn sdepth_count(&self) -> usize {
        self.sdepths.lock().unwrap().values().filter(|c| matches!(c.get(), Some(Ok(_)))).count()
    }

    pub fn bad_certificates(&self) -> Vec<String> {
        self.bad_certificates.lock().unwrap().clone()
    }
}

pub struct ClaimInfo {
    pub id: &'static str,
    pub title: &'static str,
    run: fn(&Harness) -> Vec<ClaimReport>,
}

const REGISTRY: &[ClaimInfo] = &[
    ClaimInfo { id: "lemma-1.1", title: "depth lemma on colon sequences", run: background::depth_lemma },
    ClaimInfo { id: "lemma-1.2", title: "depth of an intersection of variable primes", run: background::variable_partitions },
    ClaimInfo { id: "lemma-1.3", title: "Stanley depth of the middle term", run: background::stanley_middle },
    ClaimInfo { id: "lemma-1.4", title: "colon by a monomial does not lower depth", run: properties::colon_monotone },
    ClaimInfo { id: "lemma-1.5", title: "colon of a multiple keeps depth", run: properties::colon_multiple },
    ClaimInfo { id: "lemma-1.6", title: "a new variable adds one", run: properties::extension_shift },
    ClaimInfo { id: "lemma-1.7", title: "depth zero, Stanley depth zero, socle", run: properties::depth_zero },
    ClaimInfo { id: "theorem-1.8", title: "powers of a sum with a complete intersection", run: background::teo_iran },
    ClaimInfo { id: "theorem-1.9", title: "depth of powers of the path ideal", run: background::phi_grid },
    ClaimInfo { id: "lemma-1.10", title: "colon by the witness monomial", run: background::lucky_grid },
    ClaimInfo { id: "theorem-1.11", title: "upper bound through the path on n-1 vertices", run: background::t212_grid },
    ClaimInfo { id: "lemma-2.1", title: "the maximal ideal as an associated prime", run: cycle::l1_grid },
    ClaimInfo { id: "theorem-2.2", title: "depth and Stanley depth for m = n-1, n-2", run: cycle::t1_grid },
    ClaimInfo { id: "lemma-2.3", title: "colon by a block of the cycle", run: cycle::inmt2_grid },
    ClaimInfo { id: "lemma-2.4", title: "depth of the block colon", run: cycle::intermed_grid },
    ClaimInfo { id: "theorem-2.5", title: "three-branch upper bound", run: cycle::t3_grid },
    ClaimInfo { id: "remark-2.6", title: "bound by two variables when n <= 2m", run: cycle::short_cycle_remark },
    ClaimInfo { id: "lemma-3.1", title: "sums and colons with powers of the last variable", run: colon_chain::inmt_grid },
    ClaimInfo { id: "proposition-3.2", title: "bounds on the slices d_k and s_k", run: colon_chain::obsy_grid },
    ClaimInfo { id: "proposition-3.3", title: "bounds through the sum with the last variable", run: colon_chain::obsy2_grid },
    ClaimInfo { id: "example-3.4", title: "square of the 3-path ideal of the 6-cycle", run: examples::example_1 },
    ClaimInfo { id: "example-3.5", title: "square of the 4-path ideal of the 6-cycle", run: examples::example_2 },
    ClaimInfo { id: "engine-agreement", title: "lattice depth against polarization", run: properties::engine_agreement },
];

/// Runs after all other claims, over everything they measured.
pub const STANLEY_INEQUALITY: &str = "stanley-inequality";

pub fn registry() -> &'static [ClaimInfo] {
    REGISTRY
}

pub fn claim_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).chain([STANLEY_INEQUALITY]).collect()
}

/// Reports of one run plus wall time per claim id.
#[derive(Clone, Debug)]
pub struct RunOutput {
    pub reports: Vec<ClaimReport>,
    pub timings: Vec<(String, Duration)>,
}

impl RunOutput {
    pub fn any_failed(&self) -> bool {
        self.reports.iter().any(ClaimReport::failed)
    }

    pub fn reports_for<'a>(&'a self, claim: &'a str) -> impl Iterator<Item = &'a ClaimReport> + 'a {
        self.reports.iter().filter(move |r| r.claim == claim)
    }

    /// One row per claim id; wall times only when `timing` is set.
    pub fn summary_markdown(&self, timing: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "| claim | pass | fail | skipped |{}", if timing { " time |" } else { "" });
        let _ = writeln!(out, "|---|---|---|---|{}", if timing { "---|" } else { "" });
        let mut totals = [0usize; 3];
        for (id, elapsed) in &self.timings {
            let mut c = [0usize; 3];
            for r in self.reports_for(id) {
                c[if r.passed() { 0 } else if r.failed() { 1 } else { 2 }] += 1;
            }
            for k in 0..3 {
                totals[k] += c[k];
            }
            let t = if timing { format!(" {:.2}s |", elapsed.as_secs_f64()) } else { String::new() };
            let _ = writeln!(out, "| {id} | {} | {} | {} |{t}", c[0], c[1], c[2]);
        }
        let _ = writeln!(out, "| total | {} | {} | {} |{}", totals[0], totals[1], totals[2], if timing { " |" } else { "" });
        out
    }
}

/// Run the named claims, or all of them for `["all"]`.
///
/// Claims run in the configured pool; reports come back in registry order
/// whatever the scheduling.
pub fn run_claims(ids: &[&str], cfg: HarnessConfig) -> Result<(RunOutput, Harness)> {
    let all = ids.contains(&"all");
    for id in ids {
        if *id != "all" && !claim_ids().contains(id) {
            return Err(Error::UnknownClaim(id.to_string()));
        }
    }
    let selected: Vec<&ClaimInfo> = REGISTRY.iter().filter(|c| all || ids.contains(&c.id)).collect();
    let h = Harness::new(cfg);
    let exec = h.cfg.exec;
    let mut results = exec.map(&selected, |c| {
        let start = Instant::now();
        let reports = (c.run)(&h);
        (c.id.to_string(), reports, start.elapsed())
    });
    if all || ids.contains(&STANLEY_INEQUALITY) {
        let start = Instant::now();
        let reports = properties::stanley_inequality(&h);
        results.push((STANLEY_INEQUALITY.to_string(), reports, start.elapsed()));
    }
    let mut out = RunOutput { reports: Vec::new(), timings: Vec::new() };
    for (id, reports, elapsed) in results {
        out.reports.extend(reports);
        out.timings.push((id, elapsed));
    }
    Ok((out, h))
}

/// Apply `f` to every cell in the pool, keeping cell order.
pub(crate) fn grid<T: Sync>(h: &Harness, cells: &[T], f: impl Fn(&T) -> Vec<ClaimReport> + Sync + Send) -> Vec<ClaimReport> {
    h.cfg.exec.map(cells, f).into_iter().flatten().collect()
}
