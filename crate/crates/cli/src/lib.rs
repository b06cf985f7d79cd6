//! The `pathideal` command line.
//!
//! Exit codes: 0 success, 1 a verified claim failed, 2 usage or input
//! error, 3 a budget, cap or time limit was reached.

pub mod export;
pub mod table;

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use pathideal_core::depth::{depth_quotient_with, depth_via_polarization_with, DEFAULT_POLARIZATION_CAP};
use pathideal_core::families::{cycle_ideal, path_ideal, phi, t0_alpha, witness_w};
use pathideal_core::harness::{run_claims, HarnessConfig, DEFAULT_SEED, HARNESS_NODE_BUDGET};
use pathideal_core::sdepth::{build_poset, partition_to_decomposition, sdepth_quotient_with, SdepthConfig, DEFAULT_POSET_CAP};
use pathideal_core::{Error, Exec, MonomialIdeal};
use serde::Serialize;

use export::Dialect;
use table::{Family, TableSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "pathideal", version, about = "Depth and Stanley depth of powers of path and cycle ideals")]
pub struct Cli {
    #[command(flatten)]
    pub opts: RunOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunOpts {
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,
    /// Seed for the randomized property suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Search nodes per Stanley depth decision.
    #[arg(long, global = true, env = "PATHIDEAL_BUDGET", value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,
    /// Largest characteristic poset built for a Stanley depth.
    #[arg(long, global = true, default_value_t = DEFAULT_POSET_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub poset_cap: u64,
    /// Wall-clock limit in seconds for the Stanley depth work of `sdepth` and `table`.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub time_cap: Option<u64>,
    /// Use the cyclic symmetry of the poset to fix the first interval.
    #[arg(long, global = true)]
    pub symmetry: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generators of I_{n,m}^t.
    Ipath {
        n: u32,
        m: u32,
        #[arg(default_value_t = 1)]
        t: u32,
    },
    /// Generators of J_{n,m}^t.
    Jcycle {
        n: u32,
        m: u32,
        #[arg(default_value_t = 1)]
        t: u32,
    },
    /// The closed-form depth of S/I_{n,m}^t.
    Phi { n: u32, m: u32, t: u32 },
    /// t0, alpha and d for J_{n,m}, with the witness w_{t0}.
    T0 { n: u32, m: u32 },
    /// Depth of S/I as JSON.
    Depth {
        /// Generators such as `x1*x2, x2^2*x3`, or `path:n,m,t` / `cycle:n,m,t`.
        ideal: String,
        /// Number of variables; defaults to the largest index used.
        #[arg(long)]
        vars: Option<usize>,
        /// Compute through polarization instead of the lcm lattice.
        #[arg(long)]
        polarization: bool,
    },
    /// Stanley depth of S/I as JSON.
    Sdepth {
        ideal: String,
        #[arg(long)]
        vars: Option<usize>,
        /// Print the Stanley decomposition, one summand per line.
        #[arg(long)]
        emit_decomposition: bool,
    },
    /// Depth (and optionally Stanley depth) over a grid of one family.
    Table {
        #[arg(long, value_enum)]
        family: Family,
        /// `a` or `a..b`, inclusive.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<u32>,
        #[arg(long, value_parser = parse_range)]
        m: RangeInclusive<u32>,
        #[arg(long, value_parser = parse_range)]
        t: RangeInclusive<u32>,
        #[arg(long)]
        sdepth: bool,
    },
    /// Check claims; `all` runs every claim.
    Verify {
        #[arg(required = true)]
        claims: Vec<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        t: Option<u32>,
        /// Largest number of variables in any grid.
        #[arg(long)]
        n_max: Option<u32>,
        /// Write the markdown summary here instead of standard error.
        #[arg(long)]
        summary: Option<PathBuf>,
        /// Include per-claim timings in the summary.
        #[arg(long)]
        timing: bool,
    },
    /// A CAS script that rebuilds the ideal and prints its depth.
    Export {
        ideal: String,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, value_enum)]
        dialect: Dialect,
    },
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let num = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("bad bound `{x}`: {e}"));
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.trim_start_matches('='))?),
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

/// Generator text, or `path:n,m[,t]` / `cycle:n,m[,t]`.
pub fn parse_ideal(s: &str, vars: Option<usize>) -> pathideal_core::Result<MonomialIdeal> {
    for (prefix, cycle) in [("path:", false), ("cycle:", true)] {
        if let Some(rest) = s.trim().strip_prefix(prefix) {
            let p: Vec<u32> = rest
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad family parameter `{x}`"))))
                .collect::<pathideal_core::Result<_>>()?;
            let (n, m, t) = match p[..] {
                [n, m] => (n, m, 1),
                [n, m, t] => (n, m, t),
                _ => return Err(Error::Parse(format!("`{s}` needs n,m or n,m,t"))),
            };
            let base = if cycle { cycle_ideal(n, m)? } else { path_ideal(n, m)? };
            let i = base.power(t)?;
            return match vars {
                Some(v) if v < i.n_vars() => Err(Error::Parse(format!("{v} variables is fewer than {n}"))),
                Some(v) => Ok(i.extend(v - i.n_vars())),
                None => Ok(i),
            };
        }
    }
    MonomialIdeal::parse_infer(s, vars)
}

/// The parsed options turned into engine configuration.
pub struct Context {
    pub exec: Exec,
    pub sdepth: SdepthConfig,
    opts: RunOpts,
}

impl Context {
    pub fn new(opts: &RunOpts, default_budget: u64) -> Self {
        let exec = if opts.threads == Some(1) { Exec::Sequential } else { Exec::default() };
        let mut sdepth = SdepthConfig::with_exec(exec);
        sdepth.poset_cap = opts.poset_cap as usize;
        sdepth.search.node_budget = opts.budget.unwrap_or(default_budget);
        sdepth.search.use_symmetry = opts.symmetry;
        Context { exec, sdepth, opts: opts.clone() }
    }

    /// Engine configuration for one Stanley depth, with the deadline armed.
    fn sdepth_now(&self) -> SdepthConfig {
        let mut c = self.sdepth.clone();
        if let Some(secs) = self.opts.time_cap {
            c.search.deadline = Some(Instant::now() + Duration::from_secs(secs));
            c.search.relaxation_time_limit = c.search.relaxation_time_limit.min(Duration::from_secs(secs));
        }
        c
    }
}

fn limit_code(e: &Error) -> i32 {
    if e.is_resource_limit() {
        EXIT_LIMIT
    } else {
        EXIT_USAGE
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes") + "\n"
}

#[derive(Serialize)]
struct SdepthOut {
    sdepth: usize,
    poset_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Vec<IntervalOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition: Option<Vec<String>>,
}

/// An interval `[x^lower, x^upper]` of the characteristic poset.
#[derive(Serialize)]
struct IntervalOut {
    lower: String,
    upper: String,
}

impl From<&pathideal_core::sdepth::PosetInterval> for IntervalOut {
    fn from(iv: &pathideal_core::sdepth::PosetInterval) -> Self {
        IntervalOut {
            lower: pathideal_core::Monomial::new(iv.lower.clone()).to_string(),
            upper: pathideal_core::Monomial::new(iv.upper.clone()).to_string(),
        }
    }
}

#[derive(Serialize)]
struct T0Out {
    n: u32,
    m: u32,
    d: u32,
    t0: u32,
    alpha: u32,
    w_t0: String,
}

/// Set up the thread pool; only the first call in a process takes effect.
pub fn init_threads(threads: Option<u64>) {
    #[cfg(feature = "parallel")]
    if let Some(n) = threads.filter(|&n| n > 1) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n as usize).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
}

/// Run one command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    init_threads(cli.opts.threads);
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            limit_code(&e)
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> pathideal_core::Result<i32> {
    let opts = &cli.opts;
    let io = |e: std::io::Error| Error::Parse(format!("output: {e}"));
    match &cli.command {
        Command::Ipath { n, m, t } => {
            writeln!(out, "{}", path_ideal(*n, *m)?.power(*t)?).map_err(io)?;
        }
        Command::Jcycle { n, m, t } => {
            writeln!(out, "{}", cycle_ideal(*n, *m)?.power(*t)?).map_err(io)?;
        }
        Command::Phi { n, m, t } => {
            if m < &1 || m > n || t < &1 {
                return Err(Error::Parameter(format!("phi needs 1 <= m <= n and t >= 1, got n={n} m={m} t={t}")));
            }
            writeln!(out, "{}", phi(*n, *m, *t)).map_err(io)?;
        }
        Command::T0 { n, m } => {
            let d = t0_alpha(*n, *m)?;
            let w = witness_w(*n, *m, d.t0)?;
            let o = T0Out { n: *n, m: *m, d: d.d, t0: d.t0, alpha: d.alpha, w_t0: w.to_string() };
            out.write_all(json(&o).as_bytes()).map_err(io)?;
        }
        Command::Depth { ideal, vars, polarization } => {
            let i = parse_ideal(ideal, *vars)?;
            let ctx = Context::new(opts, pathideal_core::sdepth::search::DEFAULT_NODE_BUDGET);
            let r = if *polarization {
                depth_via_polarization_with(&i, DEFAULT_POLARIZATION_CAP, ctx.exec)?
            } else {
                depth_quotient_with(&i, ctx.exec)?
            };
            out.write_all(json(&r).as_bytes()).map_err(io)?;
        }
        Command::Sdepth { ideal, vars, emit_decomposition } => {
            let i = parse_ideal(ideal, *vars)?;
            let ctx = Context::new(opts, pathideal_core::sdepth::search::DEFAULT_NODE_BUDGET);
            let cfg = ctx.sdepth_now();
            let r = sdepth_quotient_with(&i, &cfg)?;
            let decomposition = if *emit_decomposition {
                let poset = build_poset(&i, cfg.g.as_ref(), cfg.poset_cap)?;
                Some(partition_to_decomposition(&poset, &r.certificate)?.iter().map(|s| s.to_string()).collect())
            } else {
                None
            };
            let o = SdepthOut {
                sdepth: r.sdepth,
                poset_size: r.poset_size,
                certificate: (!*emit_decomposition).then(|| r.certificate.intervals.iter().map(IntervalOut::from).collect()),
                decomposition,
            };
            out.write_all(json(&o).as_bytes()).map_err(io)?;
        }
        Command::Table { family, n, m, t, sdepth } => {
            let ctx = Context::new(opts, pathideal_core::sdepth::search::DEFAULT_NODE_BUDGET);
            let spec = TableSpec { family: *family, n: n.clone(), m: m.clone(), t: t.clone(), with_sdepth: *sdepth };
            let rows = table::build_table(&spec, ctx.exec, &ctx.sdepth_now())?;
            let text = match opts.format {
                Format::Json => json(&rows),
                Format::Csv => table::to_csv(&rows)?,
                Format::Markdown => table::to_markdown(&rows),
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            if rows.iter().any(|r| r.verdict == "fail") {
                return Ok(EXIT_FAILED);
            }
        }
        Command::Verify { claims, n, m, t, n_max, summary, timing } => {
            let ctx = Context::new(opts, HARNESS_NODE_BUDGET);
            let mut cfg = HarnessConfig { seed: opts.seed, exec: ctx.exec, n: *n, m: *m, t: *t, ..HarnessConfig::default() };
            cfg.sdepth.poset_cap = ctx.sdepth.poset_cap;
            cfg.sdepth.search.node_budget = ctx.sdepth.search.node_budget;
            cfg.sdepth.search.use_symmetry = opts.symmetry;
            cfg.sdepth.search.exec = ctx.exec;
            if let Some(k) = n_max {
                cfg = cfg.with_n_max(*k);
            }
            let ids: Vec<&str> = claims.iter().map(String::as_str).collect();
            let (run, _) = match run_claims(&ids, cfg) {
                Ok(r) => r,
                Err(e @ Error::UnknownClaim(_)) => {
                    writeln!(err, "error: {e}; known ids: all, {}", pathideal_core::harness::claim_ids().join(", "))
                        .map_err(io)?;
                    return Ok(EXIT_USAGE);
                }
                Err(e) => return Err(e),
            };
            out.write_all(json(&run.reports).as_bytes()).map_err(io)?;
            let md = run.summary_markdown(*timing);
            match summary {
                Some(p) => std::fs::write(p, md).map_err(io)?,
                None => err.write_all(md.as_bytes()).map_err(io)?,
            }
            if run.any_failed() {
                return Ok(EXIT_FAILED);
            }
        }
        Command::Export { ideal, vars, dialect } => {
            let i = parse_ideal(ideal, *vars)?;
            out.write_all(export::export(&i, *dialect).as_bytes()).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}
