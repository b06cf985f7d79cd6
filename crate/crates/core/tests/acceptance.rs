//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use pathideal_core::depth::depth_quotient;
use pathideal_core::families::{cycle_ideal, phi};
use pathideal_core::harness::{run_claims, ClaimReport, HarnessConfig, RunOutput, Value};
use pathideal_core::sdepth::sdepth_quotient;

fn param(r: &ClaimReport, k: &str) -> Option<i64> {
    r.params.get(k).copied()
}

fn at(r: &ClaimReport, n: i64, m: i64, t: i64) -> bool {
    param(r, "n") == Some(n) && param(r, "m") == Some(m) && param(r, "t") == Some(t)
}

fn all_pass<'a>(rs: impl IntoIterator<Item = &'a ClaimReport>) -> (bool, usize) {
    let rs: Vec<_> = rs.into_iter().collect();
    (!rs.is_empty() && rs.iter().all(|r| r.passed()), rs.len())
}

fn elapsed(out: &RunOutput, id: &str) -> Duration {
    out.timings.iter().find(|(c, _)| c == id).map_or(Duration::MAX, |(_, d)| *d)
}

struct Line {
    ok: bool,
    detail: String,
}

fn criterion_1(out: &RunOutput) -> Line {
    let j2 = cycle_ideal(6, 3).unwrap().power(2).unwrap();
    let start = Instant::now();
    let d = depth_quotient(&j2).unwrap().depth;
    let dt = start.elapsed();
    let start = Instant::now();
    let s = sdepth_quotient(&j2).map(|r| r.sdepth);
    let st = start.elapsed();
    let (examples_ok, n) = all_pass(out.reports_for("example-3.4").filter(|r| !r.relation.starts_with("(L, x4)")));
    // The (L, x4) line checks a corrected generator list and records whether
    // the printed one matches; only its verdict matters here.
    let corrected = out.reports_for("example-3.4").filter(|r| r.relation.starts_with("(L, x4)")).all(|r| r.passed());
    Line {
        ok: d == 3 && s == Ok(3) && dt < Duration::from_secs(30) && st < Duration::from_secs(300) && examples_ok && corrected,
        detail: format!("depth {d} in {dt:.2?}, sdepth {s:?} in {st:.2?}, {n} example checks pass: {examples_ok}"),
    }
}

/// Timed on a fresh harness so no memoized value is reused.
fn criterion_2() -> Line {
    let (out, _) = run_claims(&["example-3.5"], HarnessConfig::default()).expect("known claim");
    let rs: Vec<_> = out.reports_for("example-3.5").collect();
    let find = |prefix: &str| rs.iter().any(|r| r.relation.starts_with(prefix) && r.passed());
    let final_depth = find("depth(S/J^2) = 1");
    let colon = find("(J^2 : x1x2x3x4x5x6) = ");
    let jp = find("J' = x1*x2*x3, x3*x4*x5, x4*x5*x1, x5*x1*x2");
    let (every, n) = all_pass(rs.iter().copied());
    let t = elapsed(&out, "example-3.5");
    Line {
        ok: final_depth && colon && jp && every && t < Duration::from_secs(60),
        detail: format!("depth 1: {final_depth}, colon: {colon}, J': {jp}, {n} checks pass: {every}, {t:.2?}"),
    }
}

fn criterion_3(out: &RunOutput) -> Line {
    let rs: Vec<_> = out.reports_for("theorem-1.9").collect();
    let mut ok = true;
    let mut depth_cells = 0;
    let mut sdepth_cells = 0;
    for n in 1..=7i64 {
        for m in 1..=n {
            for t in 1..=3i64 {
                let cell: Vec<_> = rs.iter().filter(|r| at(r, n, m, t)).collect();
                let depth = cell.iter().find(|r| r.relation.starts_with("depth"));
                ok &= depth.is_some_and(|r| r.passed() && r.int("depth") == Some(phi(n as u32, m as u32, t as u32)));
                depth_cells += 1;
                if n <= 5 {
                    let s = cell.iter().find(|r| r.relation.contains("sdepth"));
                    ok &= s.is_some_and(|r| r.passed());
                    sdepth_cells += 1;
                }
            }
        }
    }
    let record = rs.iter().find(|r| at(r, 5, 3, 2) && r.relation.starts_with("depth")).map(|r| {
        (r.int("phi"), r.int("printed_in_example"), r.int("depth"), matches!(r.value("resolution"), Some(Value::Text(_))))
    });
    ok &= matches!(record, Some((Some(2), Some(3), Some(2), true)));
    Line {
        ok,
        detail: format!(
            "{depth_cells} depth cells, {sdepth_cells} sdepth cells; (5,3,2) formula/printed/engine = {:?}",
            record.map(|r| (r.0, r.1, r.2))
        ),
    }
}

fn criterion_4(out: &RunOutput) -> Line {
    let rs: Vec<_> = out.reports_for("theorem-2.2").collect();
    let cell = |n: i64, m: i64, t: i64| -> Vec<&ClaimReport> { rs.iter().copied().filter(|r| at(r, n, m, t)).collect() };
    let zero = |n, m, t| {
        let c = cell(n, m, t);
        !c.is_empty() && c.iter().all(|r| r.passed() && r.int("depth") == Some(0) && r.int("sdepth") == Some(0))
    };
    let a = zero(4, 3, 3);
    let b = zero(5, 4, 4);
    let c = zero(5, 3, 2);
    let six = cell(6, 4, 5);
    let depth_one = six.iter().any(|r| r.relation.starts_with("depth") && r.passed() && r.int("depth") == Some(1));
    let s = six.iter().find(|r| r.relation.contains("sdepth"));
    // Only the n = 6 Stanley depth may be skipped, and only with a reason.
    let s_ok = s.is_some_and(|r| r.passed() || r.skipped());
    let s_note = s.map_or("missing".to_string(), |r| match r.int("sdepth") {
        Some(v) => format!("sdepth {v}"),
        None => format!("{:?}", r.verdict),
    });
    Line {
        ok: a && b && c && depth_one && s_ok,
        detail: format!("(4,3) {a}, (5,4) {b}, (5,2) {c}, (6,5) depth 1 {depth_one}, {s_note}"),
    }
}

fn criterion_5(out: &RunOutput) -> Line {
    let (lucky, nl) = all_pass(out.reports_for("lemma-1.10"));
    let expected_lucky: usize = (3..=7u32).map(|n| 2 * (n as usize - 2)).sum();
    let (block, nb) = all_pass(
        out.reports_for("lemma-2.3").filter(|r| param(r, "n").is_some_and(|n| n <= 8) && param(r, "t").is_some_and(|t| t <= 2)),
    );
    let expected_block: usize = (3..=8usize).map(|n| 2 * (n - 2)).sum();
    let mut chain = true;
    let mut nc = 0;
    for (n, m) in [(6, 3), (6, 4), (7, 3)] {
        for k in 1..=2i64 {
            let rs: Vec<_> = out
                .reports_for("lemma-3.1")
                .filter(|r| at(r, n, m, 2) && param(r, "k") == Some(k) && param(r, "part").is_some_and(|p| p <= 3))
                .collect();
            nc += rs.len();
            chain &= rs.len() >= 2 && rs.iter().all(|r| r.passed());
        }
    }
    Line {
        ok: lucky && nl == expected_lucky && block && nb == expected_block && chain,
        detail: format!("lemma-1.10 {nl}/{expected_lucky}, lemma-2.3 {nb}/{expected_block}, lemma-3.1 {nc} identities"),
    }
}

fn criterion_6(out: &RunOutput) -> Line {
    let (t211, a) = all_pass(out.reports_for("theorem-1.11").filter(|r| param(r, "n").is_some_and(|n| n <= 7)));
    let expected: usize = (3..=7usize).map(|n| 3 * (n - 2)).sum();
    let (t25, b) = all_pass(out.reports_for("theorem-2.5"));
    Line {
        ok: t211 && a == expected && t25,
        detail: format!("theorem-1.11 {a}/{expected} cells, theorem-2.5 {b} cells"),
    }
}

fn criterion_7(out: &RunOutput, total: Duration) -> Line {
    let (partitions, np) = all_pass(out.reports_for("lemma-1.2").filter(|r| param(r, "n").is_some_and(|n| n <= 5)));
    // Set partitions of 1..n with at least two blocks, n <= 5.
    let bell = [1usize, 1, 2, 5, 15, 52];
    let expected_partitions: usize = (1..=5).map(|n| bell[n] - 1).sum();
    let agreement: Vec<_> = out.reports_for("engine-agreement").collect();
    let agree_ok = agreement.iter().all(|r| !r.failed()) && agreement.iter().filter(|r| r.passed()).count() >= 50;
    let per = |id: &str| {
        let rs: Vec<_> = out.reports_for(id).collect();
        rs.iter().all(|r| !r.failed()) && rs.iter().filter(|r| r.passed()).count() >= 50
    };
    let lemmas = per("lemma-1.4") && per("lemma-1.5") && per("lemma-1.6");
    let stanley: Vec<_> = out.reports_for("stanley-inequality").collect();
    let stanley_ok = stanley.len() > 1 && stanley.iter().all(|r| r.passed());
    let certs = stanley.last().and_then(|r| r.int("certificates")).unwrap_or(0);
    let no_fail = !out.any_failed();
    Line {
        ok: partitions && np >= expected_partitions && agree_ok && lemmas && stanley_ok && no_fail && total < Duration::from_secs(600),
        detail: format!(
            "{np} partitions (>= {expected_partitions}), {} agreement checks, colon/shift lemmas {lemmas}, \
             {} quotients with sdepth >= depth, {certs} certificates verified, run {total:.1?}",
            agreement.len(),
            stanley.len() - 1
        ),
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let (out, _) = run_claims(&["all"], HarnessConfig::default()).expect("known claims");
    let total = start.elapsed();
    let lines = [
        ("1 six-cycle, m = 3, square", criterion_1(&out)),
        ("2 six-cycle, m = 4, square", criterion_2()),
        ("3 path powers against phi", criterion_3(&out)),
        ("4 m = n-1 and m = n-2", criterion_4(&out)),
        ("5 colon identities", criterion_5(&out)),
        ("6 cycle upper bounds", criterion_6(&out)),
        ("7 property suites", criterion_7(&out, total)),
    ];
    let mut failed = false;
    for (name, line) in &lines {
        println!("criterion {name}: {} ({})", if line.ok { "PASS" } else { "FAIL" }, line.detail);
        failed |= !line.ok;
    }
    let skipped = out.reports.iter().filter(|r| r.skipped()).count();
    println!("{} reports, {} skipped", out.reports.len(), skipped);
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
