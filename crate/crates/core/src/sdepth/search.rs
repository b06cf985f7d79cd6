//! Exact-cover search for interval partitions with a prescribed minimum label.
//!
//! Any partition with all top labels `>= k` can be rearranged so that each
//! interval is either a singleton `[b, b]` with `label(b) >= k`, or a fiber
//! `[c, d]` with `label(d) = k` where `c` and `d` agree outside
//! `Z_d = {i : d_i = g_i}`. A fiber contains exactly one point of label
//! `>= k`, namely its top. So the deficient points (label `< k`) are the
//! primary items of an exact cover problem, the tops are secondary items
//! (used at most once), and every fiber is an option. Whatever is left over
//! becomes singletons.
//!
//! The cover is found with dancing links, branching on the primary item with
//! the fewest live options, and remembering dead states by a Zobrist hash of
//! the covered items.

use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::partition::{PosetInterval, StanleyPartition};
use super::poset::CharacteristicPoset;
use super::refute::{find_weights, verify_weight_refutation, FiberRow};
use crate::error::{Error, Result};
use crate::exec::Exec;

pub const DEFAULT_NODE_BUDGET: u64 = 20_000_000;
pub const DEFAULT_MEMO_CAP: usize = 2_000_000;
pub const DEFAULT_LINK_CAP: usize = 12_000_000;
const PROBE_BUDGET: u64 = 400_000;
const MIN_BRANCH_BUDGET: u64 = 2_000;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Nodes per decision, shared evenly by the root branches.
    pub node_budget: u64,
    /// Dead states remembered per root branch.
    pub memo_cap: usize,
    /// Largest number of option entries materialized.
    pub link_cap: usize,
    /// Restrict the interval at the origin to one per rotation class when
    /// the poset is invariant under cyclic shifts of the variables.
    pub use_symmetry: bool,
    pub exec: Exec,
    pub seed: u64,
    /// Try a weight refutation before searching.
    pub use_relaxation: bool,
    pub relaxation_time_limit: Duration,
    /// Wall-clock limit; reaching it is reported like an exhausted budget.
    pub deadline: Option<Instant>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            memo_cap: DEFAULT_MEMO_CAP,
            link_cap: DEFAULT_LINK_CAP,
            use_symmetry: false,
            exec: Exec::default(),
            seed: 0x5d_e97b,
            use_relaxation: true,
            relaxation_time_limit: Duration::from_secs(60),
            deadline: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(StanleyPartition),
    Infeasible(Refutation),
}

/// Why no partition of the requested minimum label exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    /// This point lies in no fiber.
    UncoverablePoint(Vec<u32>),
    /// Integer weights per point id; see `verify_weight_refutation`.
    Weights(Vec<i64>),
    /// The search tree was exhausted.
    Exhausted,
}

#[derive(Clone, Debug)]
struct Row {
    lower: u32,
    top: u32,
    start: u32,
    end: u32,
    hash: u128,
    zmask: u64,
}

/// Dancing links. Node 0 is the root, nodes `1..=items` are item headers,
/// the rest are option entries stored row by row.
#[derive(Clone)]
struct Links {
    llink: Vec<u32>,
    rlink: Vec<u32>,
    up: Vec<u32>,
    down: Vec<u32>,
    top: Vec<u32>,
    row: Vec<u32>,
    len: Vec<u32>,
}

impl Links {
    fn new(primary: usize, secondary: usize) -> Self {
        let headers = primary + secondary + 1;
        let mut l = Links {
            llink: vec![0; headers],
            rlink: vec![0; headers],
            up: (0..headers as u32).collect(),
            down: (0..headers as u32).collect(),
            top: (0..headers as u32).collect(),
            row: vec![u32::MAX; headers],
            len: vec![0; headers],
        };
        for h in 0..=primary {
            l.rlink[h] = ((h + 1) % (primary + 1)) as u32;
            l.llink[(h + 1) % (primary + 1)] = h as u32;
        }
        for h in primary + 1..headers {
            l.llink[h] = h as u32;
            l.rlink[h] = h as u32;
        }
        l
    }

    fn push_entry(&mut self, item: usize, row: u32) {
        let h = item as u32 + 1;
        let x = self.top.len() as u32;
        let last = self.up[h as usize];
        self.up.push(last);
        self.down.push(h);
        self.top.push(h);
        self.row.push(row);
        self.down[last as usize] = x;
        self.up[h as usize] = x;
        self.len[h as usize] += 1;
    }

    fn hide(&mut self, x: u32, rows: &[Row]) {
        let r = &rows[self.row[x as usize] as usize];
        for y in r.start..r.end {
            if y == x {
                continue;
            }
            let (u, d) = (self.up[y as usize], self.down[y as usize]);
            self.down[u as usize] = d;
            self.up[d as usize] = u;
            self.len[self.top[y as usize] as usize] -= 1;
        }
    }

    fn unhide(&mut self, x: u32, rows: &[Row]) {
        let r = &rows[self.row[x as usize] as usize];
        for y in (r.start..r.end).rev() {
            if y == x {
                continue;
            }
            let (u, d) = (self.up[y as usize], self.down[y as usize]);
            self.down[u as usize] = y;
            self.up[d as usize] = y;
            self.len[self.top[y as usize] as usize] += 1;
        }
    }

    fn cover(&mut self, h: u32, rows: &[Row]) {
        let (l, r) = (self.llink[h as usize], self.rlink[h as usize]);
        self.rlink[l as usize] = r;
        self.llink[r as usize] = l;
        let mut x = self.down[h as usize];
        while x != h {
            self.hide(x, rows);
            x = self.down[x as usize];
        }
    }

    fn uncover(&mut self, h: u32, rows: &[Row]) {
        let mut x = self.up[h as usize];
        while x != h {
            self.unhide(x, rows);
            x = self.up[x as usize];
        }
        let (l, r) = (self.llink[h as usize], self.rlink[h as usize]);
        self.rlink[l as usize] = h;
        self.llink[r as usize] = h;
    }

    /// Cover every other item of the row through entry `x`.
    fn commit(&mut self, x: u32, rows: &[Row]) {
        let r = &rows[self.row[x as usize] as usize];
        for y in r.start..r.end {
            if y != x {
                self.cover(self.top[y as usize], rows);
            }
        }
    }

    fn uncommit(&mut self, x: u32, rows: &[Row]) {
        let r = &rows[self.row[x as usize] as usize];
        for y in (r.start..r.end).rev() {
            if y != x {
                self.uncover(self.top[y as usize], rows);
            }
        }
    }

    /// Primary item with the fewest live options; `None` when all are covered.
    fn choose(&self) -> Option<u32> {
        let mut best = None;
        let mut best_len = u32::MAX;
        let mut h = self.rlink[0];
        while h != 0 {
            let l = self.len[h as usize];
            if l < best_len {
                best_len = l;
                best = Some(h);
                if l == 0 {
                    break;
                }
            }
            h = self.rlink[h as usize];
        }
        best
    }

    fn column(&self, h: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let mut x = self.down[h as usize];
        while x != h {
            out.push(x);
            x = self.down[x as usize];
        }
        out
    }
}

struct Problem {
    links: Links,
    rows: Vec<Row>,
    n_primary: usize,
    n_tops: usize,
    /// Point id of each primary item.
    primary_ids: Vec<u32>,
}

/// Enumerate `r`-subsets of `0..n` in lex order.
fn for_each_subset(n: usize, r: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == r {
            f(cur);
            return;
        }
        for i in start..=(n - (r - cur.len())) {
            cur.push(i);
            rec(i + 1, n, r, cur, f);
            cur.pop();
        }
    }
    if r <= n {
        rec(0, n, r, &mut Vec::with_capacity(r), f);
    }
}

/// Visit every vector that agrees with `base` off `coords` and ranges over
/// `lo[j]..=hi[j]` on `coords`, last coordinate fastest.
fn for_each_in_box(base: &[u32], coords: &[usize], lo: &[u32], hi: &[u32], f: &mut dyn FnMut(&[u32])) {
    let mut cur = base.to_vec();
    for &j in coords {
        cur[j] = lo[j];
    }
    loop {
        f(&cur);
        let mut i = coords.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            let j = coords[i];
            if cur[j] < hi[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = lo[j];
        }
    }
}

fn build_problem(poset: &CharacteristicPoset, k: usize, cfg: &SearchConfig) -> Result<Problem> {
    let n = poset.n_vars();
    let g = poset.cap();
    let mut primary = vec![u32::MAX; poset.len()];
    let mut secondary = vec![u32::MAX; poset.len()];
    let (mut np, mut ns) = (0u32, 0u32);
    for (id, a) in poset.points().enumerate() {
        match poset.label(a) {
            l if l < k => {
                primary[id] = np;
                np += 1;
            }
            l if l == k => {
                secondary[id] = ns;
                ns += 1;
            }
            _ => {}
        }
    }
    let tops: Vec<usize> = (0..poset.len()).filter(|&i| secondary[i] != u32::MAX).collect();
    let primary_ids: Vec<u32> = (0..poset.len() as u32).filter(|&i| primary[i as usize] != u32::MAX).collect();
    // Entries per top: sum over lower corners c of |[c, d]|, plus the top.
    let mut total: usize = 0;
    for &d in &tops {
        let pt = poset.point(d);
        let per: usize = (0..n)
            .filter(|&j| pt[j] == g[j])
            .map(|j| {
                let m = g[j] as usize + 1;
                m * (m + 1) / 2
            })
            .product();
        total = total.saturating_add(per);
        if total > cfg.link_cap {
            return Err(Error::CapExceeded { what: "exact cover entries", size: total, cap: cfg.link_cap });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let zobrist: Vec<u128> = (0..poset.len()).map(|_| rng.gen()).collect();
    let mut links = Links::new(np as usize, ns as usize);
    let mut rows = Vec::new();
    let zero = vec![0u32; n];
    for &d in &tops {
        let pd = poset.point(d).to_vec();
        let zs: Vec<usize> = (0..n).filter(|&j| pd[j] == g[j]).collect();
        let zmask = zs.iter().fold(0u64, |m, &j| m | (1 << j));
        for_each_in_box(&pd, &zs, &zero, g, &mut |c: &[u32]| {
            if c == pd.as_slice() {
                return;
            }
            let lower = poset.id_of(c).expect("below a point of the poset");
            let start = links.top.len() as u32;
            let row_idx = rows.len() as u32;
            let mut hash = 0u128;
            for_each_in_box(c, &zs, c, g, &mut |p: &[u32]| {
                let id = poset.id_of(p).expect("interval below a poset point");
                hash ^= zobrist[id];
                if id == d {
                    links.push_entry(np as usize + secondary[id] as usize, row_idx);
                } else {
                    links.push_entry(primary[id] as usize, row_idx);
                }
            });
            rows.push(Row { lower: lower as u32, top: d as u32, start, end: links.top.len() as u32, hash, zmask });
        });
    }
    Ok(Problem { links, rows, n_primary: np as usize, n_tops: ns as usize, primary_ids })
}

impl Problem {
    fn weight_refutation(&self, cfg: &SearchConfig) -> Option<Vec<i64>> {
        let np = self.n_primary as u32;
        let items: Vec<Vec<u32>> = self
            .rows
            .iter()
            .map(|r| (r.start..r.end).map(|x| self.links.top[x as usize] - 1).filter(|&i| i < np).collect())
            .collect();
        let fibers: Vec<FiberRow<'_>> = self
            .rows
            .iter()
            .zip(&items)
            .map(|(r, p)| {
                let top_item = (r.start..r.end).map(|x| self.links.top[x as usize] - 1).find(|&i| i >= np);
                FiberRow { primary: p, top: top_item.expect("every fiber holds its top") - np }
            })
            .collect();
        find_weights(self.n_primary, self.n_tops, &fibers, cfg.relaxation_time_limit)
    }
}

enum BranchResult {
    Found(Vec<u32>),
    Exhausted,
    Budget,
    Cancelled,
}

struct Level {
    item: u32,
    x: u32,
}

/// Depth-first Algorithm X below one committed root option.
fn run_branch(
    mut links: Links,
    rows: &[Row],
    root: (u32, u32),
    branch: usize,
    best: &AtomicUsize,
    budget: u64,
    cfg: &SearchConfig,
) -> BranchResult {
    let (memo_cap, deadline) = (cfg.memo_cap, cfg.deadline);
    let (root_item, root_x) = root;
    links.cover(root_item, rows);
    links.commit(root_x, rows);
    let mut hash = rows[links.row[root_x as usize] as usize].hash;
    let mut dead: HashSet<u128> = HashSet::new();
    let mut nodes: u64 = 0;
    let mut levels: Vec<Level> = Vec::new();
    let mut descend = true;
    loop {
        if descend {
            match links.choose() {
                None => {
                    let mut chosen = vec![links.row[root_x as usize]];
                    chosen.extend(levels.iter().map(|l| links.row[l.x as usize]));
                    return BranchResult::Found(chosen);
                }
                Some(h) if links.len[h as usize] == 0 => {
                    if dead.len() < memo_cap {
                        dead.insert(hash);
                    }
                }
                Some(h) => {
                    links.cover(h, rows);
                    levels.push(Level { item: h, x: h });
                }
            }
        }
        // Advance the deepest level to its next option.
        let Some(level) = levels.last_mut() else {
            return BranchResult::Exhausted;
        };
        if level.x != level.item {
            links.uncommit(level.x, rows);
            hash ^= rows[links.row[level.x as usize] as usize].hash;
        }
        level.x = links.down[level.x as usize];
        if level.x == level.item {
            links.uncover(level.item, rows);
            levels.pop();
            if dead.len() < memo_cap {
                dead.insert(hash);
            }
            descend = false;
            continue;
        }
        nodes += 1;
        if nodes > budget {
            return BranchResult::Budget;
        }
        if nodes.is_multiple_of(4096) {
            if best.load(Ordering::Relaxed) < branch {
                return BranchResult::Cancelled;
            }
            if deadline.is_some_and(|d| Instant::now() >= d) {
                return BranchResult::Budget;
            }
        }
        let x = level.x;
        links.commit(x, rows);
        hash ^= rows[links.row[x as usize] as usize].hash;
        descend = !dead.contains(&hash);
    }
}

fn is_rotation_invariant(p: &CharacteristicPoset) -> bool {
    let g = p.cap();
    if g.iter().any(|&x| x != g[0]) {
        return false;
    }
    let n = p.n_vars();
    p.points().all(|a| {
        let mut b = vec![0; n];
        for i in 0..n {
            b[(i + 1) % n] = a[i];
        }
        p.contains(&b)
    })
}

fn rotation_minimal(mask: u64, n: usize) -> bool {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (1..n).all(|s| {
        let rot = ((mask << s) | (mask >> (n - s))) & full;
        mask <= rot
    })
}

/// A point of label `< k` lying in no fiber at all, if there is one.
pub fn uncoverable_point(poset: &CharacteristicPoset, k: usize) -> Option<usize> {
    let n = poset.n_vars();
    let g = poset.cap();
    (0..poset.len()).find(|&a| {
        let pt = poset.point(a);
        if poset.label(pt) >= k {
            return false;
        }
        let free: Vec<usize> = (0..n).filter(|&j| pt[j] < g[j]).collect();
        let need = k - (n - free.len());
        let mut d = pt.to_vec();
        let mut any = false;
        for_each_subset(free.len(), need, &mut |sel: &[usize]| {
            if any {
                return;
            }
            for &s in sel {
                d[free[s]] = g[free[s]];
            }
            any = poset.contains(&d);
            for &s in sel {
                d[free[s]] = pt[free[s]];
            }
        });
        !any
    })
}

/// A partition of the poset all of whose intervals have top label `>= k`,
/// or `Infeasible` once the search space is exhausted.
///
/// The root item is split into independent branches, one per option, each
/// with its own budget and memo. The lowest successful branch wins, so the
/// outcome and the certificate do not depend on scheduling.
pub fn has_partition_min_label(poset: &CharacteristicPoset, k: usize, cfg: &SearchConfig) -> Result<SearchOutcome> {
    let n = poset.n_vars();
    if k > n {
        return Err(Error::Parameter(format!("label bound {k} exceeds {n} variables")));
    }
    if n > 64 {
        return Err(Error::CapExceeded { what: "variables in Stanley depth search", size: n, cap: 64 });
    }
    if let Some(a) = uncoverable_point(poset, k) {
        return Ok(SearchOutcome::Infeasible(Refutation::UncoverablePoint(poset.point(a).to_vec())));
    }
    let problem = build_problem(poset, k, cfg)?;
    let timed_out = || cfg.deadline.is_some_and(|d| Instant::now() >= d);
    // A short search settles most instances; the relaxation only pays off
    // when it does not.
    let probe = cfg.node_budget.min(PROBE_BUDGET);
    match split_search(poset, &problem, probe, cfg)? {
        Some(outcome) => return Ok(outcome),
        None if probe == cfg.node_budget => return Err(Error::Budget { budget: cfg.node_budget }),
        None => {}
    }
    if timed_out() {
        return Err(Error::Timeout);
    }
    if cfg.use_relaxation {
        if let Some(w) = problem.weight_refutation(cfg) {
            let mut weights = vec![0i64; poset.len()];
            for (i, &id) in problem.primary_ids.iter().enumerate() {
                weights[id as usize] = w[i];
            }
            // Re-checked on the poset itself before it is trusted.
            if verify_weight_refutation(poset, k, &weights) {
                return Ok(SearchOutcome::Infeasible(Refutation::Weights(weights)));
            }
        }
    }
    match split_search(poset, &problem, cfg.node_budget, cfg)? {
        Some(outcome) => Ok(outcome),
        None if timed_out() => Err(Error::Timeout),
        None => Err(Error::Budget { budget: cfg.node_budget }),
    }
}

/// One branch per option of the root item, sharing `budget` nodes evenly.
/// `None` means some branch ran out of budget and none succeeded.
fn split_search(
    poset: &CharacteristicPoset,
    problem: &Problem,
    budget: u64,
    cfg: &SearchConfig,
) -> Result<Option<SearchOutcome>> {
    let (links, rows) = (&problem.links, &problem.rows);
    let Some(mut root_item) = links.choose() else {
        return Ok(Some(SearchOutcome::Found(assemble(poset, rows, &[]))));
    };
    let symmetric = cfg.use_symmetry && is_rotation_invariant(poset);
    if symmetric {
        // The origin is the first deficient point, hence primary item 0.
        root_item = 1;
    }
    let n = poset.n_vars();
    let root_options: Vec<u32> = links
        .column(root_item)
        .into_iter()
        .filter(|&x| !symmetric || rotation_minimal(rows[links.row[x as usize] as usize].zmask, n))
        .collect();

    let best = AtomicUsize::new(usize::MAX);
    let idx: Vec<usize> = (0..root_options.len()).collect();
    let budget = (budget / idx.len().max(1) as u64).max(MIN_BRANCH_BUDGET);
    let results = cfg.exec.map(&idx, |&b| {
        if best.load(Ordering::Relaxed) < b {
            return BranchResult::Cancelled;
        }
        let r = run_branch(links.clone(), rows, (root_item, root_options[b]), b, &best, budget, cfg);
        if matches!(r, BranchResult::Found(_)) {
            best.fetch_min(b, Ordering::Relaxed);
        }
        r
    });
    // A branch is only ever cancelled by a lower one, so the first success
    // is the same branch under every schedule.
    let mut budget_hit = false;
    for r in results {
        match r {
            BranchResult::Found(chosen) => return Ok(Some(SearchOutcome::Found(assemble(poset, rows, &chosen)))),
            BranchResult::Budget => budget_hit = true,
            BranchResult::Exhausted | BranchResult::Cancelled => {}
        }
    }
    Ok((!budget_hit).then_some(SearchOutcome::Infeasible(Refutation::Exhausted)))
}

fn assemble(poset: &CharacteristicPoset, rows: &[Row], chosen: &[u32]) -> StanleyPartition {
    let g = poset.cap();
    let mut used = vec![false; poset.len()];
    let mut intervals = Vec::new();
    for &r in chosen {
        let row = &rows[r as usize];
        let lower = poset.point(row.lower as usize).to_vec();
        let upper = poset.point(row.top as usize).to_vec();
        let zs: Vec<usize> = (0..g.len()).filter(|&j| upper[j] == g[j]).collect();
        for_each_in_box(&lower, &zs, &lower, g, &mut |p: &[u32]| {
            used[poset.id_of(p).expect("interval inside the poset")] = true;
        });
        intervals.push(PosetInterval { lower, upper });
    }
    for (i, p) in poset.points().enumerate() {
        if !used[i] {
            intervals.push(PosetInterval { lower: p.to_vec(), upper: p.to_vec() });
        }
    }
    intervals.sort_by(|a, b| a.lower.cmp(&b.lower));
    StanleyPartition { intervals }
}
