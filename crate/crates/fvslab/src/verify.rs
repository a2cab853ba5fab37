//! Verification suites over exhaustive, named, random and family corpora.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use fvslab_core::construct::{fvs_planar_girth5_with, fvs_subcubic_with, verify_certificate, ConstructConfig, FvsCertificate};
use fvslab_core::exact::{is_feedback_vertex_set, phi};
use fvslab_core::family::{family_fvs, forbidden_family, r_of, FamilyCatalog, FamilyMember, FvsTarget, Recognizer};
use fvslab_core::named::*;
use fvslab_core::ops::subdivide_edge;
use fvslab_core::planarity::is_planar;
use fvslab_core::structure::{girth, has_girth_at_least, has_two_disjoint_short_cycles, is_internally_3ec, is_two_connected, short_cycles};
use fvslab_core::{are_isomorphic, Error, Graph, Result, Sevenths};
use serde_json::{json, Value};

use crate::corpus::{named_corpus, random_planar_corpus};
use crate::enumerate::{for_each_graph, Filters};
use crate::report::{graph_id, Girth, GraphReport, Status, Summary};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Bounds,
    FamilyLemmas,
    Claims,
    All,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Bounds => "bounds",
            Suite::FamilyLemmas => "family_lemmas",
            Suite::Claims => "claims",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "bounds" => Ok(Suite::Bounds),
            "family_lemmas" | "family-lemmas" => Ok(Suite::FamilyLemmas),
            "claims" => Ok(Suite::Claims),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite `{s}`")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub suite: Suite,
    /// Exhaustive corpus size; `None` means 11 for planar girth-5 graphs and
    /// 14 for subcubic girth-5 graphs.
    pub max_n: Option<usize>,
    pub seed: u64,
    pub random_count: usize,
    pub random_max_n: usize,
    /// Size of the exhaustive corpus of subcubic graphs of any girth.
    pub general_max_n: usize,
    /// Families are generated for `i + 3j <= family_cap`.
    pub family_cap: usize,
    /// Per-edge and per-vertex family checks run on members this small.
    pub family_fvs_max_n: usize,
    pub fallback_exact: bool,
    pub workers: usize,
    /// Record wall-clock milliseconds; off gives byte-identical reports.
    pub timing: bool,
    /// Verify these graphs instead of the built-in corpora.
    pub input: Option<Vec<Graph>>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            suite: Suite::All,
            max_n: None,
            seed: 1,
            random_count: 500,
            random_max_n: 24,
            general_max_n: 12,
            family_cap: 16,
            family_fvs_max_n: 14,
            fallback_exact: false,
            workers: default_workers(),
            timing: true,
            input: None,
        }
    }
}

/// `FVSLAB_WORKERS` if set, else the available parallelism.
pub fn default_workers() -> usize {
    let hw = std::thread::available_parallelism().map_or(1, usize::from);
    match std::env::var("FVSLAB_WORKERS").ok().and_then(|s| s.parse::<usize>().ok()) {
        Some(k) if k >= 1 => k,
        _ => hw,
    }
}

pub struct Verification {
    pub header: Value,
    pub rows: Vec<GraphReport>,
    pub summary: Summary,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.failed_checks() == 0
    }
}

#[derive(Clone)]
enum Job {
    /// Certify with whichever engine accepts the graph.
    Bound(String, Graph),
    /// Certify with the subcubic engine and check the error-term properties.
    Subcubic(String, Graph),
    Family(FamilyMember, bool),
}

struct Outcome {
    row: GraphReport,
    checks: Vec<(&'static str, bool)>,
    observations: Vec<&'static str>,
}

pub fn run_verification(cfg: &VerifyConfig) -> Result<Verification> {
    let mut summary = Summary::default();
    let mut jobs = Vec::new();
    let wants = |s: Suite| cfg.suite == s || cfg.suite == Suite::All;
    if let Some(input) = &cfg.input {
        let kind = if cfg.suite == Suite::Claims { Job::Subcubic } else { Job::Bound };
        jobs.extend(input.iter().map(|g| kind("input".into(), g.clone())));
    } else {
        if wants(Suite::Bounds) {
            jobs.extend(named_corpus().into_iter().map(|(k, g)| Job::Bound(format!("named:{k}"), g)));
            let f = Filters { connected: true, planar: true, girth_min: Some(5), ..Filters::default() };
            for_each_graph(cfg.max_n.unwrap_or(11), &f, |g| jobs.push(Job::Bound("planar5".into(), g.clone())))?;
            let random = random_planar_corpus(cfg.seed, cfg.random_count, cfg.random_max_n);
            jobs.extend(random.into_iter().map(|g| Job::Bound("random-planar5".into(), g)));
        }
        if wants(Suite::Claims) {
            let f = Filters { connected: true, subcubic: true, girth_min: Some(5), forbidden_free: true, no_two_disjoint_short_cycles: true, planar: false };
            for_each_graph(cfg.max_n.unwrap_or(14), &f, |g| jobs.push(Job::Subcubic("subcubic5".into(), g.clone())))?;
            let f = Filters { girth_min: None, ..f };
            for_each_graph(cfg.general_max_n, &f, |g| {
                if !has_girth_at_least(g, 5) {
                    jobs.push(Job::Subcubic("subcubic".into(), g.clone()));
                }
            })?;
        }
        if wants(Suite::FamilyLemmas) {
            let mut catalog = FamilyCatalog::new(cfg.family_cap);
            for (name, ok) in cell_checks(&mut catalog)? {
                summary.check(name, ok);
            }
            summary.observe("forbidden_family_size", forbidden_family().len());
            for (i, j) in family_cells(cfg.family_cap) {
                for m in catalog.get(i, j)? {
                    let per_element = m.graph.n() <= cfg.family_fvs_max_n;
                    jobs.push(Job::Family(m.clone(), per_element));
                }
            }
        }
    }

    let ccfg = ConstructConfig { fallback_exact: cfg.fallback_exact };
    let outcomes = run_pool(&jobs, cfg.workers.max(1), |job| evaluate(job, &ccfg, cfg.timing));
    let mut rows = Vec::with_capacity(outcomes.len());
    for o in outcomes {
        summary.add_row(&o.row);
        for (name, ok) in o.checks {
            summary.check(name, ok);
        }
        for name in o.observations {
            summary.observe(name, 1);
        }
        rows.push(o.row);
    }
    let header = json!({
        "suite": cfg.suite.as_str(),
        "seed": cfg.seed,
        "max_n": cfg.max_n,
        "random_count": cfg.random_count,
        "random_max_n": cfg.random_max_n,
        "general_max_n": cfg.general_max_n,
        "family_cap": cfg.family_cap,
        "family_fvs_max_n": cfg.family_fvs_max_n,
        "fallback_exact": cfg.fallback_exact,
        "input": cfg.input.is_some(),
    });
    Ok(Verification { header, rows, summary })
}

/// Every `(i, j)` with `j <= i` and `i + 3j <= cap`.
pub fn family_cells(cap: usize) -> Vec<(u32, u32)> {
    let cap = cap as u32;
    let mut out = Vec::new();
    for j in 0..=cap / 3 {
        for i in j.max(1)..=cap.saturating_sub(3 * j) {
            out.push((i, j));
        }
    }
    out
}

/// Results in input order, computed on `workers` threads.
fn run_pool<T: Sync, R: Send>(items: &[T], workers: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let next = AtomicUsize::new(0);
    let mut parts: Vec<Vec<(usize, R)>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers.min(items.len()).max(1))
            .map(|_| {
                s.spawn(|| {
                    let mut got = Vec::new();
                    loop {
                        let k = next.fetch_add(1, Ordering::Relaxed);
                        if k >= items.len() {
                            break got;
                        }
                        got.push((k, f(&items[k])));
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut all: Vec<(usize, R)> = parts.drain(..).flatten().collect();
    all.sort_by_key(|(k, _)| *k);
    all.into_iter().map(|(_, r)| r).collect()
}

fn evaluate(job: &Job, ccfg: &ConstructConfig, timing: bool) -> Outcome {
    let start = Instant::now();
    let mut o = match job {
        Job::Bound(corpus, g) => bound_job(corpus, g, ccfg, false),
        Job::Subcubic(corpus, g) => bound_job(corpus, g, ccfg, true),
        Job::Family(m, per_element) => family_job(m, *per_element),
    };
    o.row.millis = if timing { start.elapsed().as_millis() as u64 } else { 0 };
    o
}

fn base_row(corpus: &str, g: &Graph) -> GraphReport {
    GraphReport {
        graph_id: graph_id(g),
        corpus: corpus.to_string(),
        n: g.n(),
        m: g.m(),
        girth: Girth(girth(g).unwrap_or(None)),
        planar: is_planar(g),
        exact_phi: None,
        constructive_size: None,
        bound_numerator: Sevenths::base_bound(g.n(), g.m()).numerator(),
        r_numerator: 0,
        status: Status::Skipped,
        millis: 0,
        failed_checks: Vec::new(),
    }
}

fn finish(mut row: GraphReport, checks: Vec<(&'static str, bool)>, observations: Vec<&'static str>, fallback: bool) -> Outcome {
    row.failed_checks = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.to_string()).collect();
    if row.status != Status::Skipped || !row.failed_checks.is_empty() {
        row.status = if !row.failed_checks.is_empty() {
            Status::Fail
        } else if fallback {
            Status::Fallback
        } else {
            Status::Pass
        };
    }
    Outcome { row, checks, observations }
}

fn bound_job(corpus: &str, g: &Graph, ccfg: &ConstructConfig, subcubic_props: bool) -> Outcome {
    let mut row = base_row(corpus, g);
    let mut checks = Vec::new();
    let mut observations = Vec::new();
    if g.is_empty() {
        return finish(row, checks, observations, false);
    }
    let exact = phi(g);
    row.exact_phi = Some(exact);
    let planar5 = !subcubic_props && g.is_connected() && g.is_simple() && row.planar && has_girth_at_least(g, 5);
    let got = if planar5 { fvs_planar_girth5_with(g, ccfg) } else { fvs_subcubic_with(g, ccfg) };
    let cert = match got {
        Ok(c) => c,
        Err(Error::Domain(_)) => {
            if let Ok(r) = r_of(g) {
                row.r_numerator = r.numerator();
                row.bound_numerator += r.numerator();
            }
            if subcubic_props {
                checks.push(("accepted-input", false));
            }
            return finish(row, checks, observations, false);
        }
        Err(_) => {
            row.status = Status::Fail;
            checks.push(("certified", false));
            return finish(row, checks, observations, false);
        }
    };
    row.status = Status::Pass;
    row.constructive_size = Some(cert.witness.len());
    row.bound_numerator = cert.bound_numerator;
    row.r_numerator = cert.r_value.numerator();
    cert_checks(g, &cert, exact, &mut checks);
    if planar5 {
        let (n, m) = (g.n(), g.m());
        checks.push(("edge-ratio", 5 * exact <= m));
        checks.push(("vertex-ratio", n < 4 || 3 * exact + 2 <= n));
        checks.push(("planar-girth5-r-zero", cert.r_value == Sevenths::ZERO));
    }
    if subcubic_props {
        error_term_checks(g, cert.r_value, &mut checks);
        if cert.witness.len() > exact + 1 {
            observations.push("witness-exceeds-phi-by-2-or-more");
        }
        if cert.witness.len() > exact {
            observations.push("witness-above-phi");
        }
    }
    finish(row, checks, observations, cert.fallback_used)
}

fn cert_checks(g: &Graph, c: &FvsCertificate, exact: usize, checks: &mut Vec<(&'static str, bool)>) {
    checks.push(("certificate", verify_certificate(g, c)));
    checks.push(("trace", c.trace_decreases() && c.trace_assembles_witness()));
    checks.push(("oracle-below-witness", exact <= c.witness.len()));
    checks.push(("oracle-within-bound", 7 * exact as i64 <= c.bound_numerator));
}

fn error_term_checks(g: &Graph, r: Sevenths, checks: &mut Vec<(&'static str, bool)>) {
    checks.push(("r-at-most-4", r <= Sevenths(4)));
    let k4 = are_isomorphic(g, &complete(4));
    checks.push(("r-at-most-3-off-k4", k4 || r <= Sevenths(3)));
    checks.push(("r-3-has-triangle", r != Sevenths(3) || girth(g).ok().flatten() == Some(3)));
    if r > Sevenths::ZERO && is_two_connected(g) {
        let cap = 2 * g.m() as i64 - g.n() as i64 - 5 + r.numerator();
        let ok = g.edges().into_iter().all(|(u, v)| 7 * phi(&g.without_edge(u, v).expect("edge")) as i64 <= cap);
        checks.push(("edge-deletion-bound", ok));
    }
    if has_girth_at_least(g, 5) {
        let sig = Recognizer::new().signature(g).map(|s| (s.i, s.j));
        if !matches!(sig, Some((3, 3) | (4, 4))) {
            checks.push(("girth5-r-zero", r == Sevenths::ZERO));
        }
    }
    if g.min_degree() == 3 && g.max_degree() == 3 && is_internally_3ec(g) {
        checks.push(("three-disjoint-paths", three_connected_pairs(g)));
    }
}

/// Every pair of vertices is joined by three internally disjoint paths.
fn three_connected_pairs(g: &Graph) -> bool {
    let vs = g.vertices();
    vs.iter().enumerate().all(|(k, &s)| vs[k + 1..].iter().all(|&t| disjoint_paths(g, s, t, 3) >= 3))
}

/// Internally disjoint `s`-`t` paths, up to `limit`, by augmenting paths in the
/// split graph where vertex `v` becomes `2v -> 2v+1` of capacity one.
fn disjoint_paths(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.n();
    let (si, ti) = (g.index_of(s).expect("vertex"), g.index_of(t).expect("vertex"));
    let mut cap = vec![vec![0i32; 2 * n]; 2 * n];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == si || v == ti { limit as i32 } else { 1 };
    }
    for (u, v) in g.edges() {
        let (a, b) = (g.index_of(u).expect("vertex"), g.index_of(v).expect("vertex"));
        if a != b {
            cap[2 * a + 1][2 * b] += 1;
            cap[2 * b + 1][2 * a] += 1;
        }
    }
    let (src, dst) = (2 * si + 1, 2 * ti);
    let mut flow = 0;
    while flow < limit {
        let mut prev = vec![usize::MAX; 2 * n];
        prev[src] = src;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for y in 0..2 * n {
                if cap[x][y] > 0 && prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[dst] == usize::MAX {
            break;
        }
        let mut y = dst;
        while y != src {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

fn family_job(member: &FamilyMember, per_element: bool) -> Outcome {
    let g = &member.graph;
    let (i, j) = (member.signature.i, member.signature.j);
    let mut row = base_row(&format!("F({i},{j})"), g);
    let eps = member.signature.epsilon();
    let cap = Sevenths::base_bound(g.n(), g.m()) + eps;
    row.r_numerator = eps.numerator();
    row.bound_numerator = cap.numerator();
    let mut checks = Vec::new();
    let (iu, ju) = (i as usize, j as usize);

    checks.push((
        "counts",
        g.n() == iu + 3 * ju && g.m() == iu + 5 * ju && member.degree2_count() == iu - ju
            && 2 * g.m() as i64 - g.n() as i64 + 2 == i as i64 + 2 + 7 * j as i64,
    ));
    checks.push(("simple-unless-short-cycle", g.is_simple() != (j == 0 && i <= 2)));
    if matches!((i, j), (3, 2) | (4, 1)) {
        checks.push(("girth-at-most-4", !has_girth_at_least(g, 5)));
    }
    if (i, j) == (2, 2) {
        checks.push(("f22-disjoint-short-cycles", has_two_disjoint_short_cycles(g)));
        if !are_isomorphic(g, &cube()) && !are_isomorphic(g, &wagner()) {
            checks.push(("f22-triangle-and-short-cycle", triangle_disjoint_from_short_cycle(g)));
        }
    }
    let planar = row.planar;
    if planar && has_girth_at_least(g, 5) {
        checks.push(("planar-girth5-needs-i5", i >= 5));
    }
    if planar && g.is_simple() && j > 0 {
        let girth5_minus_edge = g.edges().into_iter().any(|(u, v)| has_girth_at_least(&g.without_edge(u, v).expect("edge"), 5));
        if girth5_minus_edge {
            checks.push(("planar-minus-edge-needs-i4", i >= 4));
        }
    }

    let exact = phi(g);
    row.exact_phi = Some(exact);
    match family_fvs(member, FvsTarget::Whole) {
        Ok(s) => {
            row.constructive_size = Some(s.len());
            checks.push(("whole-fvs", fvs_within(g, &s, cap.numerator()) && exact <= s.len()));
        }
        Err(_) => checks.push(("whole-fvs", false)),
    }
    if per_element {
        let rec_ok = Recognizer::new().signature(g).is_some_and(|s| s == member.signature);
        checks.push(("recognized", rec_ok));
        let mut edges = g.edges();
        edges.dedup();
        let edge_ok = edges.into_iter().all(|(u, v)| {
            let h = g.without_edge(u, v).expect("edge");
            let oracle = 7 * (phi(&h) as i64 + 1) <= cap.numerator();
            match family_fvs(member, FvsTarget::WithoutEdge(u, v)) {
                Ok(s) => oracle && fvs_within(&h, &s, cap.numerator() - 7) && phi(&h) <= s.len(),
                Err(_) => false,
            }
        });
        checks.push(("edge-deletion-fvs", edge_ok));
        let vertex_ok = g.vertices().iter().all(|&v| {
            let oracle = 7 * (phi(&g.without_vertex(v)) as i64 + 1) <= cap.numerator();
            match family_fvs(member, FvsTarget::Containing(v)) {
                Ok(s) => oracle && s.contains(&v) && fvs_within(g, &s, cap.numerator()),
                Err(_) => false,
            }
        });
        checks.push(("vertex-fvs", vertex_ok));
    }
    row.status = Status::Pass;
    finish(row, checks, Vec::new(), false)
}

fn fvs_within(g: &Graph, s: &[usize], bound_numerator: i64) -> bool {
    let mut d = s.to_vec();
    d.sort_unstable();
    d.dedup();
    d.len() == s.len() && 7 * s.len() as i64 <= bound_numerator && is_feedback_vertex_set(g, s).unwrap_or(false)
}

fn triangle_disjoint_from_short_cycle(g: &Graph) -> bool {
    let cycles = short_cycles(g, 4);
    cycles.iter().filter(|c| c.len() == 3).any(|t| cycles.iter().any(|c| c.iter().all(|v| !t.contains(v))))
}

/// Checks on whole cells, run once per suite.
fn cell_checks(catalog: &mut FamilyCatalog) -> Result<Vec<(&'static str, bool)>> {
    let mut out = Vec::new();
    let cap = catalog.cap() as u32;
    let mut cycles_ok = true;
    for i in 1..=cap {
        let cell = catalog.get(i, 0)?;
        cycles_ok &= cell.len() == 1 && are_isomorphic(&cell[0].graph, &cycle(i as usize));
    }
    out.push(("cycle-cells", cycles_ok));
    let one = |cell: &[FamilyMember], h: &Graph| cell.len() == 1 && are_isomorphic(&cell[0].graph, h);
    out.push(("k4-cell", one(catalog.get(1, 1)?, &complete(4))));
    out.push(("k4plus-cell", one(catalog.get(2, 1)?, &k4_plus())));

    let k4 = complete(4);
    let sub2 = |a, b| subdivide_edge(&subdivide_edge(&k4, a).expect("edge"), b).expect("edge");
    let twice = sub2((0, 1), (0, 4));
    let adjacent = sub2((0, 1), (0, 2));
    let matching = sub2((0, 1), (2, 3));
    let f31 = catalog.get(3, 1)?;
    let f31_ok = f31.len() == 3
        && [&twice, &adjacent, &matching].iter().all(|h| f31.iter().any(|m| are_isomorphic(&m.graph, h)))
        && f31.iter().filter(|m| has_girth_at_least(&m.graph, 4)).all(|m| are_isomorphic(&m.graph, &matching))
        && f31.iter().filter(|m| has_girth_at_least(&m.graph, 4)).count() == 1;
    out.push(("f31-cell", f31_ok));
    if cap >= 8 {
        let f22 = catalog.get(2, 2)?;
        let has = |h: &Graph| f22.iter().any(|m| are_isomorphic(&m.graph, h));
        out.push(("q3-v8-in-f22", has(&cube()) && has(&wagner())));
    }
    out.push(("forbidden-nonplanar", forbidden_family().iter().all(|h| !is_planar(h))));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(suite: Suite) -> VerifyConfig {
        VerifyConfig { suite, max_n: Some(7), random_count: 10, random_max_n: 12, general_max_n: 7, family_cap: 10, family_fvs_max_n: 8, workers: 2, timing: false, ..VerifyConfig::default() }
    }

    #[test]
    fn disjoint_path_counts() {
        assert_eq!(disjoint_paths(&petersen(), 0, 1, 3), 3);
        assert_eq!(disjoint_paths(&cycle(6), 0, 3, 3), 2);
        assert_eq!(disjoint_paths(&complete(5), 0, 1, 10), 4);
        assert!(three_connected_pairs(&cube()));
        assert!(!three_connected_pairs(&cycle(5)));
    }

    #[test]
    fn cells_listed() {
        assert_eq!(family_cells(4), vec![(1, 0), (2, 0), (3, 0), (4, 0), (1, 1)]);
        assert!(family_cells(16).contains(&(4, 4)));
        assert!(!family_cells(16).contains(&(5, 4)));
    }

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::Bounds, Suite::Claims, Suite::FamilyLemmas] {
            let v = run_verification(&small(suite)).unwrap();
            assert!(v.passed(), "{suite}: {:?}", v.summary);
            assert!(v.summary.rows > 0);
        }
    }

    #[test]
    fn bounds_on_named_graphs() {
        let v = run_verification(&small(Suite::Bounds)).unwrap();
        let d = v.rows.iter().find(|r| r.corpus == "named:dodecahedron").unwrap();
        assert_eq!((d.status, d.exact_phi, d.constructive_size, d.slack()), (Status::Pass, Some(6), Some(6), Some(0)));
        for r in &v.rows {
            assert_eq!(r.bound_numerator, 2 * r.m as i64 - r.n as i64 + 2 + r.r_numerator);
        }
    }

    #[test]
    fn empty_input_and_determinism() {
        let cfg = VerifyConfig { input: Some(Vec::new()), ..small(Suite::Bounds) };
        let v = run_verification(&cfg).unwrap();
        assert!(v.rows.is_empty() && v.passed());
        assert_eq!(v.summary, Summary::default());

        let one = VerifyConfig { workers: 1, ..small(Suite::Bounds) };
        let many = VerifyConfig { workers: 4, ..small(Suite::Bounds) };
        assert_eq!(run_verification(&one).unwrap().rows, run_verification(&many).unwrap().rows);
    }
}
