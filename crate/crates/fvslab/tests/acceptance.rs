//! Acceptance criteria 1 to 8. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::VecDeque;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fvslab::corpus::random_planar_corpus;
use fvslab::enumerate::{enumerate_graphs, Filters};
use fvslab_core::construct::{fvs_planar_girth5, fvs_subcubic, verify_certificate, FvsCertificate};
use fvslab_core::exact::{min_fvs_bruteforce, min_fvs_exact, phi};
use fvslab_core::family::{family_fvs, family_membership, forbidden_family, forbidden_witness, FamilyCatalog, FamilyMember, FvsTarget};
use fvslab_core::named::*;
use fvslab_core::ops::subdivide_edge;
use fvslab_core::planarity::is_planar;
use fvslab_core::structure::is_two_connected;
use fvslab_core::{are_isomorphic, Error, Graph, Sevenths};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Frozen on the first verified run; the forbidden family is generated, not listed.
const FORBIDDEN_FAMILY_SIZE: usize = 15;

/// Connected graphs on 1..=9 vertices up to isomorphism.
const CONNECTED_COUNTS: [usize; 9] = [1, 1, 2, 6, 21, 112, 853, 11117, 261080];

/// Connected planar graphs of girth at least five on 1..=11 vertices. Agrees
/// with an independent count over all graphs on at most 7 vertices.
const PLANAR_GIRTH5_COUNTS: [usize; 11] = [1, 1, 1, 2, 4, 8, 18, 47, 136, 456, 1730];

/// Connected subcubic graphs of girth at least five on 1..=14 vertices.
const SUBCUBIC_GIRTH5_COUNTS: [usize; 14] = [1, 1, 1, 2, 3, 6, 12, 29, 69, 201, 574, 1887, 6339, 23093];

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 8] = [
        ("1 tightness on the dodecahedron", tightness, Duration::from_secs(1)),
        ("2 planar girth-5 bound", planar_bound, Duration::from_secs(30 * 60)),
        ("3 edge and vertex ratios", ratios, Duration::from_secs(30 * 60)),
        ("4 subcubic bound and error terms", subcubic, Duration::from_secs(60 * 60)),
        ("5 family basics", family_basics, Duration::from_secs(5 * 60)),
        ("6 family deletion sets", family_deletions, Duration::from_secs(60 * 60)),
        ("7 planarity of members", planarity_of_members, Duration::from_secs(60 * 60)),
        ("8 exact solver against brute force", oracle_integrity, Duration::from_secs(20 * 60)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let got = run();
        let took = start.elapsed();
        let got = match got {
            Ok(d) if took > budget => Err(format!("{d}; took {took:.1?}, budget {budget:?}")),
            other => other,
        };
        match got {
            Ok(d) => println!("criterion {name}: PASS ({d}; {took:.1?})"),
            Err(d) => {
                failed += 1;
                println!("criterion {name}: FAIL ({d}; {took:.1?})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

// Test-local oracles, independent of the library's own checks.

fn forest_after(g: &Graph, s: &[usize]) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (u, v) in g.edges() {
        if s.contains(&u) || s.contains(&v) {
            continue;
        }
        let (a, b) = (find(&mut parent, g.index_of(u).unwrap()), find(&mut parent, g.index_of(v).unwrap()));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Smallest feedback vertex set size by trying subsets in increasing size.
fn subset_phi(g: &Graph) -> usize {
    let vs = g.vertices().to_vec();
    fn pick(g: &Graph, vs: &[usize], k: usize, from: usize, cur: &mut Vec<usize>) -> bool {
        if cur.len() == k {
            return forest_after(g, cur);
        }
        (from..vs.len()).any(|x| {
            cur.push(vs[x]);
            let ok = pick(g, vs, k, x + 1, cur);
            cur.pop();
            ok
        })
    }
    (0..=vs.len()).find(|&k| pick(g, &vs, k, 0, &mut Vec::new())).unwrap()
}

/// Shortest cycle length of a simple graph by BFS from every vertex.
fn simple_girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut par = vec![usize::MAX; n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    par[w] = u;
                    q.push_back(w);
                } else if par[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b: usize| b.min(len)));
                }
            }
        }
    }
    best
}

/// Vertex sets of cycles of length 3 and 4 in a simple graph.
fn short_cycle_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let e = |a, b| g.has_edge(a, b);
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if e(a, b) && e(b, c) && e(c, a) {
                    out.push(vec![a, b, c]);
                }
                for d in c + 1..n {
                    let four = [[a, b, c, d], [a, b, d, c], [a, c, b, d]];
                    if four.iter().any(|q| e(q[0], q[1]) && e(q[1], q[2]) && e(q[2], q[3]) && e(q[3], q[0])) {
                        out.push(vec![a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| !b.contains(x))
}

/// A simple graph of girth at least five with `3m > 5(n - 2)` cannot be planar.
fn euler_rules_out_planarity(g: &Graph) -> bool {
    simple_girth(g).is_some_and(|k| k >= 5) && 3 * g.m() > 5 * (g.n().saturating_sub(2))
}

fn check_certificate(g: &Graph, c: &FvsCertificate, r: i64) -> Result<(), String> {
    let bound = 2 * g.m() as i64 - g.n() as i64 + 2 + r;
    ensure(!c.fallback_used, || "fallback used".into())?;
    ensure(verify_certificate(g, c), || "certificate rejected".into())?;
    ensure(forest_after(g, &c.witness), || "witness leaves a cycle".into())?;
    ensure(c.bound_numerator == bound && 7 * c.witness.len() as i64 <= bound, || "witness over the bound".into())?;
    ensure(c.trace_decreases() && c.trace_assembles_witness(), || "trace inconsistent".into())
}

fn planar_corpus() -> Result<Vec<Graph>, String> {
    let f = Filters { connected: true, planar: true, girth_min: Some(5), ..Filters::default() };
    let all = enumerate_graphs(11, &f).map_err(|e| e.to_string())?;
    let mut counts = [0; 11];
    all.iter().for_each(|g| counts[g.n() - 1] += 1);
    ensure(counts == PLANAR_GIRTH5_COUNTS, || format!("planar girth-5 counts {counts:?}"))?;
    let random = random_planar_corpus(2024, 500, 24);
    for g in &random {
        ensure(g.n() <= 24 && is_planar(g) && simple_girth(g).map_or(true, |k| k >= 5) && g.is_connected(), || "bad random instance".into())?;
    }
    Ok(all.into_iter().chain(random).collect())
}

fn tightness() -> Outcome {
    let d = dodecahedron();
    let bound = 2 * d.m() as i64 - d.n() as i64 + 2;
    ensure(bound == 42, || format!("bound numerator {bound}"))?;
    let exact = min_fvs_exact(&d).map_err(|e| e.to_string())?.size;
    ensure(exact == 6 && subset_phi(&d) == 6, || format!("exact {exact}"))?;
    let c = fvs_planar_girth5(&d).map_err(|e| e.to_string())?;
    check_certificate(&d, &c, 0)?;
    ensure(c.witness.len() == 6 && c.slack() == 0, || format!("certificate size {}", c.witness.len()))?;
    Ok("phi = 6 = 42/7, certificate of size 6 with slack 0".into())
}

fn planar_bound() -> Outcome {
    let corpus = planar_corpus()?;
    for g in &corpus {
        let exact = phi(g);
        let bound = 2 * g.m() as i64 - g.n() as i64 + 2;
        ensure(7 * exact as i64 <= bound, || format!("phi {exact} over bound {bound}/7 on n = {}", g.n()))?;
        let c = fvs_planar_girth5(g).map_err(|e| format!("n = {}: {e}", g.n()))?;
        check_certificate(g, &c, 0)?;
        ensure(exact <= c.witness.len(), || "witness below phi".into())?;
    }
    Ok(format!("{} graphs: 2404 exhaustive with n <= 11, 500 random with n <= 24", corpus.len()))
}

fn ratios() -> Outcome {
    let corpus = planar_corpus()?;
    for g in &corpus {
        let exact = phi(g);
        ensure(exact <= g.m() / 5, || format!("phi {exact} > m/5 on m = {}", g.m()))?;
        ensure(g.n() < 4 || exact <= (g.n() - 2) / 3, || format!("phi {exact} > (n-2)/3 on n = {}", g.n()))?;
    }
    Ok(format!("{} graphs", corpus.len()))
}

fn error_term_properties(g: &Graph, r: Sevenths) -> Result<usize, String> {
    let mut edge_checks = 0;
    ensure(r <= Sevenths(4), || "r above 4/7".into())?;
    if !are_isomorphic(g, &complete(4)) {
        ensure(r <= Sevenths(3), || "r above 3/7 off K4".into())?;
    }
    if r == Sevenths(3) {
        ensure(simple_girth(g) == Some(3), || "r = 3/7 without a triangle".into())?;
    }
    if r > Sevenths::ZERO && is_two_connected(g) {
        let cap = 2 * g.m() as i64 - g.n() as i64 - 5 + r.numerator();
        for (u, v) in g.edges() {
            let h = g.without_edge(u, v).unwrap();
            ensure(7 * phi(&h) as i64 <= cap, || "edge deletion above the bound".into())?;
            edge_checks += 1;
        }
    }
    if simple_girth(g).map_or(true, |k| k >= 5) {
        let sig = family_membership(g).map_err(|e| e.to_string())?.map(|s| (s.i, s.j));
        if !matches!(sig, Some((3, 3) | (4, 4))) {
            ensure(r == Sevenths::ZERO, || "girth-5 graph with r > 0".into())?;
        }
    }
    Ok(edge_checks)
}

fn subcubic() -> Outcome {
    // Forbidden-freeness is tested per graph, not assumed.
    let f = Filters { connected: true, subcubic: true, girth_min: Some(5), ..Filters::default() };
    let all = enumerate_graphs(14, &f).map_err(|e| e.to_string())?;
    let mut counts = [0; 14];
    all.iter().for_each(|g| counts[g.n() - 1] += 1);
    ensure(counts == SUBCUBIC_GIRTH5_COUNTS, || format!("subcubic girth-5 counts {counts:?}"))?;
    let (mut valid, mut excluded, mut gap2, mut edge_checks) = (0, 0, 0, 0);
    for g in &all {
        if forbidden_witness(g).is_some() {
            excluded += 1;
            ensure(matches!(fvs_subcubic(g), Err(Error::Domain(_))), || "forbidden input accepted".into())?;
            continue;
        }
        valid += 1;
        let c = fvs_subcubic(g).map_err(|e| format!("n = {}: {e}", g.n()))?;
        check_certificate(g, &c, c.r_value.numerator())?;
        let exact = phi(g);
        ensure(exact <= c.witness.len(), || "witness below phi".into())?;
        gap2 += usize::from(c.witness.len() >= exact + 2);
        edge_checks += error_term_properties(g, c.r_value)?;
    }
    // Smaller graphs of any girth exercise the positive error terms.
    let f = Filters { connected: true, subcubic: true, no_two_disjoint_short_cycles: true, forbidden_free: true, ..Filters::default() };
    let short: Vec<Graph> = enumerate_graphs(12, &f).map_err(|e| e.to_string())?.into_iter().filter(|g| simple_girth(g).is_some_and(|k| k < 5)).collect();
    for g in &short {
        let c = fvs_subcubic(g).map_err(|e| format!("n = {}: {e}", g.n()))?;
        check_certificate(g, &c, c.r_value.numerator())?;
        ensure(phi(g) <= c.witness.len(), || "witness below phi".into())?;
        edge_checks += error_term_properties(g, c.r_value)?;
    }
    Ok(format!(
        "{valid} girth-5 graphs with n <= 14 certified, {excluded} excluded for a forbidden induced subdivision, \
         {} shorter-girth graphs with n <= 12, {edge_checks} edge deletions checked, {gap2} witnesses at phi + 2 or more",
        short.len()
    ))
}

fn members(cat: &mut FamilyCatalog, i: u32, j: u32) -> Result<Vec<FamilyMember>, String> {
    cat.get(i, j).map(<[FamilyMember]>::to_vec).map_err(|e| e.to_string())
}

fn cells(cap: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=cap / 3).flat_map(move |j| (j.max(1)..=cap - 3 * j).map(move |i| (i, j)))
}

fn family_basics() -> Outcome {
    let mut cat = FamilyCatalog::new(16);
    let mut total = 0;
    for (i, j) in cells(16) {
        let cell = members(&mut cat, i, j)?;
        let (iu, ju) = (i as usize, j as usize);
        for m in &cell {
            let g = &m.graph;
            total += 1;
            let deg2 = g.vertices().iter().filter(|&&v| g.degree(v) == 2).count();
            ensure(g.n() == iu + 3 * ju && g.m() == iu + 5 * ju && deg2 == iu - ju, || format!("counts in F({i},{j})"))?;
            ensure(2 * g.m() as i64 - g.n() as i64 + 2 == i as i64 + 2 + 7 * j as i64, || "bound identity".into())?;
            ensure(g.is_simple() || (j == 0 && i <= 2), || format!("non-simple member of F({i},{j})"))?;
            if matches!((i, j), (3, 2) | (4, 1)) {
                ensure(simple_girth(g).is_some_and(|k| k <= 4), || format!("girth above 4 in F({i},{j})"))?;
            }
        }
        if j == 0 {
            let g = &cell[0].graph;
            let is_cycle = match i {
                1 => g.n() == 1 && g.multiplicity(0, 0) == 1,
                2 => g.n() == 2 && g.multiplicity(0, 1) == 2,
                _ => g.n() == iu && g.m() == iu && g.is_simple() && g.is_connected() && g.min_degree() == 2 && g.max_degree() == 2,
            };
            ensure(cell.len() == 1 && is_cycle, || format!("F({i},0) is not the {i}-cycle"))?;
        }
    }
    let f11 = members(&mut cat, 1, 1)?;
    ensure(f11.len() == 1 && f11[0].graph.is_simple() && f11[0].graph.n() == 4 && f11[0].graph.m() == 6, || "F(1,1) is not {K4}".into())?;
    let f21 = members(&mut cat, 2, 1)?;
    ensure(f21.len() == 1 && are_isomorphic(&f21[0].graph, &k4_plus()), || "F(2,1) is not {K4+}".into())?;

    let k4 = complete(4);
    let sub2 = |a, b| subdivide_edge(&subdivide_edge(&k4, a).unwrap(), b).unwrap();
    let matching = sub2((0, 1), (2, 3));
    let f31 = members(&mut cat, 3, 1)?;
    ensure(f31.len() == 3, || format!("|F(3,1)| = {}", f31.len()))?;
    for h in [sub2((0, 1), (0, 4)), sub2((0, 1), (0, 2)), matching.clone()] {
        ensure(f31.iter().any(|m| are_isomorphic(&m.graph, &h)), || "F(3,1) misses a subdivided K4".into())?;
    }
    let girth4: Vec<_> = f31.iter().filter(|m| simple_girth(&m.graph).is_some_and(|k| k >= 4)).collect();
    ensure(girth4.len() == 1 && are_isomorphic(&girth4[0].graph, &matching), || "girth-4 member of F(3,1)".into())?;

    let f22 = members(&mut cat, 2, 2)?;
    for h in [cube(), wagner()] {
        ensure(f22.iter().any(|m| are_isomorphic(&m.graph, &h)), || "Q3 or V8 missing from F(2,2)".into())?;
    }
    for m in &f22 {
        let cs = short_cycle_sets(&m.graph);
        ensure(cs.iter().enumerate().any(|(k, a)| cs[k + 1..].iter().any(|b| disjoint(a, b))), || "F(2,2) member without disjoint short cycles".into())?;
        if !are_isomorphic(&m.graph, &cube()) && !are_isomorphic(&m.graph, &wagner()) {
            let tri = cs.iter().filter(|c| c.len() == 3).any(|t| cs.iter().any(|c| disjoint(t, c)));
            ensure(tri, || "F(2,2) member without a triangle disjoint from a short cycle".into())?;
        }
    }
    Ok(format!("{total} members over {} cells with i + 3j <= 16; |F(2,2)| = {}", cells(16).count(), f22.len()))
}

fn family_deletions() -> Outcome {
    let mut cat = FamilyCatalog::new(14);
    let (mut graphs, mut solves) = (0, 0);
    for (i, j) in cells(14) {
        for m in members(&mut cat, i, j)? {
            let g = &m.graph;
            graphs += 1;
            let cap = 2 * g.m() as i64 - g.n() as i64 + 2 + m.signature.epsilon().numerator();
            let mut edges = g.edges();
            edges.dedup();
            for (u, v) in edges {
                let h = g.without_edge(u, v).unwrap();
                let s = family_fvs(&m, FvsTarget::WithoutEdge(u, v)).map_err(|e| e.to_string())?;
                let exact = phi(&h);
                solves += 1;
                ensure(forest_after(&h, &s), || format!("F({i},{j}) minus an edge: not a feedback set"))?;
                ensure(7 * (s.len() as i64 + 1) <= cap && 7 * (exact as i64 + 1) <= cap && exact <= s.len(), || format!("F({i},{j}) minus an edge: over the bound"))?;
            }
            for &v in g.vertices() {
                let s = family_fvs(&m, FvsTarget::Containing(v)).map_err(|e| e.to_string())?;
                let exact = phi(&g.without_vertex(v));
                solves += 1;
                ensure(s.contains(&v) && forest_after(g, &s), || format!("F({i},{j}) through a vertex: bad set"))?;
                ensure(7 * s.len() as i64 <= cap && 7 * (exact as i64 + 1) <= cap, || format!("F({i},{j}) through a vertex: over the bound"))?;
            }
        }
    }
    Ok(format!("{graphs} members with at most 14 vertices, {solves} deletions cross-checked by the exact solver"))
}

fn planarity_of_members() -> Outcome {
    let mut cat = FamilyCatalog::new(16);
    let mut girth5_small_i = 0;
    for (i, j) in cells(16) {
        for m in members(&mut cat, i, j)? {
            let g = &m.graph;
            if i <= 4 && g.is_simple() && simple_girth(g).is_some_and(|k| k >= 5) {
                girth5_small_i += 1;
                ensure(!is_planar(g) && euler_rules_out_planarity(g), || format!("planar girth-5 member of F({i},{j})"))?;
            }
        }
    }
    let forbidden = forbidden_family();
    ensure(forbidden.len() == FORBIDDEN_FAMILY_SIZE, || format!("|forbidden family| = {}", forbidden.len()))?;
    for h in forbidden {
        ensure(!is_planar(h), || "planar forbidden graph".into())?;
        // Either h or h minus some edge has girth at least five and too many edges for a plane embedding.
        let euler = euler_rules_out_planarity(h) || h.edges().into_iter().any(|(u, v)| euler_rules_out_planarity(&h.without_edge(u, v).unwrap()));
        ensure(euler, || "no counting certificate of non-planarity".into())?;
    }
    Ok(format!("{girth5_small_i} girth-5 members with i <= 4, all non-planar; {} forbidden graphs, all non-planar", forbidden.len()))
}

fn oracle_integrity() -> Outcome {
    let all = enumerate_graphs(9, &Filters::connected()).map_err(|e| e.to_string())?;
    let mut counts = [0; 9];
    all.iter().for_each(|g| counts[g.n() - 1] += 1);
    ensure(counts == CONNECTED_COUNTS, || format!("connected counts {counts:?}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let random: Vec<Graph> = (0..1000)
        .map(|_| {
            let n = rng.gen_range(1..=16);
            let p: f64 = rng.gen_range(0.1..0.6);
            let edges: Vec<_> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).filter(|_| rng.gen_bool(p)).collect();
            Graph::from_edges(n, &edges)
        })
        .collect();
    for g in all.iter().chain(&random) {
        let a = min_fvs_exact(g).map_err(|e| e.to_string())?;
        let b = min_fvs_bruteforce(g).map_err(|e| e.to_string())?;
        ensure(a.size == b.size, || format!("exact {} vs brute force {} on n = {}", a.size, b.size, g.n()))?;
        ensure(forest_after(g, &a.witness) && forest_after(g, &b.witness), || "witness leaves a cycle".into())?;
    }
    // A third route on a sample: this file's own subset search.
    for g in random.iter().filter(|g| g.n() <= 12).take(200) {
        ensure(subset_phi(g) == phi(g), || "subset search disagrees".into())?;
    }
    Ok(format!("{} connected graphs with n <= 9 and {} random graphs with n <= 16 agree", all.len(), random.len()))
}
