//! Minimum feedback vertex sets: subset enumeration and branch and bound.

use alloc::boxed::Box;
use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, UnionFind, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FvsMethod {
    BruteForce,
    BranchAndBound,
}

impl FvsMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            FvsMethod::BruteForce => "brute_force",
            FvsMethod::BranchAndBound => "branch_and_bound",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FvsResult {
    pub size: usize,
    pub witness: Vec<Vertex>,
    pub method: FvsMethod,
}

/// Whether `g - s` is a forest. Loops and parallel edges count as cycles.
pub fn is_feedback_vertex_set(g: &Graph, s: &[Vertex]) -> Result<bool> {
    if let Some(&v) = s.iter().find(|&&v| !g.contains(v)) {
        return Err(Error::domain(format!("vertex {v} not in graph")));
    }
    Ok(crate::graph::is_forest_after_removal(g, s))
}

pub const BRUTE_FORCE_CAP: usize = 20;

pub fn min_fvs_bruteforce(g: &Graph) -> Result<FvsResult> {
    min_fvs_bruteforce_capped(g, BRUTE_FORCE_CAP)
}

/// Tries all vertex subsets by increasing size.
pub fn min_fvs_bruteforce_capped(g: &Graph, cap: usize) -> Result<FvsResult> {
    let n = g.n();
    if n > cap {
        return Err(Error::resource(format!("brute force is capped at {cap} vertices, graph has {n}")));
    }
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (g.idx(u), g.idx(v))).collect();
    let acyclic_without = |removed: u32| {
        let mut uf = UnionFind::new(n);
        edges
            .iter()
            .filter(|&&(u, v)| removed >> u & 1 == 0 && removed >> v & 1 == 0)
            .all(|&(u, v)| uf.union(u, v))
    };
    for k in 0..=n {
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            let mask = pick.iter().fold(0u32, |acc, &i| acc | 1 << i);
            if acyclic_without(mask) {
                return Ok(FvsResult {
                    size: k,
                    witness: pick.iter().map(|&i| g.id(i)).collect(),
                    method: FvsMethod::BruteForce,
                });
            }
            // Next k-combination in lexicographic order.
            let Some(pos) = (0..k).rev().find(|&p| pick[p] < n - k + p) else { break };
            pick[pos] += 1;
            for q in pos + 1..k {
                pick[q] = pick[q - 1] + 1;
            }
        }
    }
    unreachable!("removing every vertex leaves a forest")
}

/// Limits for [`min_fvs_exact_with`]. The solver gives up with a resource
/// error once either limit trips.
#[derive(Default)]
pub struct ExactConfig<'a> {
    pub node_limit: Option<u64>,
    pub should_stop: Option<Box<dyn Fn() -> bool + 'a>>,
}

impl fmt::Debug for ExactConfig<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExactConfig")
            .field("node_limit", &self.node_limit)
            .field("should_stop", &self.should_stop.is_some())
            .finish()
    }
}

pub fn min_fvs_exact(g: &Graph) -> Result<FvsResult> {
    min_fvs_exact_with(g, &ExactConfig::default())
}

pub fn min_fvs_exact_with(g: &Graph, cfg: &ExactConfig<'_>) -> Result<FvsResult> {
    let state = State::from_graph(g);
    let greedy = greedy_fvs(state.clone());
    let mut ctx = Ctx { nodes: 0, cfg, aborted: false };
    let found = solve(state, greedy.len() + 1, &mut ctx);
    if ctx.aborted {
        return Err(Error::Resource {
            message: format!("exact solver stopped after {} search nodes", ctx.nodes),
            best_upper_bound: Some(greedy.len()),
        });
    }
    let mut witness: Vec<Vertex> = found.unwrap_or(greedy).into_iter().map(|i| g.id(i)).collect();
    witness.sort_unstable();
    Ok(FvsResult { size: witness.len(), witness, method: FvsMethod::BranchAndBound })
}

/// Size of a minimum feedback vertex set, via branch and bound.
pub fn phi(g: &Graph) -> usize {
    min_fvs_exact(g).expect("unbounded exact solve").size
}

struct Ctx<'c, 'a> {
    nodes: u64,
    cfg: &'c ExactConfig<'a>,
    aborted: bool,
}

impl Ctx<'_, '_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.cfg.node_limit.is_some_and(|l| self.nodes > l) {
            self.aborted = true;
        }
        if self.nodes % 1024 == 0 && self.cfg.should_stop.as_ref().is_some_and(|f| f()) {
            self.aborted = true;
        }
        self.aborted
    }
}

/// Working multigraph: edge multiplicities capped at 2, loops kept as a flag,
/// and vertices marked forbidden once a branch decided to keep them.
#[derive(Clone, Debug)]
struct State {
    alive: Vec<bool>,
    adj: Vec<Vec<(usize, u8)>>,
    looped: Vec<bool>,
    forbidden: Vec<bool>,
}

impl State {
    fn from_graph(g: &Graph) -> State {
        let n = g.n();
        let mut s = State { alive: vec![true; n], adj: vec![Vec::new(); n], looped: vec![false; n], forbidden: vec![false; n] };
        for i in 0..n {
            for &j in g.adj_idx(i) {
                if j == i {
                    s.looped[i] = true;
                } else if i < j {
                    s.add(i, j, 1);
                }
            }
        }
        s
    }

    fn add(&mut self, u: usize, v: usize, k: u8) {
        if u == v {
            self.looped[u] = true;
            return;
        }
        for (a, b) in [(u, v), (v, u)] {
            match self.adj[a].iter_mut().find(|e| e.0 == b) {
                Some(e) => e.1 = (e.1 + k).min(2),
                None => self.adj[a].push((b, k.min(2))),
            }
        }
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().map(|e| e.1 as usize).sum::<usize>() + if self.looped[v] { 2 } else { 0 }
    }

    fn delete(&mut self, v: usize) {
        self.alive[v] = false;
        for (u, _) in core::mem::take(&mut self.adj[v]) {
            self.adj[u].retain(|e| e.0 != v);
        }
        self.looped[v] = false;
    }

    /// Merges forbidden `w` into forbidden `u` along a single edge.
    fn contract(&mut self, u: usize, w: usize) {
        let nbrs: Vec<(usize, u8)> = self.adj[w].iter().copied().filter(|e| e.0 != u).collect();
        if self.looped[w] {
            self.looped[u] = true;
        }
        self.delete(w);
        for (x, k) in nbrs {
            self.add(u, x, k);
        }
    }

    fn live(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.alive.len()).filter(|&v| self.alive[v])
    }

    /// Applies the safe reductions. Returns the vertices forced into the
    /// solution, or `None` if the forbidden vertices already contain a cycle.
    fn reduce(&mut self) -> Option<Vec<usize>> {
        let mut forced = Vec::new();
        loop {
            let mut changed = false;
            for v in 0..self.alive.len() {
                if !self.alive[v] {
                    continue;
                }
                if self.looped[v] {
                    if self.forbidden[v] {
                        return None;
                    }
                    forced.push(v);
                    self.delete(v);
                    changed = true;
                    continue;
                }
                let d = self.degree(v);
                if d <= 1 {
                    self.delete(v);
                    changed = true;
                    continue;
                }
                if self.forbidden[v] {
                    if let Some(&(w, k)) = self.adj[v].iter().find(|e| self.forbidden[e.0]) {
                        if k >= 2 {
                            return None;
                        }
                        self.contract(v, w);
                        changed = true;
                        continue;
                    }
                } else if self.adj[v].iter().any(|e| e.1 >= 2 && self.forbidden[e.0]) {
                    forced.push(v);
                    self.delete(v);
                    changed = true;
                    continue;
                }
                if d == 2 {
                    if self.adj[v].len() == 1 {
                        // Double edge to a single neighbour: that neighbour covers every cycle through v.
                        let a = self.adj[v][0].0;
                        let take = if self.forbidden[a] { v } else { a };
                        forced.push(take);
                        self.delete(take);
                        changed = true;
                        continue;
                    }
                    let (a, b) = (self.adj[v][0].0, self.adj[v][1].0);
                    if self.forbidden[v] || !self.forbidden[a] || !self.forbidden[b] {
                        self.delete(v);
                        self.add(a, b, 1);
                        changed = true;
                        continue;
                    }
                }
            }
            if !changed {
                return Some(forced);
            }
        }
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.alive.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in self.live() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut k = 0;
            while k < comp.len() {
                let x = comp[k];
                k += 1;
                for &(y, _) in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    fn restricted(&self, keep: &[usize]) -> State {
        let mut s = self.clone();
        let mut mask = vec![false; self.alive.len()];
        for &v in keep {
            mask[v] = true;
        }
        for v in 0..s.alive.len() {
            if s.alive[v] && !mask[v] {
                s.alive[v] = false;
                s.adj[v].clear();
            }
        }
        s
    }

    /// Vertices of a shortest cycle, if any.
    fn shortest_cycle(&self) -> Option<Vec<usize>> {
        if let Some(v) = self.live().find(|&v| self.looped[v]) {
            return Some(vec![v]);
        }
        for v in self.live() {
            if let Some(&(w, _)) = self.adj[v].iter().find(|e| e.1 >= 2) {
                return Some(vec![v, w]);
            }
        }
        let n = self.alive.len();
        let mut best: Option<Vec<usize>> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in self.live() {
            for d in dist.iter_mut() {
                *d = usize::MAX;
            }
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            'bfs: while let Some(x) = queue.pop_front() {
                if best.as_ref().is_some_and(|b| 2 * dist[x] + 1 >= b.len()) {
                    break;
                }
                for &(y, _) in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if y != parent[x] && dist[y] >= dist[x] {
                        let len = dist[x] + dist[y] + 1;
                        if best.as_ref().map_or(true, |b| len < b.len()) {
                            let mut left = vec![x];
                            let mut right = vec![y];
                            let (mut a, mut b) = (x, y);
                            while a != b {
                                if dist[a] >= dist[b] {
                                    a = parent[a];
                                    left.push(a);
                                } else {
                                    b = parent[b];
                                    right.push(b);
                                }
                            }
                            right.pop();
                            left.extend(right.into_iter().rev());
                            // The two branches may meet below the root; a shorter closed walk is still a cycle.
                            best = Some(left);
                        }
                        break 'bfs;
                    }
                }
            }
        }
        best
    }

    /// Greedy packing of vertex-disjoint shortest cycles.
    fn lower_bound(&self) -> usize {
        let mut s = self.clone();
        let mut count = 0;
        while let Some(c) = s.shortest_cycle() {
            count += 1;
            for v in c {
                s.delete(v);
            }
        }
        count
    }
}

fn greedy_fvs(mut s: State) -> Vec<usize> {
    let mut out = Vec::new();
    loop {
        match s.reduce() {
            Some(f) => out.extend(f),
            None => unreachable!("greedy never forbids"),
        }
        let Some(v) = s.live().max_by_key(|&v| (s.degree(v), core::cmp::Reverse(v))) else { return out };
        out.push(v);
        s.delete(v);
    }
}

/// An optimal FVS of `s` if one of size `< ub` exists.
fn solve(mut s: State, ub: usize, ctx: &mut Ctx<'_, '_>) -> Option<Vec<usize>> {
    if ub == 0 || ctx.tick() {
        return None;
    }
    let mut forced = s.reduce()?;
    if forced.len() >= ub {
        return None;
    }
    let comps = s.components();
    if comps.is_empty() {
        return Some(forced);
    }
    let room = ub - forced.len();
    if comps.len() > 1 {
        let parts: Vec<State> = comps.iter().map(|c| s.restricted(c)).collect();
        let lbs: Vec<usize> = parts.iter().map(State::lower_bound).collect();
        let total_lb: usize = lbs.iter().sum();
        if total_lb >= room {
            return None;
        }
        let mut used = 0;
        for (i, p) in parts.into_iter().enumerate() {
            let rest_lb: usize = lbs[i + 1..].iter().sum();
            let part = solve(p, room - used - rest_lb, ctx)?;
            used += part.len();
            forced.extend(part);
        }
        return Some(forced);
    }
    if s.lower_bound() >= room {
        return None;
    }
    let v = s
        .live()
        .filter(|&v| !s.forbidden[v])
        .max_by_key(|&v| (s.degree(v), core::cmp::Reverse(v)))
        .expect("a cycle survives reduction only through a selectable vertex");
    let mut best: Option<Vec<usize>> = None;
    let mut bound = room;
    let mut take = s.clone();
    take.delete(v);
    if let Some(mut r) = solve(take, bound - 1, ctx) {
        r.push(v);
        bound = r.len();
        best = Some(r);
    }
    if ctx.aborted {
        return None;
    }
    let mut keep = s;
    keep.forbidden[v] = true;
    if let Some(r) = solve(keep, bound, ctx) {
        best = Some(r);
    }
    let mut best = best?;
    forced.append(&mut best);
    Some(forced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::*;

    #[test]
    fn examples() {
        assert_eq!(min_fvs_bruteforce(&cycle(3)).unwrap().size, 1);
        assert_eq!(min_fvs_bruteforce(&path(6)).unwrap().size, 0);
        assert_eq!(min_fvs_bruteforce(&complete(4)).unwrap().size, 2);
        assert_eq!(min_fvs_exact(&cycle(5)).unwrap().size, 1);
        assert_eq!(min_fvs_exact(&dodecahedron()).unwrap().size, 6);
        assert_eq!(min_fvs_exact(&petersen()).unwrap().size, 3);
        assert_eq!(min_fvs_bruteforce(&petersen()).unwrap().size, 3);
        assert_eq!(min_fvs_exact(&complete_bipartite(3, 3)).unwrap().size, 2);
        assert_eq!(min_fvs_exact(&loop_graph()).unwrap().size, 1);
        assert_eq!(min_fvs_exact(&cycle(2)).unwrap().size, 1);
        assert_eq!(min_fvs_exact(&Graph::new()).unwrap().size, 0);
    }

    #[test]
    fn membership_checks() {
        assert!(is_feedback_vertex_set(&cycle(4), &[2]).unwrap());
        assert!(!is_feedback_vertex_set(&complete(4), &[0]).unwrap());
        assert!(is_feedback_vertex_set(&petersen(), &(0..10).collect::<Vec<_>>()).unwrap());
        assert!(matches!(is_feedback_vertex_set(&cycle(4), &[9]), Err(Error::Domain(_))));
    }

    #[test]
    fn witnesses_are_valid() {
        for g in [dodecahedron(), petersen(), cube(), wagner(), complete(6), k33_plus()] {
            let r = min_fvs_exact(&g).unwrap();
            assert!(is_feedback_vertex_set(&g, &r.witness).unwrap());
            assert_eq!(r.size, min_fvs_bruteforce(&g).unwrap().size);
        }
    }

    /// The graph a reduced state stands for; dead vertices stay as isolated ones.
    fn as_graph(s: &State) -> Graph {
        let mut edges = Vec::new();
        for v in s.live() {
            if s.looped[v] {
                edges.push((v, v));
            }
            for &(w, k) in &s.adj[v] {
                if v < w {
                    edges.extend(core::iter::repeat((v, w)).take(k as usize));
                }
            }
        }
        Graph::from_edges(s.alive.len(), &edges)
    }

    #[test]
    fn reductions_keep_the_optimum() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..500 {
            let n = rng.gen_range(1..=11);
            let m = rng.gen_range(0..=2 * n);
            let edges: Vec<_> = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
            let g = Graph::from_edges(n, &edges);
            let mut s = State::from_graph(&g);
            let forced = s.reduce().expect("nothing is forbidden yet");
            let rest = min_fvs_bruteforce(&as_graph(&s)).unwrap().size;
            assert_eq!(forced.len() + rest, min_fvs_bruteforce(&g).unwrap().size, "{g:?}");
        }
    }

    #[test]
    fn node_limit_reports_upper_bound() {
        let cfg = ExactConfig { node_limit: Some(1), should_stop: None };
        match min_fvs_exact_with(&generalized_petersen(12, 5), &cfg) {
            Err(Error::Resource { best_upper_bound: Some(b), .. }) => assert!(b >= 1),
            other => panic!("{other:?}"),
        }
        assert!(matches!(min_fvs_bruteforce_capped(&cycle(5), 4), Err(Error::Resource { .. })));
    }
}
