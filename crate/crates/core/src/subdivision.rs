//! Induced-subdivision search.
//!
//! The pattern is reduced to its branch vertices (degree other than two)
//! joined by edges that remember the length of the degree-2 path they
//! replace; a component that is a bare cycle becomes a loop. Branch vertices
//! are mapped into the host one pattern component at a time, and pattern
//! edges are routed as induced paths of at least the remembered length.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug)]
struct TopoEdge {
    x: usize,
    y: usize,
    min_len: usize,
}

#[derive(Clone, Copy, Debug)]
enum Task {
    Start(usize),
    Route { edge: usize, from: usize },
}

struct Topo {
    degree: Vec<usize>,
    edges: Vec<TopoEdge>,
    tasks: Vec<Task>,
}

fn reduce(h: &Graph) -> Topo {
    let n = h.n();
    let deg: Vec<usize> = (0..n).map(|i| h.adj_idx(i).len()).collect();
    let mut is_branch: Vec<bool> = deg.iter().map(|&d| d != 2).collect();
    // A component made only of degree-2 vertices is a cycle; pin one vertex.
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let x = comp[k];
            k += 1;
            for &y in h.adj_idx(x) {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
        }
        if comp.iter().all(|&x| !is_branch[x]) {
            is_branch[*comp.iter().min().unwrap()] = true;
        }
    }
    let branch: Vec<usize> = (0..n).filter(|&i| is_branch[i]).collect();
    let slot = |i: usize| branch.binary_search(&i).unwrap();

    let mut edges = Vec::new();
    let mut used = vec![false; n];
    for &b in &branch {
        for &first in h.adj_idx(b) {
            if !is_branch[first] && used[first] {
                continue;
            }
            let (mut prev, mut cur, mut len) = (b, first, 1);
            while !is_branch[cur] {
                used[cur] = true;
                let nb = h.adj_idx(cur);
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
                len += 1;
            }
            // Direct branch-branch edges are seen from both ends; keep one copy.
            if len == 1 && cur < b {
                continue;
            }
            edges.push(TopoEdge { x: slot(b), y: slot(cur), min_len: len });
        }
    }
    let degree: Vec<usize> = branch.iter().map(|&b| deg[b]).collect();

    let k = branch.len();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (ei, e) in edges.iter().enumerate() {
        incident[e.x].push(ei);
        if e.y != e.x {
            incident[e.y].push(ei);
        }
    }
    let mut tasks = Vec::new();
    let mut placed = vec![false; k];
    let mut scheduled = vec![false; edges.len()];
    for root in 0..k {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        tasks.push(Task::Start(root));
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &ei in &incident[x] {
                if scheduled[ei] {
                    continue;
                }
                scheduled[ei] = true;
                tasks.push(Task::Route { edge: ei, from: x });
                let e = edges[ei];
                let other = if e.x == x { e.y } else { e.x };
                if !placed[other] {
                    placed[other] = true;
                    queue.push_back(other);
                }
            }
        }
    }
    Topo { degree, edges, tasks }
}

struct Search<'a> {
    g: &'a Graph,
    topo: &'a Topo,
    map: Vec<Option<usize>>,
    in_w: Vec<bool>,
    internal: Vec<bool>,
    w: Vec<usize>,
}

impl Search<'_> {
    fn push(&mut self, v: usize, internal: bool) {
        self.in_w[v] = true;
        self.internal[v] = internal;
        self.w.push(v);
    }

    fn pop(&mut self) {
        let v = self.w.pop().unwrap();
        self.in_w[v] = false;
        self.internal[v] = false;
    }

    fn touches_internal(&self, v: usize, except: usize) -> bool {
        self.g.adj_idx(v).iter().any(|&u| u != except && self.internal[u])
    }

    fn run(&mut self, k: usize) -> bool {
        if k == self.topo.tasks.len() {
            let count: usize = self
                .w
                .iter()
                .map(|&v| self.g.adj_idx(v).iter().filter(|&&u| self.in_w[u]).count())
                .sum::<usize>()
                / 2;
            // Each internal path vertex adds one edge to the reduced pattern.
            return count == self.w.len() - self.topo.degree.len() + self.topo.edges.len();
        }
        match self.topo.tasks[k] {
            Task::Start(x) => {
                for v in 0..self.g.n() {
                    if self.in_w[v] || self.g.adj_idx(v).len() < self.topo.degree[x] || self.touches_internal(v, usize::MAX) {
                        continue;
                    }
                    self.map[x] = Some(v);
                    self.push(v, false);
                    if self.run(k + 1) {
                        return true;
                    }
                    self.pop();
                    self.map[x] = None;
                }
                false
            }
            Task::Route { edge, from } => {
                let e = self.topo.edges[edge];
                let to = if e.x == from { e.y } else { e.x };
                let s = self.map[from].unwrap();
                let target = self.map[to];
                self.extend(k, s, s, 0, e.min_len, to, target)
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(&mut self, k: usize, s: usize, cur: usize, len: usize, min_len: usize, to: usize, target: Option<usize>) -> bool {
        let g = self.g;
        if let Some(t) = target {
            let closing_ok = len + 1 >= min_len && !(t == s && len < 2);
            if closing_ok && g.adj_idx(cur).contains(&t) && (cur != s || t != s) && self.run(k + 1) {
                return true;
            }
        }
        for &z in g.adj_idx(cur) {
            if self.in_w[z] {
                continue;
            }
            let mut others = g.adj_idx(z).iter().filter(|&&u| u != cur && self.in_w[u]);
            match target {
                Some(t) => {
                    let extra: Vec<usize> = others.copied().collect();
                    if extra.iter().any(|&u| u != t) {
                        continue;
                    }
                    self.push(z, true);
                    let found = if extra.is_empty() {
                        self.extend(k, s, z, len + 1, min_len, to, target)
                    } else {
                        // z touches the target, so the path has to end right here.
                        len + 2 >= min_len && self.run(k + 1)
                    };
                    if found {
                        return true;
                    }
                    self.pop();
                }
                None => {
                    let free = others.next().is_none();
                    if len + 1 >= min_len
                        && g.adj_idx(z).len() >= self.topo.degree[to]
                        && !self.touches_internal(z, cur)
                    {
                        self.map[to] = Some(z);
                        self.push(z, false);
                        if self.run(k + 1) {
                            return true;
                        }
                        self.pop();
                        self.map[to] = None;
                    }
                    if free {
                        self.push(z, true);
                        if self.extend(k, s, z, len + 1, min_len, to, None) {
                            return true;
                        }
                        self.pop();
                    }
                }
            }
        }
        false
    }
}

fn cyclomatic(g: &Graph) -> usize {
    g.m() + g.components().len() - g.n()
}

/// A vertex set of `g` inducing a subdivision of `h`, if one exists.
pub fn contains_induced_subdivision(g: &Graph, h: &Graph) -> Option<Vec<Vertex>> {
    if h.is_empty() {
        return Some(Vec::new());
    }
    if g.n() < h.n() || g.max_degree() < h.max_degree() || cyclomatic(g) < cyclomatic(h) {
        return None;
    }
    let topo = reduce(h);
    let n = g.n();
    let mut s = Search {
        g,
        topo: &topo,
        map: vec![None; topo.degree.len()],
        in_w: vec![false; n],
        internal: vec![false; n],
        w: Vec::new(),
    };
    if s.run(0) {
        let mut w: Vec<Vertex> = s.w.iter().map(|&i| g.id(i)).collect();
        w.sort_unstable();
        Some(w)
    } else {
        None
    }
}
