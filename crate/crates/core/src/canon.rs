//! Canonical labeling by individualization and refinement.
//!
//! The search tree is the usual one: refine an ordered partition to an
//! equitable one, then branch on the vertices of the first smallest
//! non-singleton cell. Leaves are ranked by the sequence of refinement trace
//! hashes along their path and then by the relabeled multiplicity matrix.
//! Subtrees whose trace is worse than the best leaf's are cut, and siblings
//! equivalent under automorphisms already discovered are skipped.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::graph::{Graph, UnionFind};

/// Byte string identifying an isomorphism class of multigraphs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Canonical position of every vertex, indexed like `g.vertices()`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let mut search = Search::new(g);
    search.run();
    let mut pos = vec![0; g.n()];
    for (p, &v) in search.best_lab.iter().enumerate() {
        pos[v] = p;
    }
    pos
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let mut search = Search::new(g);
    search.run();
    let n = g.n() as u32;
    let mut bytes = Vec::with_capacity(4 + search.best_cert.len());
    bytes.extend_from_slice(&n.to_le_bytes());
    bytes.extend_from_slice(&search.best_cert);
    CanonicalForm(bytes)
}

/// `g` relabeled onto `0..n` in canonical order, with the labeling used.
pub fn canonical_graph(g: &Graph) -> (Graph, Vec<usize>) {
    let pos = canonical_labeling(g);
    let h = g.relabeled(|v| pos[g.idx(v)]);
    (h, pos)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let mut dg: Vec<usize> = g.vertices().iter().map(|&v| g.degree(v)).collect();
    let mut dh: Vec<usize> = h.vertices().iter().map(|&v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g) == canonical_form(h)
}

#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    // Start index of the cell containing each vertex.
    cell_of: Vec<usize>,
    // For a cell start s, one past its last position.
    cell_end: Vec<usize>,
}

impl Partition {
    fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.lab.len();
        let mut s = 0;
        core::iter::from_fn(move || {
            if s >= n {
                return None;
            }
            let e = self.cell_end[s];
            let r = (s, e);
            s = e;
            Some(r)
        })
    }

    fn is_discrete(&self) -> bool {
        self.cells().all(|(s, e)| e - s == 1)
    }

    fn target_cell(&self) -> Option<(usize, usize)> {
        self.cells().filter(|(s, e)| e - s > 1).min_by_key(|(s, e)| (e - s, *s))
    }

    /// Moves `v` to the front of its cell as a singleton.
    fn individualize(&mut self, v: usize) {
        let s = self.cell_of[v];
        let e = self.cell_end[s];
        let p = self.lab[s..e].iter().position(|&x| x == v).unwrap() + s;
        self.lab.swap(s, p);
        self.cell_end[s] = s + 1;
        self.cell_end[s + 1] = e;
        for &x in &self.lab[s + 1..e] {
            self.cell_of[x] = s + 1;
        }
        self.cell_of[v] = s;
    }
}

struct Search {
    n: usize,
    // Distinct neighbors with multiplicity; loops listed with their loop count.
    nbrs: Vec<Vec<(usize, u8)>>,
    mat: Vec<u8>,
    best_lab: Vec<usize>,
    best_cert: Vec<u8>,
    best_trace: Vec<u64>,
    have_best: bool,
    autos: Vec<Vec<usize>>,
    counts: Vec<u32>,
}

fn mix(h: u64, x: u64) -> u64 {
    (h ^ x).wrapping_mul(0x100_0000_01b3).rotate_left(17) ^ 0x9e37_79b9_7f4a_7c15
}

impl Search {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut mat = vec![0u8; n * n];
        for i in 0..n {
            for &j in g.adj_idx(i) {
                mat[i * n + j] = mat[i * n + j].saturating_add(1);
            }
        }
        // Loops appear twice in the adjacency list; store the loop count.
        for i in 0..n {
            mat[i * n + i] /= 2;
        }
        let nbrs = (0..n).map(|i| (0..n).filter(|&j| mat[i * n + j] > 0).map(|j| (j, mat[i * n + j])).collect()).collect();
        Search {
            n,
            nbrs,
            mat,
            best_lab: Vec::new(),
            best_cert: Vec::new(),
            best_trace: Vec::new(),
            have_best: false,
            autos: Vec::new(),
            counts: vec![0; n],
        }
    }

    fn run(&mut self) {
        let n = self.n;
        if n == 0 {
            return;
        }
        // Initial cells by (degree, loops).
        let key = |i: usize| -> (usize, u8) {
            let deg: usize = self.nbrs[i].iter().map(|&(j, c)| if j == i { 2 * c as usize } else { c as usize }).sum();
            (deg, self.mat[i * n + i])
        };
        let mut lab: Vec<usize> = (0..n).collect();
        lab.sort_by_key(|&i| key(i));
        let mut cell_of = vec![0; n];
        let mut cell_end = vec![0; n];
        let mut s = 0;
        while s < n {
            let mut e = s + 1;
            while e < n && key(lab[e]) == key(lab[s]) {
                e += 1;
            }
            for &v in &lab[s..e] {
                cell_of[v] = s;
            }
            cell_end[s] = e;
            s = e;
        }
        let mut p = Partition { lab, cell_of, cell_end };
        let mut trace = Vec::new();
        let all: Vec<usize> = p.cells().map(|(s, _)| s).collect();
        let h = self.refine(&mut p, all);
        trace.push(h);
        self.descend(p, &mut trace, &mut Vec::new(), Ordering::Equal);
    }

    /// Refines to an equitable partition; returns a hash of what happened.
    fn refine(&mut self, p: &mut Partition, mut queue: Vec<usize>) -> u64 {
        let n = self.n;
        let mut in_queue = vec![false; n];
        for &s in &queue {
            in_queue[s] = true;
        }
        let mut h: u64 = 0;
        let mut qi = 0;
        while qi < queue.len() {
            let w = queue[qi];
            qi += 1;
            in_queue[w] = false;
            let we = p.cell_end[w];
            for c in self.counts.iter_mut() {
                *c = 0;
            }
            for k in w..we {
                let x = p.lab[k];
                for &(y, c) in &self.nbrs[x] {
                    self.counts[y] += c as u32;
                }
            }
            let mut s = 0;
            while s < n {
                let e = p.cell_end[s];
                if e - s > 1 {
                    let first = self.counts[p.lab[s]];
                    if p.lab[s + 1..e].iter().any(|&v| self.counts[v] != first) {
                        let counts = &self.counts;
                        p.lab[s..e].sort_by_key(|&v| counts[v]);
                        let mut a = s;
                        while a < e {
                            let ca = self.counts[p.lab[a]];
                            let mut b = a + 1;
                            while b < e && self.counts[p.lab[b]] == ca {
                                b += 1;
                            }
                            p.cell_end[a] = b;
                            for k in a..b {
                                p.cell_of[p.lab[k]] = a;
                            }
                            h = mix(h, ((w as u64) << 40) ^ ((a as u64) << 20) ^ ((b - a) as u64) ^ ((ca as u64) << 50));
                            if !in_queue[a] {
                                in_queue[a] = true;
                                queue.push(a);
                            }
                            a = b;
                        }
                    }
                }
                s = e;
            }
        }
        let cells = p.cells().count() as u64;
        mix(h, cells)
    }

    fn certificate(&self, lab: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut cert = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            let row = lab[i] * n;
            for &lj in &lab[i..n] {
                cert.push(self.mat[row + lj]);
            }
        }
        cert
    }

    fn descend(&mut self, p: Partition, trace: &mut Vec<u64>, path: &mut Vec<usize>, mut state: Ordering) {
        let depth = trace.len() - 1;
        if state == Ordering::Equal && self.have_best {
            match self.best_trace.get(depth).map(|b| trace[depth].cmp(b)).unwrap_or(Ordering::Greater) {
                Ordering::Greater => return,
                Ordering::Less => state = Ordering::Less,
                Ordering::Equal => {}
            }
        }
        if p.is_discrete() {
            let cert = self.certificate(&p.lab);
            let better = !self.have_best || state == Ordering::Less || cert < self.best_cert;
            if better {
                self.best_cert = cert;
                self.best_lab = p.lab.clone();
                self.best_trace = trace.clone();
                self.have_best = true;
            } else if state == Ordering::Equal && cert == self.best_cert && trace.len() == self.best_trace.len() {
                // Same leaf up to relabeling: record the automorphism.
                let mut gamma = vec![0; self.n];
                for (i, &v) in self.best_lab.iter().enumerate() {
                    gamma[v] = p.lab[i];
                }
                self.autos.push(gamma);
            }
            return;
        }
        let (s, e) = p.target_cell().unwrap();
        let cell: Vec<usize> = {
            let mut c = p.lab[s..e].to_vec();
            c.sort_unstable();
            c
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.equivalent_to_explored(path, v, &explored) {
                continue;
            }
            explored.push(v);
            let mut child = p.clone();
            child.individualize(v);
            let start = child.cell_of[v];
            let h = self.refine(&mut child, vec![start]);
            trace.push(mix(h, (e - s) as u64));
            path.push(v);
            // A leaf found below may lower the best; the pruning state restarts from Equal
            // only when we have not already passed the best prefix.
            self.descend(child, trace, path, state);
            path.pop();
            trace.pop();
            if state == Ordering::Less {
                // Once a better leaf has been found beneath this node, the
                // best prefix equals ours, so later siblings compare normally.
                state = Ordering::Equal;
            }
        }
    }

    fn equivalent_to_explored(&self, path: &[usize], v: usize, explored: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.n);
        let mut any = false;
        for gamma in &self.autos {
            if path.iter().all(|&x| gamma[x] == x) {
                any = true;
                for (x, &y) in gamma.iter().enumerate() {
                    uf.union(x, y);
                }
            }
        }
        if !any {
            return false;
        }
        let rv = uf.find(v);
        explored.iter().any(|&u| uf.find(u) == rv)
    }
}
