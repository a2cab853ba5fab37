//! Forward generation of `F(i, j)` with isomorph rejection per cell.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use super::{Derivation, FamilyMember, FamilySignature, Step};
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ops::{circ_op_at, subdivide_edge_at};

/// Default bound on `i + 3j`, the member vertex count.
pub const DEFAULT_CAP: usize = 20;

/// Memo of generated cells. Each member keeps the first derivation found
/// under the deterministic edge order.
#[derive(Debug)]
pub struct FamilyCatalog {
    cap: usize,
    cells: BTreeMap<(u32, u32), Vec<FamilyMember>>,
}

impl FamilyCatalog {
    pub fn new(cap: usize) -> Self {
        FamilyCatalog { cap, cells: BTreeMap::new() }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn get(&mut self, i: u32, j: u32) -> Result<&[FamilyMember]> {
        if i == 0 || j > i {
            return Ok(&[]);
        }
        let n = (i + 3 * j) as usize;
        if n > self.cap {
            return Err(Error::resource(format!("F({i},{j}) has {n} vertices, over the cap i + 3j <= {}", self.cap)));
        }
        if !self.cells.contains_key(&(i, j)) {
            // Fill prerequisites bottom-up so the recursion depth stays small.
            for jj in 0..=j {
                for ii in jj.max(1)..=i {
                    if !self.cells.contains_key(&(ii, jj)) {
                        let cell = self.build(ii, jj);
                        self.cells.insert((ii, jj), cell);
                    }
                }
            }
        }
        Ok(&self.cells[&(i, j)])
    }

    fn build(&self, i: u32, j: u32) -> Vec<FamilyMember> {
        let sig = FamilySignature::new(i, j);
        if (i, j) == (1, 0) {
            let graph = crate::named::loop_graph();
            return alloc::vec![FamilyMember { graph, signature: sig, derivation: Derivation { root: 0, steps: Vec::new() } }];
        }
        let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
        let mut out = Vec::new();
        let mut push = |graph: Graph, parent: &FamilyMember, step: Step| {
            if seen.insert(canonical_form(&graph)) {
                let mut derivation = parent.derivation.clone();
                derivation.steps.push(step);
                out.push(FamilyMember { graph, signature: sig, derivation });
            }
        };
        if i >= 2 && j < i {
            for parent in self.cells.get(&(i - 1, j)).map(Vec::as_slice).unwrap_or(&[]) {
                let mut edges = parent.graph.edges();
                edges.dedup();
                for e in edges {
                    let (g, w) = subdivide_edge_at(&parent.graph, e).expect("edge of parent");
                    push(g, parent, Step::Subdivide { edge: e, new: w });
                }
            }
        }
        if j >= 1 {
            for parent in self.cells.get(&(i, j - 1)).map(Vec::as_slice).unwrap_or(&[]) {
                let h = &parent.graph;
                let edges = h.edges();
                let twos: Vec<_> = h.vertices().iter().copied().filter(|&v| h.degree(v) == 2).collect();
                for &a in &twos {
                    for p in 0..edges.len() {
                        for q in p..edges.len() {
                            // Equal pairs at different positions are parallel copies; one of them suffices.
                            if q > p + 1 && edges[q] == edges[q - 1] {
                                continue;
                            }
                            let same = p == q;
                            let (g, cv) = circ_op_at(h, edges[p], edges[q], a, same).expect("valid ∘");
                            let step = Step::Circ { e1: edges[p], e2: edges[q], same_edge: same, a, s1: cv.s1, s2: cv.s2, center: cv.center };
                            push(g, parent, step);
                        }
                    }
                }
            }
        }
        out
    }
}

/// All members of `F(i, j)` up to isomorphism, with `i + 3j` capped by `cap`.
pub fn generate_family(i: u32, j: u32, cap: usize) -> Result<Vec<FamilyMember>> {
    let mut catalog = FamilyCatalog::new(cap);
    Ok(catalog.get(i, j)?.to_vec())
}
