//! The families `F(i, j)`, their error terms, and the forbidden family.
//!
//! `F(1, 0)` is the one-vertex loop graph. A member of `F(i, j)` arises from a
//! member of `F(i - 1, j)` by subdividing an edge, or from a member of
//! `F(i, j - 1)` by the `∘` operation. Members have `i + 3j` vertices,
//! `i + 5j` edges, and `i - j` vertices of degree two, so the pair `(i, j)`
//! is readable off the vertex and edge counts.

mod fvs;
mod generate;
mod recognize;

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;
use core::sync::atomic::{AtomicPtr, Ordering};

pub use fvs::{family_fvs, FvsTarget};
pub use generate::{generate_family, FamilyCatalog, DEFAULT_CAP};
pub use recognize::{family_member, family_membership, Recognizer};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::ops;
use crate::sevenths::Sevenths;
use crate::structure::{blocks_unchecked, has_girth_at_least, is_two_connected};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilySignature {
    pub i: u32,
    pub j: u32,
}

impl FamilySignature {
    pub fn new(i: u32, j: u32) -> Self {
        FamilySignature { i, j }
    }

    /// `max((5 - i)/7, 0)`.
    pub fn epsilon(self) -> Sevenths {
        Sevenths((5 - i64::from(self.i)).max(0))
    }

    pub fn vertex_count(self) -> usize {
        (self.i + 3 * self.j) as usize
    }

    pub fn edge_count(self) -> usize {
        (self.i + 5 * self.j) as usize
    }

    /// The only signature a graph with these counts could have, if any.
    /// Also demands every degree be 2 or 3, which members always satisfy.
    pub fn from_counts(g: &Graph) -> Option<FamilySignature> {
        let (n, m) = (g.n(), g.m());
        if n == 0 || m < n || (m - n) % 2 != 0 {
            return None;
        }
        let j = (m - n) / 2;
        let i = n.checked_sub(3 * j)?;
        if i == 0 || j > i || g.vertices().iter().any(|&v| !(2..=3).contains(&g.degree(v))) {
            return None;
        }
        Some(FamilySignature::new(i as u32, j as u32))
    }
}

impl fmt::Display for FamilySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({},{})", self.i, self.j)
    }
}

/// One step of a derivation, written in the final graph's vertex ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// Subdivide one copy of `edge` with the new vertex `new`.
    Subdivide { edge: (Vertex, Vertex), new: Vertex },
    /// `∘` on `e1`, `e2` and the degree-2 vertex `a`.
    Circ {
        e1: (Vertex, Vertex),
        e2: (Vertex, Vertex),
        same_edge: bool,
        a: Vertex,
        s1: Vertex,
        s2: Vertex,
        center: Vertex,
    },
}

/// How to build a member from the loop graph on `root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub root: Vertex,
    pub steps: Vec<Step>,
}

impl Derivation {
    /// Rebuilds the graph, with exactly the recorded vertex ids.
    pub fn replay(&self) -> Result<Graph> {
        let mut g = Graph::from_parts([self.root], [(self.root, self.root)])?;
        for step in &self.steps {
            apply(&mut g, step)?;
        }
        Ok(g)
    }

    pub fn signature(&self) -> FamilySignature {
        let j = self.steps.iter().filter(|s| matches!(s, Step::Circ { .. })).count() as u32;
        FamilySignature::new(1 + self.steps.len() as u32 - j, j)
    }
}

pub(crate) fn apply(g: &mut Graph, step: &Step) -> Result<()> {
    match *step {
        Step::Subdivide { edge: (x, y), new } => {
            g.remove_edge(x, y)?;
            g.add_vertex(new);
            g.add_edge(x, new)?;
            g.add_edge(new, y)?;
        }
        Step::Circ { e1, e2, same_edge, a, s1, s2, center } => {
            if g.degree(a) != 2 {
                return Err(Error::domain("∘ needs a degree-2 vertex"));
            }
            for v in [s1, s2, center] {
                g.add_vertex(v);
            }
            g.remove_edge(e1.0, e1.1)?;
            if same_edge {
                g.add_edge(e1.0, s1)?;
                g.add_edge(s1, s2)?;
                g.add_edge(s2, e1.1)?;
            } else {
                g.add_edge(e1.0, s1)?;
                g.add_edge(s1, e1.1)?;
                g.remove_edge(e2.0, e2.1)?;
                g.add_edge(e2.0, s2)?;
                g.add_edge(s2, e2.1)?;
            }
            g.add_edge(center, s1)?;
            g.add_edge(center, s2)?;
            g.add_edge(center, a)?;
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub graph: Graph,
    pub signature: FamilySignature,
    pub derivation: Derivation,
}

impl FamilyMember {
    pub fn degree2_count(&self) -> usize {
        self.graph.vertices().iter().filter(|&&v| self.graph.degree(v) == 2).count()
    }
}

/// `ε(g)` for a 2-connected graph or a multigraph on at most two vertices.
pub fn epsilon_of(g: &Graph) -> Result<Sevenths> {
    epsilon_with(g, &mut Recognizer::new())
}

pub(crate) fn epsilon_with(g: &Graph, rec: &mut Recognizer) -> Result<Sevenths> {
    if g.n() > 2 && !is_two_connected(g) {
        return Err(Error::domain("ε is defined for 2-connected graphs and graphs on at most two vertices"));
    }
    Ok(rec.signature(g).map_or(Sevenths::ZERO, FamilySignature::epsilon))
}

/// `r(g)`: the sum of `ε` over the blocks of a connected simple graph, or
/// `ε(g)` for a family member that is not simple.
pub fn r_of(g: &Graph) -> Result<Sevenths> {
    r_with(g, &mut Recognizer::new())
}

pub(crate) fn r_with(g: &Graph, rec: &mut Recognizer) -> Result<Sevenths> {
    if g.is_empty() || !g.is_connected() {
        return Err(Error::domain("r is defined for connected graphs"));
    }
    if !g.is_simple() {
        return match rec.signature(g) {
            Some(s) => Ok(s.epsilon()),
            None => Err(Error::domain("r is defined for simple graphs and family members")),
        };
    }
    let mut total = Sevenths::ZERO;
    for b in blocks_unchecked(g).nontrivial() {
        let h = g.induced(&b.vertices);
        total += rec.signature(&h).map_or(Sevenths::ZERO, FamilySignature::epsilon);
    }
    Ok(total)
}

static FORBIDDEN: AtomicPtr<Vec<Graph>> = AtomicPtr::new(core::ptr::null_mut());

/// The forbidden family: girth-≥5 members of `F(4,2)` and `F(4,3)`, and the
/// members `H` of `F(3,2)` and `F(3,3)` having an edge `e` with `H - e` of
/// girth at least 5. Computed once and shared.
pub fn forbidden_family() -> &'static [Graph] {
    let p = FORBIDDEN.load(Ordering::Acquire);
    if !p.is_null() {
        // SAFETY: a non-null pointer was published by a successful compare_exchange below
        // and is never freed or mutated afterwards.
        return unsafe { &*p };
    }
    let fresh = Box::into_raw(Box::new(compute_forbidden()));
    match FORBIDDEN.compare_exchange(core::ptr::null_mut(), fresh, Ordering::AcqRel, Ordering::Acquire) {
        // SAFETY: we just leaked `fresh` and published it; it lives for the rest of the program.
        Ok(_) => unsafe { &*fresh },
        Err(existing) => {
            // SAFETY: `fresh` was never shared, so we still own it.
            drop(unsafe { Box::from_raw(fresh) });
            // SAFETY: as in the fast path.
            unsafe { &*existing }
        }
    }
}

fn compute_forbidden() -> Vec<Graph> {
    let mut catalog = FamilyCatalog::new(13);
    let mut out = Vec::new();
    for (i, j) in [(4, 2), (4, 3)] {
        let cell = catalog.get(i, j).expect("within cap");
        out.extend(cell.iter().filter(|m| has_girth_at_least(&m.graph, 5)).map(|m| m.graph.clone()));
    }
    for (i, j) in [(3, 2), (3, 3)] {
        let cell = catalog.get(i, j).expect("within cap");
        for m in cell {
            let g = &m.graph;
            if g.edges().iter().any(|&(u, v)| has_girth_at_least(&g.without_edge(u, v).unwrap(), 5)) {
                out.push(g.clone());
            }
        }
    }
    out
}

/// Whether `g` contains an induced subdivision of some forbidden graph.
///
/// Every forbidden graph is non-planar, so planar inputs answer `None` at once.
pub fn forbidden_witness(g: &Graph) -> Option<(usize, Vec<Vertex>)> {
    if crate::planarity::is_planar(g) {
        return None;
    }
    forbidden_family()
        .iter()
        .enumerate()
        .find_map(|(k, h)| crate::subdivision::contains_induced_subdivision(g, h).map(|w| (k, w)))
}

pub(crate) fn suppress(g: &Graph, w: Vertex) -> Option<Graph> {
    ops::suppress_vertex(g, w).ok()
}
