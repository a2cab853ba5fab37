//! Edge subdivision, the `∘` gadget, and degree-2 suppression.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Replaces one copy of edge `uv` by a path `u - w - v` through a fresh vertex `w`.
pub fn subdivide_edge(g: &Graph, e: (Vertex, Vertex)) -> Result<Graph> {
    Ok(subdivide_edge_at(g, e)?.0)
}

/// Like [`subdivide_edge`], also returning the new vertex.
pub fn subdivide_edge_at(g: &Graph, (u, v): (Vertex, Vertex)) -> Result<(Graph, Vertex)> {
    if g.multiplicity(u, v) == 0 {
        return Err(Error::domain(format!("edge {u}-{v} not in graph")));
    }
    let w = g.fresh_vertex();
    let mut h = g.without_edge(u, v)?;
    h.add_vertex(w);
    h.add_edge(u, w)?;
    h.add_edge(w, v)?;
    Ok((h, w))
}

/// Vertices created by one application of `∘`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CircVertices {
    /// Subdivision vertex on the first edge.
    pub s1: Vertex,
    /// Subdivision vertex on the second edge (next to `s1` when the edges coincide).
    pub s2: Vertex,
    /// The new vertex joined to `s1`, `s2`, and `a`.
    pub center: Vertex,
}

/// `g ∘ (e1, e2, a)`: subdivide `e1` and `e2` once each, then add a vertex adjacent
/// to `a` and both subdivision vertices. When `e1 == e2` that edge is subdivided twice.
pub fn circ_op(g: &Graph, e1: (Vertex, Vertex), e2: (Vertex, Vertex), a: Vertex) -> Result<Graph> {
    let same = (e1.0.min(e1.1), e1.0.max(e1.1)) == (e2.0.min(e2.1), e2.0.max(e2.1));
    Ok(circ_op_at(g, e1, e2, a, same)?.0)
}

/// `∘` with explicit control over whether `e1` and `e2` denote the same edge,
/// which matters only when they are parallel copies.
pub fn circ_op_at(g: &Graph, e1: (Vertex, Vertex), e2: (Vertex, Vertex), a: Vertex, same_edge: bool) -> Result<(Graph, CircVertices)> {
    if !g.contains(a) || g.degree(a) != 2 {
        return Err(Error::domain(format!("vertex {a} must have degree 2")));
    }
    let need = if same_edge { 1 } else if norm(e1) == norm(e2) { 2 } else { 1 };
    if g.multiplicity(e1.0, e1.1) < need || g.multiplicity(e2.0, e2.1) == 0 {
        return Err(Error::domain("edge of the ∘ operation not in graph"));
    }
    let base = g.fresh_vertex();
    let (s1, s2, c) = (base, base + 1, base + 2);
    let mut h = g.clone();
    h.add_vertex(s1);
    h.add_vertex(s2);
    h.add_vertex(c);
    if same_edge {
        let (x, y) = e1;
        h.remove_edge(x, y)?;
        h.add_edge(x, s1)?;
        h.add_edge(s1, s2)?;
        h.add_edge(s2, y)?;
    } else {
        h.remove_edge(e1.0, e1.1)?;
        h.add_edge(e1.0, s1)?;
        h.add_edge(s1, e1.1)?;
        h.remove_edge(e2.0, e2.1)?;
        h.add_edge(e2.0, s2)?;
        h.add_edge(s2, e2.1)?;
    }
    h.add_edge(c, s1)?;
    h.add_edge(c, s2)?;
    h.add_edge(c, a)?;
    Ok((h, CircVertices { s1, s2, center: c }))
}

fn norm((u, v): (Vertex, Vertex)) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

/// Removes a degree-2 vertex `w` without a loop and joins its two neighbors.
pub fn suppress_vertex(g: &Graph, w: Vertex) -> Result<Graph> {
    if !g.contains(w) || g.degree(w) != 2 || g.multiplicity(w, w) > 0 {
        return Err(Error::domain(format!("vertex {w} is not a loopless degree-2 vertex")));
    }
    let nb: Vec<Vertex> = g.neighbors(w).collect();
    let mut h = g.without_vertex(w);
    h.add_edge(nb[0], nb[1])?;
    Ok(h)
}
