//! Girth, blocks, small edge cuts, and short-cycle witnesses.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Length of a shortest cycle; `None` means the graph is acyclic (infinite girth).
///
/// A loop is a cycle of length 1 and a parallel pair one of length 2.
pub fn girth(g: &Graph) -> Result<Option<usize>> {
    if g.is_empty() {
        return Err(Error::domain("girth of the empty graph"));
    }
    Ok(girth_unchecked(g))
}

pub(crate) fn girth_unchecked(g: &Graph) -> Option<usize> {
    if g.loop_count() > 0 {
        return Some(1);
    }
    if !g.is_simple() {
        return Some(2);
    }
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.adj_idx(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// True if every cycle has length at least `k` (acyclic graphs qualify).
pub fn has_girth_at_least(g: &Graph, k: usize) -> bool {
    g.is_empty() || girth_unchecked(g).map_or(true, |x| x >= k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// K1 or K2.
    Trivial,
    Nontrivial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
    pub kind: BlockKind,
}

/// Blocks (maximal connected subgraphs without a cut vertex) and cut vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<Vertex>,
}

impl BlockDecomposition {
    pub fn nontrivial(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(|b| b.kind == BlockKind::Nontrivial)
    }

    /// Blocks containing at most one cut vertex.
    pub fn end_blocks(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(|b| b.vertices.iter().filter(|v| self.cut_vertices.binary_search(v).is_ok()).count() <= 1)
    }
}

/// Block decomposition of a connected graph. A loop forms its own block.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if g.is_empty() || !g.is_connected() {
        return Err(Error::domain("block decomposition needs a connected nonempty graph"));
    }
    Ok(blocks_unchecked(g))
}

pub(crate) fn blocks_unchecked(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    if g.m() == 0 {
        return BlockDecomposition {
            blocks: g.vertices().iter().map(|&v| Block { vertices: vec![v], edges: vec![], kind: BlockKind::Trivial }).collect(),
            cut_vertices: vec![],
        };
    }
    // Edge list with ids so parallel edges stay distinguishable.
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut inc: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut loop_blocks = Vec::new();
    for (u, v) in g.edges() {
        let (i, j) = (g.idx(u), g.idx(v));
        if i == j {
            loop_blocks.push(Block { vertices: vec![u], edges: vec![(u, u)], kind: BlockKind::Nontrivial });
            continue;
        }
        let e = edges.len();
        edges.push((i, j));
        inc[i].push((j, e));
        inc[j].push((i, e));
    }

    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut raw_blocks: Vec<Vec<usize>> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, edge id used to enter, next incidence position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (u, pe, ref mut pos)) = stack.last_mut() {
            if *pos < inc[u].len() {
                let (w, e) = inc[u][*pos];
                *pos += 1;
                if e == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, e, 0));
                } else if disc[w] < disc[u] {
                    edge_stack.push(e);
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut blk = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            blk.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        raw_blocks.push(blk);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    let mut blocks: Vec<Block> = raw_blocks
        .into_iter()
        .map(|es| {
            let mut vs = BTreeSet::new();
            let mut bedges: Vec<(Vertex, Vertex)> = es
                .iter()
                .map(|&e| {
                    let (i, j) = edges[e];
                    vs.insert(i);
                    vs.insert(j);
                    let (a, b) = (g.id(i), g.id(j));
                    (a.min(b), a.max(b))
                })
                .collect();
            bedges.sort_unstable();
            let vertices: Vec<Vertex> = vs.into_iter().map(|i| g.id(i)).collect();
            let kind = if vertices.len() <= 2 && bedges.len() <= 1 { BlockKind::Trivial } else { BlockKind::Nontrivial };
            Block { vertices, edges: bedges, kind }
        })
        .collect();
    // A loop attached to a vertex makes that vertex a cut vertex unless it is alone.
    for lb in &loop_blocks {
        let v = lb.vertices[0];
        if g.n() > 1 {
            is_cut[g.idx(v)] = true;
        }
    }
    blocks.extend(loop_blocks);
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices).then(a.edges.cmp(&b.edges)));
    let cut_vertices = (0..n).filter(|&i| is_cut[i]).map(|i| g.id(i)).collect();
    BlockDecomposition { blocks, cut_vertices }
}

/// 2-connected in the sense used throughout: at least three vertices, connected,
/// and no cut vertex. Multigraph loops are ignored.
pub fn is_two_connected(g: &Graph) -> bool {
    if g.n() < 3 || !g.is_connected() {
        return false;
    }
    let bd = blocks_unchecked(g);
    bd.cut_vertices.is_empty() && bd.blocks.iter().filter(|b| b.edges.first().map_or(true, |e| e.0 != e.1)).count() == 1
}

/// Edges whose removal disconnects their component.
pub fn cut_edges(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let bd = blocks_unchecked(g);
    bd.blocks.iter().filter(|b| b.kind == BlockKind::Trivial && b.edges.len() == 1).map(|b| b.edges[0]).collect()
}

/// An ordered vertex partition `[side_a, side_b]` with its crossing edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCut {
    pub side_a: Vec<Vertex>,
    pub side_b: Vec<Vertex>,
    pub crossing_edges: Vec<(Vertex, Vertex)>,
}

impl EdgeCut {
    pub fn order(&self) -> usize {
        self.crossing_edges.len()
    }

    /// The same partition with the sides exchanged.
    pub fn flipped(&self) -> EdgeCut {
        EdgeCut { side_a: self.side_b.clone(), side_b: self.side_a.clone(), crossing_edges: self.crossing_edges.clone() }
    }

    /// Crossing-edge endpoints on side A, in crossing-edge order.
    pub fn ends_in_a(&self) -> Vec<Vertex> {
        self.crossing_edges.iter().map(|&(u, v)| if self.side_a.binary_search(&u).is_ok() { u } else { v }).collect()
    }

    pub fn ends_in_b(&self) -> Vec<Vertex> {
        self.crossing_edges.iter().map(|&(u, v)| if self.side_b.binary_search(&u).is_ok() { u } else { v }).collect()
    }
}

/// Every vertex bipartition of a connected graph crossed by at most two edges,
/// once per unordered partition, with the least vertex on side A.
pub fn edge_cuts_up_to_order2(g: &Graph) -> Vec<EdgeCut> {
    let edges: Vec<(Vertex, Vertex)> = g.edges().into_iter().filter(|e| e.0 != e.1).collect();
    let mut seen: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    let mut out = Vec::new();
    let least = match g.vertices().first() {
        Some(&v) => v,
        None => return out,
    };
    let mut consider = |removed: &[usize], out: &mut Vec<EdgeCut>| {
        let mut h = g.clone();
        for &e in removed {
            h.remove_edge(edges[e].0, edges[e].1).expect("edge present");
        }
        let comps = h.components();
        if comps.len() < 2 {
            return;
        }
        let k = comps.len();
        // The component holding the least vertex is always on side A.
        let home = comps.iter().position(|c| c.binary_search(&least).is_ok()).unwrap();
        for mask in 0u32..(1 << k) {
            if mask & (1 << home) == 0 || mask == (1 << k) - 1 {
                continue;
            }
            let in_a = |v: Vertex| comps.iter().enumerate().any(|(ci, c)| mask & (1 << ci) != 0 && c.binary_search(&v).is_ok());
            if !removed.iter().all(|&e| in_a(edges[e].0) != in_a(edges[e].1)) {
                continue;
            }
            let mut side_a: Vec<Vertex> = Vec::new();
            let mut side_b: Vec<Vertex> = Vec::new();
            for (ci, c) in comps.iter().enumerate() {
                if mask & (1 << ci) != 0 {
                    side_a.extend(c);
                } else {
                    side_b.extend(c);
                }
            }
            side_a.sort_unstable();
            side_b.sort_unstable();
            if seen.insert(side_a.clone()) {
                let crossing = removed.iter().map(|&e| edges[e]).collect();
                out.push(EdgeCut { side_a, side_b, crossing_edges: crossing });
            }
        }
    };
    for a in 0..edges.len() {
        consider(&[a], &mut out);
    }
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            consider(&[a, b], &mut out);
        }
    }
    out.sort_by(|x, y| x.side_a.len().cmp(&y.side_a.len()).then_with(|| x.side_a.cmp(&y.side_a)));
    out
}

/// 2-edge-connected, and every order-2 edge cut has a single vertex on one side.
pub fn is_internally_3ec(g: &Graph) -> bool {
    if !g.is_connected() || g.n() < 2 {
        return g.n() == 1;
    }
    let cuts = edge_cuts_up_to_order2(g);
    cuts.iter().all(|c| c.order() == 2 && (c.side_a.len() == 1 || c.side_b.len() == 1))
}

/// Every cycle of length at most `max_len`, each given once as a vertex sequence
/// in cyclic order starting from its least vertex.
///
/// Loops are reported as `[v]` and parallel pairs as `[u, v]`.
pub fn short_cycles(g: &Graph, max_len: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let n = g.n();
    if max_len >= 1 {
        for (u, v) in g.edges() {
            if u == v && out.last() != Some(&vec![u]) {
                out.push(vec![u]);
            }
        }
    }
    if max_len >= 2 {
        for i in 0..n {
            let nb = g.adj_idx(i);
            for w in nb.windows(2) {
                if w[0] == w[1] && w[0] > i && (out.last() != Some(&vec![g.id(i), g.id(w[0])])) {
                    out.push(vec![g.id(i), g.id(w[0])]);
                }
            }
        }
    }
    // Longer cycles: simple paths from the least vertex s through larger vertices.
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; n];
    for s in 0..n {
        path.clear();
        path.push(s);
        on_path[s] = true;
        extend_cycles(g, s, max_len, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
    }
    out
}

fn extend_cycles(g: &Graph, s: usize, max_len: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<Vertex>>) {
    let u = *path.last().unwrap();
    let mut prev = usize::MAX;
    for &w in g.adj_idx(u) {
        if w == prev {
            continue;
        }
        prev = w;
        if w == s && path.len() >= 3 {
            // Report each cycle once: second vertex smaller than the last.
            if path[1] < path[path.len() - 1] {
                out.push(path.iter().map(|&i| g.id(i)).collect());
            }
            continue;
        }
        if w > s && !on_path[w] && path.len() < max_len {
            path.push(w);
            on_path[w] = true;
            extend_cycles(g, s, max_len, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

/// Two vertex-disjoint cycles, each of length less than five, if they exist.
pub fn two_disjoint_short_cycles(g: &Graph) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let cycles = short_cycles(g, 4);
    for (a, ca) in cycles.iter().enumerate() {
        for cb in &cycles[a + 1..] {
            if ca.iter().all(|v| !cb.contains(v)) {
                return Some((ca.clone(), cb.clone()));
            }
        }
    }
    None
}

pub fn has_two_disjoint_short_cycles(g: &Graph) -> bool {
    two_disjoint_short_cycles(g).is_some()
}
