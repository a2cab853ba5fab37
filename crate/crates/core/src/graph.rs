//! Undirected multigraph over a sorted set of small integer vertex ids.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An undirected multigraph.
///
/// Vertices carry arbitrary ids kept in ascending order; operations that
/// delete vertices keep the surviving ids, so vertex sets computed on a
/// subgraph are directly meaningful in the original graph. A loop at `v`
/// contributes two incidences to `degree(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    ids: Vec<Vertex>,
    // Neighbor indices, sorted; parallel edges repeat, a loop at i lists i twice.
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on vertices `0..n` with the given edges.
    ///
    /// Panics if an endpoint is out of range; use [`Graph::from_parts`] for
    /// untrusted input.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        Self::from_parts(0..n, edges.iter().copied()).expect("edge endpoint out of range")
    }

    /// Graph on the given vertex ids (duplicates ignored) and edges.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let ids: BTreeSet<Vertex> = vertices.into_iter().collect();
        let mut g = Graph { ids: ids.into_iter().collect(), adj: Vec::new() };
        g.adj = vec![Vec::new(); g.ids.len()];
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.ids
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.index_of(v).is_some()
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub(crate) fn idx(&self, v: Vertex) -> usize {
        self.index_of(v).expect("vertex not in graph")
    }

    pub(crate) fn id(&self, i: usize) -> Vertex {
        self.ids[i]
    }

    /// Neighbor indices of the vertex at index `i`, with repetition.
    pub(crate) fn adj_idx(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    /// A vertex id not yet used.
    pub fn fresh_vertex(&self) -> Vertex {
        self.ids.last().map_or(0, |&v| v + 1)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[self.idx(v)].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    /// Neighbors of `v` with repetition for parallel edges; a loop lists `v` twice.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[self.idx(v)].iter().map(move |&j| self.ids[j])
    }

    /// Distinct neighbors of `v`, excluding `v` itself.
    pub fn distinct_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.neighbors(v).filter(|&w| w != v).collect();
        out.dedup();
        out
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        let (Some(i), Some(j)) = (self.index_of(u), self.index_of(v)) else {
            return 0;
        };
        let c = self.adj[i].iter().filter(|&&k| k == j).count();
        if i == j {
            c / 2
        } else {
            c
        }
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (Some(i), Some(j)) = (self.index_of(u), self.index_of(v)) else {
            return false;
        };
        self.adj[i].binary_search(&j).is_ok()
    }

    /// All edges as `(u, v)` with `u <= v`, sorted, parallel edges repeated.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m());
        for (i, nb) in self.adj.iter().enumerate() {
            let mut loops = 0;
            for &j in nb {
                if j > i {
                    out.push((self.ids[i], self.ids[j]));
                } else if j == i {
                    loops += 1;
                    if loops % 2 == 0 {
                        out.push((self.ids[i], self.ids[i]));
                    }
                }
            }
        }
        out
    }

    pub fn loop_count(&self) -> usize {
        self.adj.iter().enumerate().map(|(i, nb)| nb.iter().filter(|&&j| j == i).count() / 2).sum()
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        self.adj.iter().enumerate().all(|(i, nb)| nb.windows(2).all(|w| w[0] != w[1]) && !nb.contains(&i))
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        if let Err(pos) = self.ids.binary_search(&v) {
            self.ids.insert(pos, v);
            self.adj.insert(pos, Vec::new());
            for nb in &mut self.adj {
                for j in nb.iter_mut() {
                    if *j >= pos {
                        *j += 1;
                    }
                }
            }
        }
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let i = self.index_of(u).ok_or_else(|| Error::domain(alloc::format!("vertex {u} not in graph")))?;
        let j = self.index_of(v).ok_or_else(|| Error::domain(alloc::format!("vertex {v} not in graph")))?;
        insert_sorted(&mut self.adj[i], j);
        insert_sorted(&mut self.adj[j], i);
        Ok(())
    }

    /// Removes one copy of the edge `uv`.
    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let (Some(i), Some(j)) = (self.index_of(u), self.index_of(v)) else {
            return Err(Error::domain(alloc::format!("edge {u}-{v} not in graph")));
        };
        let pos = self.adj[i].binary_search(&j).map_err(|_| Error::domain(alloc::format!("edge {u}-{v} not in graph")))?;
        self.adj[i].remove(pos);
        let pos = self.adj[j].binary_search(&i).expect("adjacency out of sync");
        self.adj[j].remove(pos);
        Ok(())
    }

    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        let mut g = self.clone();
        g.remove_edge(u, v)?;
        Ok(g)
    }

    /// The subgraph induced on `keep` (ids absent from the graph are ignored).
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut mask = vec![false; self.n()];
        for &v in keep {
            if let Some(i) = self.index_of(v) {
                mask[i] = true;
            }
        }
        self.induced_mask(&mask)
    }

    pub fn without_vertices(&self, remove: &[Vertex]) -> Graph {
        let mut mask = vec![true; self.n()];
        for &v in remove {
            if let Some(i) = self.index_of(v) {
                mask[i] = false;
            }
        }
        self.induced_mask(&mask)
    }

    pub fn without_vertex(&self, v: Vertex) -> Graph {
        self.without_vertices(&[v])
    }

    pub(crate) fn induced_mask(&self, keep: &[bool]) -> Graph {
        let mut new_index = vec![usize::MAX; self.n()];
        let mut ids = Vec::new();
        for (i, &k) in keep.iter().enumerate() {
            if k {
                new_index[i] = ids.len();
                ids.push(self.ids[i]);
            }
        }
        let mut adj = vec![Vec::new(); ids.len()];
        for (i, nb) in self.adj.iter().enumerate() {
            if !keep[i] {
                continue;
            }
            let a = &mut adj[new_index[i]];
            a.extend(nb.iter().filter(|&&j| keep[j]).map(|&j| new_index[j]));
        }
        Graph { ids, adj }
    }

    /// Connected components as sorted vertex-id lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(self.ids[u]);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_graphs(&self) -> Vec<Graph> {
        let comps = self.components();
        if comps.len() == 1 {
            return vec![self.clone()];
        }
        comps.iter().map(|c| self.induced(c)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// True when the graph has no cycle (loops and parallel pairs are cycles).
    pub fn is_forest(&self) -> bool {
        let mut uf = UnionFind::new(self.n());
        for (i, nb) in self.adj.iter().enumerate() {
            for (k, &j) in nb.iter().enumerate() {
                if j < i {
                    continue;
                }
                if j == i || (k > 0 && nb[k - 1] == j) {
                    return false;
                }
                if !uf.union(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// Graph with every vertex id replaced through `map` (must be injective).
    pub fn relabeled(&self, map: impl Fn(Vertex) -> Vertex) -> Graph {
        let verts: Vec<Vertex> = self.ids.iter().map(|&v| map(v)).collect();
        let edges = self.edges().into_iter().map(|(u, v)| (map(u), map(v)));
        let g = Graph::from_parts(verts, edges).expect("relabel keeps endpoints");
        debug_assert_eq!(g.n(), self.n(), "relabel map must be injective");
        g
    }

    /// Same graph with ids replaced by `0..n` in ascending order.
    pub fn compacted(&self) -> Graph {
        Graph { ids: (0..self.n()).collect(), adj: self.adj.clone() }
    }
}

fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    let pos = v.partition_point(|&y| y <= x);
    v.insert(pos, x);
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            core::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// True when removing `set` from `g` leaves a forest.
pub fn is_forest_after_removal(g: &Graph, set: &[Vertex]) -> bool {
    g.without_vertices(set).is_forest()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_count_loops_twice() {
        let g = Graph::from_edges(2, &[(0, 0), (0, 1), (0, 1)]);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.m(), 3);
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.multiplicity(0, 0), 1);
        assert!(!g.is_simple());
        assert_eq!(g.edges(), vec![(0, 0), (0, 1), (0, 1)]);
    }

    #[test]
    fn induced_keeps_ids() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let h = g.without_vertex(2);
        assert_eq!(h.vertices(), &[0, 1, 3, 4]);
        assert_eq!(h.edges(), vec![(0, 1), (0, 4), (3, 4)]);
        assert!(h.is_forest());
        assert!(!g.is_forest());
    }

    #[test]
    fn bad_edge_is_domain_error() {
        assert!(matches!(Graph::from_parts([0, 1], [(0, 5)]), Err(Error::Domain(_))));
        let mut g = Graph::from_edges(2, &[(0, 1)]);
        assert!(g.remove_edge(0, 1).is_ok());
        assert!(g.remove_edge(0, 1).is_err());
    }

    #[test]
    fn add_vertex_reindexes() {
        let mut g = Graph::from_parts([1, 5], [(1, 5)]).unwrap();
        g.add_vertex(3);
        g.add_edge(3, 5).unwrap();
        assert_eq!(g.vertices(), &[1, 3, 5]);
        assert_eq!(g.edges(), vec![(1, 5), (3, 5)]);
        assert_eq!(g.fresh_vertex(), 6);
    }
}
