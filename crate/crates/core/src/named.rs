//! Constructors for the fixed graphs the rest of the crate refers to.

use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};

pub fn cycle(n: usize) -> Graph {
    match n {
        0 => Graph::new(),
        1 => loop_graph(),
        2 => Graph::from_edges(2, &[(0, 1), (0, 1)]),
        _ => {
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
    }
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::from_edges(a + b, &edges)
}

pub fn star(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

/// One vertex with one loop; the only member of `F(1, 0)`.
pub fn loop_graph() -> Graph {
    Graph::from_edges(1, &[(0, 0)])
}

/// K4 with one edge subdivided.
pub fn k4_plus() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 3)])
}

/// K3,3 with one edge subdivided.
pub fn k33_plus() -> Graph {
    let mut g = complete_bipartite(3, 3);
    g.remove_edge(0, 3).unwrap();
    g.add_vertex(6);
    g.add_edge(0, 6).unwrap();
    g.add_edge(6, 3).unwrap();
    g
}

/// The cube Q3.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in [1, 2, 4] {
            let v = u ^ bit;
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(8, &edges)
}

/// The n-cycle plus a chord between every pair of opposite vertices (n even, n >= 4).
pub fn mobius_ladder(n: usize) -> Graph {
    assert!(n >= 4 && n % 2 == 0, "M_n needs an even n >= 4");
    let mut edges: Vec<(Vertex, Vertex)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n / 2 {
        edges.push((i, i + n / 2));
    }
    Graph::from_edges(n, &edges)
}

/// The Wagner graph V8 = M8.
pub fn wagner() -> Graph {
    mobius_ladder(8)
}

/// Generalized Petersen graph GP(k, s): outer k-cycle, spokes, inner star polygon.
pub fn generalized_petersen(k: usize, s: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((i, k + i));
        edges.push((k + i, k + (i + s) % k));
    }
    Graph::from_edges(2 * k, &edges)
}

pub fn petersen() -> Graph {
    generalized_petersen(5, 2)
}

/// The dodecahedron, realised as GP(10, 2).
pub fn dodecahedron() -> Graph {
    generalized_petersen(10, 2)
}
