//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Level `n + 1` is built from level `n` by adding one vertex joined to a
//! subset of the old vertices. Every connected graph has a non-cut vertex,
//! so connected graphs arise from connected parents. All filters are closed
//! under taking induced subgraphs, so they prune every level, not just the last.

use std::collections::HashSet;

use fvslab_core::canon::{canonical_form, canonical_graph};
use fvslab_core::family::forbidden_witness;
use fvslab_core::planarity::is_planar;
use fvslab_core::structure::has_two_disjoint_short_cycles;
use fvslab_core::{Error, Graph, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Filters {
    pub connected: bool,
    pub planar: bool,
    pub girth_min: Option<usize>,
    pub subcubic: bool,
    pub no_two_disjoint_short_cycles: bool,
    pub forbidden_free: bool,
}

impl Filters {
    pub fn connected() -> Self {
        Filters { connected: true, ..Filters::default() }
    }

    /// Largest `max_n` accepted.
    pub fn cap(&self) -> usize {
        if self.subcubic || self.girth_min.is_some_and(|k| k >= 5) {
            20
        } else {
            12
        }
    }

    /// Filters whose test is more than a local check on the new vertex.
    fn accepts(&self, g: &Graph) -> bool {
        if self.planar && !is_planar(g) {
            return false;
        }
        if self.no_two_disjoint_short_cycles && has_two_disjoint_short_cycles(g) {
            return false;
        }
        if self.forbidden_free && !(self.planar || g.n() < smallest_forbidden()) && forbidden_witness(g).is_some() {
            return false;
        }
        true
    }
}

fn smallest_forbidden() -> usize {
    fvslab_core::family::forbidden_family().iter().map(Graph::n).min().unwrap_or(usize::MAX)
}

/// One representative per isomorphism class on `1..=max_n` vertices passing
/// `filters`, each relabeled canonically onto `0..n`. Order is by vertex
/// count, then discovery order, and is deterministic.
pub fn enumerate_graphs(max_n: usize, filters: &Filters) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for_each_graph(max_n, filters, |g| out.push(g.clone()))?;
    Ok(out)
}

/// As [`enumerate_graphs`], handing each graph to `visit` level by level.
pub fn for_each_graph(max_n: usize, filters: &Filters, mut visit: impl FnMut(&Graph)) -> Result<()> {
    if max_n > filters.cap() {
        return Err(Error::Resource {
            message: format!("max_n = {max_n} exceeds the cap {} for these filters", filters.cap()),
            best_upper_bound: None,
        });
    }
    if max_n == 0 {
        return Ok(());
    }
    let mut level = vec![Graph::from_edges(1, &[])];
    visit(&level[0]);
    for n in 1..max_n {
        level = next_level(&level, n, filters);
        level.iter().for_each(&mut visit);
    }
    Ok(())
}

fn next_level(parents: &[Graph], n: usize, f: &Filters) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in parents {
        let dist = (f.girth_min.unwrap_or(0) > 3).then(|| distances(p));
        for mask in 0u32..1 << n {
            if f.connected && mask == 0 {
                continue;
            }
            let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if f.subcubic && (s.len() > 3 || s.iter().any(|&v| p.degree(v) > 2)) {
                continue;
            }
            if let Some(k) = f.girth_min {
                // A new vertex on a, b closes a cycle of length dist(a, b) + 2.
                let short = match &dist {
                    Some(d) => s.iter().enumerate().any(|(x, &a)| s[x + 1..].iter().any(|&b| d[a][b] + 2 < k)),
                    None => false,
                };
                if short {
                    continue;
                }
            }
            let mut g = p.clone();
            g.add_vertex(n);
            for &v in &s {
                g.add_edge(v, n).expect("fresh edge");
            }
            if !seen.insert(canonical_form(&g)) || !f.accepts(&g) {
                continue;
            }
            out.push(canonical_graph(&g).0);
        }
    }
    out
}

/// All-pairs distances, `usize::MAX / 2` between components.
fn distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let far = usize::MAX / 2;
    let mut d = vec![vec![far; n]; n];
    for s in 0..n {
        d[s][s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if d[s][w] == far {
                    d[s][w] = d[s][u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use fvslab_core::are_isomorphic;
    use fvslab_core::structure::has_girth_at_least;

    fn counts(max_n: usize, f: &Filters) -> Vec<usize> {
        let mut c = vec![0; max_n];
        for g in enumerate_graphs(max_n, f).unwrap() {
            c[g.n() - 1] += 1;
        }
        c
    }

    /// Every labeled simple graph on `n` vertices, reduced by pairwise isomorphism tests.
    fn brute(n: usize, keep: impl Fn(&Graph) -> bool) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut reps: Vec<Graph> = Vec::new();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges);
            if keep(&g) && !reps.iter().any(|h| are_isomorphic(h, &g)) {
                reps.push(g);
            }
        }
        reps.len()
    }

    #[test]
    fn connected_counts() {
        assert_eq!(counts(7, &Filters::connected()), vec![1, 1, 2, 6, 21, 112, 853]);
        assert_eq!(counts(4, &Filters::default()), vec![1, 2, 4, 11]);
        let c = counts(5, &Filters::connected());
        assert_eq!(c.iter().sum::<usize>(), 31);
        for n in 1..=5 {
            assert_eq!(c[n - 1], brute(n, Graph::is_connected));
        }
    }

    #[test]
    fn girth_and_degree_filters_match_brute_force() {
        let g5 = Filters { connected: true, girth_min: Some(5), ..Filters::default() };
        let sub = Filters { connected: true, subcubic: true, ..Filters::default() };
        let planar = Filters { connected: true, planar: true, ..Filters::default() };
        let c = counts(6, &g5);
        let c_sub = counts(6, &sub);
        let c_pl = counts(6, &planar);
        for n in 1..=6 {
            assert_eq!(c[n - 1], brute(n, |g| g.is_connected() && has_girth_at_least(g, 5)));
            assert_eq!(c_sub[n - 1], brute(n, |g| g.is_connected() && g.is_subcubic()));
            assert_eq!(c_pl[n - 1], brute(n, |g| g.is_connected() && is_planar(g)));
        }
        // Trees on at most 5 vertices plus C5.
        assert_eq!(&c[..5], &[1, 1, 1, 2, 4]);
        assert_eq!(&c_sub[..5], &[1, 1, 2, 6, 10]);
    }

    #[test]
    fn cubic_girth5_counts() {
        // Cubic girth-5 graphs: Petersen alone on 10 vertices, 2 on 12, 9 on 14.
        let f = Filters { connected: true, subcubic: true, girth_min: Some(5), ..Filters::default() };
        let cubic = |n: usize| enumerate_graphs(n, &f).unwrap().into_iter().filter(|g| g.n() == n && g.min_degree() == 3).count();
        assert_eq!(cubic(10), 1);
        assert_eq!(cubic(12), 2);
    }

    #[test]
    fn caps() {
        assert!(matches!(enumerate_graphs(13, &Filters::connected()), Err(Error::Resource { .. })));
        assert!(enumerate_graphs(0, &Filters::connected()).unwrap().is_empty());
    }
}
