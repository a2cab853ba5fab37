//! Named graphs and seeded random planar girth-5 instances.

use std::collections::{BTreeMap, VecDeque};

use fvslab_core::named::*;
use fvslab_core::planarity::is_planar;
use fvslab_core::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn named_corpus() -> BTreeMap<&'static str, Graph> {
    BTreeMap::from([
        ("dodecahedron", dodecahedron()),
        ("Q3", cube()),
        ("V8", wagner()),
        ("K4", complete(4)),
        ("K4+", k4_plus()),
        ("K3,3", complete_bipartite(3, 3)),
        ("M6", mobius_ladder(6)),
        ("M8", mobius_ladder(8)),
        ("M10", mobius_ladder(10)),
        ("Petersen", petersen()),
    ])
}

/// A random tree on `n` vertices grown to a maximal planar graph of girth
/// at least five. Non-edges are tried once each in random order; since both
/// properties only get harder to keep as edges are added, one pass is maximal.
pub fn random_planar_girth5(rng: &mut impl Rng, n: usize) -> Graph {
    let mut g = Graph::from_edges(n, &[]);
    for v in 1..n {
        g.add_edge(rng.gen_range(0..v), v).expect("tree edge");
    }
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if distance(&g, u, v) < 4 {
            continue;
        }
        let h = g.with_edge(u, v).expect("vertices exist");
        if is_planar(&h) {
            g = h;
        }
    }
    g
}

/// `count` instances with `n` uniform in `5..=max_n`, reproducible from `seed`.
pub fn random_planar_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(5..=max_n.max(5));
            random_planar_girth5(&mut rng, n)
        })
        .collect()
}

fn distance(g: &Graph, s: usize, t: usize) -> usize {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == t {
            return dist[u];
        }
        for w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    usize::MAX
}

#[cfg(test)]
mod tests {
    use super::*;
    use fvslab_core::are_isomorphic;
    use fvslab_core::canonical_form;
    use fvslab_core::structure::{girth, has_girth_at_least};

    #[test]
    fn named_graphs() {
        let c = named_corpus();
        let d = &c["dodecahedron"];
        assert_eq!((d.n(), d.m(), d.min_degree(), d.max_degree()), (20, 30, 3, 3));
        assert!(is_planar(d));
        assert_eq!(girth(d).unwrap(), Some(5));
        let v8 = &c["V8"];
        assert_eq!((v8.n(), v8.m(), v8.min_degree(), v8.max_degree()), (8, 12, 3, 3));
        assert!(are_isomorphic(&c["M6"], &c["K3,3"]));
        assert!(are_isomorphic(&c["M8"], v8));
        assert_eq!(canonical_form(&c["Q3"]), canonical_form(&cube()));
        for k in [6, 8, 10] {
            let m = &c[format!("M{k}").as_str()];
            assert!(!is_planar(m));
            assert!(m.vertices().iter().all(|&v| is_planar(&m.without_vertex(v))));
        }
    }

    #[test]
    fn random_instances_are_maximal() {
        for g in random_planar_corpus(3, 20, 14) {
            assert!(g.is_connected() && is_planar(&g) && has_girth_at_least(&g, 5));
            for v in 0..g.n() {
                for u in 0..v {
                    if !g.has_edge(u, v) {
                        let h = g.with_edge(u, v).unwrap();
                        assert!(!is_planar(&h) || !has_girth_at_least(&h, 5));
                    }
                }
            }
        }
        assert_eq!(random_planar_corpus(9, 5, 20), random_planar_corpus(9, 5, 20));
    }
}
