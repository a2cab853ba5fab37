//! Planarity testing by face-by-face path embedding (Demoucron–Malgrange–Pertuiset).
//!
//! The graph is split into blocks; each 2-connected block is grown from a
//! cycle by repeatedly embedding a path of some fragment into a face that
//! contains all of that fragment's attachment vertices. A fragment with no
//! admissible face certifies non-planarity. Loops and parallel edges do not
//! affect planarity and are ignored. Quadratic per block, plenty for the
//! graph sizes handled here.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::structure::{blocks_unchecked, BlockKind};

pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    if n <= 4 {
        return true;
    }
    let simple_m = (0..n).map(|i| distinct(g.adj_idx(i), i).len()).sum::<usize>() / 2;
    if simple_m > 3 * n - 6 {
        return false;
    }
    let bd = blocks_unchecked(g);
    for b in bd.blocks.iter().filter(|b| b.kind == BlockKind::Nontrivial) {
        let k = b.vertices.len();
        if k <= 4 {
            continue;
        }
        let local = |v| b.vertices.binary_search(&v).unwrap();
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); k];
        for &(u, v) in &b.edges {
            if u != v {
                adj[local(u)].insert(local(v));
                adj[local(v)].insert(local(u));
            }
        }
        let edges: usize = adj.iter().map(BTreeSet::len).sum::<usize>() / 2;
        if edges > 3 * k - 6 || !biconnected_planar(&adj) {
            return false;
        }
    }
    true
}

fn distinct(nb: &[usize], me: usize) -> Vec<usize> {
    let mut v: Vec<usize> = nb.iter().copied().filter(|&j| j != me).collect();
    v.dedup();
    v
}

struct Fragment {
    attachments: Vec<usize>,
    // Interior vertices; empty for a single chord.
    interior: Vec<usize>,
}

fn biconnected_planar(adj: &[BTreeSet<usize>]) -> bool {
    let k = adj.len();
    let mut emb_v = vec![false; k];
    let mut emb_e: BTreeSet<(usize, usize)> = BTreeSet::new();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));

    // Initial cycle: an edge plus a shortest detour around it.
    let u0 = 0;
    let v0 = *adj[0].iter().next().expect("block vertex has neighbors");
    let detour = match bfs_path(adj, u0, v0, |a, b| !(key(a, b) == key(u0, v0)), |_| true) {
        Some(p) => p,
        None => return true,
    };
    for w in detour.windows(2) {
        emb_e.insert(key(w[0], w[1]));
    }
    emb_e.insert(key(u0, v0));
    for &x in &detour {
        emb_v[x] = true;
    }
    let mut faces: Vec<Vec<usize>> = vec![detour.clone(), detour.iter().rev().copied().collect()];

    loop {
        let frags = fragments(adj, &emb_v, &emb_e);
        if frags.is_empty() {
            return true;
        }
        let admissible: Vec<Vec<usize>> = frags
            .iter()
            .map(|f| (0..faces.len()).filter(|&fi| f.attachments.iter().all(|a| faces[fi].contains(a))).collect())
            .collect();
        if admissible.iter().any(Vec::is_empty) {
            return false;
        }
        let pick = admissible.iter().position(|a| a.len() == 1).unwrap_or(0);
        let face_idx = admissible[pick][0];
        let frag = &frags[pick];
        let path = fragment_path(adj, frag, &emb_v);

        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let i = face.iter().position(|&x| x == a).unwrap();
        let j = face.iter().position(|&x| x == b).unwrap();
        let len = face.len();
        let inner = &path[1..path.len() - 1];
        let mut f1 = Vec::new();
        let mut t = i;
        loop {
            f1.push(face[t]);
            if t == j {
                break;
            }
            t = (t + 1) % len;
        }
        f1.extend(inner.iter().rev());
        let mut f2 = Vec::new();
        let mut t = j;
        loop {
            f2.push(face[t]);
            if t == i {
                break;
            }
            t = (t + 1) % len;
        }
        f2.extend(inner.iter());
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            emb_e.insert(key(w[0], w[1]));
        }
        for &x in &path {
            emb_v[x] = true;
        }
    }
}

fn fragments(adj: &[BTreeSet<usize>], emb_v: &[bool], emb_e: &BTreeSet<(usize, usize)>) -> Vec<Fragment> {
    let k = adj.len();
    let mut out = Vec::new();
    for u in 0..k {
        if !emb_v[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && emb_v[v] && !emb_e.contains(&(u, v)) {
                out.push(Fragment { attachments: vec![u, v], interior: vec![] });
            }
        }
    }
    let mut seen = vec![false; k];
    for s in 0..k {
        if emb_v[s] || seen[s] {
            continue;
        }
        let mut interior = Vec::new();
        let mut attach = BTreeSet::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            interior.push(x);
            for &y in &adj[x] {
                if emb_v[y] {
                    attach.insert(y);
                } else if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        out.push(Fragment { attachments: attach.into_iter().collect(), interior });
    }
    out
}

/// A path through the fragment between two distinct attachment vertices.
fn fragment_path(adj: &[BTreeSet<usize>], frag: &Fragment, emb_v: &[bool]) -> Vec<usize> {
    if frag.interior.is_empty() {
        return frag.attachments.clone();
    }
    let a1 = frag.attachments[0];
    let inside = |x: usize| frag.interior.contains(&x);
    let start = *adj[a1].iter().find(|&&x| inside(x)).expect("attachment touches fragment");
    // BFS inside the fragment until reaching a vertex adjacent to another attachment.
    let k = adj.len();
    let mut prev = vec![usize::MAX; k];
    let mut queue = VecDeque::new();
    prev[start] = start;
    queue.push_back(start);
    while let Some(x) = queue.pop_front() {
        if let Some(&a2) = adj[x].iter().find(|&&y| emb_v[y] && y != a1) {
            let mut p = vec![a2, x];
            let mut cur = x;
            while prev[cur] != cur {
                cur = prev[cur];
                p.push(cur);
            }
            p.push(a1);
            p.reverse();
            return p;
        }
        for &y in &adj[x] {
            if !emb_v[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a 2-connected block has two attachments")
}

fn bfs_path(
    adj: &[BTreeSet<usize>],
    from: usize,
    to: usize,
    edge_ok: impl Fn(usize, usize) -> bool,
    vertex_ok: impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let k = adj.len();
    let mut prev = vec![usize::MAX; k];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut p = vec![to];
            let mut cur = to;
            while prev[cur] != cur {
                cur = prev[cur];
                p.push(cur);
            }
            p.reverse();
            return Some(p);
        }
        for &y in &adj[x] {
            if prev[y] == usize::MAX && edge_ok(x, y) && vertex_ok(y) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}
