//! Rules for connected subcubic graphs with no two disjoint short cycles.
//!
//! Rules run in a fixed order. Each one builds the candidate sets that its
//! configuration admits, recursing on smaller graphs, and the first candidate
//! within `(2m - n + 2)/7 + r` wins.

use alloc::vec;
use alloc::vec::Vec;

use super::{Draft, Engine, FvsCertificate, Rule};
use crate::canon::are_isomorphic;
use crate::error::{Error, Result};
use crate::exact::min_fvs_bruteforce;
use crate::family::{family_fvs, r_with, FamilyMember, FvsTarget};
use crate::graph::{Graph, Vertex};
use crate::named::{complete_bipartite, k33_plus};
use crate::ops::suppress_vertex;
use crate::sevenths::Sevenths;
use crate::structure::{
    blocks_unchecked, cut_edges, edge_cuts_up_to_order2, has_girth_at_least, has_two_disjoint_short_cycles,
    is_two_connected, short_cycles,
};

/// An order-2 cut seen from side `a`; the crossing edges are `ua-ub` and `va-vb`.
struct Side {
    a: Vec<Vertex>,
    b: Vec<Vertex>,
    ua: Vertex,
    va: Vertex,
    ub: Vertex,
    vb: Vertex,
}

impl Side {
    fn crossing(&self) -> [(Vertex, Vertex); 2] {
        [(self.ua, self.ub), (self.va, self.vb)]
    }
}

fn order2_sides(g: &Graph) -> Vec<Side> {
    let mut out = Vec::new();
    for cut in edge_cuts_up_to_order2(g) {
        if cut.order() != 2 {
            continue;
        }
        let (ea, eb) = (cut.ends_in_a(), cut.ends_in_b());
        out.push(Side { a: cut.side_a.clone(), b: cut.side_b.clone(), ua: ea[0], va: ea[1], ub: eb[0], vb: eb[1] });
        out.push(Side { a: cut.side_b, b: cut.side_a, ua: eb[0], va: eb[1], ub: ea[0], vb: ea[1] });
    }
    out
}

fn is_path(h: &Graph) -> bool {
    h.is_connected() && h.m() + 1 == h.n() && h.max_degree() <= 2
}

fn is_cycle(h: &Graph) -> bool {
    h.n() >= 3 && h.is_connected() && h.vertices().iter().all(|&v| h.degree(v) == 2)
}

fn strict_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    small.len() < big.len() && small.iter().all(|v| big.binary_search(v).is_ok())
}

fn minus(set: &[Vertex], drop: &[Vertex]) -> Vec<Vertex> {
    set.iter().copied().filter(|v| !drop.contains(v)).collect()
}

/// The neighbour of `v` outside `set`, for a vertex with exactly one.
fn outside(g: &Graph, v: Vertex, set: &[Vertex]) -> Option<Vertex> {
    let mut it = g.neighbors(v).filter(|w| !set.contains(w));
    let w = it.next()?;
    it.next().is_none().then_some(w)
}

/// A piece of a witness: loose vertices plus certified sub-solutions.
type Piece = (Vec<Vertex>, Vec<FvsCertificate>);

impl Engine {
    pub(crate) fn subcubic(&mut self, g: &Graph) -> Result<FvsCertificate> {
        let r = r_with(g, &mut self.rec)?;
        if let Some(c) = self.base(g, r)? {
            return Ok(c);
        }
        if let Some(c) = self.cut_edge(g, r)? {
            return Ok(c);
        }
        let sides = if is_two_connected(g) { order2_sides(g) } else { Vec::new() };
        if let Some(c) = self.family_side(g, r, &sides)? {
            return Ok(c);
        }
        if let Some(c) = self.cycle_side(g, r, &sides)? {
            return Ok(c);
        }
        if let Some(c) = self.splitter(g, r, &sides)? {
            return Ok(c);
        }
        if let Some(c) = self.suppress(g, r)? {
            return Ok(c);
        }
        if let Some(c) = self.two_cut(g, r, &sides)? {
            return Ok(c);
        }
        if let Some(c) = self.triangle(g, r)? {
            return Ok(c);
        }
        if let Some(c) = self.four_cycle(g, r)? {
            return Ok(c);
        }
        if let Some(c) = self.path_op(g, r)? {
            return Ok(c);
        }
        Err(Error::integrity(alloc::format!(
            "no rule certified a subcubic graph with n = {}, m = {}",
            g.n(),
            g.m()
        )))
    }

    /// Solves a connected graph; `None` when the engine gives up on it.
    fn one(&mut self, h: &Graph) -> Result<Option<FvsCertificate>> {
        match self.subcubic(h) {
            Ok(c) => Ok(Some(c)),
            Err(Error::Integrity(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Solves every component of `h`.
    fn parts(&mut self, h: &Graph) -> Result<Option<Vec<FvsCertificate>>> {
        let mut out = Vec::new();
        for comp in h.component_graphs() {
            match self.one(&comp)? {
                Some(c) => out.push(c),
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    fn member(&mut self, h: &Graph) -> Option<FamilyMember> {
        let derivation = self.rec.derive(h)?;
        Some(FamilyMember { graph: h.clone(), signature: derivation.signature(), derivation })
    }

    fn base(&mut self, g: &Graph, r: Sevenths) -> Result<Option<FvsCertificate>> {
        if g.is_forest() {
            return Ok(self.seal(g, r, Draft::new(Rule::Base)));
        }
        if let Some(m) = self.member(g) {
            let s = family_fvs(&m, FvsTarget::Whole)?;
            if let Some(c) = self.seal(g, r, Draft::new(Rule::Base).take(&s)) {
                return Ok(Some(c));
            }
        }
        if matches!((g.n(), g.m()), (6, 9) | (7, 10)) && (are_isomorphic(g, &complete_bipartite(3, 3)) || are_isomorphic(g, &k33_plus())) {
            let s = min_fvs_bruteforce(g)?.witness;
            return Ok(self.seal(g, r, Draft::new(Rule::Base).take(&s)));
        }
        Ok(None)
    }

    fn cut_edge(&mut self, g: &Graph, r: Sevenths) -> Result<Option<FvsCertificate>> {
        for (u, v) in cut_edges(g) {
            let h = g.without_edge(u, v)?;
            if let Some(subs) = self.parts(&h)? {
                if let Some(c) = self.seal(g, r, Draft::new(Rule::CutEdge).cut(&[(u, v)]).with(subs)) {
                    return Ok(Some(c));
                }
            }
        }
        Ok(None)
    }

    fn family_side(&mut self, g: &Graph, r: Sevenths, sides: &[Side]) -> Result<Option<FvsCertificate>> {
        for s in sides {
            if s.b.len() < 2 {
                continue;
            }
            let Some(m) = self.member(&g.induced(&s.b)) else { continue };
            if m.signature.i > 4 {
                continue;
            }
            let sa = if s.a.len() >= 2 {
                match self.parts(&g.induced(&s.a))? {
                    Some(x) => x,
                    None => continue,
                }
            } else {
                Vec::new()
            };
            for ub in [s.ub, s.vb] {
                let sb = family_fvs(&m, FvsTarget::Containing(ub))?;
                let d = Draft::new(Rule::FamilySide).take(&sb).remove(&s.b).cut(&s.crossing()).with(sa.clone());
                if let Some(c) = self.seal(g, r, d) {
                    return Ok(Some(c));
                }
            }
        }
        Ok(None)
    }

    fn cycle_side(&mut self, g: &Graph, r: Sevenths, sides: &[Side]) -> Result<Option<FvsCertificate>> {
        for s in sides {
            if !is_cycle(&g.induced(&s.a)) {
                continue;
            }
            let Some(sb) = self.parts(&g.induced(&s.b))? else { continue };
            for v in [s.ua, s.va] {
                let d = Draft::new(Rule::CycleSide).take(&[v]).remove(&s.a).with(sb.clone());
                if let Some(c) = self.seal(g, r, d) {
                    return Ok(Some(c));
                }
            }
        }
        Ok(None)
    }

    fn splitter(&mut self, g: &Graph, r: Sevenths, sides: &[Side]) -> Result<Option<FvsCertificate>> {
        let splitters: Vec<&Side> = sides
            .iter()
            .filter(|s| s.a.len() >= 2 && has_girth_at_least(&g.induced(&s.a), 5) && is_two_connected(&g.induced(&s.b)))
            .collect();
        let tight = splitters.iter().filter(|s| !splitters.iter().any(|t| strict_subset(&t.b, &s.b)));
        for s in tight {
            let ga = g.induced(&s.a);
            if is_path(&ga) {
                continue;
            }
            let gb = g.induced(&s.b);
            let Some(sb) = self.parts(&gb)? else { continue };
            // Feedback vertex sets of G[A] small enough to pay for u_B.
            let mut small: Vec<Piece> = Vec::new();
            let (ua, va) = (s.ua, s.va);
            if ua != va && !g.has_edge(ua, va) {
                let a1 = ga.with_edge(ua, va)?;
                if let Some(sa1) = self.parts(&a1)? {
                    let d = Draft::new(Rule::Splitter).remove(&s.b).cut(&s.crossing()).add(&[(ua, va)]).with(sa1).with(sb.clone());
                    if let Some(c) = self.seal(g, r, d) {
                        return Ok(Some(c));
                    }
                }
                if let Some(m) = self.member(&a1) {
                    if m.signature.i <= 4 {
                        small.push((family_fvs(&m, FvsTarget::WithoutEdge(ua, va))?, Vec::new()));
                    }
                }
            } else if g.has_edge(ua, va) && g.degree(ua) == 3 && g.degree(va) == 3 {
                for (u, v) in [(ua, va), (va, ua)] {
                    let Some(up) = ga.neighbors(u).find(|&w| w != v) else { continue };
                    let rest = minus(&s.a, &[up, u, v]);
                    if g.degree(up) == 2 {
                        if let Some(sa2) = self.parts(&g.induced(&rest))? {
                            let d = Draft::new(Rule::Splitter).take(&[u]).remove(&[up, u, v]).with(sa2).with(sb.clone());
                            if let Some(c) = self.seal(g, r, d) {
                                return Ok(Some(c));
                            }
                        }
                        continue;
                    }
                    let xy: Vec<Vertex> = g.neighbors(up).filter(|&w| w != u).collect();
                    let (x, y) = (xy[0], xy[1]);
                    if x == y || g.has_edge(x, y) || !rest.contains(&x) || !rest.contains(&y) {
                        continue;
                    }
                    let a3 = g.induced(&rest).with_edge(x, y)?;
                    if let Some(sa3) = self.parts(&a3)? {
                        let d = Draft::new(Rule::Splitter).take(&[u]).remove(&[up, u, v]).add(&[(x, y)]).with(sa3).with(sb.clone());
                        if let Some(c) = self.seal(g, r, d) {
                            return Ok(Some(c));
                        }
                    }
                    let key = (x.min(y), x.max(y));
                    let Some(block) = blocks_unchecked(&a3).blocks.into_iter().find(|b| b.edges.contains(&key)) else { continue };
                    let Some(m) = self.member(&a3.induced(&block.vertices)) else { continue };
                    if m.signature.i > 4 {
                        continue;
                    }
                    let mut loose = family_fvs(&m, FvsTarget::WithoutEdge(x, y))?;
                    loose.push(up);
                    if let Some(subs) = self.parts(&a3.without_vertices(&block.vertices))? {
                        small.push((loose, subs));
                    }
                }
            }
            for (loose, subs) in small {
                for ub in [s.ub, s.vb] {
                    let Some(sh) = self.parts(&gb.without_vertex(ub))? else { continue };
                    let d = Draft::new(Rule::Splitter).take(&loose).take(&[ub]).remove(&[ub]).cut(&s.crossing()).with(subs.clone()).with(sh);
                    if let Some(c) = self.seal(g, r, d) {
                        return Ok(Some(c));
                    }
                }
            }
        }
        Ok(None)
    }

    fn suppress(&mut self, g: &Graph, r: Sevenths) -> Result<Option<FvsCertificate>> {
        for &u in g.vertices() {
            if g.degree(u) != 2 {
                continue;
            }
            let nb = g.distinct_neighbors(u);
            if nb.len() != 2 || g.has_edge(nb[0], nb[1]) {
                continue;
            }
            let h = suppress_vertex(g, u)?;
            if has_two_disjoint_short_cycles(&h) {
                continue;
            }
            if let Some(sub) = self.one(&h)? {
                let d = Draft::new(Rule::Suppress).remove(&[u]).add(&[(nb[0], nb[1])]).with(vec![sub]);
                if let Some(c) = self.seal(g, r, d) {
                    return Ok(Some(c));
                }
            }
        }
        Ok(None)
    }

    fn two_cut(&mut self, g: &Graph, r: Sevenths, sides: &[Side]) -> Result<Option<FvsCertificate>> {
        let cuts: Vec<&Side> = sides
            .iter()
            .filter(|s| s.a.len() >= 2 && s.b.len() >= 2 && has_girth_at_least(&g.induced(&s.a), 5))
            .collect();
        let minimal = cuts.iter().filter(|s| !cuts.iter().any(|t| strict_subset(&t.b, &s.b)));
        for s in minimal {
            let Some(sa) = self.parts(&g.induced(&s.a))? else { continue };
            let gb = g.induced(&s.b);
            for ub in [s.ub, s.vb] {
                let Some(sh) = self.parts(&gb.without_vertex(ub))? else { continue };
                let d = Draft::new(Rule::TwoCut).take(&[ub]).remove(&[ub]).cut(&s.crossing()).with(sa.clone()).with(sh);
                if let Some(c) = self.seal(g, r, d) {
                    return Ok(Some(c));
                }
            }
        }
        Ok(None)
    }

    fn triangle(&mut self, g: &Graph, r: Sevenths) -> Result<Option<FvsCertificate>> {
        for t in short_cycles(g, 3) {
            if t.len() != 3 {
                continue;
            }
            let outs: Vec<Option<Vertex>> = t.iter().map(|&v| outside(g, v, &t)).collect();
            let Some(outs) = outs.into_iter().collect::<Option<Vec<Vertex>>>() else { continue };
            if outs[0] == outs[1] || outs[1] == outs[2] || outs[0] == outs[2] {
                continue;
            }
            for k in 0..3 {
                let a = t[k];
                let (b1, c1) = (outs[(k + 1) % 3], outs[(k + 2) % 3]);
                if g.has_edge(b1, c1) {
                    continue;
                }
                let h = g.without_vertices(&t).with_edge(b1, c1)?;
                if has_two_disjoint_short_cycles(&h) {
                    continue;
                }
                let Some(subs) = self.parts(&h)? else { continue };
                let d = Draft::new(Rule::Triangle).take(&[a]).remove(&t).add(&[(b1, c1)]).with(subs);
                if let Some(c) = self.seal(g, r, d) {
                    return Ok(Some(c));
                }
            }
        }
        Ok(None)
    }

    fn four_cycle(&mut self, g: &Graph, r: Sevenths) -> Result<Option<FvsCertificate>> {
        for q in short_cycles(g, 4) {
            if q.len() != 4 {
                continue;
            }
            for k in 0..4 {
                for dir in [1usize, 3] {
                    let at = |s: usize| q[(k + s * dir) % 4];
                    let (a, b, c, d) = (at(0), at(1), at(2), at(3));
                    let (Some(a1), Some(c1)) = (outside(g, a, &q), outside(g, c, &q)) else { continue };
                    if a1 == c1 || g.has_edge(a1, d) || g.has_edge(c1, d) {
                        continue;
                    }
                    let h = g.without_vertices(&[a, b, c]).with_edge(a1, d)?.with_edge(c1, d)?;
                    if has_two_disjoint_short_cycles(&h) {
                        continue;
                    }
                    let Some(subs) = self.parts(&h)? else { continue };
                    let dr = Draft::new(Rule::FourCycle).take(&[b]).remove(&[a, b, c]).add(&[(a1, d), (c1, d)]).with(subs);
                    if let Some(cert) = self.seal(g, r, dr) {
                        return Ok(Some(cert));
                    }
                }
            }
        }
        Ok(None)
    }

    fn path_op(&mut self, g: &Graph, r: Sevenths) -> Result<Option<FvsCertificate>> {
        for &b in g.vertices() {
            let nb = g.distinct_neighbors(b);
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    let (a, c) = (nb[i], nb[j]);
                    if g.degree(a) != 3 || g.degree(c) != 3 || g.has_edge(a, c) {
                        continue;
                    }
                    let x: Vec<Vertex> = g.neighbors(a).filter(|&w| w != b).collect();
                    let y: Vec<Vertex> = g.neighbors(c).filter(|&w| w != b).collect();
                    let mut h = g.without_vertices(&[a, b, c]);
                    if [x[0], x[1], y[0], y[1]].iter().any(|v| !h.contains(*v)) {
                        continue;
                    }
                    if h.has_edge(x[0], x[1]) || h.has_edge(y[0], y[1]) || (x[0].min(x[1]), x[0].max(x[1])) == (y[0].min(y[1]), y[0].max(y[1])) {
                        continue;
                    }
                    h.add_edge(x[0], x[1])?;
                    h.add_edge(y[0], y[1])?;
                    if has_two_disjoint_short_cycles(&h) {
                        continue;
                    }
                    let Some(subs) = self.parts(&h)? else { continue };
                    let d = Draft::new(Rule::PathOp).take(&[b]).remove(&[a, b, c]).add(&[(x[0], x[1]), (y[0], y[1])]).with(subs);
                    if let Some(cert) = self.seal(g, r, d) {
                        return Ok(Some(cert));
                    }
                }
            }
        }
        Ok(None)
    }
}
