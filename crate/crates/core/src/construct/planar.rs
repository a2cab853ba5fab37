//! Planar graphs of girth at least five, reduced to the subcubic engine.

use alloc::vec::Vec;

use super::{Draft, Engine, FvsCertificate, Rule};
use crate::error::{Error, Result};
use crate::family::{family_fvs, FamilyMember, FvsTarget};
use crate::graph::{Graph, Vertex};
use crate::sevenths::Sevenths;
use crate::structure::{blocks_unchecked, cut_edges, BlockKind};

impl Engine {
    pub(crate) fn planar(&mut self, g: &Graph) -> Result<FvsCertificate> {
        let r = Sevenths::ZERO;
        if g.is_forest() {
            if let Some(c) = self.seal(g, r, Draft::new(Rule::Base)) {
                return Ok(c);
            }
        }
        if g.is_subcubic() {
            return self.subcubic(g);
        }
        if let Some((u, v)) = cut_edges(g).first().copied() {
            if let Some(subs) = self.planar_parts(&g.without_edge(u, v)?)? {
                if let Some(c) = self.seal(g, r, Draft::new(Rule::PlanarCutEdge).cut(&[(u, v)]).with(subs)) {
                    return Ok(c);
                }
            }
        }
        for &v in g.vertices() {
            let d = g.degree(v);
            if d < 4 {
                continue;
            }
            let h = g.without_vertex(v);
            if d == 4 && !h.is_connected() {
                continue;
            }
            if let Some(subs) = self.planar_parts(&h)? {
                if let Some(c) = self.seal(g, r, Draft::new(Rule::HighDegree).take(&[v]).remove(&[v]).with(subs)) {
                    return Ok(c);
                }
            }
        }
        if let Some(c) = self.end_block(g, r)? {
            return Ok(c);
        }
        Err(Error::integrity(alloc::format!("no rule certified a planar graph with n = {}, m = {}", g.n(), g.m())))
    }

    fn planar_parts(&mut self, h: &Graph) -> Result<Option<Vec<FvsCertificate>>> {
        let mut out = Vec::new();
        for comp in h.component_graphs() {
            match self.planar(&comp) {
                Ok(c) => out.push(c),
                Err(Error::Integrity(_)) => return Ok(None),
                Err(e) => return Err(e),
            }
        }
        Ok(Some(out))
    }

    fn subcubic_parts(&mut self, h: &Graph) -> Result<Option<Vec<FvsCertificate>>> {
        let mut out = Vec::new();
        for comp in h.component_graphs() {
            match self.subcubic(&comp) {
                Ok(c) => out.push(c),
                Err(Error::Integrity(_)) => return Ok(None),
                Err(e) => return Err(e),
            }
        }
        Ok(Some(out))
    }

    /// An end-block `B` hanging off a degree-4 cut vertex `v`: either solve
    /// `B - v` with `v1 v2` added and the rest with `v`, or put `v` in the set
    /// and solve `B - v` and the rest without `v`.
    fn end_block(&mut self, g: &Graph, r: Sevenths) -> Result<Option<FvsCertificate>> {
        let bd = blocks_unchecked(g);
        for b in bd.end_blocks() {
            if b.kind != BlockKind::Nontrivial {
                continue;
            }
            let Some(&v) = b.vertices.iter().find(|v| bd.cut_vertices.binary_search(v).is_ok()) else { continue };
            if g.degree(v) != 4 {
                continue;
            }
            let inner: Vec<Vertex> = b.vertices.iter().copied().filter(|&w| w != v).collect();
            let vs: Vec<Vertex> = g.neighbors(v).filter(|w| inner.contains(w)).collect();
            if vs.len() != 2 || g.has_edge(vs[0], vs[1]) {
                continue;
            }
            let (v1, v2) = (vs[0], vs[1]);
            let bp = g.induced(&inner).with_edge(v1, v2)?;

            let s1 = self.subcubic_parts(&bp)?;
            let s2 = self.planar_parts(&g.without_vertices(&inner))?;
            if let (Some(s1), Some(s2)) = (s1, s2) {
                let d = Draft::new(Rule::EndBlock).remove(&inner).add(&[(v1, v2)]).with(s1).with(s2);
                if let Some(c) = self.seal(g, r, d) {
                    return Ok(Some(c));
                }
            }

            let mut d = Draft::new(Rule::EndBlock).take(&[v]).remove(&b.vertices);
            if let Some(derivation) = self.rec.derive(&bp) {
                let m = FamilyMember { graph: bp.clone(), signature: derivation.signature(), derivation };
                d = d.take(&family_fvs(&m, FvsTarget::WithoutEdge(v1, v2))?);
            } else {
                match self.subcubic_parts(&g.induced(&inner))? {
                    Some(s) => d = d.with(s),
                    None => continue,
                }
            }
            let Some(rest) = self.planar_parts(&g.without_vertices(&b.vertices))? else { continue };
            if let Some(c) = self.seal(g, r, d.with(rest)) {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }
}
