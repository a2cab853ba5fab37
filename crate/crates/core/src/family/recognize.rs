//! Membership in `F(i, j)` by reverse search.
//!
//! A member other than the loop graph is a subdivision or a `∘` image of a
//! smaller member, so we undo one step at a time: suppress a degree-2
//! vertex, or delete a candidate centre and suppress its two subdivision
//! neighbours. Failures are memoized by canonical form. Only the loop graph
//! and the parallel pair are non-simple members, which prunes most branches.

use alloc::collections::BTreeMap;

use super::{suppress, Derivation, FamilyMember, FamilySignature, Step};
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::Result;
use crate::graph::{Graph, Vertex};

/// Memoizing recognizer; reuse one across many queries to share work.
#[derive(Debug, Default)]
pub struct Recognizer {
    dead: BTreeMap<CanonicalForm, ()>,
    known: BTreeMap<CanonicalForm, Option<FamilySignature>>,
}

impl Recognizer {
    pub fn new() -> Self {
        Self::default()
    }

    /// The signature of `g` if it is a member.
    pub fn signature(&mut self, g: &Graph) -> Option<FamilySignature> {
        let sig = FamilySignature::from_counts(g)?;
        let key = canonical_form(g);
        if let Some(&s) = self.known.get(&key) {
            return s;
        }
        let found = self.derive(g).map(|_| sig);
        self.known.insert(key, found);
        found
    }

    /// A derivation of `g` in its own vertex ids, if `g` is a member.
    pub fn derive(&mut self, g: &Graph) -> Option<Derivation> {
        let sig = FamilySignature::from_counts(g)?;
        if !g.is_simple() && g.n() > 2 {
            return None;
        }
        if sig == FamilySignature::new(1, 0) {
            let v = g.vertices()[0];
            return (g.multiplicity(v, v) == 1).then(|| Derivation { root: v, steps: alloc::vec::Vec::new() });
        }
        if !g.is_connected() {
            return None;
        }
        let key = canonical_form(g);
        if self.dead.contains_key(&key) {
            return None;
        }
        let found = self.undo_subdivision(g, sig).or_else(|| self.undo_circ(g, sig));
        if found.is_none() {
            self.dead.insert(key, ());
        }
        found
    }

    fn undo_subdivision(&mut self, g: &Graph, sig: FamilySignature) -> Option<Derivation> {
        if sig.i <= sig.j {
            return None;
        }
        for &w in g.vertices() {
            if g.degree(w) != 2 || g.multiplicity(w, w) > 0 {
                continue;
            }
            let nb: alloc::vec::Vec<Vertex> = g.neighbors(w).collect();
            let Some(h) = suppress(g, w) else { continue };
            if let Some(mut d) = self.derive(&h) {
                d.steps.push(Step::Subdivide { edge: (nb[0], nb[1]), new: w });
                return Some(d);
            }
        }
        None
    }

    fn undo_circ(&mut self, g: &Graph, sig: FamilySignature) -> Option<Derivation> {
        if sig.j == 0 || !g.is_simple() {
            return None;
        }
        for &c in g.vertices() {
            if g.degree(c) != 3 {
                continue;
            }
            let nb = g.distinct_neighbors(c);
            if nb.len() != 3 || nb.iter().any(|&x| g.degree(x) != 3) {
                continue;
            }
            for k in 0..3 {
                let a = nb[k];
                let (s1, s2) = (nb[(k + 1) % 3], nb[(k + 2) % 3]);
                let g1 = g.without_vertex(c);
                let same_edge = g1.has_edge(s1, s2);
                let (e1, e2);
                let h;
                if same_edge {
                    let (Some(x), Some(y)) = (g1.neighbors(s1).find(|&u| u != s2), g1.neighbors(s2).find(|&u| u != s1)) else {
                        continue;
                    };
                    e1 = (x, y);
                    e2 = (x, y);
                    let Some(t) = suppress(&g1, s1) else { continue };
                    let Some(t) = suppress(&t, s2) else { continue };
                    h = t;
                } else {
                    let p: alloc::vec::Vec<Vertex> = g1.neighbors(s1).collect();
                    let q: alloc::vec::Vec<Vertex> = g1.neighbors(s2).collect();
                    e1 = (p[0], p[1]);
                    e2 = (q[0], q[1]);
                    let Some(t) = suppress(&g1, s1) else { continue };
                    let Some(t) = suppress(&t, s2) else { continue };
                    h = t;
                }
                if h.degree(a) != 2 {
                    continue;
                }
                if let Some(mut d) = self.derive(&h) {
                    d.steps.push(Step::Circ { e1, e2, same_edge, a, s1, s2, center: c });
                    return Some(d);
                }
            }
        }
        None
    }
}

/// The unique `(i, j)` with `g` isomorphic to a member of `F(i, j)`, if any.
pub fn family_membership(g: &Graph) -> Result<Option<FamilySignature>> {
    Ok(Recognizer::new().signature(g))
}

/// `g` as a family member with a derivation in its own vertex ids.
pub fn family_member(g: &Graph) -> Option<FamilyMember> {
    let derivation = Recognizer::new().derive(g)?;
    Some(FamilyMember { graph: g.clone(), signature: derivation.signature(), derivation })
}
