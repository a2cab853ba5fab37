//! Small feedback vertex sets of family members, built along the derivation.
//!
//! For every graph on the derivation path we keep, for each edge `e`, a
//! feedback vertex set of the graph minus `e`. A subdivision step reuses the
//! parent's sets. A `∘` step adds one vertex to a parent's set: the new
//! centre for edges away from the gadget, a subdivision vertex for the
//! centre's own edges.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::{apply, FamilyMember, Step};
use crate::error::{Error, Result};
use crate::graph::{is_forest_after_removal, Graph, Vertex};

/// What the returned set has to accomplish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FvsTarget {
    /// A feedback vertex set of the member itself.
    Whole,
    /// A feedback vertex set of the member minus one copy of this edge.
    WithoutEdge(Vertex, Vertex),
    /// A feedback vertex set of the member that contains this vertex.
    Containing(Vertex),
}

type Table = BTreeMap<(Vertex, Vertex), Vec<Vertex>>;

fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

fn with(set: &[Vertex], v: Vertex) -> Vec<Vertex> {
    let mut s = set.to_vec();
    if let Err(p) = s.binary_search(&v) {
        s.insert(p, v);
    }
    s
}

fn edge_table(member: &FamilyMember) -> Result<Table> {
    let d = &member.derivation;
    let mut g = Graph::from_parts([d.root], [(d.root, d.root)])?;
    let mut table: Table = BTreeMap::new();
    table.insert((d.root, d.root), Vec::new());
    for step in &d.steps {
        let parent = core::mem::take(&mut table);
        apply(&mut g, step)?;
        let lookup = |e: (Vertex, Vertex)| {
            parent.get(&key(e.0, e.1)).cloned().ok_or_else(|| Error::integrity("derivation edge missing from table"))
        };
        match *step {
            Step::Subdivide { edge: (x, y), new } => {
                let t = lookup((x, y))?;
                for (k, s) in &parent {
                    if g.multiplicity(k.0, k.1) > 0 {
                        table.insert(*k, s.clone());
                    }
                }
                table.insert(key(x, new), t.clone());
                table.insert(key(new, y), t);
            }
            Step::Circ { e1, e2, same_edge, a, s1, s2, center } => {
                let t1 = lookup(e1)?;
                let t2 = lookup(e2)?;
                for (k, s) in &parent {
                    if g.multiplicity(k.0, k.1) > 0 {
                        table.insert(*k, with(s, center));
                    }
                }
                if same_edge {
                    for k in [key(e1.0, s1), key(s1, s2), key(s2, e1.1)] {
                        table.insert(k, with(&t1, center));
                    }
                } else {
                    table.insert(key(e1.0, s1), with(&t1, center));
                    table.insert(key(s1, e1.1), with(&t1, center));
                    table.insert(key(e2.0, s2), with(&t2, center));
                    table.insert(key(s2, e2.1), with(&t2, center));
                }
                table.insert(key(center, a), with(&t1, s1));
                table.insert(key(center, s1), with(&t2, s2));
                table.insert(key(center, s2), with(&t1, s1));
            }
        }
    }
    if g != member.graph {
        return Err(Error::domain("derivation does not rebuild the member graph"));
    }
    Ok(table)
}

/// A feedback vertex set of a member, of the member minus an edge, or
/// containing a given vertex. Sizes stay within `(2m - n + 2)/7 + ε`, minus
/// one when an edge is deleted.
pub fn family_fvs(member: &FamilyMember, target: FvsTarget) -> Result<Vec<Vertex>> {
    let g = &member.graph;
    let table = edge_table(member)?;
    let smallest_at = |v: Vertex| {
        table
            .iter()
            .filter(|(k, _)| k.0 == v || k.1 == v)
            .min_by_key(|(_, s)| s.len())
            .map(|(_, s)| with(s, v))
            .ok_or_else(|| Error::integrity("vertex without edges in a member"))
    };
    let (set, check) = match target {
        FvsTarget::WithoutEdge(u, v) => {
            if g.multiplicity(u, v) == 0 {
                return Err(Error::domain(format!("edge {u}-{v} not in the member")));
            }
            (table[&key(u, v)].clone(), g.without_edge(u, v)?)
        }
        FvsTarget::Containing(v) => {
            if !g.contains(v) {
                return Err(Error::domain(format!("vertex {v} not in the member")));
            }
            (smallest_at(v)?, g.clone())
        }
        FvsTarget::Whole => {
            let best = g.vertices().iter().map(|&v| smallest_at(v)).collect::<Result<Vec<_>>>()?;
            (best.into_iter().min_by_key(Vec::len).unwrap_or_default(), g.clone())
        }
    };
    if !is_forest_after_removal(&check, &set) {
        return Err(Error::integrity("family construction did not produce a feedback vertex set"));
    }
    Ok(set)
}
