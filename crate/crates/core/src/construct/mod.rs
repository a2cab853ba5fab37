//! Feedback vertex sets that carry a checkable size bound.
//!
//! Both engines recurse on strictly smaller graphs. At each level every
//! candidate set is checked to be a feedback vertex set within
//! `(2m - n + 2)/7 + r`; the first one that passes is kept.

mod planar;
mod subcubic;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::min_fvs_exact;
use crate::family::{forbidden_witness, r_of, Recognizer};
use crate::graph::{is_forest_after_removal, Graph, Vertex};
use crate::planarity::is_planar;
use crate::sevenths::Sevenths;
use crate::structure::{has_girth_at_least, two_disjoint_short_cycles};

pub type Edge = (Vertex, Vertex);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Forest, family member, `K3,3` or `K3,3` with one subdivided edge.
    Base,
    CutEdge,
    /// Order-2 cut whose one side is a member with `i <= 4`.
    FamilySide,
    /// Order-2 cut whose one side induces a cycle.
    CycleSide,
    Splitter,
    /// Suppress a degree-2 vertex.
    Suppress,
    /// Order-2 cut with two vertices or more on both sides.
    TwoCut,
    Triangle,
    FourCycle,
    /// Delete a path `abc`, reconnect the neighbours of `a` and of `c`.
    PathOp,
    PlanarCutEdge,
    HighDegree,
    EndBlock,
    Exact,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::Base => "B0",
            Rule::CutEdge => "B1",
            Rule::FamilySide => "B2",
            Rule::CycleSide => "B3",
            Rule::Splitter => "B4",
            Rule::Suppress => "B5",
            Rule::TwoCut => "B6",
            Rule::Triangle => "B7",
            Rule::FourCycle => "B8",
            Rule::PathOp => "B9",
            Rule::PlanarCutEdge => "R1",
            Rule::HighDegree => "R2",
            Rule::EndBlock => "R3",
            Rule::Exact => "exact",
        }
    }
}

/// One rule firing. The witness of the certificate owning this step is
/// `taken` together with the witnesses of `sub`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: Rule,
    /// Vertices put straight into the witness.
    pub taken: Vec<Vertex>,
    /// Vertices deleted before recursing.
    pub removed_vertices: Vec<Vertex>,
    pub removed_edges: Vec<Edge>,
    pub added_edges: Vec<Edge>,
    pub sub: Vec<FvsCertificate>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FvsCertificate {
    pub witness: Vec<Vertex>,
    /// Vertex and edge counts of the graph this certificate is about.
    pub n: usize,
    pub m: usize,
    /// The bound is `bound_numerator / 7`.
    pub bound_numerator: i64,
    pub r_value: Sevenths,
    pub trace: ReductionTrace,
    pub fallback_used: bool,
}

impl FvsCertificate {
    /// `bound_numerator - 7 |witness|`.
    pub fn slack(&self) -> i64 {
        self.bound_numerator - 7 * self.witness.len() as i64
    }

    /// Every step recursed only on graphs with smaller `n + m`.
    pub fn trace_decreases(&self) -> bool {
        self.trace.steps.iter().all(|s| {
            s.sub.iter().all(|c| c.n + c.m < self.n + self.m && c.trace_decreases())
        })
    }

    /// The witness is exactly what the trace assembles.
    pub fn trace_assembles_witness(&self) -> bool {
        if self.fallback_used {
            return true;
        }
        let mut got: Vec<Vertex> = Vec::new();
        for s in &self.trace.steps {
            got.extend(&s.taken);
            for c in &s.sub {
                if !c.trace_assembles_witness() {
                    return false;
                }
                got.extend(&c.witness);
            }
        }
        got.sort_unstable();
        got.dedup();
        got == self.witness
    }

    /// Number of rule firings in the whole trace tree.
    pub fn firings(&self) -> usize {
        self.trace.steps.iter().map(|s| 1 + s.sub.iter().map(FvsCertificate::firings).sum::<usize>()).sum()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ConstructConfig {
    /// Answer with the exact solver instead of failing when no rule certifies.
    pub fallback_exact: bool,
}

/// A certified feedback vertex set of a connected planar graph of girth at
/// least five, of size at most `(2m - n + 2)/7`.
pub fn fvs_planar_girth5(g: &Graph) -> Result<FvsCertificate> {
    fvs_planar_girth5_with(g, &ConstructConfig::default())
}

pub fn fvs_planar_girth5_with(g: &Graph, cfg: &ConstructConfig) -> Result<FvsCertificate> {
    if g.is_empty() || !g.is_connected() {
        return Err(Error::domain("input must be connected and nonempty"));
    }
    if !g.is_simple() || !has_girth_at_least(g, 5) {
        return Err(Error::domain("input must be simple with girth at least 5"));
    }
    if !is_planar(g) {
        return Err(Error::domain("input must be planar"));
    }
    let mut engine = Engine::new();
    with_fallback(g, cfg, engine.planar(g))
}

/// A certified feedback vertex set of size at most `(2m - n + 2)/7 + r(g)`
/// for a connected subcubic graph without two disjoint cycles shorter than
/// five and without an induced subdivision of a forbidden graph.
pub fn fvs_subcubic(g: &Graph) -> Result<FvsCertificate> {
    fvs_subcubic_with(g, &ConstructConfig::default())
}

/// As [`fvs_subcubic`]. Family members are accepted even with two disjoint short cycles, since
/// their certificate comes from the family construction alone.
pub fn fvs_subcubic_with(g: &Graph, cfg: &ConstructConfig) -> Result<FvsCertificate> {
    match check_subcubic_input(g) {
        Err(Error::Domain(msg)) if msg == DISJOINT_SHORT => {
            if Recognizer::new().signature(g).is_none() {
                return Err(Error::Domain(msg));
            }
        }
        other => other?,
    }
    if let Some((k, _)) = forbidden_witness(g) {
        return Err(Error::domain(alloc::format!("input contains an induced subdivision of forbidden graph #{k}")));
    }
    let mut engine = Engine::new();
    with_fallback(g, cfg, engine.subcubic(g))
}

const DISJOINT_SHORT: &str = "input has two disjoint cycles of length less than 5";

/// Connected, nonempty, simple, subcubic, and no two disjoint cycles shorter than five.
pub fn check_subcubic_input(g: &Graph) -> Result<()> {
    if g.is_empty() || !g.is_connected() {
        return Err(Error::domain("input must be connected and nonempty"));
    }
    if !g.is_simple() || !g.is_subcubic() {
        return Err(Error::domain("input must be simple and subcubic"));
    }
    if two_disjoint_short_cycles(g).is_some() {
        return Err(Error::domain(DISJOINT_SHORT));
    }
    Ok(())
}

fn with_fallback(g: &Graph, cfg: &ConstructConfig, got: Result<FvsCertificate>) -> Result<FvsCertificate> {
    match got {
        Err(Error::Integrity(_)) if cfg.fallback_exact => {
            let r = r_of(g)?;
            let exact = min_fvs_exact(g)?;
            Ok(FvsCertificate {
                witness: exact.witness.clone(),
                n: g.n(),
                m: g.m(),
                bound_numerator: (Sevenths::base_bound(g.n(), g.m()) + r).numerator(),
                r_value: r,
                trace: ReductionTrace {
                    steps: alloc::vec![TraceStep {
                        rule: Rule::Exact,
                        taken: exact.witness,
                        removed_vertices: Vec::new(),
                        removed_edges: Vec::new(),
                        added_edges: Vec::new(),
                        sub: Vec::new(),
                    }],
                },
                fallback_used: true,
            })
        }
        other => other,
    }
}

/// The witness is a feedback vertex set of `g`, meets the stated bound, the
/// bound is `2m - n + 2 + 7r`, and `r` is `r(g)`.
pub fn verify_certificate(g: &Graph, c: &FvsCertificate) -> bool {
    let mut w = c.witness.clone();
    w.sort_unstable();
    w.dedup();
    if w.len() != c.witness.len() || !w.iter().all(|&v| g.contains(v)) {
        return false;
    }
    if !is_forest_after_removal(g, &w) {
        return false;
    }
    if c.bound_numerator != (Sevenths::base_bound(g.n(), g.m()) + c.r_value).numerator() {
        return false;
    }
    if 7 * w.len() as i64 > c.bound_numerator {
        return false;
    }
    matches!(r_of(g), Ok(r) if r == c.r_value)
}

/// Shared state of one solve: the family recognizer memo.
pub(crate) struct Engine {
    rec: Recognizer,
}

/// A candidate under construction.
pub(crate) struct Draft {
    rule: Rule,
    taken: Vec<Vertex>,
    removed_vertices: Vec<Vertex>,
    removed_edges: Vec<Edge>,
    added_edges: Vec<Edge>,
    sub: Vec<FvsCertificate>,
}

impl Draft {
    pub(crate) fn new(rule: Rule) -> Self {
        Draft { rule, taken: Vec::new(), removed_vertices: Vec::new(), removed_edges: Vec::new(), added_edges: Vec::new(), sub: Vec::new() }
    }

    pub(crate) fn take(mut self, vs: &[Vertex]) -> Self {
        self.taken.extend_from_slice(vs);
        self
    }

    pub(crate) fn remove(mut self, vs: &[Vertex]) -> Self {
        self.removed_vertices.extend_from_slice(vs);
        self
    }

    pub(crate) fn cut(mut self, es: &[Edge]) -> Self {
        self.removed_edges.extend_from_slice(es);
        self
    }

    pub(crate) fn add(mut self, es: &[Edge]) -> Self {
        self.added_edges.extend_from_slice(es);
        self
    }

    pub(crate) fn with(mut self, subs: Vec<FvsCertificate>) -> Self {
        self.sub.extend(subs);
        self
    }
}

impl Engine {
    pub(crate) fn new() -> Self {
        Engine { rec: Recognizer::new() }
    }

    /// Seal `draft` as a certificate for `g`, if its witness is a feedback
    /// vertex set within the bound.
    pub(crate) fn seal(&self, g: &Graph, r: Sevenths, draft: Draft) -> Option<FvsCertificate> {
        let mut witness: Vec<Vertex> = draft.taken.clone();
        for c in &draft.sub {
            witness.extend(&c.witness);
        }
        witness.sort_unstable();
        witness.dedup();
        let bound = Sevenths::base_bound(g.n(), g.m()) + r;
        if 7 * witness.len() as i64 > bound.numerator() || !is_forest_after_removal(g, &witness) {
            return None;
        }
        let mut taken = draft.taken;
        taken.sort_unstable();
        taken.dedup();
        Some(FvsCertificate {
            witness,
            n: g.n(),
            m: g.m(),
            bound_numerator: bound.numerator(),
            r_value: r,
            trace: ReductionTrace {
                steps: alloc::vec![TraceStep {
                    rule: draft.rule,
                    taken,
                    removed_vertices: draft.removed_vertices,
                    removed_edges: draft.removed_edges,
                    added_edges: draft.added_edges,
                    sub: draft.sub,
                }],
            },
            fallback_used: false,
        })
    }
}
