//! Report rows, summaries and certificate JSON.

use std::collections::BTreeMap;
use std::io::{self, Write};

use fvslab_core::canon::{canonical_form, canonical_graph};
use fvslab_core::construct::{FvsCertificate, TraceStep};
use fvslab_core::Graph;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::io::to_graph6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Fallback,
    Skipped,
}

/// Girth, with forests written as `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Girth(pub Option<usize>);

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            Some(k) => s.serialize_u64(k as u64),
            None => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Girth {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Finite(usize),
            Word(String),
        }
        match Repr::deserialize(d)? {
            Repr::Finite(k) => Ok(Girth(Some(k))),
            Repr::Word(w) if w == "inf" => Ok(Girth(None)),
            Repr::Word(w) => Err(serde::de::Error::custom(format!("bad girth `{w}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub graph_id: String,
    pub corpus: String,
    pub n: usize,
    pub m: usize,
    pub girth: Girth,
    pub planar: bool,
    pub exact_phi: Option<usize>,
    pub constructive_size: Option<usize>,
    pub bound_numerator: i64,
    pub r_numerator: i64,
    pub status: Status,
    pub millis: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failed_checks: Vec<String>,
}

impl GraphReport {
    /// `bound_numerator - 7 exact_phi`.
    pub fn slack(&self) -> Option<i64> {
        self.exact_phi.map(|p| self.bound_numerator - 7 * p as i64)
    }
}

/// graph6 of the canonical relabeling for simple graphs, else the canonical
/// form bytes in hex.
pub fn graph_id(g: &Graph) -> String {
    if g.is_simple() {
        to_graph6(&canonical_graph(g).0).expect("simple")
    } else {
        let hex: String = canonical_form(g).as_bytes().iter().map(|b| format!("{b:02x}")).collect();
        format!("cf:{hex}")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub rows: usize,
    pub pass: usize,
    pub fail: usize,
    pub fallback: usize,
    pub skipped: usize,
    /// Largest and smallest `bound_numerator - 7 exact_phi` over rows.
    pub max_slack: Option<i64>,
    pub min_slack: Option<i64>,
    pub checks: BTreeMap<String, Tally>,
    /// Counts that are recorded but not asserted.
    pub observations: BTreeMap<String, usize>,
}

impl Summary {
    pub fn add_row(&mut self, row: &GraphReport) {
        self.rows += 1;
        match row.status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Fallback => self.fallback += 1,
            Status::Skipped => self.skipped += 1,
        }
        if let Some(s) = row.slack() {
            self.max_slack = Some(self.max_slack.map_or(s, |x| x.max(s)));
            self.min_slack = Some(self.min_slack.map_or(s, |x| x.min(s)));
        }
    }

    pub fn check(&mut self, name: &str, ok: bool) {
        let t = self.checks.entry(name.to_string()).or_default();
        t.checked += 1;
        t.failed += usize::from(!ok);
    }

    pub fn observe(&mut self, name: &str, count: usize) {
        *self.observations.entry(name.to_string()).or_default() += count;
    }

    pub fn failed_checks(&self) -> usize {
        self.checks.values().map(|t| t.failed).sum()
    }
}

/// Header line, then one row per line, then `{"summary": ...}`.
pub fn write_jsonl(out: &mut impl Write, header: &Value, rows: &[GraphReport], summary: &Summary) -> io::Result<()> {
    serde_json::to_writer(&mut *out, &json!({ "header": header }))?;
    writeln!(out)?;
    for r in rows {
        serde_json::to_writer(&mut *out, r)?;
        writeln!(out)?;
    }
    serde_json::to_writer(&mut *out, &json!({ "summary": summary }))?;
    writeln!(out)
}

pub fn certificate_json(c: &FvsCertificate) -> Value {
    json!({
        "steps": c.trace.steps.iter().map(step_json).collect::<Vec<_>>(),
        "witness": c.witness,
        "bound_numerator": c.bound_numerator,
        "r_numerator": c.r_value.numerator(),
        "fallback_used": c.fallback_used,
    })
}

fn step_json(s: &TraceStep) -> Value {
    json!({
        "rule": s.rule.id(),
        "taken": s.taken,
        "removed_vertices": s.removed_vertices,
        "removed_edges": s.removed_edges,
        "added_edges": s.added_edges,
        "sub": s.sub.iter().map(certificate_json).collect::<Vec<_>>(),
    })
}
