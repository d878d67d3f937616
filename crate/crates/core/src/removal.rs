//! How visibility numbers move when one edge or one vertex is deleted.
//!
//! A scan solves the base graph once, then every `G - e` (or `G - x`) that
//! stays connected, and grades each result against the known general bounds.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph};
use crate::solver::{max_visibility_set, max_visibility_set_with, SolverOptions};
use crate::visibility::{is_visibility_set, VisibilityKind};

/// A general inequality between `sigma(G)` and `sigma(G - e)` or `sigma(G - x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bound {
    /// `mu(G)/2 <= mu(G-e)`
    EdgeMutualLower,
    /// `mu(G-e) <= 2 mu(G)`
    EdgeMutualUpper,
    /// `muo(G)/6 <= muo(G-e)`
    EdgeOuterLower,
    /// `muo(G-e) <= 2 muo(G) + 1`
    EdgeOuterUpper,
    /// `mut(G-e) <= mut(G) + 2`
    EdgeTotalUpper,
    /// `mu(G)/2 + 1 <= mu(G-e)`, conjectured only.
    EdgeMutualConjecture,
    /// `mu(G-x) <= 2 mu(G)`
    VertexMutualUpper,
    /// `mu(G-x) <= mu(G)` when `diam(G) = 2`.
    VertexMutualDiameterTwo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Theorem,
    /// Violations are findings, not failures.
    Conjecture,
}

impl Bound {
    pub fn name(self) -> &'static str {
        match self {
            Bound::EdgeMutualLower => "mu(G)/2 <= mu(G-e)",
            Bound::EdgeMutualUpper => "mu(G-e) <= 2mu(G)",
            Bound::EdgeOuterLower => "muo(G)/6 <= muo(G-e)",
            Bound::EdgeOuterUpper => "muo(G-e) <= 2muo(G)+1",
            Bound::EdgeTotalUpper => "mut(G-e) <= mut(G)+2",
            Bound::EdgeMutualConjecture => "mu(G)/2+1 <= mu(G-e)",
            Bound::VertexMutualUpper => "mu(G-x) <= 2mu(G)",
            Bound::VertexMutualDiameterTwo => "mu(G-x) <= mu(G) [diam 2]",
        }
    }

    pub fn severity(self) -> Severity {
        match self {
            Bound::EdgeMutualConjecture => Severity::Conjecture,
            _ => Severity::Theorem,
        }
    }

    /// Evaluated in integers: `before` is `sigma(G)`, `after` the value after removal.
    pub fn holds(self, before: usize, after: usize) -> bool {
        match self {
            Bound::EdgeMutualLower => before <= 2 * after,
            Bound::EdgeMutualUpper | Bound::VertexMutualUpper => after <= 2 * before,
            Bound::EdgeOuterLower => before <= 6 * after,
            Bound::EdgeOuterUpper => after <= 2 * before + 1,
            Bound::EdgeTotalUpper => after <= before + 2,
            Bound::EdgeMutualConjecture => before + 2 <= 2 * after,
            Bound::VertexMutualDiameterTwo => after <= before,
        }
    }

    /// Bounds that apply to edge removal for `kind`. Dual has none.
    pub fn for_edges(kind: VisibilityKind) -> &'static [Bound] {
        match kind {
            VisibilityKind::Mutual => &[
                Bound::EdgeMutualLower,
                Bound::EdgeMutualUpper,
                Bound::EdgeMutualConjecture,
            ],
            VisibilityKind::Outer => &[Bound::EdgeOuterLower, Bound::EdgeOuterUpper],
            VisibilityKind::Total => &[Bound::EdgeTotalUpper],
            VisibilityKind::Dual => &[],
        }
    }

    /// Bounds that apply to vertex removal for `kind` on a graph of the given diameter.
    pub fn for_vertices(kind: VisibilityKind, diameter: u32) -> &'static [Bound] {
        match (kind, diameter) {
            (VisibilityKind::Mutual, 2) => &[Bound::VertexMutualUpper, Bound::VertexMutualDiameterTwo],
            (VisibilityKind::Mutual, _) => &[Bound::VertexMutualUpper],
            _ => &[],
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Element {
    Edge { u: usize, v: usize },
    Vertex { x: usize },
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Edge { u, v } => write!(f, "{u}-{v}"),
            Element::Vertex { x } => write!(f, "{x}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub bound: Bound,
    pub severity: Severity,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RemovalRecord {
    pub element: Element,
    /// `None` when the removal disconnects the graph.
    pub after_value: Option<usize>,
    pub skipped: Option<String>,
    pub verdicts: Vec<Verdict>,
}

/// Extremes over all non-skipped records. Ratios are `None` when the base value is 0.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Extremal {
    pub min_ratio: Option<f64>,
    pub max_ratio: Option<f64>,
    pub min_diff: Option<i64>,
    pub max_diff: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RemovalReport {
    pub kind: VisibilityKind,
    pub base_value: usize,
    pub records: Vec<RemovalRecord>,
    pub extremal: Extremal,
}

impl RemovalReport {
    /// Theorem-level verdicts that failed (conjectures excluded).
    pub fn violations(&self) -> impl Iterator<Item = (&RemovalRecord, &Verdict)> {
        self.failures(Severity::Theorem)
    }

    /// Conjecture verdicts that failed.
    pub fn conjecture_counterexamples(&self) -> impl Iterator<Item = (&RemovalRecord, &Verdict)> {
        self.failures(Severity::Conjecture)
    }

    fn failures(&self, severity: Severity) -> impl Iterator<Item = (&RemovalRecord, &Verdict)> {
        self.records.iter().flat_map(move |r| {
            r.verdicts
                .iter()
                .filter(move |v| v.severity == severity && !v.holds)
                .map(move |v| (r, v))
        })
    }

    pub fn after(&self, element: Element) -> Option<usize> {
        self.records
            .iter()
            .find(|r| r.element == element)
            .and_then(|r| r.after_value)
    }

    fn finish(kind: VisibilityKind, base_value: usize, mut records: Vec<RemovalRecord>) -> Self {
        records.sort_by_key(|r| r.element);
        let mut extremal = Extremal::default();
        for after in records.iter().filter_map(|r| r.after_value) {
            let diff = after as i64 - base_value as i64;
            extremal.min_diff = Some(extremal.min_diff.map_or(diff, |m| m.min(diff)));
            extremal.max_diff = Some(extremal.max_diff.map_or(diff, |m| m.max(diff)));
            if base_value > 0 {
                let ratio = after as f64 / base_value as f64;
                extremal.min_ratio = Some(extremal.min_ratio.map_or(ratio, |m| m.min(ratio)));
                extremal.max_ratio = Some(extremal.max_ratio.map_or(ratio, |m| m.max(ratio)));
            }
        }
        RemovalReport {
            kind,
            base_value,
            records,
            extremal,
        }
    }
}

fn grade(bounds: &[Bound], before: usize, after: usize) -> Vec<Verdict> {
    bounds
        .iter()
        .map(|&bound| Verdict {
            bound,
            severity: bound.severity(),
            holds: bound.holds(before, after),
        })
        .collect()
}

fn skipped(element: Element, why: &str) -> RemovalRecord {
    RemovalRecord {
        element,
        after_value: None,
        skipped: Some(why.to_string()),
        verdicts: Vec::new(),
    }
}

fn map_jobs<T: Sync, R: Send>(items: &[T], parallel: bool, f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    if parallel {
        items.par_iter().map(f).collect()
    } else {
        items.iter().map(f).collect()
    }
}

/// Removes each edge in turn. Bridges are recorded as skipped.
pub fn edge_scan(g: &Graph, kind: VisibilityKind, opts: &SolverOptions) -> Result<RemovalReport> {
    if !g.is_connected() {
        return Err(Error::disconnected("edge scan"));
    }
    let base = max_visibility_set(g, kind, opts)?.value;
    let bounds = Bound::for_edges(kind);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let records = map_jobs(&edges, opts.parallel, |&(u, v)| -> Result<RemovalRecord> {
        let element = Element::Edge { u, v };
        let h = g.remove_edge(u, v)?;
        let d = all_pairs_distances(&h);
        if !d.is_connected() {
            return Ok(skipped(element, "bridge"));
        }
        let after = max_visibility_set_with(&h, &d, kind, opts)?.value;
        Ok(RemovalRecord {
            element,
            after_value: Some(after),
            skipped: None,
            verdicts: grade(bounds, base, after),
        })
    });
    Ok(RemovalReport::finish(kind, base, records.into_iter().collect::<Result<_>>()?))
}

/// Removes each vertex in turn. Cut vertices are recorded as skipped.
/// Elements carry the original vertex labels.
pub fn vertex_scan(g: &Graph, kind: VisibilityKind, opts: &SolverOptions) -> Result<RemovalReport> {
    if !g.is_connected() {
        return Err(Error::disconnected("vertex scan"));
    }
    let base = max_visibility_set(g, kind, opts)?.value;
    let bounds = Bound::for_vertices(kind, g.diameter()?);
    let vertices: Vec<usize> = (0..g.n()).collect();
    let records = map_jobs(&vertices, opts.parallel, |&x| -> Result<RemovalRecord> {
        let element = Element::Vertex { x };
        if g.n() == 1 {
            return Ok(skipped(element, "only vertex"));
        }
        let h = g.remove_vertex(x)?.graph;
        let d = all_pairs_distances(&h);
        if !d.is_connected() {
            return Ok(skipped(element, "cut vertex"));
        }
        let after = max_visibility_set_with(&h, &d, kind, opts)?.value;
        Ok(RemovalRecord {
            element,
            after_value: Some(after),
            skipped: None,
            verdicts: grade(bounds, base, after),
        })
    });
    Ok(RemovalReport::finish(kind, base, records.into_iter().collect::<Result<_>>()?))
}

/// Outcome of checking an implication whose hypothesis may not apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaVerdict {
    Holds,
    Violated,
    NotApplicable,
}

/// If `mud(G) = 1`, every singleton dual set `{x}` must leave `mut(G - x) = 0`.
pub fn check_lemma_mud1(g: &Graph) -> Result<LemmaVerdict> {
    let opts = SolverOptions::default();
    let dual = max_visibility_set(g, VisibilityKind::Dual, &opts)?;
    if dual.value != 1 {
        return Ok(LemmaVerdict::NotApplicable);
    }
    let mut applied = false;
    for x in 0..g.n() {
        if !is_visibility_set(g, crate::graph::VertexSet::singleton(x), VisibilityKind::Dual)? {
            continue;
        }
        let h = g.remove_vertex(x)?.graph;
        if !h.is_connected() {
            continue;
        }
        applied = true;
        if max_visibility_set(&h, VisibilityKind::Total, &opts)?.value != 0 {
            return Ok(LemmaVerdict::Violated);
        }
    }
    Ok(if applied {
        LemmaVerdict::Holds
    } else {
        LemmaVerdict::NotApplicable
    })
}

/// Largest `muo(G - x) - a * muo(G) - b` seen over a corpus, with the graph
/// index and vertex where it occurs. Exploratory; nothing is asserted.
#[derive(Clone, Debug, Serialize)]
pub struct OuterVertexSlack {
    pub a: f64,
    pub b: f64,
    pub max_slack: Option<f64>,
    pub at: Option<(usize, usize)>,
    pub removals_examined: usize,
}

pub fn outer_vertex_slack(corpus: &[Graph], a: f64, b: f64, opts: &SolverOptions) -> Result<OuterVertexSlack> {
    let mut out = OuterVertexSlack {
        a,
        b,
        max_slack: None,
        at: None,
        removals_examined: 0,
    };
    for (i, g) in corpus.iter().enumerate() {
        let report = vertex_scan(g, VisibilityKind::Outer, opts)?;
        for r in &report.records {
            let (Some(after), Element::Vertex { x }) = (r.after_value, r.element) else {
                continue;
            };
            out.removals_examined += 1;
            let slack = after as f64 - a * report.base_value as f64 - b;
            if out.max_slack.is_none_or(|m| slack > m) {
                out.max_slack = Some(slack);
                out.at = Some((i, x));
            }
        }
    }
    Ok(out)
}

/// Text table with one row per removed element.
pub fn render_table(report: &RemovalReport) -> String {
    let mut out = format!(
        "{}(G) = {}\n{:<10} {:>6}  {}\n",
        report.kind, report.base_value, "removed", "after", "bounds"
    );
    for r in &report.records {
        let after = r
            .after_value
            .map_or_else(|| "-".to_string(), |v| v.to_string());
        let notes = match &r.skipped {
            Some(why) => format!("skipped ({why})"),
            None => r
                .verdicts
                .iter()
                .map(|v| {
                    let mark = match (v.holds, v.severity) {
                        (true, _) => "ok",
                        (false, Severity::Theorem) => "VIOLATED",
                        (false, Severity::Conjecture) => "counterexample",
                    };
                    format!("[{}: {mark}]", v.bound)
                })
                .collect::<Vec<_>>()
                .join(" "),
        };
        out.push_str(&format!("{:<10} {:>6}  {}\n", r.element.to_string(), after, notes));
    }
    let e = &report.extremal;
    let show = |v: Option<f64>| v.map_or_else(|| "undefined".to_string(), |r| format!("{r:.4}"));
    out.push_str(&format!(
        "ratio min {} max {}; diff min {} max {}\n",
        show(e.min_ratio),
        show(e.max_ratio),
        e.min_diff.map_or("-".into(), |d| d.to_string()),
        e.max_diff.map_or("-".into(), |d| d.to_string()),
    ));
    out
}
