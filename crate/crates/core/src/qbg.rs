//! The quantum Bruhat graph on `W`.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem};
use crate::weyl::{WeylElt, WeylTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Bruhat,
    Quantum,
}

impl EdgeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeKind::Bruhat => "bruhat",
            EdgeKind::Quantum => "quantum",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QbgEdge {
    pub source: WeylElt,
    pub target: WeylElt,
    pub label: Root,
    pub kind: EdgeKind,
}

/// Kind of the candidate edge `x → x s_α`, if it is an edge at all.
pub fn classify_edge(rs: &RootSystem, x: &WeylElt, alpha: &Root) -> Result<Option<EdgeKind>> {
    if !rs.is_root(alpha) {
        return Err(Error::NotARoot(alpha.0.clone()));
    }
    if !alpha.is_positive() {
        return Err(Error::NotPositive(alpha.0.clone()));
    }
    // x s_α = s_{xα} x
    let y = x.left_mul_reflection(rs, &x.apply_root(alpha));
    Ok(classify_lengths(x.length(), y.length(), alpha.height()))
}

/// Classifies by the two length conditions.
pub fn classify_lengths(lx: usize, ly: usize, height: i64) -> Option<EdgeKind> {
    let (lx, ly) = (lx as i64, ly as i64);
    if ly == lx + 1 {
        Some(EdgeKind::Bruhat)
    } else if ly == lx - 2 * height + 1 {
        Some(EdgeKind::Quantum)
    } else {
        None
    }
}

/// Kind of a walk step `w → s_η w`, whose edge label is `|w⁻¹η|`.
pub fn classify_step(rs: &RootSystem, w: &WeylElt, eta: &Root) -> Option<(WeylElt, EdgeKind)> {
    let label = w.apply_inverse_root(eta).abs();
    let next = w.left_mul_reflection(rs, eta);
    classify_lengths(w.length(), next.length(), label.height()).map(|k| (next, k))
}

/// All edges of the graph, stored per label.
#[derive(Debug, Clone)]
pub struct Qbg {
    by_label: Vec<Vec<QbgEdge>>,
}

impl Qbg {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let table = WeylTable::new(rs)?;
        let mut sources: Vec<&WeylElt> = table.elements().iter().collect();
        sources.sort_by(|a, b| a.key().cmp(b.key()));
        let mut by_label = vec![Vec::new(); rs.num_positive_roots()];
        for x in sources {
            for (k, alpha) in rs.positive_roots().iter().enumerate() {
                let target = x.compose(rs, &WeylElt::reflection(rs, alpha)?);
                if let Some(kind) = classify_lengths(x.length(), target.length(), alpha.height()) {
                    by_label[k].push(QbgEdge { source: x.clone(), target, label: alpha.clone(), kind });
                }
            }
        }
        Ok(Self { by_label })
    }

    /// Edges with the given positive-root index as label.
    pub fn edges_with_label(&self, root_index: usize) -> &[QbgEdge] {
        &self.by_label[root_index]
    }

    /// All edges ordered by (source key, root index).
    pub fn edges(&self) -> Vec<&QbgEdge> {
        let mut all: Vec<(usize, &QbgEdge)> =
            self.by_label.iter().enumerate().flat_map(|(k, es)| es.iter().map(move |e| (k, e))).collect();
        all.sort_by(|(ka, a), (kb, b)| a.source.key().cmp(b.source.key()).then(ka.cmp(kb)));
        all.into_iter().map(|(_, e)| e).collect()
    }

    pub fn len(&self) -> usize {
        self.by_label.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn count(&self, kind: EdgeKind) -> usize {
        self.by_label.iter().flatten().filter(|e| e.kind == kind).count()
    }
}

/// DOT digraph; Bruhat edges solid, quantum edges dashed.
pub fn export_dot<'a>(rs: &RootSystem, edges: impl IntoIterator<Item = &'a QbgEdge>) -> String {
    let mut out = String::from("digraph qbg {\n");
    let mut nodes = std::collections::BTreeSet::new();
    let mut lines = Vec::new();
    for e in edges {
        let s = e.source.word_string(rs);
        let t = e.target.word_string(rs);
        let style = match e.kind {
            EdgeKind::Bruhat => "solid",
            EdgeKind::Quantum => "dashed",
        };
        lines.push(format!("  \"{s}\" -> \"{t}\" [label=\"{}\", style={style}];", e.label));
        nodes.insert((e.source.length(), s));
        nodes.insert((e.target.length(), t));
    }
    for (_, n) in &nodes {
        let _ = writeln!(out, "  \"{n}\";");
    }
    for l in lines {
        out.push_str(&l);
        out.push('\n');
    }
    out.push_str("}\n");
    out
}

pub fn edges_json<'a>(rs: &RootSystem, edges: impl IntoIterator<Item = &'a QbgEdge>) -> Value {
    Value::Array(
        edges
            .into_iter()
            .map(|e| {
                json!({
                    "source_word": e.source.word_string(rs),
                    "target_word": e.target.word_string(rs),
                    "root_coords": e.label.0,
                    "kind": e.kind.as_str(),
                })
            })
            .collect(),
    )
}
