//! JSON documents for digraphs, families and value maps, and DOT export.
//!
//! A digraph document looks like
//! `{"order":3,"arcs":[[0,1],[1,2],[2,0]],"labels":["a","b","c"]}`;
//! `labels` and `metadata` are optional. Value maps are plain JSON arrays of
//! naturals, one entry per vertex.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::constructions::{cartesian_product, FamilyAssignment};
use crate::digraph::{Digraph, ValueMap, VertexSet};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DigraphDocument {
    pub order: usize,
    pub arcs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<BTreeMap<String, serde_json::Value>>,
}

impl DigraphDocument {
    pub fn from_digraph(d: &Digraph) -> Self {
        DigraphDocument {
            order: d.order(),
            arcs: d.arcs().iter().map(|&(t, h)| [t, h]).collect(),
            labels: d.labels().map(<[String]>::to_vec),
            metadata: None,
        }
    }

    /// Validates the document: endpoints in range, no repeated arc, one
    /// label per vertex.
    pub fn to_digraph(&self) -> Result<Digraph> {
        let mut seen = BTreeSet::new();
        for (position, &[tail, head]) in self.arcs.iter().enumerate() {
            if tail >= self.order || head >= self.order {
                return Err(Error::ArcOutOfRange { tail, head, order: self.order });
            }
            if !seen.insert((tail, head)) {
                return Err(Error::DuplicateArc { tail, head, position });
            }
        }
        let d = Digraph::new(self.order, self.arcs.iter().map(|&[t, h]| (t, h)))?;
        match &self.labels {
            Some(labels) => d.with_labels(labels.clone()),
            None => Ok(d),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDocument {
    pub base: DigraphDocument,
    /// One factor per base vertex, in base-vertex order.
    pub factors: Vec<DigraphDocument>,
    /// Optional semi-Grundy function per factor.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub functions: Option<Vec<Vec<usize>>>,
}

impl FamilyDocument {
    pub fn to_family(&self) -> Result<(FamilyAssignment, Option<Vec<ValueMap>>)> {
        let base = self.base.to_digraph()?;
        let factors = self.factors.iter().map(DigraphDocument::to_digraph).collect::<Result<Vec<_>>>()?;
        let fa = cartesian_product(&base, factors)?;
        let funcs = match &self.functions {
            None => None,
            Some(fs) => {
                if fs.len() != base.order() {
                    return Err(Error::LengthMismatch { expected: base.order(), found: fs.len() });
                }
                let funcs: Vec<ValueMap> = fs.iter().cloned().map(ValueMap::new).collect();
                for (f, factor) in funcs.iter().zip(fa.factors()) {
                    f.check_len(factor.order())?;
                }
                Some(funcs)
            }
        };
        Ok((fa, funcs))
    }
}

fn syntax(e: serde_json::Error) -> Error {
    Error::Syntax { line: e.line(), column: e.column(), message: e.to_string() }
}

pub fn parse_document<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(syntax)
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    parse_document::<DigraphDocument>(text)?.to_digraph()
}

pub fn parse_value_map(text: &str) -> Result<ValueMap> {
    Ok(ValueMap::new(parse_document::<Vec<usize>>(text)?))
}

/// Comma-separated vertex indices, e.g. `0,2,5`. An empty string is the empty set.
pub fn parse_vertex_set(order: usize, text: &str) -> Result<VertexSet> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(VertexSet::empty(order));
    }
    let indices = text
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Input(format!("bad vertex {t:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    VertexSet::from_indices(order, indices)
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Deterministic DOT text; with a function, node labels read `name:value`.
pub fn export_dot(d: &Digraph, values: Option<&ValueMap>) -> String {
    let mut out = String::from("digraph D {\n");
    for v in d.vertices() {
        let label = match values {
            Some(f) => format!("{}:{}", d.name(v), f.get(v)),
            None => d.name(v),
        };
        writeln!(out, "  n{v} [label=\"{}\"];", escape(&label)).unwrap();
    }
    for &(t, h) in d.arcs() {
        writeln!(out, "  n{t} -> n{h};").unwrap();
    }
    out.push_str("}\n");
    out
}
