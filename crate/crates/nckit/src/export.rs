//! Deterministic text renderings: Graphviz DOT for the graphs, CSV for the
//! tabular data, JSON for everything structured.  Input slices are already
//! sorted by their producers, so equal inputs render to equal bytes.

use serde_json::{json, Value};

use crate::assoc::RealizedPolytope;
use crate::chains::LabeledChain;
use crate::complex::CellComplex;
use crate::partition::{LatticeKind, Partition};

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_row(fields: impl IntoIterator<Item = String>) -> String {
    let mut row = fields
        .into_iter()
        .map(|f| csv_field(&f))
        .collect::<Vec<_>>()
        .join(",");
    row.push('\n');
    row
}

/// Hasse diagram of a partition lattice: one node per element named by its
/// canonical serialization, one arrow per cover, pointing up.
pub fn lattice_dot(elements: &[Partition], kind: LatticeKind) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for p in elements {
        out.push_str(&format!("  {};\n", dot_quote(&p.to_string())));
    }
    for p in elements {
        let name = dot_quote(&p.to_string());
        for q in p.upper_covers(kind) {
            out.push_str(&format!("  {} -> {};\n", name, dot_quote(&q.to_string())));
        }
    }
    out.push_str("}\n");
    out
}

/// The elements as a JSON array of `{"n": .., "blocks": [[..], ..]}`.
pub fn lattice_json(elements: &[Partition]) -> Value {
    json!(elements)
}

/// One row per chain: its elements bottom to top, then the transposition
/// labels, then the Stanley labels.
pub fn chains_csv(chains: &[LabeledChain]) -> String {
    let Some(first) = chains.first() else {
        return String::new();
    };
    let steps = first.labels().len();
    let mut header = Vec::new();
    for i in 0..=steps {
        header.push(format!("element{i}"));
    }
    for i in 1..=steps {
        header.push(format!("label{i}"));
    }
    for i in 1..=steps {
        header.push(format!("stanley{i}"));
    }
    let mut out = csv_row(header);
    for chain in chains {
        let mut fields = Vec::new();
        fields.extend(chain.elements().iter().map(|p| p.to_string()));
        fields.extend(chain.labels().iter().map(|t| t.to_string()));
        fields.extend(chain.stanley_labels().iter().map(|s| s.to_string()));
        out.push_str(&csv_row(fields));
    }
    out
}

/// Cell counts plus every cell keyed by dimension:
/// `{"dims": [..], "cells": {"0": [{"id", "labels", "facets"}, ..], ..}}`.
pub fn complex_json(complex: &CellComplex) -> Value {
    let mut cells = serde_json::Map::new();
    for dim in 0..=complex.dimension() {
        let list: Vec<Value> = complex
            .cells(dim)
            .iter()
            .map(|cell| {
                json!({
                    "id": cell.id,
                    "labels": cell.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
                    "facets": cell.facets,
                })
            })
            .collect();
        cells.insert(dim.to_string(), Value::Array(list));
    }
    json!({ "dims": complex.cell_counts(), "cells": Value::Object(cells) })
}

/// The 2-skeleton as a DOT graph: nodes are 0-cells, edges are 1-cells
/// joining their two facets, and each 2-cell is listed as a comment naming
/// its boundary edges.
pub fn complex_dot(complex: &CellComplex) -> String {
    let mut out = String::from("graph skeleton {\n");
    for cell in complex.cells(0) {
        out.push_str(&format!("  {};\n", dot_quote(&cell.id)));
    }
    if complex.dimension() >= 1 {
        for cell in complex.cells(1) {
            out.push_str(&format!(
                "  {} -- {} [label={}];\n",
                dot_quote(&cell.facets[0]),
                dot_quote(&cell.facets[1]),
                dot_quote(&cell.id)
            ));
        }
    }
    if complex.dimension() >= 2 {
        for cell in complex.cells(2) {
            out.push_str(&format!(
                "  // 2-cell {}: boundary {}\n",
                cell.id,
                cell.facets.join(" ; ")
            ));
        }
    }
    out.push_str("}\n");
    out
}

/// Vertex coordinates, one row per vertex in id order.
pub fn coords_csv(poly: &RealizedPolytope) -> String {
    let Some(first) = poly.vertices().first() else {
        return String::new();
    };
    let mut header = vec!["vertex".to_string()];
    for i in 1..=first.coords.len() {
        header.push(format!("x{i}"));
    }
    let mut out = csv_row(header);
    for v in poly.vertices() {
        let mut fields = vec![v.id.clone()];
        fields.extend(v.coords.iter().map(|c| c.to_string()));
        out.push_str(&csv_row(fields));
    }
    out
}

/// The rotation graph: vertices named by their bracketings, one undirected
/// edge per single rotation.
pub fn rotation_dot(poly: &RealizedPolytope) -> String {
    let mut out = String::from("graph rotation {\n");
    for v in poly.vertices() {
        out.push_str(&format!("  {};\n", dot_quote(&v.id)));
    }
    for &(a, b) in poly.edges() {
        out.push_str(&format!(
            "  {} -- {};\n",
            dot_quote(&poly.vertices()[a].id),
            dot_quote(&poly.vertices()[b].id)
        ));
    }
    out.push_str("}\n");
    out
}
