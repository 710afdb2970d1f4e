//! Canonical JSON documents.
//!
//! Keys are sorted and there is no insignificant whitespace, so equal
//! objects always serialize to identical bytes. Every document carries a
//! `"class"` field; when it is missing on input the family is inferred,
//! preferring magog.

use serde_json::{json, Map, Value};

use crate::class::{Family, Representation};
use crate::enumerate::{EnumerationReport, Stats};
use crate::error::{Error, Result, Verdict};
use crate::grid::{
    validate_corner_sum, validate_fpl, validate_height_function, validate_vertex_model, CornerSumMatrix, Edge,
    FplConfiguration, HeightFunctionMatrix, Vertex, VertexModel,
};
use crate::matrix::{validate_sign, FamilyMatrix, MatrixKind, SignMatrix};
use crate::object::Object;

/// Structural content of a document, before any validity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Entries(Vec<Vec<i64>>),
    Cells(Vec<Vec<i64>>),
    Edges(Vec<Edge>),
    Arrows(Vec<(Vertex, Vertex)>),
}

/// A document that matches one of the schemas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub representation: Representation,
    pub n: usize,
    pub family: Option<Family>,
    pub payload: Payload,
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| malformed(format!("missing field `{key}`")))
}

fn int_grid(v: &Value, key: &str, size: usize) -> Result<Vec<Vec<i64>>> {
    let rows = v.as_array().ok_or_else(|| malformed(format!("`{key}` must be an array of rows")))?;
    if rows.len() != size {
        return Err(malformed(format!("`{key}` has {} rows, expected {size}", rows.len())));
    }
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let row = row.as_array().ok_or_else(|| malformed(format!("`{key}` row {i} is not an array")))?;
            if row.len() != size {
                return Err(malformed(format!("`{key}` row {i} has {} entries, expected {size}", row.len())));
            }
            row.iter()
                .map(|x| x.as_i64().ok_or_else(|| malformed(format!("`{key}` row {i} holds a non-integer {x}"))))
                .collect()
        })
        .collect()
}

fn vertex(v: &Value) -> Result<Vertex> {
    let pair = v.as_array().filter(|a| a.len() == 2).ok_or_else(|| malformed(format!("{v} is not a vertex [i, j]")))?;
    let coord = |x: &Value| {
        x.as_u64()
            .map(|c| c as usize)
            .ok_or_else(|| malformed(format!("vertex coordinate {x} is not a nonnegative integer")))
    };
    Ok(Vertex::new(coord(&pair[0])?, coord(&pair[1])?))
}

fn vertex_pairs(v: &Value, key: &str) -> Result<Vec<(Vertex, Vertex)>> {
    let items = v.as_array().ok_or_else(|| malformed(format!("`{key}` must be an array")))?;
    items
        .iter()
        .map(|p| {
            let p = p
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| malformed(format!("`{key}` item {p} is not a pair of vertices")))?;
            Ok((vertex(&p[0])?, vertex(&p[1])?))
        })
        .collect()
}

/// Schema-level parse. Shape problems are reported as [`Error::Malformed`].
pub fn parse_document(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| malformed(format!("invalid JSON: {e}")))?;
    document_from_value(&value)
}

/// Every document in a stream of concatenated or newline-separated JSON
/// values.
pub fn parse_documents(text: &str) -> Result<Vec<Document>> {
    serde_json::Deserializer::from_str(text)
        .into_iter::<Value>()
        .map(|v| document_from_value(&v.map_err(|e| malformed(format!("invalid JSON: {e}")))?))
        .collect()
}

pub fn document_from_value(value: &Value) -> Result<Document> {
    let obj = value.as_object().ok_or_else(|| malformed("document must be a JSON object"))?;
    let kind = field(obj, "kind")?.as_str().ok_or_else(|| malformed("`kind` must be a string"))?;
    let representation =
        Representation::from_kind(kind).ok_or_else(|| malformed(format!("unknown kind `{kind}`")))?;
    let n = field(obj, "n")?.as_u64().ok_or_else(|| malformed("`n` must be a nonnegative integer"))? as usize;
    if n < 1 {
        return Err(malformed("`n` must be at least 1"));
    }
    let family = match obj.get("class") {
        None => None,
        Some(c) => Some(c.as_str().ok_or_else(|| malformed("`class` must be a string"))?.parse()?),
    };
    let payload = match representation {
        Representation::Matrix => Payload::Entries(int_grid(field(obj, "entries")?, "entries", n)?),
        Representation::CornerSum | Representation::HeightFunction => {
            Payload::Cells(int_grid(field(obj, "cells")?, "cells", n + 1)?)
        }
        Representation::Fpl => Payload::Edges(
            vertex_pairs(field(obj, "edges")?, "edges")?
                .into_iter()
                .map(|(a, b)| Edge::between(a, b).ok_or_else(|| malformed(format!("{a} and {b} are not adjacent"))))
                .collect::<Result<_>>()?,
        ),
        Representation::VertexModel => Payload::Arrows(vertex_pairs(field(obj, "arrows")?, "arrows")?),
    };
    Ok(Document { representation, n, family, payload })
}

impl Document {
    /// All violations of the document against `family`. A sign-matrix
    /// document is checked as a sign matrix first; the family conditions are
    /// added only when those hold.
    pub fn verdict(&self, family: Family) -> Result<Verdict> {
        let n = self.n;
        match &self.payload {
            Payload::Entries(rows) => {
                let mut v = validate_sign(rows)?;
                if v.is_valid() {
                    v = SignMatrix::new(rows)?.verdict(MatrixKind::from(family));
                }
                Ok(v)
            }
            Payload::Cells(cells) => match self.representation {
                Representation::CornerSum => validate_corner_sum(cells, family),
                _ => validate_height_function(cells, family),
            },
            Payload::Edges(edges) => validate_fpl(n, edges, family),
            Payload::Arrows(arrows) => validate_vertex_model(n, arrows, family),
        }
    }

    /// Validating conversion to a typed object of `family`.
    pub fn to_object(&self, family: Family) -> Result<Object> {
        let n = self.n;
        Ok(match &self.payload {
            Payload::Entries(rows) => FamilyMatrix::from_rows(rows, family)?.into(),
            Payload::Cells(cells) => match self.representation {
                Representation::CornerSum => CornerSumMatrix::new(cells, family)?.into(),
                _ => HeightFunctionMatrix::new(cells, family)?.into(),
            },
            Payload::Edges(edges) => FplConfiguration::new(n, edges, family)?.into(),
            Payload::Arrows(arrows) => VertexModel::new(n, arrows, family)?.into(),
        })
    }

    /// Uses the declared family, or infers one: magog if valid, else asm.
    pub fn into_object(self) -> Result<Object> {
        if let Some(f) = self.family {
            return self.to_object(f);
        }
        match self.to_object(Family::Magog) {
            Err(Error::Invalid { .. }) => match self.to_object(Family::Asm) {
                Ok(x) => Ok(x),
                Err(Error::Invalid { .. }) => self.to_object(Family::Magog),
                Err(e) => Err(e),
            },
            other => other,
        }
    }
}

/// Parses and fully validates a document.
pub fn parse(text: &str) -> Result<Object> {
    parse_document(text)?.into_object()
}

fn vertex_json(v: Vertex) -> Value {
    json!([v.row, v.col])
}

pub fn to_value(x: &Object) -> Value {
    let kind = x.representation().kind();
    let class = x.family().as_str();
    let n = x.n();
    match x {
        Object::Matrix(m) => json!({"kind": kind, "n": n, "class": class, "entries": m.matrix().rows()}),
        Object::CornerSum(c) => json!({"kind": kind, "n": n, "class": class, "cells": c.cells()}),
        Object::Height(h) => json!({"kind": kind, "n": n, "class": class, "cells": h.cells()}),
        Object::Fpl(f) => {
            let edges: Vec<Value> =
                f.edges().into_iter().map(|e| json!([vertex_json(e.first()), vertex_json(e.second())])).collect();
            json!({"kind": kind, "n": n, "class": class, "edges": edges})
        }
        Object::Vertex(v) => {
            let arrows: Vec<Value> =
                v.arrows().into_iter().map(|(t, h)| json!([vertex_json(t), vertex_json(h)])).collect();
            json!({"kind": kind, "n": n, "class": class, "arrows": arrows})
        }
    }
}

/// Canonical single-line serialization.
pub fn render_json(x: &Object) -> String {
    to_value(x).to_string()
}

pub fn stats_value(stats: &Stats) -> Value {
    let mut out = Map::new();
    for (name, dist) in stats {
        let d: Map<String, Value> = dist.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        out.insert(name.clone(), Value::Object(d));
    }
    Value::Object(out)
}

/// `{"class":..,"count":"<decimal>","n":..,"stats":{..}}`; the elapsed time
/// is left out so that reports are reproducible.
pub fn render_report(r: &EnumerationReport) -> String {
    let stats = r.stats.as_ref().map_or_else(|| json!({}), stats_value);
    json!({"n": r.n, "class": r.class.to_string(), "count": r.count.to_string(), "stats": stats}).to_string()
}

/// `{"class":..,"valid":..,"violations":[{"at":..,"detail":..,"kind":..}]}`.
pub fn verdict_value(class: &str, v: &Verdict) -> Value {
    let violations: Vec<Value> = v
        .violations()
        .iter()
        .map(|x| json!({"kind": x.kind.as_str(), "at": x.at.to_string(), "detail": x.detail}))
        .collect();
    json!({"class": class, "valid": v.is_valid(), "violations": violations})
}
