//! JSON documents for complexes and group actions.
//!
//! A complex document is `{"vertices": [label, ...], "facets": [[label, ...], ...]}`.
//! The extended form lists the whole family under `"simplices"` instead of
//! `"facets"`. A label is a string (an atom), an array (a tuple),
//! `{"bary": [...]}` or `{"orbit": [...]}`.
//!
//! An action document is `{"generators": [{"name": "g", "map": {"a": "b", ...}}, ...]}`.
//! Map keys and string values use the canonical label syntax; vertices
//! absent from a map are fixed.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde_json::{json, Map, Value};

use crate::actions::{SimplicialAction, VertexPermutation};
use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::label::VertexLabel;

fn doc_err(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

pub fn label_from_json(v: &Value) -> Result<VertexLabel> {
    let list = |items: &Value| -> Result<Vec<VertexLabel>> {
        items
            .as_array()
            .ok_or_else(|| doc_err(format!("expected an array of labels, found {items}")))?
            .iter()
            .map(label_from_json)
            .collect()
    };
    match v {
        Value::String(s) => VertexLabel::atom(s.as_str()),
        Value::Number(n) => VertexLabel::atom(n.to_string()),
        Value::Array(_) => Ok(VertexLabel::tuple(list(v)?)),
        Value::Object(map) if map.len() == 1 => {
            if let Some(items) = map.get("bary") {
                Ok(VertexLabel::bary(list(items)?))
            } else if let Some(items) = map.get("orbit") {
                Ok(VertexLabel::orbit(list(items)?))
            } else {
                Err(doc_err(format!("unknown label object {v}")))
            }
        }
        other => Err(doc_err(format!("not a label: {other}"))),
    }
}

pub fn label_to_json(l: &VertexLabel) -> Value {
    match l {
        VertexLabel::Atom(a) => Value::String(a.clone()),
        VertexLabel::Tuple(m) => Value::Array(m.iter().map(label_to_json).collect()),
        VertexLabel::Bary(m) => json!({ "bary": m.iter().map(label_to_json).collect::<Vec<_>>() }),
        VertexLabel::Orbit(m) => json!({ "orbit": m.iter().map(label_to_json).collect::<Vec<_>>() }),
    }
}

fn label_list(v: &Value, what: &str) -> Result<Vec<VertexLabel>> {
    v.as_array()
        .ok_or_else(|| doc_err(format!("{what} must be an array")))?
        .iter()
        .map(label_from_json)
        .collect()
}

pub fn complex_from_json(v: &Value) -> Result<SimplicialComplex> {
    let obj = v.as_object().ok_or_else(|| doc_err("complex document must be an object"))?;
    let vertices = label_list(obj.get("vertices").ok_or_else(|| doc_err("missing \"vertices\""))?, "vertices")?;
    let family = match (obj.get("facets"), obj.get("simplices")) {
        (Some(f), None) | (None, Some(f)) => f,
        (None, None) => &Value::Array(Vec::new()),
        (Some(_), Some(_)) => return Err(doc_err("give either \"facets\" or \"simplices\", not both")),
    };
    let facets = family
        .as_array()
        .ok_or_else(|| doc_err("facets must be an array"))?
        .iter()
        .map(|f| label_list(f, "a facet"))
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_facets(vertices, facets)
}

/// Vertices in the complex's order; facets by dimension, then
/// lexicographically in that order.
pub fn complex_to_json(k: &SimplicialComplex) -> Value {
    let vertices: Vec<Value> = k.vertex_labels().iter().map(label_to_json).collect();
    let facets: Vec<Value> = k
        .facets()
        .iter()
        .map(|s| Value::Array(k.labels_of(s).iter().map(label_to_json).collect()))
        .collect();
    json!({ "vertices": vertices, "facets": facets })
}

fn map_label(v: &Value) -> Result<VertexLabel> {
    match v {
        Value::String(s) => VertexLabel::parse(s),
        other => label_from_json(other),
    }
}

/// Reads generators for an action on `complex` and completes them to the
/// generated group.
pub fn action_from_json(complex: SimplicialComplex, v: &Value) -> Result<SimplicialAction> {
    let gens = v
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| doc_err("action document needs a \"generators\" array"))?;
    let mut generators = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        let name = g.get("name").and_then(Value::as_str).map_or_else(|| format!("g{}", i + 1), str::to_string);
        let map = g
            .get("map")
            .and_then(Value::as_object)
            .ok_or_else(|| doc_err(format!("generator {name} needs a \"map\" object")))?;
        let mut images: Vec<VertexId> = (0..complex.vertex_count() as VertexId).collect();
        for (from, to) in map {
            let from = VertexLabel::parse(from)?;
            let to = map_label(to)?;
            let a = complex.id_of(&from).ok_or_else(|| Error::UnknownLabel(from.clone()))?;
            let b = complex.id_of(&to).ok_or_else(|| Error::UnknownLabel(to.clone()))?;
            images[a as usize] = b;
        }
        let perm = VertexPermutation::new(images).ok_or_else(|| Error::NotBijective(name.clone()))?;
        generators.push((name, perm));
    }
    SimplicialAction::from_generators(complex, generators)
}

/// Every element of the group as a named vertex map (fixed points omitted).
pub fn action_to_json(act: &SimplicialAction) -> Value {
    let k = act.complex();
    let elements: Vec<Value> = act
        .elements()
        .iter()
        .zip(act.names())
        .map(|(g, name)| {
            let mut map = Map::new();
            for v in 0..k.vertex_count() as VertexId {
                let w = g.apply(v);
                if w != v {
                    map.insert(k.label(v).to_string(), Value::String(k.label(w).to_string()));
                }
            }
            json!({ "name": name, "map": map })
        })
        .collect();
    json!({ "generators": elements })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{tag}: {}", self.message)
    }
}

/// Schema and closure diagnostics for a complex document. An empty list
/// means the document is valid.
pub fn validate_complex_document(v: &Value) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let error = |out: &mut Vec<Diagnostic>, m: String| out.push(Diagnostic { severity: Severity::Error, message: m });
    let Some(obj) = v.as_object() else {
        error(&mut out, "complex document must be an object".into());
        return out;
    };
    for key in obj.keys() {
        if !matches!(key.as_str(), "vertices" | "facets" | "simplices") {
            out.push(Diagnostic { severity: Severity::Warning, message: format!("unknown key {key:?} ignored") });
        }
    }
    let Some(raw_vertices) = obj.get("vertices").and_then(Value::as_array) else {
        error(&mut out, "missing \"vertices\" array".into());
        return out;
    };
    let mut index: HashMap<VertexLabel, VertexId> = HashMap::new();
    for raw in raw_vertices {
        match label_from_json(raw) {
            Ok(l) => {
                if index.contains_key(&l) {
                    error(&mut out, format!("vertex {l} listed twice"));
                } else {
                    index.insert(l, index.len() as VertexId);
                }
            }
            Err(e) => error(&mut out, e.to_string()),
        }
    }
    let (key, extended) = match (obj.get("facets"), obj.get("simplices")) {
        (Some(_), Some(_)) => {
            error(&mut out, "give either \"facets\" or \"simplices\", not both".into());
            return out;
        }
        (_, Some(_)) => ("simplices", true),
        _ => ("facets", false),
    };
    let family = match obj.get(key) {
        None => return out,
        Some(Value::Array(items)) => items,
        Some(_) => {
            error(&mut out, format!("\"{key}\" must be an array"));
            return out;
        }
    };
    let mut listed: HashSet<Simplex> = HashSet::new();
    for (i, raw) in family.iter().enumerate() {
        let labels = match label_list(raw, "a simplex") {
            Ok(l) => l,
            Err(e) => {
                error(&mut out, format!("{key}[{i}]: {e}"));
                continue;
            }
        };
        let mut ids = Vec::with_capacity(labels.len());
        let mut ok = true;
        for l in &labels {
            match index.get(l) {
                Some(&id) => ids.push(id),
                None => {
                    error(&mut out, format!("{key}[{i}]: unknown vertex {l}"));
                    ok = false;
                }
            }
        }
        if !ok {
            continue;
        }
        match Simplex::new(ids) {
            Some(s) => {
                listed.insert(s);
            }
            None if labels.is_empty() => error(&mut out, format!("{key}[{i}]: empty simplex")),
            None => error(&mut out, format!("{key}[{i}]: repeated vertex")),
        }
    }
    if extended {
        let labels: Vec<&VertexLabel> = {
            let mut v: Vec<(&VertexLabel, &VertexId)> = index.iter().collect();
            v.sort_by_key(|e| *e.1);
            v.into_iter().map(|e| e.0).collect()
        };
        let mut missing: Vec<Simplex> = listed
            .iter()
            .flat_map(|s| s.faces())
            .filter(|f| f.len() > 1 && !listed.contains(f))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        missing.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        if !missing.is_empty() {
            let names: Vec<String> = missing
                .iter()
                .map(|s| {
                    let parts: Vec<String> = s.vertices().iter().map(|&v| labels[v as usize].to_string()).collect();
                    format!("<{}>", parts.join(" "))
                })
                .collect();
            out.push(Diagnostic {
                severity: Severity::Warning,
                message: format!("simplex list is not closed; missing faces: {}", names.join(", ")),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{barycentric_subdivision, conf_model};
    use crate::standard;

    #[test]
    fn reads_a_circle() {
        let doc = json!({"vertices": ["0", "1", "2"], "facets": [["0", "1"], ["0", "2"], ["1", "2"]]});
        let k = complex_from_json(&doc).unwrap();
        assert_eq!(k.f_vector(), [3, 3]);
        assert!(validate_complex_document(&doc).is_empty());
    }

    #[test]
    fn derived_labels_round_trip() {
        let k = barycentric_subdivision(&conf_model(&standard::boundary(2), 2).unwrap());
        let doc = complex_to_json(&k);
        let back = complex_from_json(&doc).unwrap();
        assert!(back.label_eq(&k));
        assert_eq!(back.vertex_labels(), k.vertex_labels());
        assert_eq!(complex_to_json(&back), doc);
    }

    #[test]
    fn unknown_vertex_is_named() {
        let doc = json!({"vertices": ["0", "1"], "facets": [["0", "7"]]});
        let diags = validate_complex_document(&doc);
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].severity, Severity::Error);
        assert!(diags[0].message.contains('7'));
    }

    #[test]
    fn extended_form_reports_missing_faces() {
        let doc = json!({"vertices": ["0", "1", "2"], "simplices": [["0"], ["1"], ["2"], ["0", "1", "2"], ["0", "1"]]});
        let diags = validate_complex_document(&doc);
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].severity, Severity::Warning);
        assert!(diags[0].message.contains("<0 2>") && diags[0].message.contains("<1 2>"));
    }

    #[test]
    fn action_document_completes_to_group() {
        let k = standard::boundary(2);
        let doc = json!({"generators": [{"name": "r", "map": {"0": "1", "1": "2", "2": "0"}}]});
        let act = action_from_json(k.clone(), &doc).unwrap();
        assert_eq!(act.order(), 3);
        let again = action_from_json(k, &action_to_json(&act)).unwrap();
        assert_eq!(again.order(), 3);
    }

    #[test]
    fn non_bijective_map_is_rejected() {
        let doc = json!({"generators": [{"map": {"0": "1"}}]});
        assert!(matches!(action_from_json(standard::boundary(2), &doc), Err(Error::NotBijective(_))));
    }
}
