//! Text and JSON file formats.
//!
//! Trees are read either from the plain format
//!
//! ```text
//! 3
//! 0 1
//! 1 2
//! # 1 hub
//! ```
//!
//! (vertex count, one edge per line, `# id name` comments naming vertices)
//! or from JSON `{"n": 3, "edges": [[0, 1], [1, 2]], "labels": {"1": "hub"}}`.
//! JSON output goes through `serde_json::Map`, whose keys are sorted, so
//! every writer here is deterministic.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::layout::{GridLayout, Point};
use crate::smodel::{ModelError, SModel, Slot};
use crate::tree::{BuildSequence, Tree, TreeError};
use crate::vptepg::{EpgModel, VptError, VptModel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Vpt(#[from] VptError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn json_err(message: impl Into<String>) -> FormatError {
    FormatError::Json(message.into())
}

/// Reads a tree in either format.
pub fn parse_tree(text: &str) -> Result<Tree, FormatError> {
    if text.trim_start().starts_with('{') {
        let value: Value = serde_json::from_str(text).map_err(|e| json_err(e.to_string()))?;
        tree_from_json(&value)
    } else {
        parse_tree_text(text)
    }
}

fn parse_tree_text(text: &str) -> Result<Tree, FormatError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut labels = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut parts = comment.trim().splitn(2, char::is_whitespace);
            if let (Some(id), Some(name)) = (parts.next(), parts.next()) {
                if let Ok(id) = id.parse::<usize>() {
                    labels.insert(id, name.trim().to_string());
                }
            }
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| syntax(line_no, format!("not a vertex id: {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        match (n, nums.as_slice()) {
            (None, [count]) => n = Some(*count),
            (None, _) => return Err(syntax(line_no, "expected the vertex count")),
            (Some(_), [u, v]) => edges.push((*u, *v)),
            (Some(_), _) => return Err(syntax(line_no, "expected an edge `u v`")),
        }
    }
    let n = n.ok_or_else(|| syntax(1, "missing vertex count"))?;
    if let Some((&id, _)) = labels.iter().find(|(&id, _)| id >= n) {
        return Err(syntax(0, format!("label for unknown vertex {id}")));
    }
    Ok(Tree::from_edges(n, &edges)?.with_labels(labels))
}

/// Plain text form of `tree`, labels as trailing comments.
pub fn write_tree_text(tree: &Tree) -> String {
    let mut out = format!("{}\n", tree.len());
    for (u, v) in tree.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    for (id, name) in tree.labels() {
        out.push_str(&format!("# {id} {name}\n"));
    }
    out
}

pub fn tree_to_json(tree: &Tree) -> Value {
    let labels: Map<String, Value> = tree
        .labels()
        .iter()
        .map(|(id, name)| (id.to_string(), Value::from(name.as_str())))
        .collect();
    json!({
        "n": tree.len(),
        "edges": tree.edges().into_iter().map(|(u, v)| json!([u, v])).collect::<Vec<_>>(),
        "labels": labels,
    })
}

fn as_usize(v: &Value, what: &str) -> Result<usize, FormatError> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| json_err(format!("{what} must be a non-negative integer")))
}

fn as_i64(v: &Value, what: &str) -> Result<i64, FormatError> {
    v.as_i64()
        .ok_or_else(|| json_err(format!("{what} must be an integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, FormatError> {
    v.as_array()
        .ok_or_else(|| json_err(format!("{what} must be an array")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, FormatError> {
    v.get(key)
        .ok_or_else(|| json_err(format!("missing field {key:?}")))
}

pub fn tree_from_json(value: &Value) -> Result<Tree, FormatError> {
    let n = as_usize(field(value, "n")?, "n")?;
    let mut edges = Vec::new();
    for e in as_array(field(value, "edges")?, "edges")? {
        match as_array(e, "edge")?.as_slice() {
            [u, v] => edges.push((as_usize(u, "vertex")?, as_usize(v, "vertex")?)),
            _ => return Err(json_err("edge must be a pair")),
        }
    }
    let mut labels = BTreeMap::new();
    if let Some(map) = value.get("labels") {
        let map = map
            .as_object()
            .ok_or_else(|| json_err("labels must be an object"))?;
        for (id, name) in map {
            let id: usize = id
                .parse()
                .map_err(|_| json_err(format!("bad label key {id:?}")))?;
            if id >= n {
                return Err(json_err(format!("label for unknown vertex {id}")));
            }
            let name = name
                .as_str()
                .ok_or_else(|| json_err("label must be a string"))?;
            labels.insert(id, name.to_string());
        }
    }
    Ok(Tree::from_edges(n, &edges)?.with_labels(labels))
}

fn slot_key(v: usize, u: usize) -> String {
    format!("{v},({},{})", v.min(u), v.max(u))
}

pub fn model_to_json(model: &SModel) -> Value {
    let tree = model.tree();
    let mut slots = Map::new();
    for v in 0..tree.len() {
        for &u in tree.neighbors(v) {
            slots.insert(slot_key(v, u), Value::from(model.slot(v, u).as_str()));
        }
    }
    json!({ "tree": tree_to_json(tree), "slots": slots })
}

pub fn model_from_json(value: &Value) -> Result<SModel, FormatError> {
    let tree = tree_from_json(field(value, "tree")?)?;
    let map = field(value, "slots")?
        .as_object()
        .ok_or_else(|| json_err("slots must be an object"))?;
    let mut slots = Vec::with_capacity(tree.len());
    for v in 0..tree.len() {
        let mut local = Vec::with_capacity(tree.degree(v));
        for &u in tree.neighbors(v) {
            let key = slot_key(v, u);
            let s = map
                .get(&key)
                .and_then(Value::as_str)
                .ok_or_else(|| json_err(format!("missing slot {key:?}")))?;
            local.push(Slot::parse(s).ok_or_else(|| json_err(format!("bad slot {s:?}")))?);
        }
        slots.push(local);
    }
    if map.len() != 2 * tree.len().saturating_sub(1) {
        return Err(json_err("slots name a pair that is not a tree edge"));
    }
    Ok(SModel::new(tree, slots)?)
}

pub fn layout_to_json(layout: &GridLayout) -> Value {
    let coords: Map<String, Value> = layout
        .coords()
        .iter()
        .enumerate()
        .map(|(v, p)| (v.to_string(), json!([p.x, p.y])))
        .collect();
    json!({ "coords": coords })
}

fn point_from_json(v: &Value) -> Result<Point, FormatError> {
    match as_array(v, "point")?.as_slice() {
        [x, y] => Ok(Point::new(as_i64(x, "x")?, as_i64(y, "y")?)),
        _ => Err(json_err("point must be [x, y]")),
    }
}

pub fn layout_from_json(value: &Value) -> Result<GridLayout, FormatError> {
    let map = field(value, "coords")?
        .as_object()
        .ok_or_else(|| json_err("coords must be an object"))?;
    let mut coords = vec![None; map.len()];
    for (key, p) in map {
        let v: usize = key
            .parse()
            .map_err(|_| json_err(format!("bad vertex key {key:?}")))?;
        let slot = coords
            .get_mut(v)
            .ok_or_else(|| json_err(format!("vertex {v} out of range")))?;
        *slot = Some(point_from_json(p)?);
    }
    Ok(GridLayout::new(
        coords
            .into_iter()
            .map(|p| p.expect("keys are distinct and in range"))
            .collect(),
    ))
}

pub fn vpt_to_json(model: &VptModel) -> Value {
    json!({ "host": tree_to_json(model.host()), "paths": model.paths() })
}

pub fn vpt_from_json(value: &Value) -> Result<VptModel, FormatError> {
    let host = tree_from_json(field(value, "host")?)?;
    let mut paths = Vec::new();
    for p in as_array(field(value, "paths")?, "paths")? {
        let path = as_array(p, "path")?
            .iter()
            .map(|v| as_usize(v, "vertex"))
            .collect::<Result<Vec<_>, _>>()?;
        paths.push(path);
    }
    Ok(VptModel::new(host, paths)?)
}

pub fn epg_to_json(model: &EpgModel) -> Value {
    let paths: Vec<Value> = model
        .paths()
        .iter()
        .map(|p| Value::from(p.iter().map(|q| json!([q.x, q.y])).collect::<Vec<_>>()))
        .collect();
    json!({ "paths": paths })
}

pub fn epg_from_json(value: &Value) -> Result<EpgModel, FormatError> {
    let mut paths = Vec::new();
    for p in as_array(field(value, "paths")?, "paths")? {
        paths.push(
            as_array(p, "path")?
                .iter()
                .map(point_from_json)
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(EpgModel::new(paths)?)
}

/// Parses JSON text, mapping syntax errors to [`FormatError::Json`].
pub fn parse_json(text: &str) -> Result<Value, FormatError> {
    serde_json::from_str(text).map_err(|e| json_err(e.to_string()))
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values built here always serialize");
    s.push('\n');
    s
}

/// Build-sequence file: the root alone on the first line, then `v p` per line.
pub fn parse_build_sequence(text: &str) -> Result<BuildSequence, FormatError> {
    let mut steps = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| syntax(i + 1, format!("not a vertex id: {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        match nums.as_slice() {
            [v] => steps.push((*v, None)),
            [v, p] => steps.push((*v, Some(*p))),
            _ => return Err(syntax(i + 1, "expected `v` or `v p`")),
        }
    }
    Ok(BuildSequence::new(steps)?)
}

pub fn write_build_sequence(seq: &BuildSequence) -> String {
    seq.steps()
        .iter()
        .map(|&(v, p)| match p {
            Some(p) => format!("{v} {p}\n"),
            None => format!("{v}\n"),
        })
        .collect()
}
