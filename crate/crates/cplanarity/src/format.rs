//! Line-based instance files.
//!
//! ```text
//! # comment
//! vertices 1 2 3 4
//! edge 1 1 2
//! edge 2 2 3
//! tree (root (A 1 2) (B 3) 4)
//! rot 1 : 1:a 2:b
//! rot 2 : 2:a 1:b
//! place 1:a outer
//! place vertex 4 in 2:b
//! ```
//!
//! `vertices` and `tree` are mandatory. The tree is an s-expression whose
//! parenthesized entries are named clusters and whose bare numbers are
//! vertices; it may span several lines until its parentheses balance. An
//! instance with any `rot` or `place` line is an embedded plane map (every
//! non-isolated vertex then needs its clockwise dart order, and every
//! component and isolated vertex a `place` line); otherwise it is abstract.
//! In `rot` lines a dart may be written as a bare edge number when the side
//! is implied by the vertex; loops always need the `:a`/`:b` suffix.

use crate::graph::{ClusterTree, ClusteredGraph, EdgeId, NodeId, VertexId, ROOT};
use crate::map::{Dart, Host, Item, Placement, PlaneMap};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    /// 1-based; 0 when the problem concerns the file as a whole.
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.msg)
        } else {
            write!(f, "line {}: {}", self.line, self.msg)
        }
    }
}

impl std::error::Error for FormatError {}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError {
        line,
        msg: msg.into(),
    })
}

#[derive(Debug, Clone)]
pub enum Instance {
    Abstract(ClusteredGraph),
    Embedded(PlaneMap),
}

impl Instance {
    pub fn graph(&self) -> &ClusteredGraph {
        match self {
            Instance::Abstract(g) => g,
            Instance::Embedded(m) => m.graph(),
        }
    }
}

fn parse_u32(line: usize, tok: &str, what: &str) -> Result<u32, FormatError> {
    tok.parse::<u32>()
        .map_err(|_| FormatError {
            line,
            msg: format!("expected {what}, got `{tok}`"),
        })
}

/// `7:a`, `7:b`, or (when `at` is given and edge 7 is not a loop) plain `7`.
fn parse_dart(
    line: usize,
    tok: &str,
    edges: &BTreeMap<EdgeId, (VertexId, VertexId)>,
    at: Option<VertexId>,
) -> Result<Dart, FormatError> {
    let (num, side) = match tok.split_once(':') {
        Some((n, "a")) => (n, Some(0u8)),
        Some((n, "b")) => (n, Some(1u8)),
        Some((_, s)) => {
            return err(line, format!("dart side must be `a` or `b`, got `{s}`"));
        }
        None => (tok, None),
    };
    let e = EdgeId(parse_u32(line, num, "an edge number")?);
    let Some(&(u, v)) = edges.get(&e) else {
        return err(line, format!("unknown edge {}", e.0));
    };
    match side {
        Some(s) => Ok(Dart::new(e, s)),
        None => {
            if u == v {
                return err(line, format!("edge {} is a loop, write {}:a or {}:b", e.0, e.0, e.0));
            }
            match at {
                Some(w) if w == u => Ok(Dart::new(e, 0)),
                Some(w) if w == v => Ok(Dart::new(e, 1)),
                Some(w) => err(line, format!("edge {} does not touch vertex {}", e.0, w)),
                None => err(line, format!("write edge {} as {}:a or {}:b here", e.0, e.0, e.0)),
            }
        }
    }
}

fn tree_tokens(text: &str) -> Vec<String> {
    text.replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(str::to_string)
        .collect()
}

fn parse_tree(line: usize, tokens: &[String]) -> Result<ClusterTree, FormatError> {
    let mut pos = 0usize;
    fn expect(
        line: usize,
        tokens: &[String],
        pos: &mut usize,
        want: &str,
    ) -> Result<(), FormatError> {
        if tokens.get(*pos).map(String::as_str) == Some(want) {
            *pos += 1;
            Ok(())
        } else {
            err(
                line,
                format!(
                    "expected `{want}` in tree, got `{}`",
                    tokens.get(*pos).map_or("end of input", |t| t.as_str())
                ),
            )
        }
    }
    fn children(
        line: usize,
        tokens: &[String],
        pos: &mut usize,
        tree: &mut ClusterTree,
        parent: NodeId,
    ) -> Result<(), FormatError> {
        loop {
            match tokens.get(*pos).map(String::as_str) {
                Some(")") => {
                    *pos += 1;
                    return Ok(());
                }
                Some("(") => {
                    *pos += 1;
                    let Some(name) = tokens.get(*pos) else {
                        return err(line, "tree ends inside a cluster");
                    };
                    if name == "(" || name == ")" || name.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                        return err(line, format!("cluster name must not start with a digit, got `{name}`"));
                    }
                    let name = name.clone();
                    *pos += 1;
                    let node = tree.add_cluster(parent, name);
                    children(line, tokens, pos, tree, node)?;
                }
                Some(tok) => {
                    let v = parse_u32(line, tok, "a vertex number")?;
                    tree.add_leaf(parent, VertexId(v));
                    *pos += 1;
                }
                None => return err(line, "unbalanced parentheses in tree"),
            }
        }
    }
    expect(line, tokens, &mut pos, "(")?;
    let Some(root_name) = tokens.get(pos) else {
        return err(line, "tree is empty");
    };
    if root_name == "(" || root_name == ")" {
        return err(line, "tree must start with a root name");
    }
    let mut tree = ClusterTree::new(root_name.clone());
    pos += 1;
    children(line, tokens, &mut pos, &mut tree, ROOT)?;
    if pos != tokens.len() {
        return err(line, "trailing tokens after the tree");
    }
    Ok(tree)
}

pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    let mut vertices: Option<(usize, Vec<VertexId>)> = None;
    let mut edges: BTreeMap<EdgeId, (VertexId, VertexId)> = BTreeMap::new();
    let mut edge_order: Vec<EdgeId> = Vec::new();
    let mut tree: Option<ClusterTree> = None;
    let mut rot_lines: Vec<(usize, Vec<String>)> = Vec::new();
    let mut place_lines: Vec<(usize, Vec<String>)> = Vec::new();

    let mut lines = text.lines().enumerate().peekable();
    while let Some((i, raw)) = lines.next() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut toks: Vec<String> = content.split_whitespace().map(str::to_string).collect();
        if toks.is_empty() {
            continue;
        }
        let head = toks.remove(0);
        match head.as_str() {
            "vertices" => {
                if vertices.is_some() {
                    return err(line, "second `vertices` line");
                }
                let mut vs = Vec::new();
                for t in &toks {
                    vs.push(VertexId(parse_u32(line, t, "a vertex number")?));
                }
                vertices = Some((line, vs));
            }
            "edge" => {
                if toks.len() != 3 {
                    return err(line, "edge lines read `edge <id> <u> <v>`");
                }
                let e = EdgeId(parse_u32(line, &toks[0], "an edge number")?);
                let u = VertexId(parse_u32(line, &toks[1], "a vertex number")?);
                let v = VertexId(parse_u32(line, &toks[2], "a vertex number")?);
                if edges.insert(e, (u, v)).is_some() {
                    return err(line, format!("edge {} declared twice", e.0));
                }
                edge_order.push(e);
            }
            "tree" => {
                if tree.is_some() {
                    return err(line, "second `tree` line");
                }
                let mut body = toks.join(" ");
                let balance = |s: &str| {
                    s.chars().fold(0i64, |acc, c| match c {
                        '(' => acc + 1,
                        ')' => acc - 1,
                        _ => acc,
                    })
                };
                while balance(&body) > 0 {
                    let Some((_, extra)) = lines.next() else {
                        return err(line, "unbalanced parentheses in tree");
                    };
                    body.push(' ');
                    body.push_str(extra.split('#').next().unwrap_or(""));
                }
                tree = Some(parse_tree(line, &tree_tokens(&body))?);
            }
            "rot" => rot_lines.push((line, toks)),
            "place" => place_lines.push((line, toks)),
            other => {
                return err(line, format!("unknown directive `{other}`"));
            }
        }
    }

    let Some((vline, vs)) = vertices else {
        return err(0, "missing `vertices` line");
    };
    {
        let set: BTreeSet<_> = vs.iter().collect();
        if set.len() != vs.len() {
            return err(vline, "duplicate vertex");
        }
    }
    let Some(tree) = tree else {
        return err(0, "missing `tree` line");
    };
    let g = ClusteredGraph::new(
        vs.iter().copied(),
        edge_order.iter().map(|&e| {
            let (u, v) = edges[&e];
            (e, u, v)
        }),
        tree,
    );

    if rot_lines.is_empty() && place_lines.is_empty() {
        return Ok(Instance::Abstract(g));
    }

    let mut rot: BTreeMap<VertexId, Vec<Dart>> = vs.iter().map(|&v| (v, Vec::new())).collect();
    let mut seen_rot: BTreeSet<VertexId> = BTreeSet::new();
    for (line, toks) in rot_lines {
        if toks.len() < 2 || toks[1] != ":" {
            return err(line, "rot lines read `rot <v> : <dart>...`");
        }
        let v = VertexId(parse_u32(line, &toks[0], "a vertex number")?);
        if !rot.contains_key(&v) {
            return err(line, format!("rot for undeclared vertex {v}"));
        }
        if !seen_rot.insert(v) {
            return err(line, format!("second rot line for vertex {v}"));
        }
        let mut darts = Vec::new();
        for t in &toks[2..] {
            darts.push(parse_dart(line, t, &edges, Some(v))?);
        }
        rot.insert(v, darts);
    }

    let mut placements = Vec::new();
    for (line, toks) in place_lines {
        let (item, rest) = match toks.first().map(String::as_str) {
            Some("vertex") => {
                let Some(vt) = toks.get(1) else {
                    return err(line, "place lines read `place vertex <v> ...`");
                };
                let v = VertexId(parse_u32(line, vt, "a vertex number")?);
                (Item::Float(v), &toks[2..])
            }
            Some(_) => {
                let d = parse_dart(line, &toks[0], &edges, None)?;
                (Item::Component(d), &toks[1..])
            }
            None => return err(line, "empty place line"),
        };
        let host = match rest.first().map(String::as_str) {
            Some("outer") => {
                if rest.len() != 1 {
                    return err(line, "trailing tokens after `outer`");
                }
                Host::Unbounded
            }
            Some("in") => {
                let Some(dt) = rest.get(1) else {
                    return err(line, "`in` needs a dart");
                };
                if rest.len() != 2 {
                    return err(line, "trailing tokens after the host dart");
                }
                Host::In(parse_dart(line, dt, &edges, None)?)
            }
            _ => return err(line, "place lines end with `outer` or `in <dart>`"),
        };
        placements.push(Placement { item, host });
    }

    match PlaneMap::new(g, rot, placements) {
        Ok(m) => Ok(Instance::Embedded(m)),
        Err(e) => err(0, format!("instance does not form a plane map: {e}")),
    }
}

fn write_tree(out: &mut String, tree: &ClusterTree, n: NodeId) {
    if let Some(v) = tree.vertex_of(n) {
        out.push_str(&v.0.to_string());
        return;
    }
    out.push('(');
    out.push_str(tree.name_of(n).expect("cluster node"));
    for &c in tree.children(n) {
        out.push(' ');
        write_tree(out, tree, c);
    }
    out.push(')');
}

pub fn serialize_graph(g: &ClusteredGraph) -> String {
    let mut out = String::new();
    out.push_str("vertices");
    for v in g.vertices() {
        out.push_str(&format!(" {}", v.0));
    }
    out.push('\n');
    for (e, u, v) in g.edges() {
        out.push_str(&format!("edge {} {} {}\n", e.0, u.0, v.0));
    }
    out.push_str("tree ");
    write_tree(&mut out, g.tree(), ROOT);
    out.push('\n');
    out
}

pub fn serialize_map(m: &PlaneMap) -> String {
    let mut out = serialize_graph(m.graph());
    for v in m.graph().vertices() {
        let darts = m.rotation(v);
        if darts.is_empty() {
            continue;
        }
        out.push_str(&format!("rot {} :", v.0));
        for &d in darts {
            out.push_str(&format!(" {d}"));
        }
        out.push('\n');
    }
    let mut places: Vec<&Placement> = m.placements().iter().collect();
    places.sort_by_key(|p| match p.item {
        Item::Component(d) => (0u8, d, VertexId(0)),
        Item::Float(v) => (1u8, Dart::new(EdgeId(0), 0), v),
    });
    for p in places {
        match p.item {
            Item::Component(d) => out.push_str(&format!("place {d}")),
            Item::Float(v) => out.push_str(&format!("place vertex {}", v.0)),
        }
        match p.host {
            Host::Unbounded => out.push_str(" outer\n"),
            Host::In(d) => out.push_str(&format!(" in {d}\n")),
        }
    }
    out
}

pub fn serialize_instance(i: &Instance) -> String {
    match i {
        Instance::Abstract(g) => serialize_graph(g),
        Instance::Embedded(m) => serialize_map(m),
    }
}
