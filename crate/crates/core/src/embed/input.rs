//! Graph input: `n m` edge lists and a small subset of DOT.

use std::collections::HashMap;

use crate::graph::SimpleGraph;

use super::EmbedError;

/// A parsed input graph; `names` holds DOT node names in first-seen order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: SimpleGraph,
    pub names: Option<Vec<String>>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> EmbedError {
    EmbedError::Parse { line, msg: msg.into() }
}

/// `n m` on the first line, then `m` lines `u v` with 0-based vertex ids.
/// Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<ParsedGraph, EmbedError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let nums = |line: usize, l: &str| -> Result<(usize, usize), EmbedError> {
        let mut it = l.split_whitespace().map(|t| t.parse::<usize>());
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(parse_err(line, format!("expected two non-negative integers, got {l:?}"))),
        }
    };
    let (line, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let (n, m) = nums(line, header)?;
    let mut g = SimpleGraph::new(n);
    let mut seen = 0;
    for (line, l) in lines {
        let (u, v) = nums(line, l)?;
        if u >= n || v >= n {
            return Err(parse_err(line, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_err(line, "self-loop"));
        }
        if g.has_edge(u, v) {
            return Err(parse_err(line, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(1, format!("header promises {m} edges, found {seen}")));
    }
    Ok(ParsedGraph { graph: g, names: None })
}

/// Undirected DOT: `graph [name] { a; b -- c -- d; e -- f [attr=..]; }`.
/// Attributes and `graph`/`node`/`edge` defaults are skipped.
pub fn parse_dot(text: &str) -> Result<ParsedGraph, EmbedError> {
    let open = text.find('{').ok_or_else(|| parse_err(1, "missing `{`"))?;
    let close = text.rfind('}').ok_or_else(|| parse_err(1, "missing `}`"))?;
    let head = text[..open].trim();
    let line_of = |pos: usize| text[..pos].matches('\n').count() + 1;
    let mut head_words = head.split_whitespace();
    match head_words.next() {
        Some(w) if w.eq_ignore_ascii_case("strict") && head_words.next().is_some_and(|w| w == "graph") => {}
        Some("graph") => {}
        _ => return Err(parse_err(1, "expected an undirected `graph`")),
    }

    let mut index: HashMap<String, usize> = HashMap::new();
    let mut names: Vec<String> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut id = |name: &str| -> usize {
        *index.entry(name.to_owned()).or_insert_with(|| {
            names.push(name.to_owned());
            names.len() - 1
        })
    };

    let body = &text[open + 1..close];
    let mut offset = open + 1;
    for raw in body.split([';', '\n']) {
        let here = offset;
        offset += raw.len() + 1;
        // drop attribute lists and comments
        let mut stmt = String::new();
        let mut depth = 0;
        for c in raw.split("//").next().unwrap_or("").chars() {
            match c {
                '[' => depth += 1,
                ']' => depth -= 1,
                _ if depth == 0 => stmt.push(c),
                _ => {}
            }
        }
        let stmt = stmt.trim();
        if stmt.is_empty() || stmt.contains('=') && !stmt.contains("--") {
            continue;
        }
        if stmt.contains("->") {
            return Err(parse_err(line_of(here), "directed edge in an undirected graph"));
        }
        let first = stmt.split_whitespace().next().unwrap_or("");
        if matches!(first, "graph" | "node" | "edge") {
            continue;
        }
        let parts: Vec<&str> = stmt.split("--").map(|p| p.trim().trim_matches('"')).collect();
        if parts.iter().any(|p| p.is_empty() || p.contains(char::is_whitespace)) {
            return Err(parse_err(line_of(here), format!("cannot parse statement {stmt:?}")));
        }
        let ids: Vec<usize> = parts.iter().map(|p| id(p)).collect();
        for w in ids.windows(2) {
            if w[0] == w[1] {
                return Err(parse_err(line_of(here), "self-loop"));
            }
            edges.push((w[0], w[1]));
        }
    }
    let graph = SimpleGraph::from_edges(names.len(), edges);
    Ok(ParsedGraph { graph, names: Some(names) })
}
