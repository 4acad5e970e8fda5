//! Graph serialization: edge-list text, JSON and graph6.
//!
//! * edge list: first line `n m`, then `m` lines `u v` with `u < v`;
//! * JSON: `{"order": n, "edges": [[u, v], ...]}`;
//! * graph6: the printable-ASCII format of nauty's `geng`/`showg`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::{Error, Graph, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Json,
    Graph6,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edge-list" | "txt" => Ok(Format::EdgeList),
            "json" => Ok(Format::Json),
            "graph6" | "g6" => Ok(Format::Graph6),
            other => Err(Error::parse(format!("unknown graph format {other:?}"))),
        }
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => to_edge_list(g),
        Format::Json => to_json(g),
        Format::Graph6 => to_graph6(g),
    }
}

pub fn read_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => from_edge_list(text),
        Format::Json => from_json(text),
        Format::Graph6 => from_graph6(text),
    }
}

/// Guesses the format: `{…:…` → JSON, a leading line of two integers → edge
/// list, anything else → graph6. (`{` alone also opens graph6 for n = 60, but
/// `:` never occurs in graph6.)
pub fn detect_format(text: &str) -> Format {
    let t = text.trim_start();
    if t.starts_with('{') && t.contains(':') {
        return Format::Json;
    }
    let first = t.lines().next().unwrap_or("");
    let mut fields = first.split_whitespace();
    let is_num = |s: Option<&str>| s.is_some_and(|s| s.parse::<usize>().is_ok());
    if is_num(fields.next()) && is_num(fields.next()) && fields.next().is_none() {
        Format::EdgeList
    } else {
        Format::Graph6
    }
}

pub fn read_graph_auto(text: &str) -> Result<Graph> {
    read_graph(text, detect_format(text))
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::parse("empty edge list"))?;
    let (n, m) = parse_pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Error::parse(format!("expected {m} edges, found {}", edges.len())))?;
        edges.push(parse_pair(line)?);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::parse(format!("trailing data after {m} edges: {extra:?}")));
    }
    let g = Graph::from_edges(n, &edges).map_err(|e| Error::parse(e.to_string()))?;
    if g.edge_count() != m {
        return Err(Error::parse("duplicate edges in edge list"));
    }
    Ok(g)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::parse(format!("expected two integers, got {line:?}"))),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub(crate) struct GraphJson {
    pub order: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            order: g.order(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl GraphJson {
    pub(crate) fn into_graph(self) -> Result<Graph> {
        let edges: Vec<_> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(self.order, &edges).map_err(|e| Error::parse(e.to_string()))
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        GraphJson::deserialize(d)?
            .into_graph()
            .map_err(serde::de::Error::custom)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graph serialization cannot fail")
}

pub fn from_json(text: &str) -> Result<Graph> {
    serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))
}

/// Encodes `g` in graph6.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

fn encode_size(n: usize, out: &mut String) {
    let push6 = |out: &mut String, v: usize, groups: u32| {
        for k in (0..groups).rev() {
            out.push((((v >> (6 * k)) & 63) as u8 + 63) as char);
        }
    };
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        push6(out, n, 3);
    } else {
        out.push_str("~~");
        push6(out, n, 6);
    }
}

/// Decodes one graph6 line (an optional `>>graph6<<` header is skipped).
pub fn from_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(format!("invalid graph6 byte {b:#x}")));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = match bytes {
        [] => return Err(Error::parse("empty graph6 string")),
        [126, 126, rest @ ..] if rest.len() >= 6 => {
            (rest[..6].iter().fold(0, |a, &b| (a << 6) | six(b)), &rest[6..])
        }
        [126, rest @ ..] if rest.len() >= 3 => {
            (rest[..3].iter().fold(0, |a, &b| (a << 6) | six(b)), &rest[3..])
        }
        [126, ..] => return Err(Error::parse("truncated graph6 size field")),
        [first, rest @ ..] => (six(*first), rest),
    };
    if n == 0 {
        return Err(Error::parse("graph6 graph with zero vertices"));
    }
    let nbits = n * (n - 1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(Error::parse(format!(
            "graph6 body has {} bytes, expected {} for n = {n}",
            body.len(),
            nbits.div_ceil(6)
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (six(body[k / 6]) >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
