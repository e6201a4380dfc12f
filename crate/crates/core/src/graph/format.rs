//! graph6, edge-list JSON and DOT serialisation.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// `{"n": int, "edges": [[u,v],...]}` with `u < v`, edges sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<Graph> for EdgeListJson {
    fn from(g: Graph) -> Self {
        EdgeListJson::from(&g)
    }
}

impl From<&Graph> for EdgeListJson {
    fn from(g: &Graph) -> Self {
        EdgeListJson {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<EdgeListJson> for Graph {
    type Error = Error;

    fn try_from(j: EdgeListJson) -> Result<Graph> {
        Graph::new(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&EdgeListJson::from(g)).expect("edge list serialises")
}

pub fn from_json(s: &str) -> Result<Graph> {
    let j: EdgeListJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Graph::try_from(j)
}

const BIAS: u8 = 63;

/// Encodes `g` in graph6 with vertices in id order (no `>>graph6<<` header).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + BIAS);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse("graph6 byte outside 63..=126".into()));
    }
    let six = |b: u8| (b - BIAS) as usize;
    let (n, body) = match bytes {
        [] => return Err(Error::Parse("empty graph6 string".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => {
            (rest[..6].iter().fold(0, |a, &b| (a << 6) | six(b)), &rest[6..])
        }
        [126, rest @ ..] if rest.len() >= 3 => {
            (rest[..3].iter().fold(0, |a, &b| (a << 6) | six(b)), &rest[3..])
        }
        [126, ..] => return Err(Error::Parse("truncated graph6 size field".into())),
        [first, rest @ ..] => (six(*first), rest),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {} for n = {n}",
            body.len(),
            nbits.div_ceil(6)
        )));
    }
    let bit = |k: usize| (six(body[k / 6]) >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Plain undirected DOT; `comments` are emitted as `//` lines after the header.
pub fn to_dot(g: &Graph, name: &str, comments: &[String]) -> String {
    let mut s = format!("graph \"{name}\" {{\n");
    for c in comments {
        let _ = writeln!(s, "  // {c}");
    }
    for v in 0..g.n() {
        let _ = writeln!(s, "  {v};");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}
