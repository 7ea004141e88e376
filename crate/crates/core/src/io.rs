//! Plain-text file formats.
//!
//! * Edge lists: one `u v` pair per line, 0-based ids, `#` starts a
//!   comment. The first non-comment line may be `n=<count>`; otherwise `n`
//!   is one more than the largest id.
//! * Labels: one `node ±1` pair per line.
//! * Query sets: one picked node per line, then `# forks: f1 f2 ...`.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::select::QuerySet;
use crate::{Label, Labeling, NodeSet, Tree};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn strip_comment(s: &str) -> &str {
    s.split('#').next().unwrap_or("").trim()
}

fn parse_id(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("`{tok}` is not a node id")))
}

/// Parses an edge list into `(n, edges)`.
pub fn parse_edge_list(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut first = true;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = strip_comment(raw);
        if s.is_empty() {
            continue;
        }
        if first {
            first = false;
            if let Some(rest) = s.strip_prefix("n=") {
                let n = rest
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad node count `{rest}`")))?;
                declared = Some(n);
                continue;
            }
        }
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(line, "expected `u v`"));
        }
        edges.push((parse_id(toks[0], line)?, parse_id(toks[1], line)?));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(1));
    Ok((n, edges))
}

pub fn parse_tree(text: &str) -> Result<Tree> {
    let (n, edges) = parse_edge_list(text)?;
    Tree::new(n, edges)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (n, edges) = parse_edge_list(text)?;
    Graph::new(n, edges)
}

pub fn read_tree(path: impl AsRef<Path>) -> Result<Tree> {
    parse_tree(&fs::read_to_string(path)?)
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&fs::read_to_string(path)?)
}

/// Edge list with an `n=` header.
pub fn write_edge_list(n: usize, edges: &[(usize, usize)]) -> String {
    let mut out = format!("n={n}\n");
    for &(u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses `node ±1` lines into a labeling over `n` nodes. Nodes not listed
/// stay unknown.
pub fn parse_labels(text: &str, n: usize) -> Result<Labeling> {
    let mut y = Labeling::unknown(n);
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = strip_comment(raw);
        if s.is_empty() {
            continue;
        }
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(line, "expected `node label`"));
        }
        let v = parse_id(toks[0], line)?;
        let label = match toks[1] {
            "+1" | "1" => Label::Pos,
            "-1" => Label::Neg,
            other => return Err(parse_err(line, format!("label `{other}` is not +1 or -1"))),
        };
        if v >= n {
            return Err(Error::BadNodeId { node: v, n });
        }
        if y.get(v).is_some() {
            return Err(Error::DuplicateNode(v));
        }
        y.set(v, label);
    }
    Ok(y)
}

pub fn read_labels(path: impl AsRef<Path>, n: usize) -> Result<Labeling> {
    parse_labels(&fs::read_to_string(path)?, n)
}

/// `node label` lines for every labeled node.
pub fn write_labels(y: &Labeling) -> String {
    let mut out = String::new();
    for v in 0..y.len() {
        if let Some(l) = y.get(v) {
            out.push_str(&format!("{v} {l}\n"));
        }
    }
    out
}

pub fn write_query_set(q: &QuerySet) -> String {
    let mut out = String::new();
    for v in q.picks() {
        out.push_str(&format!("{v}\n"));
    }
    out.push_str("# forks:");
    for f in q.forks() {
        out.push_str(&format!(" {f}"));
    }
    out.push('\n');
    out
}

/// Parses a query-set file into `(picks, forks)`.
pub fn parse_query_set(text: &str, n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut picks = Vec::new();
    let mut forks = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if let Some(rest) = trimmed.strip_prefix('#') {
            if let Some(list) = rest.trim().strip_prefix("forks:") {
                for tok in list.split_whitespace() {
                    forks.push(parse_id(tok, line)?);
                }
            }
            continue;
        }
        let s = strip_comment(raw);
        if s.is_empty() {
            continue;
        }
        picks.push(parse_id(s, line)?);
    }
    for &v in picks.iter().chain(&forks) {
        if v >= n {
            return Err(Error::BadNodeId { node: v, n });
        }
    }
    Ok((picks, forks))
}

/// `L+` read from a query-set file: picks together with forks.
pub fn read_closure(path: impl AsRef<Path>, n: usize) -> Result<NodeSet> {
    let (picks, forks) = parse_query_set(&fs::read_to_string(path)?, n)?;
    let mut set = NodeSet::empty(n);
    for v in picks {
        if set.contains(v) {
            return Err(Error::DuplicateNode(v));
        }
        set.insert(v);
    }
    for v in forks {
        set.insert(v);
    }
    Ok(set)
}
