//! Plain-text edge lists:
//!
//! ```text
//! # a 4-cycle
//! n 4
//! 1 2
//! 2 3
//! 3 4
//! 1 4
//! ```
//!
//! The `n` header is optional; without it the largest vertex mentioned
//! determines the vertex count.

use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

fn number(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a vertex number, found '{tok}'")))
}

impl Graph {
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut declared: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let toks: Vec<&str> = content.split_whitespace().collect();
            match toks.as_slice() {
                ["n", count] => {
                    if declared.is_some() || !edges.is_empty() {
                        return Err(Error::parse(line, "the 'n' header must come first and only once"));
                    }
                    declared = Some(number(count, line)?);
                }
                [u, v] => {
                    let (u, v) = (number(u, line)?, number(v, line)?);
                    if u == 0 || v == 0 {
                        return Err(Error::parse(line, "vertices are numbered from 1"));
                    }
                    if u == v {
                        return Err(Error::parse(line, format!("loop at vertex {u}")));
                    }
                    if let Some(n) = declared {
                        if u.max(v) > n {
                            return Err(Error::parse(line, format!("vertex {} exceeds n = {n}", u.max(v))));
                        }
                    }
                    edges.push((u, v));
                }
                _ => {
                    return Err(Error::parse(
                        line,
                        format!("expected 'u v' or 'n N', found '{content}'"),
                    ))
                }
            }
        }
        let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0));
        Graph::from_edges(n, edges)
    }

    /// Inverse of [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse_edge_list(s)
    }
}
