//! Line-based poset files and Graphviz output.
//!
//! ```text
//! # 3+1
//! poset 4
//! 0 < 1
//! 1 < 2
//! ```
//!
//! Relations are closed transitively on load.

use crate::poset::{FinitePoset, PosetError};
use std::fmt::Write;

fn err(line: usize, msg: impl Into<String>) -> PosetError {
    PosetError::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_poset(text: &str) -> Result<FinitePoset, PosetError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let (no, head) = lines
        .next()
        .ok_or_else(|| err(1, "empty input, expected `poset <n>`"))?;
    let n = match head.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["poset", n] => n
            .parse::<usize>()
            .map_err(|_| err(no, format!("bad size `{n}`")))?,
        _ => return Err(err(no, format!("expected `poset <n>`, got `{head}`"))),
    };
    let mut edges = Vec::new();
    for (no, l) in lines {
        let (a, b) = l
            .split_once('<')
            .ok_or_else(|| err(no, format!("expected `i < j`, got `{l}`")))?;
        let parse = |s: &str| {
            let v = s
                .trim()
                .parse::<usize>()
                .map_err(|_| err(no, format!("bad element `{}`", s.trim())))?;
            if v >= n {
                return Err(err(no, format!("element {v} out of range for poset {n}")));
            }
            Ok(v)
        };
        edges.push((parse(a)?, parse(b)?));
    }
    FinitePoset::from_edges(n, &edges)
}

/// Writes the cover relations, which parse back to the same poset.
pub fn format_poset(p: &FinitePoset) -> String {
    let mut s = format!("poset {}\n", p.n());
    for (i, j) in p.covers() {
        writeln!(s, "{i} < {j}").unwrap();
    }
    s
}

/// The Hasse diagram, drawn bottom to top.
pub fn hasse_dot(p: &FinitePoset, name: &str) -> String {
    let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for i in 0..p.n() {
        writeln!(s, "  n{i} [label=\"{}\"];", p.label(i).replace('"', "\\\"")).unwrap();
    }
    for (i, j) in p.covers() {
        writeln!(s, "  n{i} -> n{j} [arrowhead=none];").unwrap();
    }
    s.push_str("}\n");
    s
}
