//! Plain-text graph files.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v      (m lines, 0-based; "u u" is a loop, repeats are parallel edges)
//! ```
//!
//! The writer emits normalised, sorted edge lines so that writing, reading and
//! writing again reproduces the same bytes.

use std::fmt;
use std::str::FromStr;

use super::MultiGraph;
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_pair(line_no: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| parse_err(line_no, format!("{what} {tok:?} is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = it.next() {
        return Err(parse_err(line_no, format!("unexpected trailing field {extra:?}")));
    }
    Ok((a, b))
}

impl MultiGraph {
    pub fn parse(text: &str) -> Result<MultiGraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(Error::EmptyGraph)?;
        let (n, m) = parse_pair(header_line, header)?;
        if n == 0 {
            return Err(parse_err(header_line, "graph has no vertices"));
        }
        let mut edges = Vec::with_capacity(m);
        let mut last_line = header_line;
        for (line_no, l) in lines {
            if edges.len() == m {
                return Err(parse_err(line_no, format!("more than the declared {m} edge lines")));
            }
            let (u, v) = parse_pair(line_no, l)?;
            for w in [u, v] {
                if w >= n {
                    return Err(parse_err(line_no, format!("vertex {w} out of range (n = {n})")));
                }
            }
            edges.push((u, v));
            last_line = line_no;
        }
        if edges.len() < m {
            return Err(parse_err(
                last_line + 1,
                format!("expected {m} edge lines, found {}", edges.len()),
            ));
        }
        MultiGraph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.num_edges());
        for (u, v) in self.sorted_edge_list() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl FromStr for MultiGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MultiGraph::parse(s)
    }
}

impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn triangle() {
        let g: MultiGraph = "3 3\n0 1\n1 2\n2 0\n".parse().unwrap();
        assert_eq!(g.degrees(), vec![2, 2, 2]);
    }

    #[test]
    fn loop_and_double_edge() {
        let g = MultiGraph::parse("1 1\n0 0\n").unwrap();
        assert_eq!((g.degree(0), g.adjacency_count(0, 0)), (2, 2));
        let g = MultiGraph::parse("# double edge\n2 2\n0 1\n\n0 1\n").unwrap();
        assert_eq!(g.adjacency_count(0, 1), 2);
    }

    #[test]
    fn errors_name_lines() {
        let e = MultiGraph::parse("3 2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(e.kind(), "parse");
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        assert!(matches!(MultiGraph::parse("2 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(MultiGraph::parse("2 2\n0 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(MultiGraph::parse("2 1\n0 1\n1 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(MultiGraph::parse("0 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(MultiGraph::parse("# nothing\n\n"), Err(Error::EmptyGraph)));
        assert!(matches!(MultiGraph::parse("2 1 7\n0 1\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn writer_sorts_and_normalises() {
        let g = MultiGraph::from_edges(3, &[(2, 1), (0, 0), (1, 0)]).unwrap();
        assert_eq!(g.to_text(), "3 3\n0 0\n0 1\n1 2\n");
    }

    proptest! {
        #[test]
        fn write_read_write_is_bit_exact(
            n in 1usize..7,
            raw in proptest::collection::vec((0usize..7, 0usize..7), 0..12),
        ) {
            let edges: Vec<_> = raw.into_iter().map(|(u, v)| (u % n, v % n)).collect();
            let g = MultiGraph::new(n, edges).unwrap();
            let text = g.to_text();
            let back = MultiGraph::parse(&text).unwrap();
            prop_assert_eq!(back.to_text(), text);
            prop_assert_eq!(back.degrees(), g.degrees());
        }
    }
}
