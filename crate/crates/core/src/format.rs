//! Graph file formats: a DIMACS-style edge list and graph6.

use std::collections::HashSet;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("graph6 byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
}

fn el_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::EdgeList {
        line,
        message: message.into(),
    }
}

/// Parses `p edge <n> <m>` followed by `m` lines `e <u> <v>` (1-indexed).
/// Lines starting with `c` and blank lines are ignored.
pub fn parse_edgelist(text: &str) -> Result<Graph, FormatError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match (fields[0], &header) {
            ("p", None) => {
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(el_err(line, "expected `p edge <n> <m>`"));
                }
                let n = fields[2]
                    .parse()
                    .map_err(|_| el_err(line, "vertex count is not a number"))?;
                let m = fields[3]
                    .parse()
                    .map_err(|_| el_err(line, "edge count is not a number"))?;
                header = Some((n, m, line));
            }
            ("p", Some(_)) => return Err(el_err(line, "duplicate problem line")),
            ("e", None) => return Err(el_err(line, "edge line before `p edge` header")),
            ("e", Some((n, _, _))) => {
                if fields.len() != 3 {
                    return Err(el_err(line, "expected `e <u> <v>`"));
                }
                let parse = |f: &str| -> Result<usize, FormatError> {
                    let x: usize = f.parse().map_err(|_| el_err(line, format!("bad vertex {f:?}")))?;
                    if x == 0 || x > *n {
                        return Err(el_err(line, format!("vertex {x} outside 1..={n}")));
                    }
                    Ok(x - 1)
                };
                let (u, v) = (parse(fields[1])?, parse(fields[2])?);
                if u == v {
                    return Err(el_err(line, format!("self-loop at vertex {}", u + 1)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(el_err(line, format!("duplicate edge {} {}", u + 1, v + 1)));
                }
                edges.push((u, v));
            }
            (other, _) => return Err(el_err(line, format!("unknown line type {other:?}"))),
        }
    }
    let (n, m, _) = header.ok_or_else(|| el_err(last_line.max(1), "missing `p edge` header"))?;
    if edges.len() != m {
        return Err(el_err(
            last_line,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Ok(Graph::from_edges(n, edges).expect("validated above"))
}

/// Header line then one `e u v` line per edge, sorted, 1-indexed.
pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

const G6_HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, message: impl Into<String>) -> FormatError {
    FormatError::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let line = line.trim_end();
    let (skip, body) = match line.strip_prefix(G6_HEADER) {
        Some(rest) => (G6_HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(
                skip + i,
                format!("byte {b:#04x} outside the graph6 range 63..=126"),
            ));
        }
    }
    let take = |from: usize, count: usize| -> Result<u64, FormatError> {
        if body.len() < from + count {
            return Err(g6_err(skip + body.len(), "truncated size prefix"));
        }
        Ok(body[from..from + count]
            .iter()
            .fold(0u64, |acc, &b| (acc << 6) | u64::from(b - 63)))
    };
    let (n, start) = match body.first() {
        None => return Err(g6_err(skip, "empty graph6 string")),
        Some(&126) if body.get(1) == Some(&126) => (take(2, 6)?, 8),
        Some(&126) => (take(1, 3)?, 4),
        Some(&b) => (u64::from(b - 63), 1),
    };
    let n = usize::try_from(n).map_err(|_| g6_err(skip, "vertex count too large"))?;
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    let data = &body[start..];
    if data.len() < want {
        return Err(g6_err(
            skip + body.len(),
            format!("truncated body: need {want} bytes, found {}", data.len()),
        ));
    }
    if data.len() > want {
        return Err(g6_err(skip + start + want, "trailing bytes after adjacency data"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded edges are valid"))
}

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    let push_size = |out: &mut Vec<u8>, value: u64, groups: u32| {
        for shift in (0..groups).rev() {
            out.push(((value >> (6 * shift)) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_size(&mut out, n as u64, 3);
    } else {
        out.extend([126, 126]);
        push_size(&mut out, n as u64, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Every non-blank line of a graph6 file; errors carry the line number in
/// the message.
pub fn parse_graph6_document(text: &str) -> Result<Vec<Graph>, FormatError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l).map_err(|e| match e {
                FormatError::Graph6 { offset, message } => FormatError::Graph6 {
                    offset,
                    message: format!("line {}: {message}", i + 1),
                },
                other => other,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgelist_examples() {
        let k3 = parse_edgelist("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(parse_edgelist("c nothing\np edge 2 0\n").unwrap(), Graph::empty(2));
        assert_eq!(
            parse_edgelist("p edge 3 1\ne 1 4\n"),
            Err(FormatError::EdgeList {
                line: 2,
                message: "vertex 4 outside 1..=3".into()
            })
        );
    }

    #[test]
    fn edgelist_rejections() {
        let line_of = |text: &str| match parse_edgelist(text) {
            Err(FormatError::EdgeList { line, .. }) => line,
            other => panic!("expected an error, got {other:?}"),
        };
        assert_eq!(line_of("p edge 3 2\ne 1 2\ne 2 1\n"), 3);
        assert_eq!(line_of("p edge 3 1\ne 2 2\n"), 2);
        assert_eq!(line_of("p edge 3 2\ne 1 2\n"), 2);
        assert_eq!(line_of("e 1 2\n"), 1);
        assert_eq!(line_of("p edge x 0\n"), 1);
        assert_eq!(line_of("p edge 3 0\nq 1 2\n"), 2);
        assert_eq!(line_of("c only\n"), 1);
    }

    #[test]
    fn edgelist_emit_sorted() {
        let g = Graph::from_edges(4, [(3, 1), (0, 2), (0, 1)]).unwrap();
        assert_eq!(emit_edgelist(&g), "p edge 4 3\ne 1 2\ne 1 3\ne 2 4\n");
    }

    #[test]
    fn graph6_known_strings() {
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2));
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(emit_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        // from the format description: 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(parse_graph6(">>graph6<<DQc\n").unwrap(), g);
        assert_eq!(
            parse_graph6(&emit_graph6(&Graph::petersen())).unwrap(),
            Graph::petersen()
        );
    }

    #[test]
    fn graph6_large_prefix() {
        let g = Graph::cycle(70);
        let line = emit_graph6(&g);
        assert!(line.starts_with('~'));
        assert_eq!(parse_graph6(&line).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6("B"), Err(FormatError::Graph6 { offset: 1, .. })));
        assert!(matches!(
            parse_graph6("A?x"),
            Err(FormatError::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(parse_graph6("A\t"), Err(FormatError::Graph6 { .. })));
        assert!(matches!(
            parse_graph6("A ?"),
            Err(FormatError::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(parse_graph6(""), Err(FormatError::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("~?"), Err(FormatError::Graph6 { .. })));
    }

    #[test]
    fn graph6_document() {
        let doc = format!(
            "{}\n\n{}\n",
            emit_graph6(&Graph::cycle(5)),
            emit_graph6(&Graph::complete(4))
        );
        assert_eq!(
            parse_graph6_document(&doc).unwrap(),
            vec![Graph::cycle(5), Graph::complete(4)]
        );
    }
}
