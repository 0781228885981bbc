//! Text formats: a plain edge list and graph6.
//!
//! Edge list: the first non-comment line is `n m`, followed by `m` lines
//! `u v` with 0-based labels. Lines starting with `#` are ignored.

use crate::error::ParseError;
use crate::graph::{Graph, MAX_ORDER};

const GRAPH6_HEADER: &str = ">>graph6<<";

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(ParseError::Empty)?;
    let (n, m) = two_numbers(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        edges.push(two_numbers(line, l)?);
    }
    if edges.len() != m {
        return Err(ParseError::EdgeList {
            line: hline,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::new(n, &edges)?)
}

fn two_numbers(line: usize, l: &str) -> Result<(usize, usize), ParseError> {
    let err = |message: String| ParseError::EdgeList { line, message };
    let fields: Vec<&str> = l.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(err(format!("expected two integers, got {l:?}")));
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| err(format!("not a non-negative integer: {s:?}")))
    };
    Ok((parse(fields[0])?, parse(fields[1])?))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let line = line.trim();
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(ParseError::Graph6(format!("byte {b:#04x} outside 63..=126")));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(ParseError::Graph6("order too large".into()));
        }
        if bytes.len() < 4 {
            return Err(ParseError::Graph6("truncated order".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_ORDER {
        return Err(ParseError::Graph6(format!(
            "order {n} exceeds the supported maximum of {MAX_ORDER}"
        )));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(ParseError::Graph6(format!(
            "expected {} data bytes for order {n}, got {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
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
    Ok(Graph::new(n, &edges)?)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) as u8, (n >> 6 & 63) as u8, (n & 63) as u8].map(|b| b + 63));
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Reads either format: a first significant line of two integers means an
/// edge list, anything else is taken as a single graph6 string.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or(ParseError::Empty)?;
    let looks_numeric = first
        .split_whitespace()
        .all(|f| f.bytes().all(|b| b.is_ascii_digit()));
    if looks_numeric && first.split_whitespace().count() == 2 {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn edge_list_with_comments() {
        let g = parse_edge_list("# triangle\n3 3\n0 1\n# middle\n1 2\n2 0\n").unwrap();
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(ParseError::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(ParseError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 0\n"),
            Err(ParseError::Graph(_))
        ));
        assert_eq!(parse_edge_list("# nothing\n"), Err(ParseError::Empty));
    }

    #[test]
    fn graph6_known_strings() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!((k4.order(), k4.size()), (4, 6));
        let c5 = parse_graph6("Dhc").unwrap();
        assert_eq!(c5.size(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), k4);
        assert_eq!(write_graph6(&k4), "C~");
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C\u{7f}").is_err());
    }

    #[test]
    fn sniffing_formats() {
        assert_eq!(parse_graph("C~\n").unwrap().size(), 6);
        assert_eq!(parse_graph("2 1\n0 1\n").unwrap().size(), 1);
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..64, seed in any::<u64>()) {
            let mut edges = vec![];
            let mut s = seed | 1;
            for u in 0..n {
                for v in u + 1..n {
                    s ^= s << 13; s ^= s >> 7; s ^= s << 17;
                    if s & 3 == 0 { edges.push((u, v)); }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g.clone());
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }
}
