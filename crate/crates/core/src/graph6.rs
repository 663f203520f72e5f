//! graph6 text encoding, one graph per line.

use crate::bitset::MAX_ORDER;
use crate::graph::Graph;
use std::io::BufRead;
use thiserror::Error;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("line {0}: malformed graph6 data")]
    MalformedLine(usize),
    #[error("line {0}: graph order exceeds {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("line {line}: {message}")]
    Io { line: usize, message: String },
}

pub fn encode(graph: &Graph) -> String {
    let n = graph.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | graph.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes a single graph6 string; `line` is used for error reporting only.
pub fn decode(text: &str, line: usize) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let malformed = Graph6Error::MalformedLine(line);
    if bytes.is_empty() || bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(malformed);
    }
    let (n, body) = if bytes[0] != b'~' {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == b'~' {
        if bytes.len() < 8 {
            return Err(malformed);
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(malformed);
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n < 63 {
            return Err(malformed);
        }
        (n, &bytes[4..])
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(line));
    }
    if n == 0 {
        return Err(malformed);
    }
    let total = n * (n - 1) / 2;
    if body.len() != total.div_ceil(6) {
        return Err(malformed);
    }
    let bit = |idx: usize| (body[idx / 6] - 63) >> (5 - idx % 6) & 1 == 1;
    if (total..body.len() * 6).any(bit) {
        return Err(malformed);
    }
    let mut graph = Graph::new(n).map_err(|_| malformed.clone())?;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                graph.add_edge(i, j).map_err(|_| malformed.clone())?;
            }
            idx += 1;
        }
    }
    Ok(graph)
}

/// Graphs from a graph6 stream, skipping blank lines and the optional header.
pub fn read_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph, Graph6Error>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let lineno = i + 1;
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(Graph6Error::Io { line: lineno, message: e.to_string() })),
        };
        let mut text = line.trim_end_matches(['\r', '\n']);
        if let Some(rest) = text.strip_prefix(HEADER) {
            text = rest;
        }
        if text.trim().is_empty() {
            return None;
        }
        Some(decode(text, lineno))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        assert_eq!(encode(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(encode(&Graph::petersen()), "IheA@GUAo");
        assert_eq!(encode(&Graph::path(2).unwrap()), "A_");
        assert_eq!(encode(&Graph::new(1).unwrap()), "@");
    }

    #[test]
    fn long_header() {
        let g = Graph::cycle(63).unwrap();
        let text = encode(&g);
        assert!(text.starts_with("~??~"));
        assert_eq!(decode(&text, 1).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert_eq!(decode("C~ ", 3), Err(Graph6Error::MalformedLine(3)));
        assert_eq!(decode("C", 1), Err(Graph6Error::MalformedLine(1)));
        // order 600 in the four-byte form
        let mut long = String::from("~");
        for shift in [12, 6, 0] {
            long.push(char::from(((600 >> shift) & 0x3f) as u8 + 63));
        }
        assert_eq!(decode(&long, 9), Err(Graph6Error::OrderTooLarge(9)));
        // padding bits must be zero
        assert_eq!(decode("A`", 2), Err(Graph6Error::MalformedLine(2)));
    }

    #[test]
    fn stream() {
        let input = ">>graph6<<C~\n\nIheA@GUAo\r\n";
        let graphs: Vec<_> = read_graph6(input.as_bytes()).collect::<Result<_, _>>().unwrap();
        assert_eq!(graphs, vec![Graph::complete(4).unwrap(), Graph::petersen()]);
        assert_eq!(read_graph6("".as_bytes()).count(), 0);
        let errs: Vec<_> = read_graph6("C~\n!!\n".as_bytes()).collect();
        assert_eq!(errs[1], Err(Graph6Error::MalformedLine(2)));
    }
}
