//! graph6 text encoding: one graph per line, bit-exact per the standard
//! format (order header, then the upper triangle of the adjacency matrix
//! in column-major order, six bits per printable byte offset by 63).
//!
//! Orders below 63 use the single-byte header; the three-byte header
//! (`'~'` + 18 bits) is accepted on input for orders up to 258047, though
//! graphs larger than [`MAX_VERTICES`](crate::graph::MAX_VERTICES) are
//! rejected after header parsing.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;

fn parse_error(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 line (trailing whitespace tolerated).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(parse_error(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(parse_error(i, format!("byte {b} outside graph6 range 63..=126")));
        }
    }

    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(parse_error(1, "eight-byte order header not supported"));
        }
        if bytes.len() < 4 {
            return Err(parse_error(bytes.len(), "truncated three-byte order header"));
        }
        let n = ((bytes[1] - OFFSET) as usize) << 12
            | ((bytes[2] - OFFSET) as usize) << 6
            | (bytes[3] - OFFSET) as usize;
        (n, 4)
    } else {
        ((bytes[0] - OFFSET) as usize, 1)
    };

    if n > MAX_VERTICES {
        return Err(Error::UnsupportedSize {
            what: "graph6 order",
            requested: n,
            max: MAX_VERTICES,
        });
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(parse_error(
            bytes.len(),
            format!("truncated body: expected {nbytes} data bytes"),
        ));
    }
    if bytes.len() > pos + nbytes {
        return Err(parse_error(pos + nbytes, "trailing bytes after graph body"));
    }

    let mut adj = vec![0u64; n];
    let mut bit_index = 0usize;
    // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    let mut col = 1usize;
    let mut row = 0usize;
    while bit_index < nbits {
        let byte = bytes[pos] - OFFSET;
        for k in 0..6 {
            let bit = byte >> (5 - k) & 1;
            if bit_index < nbits {
                if bit == 1 {
                    adj[row] |= 1u64 << col;
                    adj[col] |= 1u64 << row;
                }
                row += 1;
                if row == col {
                    row = 0;
                    col += 1;
                }
                bit_index += 1;
            } else if bit != 0 {
                return Err(parse_error(pos, "nonzero padding bits"));
            }
        }
        pos += 1;
    }
    // a body that is pure padding (n <= 1) was skipped by the loop above
    if nbits == 0 && nbytes == 0 {
        // nothing to read
    }

    Ok(Graph::from_adj(adj))
}

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            acc = acc << 1 | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Reads a file with one graph6 line per graph. Blank lines and an
/// optional `>>graph6<<` banner are skipped; errors carry the 1-based
/// line number.
pub fn read_graph6_file(path: &Path) -> Result<Vec<(usize, Graph)>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    read_graph6_lines(&text)
}

/// Parses multi-line graph6 text; returns `(line_number, graph)` pairs.
pub fn read_graph6_lines(text: &str) -> Result<Vec<(usize, Graph)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line == ">>graph6<<" {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| {
            Error::InvalidArgument(format!("line {}: {e}", i + 1))
        })?;
        out.push((i + 1, g));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn k2_is_a_underscore() {
        // hand encoding: n=2 -> 'A'; single bit 1 padded to 100000 -> 95 = '_'
        let k2 = Graph::complete(2);
        assert_eq!(write_graph6(&k2), "A_");
        assert_eq!(parse_graph6("A_").unwrap(), k2);
    }

    #[test]
    fn c5_hand_encoded() {
        // upper triangle of C5 column-major: 1,0,1,0,0,1,1,0,0,1
        // -> 101001 100100 -> 41,36 -> 'h','c'; header 'D'
        let c5 = Graph::cycle(5);
        assert_eq!(write_graph6(&c5), "Dhc");
        let parsed = parse_graph6("Dhc").unwrap();
        assert_eq!(parsed.n(), 5);
        assert_eq!(parsed.edge_count(), 5);
        assert!(parsed.vertices().all(|v| parsed.degree(v) == 2));
    }

    #[test]
    fn empty_and_singleton() {
        let e0 = Graph::empty(0).unwrap();
        assert_eq!(write_graph6(&e0), "?");
        assert_eq!(parse_graph6("?").unwrap(), e0);
        let e1 = Graph::empty(1).unwrap();
        assert_eq!(write_graph6(&e1), "@");
        assert_eq!(parse_graph6("@").unwrap(), e1);
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::complete(64);
        let text = write_graph6(&g);
        assert!(text.starts_with('~'));
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        // byte below the printable offset
        assert!(matches!(
            parse_graph6("D\x20aa"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        // truncated body: C5 needs 2 data bytes
        assert!(matches!(parse_graph6("Dh"), Err(Error::Graph6 { .. })));
        // trailing garbage
        assert!(matches!(
            parse_graph6("A_A"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        // nonzero padding: K2 body with a stray low bit (95 -> 96)
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6 { .. })));
        // order over the internal cap: 65 = 0<<12 | 1<<6 | 1 -> "~?@@"
        assert!(matches!(
            parse_graph6("~?@@"),
            Err(Error::UnsupportedSize { requested: 65, .. })
        ));
    }

    #[test]
    fn round_trip_random_corpus() {
        // 10^4 random graphs with n <= 20: parse(write(g)) == g exactly
        let mut rng = StdRng::seed_from_u64(0x6C61_6221);
        for _ in 0..10_000 {
            let n = rng.gen_range(0..=20);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let text = write_graph6(&g);
            let back = parse_graph6(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(write_graph6(&back), text);
        }
    }

    #[test]
    fn file_parsing_reports_line_numbers() {
        let text = "A_\n\nBg\nnot-a-graph\n";
        let err = read_graph6_lines(text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 4"), "got: {msg}");

        let ok = read_graph6_lines(">>graph6<<\nA_\nBg\n").unwrap();
        assert_eq!(ok.len(), 2);
        assert_eq!(ok[0].1, Graph::complete(2));
        assert_eq!(
            ok[1].1.closed_neighborhood(VertexSet::singleton(1)).unwrap(),
            VertexSet::full(3)
        );
    }
}
