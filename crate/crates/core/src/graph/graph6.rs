//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per byte with a bias
//! of 63.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

pub trait Graph6: Sized {
    fn from_graph6(text: &str) -> Result<Self>;
    fn to_graph6(&self) -> String;
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

impl Graph6 for Graph {
    fn from_graph6(text: &str) -> Result<Self> {
        let mut bytes = text.as_bytes();
        let mut base = 0;
        if bytes.starts_with(b">>graph6<<") {
            bytes = &bytes[10..];
            base = 10;
        }
        while let [rest @ .., b'\n' | b'\r'] = bytes {
            bytes = rest;
        }
        if bytes.is_empty() {
            return Err(parse_err(base, "empty input"));
        }
        for (i, &b) in bytes.iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(parse_err(base + i, format!("byte {b:#04x} outside 63..=126")));
            }
        }

        let (n, header) = if bytes[0] != 126 {
            ((bytes[0] - 63) as usize, 1)
        } else if bytes.len() >= 4 && bytes[1] != 126 {
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        } else {
            return Err(parse_err(base, "unsupported or truncated size header"));
        };
        if n == 0 || n > MAX_VERTICES {
            return Err(parse_err(base, format!("vertex count {n} outside 1..=64")));
        }

        let nbits = n * (n - 1) / 2;
        let need = nbits.div_ceil(6);
        let payload = &bytes[header..];
        if payload.len() != need {
            return Err(parse_err(
                base + header + payload.len().min(need),
                format!("expected {need} payload bytes, found {}", payload.len()),
            ));
        }

        let mut rows = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = payload[k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        let pad = need * 6 - nbits;
        if pad > 0 && (payload[need - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(parse_err(base + header + need - 1, "nonzero padding bits"));
        }
        Graph::from_rows(rows)
    }

    fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = Vec::with_capacity(4 + n * n / 12);
        if n <= 62 {
            out.push(n as u8 + 63);
        } else {
            out.push(126);
            out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
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
        String::from_utf8(out).expect("graph6 bytes are ASCII")
    }
}

/// Parses a newline-delimited graph6 file, skipping blank lines. Errors carry
/// the byte offset into the whole text.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if !trimmed.trim().is_empty() {
            let g = Graph::from_graph6(trimmed).map_err(|e| match e {
                Error::Graph6 { offset: o, message } => Error::Graph6 {
                    offset: offset + o,
                    message,
                },
                other => other,
            })?;
            out.push(g);
        }
        offset += line.len();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_encodes_as_at_sign() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.to_graph6(), "@");
        assert_eq!(Graph::from_graph6("@").unwrap(), k1);
    }

    #[test]
    fn five_cycle_hand_encoding() {
        // C5 = 0-1-2-3-4-0. Upper-triangle bits by column:
        // (0,1)=1 | (0,2)=0 (1,2)=1 | (0,3)=0 (1,3)=0 (2,3)=1 | (0,4)=1 (1,4)=0 (2,4)=0 (3,4)=1
        // -> 101001 | 1001(00) -> 41+63='h', 36+63='c'
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.to_graph6(), "Dhc");
        assert_eq!(Graph::from_graph6("Dhc").unwrap(), c5);
    }

    #[test]
    fn known_small_strings() {
        // petgraph reference: edges a-c, a-e, b-d, d-e on 5 vertices.
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g.to_graph6(), "DQc");
        assert_eq!(Graph::complete(4).unwrap().to_graph6(), "C~");
    }

    #[test]
    fn long_header_round_trip() {
        for n in [62, 63, 64] {
            let g = Graph::path(n).unwrap();
            let s = g.to_graph6();
            assert_eq!(s.as_bytes()[0] == 126, n > 62);
            assert_eq!(Graph::from_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            Graph::from_graph6(""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        // C5 needs two payload bytes
        assert!(matches!(
            Graph::from_graph6("Dh"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(
            Graph::from_graph6("D h"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(Graph::from_graph6("?").is_err());
    }

    #[test]
    fn multi_line_offsets() {
        let gs = parse_graph6_lines("Dhc\n\nC~\n").unwrap();
        assert_eq!(gs.len(), 2);
        match parse_graph6_lines("Dhc\nD!c\n") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("unexpected {other:?}"),
        }
    }
}
