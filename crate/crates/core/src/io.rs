//! graph6 and DIMACS `.col` encodings.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 size header")]
    BadHeader,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("graph6 body has {found} bytes, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
    #[error("DIMACS input has no problem line")]
    MissingProblemLine,
    #[error("line {line}: second problem line")]
    DuplicateProblemLine { line: usize },
    #[error("line {line}: malformed: {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop")]
    SelfLoop { line: usize },
    #[error("problem line declares {declared} edges, found {found} edge lines")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("input line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<ParseError>,
    },
}

const HEADER: &str = ">>graph6<<";

fn check_byte(offset: usize, byte: u8) -> Result<u8, ParseError> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(ParseError::ByteOutOfRange { offset, byte })
    }
}

/// Decodes one graph6 string (an optional `>>graph6<<` prefix and trailing
/// whitespace are accepted).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.trim_end();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    let (n, body_start) = if bytes[0] != 126 {
        (check_byte(0, bytes[0])? as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(ParseError::BadHeader);
        }
        let mut n = 0usize;
        for (i, &b) in bytes[2..8].iter().enumerate() {
            n = (n << 6) | check_byte(i + 2, b)? as usize;
        }
        (n, 8)
    } else {
        if bytes.len() < 4 {
            return Err(ParseError::BadHeader);
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = (n << 6) | check_byte(i + 1, b)? as usize;
        }
        (n, 4)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != expected {
        return Err(ParseError::WrongLength {
            expected,
            found: body.len(),
        });
    }
    let mut values = Vec::with_capacity(body.len());
    for (i, &b) in body.iter().enumerate() {
        values.push(check_byte(body_start + i, b)?);
    }
    let bit = |k: usize| values[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(ParseError::NonZeroPadding);
    }
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
    Ok(Graph::from_edges(n, edges).expect("graph6 edges are in range"))
}

/// Encodes `g` as a graph6 string without header or newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.is_adjacent(i, j) as u8;
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

/// One graph per non-blank line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|e| ParseError::AtLine {
                line: i + 1,
                source: Box::new(e),
            })
        })
        .collect()
}

/// Parses DIMACS `.col` text: `c` comments, one `p edge n m` (or `p col n m`)
/// line, then `m` lines `e u v` with 1-indexed endpoints. Repeated edges are
/// merged but still counted against `m`.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut declared = 0;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        let malformed = || ParseError::MalformedLine {
            line,
            content: raw.to_string(),
        };
        match fields.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(ParseError::DuplicateProblemLine { line });
                }
                if fields.len() != 4 || !matches!(fields[1], "edge" | "col") {
                    return Err(malformed());
                }
                n = Some(fields[2].parse().map_err(|_| malformed())?);
                declared = fields[3].parse().map_err(|_| malformed())?;
            }
            Some("e") => {
                let Some(n) = n else {
                    return Err(ParseError::MissingProblemLine);
                };
                if fields.len() != 3 {
                    return Err(malformed());
                }
                let mut ends = [0usize; 2];
                for (slot, f) in ends.iter_mut().zip(&fields[1..]) {
                    let v: usize = f.parse().map_err(|_| malformed())?;
                    if v == 0 || v > n {
                        return Err(ParseError::VertexOutOfRange { line, vertex: v, n });
                    }
                    *slot = v - 1;
                }
                if ends[0] == ends[1] {
                    return Err(ParseError::SelfLoop { line });
                }
                edges.push((ends[0], ends[1]));
            }
            Some(_) => return Err(malformed()),
        }
    }
    let n = n.ok_or(ParseError::MissingProblemLine)?;
    if edges.len() != declared {
        return Err(ParseError::EdgeCountMismatch {
            declared,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, edges).expect("validated DIMACS edges"))
}

pub fn emit_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}
