//! The graph6 byte format: a size header, then the upper triangle `x(i, j)`, `i < j`, in
//! column order, six bits per printable byte `63 + value`.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order expressible with the one- and four-byte headers.
pub const GRAPH6_MAX_ORDER: usize = 258_047;

const OFFSET: u8 = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(String),
    #[error("graph6 byte {byte:#04x} at offset {offset} is outside 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated graph6 bit vector: need {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{count} trailing bytes after the graph6 bit vector")]
    TrailingGarbage { count: usize },
    #[error("order {0} is above the graph6 limit {GRAPH6_MAX_ORDER}")]
    TooLarge(usize),
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    let byte = bytes[offset];
    if (OFFSET..=OFFSET + 63).contains(&byte) {
        Ok(byte - OFFSET)
    } else {
        Err(Graph6Error::InvalidByte { offset, byte })
    }
}

/// The order and the header length in bytes.
fn parse_header(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first != 126 {
        return Ok((sextet(bytes, 0)? as usize, 1));
    }
    if bytes.get(1) == Some(&126) {
        return Err(Graph6Error::MalformedHeader(
            "eight-byte header for orders above 258047 is not supported".into(),
        ));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::MalformedHeader(format!(
            "four-byte header cut off after {} bytes",
            bytes.len()
        )));
    }
    let mut n = 0usize;
    for offset in 1..4 {
        n = (n << 6) | sextet(bytes, offset)? as usize;
    }
    if n < 63 {
        return Err(Graph6Error::MalformedHeader(format!(
            "order {n} must use the one-byte header"
        )));
    }
    Ok((n, 4))
}

/// One graph6 string. A single trailing line break is accepted.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let bytes = bytes
        .strip_suffix(b"\n")
        .map(|b| b.strip_suffix(b"\r").unwrap_or(b))
        .unwrap_or(bytes);
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let (n, header) = parse_header(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[header..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage {
            count: body.len() - expected,
        });
    }
    let mut values = Vec::with_capacity(expected);
    for k in 0..expected {
        values.push(sextet(bytes, header + k)?);
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if values[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("indices below n, no loops"))
}

/// Every non-empty line of a graph6 file.
pub fn parse_graph6_lines(text: &[u8]) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.split(|&b| b == b'\n')
        .enumerate()
        .map(|(i, line)| (i, line.strip_suffix(b"\r").unwrap_or(line)))
        .filter(|(_, line)| !line.iter().all(u8::is_ascii_whitespace))
        .map(|(i, line)| parse_graph6(line).map_err(|e| (i + 1, e)))
        .collect()
}

pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::new();
    if n < 63 {
        out.push(OFFSET + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(OFFSET + ((n >> shift) & 63) as u8);
        }
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut values = vec![0u8; bits.div_ceil(6)];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.is_adjacent(i, j) {
                values[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    out.extend(values.into_iter().map(|v| v + OFFSET));
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::test_graphs::*;

    #[test]
    fn hand_encoded_k4() {
        // six ones pack into 0b111111 = 63, printed as 126 '~'; header 4 + 63 = 'C'
        let g = parse_graph6(b"C~").unwrap();
        assert_eq!((g.order(), g.size()), (4, 6));
        assert_eq!(encode_graph6(&complete(4)).unwrap(), "C~");
    }

    #[test]
    fn empty_five_vertex_graph() {
        let g = parse_graph6(b"D??").unwrap();
        assert_eq!((g.order(), g.size()), (5, 0));
        assert_eq!(encode_graph6(&g).unwrap(), "D??");
    }

    #[test]
    fn single_vertex_and_empty_order() {
        assert_eq!(parse_graph6(b"@").unwrap().order(), 1);
        assert_eq!(parse_graph6(b"?").unwrap().order(), 0);
    }

    #[test]
    fn petersen_matches_reference_string() {
        assert_eq!(encode_graph6(&petersen()).unwrap(), "IheA@GUAo");
        assert_eq!(parse_graph6(b"IheA@GUAo\n").unwrap(), petersen());
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert!(matches!(parse_graph6(b"~~"), Err(Graph6Error::MalformedHeader(_))));
        assert!(matches!(parse_graph6(b"~?"), Err(Graph6Error::MalformedHeader(_))));
        assert!(matches!(parse_graph6(b"~??C"), Err(Graph6Error::MalformedHeader(_))));
        assert_eq!(
            parse_graph6(b"D?"),
            Err(Graph6Error::Truncated { expected: 2, found: 1 })
        );
        assert_eq!(
            parse_graph6(b"C~~"),
            Err(Graph6Error::TrailingGarbage { count: 1 })
        );
        assert_eq!(
            parse_graph6(b"C "),
            Err(Graph6Error::InvalidByte { offset: 1, byte: b' ' })
        );
    }

    #[test]
    fn medium_header_round_trip() {
        let g = cycle(100);
        let s = encode_graph6(&g).unwrap();
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn lines_report_position() {
        let graphs = parse_graph6_lines(b"C~\n\nD??\n").unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(parse_graph6_lines(b"C~\nC~~\n").unwrap_err().0, 2);
    }
}
