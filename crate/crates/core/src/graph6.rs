//! The graph6 text format.
//!
//! A graph6 line is an order header followed by the upper triangle of the
//! adjacency matrix read column by column (`x01, x02, x12, x03, ...`),
//! packed big-endian into 6-bit groups, zero-padded, with 63 added to each
//! group. Orders up to 62 use a single header byte `n + 63`; larger orders
//! use `~` followed by three (or `~~` and six) 6-bit groups.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Optional header that may prefix a graph6 file.
pub const HEADER: &[u8] = b">>graph6<<";

const BIAS: u8 = 63;

fn push_groups(out: &mut Vec<u8>, value: usize, groups: usize) {
    for i in (0..groups).rev() {
        out.push(((value >> (6 * i)) & 0x3f) as u8 + BIAS);
    }
}

fn body_len(order: usize) -> usize {
    (order * order.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes `g` as one graph6 line without the trailing newline.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        push_groups(&mut out, n, 3);
    } else {
        out.extend([126, 126]);
        push_groups(&mut out, n, 6);
    }
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn group(byte: u8) -> Result<usize> {
    if (BIAS..=126).contains(&byte) {
        Ok((byte - BIAS) as usize)
    } else {
        Err(Error::NonPrintableByte(byte))
    }
}

fn read_order(line: &[u8]) -> Result<(usize, &[u8])> {
    let take = |bytes: &[u8], groups: usize| -> Result<usize> {
        if bytes.len() < groups {
            return Err(Error::MalformedHeader);
        }
        bytes[..groups]
            .iter()
            .try_fold(0usize, |acc, &b| Ok((acc << 6) | group(b)?))
    };
    match line {
        [] => Err(Error::MalformedHeader),
        [126, 126, rest @ ..] => Ok((take(rest, 6)?, &rest[6..])),
        [126, rest @ ..] => Ok((take(rest, 3)?, &rest[3..])),
        [b, rest @ ..] if (BIAS..126).contains(b) => Ok(((b - BIAS) as usize, rest)),
        _ => Err(Error::MalformedHeader),
    }
}

/// Decodes one graph6 line. Trailing `\r`/`\n` and a leading `>>graph6<<`
/// header are tolerated.
pub fn decode(line: &[u8]) -> Result<Graph> {
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let end = line
        .iter()
        .rposition(|&b| b != b'\n' && b != b'\r')
        .map_or(0, |i| i + 1);
    let (n, body) = read_order(&line[..end])?;
    let expected = body_len(n);
    if let Some(&bad) = body.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(Error::NonPrintableByte(bad));
    }
    if body.len() != expected {
        return Err(Error::TruncatedBits {
            expected,
            found: body.len(),
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - BIAS;
            if byte & (0x20 >> (bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Iterator over the graphs of a graph6 stream, one per line.
///
/// Blank lines are skipped; decode errors carry their 1-based line number.
pub struct Graph6Reader<R> {
    reader: R,
    buf: Vec<u8>,
    line: usize,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(reader: R) -> Self {
        Graph6Reader {
            reader,
            buf: Vec::with_capacity(64),
            line: 0,
        }
    }

    /// Number of lines consumed so far.
    pub fn line(&self) -> usize {
        self.line
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.reader.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(_) => self.line += 1,
                Err(e) => return Some(Err(e.into())),
            }
            let content = self.buf.strip_prefix(HEADER).unwrap_or(&self.buf);
            if content.iter().all(|b| b.is_ascii_whitespace()) {
                continue;
            }
            return Some(decode(content).map_err(|e| Error::AtLine {
                line: self.line,
                error: Box::new(e),
            }));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(encode(&g), "A_");
        assert_eq!(decode(b"A_").unwrap(), g);
    }

    #[test]
    fn petgraph_reference_graph() {
        // 5 vertices, edges a-c, a-e, b-d, d-e
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn small_known_codes() {
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::empty(1)), "@");
        let k5 =
            Graph::from_edges(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert_eq!(encode(&k5), "D~{");
    }

    #[test]
    fn large_order_header() {
        let n = 70;
        let g = Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap();
        let code = encode(&g);
        assert_eq!(&code.as_bytes()[..4], &[126, 63, 64, 69]);
        assert_eq!(decode(code.as_bytes()).unwrap(), g);
    }

    #[test]
    fn tolerates_newline_and_header() {
        assert_eq!(decode(b">>graph6<<A_\n").unwrap().size(), 1);
        assert_eq!(decode(b"A_\r\n").unwrap().size(), 1);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(decode(b""), Err(Error::MalformedHeader)));
        assert!(matches!(decode(b"\x20"), Err(Error::MalformedHeader)));
        assert!(matches!(decode(b"~?"), Err(Error::MalformedHeader)));
        assert!(matches!(
            decode(b"D~"),
            Err(Error::TruncatedBits {
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            decode(b"D~\x20"),
            Err(Error::NonPrintableByte(0x20))
        ));
        assert!(matches!(decode(b"A_?"), Err(Error::TruncatedBits { .. })));
    }

    #[test]
    fn reader_reports_line_numbers() {
        let data = b">>graph6<<A_\n\nB?\nBx\nC\n";
        let results: Vec<_> = Graph6Reader::new(&data[..]).collect();
        assert_eq!(results.len(), 4);
        assert!(results[0].is_ok() && results[1].is_ok() && results[2].is_ok());
        match &results[3] {
            Err(Error::AtLine { line: 5, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }
}
