//! graph6 codec for simple closed graphs.
//!
//! Layout: optional `>>graph6<<` header, the order `N(n)`, then the upper
//! triangle of the adjacency matrix in column order (`x(0,1) x(0,2) x(1,2)
//! x(0,3) ...`), packed big-endian into 6-bit groups, each offset by 63.

use thiserror::Error;

use super::{CubicMultipole, GraphError};

const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed graph6 size prefix")]
    MalformedHeader,
    #[error("graph6 bit vector truncated: expected {expected} data bytes, found {found}")]
    TruncatedBitVector { expected: usize, found: usize },
    #[error("graph6 line has {0} trailing bytes")]
    TrailingBytes(usize),
    #[error("only simple graphs without semiedges can be encoded")]
    NonSimpleGraph,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
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
}

pub fn encode_graph6(g: &CubicMultipole) -> Result<String, Graph6Error> {
    if !g.is_closed() || !g.is_simple() {
        return Err(Graph6Error::NonSimpleGraph);
    }
    let n = g.vertex_count();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut adj = vec![false; n * n];
    for (_, u, v) in g.proper_edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | adj[i * n + j] as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

fn printable(b: u8) -> bool {
    (63..=126).contains(&b)
}

fn decode_order(data: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let group = |bytes: &[u8]| -> Result<usize, Graph6Error> {
        bytes.iter().try_fold(
            0usize,
            |acc, &b| {
                if printable(b) {
                    Ok((acc << 6) | (b - 63) as usize)
                } else {
                    Err(Graph6Error::MalformedHeader)
                }
            },
        )
    };
    match data {
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((group(&rest[..6])?, 8)),
        [126, rest @ ..] if rest.len() >= 3 && rest[0] != 126 => Ok((group(&rest[..3])?, 4)),
        [b, ..] if printable(*b) && *b != 126 => Ok(((b - 63) as usize, 1)),
        _ => Err(Graph6Error::MalformedHeader),
    }
}

/// Decodes one graph6 line (trailing `\n`/`\r` ignored).
pub fn decode_graph6(line: &str) -> Result<CubicMultipole, Graph6Error> {
    let mut data = line.trim_end_matches(['\n', '\r']).as_bytes();
    if let Some(rest) = data.strip_prefix(HEADER) {
        data = rest;
    }
    let (n, used) = decode_order(data)?;
    let body = &data[used..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let found = body.iter().take_while(|&&b| printable(b)).count();
    if found < expected {
        return Err(Graph6Error::TruncatedBitVector { expected, found });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes(body.len() - expected));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Ok(CubicMultipole::from_pairs(n, &pairs)?)
}
