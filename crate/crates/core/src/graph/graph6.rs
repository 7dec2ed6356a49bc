//! graph6 encoding: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte
//! (bias 63).

use fixedbitset::FixedBitSet;

use super::Graph;
use crate::{Error, Result};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_size(n, &mut out);

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | col.contains(i) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// Parses one graph6 line. Surrounding whitespace and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let (n, body) = decode_size(bytes)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() != need {
        return Err(Error::Graph6(format!(
            "expected {need} data bytes for n = {n}, found {}",
            body.len()
        )));
    }

    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    let mut k = 0;
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if (nbits..need * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Ok(Graph::from_adjacency(adj))
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let field = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
    if bytes[0] != 126 {
        return Ok(((bytes[0] - BIAS) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated 8-byte size header".into()));
        }
        let n = field(&bytes[2..8]);
        if n <= 258_047 {
            return Err(Error::Graph6("non-minimal size header".into()));
        }
        return Ok((n, &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(Error::Graph6("truncated 4-byte size header".into()));
    }
    let n = field(&bytes[1..4]);
    if n <= 62 {
        return Err(Error::Graph6("non-minimal size header".into()));
    }
    Ok((n, &bytes[4..]))
}
