//! graph6: `N(n)` followed by the upper-triangle adjacency bits in column-major
//! order, big-endian in 6-bit groups, each group stored as `value + 63`.

use crate::error::{Error, Result};
use crate::graph::{check_cap, Graph, VertexSet};

pub const HEADER: &str = ">>graph6<<";

/// Largest `n` representable by the 8-byte size prefix.
const FORMAT_MAX_N: u64 = (1 << 36) - 1;

fn encode_size(n: usize, out: &mut Vec<u8>) {
    let n = n as u64;
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

/// Decodes `N(n)`; returns `n` and the number of bytes consumed.
fn decode_size(bytes: &[u8]) -> Result<(u64, usize)> {
    let sextet = |i: usize| -> Result<u64> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as u64)
            .ok_or_else(|| Error::malformed("truncated size prefix"))
    };
    match bytes {
        [] => Err(Error::malformed("empty graph6 record")),
        [126, 126, ..] => {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | sextet(i)?;
            }
            Ok((n, 8))
        }
        [126, ..] => {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | sextet(i)?;
            }
            Ok((n, 4))
        }
        [b, ..] => Ok(((b - 63) as u64, 1)),
    }
}

/// Encodes `g` as a graph6 record without header or line terminator.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n as u64 > FORMAT_MAX_N {
        return Err(Error::cap("graph6 vertex count", n, FORMAT_MAX_N as usize));
    }
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_size(n, &mut out);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            group = (group << 1) | row.contains(i) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes one graph6 record. A leading `>>graph6<<` header is accepted.
pub fn parse_graph6(record: &str) -> Result<Graph> {
    let record = record.strip_prefix(HEADER).unwrap_or(record);
    let bytes = record.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::malformed(format!(
            "byte {} at offset {pos} is outside 63..=126",
            bytes[pos]
        )));
    }
    let (n, offset) = decode_size(bytes)?;
    let n = usize::try_from(n).map_err(|_| Error::malformed("vertex count overflows"))?;
    check_cap(n)?;

    let payload = &bytes[offset..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() < expected {
        return Err(Error::malformed(format!(
            "truncated payload: {} of {expected} bytes",
            payload.len()
        )));
    }
    if payload.len() > expected {
        return Err(Error::malformed(format!(
            "{} trailing bytes after payload",
            payload.len() - expected
        )));
    }

    let bit = |k: usize| -> bool { (payload[k / 6] - 63) >> (5 - k % 6) & 1 == 1 };
    let mut rows = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    for pad in bits..expected * 6 {
        if bit(pad) {
            return Err(Error::malformed("nonzero padding bits"));
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    /// Independent encoder working on an explicit bit string.
    fn reference_encode(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bits = String::new();
        for j in 1..n {
            for i in 0..j {
                let e = edges.contains(&(i, j)) || edges.contains(&(j, i));
                bits.push(if e { '1' } else { '0' });
            }
        }
        while !bits.len().is_multiple_of(6) {
            bits.push('0');
        }
        let mut out = String::new();
        out.push((n as u8 + 63) as char);
        for chunk in bits.as_bytes().chunks(6) {
            let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
            out.push((v + 63) as char);
        }
        out
    }

    #[test]
    fn fixtures() {
        assert_eq!(reference_encode(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]), "Dhc");
        assert_eq!(reference_encode(2, &[(0, 1)]), "A_");

        assert_eq!(parse_graph6("D??").unwrap(), Graph::edgeless(5).unwrap());
        assert_eq!(parse_graph6("Dhc").unwrap(), c5());
        assert_eq!(parse_graph6("A_").unwrap(), Graph::from_edges(2, &[(0, 1)]).unwrap());

        assert_eq!(write_graph6(&Graph::null()).unwrap(), "?");
        assert_eq!(write_graph6(&Graph::from_edges(2, &[(0, 1)]).unwrap()).unwrap(), "A_");
        assert_eq!(write_graph6(&c5()).unwrap(), "Dhc");
    }

    #[test]
    fn header_is_stripped() {
        assert_eq!(parse_graph6(">>graph6<<Dhc").unwrap(), c5());
    }

    #[test]
    fn malformed_records() {
        assert!(matches!(parse_graph6(""), Err(Error::MalformedInput(_))));
        assert!(matches!(parse_graph6("D h"), Err(Error::MalformedInput(_))));
        assert!(matches!(parse_graph6("Dh"), Err(Error::MalformedInput(_))));
        assert!(matches!(parse_graph6("Dhcc"), Err(Error::MalformedInput(_))));
        // C5 payload uses 10 of 12 bits; the last two must be zero
        assert!(matches!(parse_graph6("Dhd"), Err(Error::MalformedInput(_))));
        assert!(matches!(parse_graph6("~"), Err(Error::MalformedInput(_))));
    }

    #[test]
    fn long_size_prefixes() {
        let mut buf = Vec::new();
        encode_size(63, &mut buf);
        assert_eq!(buf, vec![126, 63, 63, 126]);
        assert_eq!(decode_size(&buf).unwrap(), (63, 4));
        buf.clear();
        encode_size(258_048, &mut buf);
        assert_eq!(buf.len(), 8);
        assert_eq!(decode_size(&buf).unwrap(), (258_048, 8));
        // decodes but exceeds the vertex cap
        let rec = String::from_utf8(vec![126, 63, 64, 63]).unwrap();
        assert!(matches!(parse_graph6(&rec), Err(Error::SizeCapExceeded { .. })));
    }

    #[test]
    fn largest_graph_round_trips() {
        let edges: Vec<_> = (0..32).map(|i| (i, (i * 7 + 3) % 32)).filter(|(a, b)| a != b).collect();
        let g = Graph::from_edges(32, &edges).unwrap();
        assert_eq!(parse_graph6(&write_graph6(&g).unwrap()).unwrap(), g);
    }
}
