//! graph6 encoding.
//!
//! A record is `N(n)` followed by the upper triangle of the adjacency matrix
//! in column-major pair order `(0,1),(0,2),(1,2),(0,3),...`, six bits per
//! character, most significant bit first, each character being `bits + 63`.
//! The bit stream is zero-padded to a multiple of six.

use thiserror::Error;

use crate::graph::{pair_count, Graph, GraphError};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;
const MAX_LONG: u64 = (1 << 36) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(String),
    #[error("byte {byte:#04x} at position {position} is outside the graph6 range 63..=126")]
    CharacterOutOfRange { position: usize, byte: u8 },
    #[error("graph6 body too short: expected {expected} characters, found {found}")]
    TruncatedBits { expected: usize, found: usize },
    #[error("graph6 record has {extra} unexpected trailing characters")]
    TrailingGarbage { extra: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parsed record together with the text it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph6Record {
    pub text: String,
    pub decoded: Graph,
    /// Set when the padding bits after the last pair were not all zero.
    pub nonzero_padding: bool,
}

/// Parses one graph6 record, logging a warning on nonzero padding.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let record = parse_graph6_checked(text)?;
    if record.nonzero_padding {
        log::warn!("graph6 record {:?} has nonzero padding bits", record.text);
    }
    Ok(record.decoded)
}

pub fn parse_graph6_checked(text: &str) -> Result<Graph6Record, Graph6Error> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let body = trimmed.strip_prefix(HEADER).unwrap_or(trimmed);
    let bytes = body.as_bytes();
    if let Some(position) = bytes.iter().position(|b| !(BIAS..=126).contains(b)) {
        return Err(Graph6Error::CharacterOutOfRange { position, byte: bytes[position] });
    }
    let (n, header_len) = decode_order(bytes)?;
    if n == 0 {
        return Err(Graph6Error::MalformedHeader("graphs of order 0 are not supported".into()));
    }

    let pairs = pair_count(n);
    let expected = pairs.div_ceil(6);
    let rest = &bytes[header_len..];
    if rest.len() < expected {
        return Err(Graph6Error::TruncatedBits { expected, found: rest.len() });
    }
    if rest.len() > expected {
        return Err(Graph6Error::TrailingGarbage { extra: rest.len() - expected });
    }

    let mut words = vec![0u64; pairs.div_ceil(64).max(1)];
    let mut nonzero_padding = false;
    for (c, &ch) in rest.iter().enumerate() {
        let v = ch - BIAS;
        for k in 0..6 {
            if v >> (5 - k) & 1 == 0 {
                continue;
            }
            let idx = c * 6 + k;
            if idx < pairs {
                words[idx / 64] |= 1 << (idx % 64);
            } else {
                nonzero_padding = true;
            }
        }
    }
    let decoded = Graph::from_pair_bits(n, words)?;
    Ok(Graph6Record { text: body.to_string(), decoded, nonzero_padding })
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let six = |s: &[u8]| s.iter().fold(0u64, |acc, &b| acc << 6 | u64::from(b - BIAS));
    match bytes {
        [] => Err(Graph6Error::MalformedHeader("empty record".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Graph6Error::MalformedHeader("8-byte order field is truncated".into()));
            }
            let n = usize::try_from(six(&rest[..6]))
                .map_err(|_| Graph6Error::MalformedHeader("order does not fit in memory".into()))?;
            Ok((n, 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Graph6Error::MalformedHeader("4-byte order field is truncated".into()));
            }
            Ok((six(&rest[..3]) as usize, 4))
        }
        [b, ..] => Ok(((b - BIAS) as usize, 1)),
    }
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    let push_groups = |out: &mut Vec<u8>, value: u64, groups: u32| {
        for g in (0..groups).rev() {
            out.push((value >> (6 * g) & 0x3f) as u8 + BIAS);
        }
    };
    if n <= MAX_SHORT {
        out.push(n as u8 + BIAS);
    } else if n <= MAX_MEDIUM {
        out.push(126);
        push_groups(out, n as u64, 3);
    } else {
        assert!(n as u64 <= MAX_LONG, "graph order {n} exceeds the graph6 limit");
        out.extend([126, 126]);
        push_groups(out, n as u64, 6);
    }
}

/// Shortest graph6 encoding of `g`, without header or newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let pairs = pair_count(n);
    let mut out = Vec::with_capacity(8 + pairs.div_ceil(6));
    encode_order(n, &mut out);
    for chunk in 0..pairs.div_ceil(6) {
        let mut v = 0u8;
        for k in 0..6 {
            let idx = chunk * 6 + k;
            v <<= 1;
            if idx < pairs && g.pair_bit(idx) {
                v |= 1;
            }
        }
        out.push(v + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyId};

    #[test]
    fn decodes_small_records() {
        let g = parse_graph6("B_").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges(), vec![(0, 1)]);

        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2, family(FamilyId::Complete(2)).unwrap());

        let single = parse_graph6("@").unwrap();
        assert_eq!((single.order(), single.edge_count()), (1, 0));
    }

    #[test]
    fn known_five_vertex_record() {
        // edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges0(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn header_and_newline_are_stripped() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), parse_graph6("A_").unwrap());
        let rec = parse_graph6_checked(">>graph6<<A_\r\n").unwrap();
        assert_eq!(rec.text, "A_");
    }

    #[test]
    fn error_cases() {
        assert!(matches!(parse_graph6(""), Err(Graph6Error::MalformedHeader(_))));
        assert!(matches!(parse_graph6("~?"), Err(Graph6Error::MalformedHeader(_))));
        assert!(matches!(parse_graph6("~~???"), Err(Graph6Error::MalformedHeader(_))));
        assert!(matches!(parse_graph6("?"), Err(Graph6Error::MalformedHeader(_))));
        assert_eq!(
            parse_graph6("A 1"),
            Err(Graph6Error::CharacterOutOfRange { position: 1, byte: b' ' })
        );
        assert_eq!(parse_graph6("D"), Err(Graph6Error::TruncatedBits { expected: 2, found: 0 }));
        assert_eq!(parse_graph6("A_?"), Err(Graph6Error::TrailingGarbage { extra: 1 }));
        assert_eq!(parse_graph6("@?"), Err(Graph6Error::TrailingGarbage { extra: 1 }));
    }

    #[test]
    fn nonzero_padding_is_tolerated_and_flagged() {
        // n=2 has one pair bit; 'a' = 97 -> 100010, the second set bit is padding
        let rec = parse_graph6_checked("Aa").unwrap();
        assert!(rec.nonzero_padding);
        assert_eq!(rec.decoded, family(FamilyId::Complete(2)).unwrap());
        assert!(!parse_graph6_checked("A_").unwrap().nonzero_padding);
    }

    #[test]
    fn order_field_forms() {
        let g = Graph::empty(63).unwrap();
        let s = emit_graph6(&g);
        assert_eq!(&s[..4], "~??~");
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g = Graph::empty(62).unwrap();
        assert_eq!(emit_graph6(&g).as_bytes()[0], 125);

        // the 8-byte form is accepted on input even for small orders
        let mut long = String::from("~~?????B");
        long.push('_');
        let parsed = parse_graph6(&long).unwrap();
        assert_eq!(parsed.edges(), vec![(0, 1)]);
    }
}
