//! OEIS term files.
//!
//! Two layouts are accepted: one integer per line, or the b-file layout of
//! `n a(n)` pairs. Tokens may be separated by whitespace or commas; blank lines
//! and `#` comments are skipped. A small set of reference sequences ships with
//! the crate so that no check ever needs the network.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Bundled,
    Cached,
    Fetched,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Bundled => "bundled",
            Provenance::Cached => "cached",
            Provenance::Fetched => "fetched",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OeisFixture {
    pub a_number: String,
    /// Index of the first term.
    pub offset: i64,
    pub terms: Vec<BigInt>,
    pub provenance: Provenance,
}

impl OeisFixture {
    /// Length of the common prefix with `values`.
    pub fn match_length(&self, values: &[BigInt]) -> usize {
        self.terms.iter().zip(values).take_while(|(a, b)| a == b).count()
    }
}

/// Canonical `A` followed by six digits.
pub fn normalize_a_number(id: &str) -> Option<String> {
    let digits = id.trim().strip_prefix(['A', 'a'])?;
    if digits.is_empty() || digits.len() > 6 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some(format!("A{digits:0>6}"))
}

pub fn parse_fixture(a_number: &str, text: &str, provenance: Provenance) -> Result<OeisFixture> {
    let mut terms = Vec::new();
    let mut offset = None;
    let mut next_index: Option<i64> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || Error::MalformedFixture { line: i + 1, text: raw.to_string() };
        let tokens: Vec<&str> =
            line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
        let value = match tokens.as_slice() {
            [v] => v.parse::<BigInt>().map_err(|_| malformed())?,
            [n, v] => {
                let n: i64 = n.parse().map_err(|_| malformed())?;
                if next_index.is_some_and(|want| want != n) {
                    return Err(malformed());
                }
                offset.get_or_insert(n);
                next_index = Some(n + 1);
                v.parse::<BigInt>().map_err(|_| malformed())?
            }
            _ => return Err(malformed()),
        };
        terms.push(value);
    }
    Ok(OeisFixture {
        a_number: a_number.to_string(),
        offset: offset.unwrap_or(0),
        terms,
        provenance,
    })
}

pub const BUNDLED: [&str; 8] =
    ["A000045", "A014445", "A015448", "A033887", "A034807", "A049310", "A087960", "A127672"];

fn bundled_text(a_number: &str) -> Option<&'static str> {
    Some(match a_number {
        "A000045" => include_str!("../fixtures/A000045.txt"),
        "A014445" => include_str!("../fixtures/A014445.txt"),
        "A015448" => include_str!("../fixtures/A015448.txt"),
        "A033887" => include_str!("../fixtures/A033887.txt"),
        "A034807" => include_str!("../fixtures/A034807.txt"),
        "A049310" => include_str!("../fixtures/A049310.txt"),
        "A087960" => include_str!("../fixtures/A087960.txt"),
        "A127672" => include_str!("../fixtures/A127672.txt"),
        _ => return None,
    })
}

/// A fixture shipped with the crate.
pub fn bundled(a_number: &str) -> Result<OeisFixture> {
    let id = normalize_a_number(a_number).ok_or_else(|| Error::FixtureUnavailable(a_number.to_string()))?;
    let text = bundled_text(&id).ok_or_else(|| Error::FixtureUnavailable(id.clone()))?;
    parse_fixture(&id, text, Provenance::Bundled)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn parses_both_layouts() {
        let plain = parse_fixture("A1", "# c\n1\n\n-1, \n 5\n", Provenance::Cached).unwrap();
        assert_eq!(plain.terms, ints(&[1, -1, 5]));
        assert_eq!(plain.offset, 0);
        let bfile = parse_fixture("A2", "3 8\n4,13\n5\t21\n", Provenance::Fetched).unwrap();
        assert_eq!(bfile.terms, ints(&[8, 13, 21]));
        assert_eq!(bfile.offset, 3);
        let big = parse_fixture("A3", "123456789012345678901234567890\n", Provenance::Bundled).unwrap();
        assert_eq!(big.terms[0].to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn rejects_malformed_lines() {
        assert_eq!(
            parse_fixture("A1", "1\nx\n", Provenance::Bundled),
            Err(Error::MalformedFixture { line: 2, text: "x".into() })
        );
        assert!(parse_fixture("A1", "1 2 3\n", Provenance::Bundled).is_err());
        assert!(parse_fixture("A1", "0 1\n2 5\n", Provenance::Bundled).is_err());
    }

    #[test]
    fn a_number_normalization() {
        assert_eq!(normalize_a_number("a45").as_deref(), Some("A000045"));
        assert_eq!(normalize_a_number("A014445").as_deref(), Some("A014445"));
        assert_eq!(normalize_a_number("B1"), None);
        assert_eq!(normalize_a_number("A1234567"), None);
    }

    #[test]
    fn bundled_fixtures_load() {
        for id in BUNDLED {
            let f = bundled(id).unwrap();
            assert!(f.terms.len() >= 20, "{id}");
            assert_eq!(f.provenance, Provenance::Bundled);
        }
        let fib = bundled("A000045").unwrap();
        assert_eq!(&fib.terms[..8], &ints(&[0, 1, 1, 2, 3, 5, 8, 13])[..]);
        assert_eq!(fib.terms[40], BigInt::from(102334155));
        assert_eq!(bundled("A999999"), Err(Error::FixtureUnavailable("A999999".into())));
    }

    #[test]
    fn match_length_counts_prefix() {
        let f = parse_fixture("A1", "1\n2\n3\n", Provenance::Bundled).unwrap();
        assert_eq!(f.match_length(&ints(&[1, 2, 4])), 2);
        assert_eq!(f.match_length(&ints(&[1, 2, 3, 4])), 3);
    }
}
