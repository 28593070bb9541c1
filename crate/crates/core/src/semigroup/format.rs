//! The `.smg` table format.
//!
//! ```text
//! # comment
//! 2
//! e z
//! e z
//! z z
//! ```
//! Line one is the order `n`, line two the element names, then `n` rows of
//! names where row `i`, column `j` is the product of element `i` with `j`.

use std::fmt::Write as _;

use thiserror::Error;

use super::{FiniteSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

pub(crate) fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || "_()',".contains(c))
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub fn parse_semigroup(text: &str) -> Result<FiniteSemigroup, ParseError> {
    let mut lines = content_lines(text);
    let (ln, first) = lines.next().ok_or_else(|| syntax(0, "empty input"))?;
    let n: usize = first
        .parse()
        .map_err(|_| syntax(ln, format!("expected element count, found `{first}`")))?;
    if n == 0 {
        return Err(syntax(ln, "element count must be positive"));
    }
    let (ln, header) = lines
        .next()
        .ok_or_else(|| syntax(ln, "missing element names"))?;
    let names: Vec<String> = header.split_whitespace().map(String::from).collect();
    if names.len() != n {
        return Err(syntax(
            ln,
            format!("expected {n} names, found {}", names.len()),
        ));
    }
    if let Some(bad) = names.iter().find(|s| !valid_name(s)) {
        return Err(syntax(ln, format!("invalid element name `{bad}`")));
    }
    for (i, a) in names.iter().enumerate() {
        if names[..i].contains(a) {
            return Err(syntax(ln, format!("duplicate element name `{a}`")));
        }
    }
    let mut table = Vec::with_capacity(n * n);
    for row in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| syntax(0, format!("missing table row {}", row + 1)))?;
        let cells: Vec<&str> = line.split_whitespace().collect();
        if cells.len() != n {
            return Err(syntax(
                ln,
                format!("expected {n} entries, found {}", cells.len()),
            ));
        }
        for cell in cells {
            let idx = names
                .iter()
                .position(|s| s == cell)
                .ok_or_else(|| syntax(ln, format!("unknown element `{cell}`")))?;
            table.push(idx);
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(syntax(ln, "trailing content after table"));
    }
    Ok(FiniteSemigroup::new(names, table)?)
}

pub fn write_semigroup(s: &FiniteSemigroup) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", s.order());
    let _ = writeln!(out, "{}", s.names().join(" "));
    for a in s.elements() {
        let row: Vec<&str> = s.elements().map(|b| s.name(s.mul(a, b))).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::*;

    #[test]
    fn trivial() {
        let s = parse_semigroup("1\ne\ne\n").unwrap();
        assert_eq!(s.order(), 1);
    }

    #[test]
    fn two_chain_with_comments() {
        let s = parse_semigroup("# the 2-chain\n2\ne z  # names\n\ne z\nz z\n").unwrap();
        assert_eq!(s.idempotents(), vec![0, 1]);
        assert!(s.as_inverse().is_ok());
    }

    #[test]
    fn broken_associativity_reports_brute_force_triple() {
        // rows of the 2-chain swapped: a.x = z, z.x = x
        let text = "2\ne z\nz z\ne z\n";
        let table = [1usize, 1, 0, 1];
        let mul = |a: usize, b: usize| table[a * 2 + b];
        let brute = (0..8)
            .map(|k| (k >> 2, (k >> 1) & 1, k & 1))
            .find(|&(a, b, c)| mul(mul(a, b), c) != mul(a, mul(b, c)))
            .unwrap();
        match parse_semigroup(text) {
            Err(ParseError::Semigroup(SemigroupError::NotAssociative(f))) => {
                assert_eq!(f.triple, brute)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed() {
        assert!(matches!(
            parse_semigroup(""),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_semigroup("2\ne z\ne z\n"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_semigroup("1\ne\nq\n"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_semigroup("1\ne=\ne=\n"),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn writer_round_trips_brandt() {
        let b = brandt(&trivial_group(), 2).unwrap();
        let parsed = parse_semigroup(&write_semigroup(&b)).unwrap();
        assert_eq!(&parsed, b.semigroup());
    }
}
