//! The `.biset` format.
//!
//! ```text
//! left: c2.smg
//! right: c2.smg
//! points: e g
//! lact:
//! g e = g
//! ...
//! ract:
//! e g = g
//! ...
//! innS:
//! e g = g
//! ...
//! innT:
//! ...
//! ```
//! `lact:` lines read `s x = y`, `ract:` lines `x t = y`, and the pairing
//! sections `x y = value`. Every table must be complete. Paths are relative
//! to the `.biset` file.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{BisetError, EquivalenceBiset};
use crate::semigroup::format::{content_lines, syntax, valid_name};
use crate::semigroup::{InverseSemigroup, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum BisetParseError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Biset(#[from] BisetError),
}

/// The `left:` and `right:` semigroup paths.
pub fn biset_paths(text: &str) -> Result<(String, String), ParseError> {
    let mut left = None;
    let mut right = None;
    for (_, line) in content_lines(text) {
        if let Some(p) = line.strip_prefix("left:") {
            left = Some(p.trim().to_string());
        } else if let Some(p) = line.strip_prefix("right:") {
            right = Some(p.trim().to_string());
        }
    }
    Ok((
        left.ok_or_else(|| syntax(0, "missing `left:`"))?,
        right.ok_or_else(|| syntax(0, "missing `right:`"))?,
    ))
}

#[derive(Clone, Copy, PartialEq)]
enum Table {
    Lact,
    Ract,
    InnS,
    InnT,
}

pub fn parse_biset(
    text: &str,
    s: &InverseSemigroup,
    t: &InverseSemigroup,
) -> Result<EquivalenceBiset, BisetParseError> {
    let mut points: Option<Vec<String>> = None;
    let mut entries: HashMap<(u8, usize, usize), usize> = HashMap::new();
    let mut table = None;
    for (ln, line) in content_lines(text) {
        if line.starts_with("left:") || line.starts_with("right:") {
            continue;
        }
        if let Some(rest) = line.strip_prefix("points:") {
            let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
            if let Some(bad) = names.iter().find(|n| !valid_name(n)) {
                return Err(syntax(ln, format!("invalid point name `{bad}`")).into());
            }
            points = Some(names);
            continue;
        }
        let header = match line {
            "lact:" => Some(Table::Lact),
            "ract:" => Some(Table::Ract),
            "innS:" => Some(Table::InnS),
            "innT:" => Some(Table::InnT),
            _ => None,
        };
        if header.is_some() {
            table = header;
            continue;
        }
        let pts = points
            .as_ref()
            .ok_or_else(|| syntax(ln, "`points:` must precede the tables"))?;
        let point = |n: &str| {
            pts.iter()
                .position(|p| p == n)
                .ok_or_else(|| syntax(ln, format!("unknown point `{n}`")))
        };
        let elem = |g: &InverseSemigroup, n: &str| {
            g.index_of(n)
                .ok_or_else(|| syntax(ln, format!("unknown element `{n}`")))
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [a, b, "=", c] = tokens[..] else {
            return Err(syntax(ln, "expected `a b = c`").into());
        };
        let (key, value) = match table {
            Some(Table::Lact) => ((0, elem(s, a)?, point(b)?), point(c)?),
            Some(Table::Ract) => ((1, point(a)?, elem(t, b)?), point(c)?),
            Some(Table::InnS) => ((2, point(a)?, point(b)?), elem(s, c)?),
            Some(Table::InnT) => ((3, point(a)?, point(b)?), elem(t, c)?),
            None => return Err(syntax(ln, "expected a section header").into()),
        };
        if entries.insert(key, value).is_some() {
            return Err(syntax(ln, format!("entry `{a} {b}` given twice")).into());
        }
    }
    let points = points.ok_or_else(|| syntax(0, "missing `points:`"))?;
    let k = points.len();
    let lookup = |key: (u8, usize, usize)| {
        entries
            .get(&key)
            .copied()
            .ok_or_else(|| syntax(0, "incomplete table"))
    };
    let mut tables: [Vec<usize>; 4] = Default::default();
    for a in s.elements() {
        for x in 0..k {
            tables[0].push(lookup((0, a, x))?);
        }
    }
    for x in 0..k {
        for c in t.elements() {
            tables[1].push(lookup((1, x, c))?);
        }
    }
    for which in [2u8, 3] {
        for x in 0..k {
            for y in 0..k {
                tables[which as usize].push(lookup((which, x, y))?);
            }
        }
    }
    let [lact, ract, inn_s, inn_t] = tables;
    Ok(EquivalenceBiset::new(
        s.clone(),
        t.clone(),
        points,
        lact,
        ract,
        inn_s,
        inn_t,
    )?)
}

pub fn write_biset(b: &EquivalenceBiset, left: &str, right: &str) -> String {
    let (s, t) = (&b.s, &b.t);
    let k = b.len();
    let mut out = String::new();
    writeln!(out, "left: {left}").unwrap();
    writeln!(out, "right: {right}").unwrap();
    writeln!(out, "points: {}", b.points.join(" ")).unwrap();
    out.push_str("lact:\n");
    for a in s.elements() {
        for x in 0..k {
            writeln!(
                out,
                "{} {} = {}",
                s.name(a),
                b.point(x),
                b.point(b.left(a, x))
            )
            .unwrap();
        }
    }
    out.push_str("ract:\n");
    for x in 0..k {
        for c in t.elements() {
            writeln!(
                out,
                "{} {} = {}",
                b.point(x),
                t.name(c),
                b.point(b.right(x, c))
            )
            .unwrap();
        }
    }
    out.push_str("innS:\n");
    for x in 0..k {
        for y in 0..k {
            writeln!(
                out,
                "{} {} = {}",
                b.point(x),
                b.point(y),
                s.name(b.inner_s(x, y))
            )
            .unwrap();
        }
    }
    out.push_str("innT:\n");
    for x in 0..k {
        for y in 0..k {
            writeln!(
                out,
                "{} {} = {}",
                b.point(x),
                b.point(y),
                t.name(b.inner_t(x, y))
            )
            .unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biset::{biset_from_regular_enlargement, identity_biset};
    use crate::semigroup::*;

    #[test]
    fn round_trip() {
        let s = brandt(&trivial_group(), 2).unwrap();
        let b = identity_biset(&s);
        let text = write_biset(&b, "b12.smg", "b12.smg");
        assert_eq!(
            biset_paths(&text).unwrap(),
            ("b12.smg".into(), "b12.smg".into())
        );
        assert_eq!(parse_biset(&text, &s, &s).unwrap(), b);
    }

    #[test]
    fn round_trip_with_angle_point_names() {
        let r = brandt(&trivial_group(), 2).unwrap();
        let corner = r.subset([r.index_of("(1,1)").unwrap(), r.index_of("0").unwrap()]);
        let b = biset_from_regular_enlargement(&r, &corner, &r.full_set()).unwrap();
        let text = write_biset(&b, "s.smg", "t.smg");
        let back = parse_biset(&text, &b.s, &b.t).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn incomplete_table_rejected() {
        let g = cyclic_group(2).unwrap();
        let text = "left: a\nright: a\npoints: p\nlact:\ne p = p\n";
        assert!(matches!(
            parse_biset(text, &g, &g),
            Err(BisetParseError::Syntax(_))
        ));
    }
}
