//! The `.act` format.
//!
//! ```text
//! semigroup: chain2.smg
//! points: a b
//! act:
//! a . e0 = a
//! a . e1 = b
//! b . e0 = b
//! b . e1 = b
//! anchor:
//! a -> e0
//! b -> e1
//! ```
//! The semigroup path is resolved relative to the `.act` file by the caller.
//! Every pair `(x, s)` needs an `act:` line; `anchor:` is optional and makes
//! the action étale.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{ActionError, RightAction};
use crate::semigroup::format::{content_lines, syntax, valid_name};
use crate::semigroup::{Elem, FiniteSemigroup, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum ActionParseError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Action(#[from] ActionError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionFile {
    pub semigroup: String,
    pub action: RightAction,
    pub anchor: Option<Vec<Elem>>,
}

impl ActionFile {
    /// The `semigroup:` path, needed before the rest can be parsed.
    pub fn semigroup_path(text: &str) -> Result<String, ParseError> {
        content_lines(text)
            .find_map(|(_, l)| l.strip_prefix("semigroup:").map(|p| p.trim().to_string()))
            .filter(|p| !p.is_empty())
            .ok_or_else(|| syntax(0, "missing `semigroup:` line"))
    }
}

#[derive(PartialEq)]
enum Section {
    None,
    Act,
    Anchor,
}

pub fn parse_action(text: &str, s: &FiniteSemigroup) -> Result<ActionFile, ActionParseError> {
    let semigroup = ActionFile::semigroup_path(text)?;
    let mut points: Option<Vec<String>> = None;
    let mut act: HashMap<(usize, Elem), usize> = HashMap::new();
    let mut anchor: HashMap<usize, Elem> = HashMap::new();
    let mut section = Section::None;
    let elem = |ln: usize, name: &str| {
        s.index_of(name)
            .ok_or_else(|| syntax(ln, format!("unknown element `{name}`")))
    };
    for (ln, line) in content_lines(text) {
        if line.starts_with("semigroup:") {
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
        match line {
            "act:" => {
                section = Section::Act;
                continue;
            }
            "anchor:" => {
                section = Section::Anchor;
                continue;
            }
            _ => {}
        }
        let pts = points
            .as_ref()
            .ok_or_else(|| syntax(ln, "`points:` must come before tables"))?;
        let point = |name: &str| {
            pts.iter()
                .position(|p| p == name)
                .ok_or_else(|| syntax(ln, format!("unknown point `{name}`")))
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match section {
            Section::Act => {
                let [x, ".", a, "=", y] = tokens[..] else {
                    return Err(syntax(ln, "expected `x . s = y`").into());
                };
                if act.insert((point(x)?, elem(ln, a)?), point(y)?).is_some() {
                    return Err(syntax(ln, format!("{x} . {a} given twice")).into());
                }
            }
            Section::Anchor => {
                let [x, "->", e] = tokens[..] else {
                    return Err(syntax(ln, "expected `x -> e`").into());
                };
                if anchor.insert(point(x)?, elem(ln, e)?).is_some() {
                    return Err(syntax(ln, format!("anchor of {x} given twice")).into());
                }
            }
            Section::None => return Err(syntax(ln, "expected a section header").into()),
        }
    }
    let points = points.ok_or_else(|| syntax(0, "missing `points:`"))?;
    let mut table = Vec::with_capacity(points.len() * s.order());
    for (x, name) in points.iter().enumerate() {
        for a in s.elements() {
            let y = act
                .get(&(x, a))
                .ok_or_else(|| syntax(0, format!("missing `{name} . {}`", s.name(a))))?;
            table.push(*y);
        }
    }
    let anchor = if anchor.is_empty() {
        None
    } else {
        Some(
            (0..points.len())
                .map(|x| {
                    anchor
                        .get(&x)
                        .copied()
                        .ok_or_else(|| syntax(0, format!("missing anchor of {}", points[x])))
                })
                .collect::<Result<Vec<_>, _>>()?,
        )
    };
    let action = RightAction::new(points, s, table)?;
    Ok(ActionFile {
        semigroup,
        action,
        anchor,
    })
}

pub fn write_action(file: &ActionFile, s: &FiniteSemigroup) -> String {
    let x = &file.action;
    let mut out = String::new();
    let _ = writeln!(out, "semigroup: {}", file.semigroup);
    let _ = writeln!(out, "points: {}", x.points().join(" "));
    let _ = writeln!(out, "act:");
    for p in 0..x.len() {
        for a in s.elements() {
            let _ = writeln!(
                out,
                "{} . {} = {}",
                x.point(p),
                s.name(a),
                x.point(x.act(p, a))
            );
        }
    }
    if let Some(anchor) = &file.anchor {
        let _ = writeln!(out, "anchor:");
        for (p, &e) in anchor.iter().enumerate() {
            let _ = writeln!(out, "{} -> {}", x.point(p), s.name(e));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::munn_action;
    use crate::semigroup::*;

    #[test]
    fn round_trips_munn() {
        let s = brandt(&trivial_group(), 2).unwrap();
        let m = munn_action(&s);
        let file = ActionFile {
            semigroup: "b12.smg".into(),
            action: m.base.clone(),
            anchor: Some(m.anchor.clone()),
        };
        let text = write_action(&file, &s);
        assert_eq!(ActionFile::semigroup_path(&text).unwrap(), "b12.smg");
        assert_eq!(parse_action(&text, &s).unwrap(), file);
    }

    #[test]
    fn rejects_incomplete_tables() {
        let s = chain_semilattice(2).unwrap();
        let text = "semigroup: c.smg\npoints: a\nact:\na . e0 = a\n";
        assert!(matches!(
            parse_action(text, &s),
            Err(ActionParseError::Syntax(_))
        ));
        let bad = "semigroup: c.smg\npoints: a\nact:\na . e0 = a\na . q = a\n";
        assert!(parse_action(bad, &s).is_err());
        assert!(ActionFile::semigroup_path("points: a\n").is_err());
    }
}
