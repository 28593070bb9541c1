//! The `.ogpd` format.
//!
//! ```text
//! objects: e z
//! z <= e
//! arrows:
//! 1e : e -> e
//! 1z : z -> z
//! compose:
//! 1e . 1e = 1e
//! 1z . 1z = 1z
//! order:
//! inverse:
//! 1e^-1 = 1e
//! 1z^-1 = 1z
//! ```
//! Object order lines relate the identities; `order:` lines relate arrows.
//! Both are closed reflexively and transitively. Identities are the
//! idempotent arrows. Without an `inverse:` section inverses are read off
//! the composition table.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{ArrowData, GroupoidError, OrderedGroupoid, UNDEFINED};
use crate::semigroup::format::{content_lines, syntax, valid_name};
use crate::semigroup::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum GroupoidParseError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
}

#[derive(PartialEq)]
enum Section {
    Objects,
    Arrows,
    Compose,
    Order,
    Inverse,
}

pub fn parse_groupoid(text: &str) -> Result<OrderedGroupoid, GroupoidParseError> {
    let mut objects: Option<Vec<String>> = None;
    let mut object_order: Vec<(usize, usize)> = Vec::new();
    let mut arrows: Vec<ArrowData> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut comp: HashMap<(usize, usize), usize> = HashMap::new();
    let mut order: Vec<(usize, usize)> = Vec::new();
    let mut inverse: HashMap<usize, usize> = HashMap::new();
    let mut saw_inverse = false;
    let mut section = None;
    for (ln, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix("objects:") {
            let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
            if let Some(bad) = names.iter().find(|n| !valid_name(n)) {
                return Err(syntax(ln, format!("invalid object name `{bad}`")).into());
            }
            objects = Some(names);
            section = Some(Section::Objects);
            continue;
        }
        let header = match line {
            "arrows:" => Some(Section::Arrows),
            "compose:" => Some(Section::Compose),
            "order:" => Some(Section::Order),
            "inverse:" => Some(Section::Inverse),
            _ => None,
        };
        if let Some(h) = header {
            saw_inverse |= h == Section::Inverse;
            section = Some(h);
            continue;
        }
        let objs = objects
            .as_ref()
            .ok_or_else(|| syntax(ln, "`objects:` must come first"))?;
        let obj = |name: &str| {
            objs.iter()
                .position(|o| o == name)
                .ok_or_else(|| syntax(ln, format!("unknown object `{name}`")))
        };
        let arrow = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| syntax(ln, format!("unknown arrow `{name}`")))
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match section {
            Some(Section::Objects) => {
                let [a, "<=", b] = tokens[..] else {
                    return Err(syntax(ln, "expected `e <= f`").into());
                };
                object_order.push((obj(a)?, obj(b)?));
            }
            Some(Section::Arrows) => {
                let [label, ":", dom, "->", cod] = tokens[..] else {
                    return Err(syntax(ln, "expected `g : e -> f`").into());
                };
                if !valid_name(label) || index.contains_key(label) {
                    return Err(syntax(ln, format!("invalid or duplicate arrow `{label}`")).into());
                }
                index.insert(label.to_string(), arrows.len());
                arrows.push(ArrowData {
                    dom: obj(dom)?,
                    cod: obj(cod)?,
                    label: label.to_string(),
                });
            }
            Some(Section::Compose) => {
                let [g, ".", f, "=", h] = tokens[..] else {
                    return Err(syntax(ln, "expected `g . f = h`").into());
                };
                if comp.insert((arrow(g)?, arrow(f)?), arrow(h)?).is_some() {
                    return Err(syntax(ln, format!("composite {g} . {f} given twice")).into());
                }
            }
            Some(Section::Order) => {
                let [a, "<=", b] = tokens[..] else {
                    return Err(syntax(ln, "expected `g <= h`").into());
                };
                order.push((arrow(a)?, arrow(b)?));
            }
            Some(Section::Inverse) => {
                let [a, "=", b] = tokens[..] else {
                    return Err(syntax(ln, "expected `g^-1 = h`").into());
                };
                let a = a
                    .strip_suffix("^-1")
                    .ok_or_else(|| syntax(ln, "expected `g^-1 = h`"))?;
                inverse.insert(arrow(a)?, arrow(b)?);
            }
            None => return Err(syntax(ln, "expected a section header").into()),
        }
    }
    let objects = objects.ok_or_else(|| syntax(0, "missing `objects:`"))?;
    let na = arrows.len();
    for f in 0..na {
        for g in 0..na {
            if arrows[g].dom == arrows[f].cod && !comp.contains_key(&(g, f)) {
                return Err(syntax(
                    0,
                    format!(
                        "missing composite {} . {}",
                        arrows[g].label, arrows[f].label
                    ),
                )
                .into());
            }
        }
    }
    let identities = (0..objects.len())
        .map(|a| {
            (0..na)
                .find(|&i| {
                    arrows[i].dom == a && arrows[i].cod == a && comp.get(&(i, i)) == Some(&i)
                })
                .ok_or_else(|| syntax(0, format!("object `{}` has no identity", objects[a])))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let inv = (0..na)
        .map(|f| {
            let found = if saw_inverse {
                inverse.get(&f).copied()
            } else {
                (0..na).find(|&g| comp.get(&(g, f)) == Some(&identities[arrows[f].dom]))
            };
            found.ok_or_else(|| syntax(0, format!("arrow `{}` has no inverse", arrows[f].label)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut leq = vec![false; na * na];
    for x in 0..na {
        leq[x * na + x] = true;
    }
    for &(x, y) in &order {
        leq[x * na + y] = true;
    }
    for &(a, b) in &object_order {
        leq[identities[a] * na + identities[b]] = true;
    }
    for k in 0..na {
        for x in 0..na {
            if leq[x * na + k] {
                for y in 0..na {
                    if leq[k * na + y] {
                        leq[x * na + y] = true;
                    }
                }
            }
        }
    }
    Ok(OrderedGroupoid::new(
        objects,
        arrows,
        identities,
        |g, f| comp.get(&(g, f)).copied().unwrap_or(UNDEFINED),
        inv,
        |x, y| leq[x * na + y],
    )?)
}

pub fn write_groupoid(g: &OrderedGroupoid) -> String {
    let mut out = String::new();
    writeln!(out, "objects: {}", g.objects().join(" ")).unwrap();
    let (no, na) = (g.object_count(), g.arrow_count());
    for a in 0..no {
        for b in 0..no {
            if a != b && g.object_leq(a, b) {
                writeln!(out, "{} <= {}", g.objects()[a], g.objects()[b]).unwrap();
            }
        }
    }
    out.push_str("arrows:\n");
    for a in g.arrows() {
        writeln!(
            out,
            "{} : {} -> {}",
            a.label,
            g.objects()[a.dom],
            g.objects()[a.cod]
        )
        .unwrap();
    }
    out.push_str("compose:\n");
    for x in 0..na {
        for y in 0..na {
            if let Some(xy) = g.compose(x, y) {
                writeln!(out, "{} . {} = {}", g.label(x), g.label(y), g.label(xy)).unwrap();
            }
        }
    }
    out.push_str("order:\n");
    let is_identity = |x| g.identity(g.dom(x)) == x;
    for x in 0..na {
        for y in 0..na {
            if x != y && g.leq(x, y) && !(is_identity(x) && is_identity(y)) {
                writeln!(out, "{} <= {}", g.label(x), g.label(y)).unwrap();
            }
        }
    }
    out.push_str("inverse:\n");
    for x in 0..na {
        writeln!(out, "{}^-1 = {}", g.label(x), g.label(g.inverse(x))).unwrap();
    }
    out
}
