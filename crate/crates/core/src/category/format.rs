//! The `.cat` format.
//!
//! ```text
//! objects: a b
//! morphisms:
//! 1a : a -> a
//! 1b : b -> b
//! f : a -> b
//! compose:
//! 1a . 1a = 1a
//! f . 1a = f
//! 1b . f = f
//! 1b . 1b = 1b
//! ```
//! Every composable pair must appear under `compose:`. Identities are the
//! endomorphisms acting as two-sided units in that table.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{CategoryError, FiniteCategory, Morphism, UNDEFINED};
use crate::semigroup::format::{content_lines, syntax, valid_name};
use crate::semigroup::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum CategoryParseError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Category(#[from] CategoryError),
}

#[derive(PartialEq)]
enum Section {
    None,
    Morphisms,
    Compose,
}

pub fn parse_category(text: &str) -> Result<FiniteCategory, CategoryParseError> {
    let mut objects: Option<Vec<String>> = None;
    let mut morphisms: Vec<Morphism> = Vec::new();
    let mut mor_index: HashMap<String, usize> = HashMap::new();
    let mut comp: HashMap<(usize, usize), usize> = HashMap::new();
    let mut section = Section::None;
    for (ln, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix("objects:") {
            let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
            if let Some(bad) = names.iter().find(|n| !valid_name(n)) {
                return Err(syntax(ln, format!("invalid object name `{bad}`")).into());
            }
            objects = Some(names);
            section = Section::None;
            continue;
        }
        if line == "morphisms:" {
            section = Section::Morphisms;
            continue;
        }
        if line == "compose:" {
            section = Section::Compose;
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
        match section {
            Section::Morphisms => {
                let tokens: Vec<&str> = line.split_whitespace().collect();
                let [label, ":", dom, "->", cod] = tokens[..] else {
                    return Err(syntax(ln, "expected `label : dom -> cod`").into());
                };
                if !valid_name(label) || mor_index.contains_key(label) {
                    return Err(syntax(ln, format!("invalid or duplicate label `{label}`")).into());
                }
                mor_index.insert(label.to_string(), morphisms.len());
                morphisms.push(Morphism {
                    dom: obj(dom)?,
                    cod: obj(cod)?,
                    label: label.to_string(),
                });
            }
            Section::Compose => {
                let tokens: Vec<&str> = line.split_whitespace().collect();
                let [g, ".", f, "=", h] = tokens[..] else {
                    return Err(syntax(ln, "expected `g . f = h`").into());
                };
                let mor = |name: &str| {
                    mor_index
                        .get(name)
                        .copied()
                        .ok_or_else(|| syntax(ln, format!("unknown morphism `{name}`")))
                };
                if comp.insert((mor(g)?, mor(f)?), mor(h)?).is_some() {
                    return Err(syntax(ln, format!("composite {g} . {f} given twice")).into());
                }
            }
            Section::None => return Err(syntax(ln, "expected a section header").into()),
        }
    }
    let objects = objects.ok_or_else(|| syntax(0, "missing `objects:`"))?;
    for f in 0..morphisms.len() {
        for g in 0..morphisms.len() {
            if morphisms[f].cod == morphisms[g].dom && !comp.contains_key(&(g, f)) {
                return Err(syntax(
                    0,
                    format!(
                        "missing composite {} . {}",
                        morphisms[g].label, morphisms[f].label
                    ),
                )
                .into());
            }
        }
    }
    let identities = (0..objects.len())
        .map(|a| {
            (0..morphisms.len())
                .find(|&u| {
                    morphisms[u].dom == a
                        && morphisms[u].cod == a
                        && (0..morphisms.len()).all(|f| {
                            (morphisms[f].cod != a || comp[&(u, f)] == f)
                                && (morphisms[f].dom != a || comp[&(f, u)] == f)
                        })
                })
                .ok_or_else(|| CategoryError::MissingIdentity(objects[a].clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FiniteCategory::new(
        objects,
        morphisms,
        identities,
        |g, f| comp.get(&(g, f)).copied().unwrap_or(UNDEFINED),
    )?)
}

pub fn write_category(c: &FiniteCategory) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "objects: {}", c.objects().join(" "));
    let _ = writeln!(out, "morphisms:");
    for m in c.morphisms() {
        let _ = writeln!(
            out,
            "{} : {} -> {}",
            m.label,
            c.object_label(m.dom),
            c.object_label(m.cod)
        );
    }
    let _ = writeln!(out, "compose:");
    for g in 0..c.morphism_count() {
        for f in c.precomposable(g) {
            let h = c.compose(g, f).unwrap();
            let _ = writeln!(out, "{} . {} = {}", c.label(g), c.label(f), c.label(h));
        }
    }
    out
}
