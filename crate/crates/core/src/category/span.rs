//! Pullbacks and the span category of a category with pullbacks.

use std::collections::HashMap;

use super::constructions::{c_triples, l_pairs};
use super::{
    cauchy_completion, left_cancellative_category, CategoryError, FiniteCategory, Functor, Mor, Obj,
};
use crate::semigroup::InverseSemigroup;

/// A terminal cone `(p, q)` over the cospan `f, g`, so that `f p = g q`.
/// Cones are scanned in index order and the first terminal one is returned.
pub fn pullback(c: &FiniteCategory, f: Mor, g: Mor) -> Result<Option<(Mor, Mor)>, CategoryError> {
    if c.cod(f) != c.cod(g) {
        return Err(CategoryError::CospanMismatch);
    }
    let mut cones = Vec::new();
    for x in 0..c.object_count() {
        for &p in c.hom(x, c.dom(f)) {
            for &q in c.hom(x, c.dom(g)) {
                if c.compose(f, p) == c.compose(g, q) {
                    cones.push((p, q));
                }
            }
        }
    }
    let terminal = cones.iter().copied().find(|&(p, q)| {
        let apex = c.dom(p);
        cones.iter().all(|&(p2, q2)| {
            c.hom(c.dom(p2), apex)
                .iter()
                .filter(|&&u| c.compose(p, u) == Some(p2) && c.compose(q, u) == Some(q2))
                .count()
                == 1
        })
    });
    Ok(terminal)
}

/// `Span(L)`: morphisms `a -> b` are spans `a <- x -> b` up to isomorphism of
/// the apex, each stored as its least `(apex, left, right)` representative.
#[derive(Debug, Clone)]
pub struct SpanCategory {
    pub category: FiniteCategory,
    /// `(apex, left leg, right leg)` for each morphism, legs in `L`.
    pub spans: Vec<(Obj, Mor, Mor)>,
}

type Span = (Obj, Mor, Mor);

fn canonical(l: &FiniteCategory, (x, left, right): Span) -> Span {
    let mut best = (x, left, right);
    for y in 0..l.object_count() {
        for &u in l.hom(y, x) {
            if l.is_iso(u) {
                let cand = (y, l.compose(left, u).unwrap(), l.compose(right, u).unwrap());
                best = best.min(cand);
            }
        }
    }
    best
}

pub fn span_category(l: &FiniteCategory) -> Result<SpanCategory, CategoryError> {
    let mut spans: Vec<Span> = Vec::new();
    let mut index: HashMap<Span, usize> = HashMap::new();
    let mut morphisms = Vec::new();
    for a in 0..l.object_count() {
        for b in 0..l.object_count() {
            for x in 0..l.object_count() {
                for &left in l.hom(x, a) {
                    for &right in l.hom(x, b) {
                        let span = canonical(l, (x, left, right));
                        if span == (x, left, right) {
                            index.insert(span, spans.len());
                            spans.push(span);
                            morphisms.push(super::Morphism {
                                dom: a,
                                cod: b,
                                label: format!("<{}|{}>", l.label(left), l.label(right)),
                            });
                        }
                    }
                }
            }
        }
    }
    let mut table = HashMap::new();
    for (i, &(_, _, r1)) in spans.iter().enumerate() {
        for (j, &(_, l2, _)) in spans.iter().enumerate() {
            if l.cod(r1) == l.cod(l2) {
                let (p, q) = pullback(l, r1, l2)?.ok_or_else(|| {
                    CategoryError::NoPullbacks(l.label(r1).to_string(), l.label(l2).to_string())
                })?;
                table.insert((j, i), (p, q));
            }
        }
    }
    let identities: Vec<Mor> = (0..l.object_count())
        .map(|a| {
            let id = l.identity(a);
            index[&canonical(l, (a, id, id))]
        })
        .collect();
    let category = FiniteCategory::new(
        (0..l.object_count())
            .map(|a| l.object_label(a).to_string())
            .collect(),
        morphisms,
        identities,
        |g, f| {
            let (p, q) = table[&(g, f)];
            let (_, left, _) = spans[f];
            let (_, _, right) = spans[g];
            let composite = (
                l.dom(p),
                l.compose(left, p).unwrap(),
                l.compose(right, q).unwrap(),
            );
            index[&canonical(l, composite)]
        },
    )?;
    Ok(SpanCategory { category, spans })
}

/// Builds `C(S) -> Span(L(S))`, `(e, s, d) |-> (d <- s*s -> e)` with legs
/// `(d, s*s)` and `(e, s)`, and the reverse `(d, t), (e, s) |-> (e, st*, d)`,
/// and checks that both are functors whose composites are identities.
pub fn cauchy_vs_span(s: &InverseSemigroup) -> Result<bool, CategoryError> {
    let c = cauchy_completion(s);
    let l = left_cancellative_category(s);
    let sp = span_category(&l)?;
    let pairs = l_pairs(s);
    let triples = c_triples(s);
    let pair_index: HashMap<_, _> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let triple_index: HashMap<_, _> = triples.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let span_index: HashMap<_, _> = sp.spans.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let obj_of: HashMap<_, _> = s
        .idempotent_list()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();

    let phi_mor: Vec<Mor> = triples
        .iter()
        .map(|&(e, x, d)| {
            let apex = s.dom(x);
            let span = (obj_of[&apex], pair_index[&(d, apex)], pair_index[&(e, x)]);
            span_index[&canonical(&l, span)]
        })
        .collect();
    let psi_mor: Vec<Mor> = sp
        .spans
        .iter()
        .map(|&(_, left, right)| {
            let (d, t) = pairs[left];
            let (e, x) = pairs[right];
            triple_index[&(e, s.mul(x, s.star(t)), d)]
        })
        .collect();
    let objects: Vec<Obj> = (0..c.object_count()).collect();
    let phi = Functor {
        obj_map: objects.clone(),
        mor_map: phi_mor,
    };
    let psi = Functor {
        obj_map: objects,
        mor_map: psi_mor,
    };
    Ok(phi.is_valid(&c, &sp.category)?
        && psi.is_valid(&sp.category, &c)?
        && phi.then(&psi) == Functor::identity(&c)
        && psi.then(&phi) == Functor::identity(&sp.category))
}
