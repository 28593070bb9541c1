//! Finite ordered groupoids: groupoids with a partial order on arrows whose
//! domain map is a discrete fibration.

mod format;
mod functor;

pub use format::{parse_groupoid, write_groupoid, GroupoidParseError};
pub use functor::{
    c_of_functor, is_local_isomorphism, l_of_functor, LocalIsoReport, OrderedFunctor,
};

use thiserror::Error;

use crate::category::{FiniteCategory, Morphism};
use crate::semigroup::InverseSemigroup;
use crate::semigroupoid::InverseSemigroupoid;

pub type Arrow = usize;
pub type Obj = usize;

const UNDEFINED: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupoidError {
    #[error("tables have the wrong shape")]
    Shape,
    #[error("not a groupoid: {0}")]
    NotAGroupoid(String),
    #[error("not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("order incompatible with the groupoid structure: {0}")]
    OrderIncompatible(String),
    #[error("restriction of {arrow} to {object} is {problem}")]
    NotADiscreteFibration {
        arrow: String,
        object: String,
        problem: &'static str,
    },
    #[error("object is not below the required end of the arrow")]
    NotBelow,
    #[error("more than one arrow restricts to the given object")]
    NotUnique,
    #[error("some down-set is not a meet semilattice")]
    NotPrincipallyInductive,
    #[error("arrow set is not a subgroupoid")]
    NotASubgroupoid,
    #[error("not an ordered functor: {0}")]
    NotAnOrderedFunctor(String),
    #[error("not an inverse semigroupoid: {0}")]
    NotInverseSemigroupoid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ArrowData {
    pub dom: Obj,
    pub cod: Obj,
    pub label: String,
}

/// `comp(g, f) = g . f` is defined iff `dom(g) = cod(f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGroupoid {
    objects: Vec<String>,
    arrows: Vec<ArrowData>,
    identities: Vec<Arrow>,
    comp: Vec<Arrow>,
    inv: Vec<Arrow>,
    leq: Vec<bool>,
}

impl OrderedGroupoid {
    /// Tabulates the composition and order and verifies every axiom.
    pub fn new(
        objects: Vec<String>,
        arrows: Vec<ArrowData>,
        identities: Vec<Arrow>,
        mut compose: impl FnMut(Arrow, Arrow) -> Arrow,
        inv: Vec<Arrow>,
        mut leq: impl FnMut(Arrow, Arrow) -> bool,
    ) -> Result<Self, GroupoidError> {
        let (no, na) = (objects.len(), arrows.len());
        if identities.len() != no
            || inv.len() != na
            || identities.iter().chain(&inv).any(|&a| a >= na)
            || arrows.iter().any(|a| a.dom >= no || a.cod >= no)
        {
            return Err(GroupoidError::Shape);
        }
        let mut comp = vec![UNDEFINED; na * na];
        for g in 0..na {
            for f in 0..na {
                if arrows[g].dom == arrows[f].cod {
                    let h = compose(g, f);
                    if h >= na {
                        return Err(GroupoidError::Shape);
                    }
                    comp[g * na + f] = h;
                }
            }
        }
        let leq = (0..na * na).map(|k| leq(k / na, k % na)).collect();
        let g = Self {
            objects,
            arrows,
            identities,
            comp,
            inv,
            leq,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<(), GroupoidError> {
        let na = self.arrows.len();
        let bad = |s: String| Err(GroupoidError::NotAGroupoid(s));
        for (a, &id) in self.identities.iter().enumerate() {
            if self.arrows[id].dom != a || self.arrows[id].cod != a {
                return bad(format!(
                    "identity of {} has wrong endpoints",
                    self.objects[a]
                ));
            }
        }
        for f in 0..na {
            let (d, c) = (self.dom(f), self.cod(f));
            if self.compose(self.identities[c], f) != Some(f)
                || self.compose(f, self.identities[d]) != Some(f)
            {
                return bad(format!("identity law fails at {}", self.label(f)));
            }
            let i = self.inv[f];
            if self.compose(i, f) != Some(self.identities[d])
                || self.compose(f, i) != Some(self.identities[c])
            {
                return bad(format!(
                    "{} is not inverse to {}",
                    self.label(i),
                    self.label(f)
                ));
            }
            for g in (0..na).filter(|&g| self.dom(g) == c) {
                let gf = self.compose(g, f).unwrap();
                if self.dom(gf) != d || self.cod(gf) != self.cod(g) {
                    return bad(format!(
                        "{} . {} has wrong endpoints",
                        self.label(g),
                        self.label(f)
                    ));
                }
                for h in (0..na).filter(|&h| self.dom(h) == self.cod(g)) {
                    let hg = self.compose(h, g).unwrap();
                    if self.compose(h, gf) != self.compose(hg, f) {
                        return bad(format!(
                            "associativity fails at ({}, {}, {})",
                            self.label(h),
                            self.label(g),
                            self.label(f)
                        ));
                    }
                }
            }
        }
        for x in 0..na {
            if !self.leq(x, x) {
                return Err(GroupoidError::NotAPartialOrder(format!(
                    "{} not below itself",
                    self.label(x)
                )));
            }
            for y in 0..na {
                if x != y && self.leq(x, y) && self.leq(y, x) {
                    return Err(GroupoidError::NotAPartialOrder(format!(
                        "{} and {} below each other",
                        self.label(x),
                        self.label(y)
                    )));
                }
                if !self.leq(x, y) {
                    continue;
                }
                for z in 0..na {
                    if self.leq(y, z) && !self.leq(x, z) {
                        return Err(GroupoidError::NotAPartialOrder(format!(
                            "not transitive at {}, {}, {}",
                            self.label(x),
                            self.label(y),
                            self.label(z)
                        )));
                    }
                }
                let (ix, iy) = (self.inv[x], self.inv[y]);
                if !self.leq(ix, iy) || !self.object_leq(self.dom(x), self.dom(y)) {
                    return Err(GroupoidError::OrderIncompatible(format!(
                        "{} <= {} but inverses or domains are not ordered",
                        self.label(x),
                        self.label(y)
                    )));
                }
                for u in (0..na).filter(|&u| self.cod(u) == self.dom(x)) {
                    for v in (0..na).filter(|&v| self.leq(u, v) && self.cod(v) == self.dom(y)) {
                        let (xu, yv) = (self.compose(x, u).unwrap(), self.compose(y, v).unwrap());
                        if !self.leq(xu, yv) {
                            return Err(GroupoidError::OrderIncompatible(format!(
                                "{} . {} not below {} . {}",
                                self.label(x),
                                self.label(u),
                                self.label(y),
                                self.label(v)
                            )));
                        }
                    }
                }
            }
        }
        for g in 0..na {
            for e in (0..self.objects.len()).filter(|&e| self.object_leq(e, self.dom(g))) {
                let count = (0..na)
                    .filter(|&h| self.leq(h, g) && self.dom(h) == e)
                    .count();
                if count != 1 {
                    return Err(GroupoidError::NotADiscreteFibration {
                        arrow: self.label(g).to_string(),
                        object: self.objects[e].clone(),
                        problem: if count == 0 { "missing" } else { "not unique" },
                    });
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[ArrowData] {
        &self.arrows
    }

    pub fn label(&self, g: Arrow) -> &str {
        &self.arrows[g].label
    }

    pub fn dom(&self, g: Arrow) -> Obj {
        self.arrows[g].dom
    }

    pub fn cod(&self, g: Arrow) -> Obj {
        self.arrows[g].cod
    }

    pub fn identity(&self, a: Obj) -> Arrow {
        self.identities[a]
    }

    pub fn inverse(&self, g: Arrow) -> Arrow {
        self.inv[g]
    }

    /// `g . f`, defined iff `dom(g) = cod(f)`.
    pub fn compose(&self, g: Arrow, f: Arrow) -> Option<Arrow> {
        let h = self.comp[g * self.arrows.len() + f];
        (h != UNDEFINED).then_some(h)
    }

    pub fn leq(&self, x: Arrow, y: Arrow) -> bool {
        self.leq[x * self.arrows.len() + y]
    }

    /// The object order, read off the identities.
    pub fn object_leq(&self, a: Obj, b: Obj) -> bool {
        self.leq(self.identities[a], self.identities[b])
    }

    fn unique_below(&self, g: Arrow, keep: impl Fn(Arrow) -> bool) -> Result<Arrow, GroupoidError> {
        let mut found = (0..self.arrows.len()).filter(|&h| self.leq(h, g) && keep(h));
        let h = found.next().ok_or(GroupoidError::NotBelow)?;
        if found.next().is_some() {
            return Err(GroupoidError::NotUnique);
        }
        Ok(h)
    }

    /// The unique `h <= g` with `dom(h) = e`.
    pub fn restriction(&self, e: Obj, g: Arrow) -> Result<Arrow, GroupoidError> {
        if !self.object_leq(e, self.dom(g)) {
            return Err(GroupoidError::NotBelow);
        }
        self.unique_below(g, |h| self.dom(h) == e)
    }

    /// The unique `h <= g` with `cod(h) = e`.
    pub fn corestriction(&self, g: Arrow, e: Obj) -> Result<Arrow, GroupoidError> {
        if !self.object_leq(e, self.cod(g)) {
            return Err(GroupoidError::NotBelow);
        }
        self.unique_below(g, |h| self.cod(h) == e)
    }

    /// Greatest lower bound in the object order.
    pub fn meet(&self, a: Obj, b: Obj) -> Option<Obj> {
        let lower: Vec<Obj> = (0..self.objects.len())
            .filter(|&c| self.object_leq(c, a) && self.object_leq(c, b))
            .collect();
        lower
            .iter()
            .copied()
            .find(|&m| lower.iter().all(|&c| self.object_leq(c, m)))
    }

    /// `g . h = (g | e)(e | h)` with `e = dom(g) /\ cod(h)`, absent when the
    /// meet does not exist.
    pub fn pseudoproduct(&self, g: Arrow, h: Arrow) -> Option<Arrow> {
        let e = self.meet(self.dom(g), self.cod(h))?;
        let left = self.restriction(e, g).ok()?;
        let right = self.corestriction(h, e).ok()?;
        self.compose(left, right)
    }

    /// Every down-set `e|` is a meet semilattice.
    pub fn is_principally_inductive(&self) -> bool {
        let n = self.objects.len();
        (0..n).all(|e| {
            let below: Vec<Obj> = (0..n).filter(|&a| self.object_leq(a, e)).collect();
            below
                .iter()
                .all(|&a| below.iter().all(|&b| self.meet(a, b).is_some()))
        })
    }

    /// The underlying groupoid as a category.
    pub fn as_category(&self) -> FiniteCategory {
        FiniteCategory::new(
            self.objects.clone(),
            self.arrows
                .iter()
                .map(|a| Morphism {
                    dom: a.dom,
                    cod: a.cod,
                    label: a.label.clone(),
                })
                .collect(),
            self.identities.clone(),
            |g, f| self.compose(g, f).unwrap(),
        )
        .expect("a groupoid is a category")
    }

    /// Full, an order ideal, and meeting every isomorphism class.
    pub fn enlargement_report(&self, sub: &[Arrow]) -> Result<EnlargementReport, GroupoidError> {
        let na = self.arrows.len();
        let mut member = vec![false; na];
        for &a in sub {
            if a >= na {
                return Err(GroupoidError::NotASubgroupoid);
            }
            member[a] = true;
        }
        let mut objs = vec![false; self.objects.len()];
        for &a in sub {
            objs[self.dom(a)] = true;
            objs[self.cod(a)] = true;
        }
        let closed = sub.iter().all(|&g| {
            member[self.inv[g]]
                && member[self.identities[self.dom(g)]]
                && sub
                    .iter()
                    .all(|&f| self.compose(g, f).is_none_or(|gf| member[gf]))
        });
        if !closed {
            return Err(GroupoidError::NotASubgroupoid);
        }
        let full = (0..na).all(|g| !(objs[self.dom(g)] && objs[self.cod(g)]) || member[g]);
        let order_ideal = (0..na).all(|x| member[x] || !sub.iter().any(|&y| self.leq(x, y)));
        let iso_dense =
            (0..self.objects.len()).all(|e| (0..na).any(|g| self.dom(g) == e && objs[self.cod(g)]));
        Ok(EnlargementReport {
            full,
            order_ideal,
            iso_dense,
        })
    }

    pub fn is_enlargement(&self, sub: &[Arrow]) -> Result<bool, GroupoidError> {
        Ok(self.enlargement_report(sub)?.holds())
    }

    /// The arrows of a groupoid disjoint union, with the two arrow embeddings.
    pub fn disjoint_union(
        a: &OrderedGroupoid,
        b: &OrderedGroupoid,
    ) -> (OrderedGroupoid, Vec<Arrow>, Vec<Arrow>) {
        let (oa, na) = (a.object_count(), a.arrow_count());
        let objects = a.objects.iter().chain(&b.objects).cloned().collect();
        let arrows = a
            .arrows
            .iter()
            .cloned()
            .chain(b.arrows.iter().map(|x| ArrowData {
                dom: x.dom + oa,
                cod: x.cod + oa,
                label: format!("{}'", x.label),
            }))
            .collect();
        let identities = a
            .identities
            .iter()
            .copied()
            .chain(b.identities.iter().map(|&i| i + na))
            .collect();
        let inv = a
            .inv
            .iter()
            .copied()
            .chain(b.inv.iter().map(|&i| i + na))
            .collect();
        let g = OrderedGroupoid::new(
            objects,
            arrows,
            identities,
            |g, f| {
                if g < na {
                    a.compose(g, f).unwrap()
                } else {
                    na + b.compose(g - na, f - na).unwrap()
                }
            },
            inv,
            |x, y| match (x < na, y < na) {
                (true, true) => a.leq(x, y),
                (false, false) => b.leq(x - na, y - na),
                _ => false,
            },
        )
        .expect("disjoint union of ordered groupoids");
        (g, (0..na).collect(), (na..na + b.arrow_count()).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct EnlargementReport {
    pub full: bool,
    pub order_ideal: bool,
    pub iso_dense: bool,
}

impl EnlargementReport {
    pub fn holds(&self) -> bool {
        self.full && self.order_ideal && self.iso_dense
    }
}

/// Arrows are the elements, `s : s*s -> ss*`, with the restricted product
/// and the natural partial order `s <= t` iff `t(s*s)` is defined and equals `s`.
pub fn ordered_groupoid_of(r: &InverseSemigroupoid) -> Result<OrderedGroupoid, GroupoidError> {
    let idem = r.idempotents();
    let obj_of = |e| idem.iter().position(|&f| f == e).unwrap();
    let arrows = (0..r.order())
        .map(|s| ArrowData {
            dom: obj_of(r.dom(s)),
            cod: obj_of(r.ran(s)),
            label: r.name(s).to_string(),
        })
        .collect();
    OrderedGroupoid::new(
        idem.iter().map(|&e| r.name(e).to_string()).collect(),
        arrows,
        idem.to_vec(),
        |g, f| r.mul(g, f).unwrap_or(UNDEFINED),
        (0..r.order()).map(|s| r.star(s)).collect(),
        |x, y| r.natural_leq(x, y),
    )
    .map_err(|e| GroupoidError::NotInverseSemigroupoid(e.to_string()))
}

/// The inductive groupoid `G(S)`.
pub fn inductive_groupoid_of(s: &InverseSemigroup) -> OrderedGroupoid {
    ordered_groupoid_of(&InverseSemigroupoid::from(s)).expect("G(S) is an ordered groupoid")
}

/// Pairs `(e, g)` with `cod(g) <= e`, from `dom(g)` to `e`; composition by
/// pseudoproduct. Returns the category and the pairs in morphism order.
pub fn l_of_groupoid(g: &OrderedGroupoid) -> (FiniteCategory, Vec<(Obj, Arrow)>) {
    let mut pairs = Vec::new();
    for e in 0..g.object_count() {
        for a in 0..g.arrow_count() {
            if g.object_leq(g.cod(a), e) {
                pairs.push((e, a));
            }
        }
    }
    let morphisms = pairs
        .iter()
        .map(|&(e, a)| Morphism {
            dom: g.dom(a),
            cod: e,
            label: format!("({},{})", g.objects[e], g.label(a)),
        })
        .collect();
    let identities = (0..g.object_count())
        .map(|e| pairs.iter().position(|&p| p == (e, g.identity(e))).unwrap())
        .collect();
    let cat = FiniteCategory::new(g.objects.clone(), morphisms, identities, |x, y| {
        let (e, a) = pairs[x];
        let (_, b) = pairs[y];
        let ab = g.pseudoproduct(a, b).expect("comparable ends have a meet");
        pairs.iter().position(|&p| p == (e, ab)).unwrap()
    })
    .expect("L(G) is a category");
    (cat, pairs)
}

/// `(e, x, f)`: codomain bound, arrow, domain bound.
pub type Triple = (Obj, Arrow, Obj);

/// Triples `(e, x, f)` with `dom(x) <= f`, `cod(x) <= e`, from `f` to `e`,
/// composed by pseudoproduct.
pub fn c_of_groupoid(g: &OrderedGroupoid) -> Result<(FiniteCategory, Vec<Triple>), GroupoidError> {
    if !g.is_principally_inductive() {
        return Err(GroupoidError::NotPrincipallyInductive);
    }
    let mut triples = Vec::new();
    for e in 0..g.object_count() {
        for f in 0..g.object_count() {
            for x in 0..g.arrow_count() {
                if g.object_leq(g.dom(x), f) && g.object_leq(g.cod(x), e) {
                    triples.push((e, x, f));
                }
            }
        }
    }
    let morphisms = triples
        .iter()
        .map(|&(e, x, f)| Morphism {
            dom: f,
            cod: e,
            label: format!("({},{},{})", g.objects[e], g.label(x), g.objects[f]),
        })
        .collect();
    let identities = (0..g.object_count())
        .map(|e| {
            triples
                .iter()
                .position(|&t| t == (e, g.identity(e), e))
                .unwrap()
        })
        .collect();
    let mut failure = None;
    let cat = FiniteCategory::new(g.objects.clone(), morphisms, identities, |a, b| {
        let (e, x, _) = triples[a];
        let (_, y, i) = triples[b];
        match g.pseudoproduct(x, y) {
            Some(xy) => triples
                .iter()
                .position(|&t| t == (e, xy, i))
                .unwrap_or(UNDEFINED),
            None => {
                failure = Some(GroupoidError::NotPrincipallyInductive);
                UNDEFINED
            }
        }
    });
    if let Some(err) = failure {
        return Err(err);
    }
    Ok((cat.expect("C(G) is a category"), triples))
}
