//! Finite categories, functors between them, and the constructions built on
//! inverse semigroups: `L(S)`, the Cauchy completion `C(S)` and spans.

mod constructions;
mod equivalence;
mod format;
mod span;

pub use constructions::{
    c_triples, cauchy_completion, inclusion_l_into_c, l_pairs, left_cancellative_category,
    semigroupoid_l,
};
pub use equivalence::{
    categories_equivalent, categories_isomorphic, check_morita_context, check_weak_equivalence,
    is_bipartite, skeleton, weak_equivalence_report, BipartiteReport, Skeleton,
    WeakEquivalenceReport,
};
pub use format::{parse_category, write_category, CategoryParseError};
pub use span::{cauchy_vs_span, pullback, span_category, SpanCategory};

use thiserror::Error;

/// Index of an object of a finite category.
pub type Obj = usize;
/// Index of a morphism of a finite category.
pub type Mor = usize;

const UNDEFINED: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("morphism {0} has an endpoint outside the object set")]
    BadEndpoint(String),
    #[error("object {0} has no identity")]
    MissingIdentity(String),
    #[error("composite {g} . {f} is {problem}")]
    BadComposite {
        g: String,
        f: String,
        problem: &'static str,
    },
    #[error("composition is not associative at ({h}, {g}, {f})")]
    NotAssociative { h: String, g: String, f: String },
    #[error("functor maps do not fit source and target")]
    SourceTargetMismatch,
    #[error("subcategory inclusion is not a full embedding")]
    NotFullSubcategory,
    #[error("cospan legs have different codomains")]
    CospanMismatch,
    #[error("category lacks a pullback for {0} and {1}")]
    NoPullbacks(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Morphism {
    pub dom: Obj,
    pub cod: Obj,
    pub label: String,
}

/// A finite category with a dense composition table. `compose(g, f)` is
/// `g . f` and is defined exactly when `cod(f) = dom(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<Mor>,
    comp: Vec<usize>,
    homs: Vec<Vec<Mor>>,
}

impl FiniteCategory {
    /// Tabulates `compose` on every composable pair and validates identities,
    /// endpoints and associativity.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<Mor>,
        mut compose: impl FnMut(Mor, Mor) -> Mor,
    ) -> Result<Self, CategoryError> {
        let no = objects.len();
        let nm = morphisms.len();
        for m in &morphisms {
            if m.dom >= no || m.cod >= no {
                return Err(CategoryError::BadEndpoint(m.label.clone()));
            }
        }
        if identities.len() != no {
            return Err(CategoryError::MissingIdentity(
                objects.get(identities.len()).cloned().unwrap_or_default(),
            ));
        }
        for (a, &id) in identities.iter().enumerate() {
            if id >= nm || morphisms[id].dom != a || morphisms[id].cod != a {
                return Err(CategoryError::MissingIdentity(objects[a].clone()));
            }
        }
        let mut comp = vec![UNDEFINED; nm * nm];
        for g in 0..nm {
            for f in 0..nm {
                if morphisms[f].cod != morphisms[g].dom {
                    continue;
                }
                let h = compose(g, f);
                let problem = if h >= nm {
                    Some("out of range")
                } else if morphisms[h].dom != morphisms[f].dom
                    || morphisms[h].cod != morphisms[g].cod
                {
                    Some("between the wrong objects")
                } else {
                    None
                };
                if let Some(problem) = problem {
                    return Err(CategoryError::BadComposite {
                        g: morphisms[g].label.clone(),
                        f: morphisms[f].label.clone(),
                        problem,
                    });
                }
                comp[g * nm + f] = h;
            }
        }
        let mut homs = vec![Vec::new(); no * no];
        for (i, m) in morphisms.iter().enumerate() {
            homs[m.dom * no + m.cod].push(i);
        }
        let cat = Self {
            objects,
            morphisms,
            identities,
            comp,
            homs,
        };
        cat.validate_laws()?;
        Ok(cat)
    }

    fn validate_laws(&self) -> Result<(), CategoryError> {
        for f in 0..self.morphisms.len() {
            let m = &self.morphisms[f];
            if self.compose(self.identities[m.cod], f) != Some(f)
                || self.compose(f, self.identities[m.dom]) != Some(f)
            {
                return Err(CategoryError::BadComposite {
                    g: self.label(self.identities[m.cod]).into(),
                    f: m.label.clone(),
                    problem: "not respecting the identity law",
                });
            }
        }
        for f in 0..self.morphisms.len() {
            for g in self.postcomposable(f) {
                let gf = self.compose(g, f).unwrap();
                for h in self.postcomposable(g) {
                    let hg = self.compose(h, g).unwrap();
                    if self.compose(h, gf) != self.compose(hg, f) {
                        return Err(CategoryError::NotAssociative {
                            h: self.label(h).into(),
                            g: self.label(g).into(),
                            f: self.label(f).into(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn object_label(&self, a: Obj) -> &str {
        &self.objects[a]
    }

    pub fn label(&self, f: Mor) -> &str {
        &self.morphisms[f].label
    }

    #[inline]
    pub fn dom(&self, f: Mor) -> Obj {
        self.morphisms[f].dom
    }

    #[inline]
    pub fn cod(&self, f: Mor) -> Obj {
        self.morphisms[f].cod
    }

    #[inline]
    pub fn identity(&self, a: Obj) -> Mor {
        self.identities[a]
    }

    pub fn is_identity(&self, f: Mor) -> bool {
        self.identities[self.dom(f)] == f
    }

    /// `g . f`, if `cod(f) = dom(g)`.
    #[inline]
    pub fn compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        let h = self.comp[g * self.morphisms.len() + f];
        (h != UNDEFINED).then_some(h)
    }

    /// Morphisms `a -> b`.
    #[inline]
    pub fn hom(&self, a: Obj, b: Obj) -> &[Mor] {
        &self.homs[a * self.objects.len() + b]
    }

    /// Morphisms `g` with `g . f` defined.
    pub fn postcomposable(&self, f: Mor) -> impl Iterator<Item = Mor> + '_ {
        let c = self.cod(f);
        (0..self.objects.len()).flat_map(move |b| self.hom(c, b).iter().copied())
    }

    /// Morphisms `h` with `f . h` defined.
    pub fn precomposable(&self, f: Mor) -> impl Iterator<Item = Mor> + '_ {
        let d = self.dom(f);
        (0..self.objects.len()).flat_map(move |a| self.hom(a, d).iter().copied())
    }

    pub fn inverse_of(&self, f: Mor) -> Option<Mor> {
        self.hom(self.cod(f), self.dom(f))
            .iter()
            .copied()
            .find(|&g| {
                self.compose(g, f) == Some(self.identity(self.dom(f)))
                    && self.compose(f, g) == Some(self.identity(self.cod(f)))
            })
    }

    pub fn is_iso(&self, f: Mor) -> bool {
        self.inverse_of(f).is_some()
    }

    pub fn is_idempotent(&self, f: Mor) -> bool {
        self.compose(f, f) == Some(f)
    }

    /// Some isomorphism `a -> b`.
    pub fn iso_between(&self, a: Obj, b: Obj) -> Option<Mor> {
        self.hom(a, b).iter().copied().find(|&f| self.is_iso(f))
    }

    /// `(g, f, f')` with `g . f = g . f'` but `f != f'`.
    pub fn left_cancellation_witness(&self) -> Option<(Mor, Mor, Mor)> {
        for g in 0..self.morphism_count() {
            for a in 0..self.object_count() {
                let hom = self.hom(a, self.dom(g));
                for (i, &f) in hom.iter().enumerate() {
                    for &f2 in &hom[i + 1..] {
                        if self.compose(g, f) == self.compose(g, f2) {
                            return Some((g, f, f2));
                        }
                    }
                }
            }
        }
        None
    }

    /// `(f, g, g')` with `g . f = g' . f` but `g != g'`.
    pub fn right_cancellation_witness(&self) -> Option<(Mor, Mor, Mor)> {
        for f in 0..self.morphism_count() {
            for b in 0..self.object_count() {
                let hom = self.hom(self.cod(f), b);
                for (i, &g) in hom.iter().enumerate() {
                    for &g2 in &hom[i + 1..] {
                        if self.compose(g, f) == self.compose(g2, f) {
                            return Some((f, g, g2));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_left_cancellative(&self) -> bool {
        self.left_cancellation_witness().is_none()
    }

    pub fn is_right_cancellative(&self) -> bool {
        self.right_cancellation_witness().is_none()
    }

    /// Every idempotent `e : c -> c` factors as `s . f` with `f . s = 1`.
    pub fn idempotents_split(&self) -> bool {
        self.unsplit_idempotent().is_none()
    }

    pub fn unsplit_idempotent(&self) -> Option<Mor> {
        (0..self.morphism_count())
            .filter(|&e| self.dom(e) == self.cod(e) && self.is_idempotent(e))
            .find(|&e| !self.splits(e))
    }

    fn splits(&self, e: Mor) -> bool {
        let c = self.dom(e);
        (0..self.object_count()).any(|r| {
            self.hom(c, r).iter().any(|&f| {
                self.hom(r, c).iter().any(|&s| {
                    self.compose(s, f) == Some(e) && self.compose(f, s) == Some(self.identity(r))
                })
            })
        })
    }

    /// The full subcategory on `objs` (objects in the given order, morphisms in
    /// their original order) with its inclusion.
    pub fn full_subcategory(&self, objs: &[Obj]) -> (FiniteCategory, Functor) {
        let mut obj_pos = vec![UNDEFINED; self.object_count()];
        for (i, &a) in objs.iter().enumerate() {
            obj_pos[a] = i;
        }
        let mut mor_map = Vec::new();
        let mut mor_pos = vec![UNDEFINED; self.morphism_count()];
        let mut morphisms = Vec::new();
        for (f, m) in self.morphisms.iter().enumerate() {
            if obj_pos[m.dom] != UNDEFINED && obj_pos[m.cod] != UNDEFINED {
                mor_pos[f] = mor_map.len();
                mor_map.push(f);
                morphisms.push(Morphism {
                    dom: obj_pos[m.dom],
                    cod: obj_pos[m.cod],
                    label: m.label.clone(),
                });
            }
        }
        let identities = objs.iter().map(|&a| mor_pos[self.identity(a)]).collect();
        let sub = FiniteCategory::new(
            objs.iter().map(|&a| self.objects[a].clone()).collect(),
            morphisms,
            identities,
            |g, f| mor_pos[self.compose(mor_map[g], mor_map[f]).unwrap()],
        )
        .expect("full subcategory of a valid category is valid");
        let inclusion = Functor {
            obj_map: objs.to_vec(),
            mor_map,
        };
        (sub, inclusion)
    }
}

/// A functor given by explicit object and morphism maps. Source and target
/// are supplied to each check.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Functor {
    pub obj_map: Vec<Obj>,
    pub mor_map: Vec<Mor>,
}

impl Functor {
    pub fn identity(c: &FiniteCategory) -> Self {
        Self {
            obj_map: (0..c.object_count()).collect(),
            mor_map: (0..c.morphism_count()).collect(),
        }
    }

    /// `other . self`
    pub fn then(&self, other: &Functor) -> Functor {
        Functor {
            obj_map: self.obj_map.iter().map(|&a| other.obj_map[a]).collect(),
            mor_map: self.mor_map.iter().map(|&f| other.mor_map[f]).collect(),
        }
    }

    pub fn fits(&self, source: &FiniteCategory, target: &FiniteCategory) -> bool {
        self.obj_map.len() == source.object_count()
            && self.mor_map.len() == source.morphism_count()
            && self.obj_map.iter().all(|&a| a < target.object_count())
            && self.mor_map.iter().all(|&f| f < target.morphism_count())
    }

    /// Preserves endpoints, identities and composition.
    pub fn is_valid(
        &self,
        source: &FiniteCategory,
        target: &FiniteCategory,
    ) -> Result<bool, CategoryError> {
        if !self.fits(source, target) {
            return Err(CategoryError::SourceTargetMismatch);
        }
        let endpoints = (0..source.morphism_count()).all(|f| {
            let g = self.mor_map[f];
            target.dom(g) == self.obj_map[source.dom(f)]
                && target.cod(g) == self.obj_map[source.cod(f)]
        });
        let identities = (0..source.object_count())
            .all(|a| self.mor_map[source.identity(a)] == target.identity(self.obj_map[a]));
        let composition = (0..source.morphism_count()).all(|f| {
            source.postcomposable(f).all(|g| {
                let gf = source.compose(g, f).unwrap();
                target.compose(self.mor_map[g], self.mor_map[f]) == Some(self.mor_map[gf])
            })
        });
        Ok(endpoints && identities && composition)
    }
}
