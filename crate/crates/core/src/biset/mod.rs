//! Equivalence bisets between finite inverse semigroups and the structures
//! built from them.

mod bipartite;
mod decision;
mod enlargement;
mod format;
mod ordered;
mod search;

pub use bipartite::{
    build_bipartite_u, build_r_semigroupoid, ulc_check, BipartiteU, RSemigroupoid,
};
pub use decision::{morita_equivalent, MoritaDecision, SkeletonSummary};
pub use enlargement::biset_from_regular_enlargement;
pub use format::{biset_paths, parse_biset, write_biset, BisetParseError};
pub use ordered::biset_from_ordered_enlargement;
pub use search::{exhaustive_biset_search, SearchOutcome, DEFAULT_BUDGET};

use serde::Serialize;
use thiserror::Error;

use crate::semigroup::{Elem, InverseSemigroup};

pub type Point = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BisetError {
    #[error("tables have the wrong shape")]
    Shape,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("not an equivalence biset: {0}")]
    InvalidBiset(String),
    #[error("associativity fails at ({0}, {1}, {2})")]
    AssociativityFailure(String, String, String),
    #[error("enlargement identity {0} fails")]
    EnlargementIdentity(&'static str),
    #[error("not an enlargement: {0}")]
    NotAnEnlargement(String),
    #[error("pseudoproduct {0} . {1} is undefined")]
    UndefinedPseudoproduct(String, String),
    #[error("search budget of {0} assignments exceeded")]
    BudgetExceeded(u64),
}

/// An `(S, T)`-biset `X` with pairings `<-,-> : X x X -> S` and
/// `[-,-] : X x X -> T`. All tables are dense and indexed by points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceBiset {
    pub s: InverseSemigroup,
    pub t: InverseSemigroup,
    pub points: Vec<String>,
    lact: Vec<Point>,
    ract: Vec<Point>,
    inn_s: Vec<Elem>,
    inn_t: Vec<Elem>,
}

impl EquivalenceBiset {
    /// `lact[s][x]`, `ract[x][t]`, `inn_s[x][y]`, `inn_t[x][y]`, flattened row-major.
    /// Only shapes and ranges are checked; use [`verify_biset`] for the axioms.
    pub fn new(
        s: InverseSemigroup,
        t: InverseSemigroup,
        points: Vec<String>,
        lact: Vec<Point>,
        ract: Vec<Point>,
        inn_s: Vec<Elem>,
        inn_t: Vec<Elem>,
    ) -> Result<Self, BisetError> {
        let k = points.len();
        let ok = lact.len() == s.order() * k
            && ract.len() == k * t.order()
            && inn_s.len() == k * k
            && inn_t.len() == k * k
            && lact.iter().chain(&ract).all(|&p| p < k)
            && inn_s.iter().all(|&a| a < s.order())
            && inn_t.iter().all(|&a| a < t.order());
        if !ok {
            return Err(BisetError::Shape);
        }
        Ok(Self {
            s,
            t,
            points,
            lact,
            ract,
            inn_s,
            inn_t,
        })
    }

    pub fn from_fn(
        s: InverseSemigroup,
        t: InverseSemigroup,
        points: Vec<String>,
        mut left: impl FnMut(Elem, Point) -> Point,
        mut right: impl FnMut(Point, Elem) -> Point,
        mut inner_s: impl FnMut(Point, Point) -> Elem,
        mut inner_t: impl FnMut(Point, Point) -> Elem,
    ) -> Result<Self, BisetError> {
        let k = points.len();
        let lact = (0..s.order() * k).map(|i| left(i / k, i % k)).collect();
        let ract = (0..k * t.order())
            .map(|i| right(i / t.order(), i % t.order()))
            .collect();
        let inn_s = (0..k * k).map(|i| inner_s(i / k, i % k)).collect();
        let inn_t = (0..k * k).map(|i| inner_t(i / k, i % k)).collect();
        Self::new(s, t, points, lact, ract, inn_s, inn_t)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, x: Point) -> &str {
        &self.points[x]
    }

    /// `sx`
    pub fn left(&self, s: Elem, x: Point) -> Point {
        self.lact[s * self.len() + x]
    }

    /// `xt`
    pub fn right(&self, x: Point, t: Elem) -> Point {
        self.ract[x * self.t.order() + t]
    }

    /// `<x, y>`
    pub fn inner_s(&self, x: Point, y: Point) -> Elem {
        self.inn_s[x * self.len() + y]
    }

    /// `[x, y]`
    pub fn inner_t(&self, x: Point, y: Point) -> Elem {
        self.inn_t[x * self.len() + y]
    }

    /// The same biset with `<x, y>` overwritten.
    pub fn with_inner_s(&self, x: Point, y: Point, value: Elem) -> Self {
        let mut copy = self.clone();
        let k = copy.len();
        copy.inn_s[x * k + y] = value;
        copy
    }

    /// The same biset with `[x, y]` overwritten.
    pub fn with_inner_t(&self, x: Point, y: Point, value: Elem) -> Self {
        let mut copy = self.clone();
        let k = copy.len();
        copy.inn_t[x * k + y] = value;
        copy
    }

    /// The biset with the roles of `S` and `T` exchanged: `t . x = x t*`.
    pub fn swapped(&self) -> Self {
        Self::from_fn(
            self.t.clone(),
            self.s.clone(),
            self.points.clone(),
            |t, x| self.right(x, self.t.star(t)),
            |x, s| self.left(self.s.star(s), x),
            |x, y| self.inner_t(x, y),
            |x, y| self.inner_s(x, y),
        )
        .expect("shapes are preserved")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BisetReport {
    pub checks: Vec<AxiomCheck>,
}

impl BisetReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Names of the checks in report order.
pub const AXIOMS: [&str; 12] = [
    "left-action",
    "right-action",
    "compatibility",
    "M1",
    "M2",
    "M3",
    "M4",
    "M5",
    "M6",
    "M7",
    "surjective-S",
    "surjective-T",
];

/// Checks every axiom exhaustively and records the first counterexample of each.
pub fn verify_biset(b: &EquivalenceBiset) -> BisetReport {
    let (s, t) = (&b.s, &b.t);
    let k = b.len();
    let xs = || 0..k;
    let sn = |a| s.name(a).to_string();
    let tn = |a| t.name(a).to_string();
    let pn = |x| b.point(x).to_string();
    let mut checks = Vec::new();
    let mut record = |name, witness: Option<String>| {
        checks.push(AxiomCheck {
            name,
            passed: witness.is_none(),
            witness,
        })
    };

    let w = s.elements().find_map(|a| {
        s.elements().find_map(|c| {
            xs().find(|&x| b.left(s.mul(a, c), x) != b.left(a, b.left(c, x)))
                .map(|x| format!("s={} s'={} x={}", sn(a), sn(c), pn(x)))
        })
    });
    record(AXIOMS[0], w);
    let w = xs().find_map(|x| {
        t.elements().find_map(|a| {
            t.elements()
                .find(|&c| b.right(x, t.mul(a, c)) != b.right(b.right(x, a), c))
                .map(|c| format!("x={} t={} t'={}", pn(x), tn(a), tn(c)))
        })
    });
    record(AXIOMS[1], w);
    let w = s.elements().find_map(|a| {
        xs().find_map(|x| {
            t.elements()
                .find(|&c| b.right(b.left(a, x), c) != b.left(a, b.right(x, c)))
                .map(|c| format!("s={} x={} t={}", sn(a), pn(x), tn(c)))
        })
    });
    record(AXIOMS[2], w);
    let w = s.elements().find_map(|a| {
        xs().find_map(|x| {
            xs().find(|&y| b.inner_s(b.left(a, x), y) != s.mul(a, b.inner_s(x, y)))
                .map(|y| format!("s={} x={} y={}", sn(a), pn(x), pn(y)))
        })
    });
    record(AXIOMS[3], w);
    let w = xs().find_map(|x| {
        xs().find(|&y| b.inner_s(y, x) != s.star(b.inner_s(x, y)))
            .map(|y| format!("x={} y={}", pn(x), pn(y)))
    });
    record(AXIOMS[4], w);
    let w = xs()
        .find(|&x| b.left(b.inner_s(x, x), x) != x)
        .map(|x| format!("x={}", pn(x)));
    record(AXIOMS[5], w);
    let w = xs().find_map(|x| {
        xs().find_map(|y| {
            t.elements()
                .find(|&c| b.inner_t(x, b.right(y, c)) != t.mul(b.inner_t(x, y), c))
                .map(|c| format!("x={} y={} t={}", pn(x), pn(y), tn(c)))
        })
    });
    record(AXIOMS[6], w);
    let w = xs().find_map(|x| {
        xs().find(|&y| b.inner_t(x, y) != t.star(b.inner_t(y, x)))
            .map(|y| format!("x={} y={}", pn(x), pn(y)))
    });
    record(AXIOMS[7], w);
    let w = xs()
        .find(|&x| b.right(x, b.inner_t(x, x)) != x)
        .map(|x| format!("x={}", pn(x)));
    record(AXIOMS[8], w);
    let w = xs().find_map(|x| {
        xs().find_map(|y| {
            xs().find(|&z| b.left(b.inner_s(x, y), z) != b.right(x, b.inner_t(y, z)))
                .map(|z| format!("x={} y={} z={}", pn(x), pn(y), pn(z)))
        })
    });
    record(AXIOMS[9], w);
    let w = s
        .elements()
        .find(|&a| !b.inn_s.contains(&a))
        .map(|a| format!("s={} not a value", sn(a)));
    record(AXIOMS[10], w);
    let w = t
        .elements()
        .find(|&a| !b.inn_t.contains(&a))
        .map(|a| format!("t={} not a value", tn(a)));
    record(AXIOMS[11], w);
    BisetReport { checks }
}

/// The self-equivalence biset of `S`: `X = S`, both actions by
/// multiplication, `<x, y> = xy*` and `[x, y] = x*y`.
pub fn identity_biset(s: &InverseSemigroup) -> EquivalenceBiset {
    EquivalenceBiset::from_fn(
        s.clone(),
        s.clone(),
        s.names().to_vec(),
        |a, x| s.mul(a, x),
        |x, a| s.mul(x, a),
        |x, y| s.mul(x, s.star(y)),
        |x, y| s.mul(s.star(x), y),
    )
    .expect("shapes match")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::*;

    #[test]
    fn group_self_biset_passes() {
        let g = cyclic_group(3).unwrap();
        let r = verify_biset(&identity_biset(&g));
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.checks.len(), AXIOMS.len());
    }

    #[test]
    fn self_biset_passes_for_non_groups() {
        for s in [
            chain_semilattice(3).unwrap(),
            brandt(&trivial_group(), 2).unwrap(),
            symmetric_inverse_monoid(2).unwrap(),
        ] {
            assert!(verify_biset(&identity_biset(&s)).holds());
        }
    }

    #[test]
    fn semilattice_self_biset_fails_surjectivity_only_when_shrunk() {
        // the 2-chain acting on its bottom element alone: <z,z> = z misses e0
        let c = chain_semilattice(2).unwrap();
        let b = EquivalenceBiset::from_fn(
            c.clone(),
            c.clone(),
            vec!["z".into()],
            |_, _| 0,
            |_, _| 0,
            |_, _| 1,
            |_, _| 1,
        )
        .unwrap();
        let r = verify_biset(&b);
        assert!(!r.get("surjective-S").unwrap().passed);
        assert!(r.get("M7").unwrap().passed);
    }

    #[test]
    fn single_mutations_are_caught() {
        let s = brandt(&trivial_group(), 2).unwrap();
        let b = identity_biset(&s);
        for x in 0..b.len() {
            for y in 0..b.len() {
                for v in s.elements().filter(|&v| v != b.inner_s(x, y)) {
                    let r = verify_biset(&b.with_inner_s(x, y, v));
                    assert!(
                        !r.get("M2").unwrap().passed || !r.get("M7").unwrap().passed || !r.holds()
                    );
                    assert!(r.failures().all(|f| f.witness.is_some()));
                }
            }
        }
    }

    #[test]
    fn swapped_biset_passes() {
        let s = brandt(&cyclic_group(2).unwrap(), 2).unwrap();
        assert!(verify_biset(&identity_biset(&s).swapped()).holds());
    }

    #[test]
    fn prop_2_3_identities() {
        let s = symmetric_inverse_monoid(2).unwrap();
        let b = identity_biset(&s);
        for x in 0..b.len() {
            assert_eq!(b.left(b.inner_s(x, x), x), x);
            assert_eq!(b.right(x, b.inner_t(x, x)), x);
        }
    }
}
