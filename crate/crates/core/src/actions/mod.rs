//! Right actions of finite semigroups, étale actions over inverse semigroups,
//! presheaves on finite categories, and the functors relating them.

mod cauchy;
mod etale;
mod format;
mod presheaf;
mod samples;

pub use cauchy::{
    coequalizer_preserved, fullness_faithfulness_check, i_shriek, i_star,
    i_star_i_shriek_agreement, indecomposable_projective_check, isigu_check, q_of, q_of_map,
    q_shriek, unit_iso_check, IShriek, InproReport, QShriek,
};
pub use etale::{
    check_etale, etale_morphism_check, munn_action, principal_etale, r_map, r_of, unit_ur,
    EtaleAction,
};
pub use format::{parse_action, write_action, ActionFile, ActionParseError};
pub use presheaf::{
    category_of_elements, etale_of_presheaf, is_discrete_fibration, natural_transformations,
    presheaf_of_etale, Presheaf,
};
pub use samples::{sample_actions, sample_etale_actions};

use petgraph::unionfind::UnionFind;
use thiserror::Error;

use crate::semigroup::{Elem, FiniteSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("action table has the wrong shape")]
    Shape,
    #[error("action value out of range")]
    OutOfRange,
    #[error("({x}{s}){t} differs from {x}({s}{t})")]
    NotAnAction { x: String, s: String, t: String },
    #[error("the semigroup does not have right local units")]
    NoRightLocalUnits,
    #[error("the action is not closed")]
    NotClosed,
    #[error("presheaf does not live on the expected site")]
    WrongSite,
    #[error("not an étale action: {0}")]
    NotEtale(String),
    #[error("not a presheaf: {0}")]
    NotAPresheaf(String),
}

/// A right action `X x S -> X` stored as a dense table `act[x][s]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightAction {
    points: Vec<String>,
    degree: usize,
    act: Vec<usize>,
}

impl RightAction {
    pub fn new(
        points: Vec<String>,
        s: &FiniteSemigroup,
        act: Vec<usize>,
    ) -> Result<Self, ActionError> {
        let n = points.len();
        if act.len() != n * s.order() {
            return Err(ActionError::Shape);
        }
        if act.iter().any(|&y| y >= n) {
            return Err(ActionError::OutOfRange);
        }
        let x = Self {
            points,
            degree: s.order(),
            act,
        };
        for p in 0..n {
            for a in s.elements() {
                for b in s.elements() {
                    if x.act(x.act(p, a), b) != x.act(p, s.mul(a, b)) {
                        return Err(ActionError::NotAnAction {
                            x: x.points[p].clone(),
                            s: s.name(a).to_string(),
                            t: s.name(b).to_string(),
                        });
                    }
                }
            }
        }
        Ok(x)
    }

    pub fn from_fn(
        points: Vec<String>,
        s: &FiniteSemigroup,
        mut f: impl FnMut(usize, Elem) -> usize,
    ) -> Result<Self, ActionError> {
        let act = (0..points.len())
            .flat_map(|x| s.elements().map(move |a| (x, a)))
            .map(|(x, a)| f(x, a))
            .collect();
        Self::new(points, s, act)
    }

    /// `S` acting on itself by right multiplication.
    pub fn regular(s: &FiniteSemigroup) -> Self {
        Self::from_fn(s.names().to_vec(), s, |x, a| s.mul(x, a)).expect("associativity")
    }

    /// The principal right ideal `eS` with right multiplication.
    pub fn principal(s: &FiniteSemigroup, e: Elem) -> Self {
        let elems: Vec<Elem> = s.elements().filter(|&x| s.mul(e, x) == x).collect();
        let names = elems.iter().map(|&x| s.name(x).to_string()).collect();
        Self::from_fn(names, s, |i, a| {
            let y = s.mul(elems[i], a);
            elems.iter().position(|&z| z == y).unwrap()
        })
        .expect("eS is closed under right multiplication")
    }

    pub fn empty(s: &FiniteSemigroup) -> Self {
        Self {
            points: Vec::new(),
            degree: s.order(),
            act: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point(&self, x: usize) -> &str {
        &self.points[x]
    }

    /// Number of semigroup elements the table is indexed by.
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn act(&self, x: usize, s: Elem) -> usize {
        self.act[x * self.degree + s]
    }

    /// Every point is `ys` for some `y`, `s`.
    pub fn is_unitary(&self) -> bool {
        let mut hit = vec![false; self.len()];
        for &y in &self.act {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// `X (x)_S S` as classes of pairs `(x, s)` with `mu(x (x) s) = xs`.
    pub fn tensor_with_s(&self, s: &FiniteSemigroup) -> Result<Tensor, ActionError> {
        if !s.has_right_local_units() {
            return Err(ActionError::NoRightLocalUnits);
        }
        let n = s.order();
        let mut uf = UnionFind::new(self.len() * n);
        for x in 0..self.len() {
            for a in s.elements() {
                for b in s.elements() {
                    uf.union(self.act(x, a) * n + b, x * n + s.mul(a, b));
                }
            }
        }
        let (class_of, reps) = classes(&uf, self.len() * n);
        let mu = reps.iter().map(|&r| self.act(r / n, r % n)).collect();
        Ok(Tensor {
            representatives: reps.iter().map(|&r| (r / n, r % n)).collect(),
            class_of,
            mu,
        })
    }

    /// `mu` is a bijection.
    pub fn is_closed(&self, s: &FiniteSemigroup) -> Result<bool, ActionError> {
        let t = self.tensor_with_s(s)?;
        let mut seen = vec![false; self.len()];
        for &y in &t.mu {
            if std::mem::replace(&mut seen[y], true) {
                return Ok(false);
            }
        }
        Ok(seen.into_iter().all(|h| h))
    }

    /// `f(xs) = f(x)s` for all `x`, `s`.
    pub fn is_morphism(&self, f: &[usize], target: &RightAction) -> bool {
        f.len() == self.len()
            && f.iter().all(|&y| y < target.len())
            && (0..self.len())
                .all(|x| (0..self.degree).all(|a| f[self.act(x, a)] == target.act(f[x], a)))
    }

    /// All equivariant maps `self -> target`.
    pub fn homs(&self, target: &RightAction) -> Vec<Vec<usize>> {
        let edges: Vec<(usize, usize, usize)> = (0..self.len())
            .flat_map(|x| (0..self.degree).map(move |a| (x, a)))
            .map(|(x, a)| (x, self.act(x, a), a))
            .collect();
        let maps: Vec<Vec<usize>> = (0..self.degree)
            .map(|a| (0..target.len()).map(|y| target.act(y, a)).collect())
            .collect();
        enumerate_maps(&vec![target.len(); self.len()], &edges, &maps, usize::MAX)
    }

    /// An equivariant bijection `self -> other`, if one exists.
    pub fn isomorphism(&self, other: &RightAction) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        let sig = |x: &RightAction| {
            let mut v: Vec<usize> = (0..x.len()).map(|p| orbit_size(x, p)).collect();
            v.sort_unstable();
            v
        };
        if sig(self) != sig(other) {
            return None;
        }
        self.homs(other).into_iter().find(|f| {
            let mut seen = vec![false; other.len()];
            f.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        })
    }

    /// Disjoint union, points labelled `x@i`.
    pub fn coproduct(s: &FiniteSemigroup, parts: &[&RightAction]) -> Self {
        let mut points = Vec::new();
        let mut offsets = Vec::new();
        for (i, p) in parts.iter().enumerate() {
            offsets.push(points.len());
            points.extend(p.points.iter().map(|x| format!("{x}@{i}")));
        }
        let mut act = Vec::with_capacity(points.len() * s.order());
        for (p, &off) in parts.iter().zip(&offsets) {
            act.extend(p.act.iter().map(|&y| y + off));
        }
        Self {
            points,
            degree: s.order(),
            act,
        }
    }

    /// Quotient by the smallest congruence identifying each given pair.
    pub fn quotient(&self, pairs: &[(usize, usize)]) -> (Self, Vec<usize>) {
        let n = self.len();
        let mut uf = UnionFind::new(n);
        let mut pending: Vec<(usize, usize)> = pairs.to_vec();
        while let Some((x, y)) = pending.pop() {
            if uf.union(x, y) {
                for a in 0..self.degree {
                    pending.push((self.act(x, a), self.act(y, a)));
                }
            }
        }
        let (class_of, reps) = classes(&uf, n);
        let points = reps.iter().map(|&r| self.points[r].clone()).collect();
        let act = reps
            .iter()
            .flat_map(|&r| (0..self.degree).map(move |a| (r, a)))
            .map(|(r, a)| class_of[self.act(r, a)])
            .collect();
        (
            Self {
                points,
                degree: self.degree,
                act,
            },
            class_of,
        )
    }

    /// Connected components of the graph with edges `x -- xs`.
    pub fn components(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.len());
        for x in 0..self.len() {
            for a in 0..self.degree {
                uf.union(x, self.act(x, a));
            }
        }
        classes(&uf, self.len()).0
    }

    /// Right-action product: pairs `(x, y)` with `xe = x`, `ye = y` for a
    /// common idempotent `e`, acted on componentwise.
    pub fn product(s: &FiniteSemigroup, x: &RightAction, y: &RightAction) -> Self {
        let idem = s.idempotents();
        let mut carrier = Vec::new();
        for p in 0..x.len() {
            for q in 0..y.len() {
                if idem.iter().any(|&e| x.act(p, e) == p && y.act(q, e) == q) {
                    carrier.push((p, q));
                }
            }
        }
        let points = carrier
            .iter()
            .map(|&(p, q)| format!("({},{})", x.points[p], y.points[q]))
            .collect();
        Self::from_fn(points, s, |i, a| {
            let (p, q) = carrier[i];
            let target = (x.act(p, a), y.act(q, a));
            carrier
                .iter()
                .position(|&c| c == target)
                .expect("bounded pairs are closed under the action")
        })
        .expect("componentwise action")
    }
}

/// Classes of `X x S` under `(xs, t) ~ (x, st)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    /// Least pair `(x, s)` of each class.
    pub representatives: Vec<(usize, Elem)>,
    /// Class of the pair with dense index `x * |S| + s`.
    pub class_of: Vec<usize>,
    /// `mu` on each class.
    pub mu: Vec<usize>,
}

fn orbit_size(x: &RightAction, p: usize) -> usize {
    let mut seen = vec![false; x.len()];
    for a in 0..x.degree {
        seen[x.act(p, a)] = true;
    }
    seen.into_iter().filter(|&h| h).count()
}

/// Numbers union-find classes in order of their least member; returns the
/// class of each element and the least member of each class.
pub(crate) fn classes(uf: &UnionFind<usize>, n: usize) -> (Vec<usize>, Vec<usize>) {
    let mut class_of_root = vec![usize::MAX; n];
    let mut class_of = Vec::with_capacity(n);
    let mut reps = Vec::new();
    for i in 0..n {
        let r = uf.find(i);
        if class_of_root[r] == usize::MAX {
            class_of_root[r] = reps.len();
            reps.push(i);
        }
        class_of.push(class_of_root[r]);
    }
    (class_of, reps)
}

/// All assignments `v -> value < domains[v]` such that for every edge
/// `(a, b, m)`, `value(b) = maps[m][value(a)]`. Forced values are propagated
/// along edges; free variables are branched on in index order. Stops after
/// `limit` solutions.
pub(crate) fn enumerate_maps(
    domains: &[usize],
    edges: &[(usize, usize, usize)],
    maps: &[Vec<usize>],
    limit: usize,
) -> Vec<Vec<usize>> {
    let n = domains.len();
    let mut out_edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut in_edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &(a, b, m) in edges {
        out_edges[a].push((b, m));
        in_edges[b].push((a, m));
    }
    let mut state = MapSearch {
        domains,
        out_edges,
        in_edges,
        maps,
        value: vec![usize::MAX; n],
        trail: Vec::new(),
        solutions: Vec::new(),
        limit,
    };
    state.run();
    state.solutions
}

struct MapSearch<'a> {
    domains: &'a [usize],
    out_edges: Vec<Vec<(usize, usize)>>,
    in_edges: Vec<Vec<(usize, usize)>>,
    maps: &'a [Vec<usize>],
    value: Vec<usize>,
    trail: Vec<usize>,
    solutions: Vec<Vec<usize>>,
    limit: usize,
}

impl MapSearch<'_> {
    fn assign(&mut self, v: usize, x: usize) -> bool {
        let mut queue = vec![(v, x)];
        while let Some((v, x)) = queue.pop() {
            if self.value[v] != usize::MAX {
                if self.value[v] != x {
                    return false;
                }
                continue;
            }
            if x >= self.domains[v] {
                return false;
            }
            self.value[v] = x;
            self.trail.push(v);
            for &(b, m) in &self.out_edges[v] {
                queue.push((b, self.maps[m][x]));
            }
            for &(a, m) in &self.in_edges[v] {
                let va = self.value[a];
                if va != usize::MAX && self.maps[m][va] != x {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self) {
        if self.solutions.len() >= self.limit {
            return;
        }
        let Some(v) = self.value.iter().position(|&x| x == usize::MAX) else {
            self.solutions.push(self.value.clone());
            return;
        };
        for x in 0..self.domains[v] {
            let mark = self.trail.len();
            if self.assign(v, x) {
                self.run();
            }
            while self.trail.len() > mark {
                let u = self.trail.pop().unwrap();
                self.value[u] = usize::MAX;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::*;

    #[test]
    fn regular_action_is_unitary_and_closed() {
        for s in [
            brandt(&trivial_group(), 2).unwrap(),
            chain_semilattice(3).unwrap(),
        ] {
            let x = RightAction::regular(&s);
            assert!(x.is_unitary());
            assert!(x.is_closed(&s).unwrap());
        }
    }

    #[test]
    fn point_with_trivial_action() {
        let s = chain_semilattice(2).unwrap();
        let x = RightAction::from_fn(vec!["pt".into()], &s, |_, _| 0).unwrap();
        assert!(x.is_unitary());
        assert!(x.is_closed(&s).unwrap());
    }

    #[test]
    fn orphan_point_is_not_unitary() {
        let s = chain_semilattice(2).unwrap();
        let x = RightAction::from_fn(vec!["x0".into(), "x1".into()], &s, |_, _| 0).unwrap();
        assert!(!x.is_unitary());
        assert!(!x.is_closed(&s).unwrap());
        let t = x.tensor_with_s(&s).unwrap();
        assert!(!t.mu.contains(&1));
    }

    #[test]
    fn principal_ideals_are_closed() {
        let s = symmetric_inverse_monoid(2).unwrap();
        for &e in s.idempotent_list() {
            let x = RightAction::principal(&s, e);
            assert!(x.is_closed(&s).unwrap());
        }
    }

    #[test]
    fn tensor_needs_right_local_units() {
        let null = FiniteSemigroup::new(vec!["a".into(), "z".into()], vec![1, 1, 1, 1]).unwrap();
        let x = RightAction::regular(&null);
        assert_eq!(x.tensor_with_s(&null), Err(ActionError::NoRightLocalUnits));
    }

    #[test]
    fn rejects_non_actions() {
        let s = chain_semilattice(2).unwrap();
        // x.e0 = y, y.e0 = x breaks (x e0) e0 = x e0
        let r = RightAction::new(vec!["x".into(), "y".into()], &s, vec![1, 0, 0, 0]);
        assert!(matches!(r, Err(ActionError::NotAnAction { .. })));
    }

    #[test]
    fn homs_between_principal_ideals_count_local_sets() {
        let s = brandt(&trivial_group(), 2).unwrap();
        for &d in s.idempotent_list() {
            for &e in s.idempotent_list() {
                let brute = s.elements().filter(|&x| s.mul(s.mul(e, x), d) == x).count();
                let homs = RightAction::principal(&s, d).homs(&RightAction::principal(&s, e));
                assert_eq!(homs.len(), brute);
            }
        }
    }

    #[test]
    fn quotient_and_components() {
        let s = chain_semilattice(2).unwrap();
        let x = RightAction::principal(&s, 0);
        let two = RightAction::coproduct(&s, &[&x, &x]);
        assert_eq!(two.components(), vec![0, 0, 1, 1]);
        let (q, class_of) = two.quotient(&[(1, 3)]);
        assert_eq!(q.len(), 3);
        assert_eq!(class_of, vec![0, 1, 2, 1]);
        assert_eq!(q.components(), vec![0, 0, 0]);
    }

    #[test]
    fn product_carrier() {
        let s = chain_semilattice(2).unwrap();
        let x = RightAction::regular(&s);
        let p = RightAction::product(&s, &x, &x);
        let brute = (0..2)
            .flat_map(|a| (0..2).map(move |b| (a, b)))
            .filter(|&(a, b)| (0..2).any(|e| s.mul(a, e) == a && s.mul(b, e) == b))
            .count();
        assert_eq!(p.len(), brute);
    }
}
