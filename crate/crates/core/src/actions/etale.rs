use super::{ActionError, RightAction};
use crate::semigroup::{Elem, InverseSemigroup};

/// A right action with an anchor `p : X -> E(S)` such that `x p(x) = x` and
/// `p(xs) = s* p(x) s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaleAction {
    pub base: RightAction,
    pub anchor: Vec<Elem>,
}

impl EtaleAction {
    pub fn new(
        base: RightAction,
        anchor: Vec<Elem>,
        s: &InverseSemigroup,
    ) -> Result<Self, ActionError> {
        let x = Self { base, anchor };
        check_etale(&x, s)?;
        Ok(x)
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn act(&self, x: usize, s: Elem) -> usize {
        self.base.act(x, s)
    }

    /// The underlying action, `U(p)`.
    pub fn forget(&self) -> &RightAction {
        &self.base
    }
}

/// Anchor values are idempotents, `x p(x) = x` and `p(xs) = s* p(x) s`.
pub fn check_etale(x: &EtaleAction, s: &InverseSemigroup) -> Result<(), ActionError> {
    if x.anchor.len() != x.len() {
        return Err(ActionError::Shape);
    }
    for p in 0..x.len() {
        let e = x.anchor[p];
        let name = x.base.point(p);
        if e >= s.order() || !s.is_idempotent(e) {
            return Err(ActionError::NotEtale(format!(
                "anchor of {name} is not an idempotent"
            )));
        }
        if x.act(p, e) != p {
            return Err(ActionError::NotEtale(format!(
                "{name} is not fixed by its anchor"
            )));
        }
        for a in s.elements() {
            let expected = s.mul(s.mul(s.star(a), e), a);
            if x.anchor[x.act(p, a)] != expected {
                return Err(ActionError::NotEtale(format!(
                    "anchor of {name}{} is not {}* p({name}) {}",
                    s.name(a),
                    s.name(a),
                    s.name(a)
                )));
            }
        }
    }
    Ok(())
}

/// Equivariant and anchor-preserving.
pub fn etale_morphism_check(f: &[usize], x: &EtaleAction, y: &EtaleAction) -> bool {
    x.base.is_morphism(f, &y.base) && (0..x.len()).all(|p| y.anchor[f[p]] == x.anchor[p])
}

/// `E(S)` with `e . s = s* e s`, anchored by the identity.
pub fn munn_action(s: &InverseSemigroup) -> EtaleAction {
    let idem = s.idempotent_list();
    let base = RightAction::from_fn(
        idem.iter().map(|&e| s.name(e).to_string()).collect(),
        s,
        |i, a| {
            let f = s.mul(s.mul(s.star(a), idem[i]), a);
            idem.iter().position(|&g| g == f).unwrap()
        },
    )
    .expect("the Munn action is an action");
    EtaleAction {
        base,
        anchor: idem.to_vec(),
    }
}

/// `eS` anchored by `s |-> s*s`.
pub fn principal_etale(s: &InverseSemigroup, e: Elem) -> EtaleAction {
    let base = RightAction::principal(s, e);
    let anchor = base
        .points()
        .iter()
        .map(|name| s.dom(s.index_of(name).unwrap()))
        .collect();
    EtaleAction { base, anchor }
}

/// `R(X)`: pairs `(e, x)` with `xe = x`, `(e, x)s = (s*es, xs)`, anchored by `e`.
/// Returns the étale action and the pairs in point order.
pub fn r_of(x: &RightAction, s: &InverseSemigroup) -> (EtaleAction, Vec<(Elem, usize)>) {
    let mut pairs = Vec::new();
    for &e in s.idempotent_list() {
        for p in 0..x.len() {
            if x.act(p, e) == p {
                pairs.push((e, p));
            }
        }
    }
    let names = pairs
        .iter()
        .map(|&(e, p)| format!("({},{})", s.name(e), x.point(p)))
        .collect();
    let base = RightAction::from_fn(names, s, |i, a| {
        let (e, p) = pairs[i];
        let target = (s.mul(s.mul(s.star(a), e), a), x.act(p, a));
        pairs.iter().position(|&q| q == target).unwrap()
    })
    .expect("R(X) is an action");
    let anchor = pairs.iter().map(|&(e, _)| e).collect();
    (EtaleAction { base, anchor }, pairs)
}

/// `R(f) : R(X) -> R(Y)`, `(e, x) |-> (e, f(x))`.
pub fn r_map(f: &[usize], x_pairs: &[(Elem, usize)], y_pairs: &[(Elem, usize)]) -> Vec<usize> {
    x_pairs
        .iter()
        .map(|&(e, p)| y_pairs.iter().position(|&q| q == (e, f[p])).unwrap())
        .collect()
}

/// Unit of `U -| R` at an étale action: `x |-> (p(x), x)` into `R(U(p))`.
pub fn unit_ur(x: &EtaleAction, ru_pairs: &[(Elem, usize)]) -> Vec<usize> {
    (0..x.len())
        .map(|p| {
            ru_pairs
                .iter()
                .position(|&q| q == (x.anchor[p], p))
                .unwrap()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::*;

    #[test]
    fn munn_actions() {
        let g = cyclic_group(3).unwrap();
        assert_eq!(munn_action(&g).len(), 1);
        let c = chain_semilattice(2).unwrap();
        let m = munn_action(&c);
        // e1 is the bottom: e1 . e0 = e1, e0 . e1 = e1
        assert_eq!(m.act(1, 0), 1);
        assert_eq!(m.act(0, 1), 1);
        assert!(check_etale(&m, &c).is_ok());
        let b = brandt(&trivial_group(), 2).unwrap();
        let m = munn_action(&b);
        let e11 = b.index_of("(1,1)").unwrap();
        let e22 = b.index_of("(2,2)").unwrap();
        let s12 = b.index_of("(1,2)").unwrap();
        let i11 = b.idempotent_list().iter().position(|&e| e == e11).unwrap();
        let i22 = b.idempotent_list().iter().position(|&e| e == e22).unwrap();
        assert_eq!(m.act(i11, s12), i22);
    }

    #[test]
    fn principal_etale_and_yoneda_maps() {
        let s = symmetric_inverse_monoid(2).unwrap();
        for &e in s.idempotent_list() {
            let es = principal_etale(&s, e);
            assert!(check_etale(&es, &s).is_ok());
        }
        // alpha_s : dS -> eS, t |-> st for (e, s) in L(S), d = s*s
        for &e in s.idempotent_list() {
            for a in s.elements().filter(|&a| s.mul(e, a) == a) {
                let d = s.dom(a);
                let ds = principal_etale(&s, d);
                let es = principal_etale(&s, e);
                let f: Vec<usize> = ds
                    .base
                    .points()
                    .iter()
                    .map(|t| {
                        let v = s.mul(a, s.index_of(t).unwrap());
                        es.base
                            .points()
                            .iter()
                            .position(|n| n == s.name(v))
                            .unwrap()
                    })
                    .collect();
                assert!(ds.base.is_morphism(&f, &es.base));
                let mut sorted = f.clone();
                sorted.sort_unstable();
                sorted.dedup();
                assert_eq!(sorted.len(), f.len());
            }
        }
    }

    #[test]
    fn bad_anchor_is_rejected() {
        let c = chain_semilattice(2).unwrap();
        let mut m = munn_action(&c);
        m.anchor.swap(0, 1);
        assert!(matches!(check_etale(&m, &c), Err(ActionError::NotEtale(_))));
    }

    #[test]
    fn r_counit_and_unit() {
        let s = brandt(&trivial_group(), 2).unwrap();
        let x = RightAction::regular(&s);
        let (r, pairs) = r_of(&x, &s);
        assert!(check_etale(&r, &s).is_ok());
        let counit: Vec<usize> = pairs.iter().map(|&(_, p)| p).collect();
        assert!(r.base.is_morphism(&counit, &x));
        let m = munn_action(&s);
        let (ru, ru_pairs) = r_of(&m.base, &s);
        let eta = unit_ur(&m, &ru_pairs);
        assert!(etale_morphism_check(&eta, &m, &ru));
    }
}
