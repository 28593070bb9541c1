//! The equivalence between closed `S`-sets and presheaves on `C(S)`, and the
//! functors `R`, `I*`, `I_!` relating étale actions to both sides.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

use super::{
    classes, natural_transformations, r_of, ActionError, EtaleAction, Presheaf, RightAction,
};
use crate::category::{c_triples, cauchy_completion};
use crate::semigroup::{Elem, FiniteSemigroup, InverseSemigroup};

/// Points of `X` fixed by each idempotent, `Xe = {x : xe = x}`.
fn fixed_points(x: &RightAction, idem: &[Elem]) -> Vec<Vec<usize>> {
    idem.iter()
        .map(|&e| (0..x.len()).filter(|&p| x.act(p, e) == p).collect())
        .collect()
}

/// `Q(X)(e) = Xe` with `(e, s, f)` acting by `x |-> xs`.
pub fn q_of(x: &RightAction, s: &FiniteSemigroup) -> Result<Presheaf, ActionError> {
    if !x.is_closed(s)? {
        return Err(ActionError::NotClosed);
    }
    let idem = s.idempotents();
    let fixed = fixed_points(x, &idem);
    let obj_of: HashMap<Elem, usize> = idem.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let fibers = fixed
        .iter()
        .map(|f| f.iter().map(|&p| x.point(p).to_string()).collect())
        .collect();
    let transition = c_triples(s)
        .iter()
        .map(|&(e, a, f)| {
            let target = &fixed[obj_of[&f]];
            fixed[obj_of[&e]]
                .iter()
                .map(|&p| target.iter().position(|&q| q == x.act(p, a)).unwrap())
                .collect()
        })
        .collect();
    Ok(Presheaf { fibers, transition })
}

/// `Q(f)`: the restriction of an equivariant map to each `Xe -> Ye`.
pub fn q_of_map(
    f: &[usize],
    x: &RightAction,
    y: &RightAction,
    s: &FiniteSemigroup,
) -> Vec<Vec<usize>> {
    let idem = s.idempotents();
    let fx = fixed_points(x, &idem);
    let fy = fixed_points(y, &idem);
    fx.iter()
        .zip(&fy)
        .map(|(xs, ys)| {
            xs.iter()
                .map(|&p| ys.iter().position(|&q| q == f[p]).unwrap())
                .collect()
        })
        .collect()
}

/// `Q_!(P)` with the unit `P -> Q(Q_!(P))`.
#[derive(Debug, Clone)]
pub struct QShriek {
    pub action: RightAction,
    /// `unit[c][x]`: the point `class((x, e), e)` for `x in P(e)`.
    pub unit: Vec<Vec<usize>>,
}

/// The colimit of `eS` over the category of elements of `P`: one copy of
/// `eS` per element `(x, e)`, glued along `t |-> st` for each morphism of
/// elements labelled `(e', s, f')`.
pub fn q_shriek(p: &Presheaf, s: &FiniteSemigroup) -> Result<QShriek, ActionError> {
    let c = cauchy_completion(s);
    p.check(&c)?;
    let idem = s.idempotents();
    let ideal: Vec<Vec<Elem>> = idem
        .iter()
        .map(|&e| s.elements().filter(|&u| s.mul(e, u) == u).collect())
        .collect();
    let mut block = Vec::new();
    let mut total = 0;
    for (obj, fiber) in p.fibers.iter().enumerate() {
        let starts: Vec<usize> = (0..fiber.len())
            .map(|i| total + i * ideal[obj].len())
            .collect();
        total += fiber.len() * ideal[obj].len();
        block.push(starts);
    }
    let pos = |obj: usize, u: Elem| ideal[obj].iter().position(|&v| v == u).unwrap();
    let mut uf = UnionFind::new(total);
    for (m, &(_, a, _)) in c_triples(s).iter().enumerate() {
        let (dom, cod) = (c.dom(m), c.cod(m));
        for (x, &y) in p.transition[m].iter().enumerate() {
            for &t in &ideal[dom] {
                uf.union(
                    block[dom][y] + pos(dom, t),
                    block[cod][x] + pos(cod, s.mul(a, t)),
                );
            }
        }
    }
    let (class_of, reps) = classes(&uf, total);
    let mut owner = vec![(0, 0, 0); total];
    for (obj, starts) in block.iter().enumerate() {
        for (x, &start) in starts.iter().enumerate() {
            for (i, _) in ideal[obj].iter().enumerate() {
                owner[start + i] = (obj, x, i);
            }
        }
    }
    let names = reps
        .iter()
        .map(|&r| {
            let (obj, x, i) = owner[r];
            format!("{}.{}", p.fibers[obj][x], s.name(ideal[obj][i]))
        })
        .collect();
    let action = RightAction::from_fn(names, s, |k, a| {
        let (obj, x, i) = owner[reps[k]];
        let u = s.mul(ideal[obj][i], a);
        class_of[block[obj][x] + pos(obj, u)]
    })?;
    let unit = block
        .iter()
        .enumerate()
        .map(|(obj, starts)| {
            starts
                .iter()
                .map(|&start| class_of[start + pos(obj, idem[obj])])
                .collect()
        })
        .collect();
    Ok(QShriek { action, unit })
}

/// The unit `P -> Q(Q_!(P))` is a bijection on every fiber and natural.
pub fn unit_iso_check(p: &Presheaf, s: &FiniteSemigroup) -> Result<bool, ActionError> {
    let qs = q_shriek(p, s)?;
    let a = &qs.action;
    if !a.is_closed(s)? {
        return Ok(false);
    }
    let idem = s.idempotents();
    let fixed = fixed_points(a, &idem);
    for (obj, unit) in qs.unit.iter().enumerate() {
        let mut image = unit.clone();
        image.sort_unstable();
        image.dedup();
        if image.len() != unit.len() || image != fixed[obj] {
            return Ok(false);
        }
    }
    let c = cauchy_completion(s);
    for (m, &(_, x, _)) in c_triples(s).iter().enumerate() {
        let (dom, cod) = (c.dom(m), c.cod(m));
        for (i, &j) in p.transition[m].iter().enumerate() {
            if qs.unit[dom][j] != a.act(qs.unit[cod][i], x) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `f |-> Q(f)` is a bijection `hom(X, Y) -> Nat(Q(X), Q(Y))`. Returns the
/// two counts alongside the verdict.
pub fn fullness_faithfulness_check(
    s: &FiniteSemigroup,
    x: &RightAction,
    y: &RightAction,
) -> Result<(bool, usize, usize), ActionError> {
    let qx = q_of(x, s)?;
    let qy = q_of(y, s)?;
    let homs = x.homs(y);
    let nats = natural_transformations(&qx, &qy, &cauchy_completion(s));
    let mut images: Vec<Vec<Vec<usize>>> = homs.iter().map(|f| q_of_map(f, x, y, s)).collect();
    images.sort();
    let distinct = {
        let mut d = images.clone();
        d.dedup();
        d.len() == images.len()
    };
    let mut sorted_nats = nats.clone();
    sorted_nats.sort();
    Ok((distinct && images == sorted_nats, homs.len(), nats.len()))
}

/// `I*(P)`: pairs `(e, x)` with `x in P(e)`, `(e, x)s = (s*es, P(e, es, s*es)(x))`.
pub fn i_star(
    p: &Presheaf,
    s: &InverseSemigroup,
) -> Result<(EtaleAction, Vec<(Elem, usize)>), ActionError> {
    let c = cauchy_completion(s);
    p.check(&c)?;
    let idem = s.idempotent_list();
    let triples = c_triples(s);
    let index: HashMap<(Elem, Elem, Elem), usize> =
        triples.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let pairs: Vec<(Elem, usize)> = idem
        .iter()
        .enumerate()
        .flat_map(|(obj, &e)| (0..p.fibers[obj].len()).map(move |x| (e, x)))
        .collect();
    let obj_of: HashMap<Elem, usize> = idem.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let names = pairs
        .iter()
        .map(|&(e, x)| format!("({},{})", s.name(e), p.fibers[obj_of[&e]][x]))
        .collect();
    let base = RightAction::from_fn(names, s, |k, a| {
        let (e, x) = pairs[k];
        let f = s.mul(s.mul(s.star(a), e), a);
        let m = index[&(e, s.mul(e, a), f)];
        let target = (f, p.transition[m][x]);
        pairs.iter().position(|&q| q == target).unwrap()
    })?;
    let anchor = pairs.iter().map(|&(e, _)| e).collect();
    Ok((EtaleAction::new(base, anchor, s)?, pairs))
}

/// `I_!(p)` with, for each object, the least pair `(x, u)` of every class.
#[derive(Debug, Clone)]
pub struct IShriek {
    pub presheaf: Presheaf,
    pub representatives: Vec<Vec<(usize, Elem)>>,
}

/// `I_!(p)(e)`: pairs `(x, u)` with `u` in `C(S)(e, p(x))`, modulo
/// `(x, u) ~ (y, su)` whenever `s : p(x) -> p(y)` in `L(S)` and `ys = x`.
/// Morphisms act by precomposition.
pub fn i_shriek(x: &EtaleAction, s: &InverseSemigroup) -> IShriek {
    let idem = s.idempotent_list();
    let mut fiber_pairs: Vec<Vec<(usize, Elem)>> = Vec::new();
    let mut class_maps: Vec<Vec<usize>> = Vec::new();
    let mut reps_all = Vec::new();
    for &e in idem {
        let pairs: Vec<(usize, Elem)> = (0..x.len())
            .flat_map(|p| s.elements().map(move |u| (p, u)))
            .filter(|&(p, u)| s.mul(s.mul(x.anchor[p], u), e) == u)
            .collect();
        let index: HashMap<(usize, Elem), usize> =
            pairs.iter().enumerate().map(|(i, &q)| (q, i)).collect();
        let mut uf = UnionFind::new(pairs.len());
        for (i, &(p, u)) in pairs.iter().enumerate() {
            for y in 0..x.len() {
                for a in s.elements() {
                    if s.mul(x.anchor[y], a) == a && s.dom(a) == x.anchor[p] && x.act(y, a) == p {
                        uf.union(i, index[&(y, s.mul(a, u))]);
                    }
                }
            }
        }
        let (class_of, reps) = classes(&uf, pairs.len());
        reps_all.push(reps.iter().map(|&r| pairs[r]).collect::<Vec<_>>());
        fiber_pairs.push(pairs);
        class_maps.push(class_of);
    }
    let obj_of: HashMap<Elem, usize> = idem.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let transition = c_triples(s)
        .iter()
        .map(|&(e, t, f)| {
            let (ce, cf) = (obj_of[&e], obj_of[&f]);
            reps_all[ce]
                .iter()
                .map(|&(p, u)| {
                    let k = fiber_pairs[cf]
                        .iter()
                        .position(|&q| q == (p, s.mul(u, t)))
                        .unwrap();
                    class_maps[cf][k]
                })
                .collect()
        })
        .collect();
    let fibers = reps_all
        .iter()
        .map(|reps| {
            reps.iter()
                .map(|&(p, u)| format!("{}.{}", x.base.point(p), s.name(u)))
                .collect()
        })
        .collect();
    IShriek {
        presheaf: Presheaf { fibers, transition },
        representatives: reps_all,
    }
}

/// `class(x, u) |-> xu` is a natural bijection `I_!(p)(e) -> Xe`.
pub fn isigu_check(x: &EtaleAction, s: &InverseSemigroup) -> bool {
    let ish = i_shriek(x, s);
    let idem = s.idempotent_list();
    let fixed = fixed_points(&x.base, idem);
    let maps: Vec<Vec<usize>> = ish
        .representatives
        .iter()
        .map(|reps| reps.iter().map(|&(p, u)| x.act(p, u)).collect())
        .collect();
    for (obj, map) in maps.iter().enumerate() {
        let mut image = map.clone();
        image.sort_unstable();
        image.dedup();
        if image.len() != map.len() || image != fixed[obj] {
            return false;
        }
    }
    let c = cauchy_completion(s);
    for (m, &(_, t, _)) in c_triples(s).iter().enumerate() {
        let (dom, cod) = (c.dom(m), c.cod(m));
        for (k, &j) in ish.presheaf.transition[m].iter().enumerate() {
            if maps[dom][j] != x.act(maps[cod][k], t) {
                return false;
            }
        }
    }
    true
}

/// `R(U(p))` and `I*(I_!(p))` agree: `(e, class(x, u)) |-> (e, xu)` is a
/// bijection commuting with anchors and the action.
pub fn i_star_i_shriek_agreement(
    x: &EtaleAction,
    s: &InverseSemigroup,
) -> Result<bool, ActionError> {
    let (ru, ru_pairs) = r_of(&x.base, s);
    let ish = i_shriek(x, s);
    let (ii, ii_pairs) = i_star(&ish.presheaf, s)?;
    let obj_of: HashMap<Elem, usize> = s
        .idempotent_list()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let map: Vec<Option<usize>> = ii_pairs
        .iter()
        .map(|&(e, k)| {
            let (p, u) = ish.representatives[obj_of[&e]][k];
            ru_pairs.iter().position(|&q| q == (e, x.act(p, u)))
        })
        .collect();
    let Some(map) = map.into_iter().collect::<Option<Vec<usize>>>() else {
        return Ok(false);
    };
    let mut sorted = map.clone();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(sorted.len() == ru.len()
        && map.len() == ru.len()
        && super::etale_morphism_check(&map, &ii, &ru))
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct InproReport {
    /// The orbit graph is connected and non-empty.
    pub connected: bool,
    /// An idempotent `e` with `X` isomorphic to `eS`.
    pub principal: Option<Elem>,
}

/// Connectivity of `X` and a search for `X ~ eS`.
pub fn indecomposable_projective_check(
    x: &RightAction,
    s: &FiniteSemigroup,
) -> Result<InproReport, ActionError> {
    if !x.is_closed(s)? {
        return Err(ActionError::NotClosed);
    }
    let connected = !x.is_empty() && x.components().iter().all(|&c| c == 0);
    let principal = s
        .idempotents()
        .into_iter()
        .find(|&e| x.isomorphism(&RightAction::principal(s, e)).is_some());
    Ok(InproReport {
        connected,
        principal,
    })
}

/// The coequalizer of `f, g : X -> Y`, taken in `S`-sets and then restricted
/// to each `Ye`, matches the fiberwise coequalizer of `Q(f), Q(g)`.
pub fn coequalizer_preserved(
    x: &RightAction,
    y: &RightAction,
    f: &[usize],
    g: &[usize],
    s: &FiniteSemigroup,
) -> bool {
    let pairs: Vec<(usize, usize)> = (0..x.len()).map(|p| (f[p], g[p])).collect();
    let (quot, class_of) = y.quotient(&pairs);
    let idem = s.idempotents();
    let fx = fixed_points(x, &idem);
    let fy = fixed_points(y, &idem);
    let fq = fixed_points(&quot, &idem);
    for (obj, ye) in fy.iter().enumerate() {
        let mut image: Vec<usize> = ye.iter().map(|&p| class_of[p]).collect();
        image.sort_unstable();
        image.dedup();
        if image != fq[obj] {
            return false;
        }
        let mut uf = UnionFind::new(ye.len());
        let local = |p: usize| ye.iter().position(|&q| q == p).unwrap();
        for &p in &fx[obj] {
            uf.union(local(f[p]), local(g[p]));
        }
        for (i, &a) in ye.iter().enumerate() {
            for (j, &b) in ye.iter().enumerate() {
                if uf.equiv(i, j) != (class_of[a] == class_of[b]) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::{munn_action, principal_etale};
    use crate::semigroup::*;

    #[test]
    fn q_of_principal_has_local_set_fibers() {
        let s = brandt(&trivial_group(), 2).unwrap();
        let idem = s.idempotents();
        for &e in &idem {
            let q = q_of(&RightAction::principal(&s, e), &s).unwrap();
            for (c, &d) in idem.iter().enumerate() {
                let brute = s.elements().filter(|&x| s.mul(s.mul(e, x), d) == x).count();
                assert_eq!(q.fibers[c].len(), brute);
            }
        }
    }

    #[test]
    fn q_rejects_unclosed() {
        let s = chain_semilattice(2).unwrap();
        let x = RightAction::from_fn(vec!["x0".into(), "x1".into()], &s, |_, _| 0).unwrap();
        assert_eq!(q_of(&x, &s), Err(ActionError::NotClosed));
    }

    #[test]
    fn q_shriek_of_representable_is_principal() {
        let s = symmetric_inverse_monoid(2).unwrap();
        for &e in s.idempotent_list() {
            let pe = RightAction::principal(&s, e);
            let q = q_of(&pe, &s).unwrap();
            let back = q_shriek(&q, &s).unwrap();
            assert!(back.action.isomorphism(&pe).is_some());
            assert!(unit_iso_check(&q, &s).unwrap());
        }
    }

    #[test]
    fn q_shriek_of_coproduct() {
        let s = chain_semilattice(2).unwrap();
        let a = RightAction::principal(&s, 0);
        let b = RightAction::principal(&s, 1);
        let sum = RightAction::coproduct(&s, &[&a, &b]);
        let q = q_of(&sum, &s).unwrap();
        let back = q_shriek(&q, &s).unwrap();
        assert_eq!(back.action.len(), a.len() + b.len());
        assert!(back.action.isomorphism(&sum).is_some());
    }

    #[test]
    fn unit_on_regular_brandt() {
        let s = brandt(&trivial_group(), 2).unwrap();
        let x = RightAction::regular(&s);
        let q = q_of(&x, &s).unwrap();
        assert!(unit_iso_check(&q, &s).unwrap());
        assert!(q_shriek(&q, &s).unwrap().action.isomorphism(&x).is_some());
    }

    #[test]
    fn hom_counts_match_natural_transformations() {
        let s = chain_semilattice(3).unwrap();
        let x = RightAction::regular(&s);
        let y = RightAction::principal(&s, 1);
        let (ok, homs, nats) = fullness_faithfulness_check(&s, &x, &y).unwrap();
        assert!(ok);
        assert_eq!(homs, nats);
    }

    #[test]
    fn isigu_and_monad_agreement() {
        let s = brandt(&trivial_group(), 2).unwrap();
        for x in [munn_action(&s), principal_etale(&s, 0)] {
            assert!(isigu_check(&x, &s));
            assert!(i_star_i_shriek_agreement(&x, &s).unwrap());
        }
        let c = chain_semilattice(2).unwrap();
        let m = munn_action(&c);
        let ish = i_shriek(&m, &c);
        // over the top, I_!(p)(e) has the size of Ee = {e0, e1}
        assert_eq!(ish.presheaf.fibers[0].len(), 2);
    }

    #[test]
    fn empty_etale_action() {
        let s = chain_semilattice(2).unwrap();
        let empty = EtaleAction {
            base: RightAction::empty(&s),
            anchor: Vec::new(),
        };
        let ish = i_shriek(&empty, &s);
        assert!(ish.presheaf.fibers.iter().all(Vec::is_empty));
        assert!(isigu_check(&empty, &s));
    }

    #[test]
    fn principal_ideals_are_indecomposable_projective() {
        let s = brandt(&trivial_group(), 2).unwrap();
        let e = s.idempotent_list()[0];
        let x = RightAction::principal(&s, e);
        let r = indecomposable_projective_check(&x, &s).unwrap();
        assert!(r.connected);
        assert!(r.principal.is_some());
        let two = RightAction::coproduct(&s, &[&x, &x]);
        let r = indecomposable_projective_check(&two, &s).unwrap();
        assert!(!r.connected);
        assert_eq!(r.principal, None);
    }

    #[test]
    fn coequalizers() {
        let s = chain_semilattice(2).unwrap();
        let x = RightAction::principal(&s, 0);
        let y = RightAction::coproduct(&s, &[&x, &x]);
        let homs = x.homs(&y);
        for f in &homs {
            for g in &homs {
                assert!(coequalizer_preserved(&x, &y, f, g, &s));
            }
        }
    }
}
