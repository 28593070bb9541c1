use std::collections::HashMap;

use super::{FiniteCategory, Functor, Morphism};
use crate::semigroup::{Elem, FiniteSemigroup, InverseSemigroup};
use crate::semigroupoid::InverseSemigroupoid;

/// `L(S) = {(e, s) : es = s}` with `(e, s) : s*s -> e` and
/// `(e, s)(f, t) = (e, st)` when `s*s = f`. Objects are the idempotents in
/// index order; morphisms are ordered by `(e, s)`.
pub fn left_cancellative_category(s: &InverseSemigroup) -> FiniteCategory {
    semigroupoid_l(&InverseSemigroupoid::from(s))
}

/// `L(R)` for an inverse semigroupoid: pairs `(e, r)` with `e` idempotent and
/// `er = r`, from `r*r` to `e`.
pub fn semigroupoid_l(r: &InverseSemigroupoid) -> FiniteCategory {
    let idem = r.idempotents();
    let obj_of: HashMap<Elem, usize> = idem.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut pairs = Vec::new();
    let mut morphisms = Vec::new();
    for (ei, &e) in idem.iter().enumerate() {
        for x in 0..r.order() {
            if r.mul(e, x) == Some(x) {
                pairs.push((e, x));
                morphisms.push(Morphism {
                    dom: obj_of[&r.dom(x)],
                    cod: ei,
                    label: format!("({},{})", r.name(e), r.name(x)),
                });
            }
        }
    }
    let index: HashMap<(Elem, Elem), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let identities = idem.iter().map(|&e| index[&(e, e)]).collect();
    FiniteCategory::new(
        idem.iter().map(|&e| r.name(e).to_string()).collect(),
        morphisms,
        identities,
        |g, f| {
            let (e, x) = pairs[g];
            let (_, y) = pairs[f];
            index[&(e, r.mul(x, y).expect("composable in L"))]
        },
    )
    .expect("L of an inverse semigroupoid is a category")
}

/// Morphisms of `L(S)` as pairs `(e, s)` in morphism index order.
pub fn l_pairs(s: &InverseSemigroup) -> Vec<(Elem, Elem)> {
    let mut pairs = Vec::new();
    for &e in s.idempotent_list() {
        for x in s.elements() {
            if s.mul(e, x) == x {
                pairs.push((e, x));
            }
        }
    }
    pairs
}

/// Morphisms of `C(S)` as triples `(e, s, f)` in morphism index order.
pub fn c_triples(s: &FiniteSemigroup) -> Vec<(Elem, Elem, Elem)> {
    let idem = s.idempotents();
    let mut triples = Vec::new();
    for &e in &idem {
        for &f in &idem {
            for x in s.elements() {
                if s.mul(s.mul(e, x), f) == x {
                    triples.push((e, x, f));
                }
            }
        }
    }
    triples
}

/// The Cauchy completion `C(S) = {(e, s, f) : esf = s}` with
/// `(e, s, f) : f -> e` and `(e, s, f)(f, t, i) = (e, st, i)`.
pub fn cauchy_completion(s: &FiniteSemigroup) -> FiniteCategory {
    let idem = s.idempotents();
    let mut triples = Vec::new();
    let mut morphisms = Vec::new();
    for (ei, &e) in idem.iter().enumerate() {
        for (fi, &f) in idem.iter().enumerate() {
            for x in s.elements() {
                if s.mul(s.mul(e, x), f) == x {
                    triples.push((e, x, f));
                    morphisms.push(Morphism {
                        dom: fi,
                        cod: ei,
                        label: format!("({},{},{})", s.name(e), s.name(x), s.name(f)),
                    });
                }
            }
        }
    }
    let index: HashMap<(Elem, Elem, Elem), usize> =
        triples.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let identities = idem.iter().map(|&e| index[&(e, e, e)]).collect();
    FiniteCategory::new(
        idem.iter().map(|&e| s.name(e).to_string()).collect(),
        morphisms,
        identities,
        |g, f| {
            let (e, x, _) = triples[g];
            let (_, y, i) = triples[f];
            index[&(e, s.mul(x, y), i)]
        },
    )
    .expect("the Cauchy completion is a category")
}

/// The inclusion `L(S) -> C(S)`, `(e, s) |-> (e, s, s*s)`.
pub fn inclusion_l_into_c(s: &InverseSemigroup, l: &FiniteCategory, c: &FiniteCategory) -> Functor {
    let c_index: HashMap<&str, usize> = c
        .morphisms()
        .iter()
        .enumerate()
        .map(|(i, m)| (m.label.as_str(), i))
        .collect();
    let idem = s.idempotent_list();
    let mut mor_map = Vec::with_capacity(l.morphism_count());
    for &e in idem {
        for x in s.elements() {
            if s.mul(e, x) == x {
                let label = format!("({},{},{})", s.name(e), s.name(x), s.name(s.dom(x)));
                mor_map.push(c_index[label.as_str()]);
            }
        }
    }
    Functor {
        obj_map: (0..idem.len()).collect(),
        mor_map,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::weak_equivalence_report;
    use crate::semigroup::*;

    #[test]
    fn l_of_group_is_the_group() {
        let c3 = cyclic_group(3).unwrap();
        let l = left_cancellative_category(&c3);
        assert_eq!(l.object_count(), 1);
        assert_eq!(l.morphism_count(), 3);
        assert!(l.is_left_cancellative());
        assert!(l.is_right_cancellative());
    }

    #[test]
    fn l_of_two_chain() {
        let l = left_cancellative_category(&chain_semilattice(2).unwrap());
        assert_eq!(l.object_count(), 2);
        let labels: Vec<&str> = (0..3).map(|f| l.label(f)).collect();
        assert_eq!(labels, vec!["(e0,e0)", "(e0,e1)", "(e1,e1)"]);
        // (e, z) : z -> e
        assert_eq!((l.dom(1), l.cod(1)), (1, 0));
        assert!(l.is_right_cancellative());
    }

    #[test]
    fn l_of_brandt_counts() {
        let b = brandt(&trivial_group(), 2).unwrap();
        let brute = b
            .idempotents()
            .iter()
            .map(|&f| b.elements().filter(|&s| b.mul(f, s) == s).count())
            .sum::<usize>();
        assert_eq!(brute, 7);
        let l = left_cancellative_category(&b);
        assert_eq!(l.morphism_count(), brute);
        assert!(l.is_left_cancellative());
    }

    #[test]
    fn cauchy_completion_examples() {
        let c2 = cyclic_group(2).unwrap();
        let c = cauchy_completion(&c2);
        assert_eq!((c.object_count(), c.morphism_count()), (1, 2));
        let chain = chain_semilattice(2).unwrap();
        let c = cauchy_completion(&chain);
        assert_eq!(c.morphism_count(), 5);
        assert_eq!(c.hom(0, 0).len(), 2);
        let b = brandt(&trivial_group(), 2).unwrap();
        let c = cauchy_completion(&b);
        let e11 = 0; // object index of (1,1)
        let endo: Vec<&str> = c.hom(e11, e11).iter().map(|&f| c.label(f)).collect();
        assert_eq!(endo, vec!["((1,1),(1,1),(1,1))", "((1,1),0,(1,1))"]);
        assert!(c.idempotents_split());
    }

    #[test]
    fn l_is_not_full_in_c_for_brandt() {
        let b = brandt(&trivial_group(), 2).unwrap();
        let l = left_cancellative_category(&b);
        let c = cauchy_completion(&b);
        let inc = inclusion_l_into_c(&b, &l, &c);
        assert_eq!(inc.is_valid(&l, &c), Ok(true));
        let report = weak_equivalence_report(&inc, &l, &c).unwrap();
        assert!(!report.full);
        let (a, bb, missing) = report.fullness_witness.unwrap();
        assert_eq!((a, bb), (0, 0));
        assert_eq!(c.label(missing), "((1,1),0,(1,1))");
    }

    #[test]
    fn hom_sizes_match_local_sets() {
        let s = symmetric_inverse_monoid(2).unwrap();
        let c = cauchy_completion(&s);
        let idem = s.idempotents();
        for (di, &d) in idem.iter().enumerate() {
            for (ei, &e) in idem.iter().enumerate() {
                let esd = s.elements().filter(|&x| s.mul(s.mul(e, x), d) == x).count();
                assert_eq!(c.hom(di, ei).len(), esd);
            }
        }
    }
}
