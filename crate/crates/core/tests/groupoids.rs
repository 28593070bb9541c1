mod common;

use proptest::prelude::*;

use morita::biset::*;
use morita::category::{categories_equivalent, check_weak_equivalence};
use morita::groupoid::*;
use morita::semigroup::*;

/// Exactly one arrow below `g` starts at each object below `dom g`.
fn restrictions_unique(g: &OrderedGroupoid) {
    for a in 0..g.arrow_count() {
        for e in (0..g.object_count()).filter(|&e| g.object_leq(e, g.dom(a))) {
            let below = (0..g.arrow_count())
                .filter(|&b| g.leq(b, a) && g.dom(b) == e)
                .count();
            assert_eq!(below, 1, "arrow {} object {}", g.label(a), g.objects()[e]);
        }
    }
}

fn pseudoproduct_is_product(s: &InverseSemigroup) {
    let g = inductive_groupoid_of(s);
    assert_eq!(g.arrow_count(), s.order());
    for a in s.elements() {
        for b in s.elements() {
            assert_eq!(g.pseudoproduct(a, b), Some(s.mul(a, b)));
        }
    }
}

/// Inclusions of `G(T)` for the inverse subsemigroups generated by one element and its inverse.
fn sub_inclusions(s: &InverseSemigroup) -> Vec<(OrderedGroupoid, OrderedFunctor)> {
    let g = inductive_groupoid_of(s);
    let mut out = Vec::new();
    let mut seen = Vec::new();
    for a in s.elements() {
        let sub = s.generated([a, s.star(a)]);
        if seen.contains(&sub) {
            continue;
        }
        seen.push(sub.clone());
        let (t, map) = s.induced(&sub).unwrap();
        let h = inductive_groupoid_of(&t.as_inverse().unwrap());
        let theta = OrderedFunctor::inclusion(&g, &h, &map);
        out.push((h, theta));
    }
    out
}

#[test]
fn inductive_groupoids() {
    for (_, s) in common::corpus() {
        let g = inductive_groupoid_of(&s);
        restrictions_unique(&g);
        pseudoproduct_is_product(&s);
        assert!(g.is_principally_inductive());
    }
}

#[test]
fn local_isomorphisms_match_weak_equivalences() {
    let mut seen = [0, 0];
    for (_, s) in common::small(10) {
        let g = inductive_groupoid_of(&s);
        for (h, theta) in sub_inclusions(&s) {
            let li = is_local_isomorphism(&theta, &h, &g).unwrap();
            let (lh, _) = l_of_groupoid(&h);
            let (lg, _) = l_of_groupoid(&g);
            let l = check_weak_equivalence(&l_of_functor(&theta, &h, &g), &lh, &lg).unwrap();
            assert_eq!(li.holds(), l);
            let (ch, _) = c_of_groupoid(&h).unwrap();
            let (cg, _) = c_of_groupoid(&g).unwrap();
            let c =
                check_weak_equivalence(&c_of_functor(&theta, &h, &g).unwrap(), &ch, &cg).unwrap();
            assert_eq!(li.holds(), c);
            seen[li.holds() as usize] += 1;
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

#[test]
fn biset_groupoids_are_enlargements() {
    let b12 = common::named("brandt_1_2");
    let ch2 = common::named("chain_2");
    let mut bisets: Vec<EquivalenceBiset> = common::small(7)
        .iter()
        .map(|(_, s)| identity_biset(s))
        .collect();
    bisets.push(
        exhaustive_biset_search(&b12, &ch2, 4, DEFAULT_BUDGET)
            .unwrap()
            .biset
            .unwrap(),
    );
    for b in bisets {
        let r = build_r_semigroupoid(&b).unwrap();
        let g = ordered_groupoid_of(&r.semigroupoid).unwrap();
        restrictions_unique(&g);
        assert!(g.is_enlargement(&r.s_part).unwrap());
        assert!(g.is_enlargement(&r.t_part).unwrap());
        assert!(g.is_principally_inductive());
        let (gs, gt) = (inductive_groupoid_of(&b.s), inductive_groupoid_of(&b.t));
        for (sub, part) in [(&gs, &r.s_part), (&gt, &r.t_part)] {
            let theta = OrderedFunctor::inclusion(&g, sub, part);
            assert!(is_local_isomorphism(&theta, sub, &g).unwrap().holds());
        }
        let (ls, _) = l_of_groupoid(&gs);
        let (lt, _) = l_of_groupoid(&gt);
        assert!(categories_equivalent(&ls, &lt).is_some());
        let back = biset_from_ordered_enlargement(&g, &b.s, &b.t, &r.s_part, &r.t_part).unwrap();
        assert!(verify_biset(&back).holds());
        assert_eq!(back.len(), b.len());
    }
}

#[test]
fn ogpd_round_trip() {
    for (_, s) in common::small(7) {
        let g = inductive_groupoid_of(&s);
        let back = parse_groupoid(&write_groupoid(&g)).unwrap();
        assert_eq!(back.arrow_count(), g.arrow_count());
        assert_eq!(write_groupoid(&back), write_groupoid(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_inductive_groupoids(seed in any::<u64>()) {
        let s = common::random_one(seed);
        prop_assume!(s.order() <= 14);
        let g = inductive_groupoid_of(&s);
        restrictions_unique(&g);
        pseudoproduct_is_product(&s);
        for a in s.elements() {
            prop_assert_eq!(g.inverse(a), s.star(a));
            for b in s.elements() {
                prop_assert_eq!(g.leq(a, b), s.natural_leq(a, b));
            }
        }
    }
}
