mod common;

use proptest::prelude::*;

use morita::biset::morita_equivalent;
use morita::category::*;
use morita::semigroup::*;

fn hom_counts_match(s: &InverseSemigroup) {
    let c = cauchy_completion(s);
    for d in 0..c.object_count() {
        for e in 0..c.object_count() {
            let de = s.index_of(c.object_label(d)).unwrap();
            let ee = s.index_of(c.object_label(e)).unwrap();
            let esd = s
                .elements()
                .filter(|&x| s.mul(s.mul(ee, x), de) == x)
                .count();
            assert_eq!(c.hom(d, e).len(), esd, "C(S)({d},{e})");
        }
    }
}

#[test]
fn l_and_c_shapes() {
    for (name, s) in common::corpus() {
        let l = left_cancellative_category(&s);
        assert!(l.is_left_cancellative(), "{name}");
        assert_eq!(l.morphism_count(), l_pairs(&s).len());
        let c = cauchy_completion(&s);
        assert!(c.idempotents_split(), "{name}");
        hom_counts_match(&s);
    }
}

#[test]
fn l_of_small_brandt() {
    // (f, s) with fs = s: three for each non-zero idempotent, one for 0
    let b = common::named("brandt_1_2");
    assert_eq!(left_cancellative_category(&b).morphism_count(), 7);
    assert_eq!(cauchy_completion(&b).morphism_count(), 13);
}

#[test]
fn equivalence_is_an_equivalence_relation() {
    let corpus = common::small(9);
    let cats: Vec<FiniteCategory> = corpus.iter().map(|(_, s)| cauchy_completion(s)).collect();
    for (i, c) in cats.iter().enumerate() {
        let (f, g) = categories_equivalent(c, c).expect("reflexive");
        assert!(
            check_weak_equivalence(&f, c, c).unwrap() && check_weak_equivalence(&g, c, c).unwrap()
        );
        for (j, d) in cats.iter().enumerate() {
            let Some((f, g)) = categories_equivalent(c, d) else {
                assert!(categories_equivalent(d, c).is_none(), "{i} {j}");
                continue;
            };
            assert!(check_weak_equivalence(&g, d, c).unwrap());
            for e in &cats {
                if let Some((h, _)) = categories_equivalent(d, e) {
                    assert!(check_weak_equivalence(&f.then(&h), c, e).unwrap());
                }
            }
        }
    }
}

#[test]
fn skeleton_is_idempotent() {
    for (_, s) in common::corpus() {
        let sk = skeleton(&cauchy_completion(&s)).category;
        let again = skeleton(&sk).category;
        assert!(categories_isomorphic(&sk, &again).is_some());
        assert_eq!(sk.object_count(), again.object_count());
    }
}

#[test]
fn decision_agrees_with_skeleton_shapes() {
    let corpus = common::small(7);
    for (_, s) in &corpus {
        for (_, t) in &corpus {
            let d = morita_equivalent(s, t);
            if d.equivalent {
                assert_eq!(d.skeleton_s.objects, d.skeleton_t.objects);
                assert_eq!(d.skeleton_s.morphisms, d.skeleton_t.morphisms);
            }
            let mut a = d
                .skeleton_s
                .hom_sizes
                .iter()
                .flatten()
                .copied()
                .collect::<Vec<_>>();
            let mut b = d
                .skeleton_t
                .hom_sizes
                .iter()
                .flatten()
                .copied()
                .collect::<Vec<_>>();
            a.sort();
            b.sort();
            if a != b {
                assert!(!d.equivalent);
            }
        }
    }
}

#[test]
fn cat_text_round_trip() {
    for (_, s) in common::small(9) {
        let c = cauchy_completion(&s);
        let back = parse_category(&write_category(&c)).unwrap();
        assert_eq!(back.morphism_count(), c.morphism_count());
        assert!(categories_isomorphic(&back, &c).is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_subsemigroups(seed in any::<u64>()) {
        let s = common::random_one(seed);
        prop_assume!(s.order() <= 14);
        let l = left_cancellative_category(&s);
        prop_assert!(l.is_left_cancellative());
        prop_assert_eq!(s.is_locally_e_unitary(), l.is_right_cancellative());
        prop_assert!(cauchy_completion(&s).idempotents_split());
        hom_counts_match(&s);
    }
}
