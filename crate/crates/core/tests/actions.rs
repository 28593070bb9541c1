mod common;

use proptest::prelude::*;

use morita::actions::*;
use morita::semigroup::*;

fn closed_iff_unitary(s: &InverseSemigroup, x: &RightAction) {
    assert_eq!(x.is_closed(s).unwrap(), x.is_unitary(), "{:?}", x.points());
}

/// `S` with an extra point sent to `s` by each `s`.
fn with_top(s: &InverseSemigroup) -> RightAction {
    let n = s.order();
    let mut names = s.names().to_vec();
    names.push("top".into());
    RightAction::from_fn(names, s, |x, a| if x == n { a } else { s.mul(x, a) }).unwrap()
}

#[test]
fn closed_and_unitary_coincide() {
    for (_, s) in common::corpus() {
        closed_iff_unitary(&s, &RightAction::regular(&s));
        closed_iff_unitary(&s, &with_top(&s));
        assert!(!with_top(&s).is_unitary());
        for &e in s.idempotent_list() {
            let es = RightAction::principal(&s, e);
            assert!(es.is_closed(&s).unwrap());
        }
        for (_, x) in sample_actions(&s, 10, 3) {
            closed_iff_unitary(&s, &x);
        }
    }
}

#[test]
fn principal_etale_maps_are_injective() {
    for (_, s) in common::small(10) {
        for (e, a) in morita::category::l_pairs(&s) {
            let d = s.dom(a);
            let ds = principal_etale(&s, d);
            let es = principal_etale(&s, e);
            let alpha: Vec<usize> = (0..ds.len())
                .map(|p| {
                    let t = s.index_of(ds.forget().point(p)).unwrap();
                    let target = s.name(s.mul(a, t));
                    es.forget()
                        .points()
                        .iter()
                        .position(|q| q == target)
                        .unwrap()
                })
                .collect();
            assert!(etale_morphism_check(&alpha, &ds, &es));
            let mut img = alpha.clone();
            img.sort();
            img.dedup();
            assert_eq!(img.len(), alpha.len());
        }
    }
}

#[test]
fn etale_presheaf_round_trip() {
    for (_, s) in common::corpus() {
        for (_, x) in sample_etale_actions(&s, 2, 9) {
            let p = presheaf_of_etale(&x, &s);
            let back = etale_of_presheaf(&p, &s).unwrap();
            assert_eq!(back.len(), x.len());
            assert!(presheaf_of_etale(&back, &s).same_shape(&p));
            let anchors = |y: &EtaleAction| {
                let mut v: Vec<Elem> = (0..y.len()).map(|i| y.anchor[i]).collect();
                v.sort();
                v
            };
            assert_eq!(anchors(&back), anchors(&x));
        }
    }
}

#[test]
fn monad_and_unit_checks() {
    for (_, s) in common::corpus() {
        for (_, x) in sample_etale_actions(&s, 2, 4) {
            assert!(isigu_check(&x, &s));
            assert!(i_star_i_shriek_agreement(&x, &s).unwrap());
            let (ru, ru_pairs) = r_of(x.forget(), &s);
            assert!(etale_morphism_check(&unit_ur(&x, &ru_pairs), &x, &ru));
        }
    }
}

#[test]
fn principal_homs_count() {
    for (_, s) in common::small(10) {
        for &d in s.idempotent_list() {
            for &e in s.idempotent_list() {
                let homs = RightAction::principal(&s, d)
                    .homs(&RightAction::principal(&s, e))
                    .len();
                let esd = s.elements().filter(|&a| s.mul(s.mul(e, a), d) == a).count();
                assert_eq!(homs, esd);
            }
        }
    }
}

#[test]
fn coequalizers_are_preserved() {
    for (_, s) in common::small(7) {
        let actions = sample_actions(&s, 6, 21);
        for (_, x) in &actions {
            for (_, y) in &actions {
                let homs = x.homs(y);
                for f in homs.iter().take(3) {
                    for g in homs.iter().take(3) {
                        assert!(coequalizer_preserved(x, y, f, g, &s));
                    }
                }
            }
        }
    }
}

#[test]
fn act_text_round_trip() {
    let s = common::named("chain_2");
    let m = munn_action(&s);
    let file = ActionFile {
        semigroup: "chain_2.smg".into(),
        action: m.forget().clone(),
        anchor: Some(m.anchor.clone()),
    };
    let text = write_action(&file, &s);
    assert_eq!(parse_action(&text, &s).unwrap(), file);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sampled_actions_on_random_semigroups(seed in any::<u64>(), sample_seed in any::<u64>()) {
        let s = common::random_one(seed);
        prop_assume!(s.order() <= 12);
        for (_, x) in sample_actions(&s, 3, sample_seed) {
            prop_assert_eq!(x.is_closed(&s).unwrap(), x.is_unitary());
            prop_assert!(unit_iso_check(&q_of(&x, &s).unwrap(), &s).unwrap());
        }
    }
}
