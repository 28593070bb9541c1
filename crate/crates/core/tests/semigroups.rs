mod common;

use proptest::prelude::*;

use morita::semigroup::*;

fn star_laws(s: &InverseSemigroup) {
    for a in s.elements() {
        let a_ = s.star(a);
        assert_eq!(s.mul(s.mul(a, a_), a), a);
        assert_eq!(s.mul(s.mul(a_, a), a_), a_);
        assert_eq!(s.star(a_), a);
        for b in s.elements() {
            assert_eq!(s.star(s.mul(a, b)), s.mul(s.star(b), a_));
        }
    }
}

/// `s <= t` iff `s = et` for some idempotent `e`, by search.
fn below_by_search(s: &InverseSemigroup, a: Elem, b: Elem) -> bool {
    s.idempotents().iter().any(|&e| s.mul(e, b) == a)
}

fn order_laws(s: &InverseSemigroup) {
    let n = s.order();
    for a in 0..n {
        assert!(s.natural_leq(a, a));
        for b in 0..n {
            assert_eq!(s.natural_leq(a, b), below_by_search(s, a, b));
            if s.natural_leq(a, b) && s.natural_leq(b, a) {
                assert_eq!(a, b);
            }
            for c in 0..n {
                if s.natural_leq(a, b) && s.natural_leq(b, c) {
                    assert!(s.natural_leq(a, c));
                }
            }
        }
    }
    for a in 0..n {
        for b in (0..n).filter(|&b| s.natural_leq(a, b)) {
            for u in 0..n {
                for v in (0..n).filter(|&v| s.natural_leq(u, v)) {
                    assert!(s.natural_leq(s.mul(a, u), s.mul(b, v)));
                }
            }
        }
    }
}

fn idempotent_laws(s: &InverseSemigroup) {
    let idem = s.idempotents();
    assert_eq!(idem, s.idempotent_list());
    for &e in &idem {
        for &f in &idem {
            assert!(s.is_idempotent(s.mul(e, f)));
            assert_eq!(s.mul(e, f), s.mul(f, e));
        }
    }
    let flags = s.local_unit_flags();
    assert!(
        flags.left_local_units && flags.right_local_units && flags.local_units && flags.sandwich
    );
}

#[test]
fn corpus_satisfies_the_laws() {
    for (_, s) in common::corpus() {
        star_laws(&s);
        order_laws(&s);
        idempotent_laws(&s);
    }
}

#[test]
fn builder_sizes() {
    let c2 = cyclic_group(2).unwrap();
    assert_eq!(brandt(&trivial_group(), 3).unwrap().order(), 10);
    assert_eq!(brandt(&c2, 2).unwrap().order(), 9);
    assert_eq!(group_with_zero(&c2).unwrap().order(), 3);
    // sum over k of C(n,k)^2 k!
    assert_eq!(symmetric_inverse_monoid(3).unwrap().order(), 34);
    assert_eq!(
        symmetric_inverse_monoid(2).unwrap().idempotent_list().len(),
        4
    );
}

#[test]
fn text_round_trip_over_corpus() {
    for (_, s) in common::corpus() {
        let back = parse_semigroup(&write_semigroup(&s)).unwrap();
        assert_eq!(&back, s.semigroup());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_subsemigroups_satisfy_the_laws(seed in any::<u64>()) {
        let s = common::random_one(seed);
        star_laws(&s);
        order_laws(&s);
        idempotent_laws(&s);
    }

    #[test]
    fn single_cell_mutants_are_flagged_or_still_inverse(seed in any::<u64>(), a in 0usize..16, b in 0usize..16, d in 1usize..16) {
        let s = common::random_one(seed);
        prop_assume!(s.order() > 1);
        let (a, b) = (a % s.order(), b % s.order());
        let new = (s.mul(a, b) + 1 + d % (s.order() - 1)) % s.order();
        let m = s.with_cell(a, b, new);
        let assoc = (0..m.order()).all(|x| (0..m.order()).all(|y| (0..m.order()).all(|z| m.mul(m.mul(x, y), z) == m.mul(x, m.mul(y, z)))));
        prop_assert_eq!(m.associativity_witness().is_none(), assoc);
        if assoc {
            let unique = m.elements().all(|x| (0..m.order()).filter(|&y| m.mul(m.mul(x, y), x) == x && m.mul(m.mul(y, x), y) == y).count() == 1);
            prop_assert_eq!(m.as_inverse().is_ok(), unique);
        }
    }
}
