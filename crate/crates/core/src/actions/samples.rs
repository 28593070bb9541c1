//! Seeded sample families of actions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{munn_action, principal_etale, r_of, EtaleAction, RightAction};
use crate::semigroup::InverseSemigroup;

/// `count` closed actions drawn from: principal ideals `eS`, coproducts of
/// two or three of them, quotients of those by one or two identifications,
/// the Munn action, and `S` itself.
pub fn sample_actions(s: &InverseSemigroup, count: usize, seed: u64) -> Vec<(String, RightAction)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let idem = s.idempotent_list();
    let principal = |e| RightAction::principal(s, e);
    let random_coproduct = |rng: &mut ChaCha8Rng| {
        let k = rng.gen_range(2..=3);
        let picks: Vec<usize> = (0..k).map(|_| idem[rng.gen_range(0..idem.len())]).collect();
        let parts: Vec<RightAction> = picks.iter().map(|&e| principal(e)).collect();
        let refs: Vec<&RightAction> = parts.iter().collect();
        let names: Vec<&str> = picks.iter().map(|&e| s.name(e)).collect();
        (
            format!("coproduct[{}]", names.join(",")),
            RightAction::coproduct(s, &refs),
        )
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let sample = match rng.gen_range(0..5) {
            0 => {
                let e = idem[rng.gen_range(0..idem.len())];
                (format!("principal[{}]", s.name(e)), principal(e))
            }
            1 => random_coproduct(&mut rng),
            2 => {
                let (name, base) = if rng.gen_bool(0.5) {
                    random_coproduct(&mut rng)
                } else {
                    let e = idem[rng.gen_range(0..idem.len())];
                    (format!("principal[{}]", s.name(e)), principal(e))
                };
                let k = rng.gen_range(1..=2);
                let pairs: Vec<(usize, usize)> = (0..k)
                    .map(|_| (rng.gen_range(0..base.len()), rng.gen_range(0..base.len())))
                    .collect();
                let glue: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}~{b}")).collect();
                (
                    format!("quotient[{name};{}]", glue.join(",")),
                    base.quotient(&pairs).0,
                )
            }
            3 => ("munn".to_string(), munn_action(s).base),
            _ => ("regular".to_string(), RightAction::regular(s)),
        };
        out.push(sample);
    }
    out
}

/// The Munn action, every `eS` anchored by `s |-> s*s`, a coproduct of two
/// of those, the empty action, and `R(X)` for `count` sampled actions.
pub fn sample_etale_actions(
    s: &InverseSemigroup,
    count: usize,
    seed: u64,
) -> Vec<(String, EtaleAction)> {
    let mut out = vec![("munn".to_string(), munn_action(s))];
    for &e in s.idempotent_list() {
        out.push((format!("principal[{}]", s.name(e)), principal_etale(s, e)));
    }
    let idem = s.idempotent_list();
    let (a, b) = (
        principal_etale(s, idem[0]),
        principal_etale(s, idem[idem.len() - 1]),
    );
    out.push((
        "coproduct".to_string(),
        EtaleAction {
            base: RightAction::coproduct(s, &[&a.base, &b.base]),
            anchor: a.anchor.iter().chain(&b.anchor).copied().collect(),
        },
    ));
    out.push((
        "empty".to_string(),
        EtaleAction {
            base: RightAction::empty(s),
            anchor: Vec::new(),
        },
    ));
    for (name, x) in sample_actions(s, count, seed) {
        out.push((format!("R({name})"), r_of(&x, s).0));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::check_etale;
    use crate::semigroup::*;

    #[test]
    fn samples_are_closed_and_deterministic() {
        let s = brandt(&trivial_group(), 2).unwrap();
        let a = sample_actions(&s, 12, 7);
        let b = sample_actions(&s, 12, 7);
        assert_eq!(a, b);
        for (name, x) in &a {
            assert!(x.is_unitary(), "{name}");
            assert!(x.is_closed(&s).unwrap(), "{name}");
        }
    }

    #[test]
    fn etale_samples_are_etale() {
        let s = chain_semilattice(3).unwrap();
        for (name, x) in sample_etale_actions(&s, 5, 1) {
            assert!(check_etale(&x, &s).is_ok(), "{name}");
        }
    }
}
