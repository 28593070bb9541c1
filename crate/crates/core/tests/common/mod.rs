#![allow(dead_code)]

use morita::corpus::{builtin_corpus, random_inverse_subsemigroups};
use morita::semigroup::InverseSemigroup;

pub fn corpus() -> Vec<(String, InverseSemigroup)> {
    builtin_corpus()
}

pub fn named(name: &str) -> InverseSemigroup {
    corpus().into_iter().find(|(n, _)| n == name).unwrap().1
}

pub fn random_one(seed: u64) -> InverseSemigroup {
    random_inverse_subsemigroups(1, seed).pop().unwrap()
}

/// Corpus members with at most `max` elements.
pub fn small(max: usize) -> Vec<(String, InverseSemigroup)> {
    corpus()
        .into_iter()
        .filter(|(_, s)| s.order() <= max)
        .collect()
}
