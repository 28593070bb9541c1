//! The builtin corpus of small inverse semigroups and its verdict manifest.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::biset::morita_equivalent;
use crate::semigroup::*;

/// Name and semigroup, in a fixed order.
pub fn builtin_corpus() -> Vec<(String, InverseSemigroup)> {
    let c2 = cyclic_group(2).expect("n > 0");
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push((format!("cyclic_{n}"), cyclic_group(n).expect("n > 0")));
    }
    for n in 1..=4 {
        out.push((format!("chain_{n}"), chain_semilattice(n).expect("n > 0")));
    }
    for k in 1..=3 {
        out.push((
            format!("brandt_1_{k}"),
            brandt(&trivial_group(), k).expect("k > 0"),
        ));
    }
    out.push(("brandt_c2_2".into(), brandt(&c2, 2).expect("C2 is a group")));
    out.push((
        "c2_zero".into(),
        group_with_zero(&c2).expect("C2 is a group"),
    ));
    for n in 1..=2 {
        out.push((
            format!("sim_{n}"),
            symmetric_inverse_monoid(n).expect("n <= 4"),
        ));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ManifestEntry {
    pub left: String,
    pub right: String,
    pub expected: bool,
    /// Where the verdict comes from: `reflexive`, `isomorphic`,
    /// `enlargement` (a corner `eTe` with `T = TeT`), `group-order`,
    /// `idempotent-count` or `decision` (computed by the decision procedure).
    pub provenance: String,
}

fn entry(left: &str, right: &str, expected: bool, provenance: &str) -> ManifestEntry {
    ManifestEntry {
        left: left.into(),
        right: right.into(),
        expected,
        provenance: provenance.into(),
    }
}

/// Pairs whose verdicts follow from independent reasoning.
pub fn curated_pairs() -> Vec<ManifestEntry> {
    vec![
        entry("brandt_1_2", "brandt_1_3", true, "enlargement"),
        entry("brandt_1_2", "chain_2", true, "enlargement"),
        entry("brandt_1_1", "chain_2", true, "isomorphic"),
        entry("brandt_c2_2", "c2_zero", true, "enlargement"),
        entry("cyclic_2", "cyclic_3", false, "group-order"),
        entry("chain_2", "chain_3", false, "idempotent-count"),
        entry("cyclic_2", "chain_2", false, "idempotent-count"),
    ]
}

/// Curated pairs, every reflexive pair, and every remaining unordered pair
/// with its computed verdict. `threads = 0` uses the global pool size.
pub fn manifest(corpus: &[(String, InverseSemigroup)], threads: usize) -> Vec<ManifestEntry> {
    let mut out = curated_pairs();
    for (name, _) in corpus {
        out.push(entry(name, name, true, "reflexive"));
    }
    let mut todo = Vec::new();
    for i in 0..corpus.len() {
        for j in i + 1..corpus.len() {
            let (a, b) = (&corpus[i].0, &corpus[j].0);
            let known = out
                .iter()
                .any(|e| (&e.left == a && &e.right == b) || (&e.left == b && &e.right == a));
            if !known {
                todo.push((i, j));
            }
        }
    }
    let decide = |&(i, j): &(usize, usize)| {
        let verdict = morita_equivalent(&corpus[i].1, &corpus[j].1).equivalent;
        entry(&corpus[i].0, &corpus[j].0, verdict, "decision")
    };
    let computed: Vec<ManifestEntry> = if threads == 1 {
        todo.iter().map(decide).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| todo.par_iter().map(decide).collect())
    };
    out.extend(computed);
    out
}

pub fn write_manifest(entries: &[ManifestEntry]) -> String {
    let mut out = String::from("# left right expected provenance\n");
    for e in entries {
        writeln!(
            out,
            "{} {} {} {}",
            e.left, e.right, e.expected, e.provenance
        )
        .unwrap();
    }
    out
}

/// Inverse subsemigroups of the symmetric inverse monoid on three points,
/// each generated by one to three random elements and their inverses.
pub fn random_inverse_subsemigroups(count: usize, seed: u64) -> Vec<InverseSemigroup> {
    let sim = symmetric_inverse_monoid(3).expect("n <= 4");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=3);
            let gens: Vec<Elem> = (0..k)
                .flat_map(|_| {
                    let g = rng.gen_range(0..sim.order());
                    [g, sim.star(g)]
                })
                .collect();
            let sub = sim.generated(gens);
            let (induced, _) = sim.induced(&sub).expect("generated sets are closed");
            induced.as_inverse().expect("closed under inverses")
        })
        .collect()
}
