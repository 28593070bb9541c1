//! Decide Morita equivalence by comparing Cauchy completions.

use morita::biset::morita_equivalent;
use morita::semigroup::*;

fn main() {
    let t = trivial_group();
    let pairs = [
        (
            "B(1,2)",
            brandt(&t, 2).unwrap(),
            "B(1,3)",
            brandt(&t, 3).unwrap(),
        ),
        (
            "B(1,2)",
            brandt(&t, 2).unwrap(),
            "2-chain",
            chain_semilattice(2).unwrap(),
        ),
        (
            "C2",
            cyclic_group(2).unwrap(),
            "C3",
            cyclic_group(3).unwrap(),
        ),
    ];
    for (ln, s, rn, r) in pairs {
        let d = morita_equivalent(&s, &r);
        println!(
            "{ln} ~ {rn}: {} (skeleton hom sizes {:?} vs {:?})",
            d.equivalent, d.skeleton_s.hom_sizes, d.skeleton_t.hom_sizes
        );
        if d.equivalent {
            println!(
                "  witness functors are weak equivalences: {}",
                d.witness_checks()
            );
        }
    }
}
