//! The semigroupoid of a biset, its ordered groupoid, and the enlargement checks.

use morita::biset::*;
use morita::groupoid::*;
use morita::semigroup::*;

fn main() {
    let s = chain_semilattice(2).unwrap();
    let g_s = inductive_groupoid_of(&s);
    println!(
        "G(2-chain): {} objects, {} arrows",
        g_s.object_count(),
        g_s.arrow_count()
    );
    let b = exhaustive_biset_search(&brandt(&trivial_group(), 2).unwrap(), &s, 4, DEFAULT_BUDGET)
        .unwrap()
        .biset
        .unwrap();
    let r = build_r_semigroupoid(&b).unwrap();
    let g = ordered_groupoid_of(&r.semigroupoid).unwrap();
    println!(
        "G(S,T;X): {} objects, {} arrows",
        g.object_count(),
        g.arrow_count()
    );
    println!("principally inductive: {}", g.is_principally_inductive());
    for (side, part, sg) in [("S", &r.s_part, &b.s), ("T", &r.t_part, &b.t)] {
        let sub = inductive_groupoid_of(sg);
        let theta = OrderedFunctor::inclusion(&g, &sub, part);
        let li = is_local_isomorphism(&theta, &sub, &g).unwrap();
        println!(
            "{side}: enlargement {}, local isomorphism {}",
            g.is_enlargement(part).unwrap(),
            li.holds()
        );
    }
    print!("{}", write_groupoid(&g_s));
}
