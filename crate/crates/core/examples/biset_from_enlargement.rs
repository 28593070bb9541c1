//! Extract an equivalence biset from a corner of B(C2,2) and build its bipartite category.

use morita::biset::*;
use morita::semigroup::*;

fn main() {
    let r = brandt(&cyclic_group(2).unwrap(), 2).unwrap();
    let e = r.subset([r.index_of("(1,e,1)").unwrap()]);
    let corner = r.product_set(&r.product_set(&e, &r.full_set()), &e);
    let b = biset_from_regular_enlargement(&r, &corner, &r.full_set()).unwrap();
    println!(
        "|S| = {}, |T| = {}, |X| = {}",
        b.s.order(),
        b.t.order(),
        b.len()
    );
    for c in &verify_biset(&b).checks {
        println!("{}: {}", c.name, if c.passed { "pass" } else { "fail" });
    }
    let u = build_bipartite_u(&b).unwrap();
    println!(
        "U: {} objects, {} morphisms, Morita context {}, left cancellative {}",
        u.category.object_count(),
        u.category.morphism_count(),
        u.is_morita_context(),
        u.category.is_left_cancellative()
    );
    print!("{}", write_biset(&b, "corner.smg", "brandt_c2_2.smg"));
}
