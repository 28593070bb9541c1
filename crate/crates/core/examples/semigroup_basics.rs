//! Build a Brandt semigroup, inspect its idempotents and natural order.

use morita::semigroup::*;

fn main() {
    let b = brandt(&trivial_group(), 2).expect("k > 0");
    println!("B(1,2) has {} elements", b.order());
    for &e in b.idempotent_list() {
        println!("idempotent {}", b.name(e));
    }
    for s in b.elements() {
        for t in b.elements().filter(|&t| t != s && b.natural_leq(s, t)) {
            println!("{} <= {}", b.name(s), b.name(t));
        }
    }
    println!("locally E-unitary: {}", b.is_locally_e_unitary());
    print!("{}", write_semigroup(&b));
}
