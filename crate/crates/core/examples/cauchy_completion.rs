use morita::category::*;
use morita::semigroup::*;

fn main() {
    let s = group_with_zero(&cyclic_group(2).unwrap()).unwrap();
    let l = left_cancellative_category(&s);
    let c = cauchy_completion(&s);
    println!(
        "L(S): {} objects, {} morphisms",
        l.object_count(),
        l.morphism_count()
    );
    println!(
        "C(S): {} objects, {} morphisms",
        c.object_count(),
        c.morphism_count()
    );
    println!("idempotents split in C(S): {}", c.idempotents_split());
    println!(
        "C(S) agrees with spans over L(S): {}",
        cauchy_vs_span(&s).unwrap()
    );
    print!("{}", write_category(&c));
}
