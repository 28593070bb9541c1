//! Closed actions as presheaves on the Cauchy completion.

use morita::actions::*;
use morita::semigroup::*;

fn main() {
    let s = chain_semilattice(3).unwrap();
    let samples = sample_actions(&s, 6, 42);
    for (name, x) in &samples {
        let p = q_of(x, &s).unwrap();
        println!(
            "{name}: {} points, closed {}, unit is a bijection {}",
            x.len(),
            x.is_closed(&s).unwrap(),
            unit_iso_check(&p, &s).unwrap()
        );
    }
    let (x, y) = (&samples[0].1, &samples[1].1);
    let (ok, homs, nats) = fullness_faithfulness_check(&s, x, y).unwrap();
    println!("{homs} equivariant maps, {nats} natural transformations, match {ok}");
}
