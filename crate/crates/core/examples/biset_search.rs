use morita::biset::*;
use morita::semigroup::*;

fn main() {
    let b12 = brandt(&trivial_group(), 2).unwrap();
    let ch2 = chain_semilattice(2).unwrap();
    let c2 = cyclic_group(2).unwrap();
    let c3 = cyclic_group(3).unwrap();
    for (name, s, t) in [("B(1,2), 2-chain", &b12, &ch2), ("C2, C3", &c2, &c3)] {
        match exhaustive_biset_search(s, t, 6, DEFAULT_BUDGET) {
            Ok(out) => match out.biset {
                Some(b) => println!(
                    "{name}: biset with {} points after {} assignments",
                    b.len(),
                    out.assignments
                ),
                None => println!(
                    "{name}: none up to 6 points ({} assignments)",
                    out.assignments
                ),
            },
            Err(e) => println!("{name}: {e}"),
        }
    }
}
