use morita::category::left_cancellative_category;
use morita::corpus::random_inverse_subsemigroups;

fn main() {
    for (i, s) in random_inverse_subsemigroups(8, 3).iter().enumerate() {
        println!(
            "sample {i}: order {:2}, locally E-unitary {:5}, L(S) right cancellative {}",
            s.order(),
            s.is_locally_e_unitary(),
            left_cancellative_category(s).is_right_cancellative()
        );
    }
}
