use morita::actions::*;
use morita::semigroup::*;

fn main() {
    let s = brandt(&trivial_group(), 2).unwrap();
    let munn = munn_action(&s);
    println!(
        "Munn action: {} points, anchors {:?}",
        munn.len(),
        munn.anchor
    );
    let (r, pairs) = r_of(&RightAction::regular(&s), &s);
    println!("R(S) has {} points: {:?}", r.len(), r.forget().points());
    let counit: Vec<usize> = pairs.iter().map(|&(_, p)| p).collect();
    println!(
        "counit R(S) -> S equivariant: {}",
        r.forget().is_morphism(&counit, &RightAction::regular(&s))
    );
    for (name, x) in sample_etale_actions(&s, 2, 1) {
        let ish = i_shriek(&x, &s);
        println!(
            "{name}: fibers of I!(p) {:?}, natural iso to Xe {}, RU = I*I! {}",
            ish.presheaf.fibers.iter().map(Vec::len).collect::<Vec<_>>(),
            isigu_check(&x, &s),
            i_star_i_shriek_agreement(&x, &s).unwrap()
        );
    }
}
