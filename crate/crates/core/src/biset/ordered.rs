use super::{BisetError, EquivalenceBiset};
use crate::groupoid::{inductive_groupoid_of, Arrow, OrderedFunctor, OrderedGroupoid};
use crate::semigroup::{Elem, InverseSemigroup};

fn check_embedding(
    g: &OrderedGroupoid,
    s: &InverseSemigroup,
    emb: &[Arrow],
    which: &str,
) -> Result<(), BisetError> {
    let fail = |m: String| BisetError::NotAnEnlargement(m);
    if emb.len() != s.order() || emb.iter().any(|&a| a >= g.arrow_count()) {
        return Err(fail(format!("embedding of {which} has the wrong shape")));
    }
    let gs = inductive_groupoid_of(s);
    OrderedFunctor::inclusion(g, &gs, emb)
        .check(&gs, g)
        .map_err(|e| fail(format!("embedding of {which}: {e}")))?;
    match g.is_enlargement(emb) {
        Ok(true) => Ok(()),
        Ok(false) => Err(fail(format!("not an enlargement of G({which})"))),
        Err(e) => Err(fail(format!("{which}: {e}"))),
    }
}

/// `X` is the set of arrows from objects of `G(T)` to objects of `G(S)`, with
/// `sx = s . x`, `xt = x . t`, `<x, y> = x . y^-1` and `[x, y] = x^-1 . y`,
/// all pseudoproducts in `G`.
pub fn biset_from_ordered_enlargement(
    g: &OrderedGroupoid,
    s: &InverseSemigroup,
    t: &InverseSemigroup,
    emb_s: &[Arrow],
    emb_t: &[Arrow],
) -> Result<EquivalenceBiset, BisetError> {
    check_embedding(g, s, emb_s, "S")?;
    check_embedding(g, t, emb_t, "T")?;
    let objects_of = |emb: &[Arrow]| {
        let mut objs = vec![false; g.object_count()];
        for &a in emb {
            objs[g.dom(a)] = true;
        }
        objs
    };
    let (s_objs, t_objs) = (objects_of(emb_s), objects_of(emb_t));
    let xs: Vec<Arrow> = (0..g.arrow_count())
        .filter(|&a| t_objs[g.dom(a)] && s_objs[g.cod(a)])
        .collect();
    let pp = |a: Arrow, b: Arrow| {
        g.pseudoproduct(a, b).ok_or_else(|| {
            BisetError::UndefinedPseudoproduct(g.label(a).to_string(), g.label(b).to_string())
        })
    };
    let point = |a: Arrow| {
        xs.iter()
            .position(|&x| x == a)
            .ok_or_else(|| BisetError::NotAnEnlargement(format!("{} leaves X", g.label(a))))
    };
    let element = |emb: &[Arrow], a: Arrow| -> Result<Elem, BisetError> {
        emb.iter().position(|&e| e == a).ok_or_else(|| {
            BisetError::NotAnEnlargement(format!("{} is not in the image", g.label(a)))
        })
    };
    let k = xs.len();
    let mut lact = Vec::with_capacity(s.order() * k);
    for a in s.elements() {
        for &x in &xs {
            lact.push(point(pp(emb_s[a], x)?)?);
        }
    }
    let mut ract = Vec::with_capacity(k * t.order());
    for &x in &xs {
        for c in t.elements() {
            ract.push(point(pp(x, emb_t[c])?)?);
        }
    }
    let mut inn_s = Vec::with_capacity(k * k);
    let mut inn_t = Vec::with_capacity(k * k);
    for &x in &xs {
        for &y in &xs {
            inn_s.push(element(emb_s, pp(x, g.inverse(y))?)?);
            inn_t.push(element(emb_t, pp(g.inverse(x), y)?)?);
        }
    }
    let points = xs.iter().map(|&x| g.label(x).to_string()).collect();
    EquivalenceBiset::new(s.clone(), t.clone(), points, lact, ract, inn_s, inn_t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biset::{
        biset_from_regular_enlargement, build_r_semigroupoid, identity_biset, verify_biset,
    };
    use crate::groupoid::ordered_groupoid_of;
    use crate::semigroup::*;

    #[test]
    fn self_enlargement() {
        let s = symmetric_inverse_monoid(2).unwrap();
        let g = inductive_groupoid_of(&s);
        let id: Vec<Arrow> = s.elements().collect();
        let b = biset_from_ordered_enlargement(&g, &s, &s, &id, &id).unwrap();
        assert_eq!(b.len(), s.order());
        assert!(verify_biset(&b).holds());
    }

    #[test]
    fn round_trip_through_r() {
        let br = brandt(&trivial_group(), 2).unwrap();
        let corner = br.subset([br.index_of("(1,1)").unwrap(), br.index_of("0").unwrap()]);
        for x in [
            biset_from_regular_enlargement(&br, &corner, &br.full_set()).unwrap(),
            identity_biset(&cyclic_group(2).unwrap()),
        ] {
            let r = build_r_semigroupoid(&x).unwrap();
            let g = ordered_groupoid_of(&r.semigroupoid).unwrap();
            assert!(g.is_enlargement(&r.s_part).unwrap());
            assert!(g.is_enlargement(&r.t_part).unwrap());
            let back =
                biset_from_ordered_enlargement(&g, &x.s, &x.t, &r.s_part, &r.t_part).unwrap();
            assert_eq!(back.len(), x.len());
            assert!(verify_biset(&back).holds());
        }
    }

    #[test]
    fn disjoint_union_is_rejected() {
        let s = cyclic_group(2).unwrap();
        let gs = inductive_groupoid_of(&s);
        let (u, left, right) = OrderedGroupoid::disjoint_union(&gs, &gs);
        let err = biset_from_ordered_enlargement(&u, &s, &s, &left, &right).unwrap_err();
        assert!(matches!(err, BisetError::NotAnEnlargement(_)));
    }
}
