use fixedbitset::FixedBitSet;

use super::{BisetError, EquivalenceBiset};
use crate::semigroup::{Elem, FiniteSemigroup, InverseSemigroup};

fn inverse_sub(
    r: &FiniteSemigroup,
    sub: &FixedBitSet,
    which: &str,
) -> Result<(InverseSemigroup, Vec<Elem>), BisetError> {
    let fail = |m: String| BisetError::PreconditionFailed(m);
    let (induced, embedding) = r
        .induced(sub)
        .map_err(|e| fail(format!("{which} is not a subsemigroup: {e}")))?;
    let inverse = induced
        .as_inverse()
        .map_err(|e| fail(format!("{which} is not inverse: {e}")))?;
    match r.is_semigroup_enlargement(sub) {
        Ok(true) => Ok((inverse, embedding)),
        _ => Err(fail(format!("R is not an enlargement of {which}"))),
    }
}

/// `X = {(x, x') : x in SRT, x' in V(x) /\ TRS}` with `s(x, x') = (sx, x's*)`,
/// `(x, x')t = (xt, t*x')`, `<(x, x'), (y, y')> = xy'` and
/// `[(x, x'), (y, y')] = x'y`. Every inverse `x'` gives its own point.
pub fn biset_from_regular_enlargement(
    r: &FiniteSemigroup,
    s_sub: &FixedBitSet,
    t_sub: &FixedBitSet,
) -> Result<EquivalenceBiset, BisetError> {
    if !r.is_regular() {
        return Err(BisetError::PreconditionFailed("R is not regular".into()));
    }
    let (s, s_emb) = inverse_sub(r, s_sub, "S")?;
    let (t, t_emb) = inverse_sub(r, t_sub, "T")?;
    let all = r.full_set();
    let srt = r.product_set(&r.product_set(s_sub, &all), t_sub);
    let trs = r.product_set(&r.product_set(t_sub, &all), s_sub);
    let mut pairs = Vec::new();
    for x in srt.ones() {
        for y in r.inverses_of(x) {
            if trs.contains(y) {
                pairs.push((x, y));
            }
        }
    }
    let find = |p: (Elem, Elem)| {
        pairs
            .iter()
            .position(|&q| q == p)
            .ok_or_else(|| BisetError::PreconditionFailed("action leaves X".into()))
    };
    let back = |emb: &[Elem], v: Elem, which: &str| {
        emb.iter()
            .position(|&e| e == v)
            .ok_or_else(|| BisetError::PreconditionFailed(format!("pairing value outside {which}")))
    };
    let k = pairs.len();
    let mut lact = Vec::with_capacity(s.order() * k);
    for a in s.elements() {
        let (sa, sa_star) = (s_emb[a], s_emb[s.star(a)]);
        for &(x, y) in &pairs {
            lact.push(find((r.mul(sa, x), r.mul(y, sa_star)))?);
        }
    }
    let mut ract = Vec::with_capacity(k * t.order());
    for &(x, y) in &pairs {
        for c in t.elements() {
            let (tc, tc_star) = (t_emb[c], t_emb[t.star(c)]);
            ract.push(find((r.mul(x, tc), r.mul(tc_star, y)))?);
        }
    }
    let mut inn_s = Vec::with_capacity(k * k);
    let mut inn_t = Vec::with_capacity(k * k);
    for &(x, x2) in &pairs {
        for &(y, y2) in &pairs {
            inn_s.push(back(&s_emb, r.mul(x, y2), "S")?);
            inn_t.push(back(&t_emb, r.mul(x2, y), "T")?);
        }
    }
    let points = pairs
        .iter()
        .map(|&(x, y)| format!("({},{})", r.name(x), r.name(y)))
        .collect();
    EquivalenceBiset::new(s, t, points, lact, ract, inn_s, inn_t)
}
