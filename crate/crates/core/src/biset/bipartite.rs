use fixedbitset::FixedBitSet;

use super::{verify_biset, BisetError, EquivalenceBiset};
use crate::category::{
    check_morita_context, is_bipartite, l_pairs, left_cancellative_category, semigroupoid_l,
    BipartiteReport, FiniteCategory, Functor,
};
use crate::semigroup::{Elem, InverseSemigroup};
use crate::semigroupoid::{InverseSemigroupoid, Semigroupoid, SemigroupoidError};

/// `R(S, T; X) = S' u T' u ({1} x X x {2}) u ({2} x X x {1})`, with the
/// element indices of each part.
#[derive(Debug, Clone)]
pub struct RSemigroupoid {
    pub semigroupoid: InverseSemigroupoid,
    /// `(1, s, 1)` for each `s`.
    pub s_part: Vec<Elem>,
    /// `(2, t, 2)` for each `t`.
    pub t_part: Vec<Elem>,
    /// `(1, x, 2)` for each point.
    pub x12: Vec<Elem>,
    /// `(2, x, 1)` for each point.
    pub x21: Vec<Elem>,
}

#[derive(Debug, Clone, Copy)]
enum Part {
    S(Elem),
    T(Elem),
    X12(usize),
    X21(usize),
}

fn require_valid(b: &EquivalenceBiset) -> Result<(), BisetError> {
    match verify_biset(b).failures().next() {
        Some(f) => Err(BisetError::InvalidBiset(format!(
            "{} fails at {}",
            f.name,
            f.witness.as_deref().unwrap_or("?")
        ))),
        None => Ok(()),
    }
}

/// The eight product rules, for example `(2,x,1)(1,y,2) = (2,[x,y],2)` and
/// `(1,x,2)(2,y,1) = (1,<x,y>,1)`. Associativity, inverse-semigroupoid
/// structure and `S' = S'RS'`, `R = RS'R`, `T' = T'RT'`, `R = RT'R` are
/// all verified.
pub fn build_r_semigroupoid(b: &EquivalenceBiset) -> Result<RSemigroupoid, BisetError> {
    require_valid(b)?;
    let (s, t) = (&b.s, &b.t);
    let (ns, nt, k) = (s.order(), t.order(), b.len());
    let decode = |i: usize| {
        if i < ns {
            Part::S(i)
        } else if i < ns + nt {
            Part::T(i - ns)
        } else if i < ns + nt + k {
            Part::X12(i - ns - nt)
        } else {
            Part::X21(i - ns - nt - k)
        }
    };
    let s_part: Vec<Elem> = (0..ns).collect();
    let t_part: Vec<Elem> = (ns..ns + nt).collect();
    let x12: Vec<Elem> = (ns + nt..ns + nt + k).collect();
    let x21: Vec<Elem> = (ns + nt + k..ns + nt + 2 * k).collect();
    let mut names = Vec::with_capacity(ns + nt + 2 * k);
    let mut blocks = Vec::with_capacity(ns + nt + 2 * k);
    for a in s.elements() {
        names.push(format!("(1,{},1)", s.name(a)));
        blocks.push((0, 0));
    }
    for a in t.elements() {
        names.push(format!("(2,{},2)", t.name(a)));
        blocks.push((1, 1));
    }
    for x in 0..k {
        names.push(format!("(1,{},2)", b.point(x)));
        blocks.push((0, 1));
    }
    for x in 0..k {
        names.push(format!("(2,{},1)", b.point(x)));
        blocks.push((1, 0));
    }
    let base = Semigroupoid::new(names, blocks, |i, j| match (decode(i), decode(j)) {
        (Part::S(a), Part::S(c)) => s_part[s.mul(a, c)],
        (Part::T(a), Part::T(c)) => t_part[t.mul(a, c)],
        (Part::S(a), Part::X12(x)) => x12[b.left(a, x)],
        (Part::X12(x), Part::T(c)) => x12[b.right(x, c)],
        (Part::T(c), Part::X21(x)) => x21[b.right(x, t.star(c))],
        (Part::X21(x), Part::S(a)) => x21[b.left(s.star(a), x)],
        (Part::X21(x), Part::X12(y)) => t_part[b.inner_t(x, y)],
        (Part::X12(x), Part::X21(y)) => s_part[b.inner_s(x, y)],
        _ => unreachable!("only called on composable blocks"),
    })
    .map_err(|e| match e {
        SemigroupoidError::AssociativityFailure { a, b, c } => {
            BisetError::AssociativityFailure(a, b, c)
        }
        other => BisetError::InvalidBiset(other.to_string()),
    })?;
    let semigroupoid =
        InverseSemigroupoid::new(base).map_err(|e| BisetError::InvalidBiset(e.to_string()))?;
    let r = RSemigroupoid {
        semigroupoid,
        s_part,
        t_part,
        x12,
        x21,
    };
    r.check_enlargement_identities()?;
    Ok(r)
}

impl RSemigroupoid {
    fn set(&self, elems: &[Elem]) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.semigroupoid.order());
        set.extend(elems.iter().copied());
        set
    }

    fn check_enlargement_identities(&self) -> Result<(), BisetError> {
        let g = self.semigroupoid.semigroupoid();
        let mut all = FixedBitSet::with_capacity(g.order());
        all.insert_range(..);
        let triple = |a: &FixedBitSet, b: &FixedBitSet, c: &FixedBitSet| {
            g.product_set(&g.product_set(a, b), c)
        };
        let (sp, tp) = (self.set(&self.s_part), self.set(&self.t_part));
        if triple(&sp, &all, &sp) != sp {
            return Err(BisetError::EnlargementIdentity("S' = S'RS'"));
        }
        if triple(&all, &sp, &all) != all {
            return Err(BisetError::EnlargementIdentity("R = RS'R"));
        }
        if triple(&tp, &all, &tp) != tp {
            return Err(BisetError::EnlargementIdentity("T' = T'RT'"));
        }
        if triple(&all, &tp, &all) != all {
            return Err(BisetError::EnlargementIdentity("R = RT'R"));
        }
        Ok(())
    }
}

/// `U = [L(S), L(T)]` with the two part inclusions.
#[derive(Debug, Clone)]
pub struct BipartiteU {
    pub category: FiniteCategory,
    pub r: RSemigroupoid,
    pub l_s: FiniteCategory,
    pub l_t: FiniteCategory,
    pub embed_s: Functor,
    pub embed_t: Functor,
}

impl BipartiteU {
    pub fn bipartite_report(&self) -> BipartiteReport {
        is_bipartite(
            &self.category,
            (&self.l_s, &self.embed_s),
            (&self.l_t, &self.embed_t),
        )
        .expect("the parts are full subcategories")
    }

    /// Both inclusions are weak equivalences.
    pub fn is_morita_context(&self) -> bool {
        check_morita_context(
            &self.l_s,
            &self.l_t,
            &self.category,
            &self.embed_s,
            &self.embed_t,
        )
        .expect("inclusions are functors")
    }
}

fn embedding(
    r: &InverseSemigroupoid,
    u_pairs: &[(Elem, Elem)],
    part: &[Elem],
    sub: &InverseSemigroup,
) -> Functor {
    let idem = r.idempotents();
    Functor {
        obj_map: sub
            .idempotent_list()
            .iter()
            .map(|&e| idem.iter().position(|&f| f == part[e]).unwrap())
            .collect(),
        mor_map: l_pairs(sub)
            .iter()
            .map(|&(e, a)| {
                u_pairs
                    .iter()
                    .position(|&p| p == (part[e], part[a]))
                    .unwrap()
            })
            .collect(),
    }
}

/// Objects are `E(S)` and `E(T)`; besides `L(S)` and `L(T)` a morphism is
/// `(x, d)` with `<x,x> <= d`, from `[x,x]` to `d`, or `(x, e)` with
/// `[x,x] <= e`, from `<x,x>` to `e`. Composites are read off `R(S, T; X)`:
/// `(x, e)(s, d) = (s*x, e)` is the product `(2,x,1)(1,s,1)`.
pub fn build_bipartite_u(b: &EquivalenceBiset) -> Result<BipartiteU, BisetError> {
    let r = build_r_semigroupoid(b)?;
    let g = &r.semigroupoid;
    let category = semigroupoid_l(g);
    let mut u_pairs = Vec::new();
    for &e in g.idempotents() {
        for x in 0..g.order() {
            if g.mul(e, x) == Some(x) {
                u_pairs.push((e, x));
            }
        }
    }
    let embed_s = embedding(g, &u_pairs, &r.s_part, &b.s);
    let embed_t = embedding(g, &u_pairs, &r.t_part, &b.t);
    Ok(BipartiteU {
        category,
        l_s: left_cancellative_category(&b.s),
        l_t: left_cancellative_category(&b.t),
        r,
        embed_s,
        embed_t,
    })
}

/// For `d = <x,x>` and `s = ds`, `s = <x, s*x>`; and for `<y,y> <= <x,x>`,
/// `y = x[x,y]`.
pub fn ulc_check(b: &EquivalenceBiset) -> bool {
    let s = &b.s;
    (0..b.len()).all(|x| {
        let d = b.inner_s(x, x);
        let first = s
            .elements()
            .filter(|&a| s.mul(d, a) == a)
            .all(|a| b.inner_s(x, b.left(s.star(a), x)) == a);
        let second = (0..b.len())
            .filter(|&y| s.natural_leq(b.inner_s(y, y), d))
            .all(|y| b.right(x, b.inner_t(x, y)) == y);
        first && second
    })
}
