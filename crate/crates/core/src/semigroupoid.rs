//! Finite semigroupoids: categories without identities. Each element lives in
//! a block `(i, j)` and `a b` is defined iff the second index of `a` equals
//! the first index of `b`.

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::semigroup::{Elem, InverseSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupoidError {
    #[error("product {a}{b} defined on mismatched blocks or result block is wrong")]
    BlockMismatch { a: String, b: String },
    #[error("associativity fails at ({a}, {b}, {c})")]
    AssociativityFailure { a: String, b: String, c: String },
    #[error("element {0} has no inverse")]
    NotRegular(String),
    #[error("element {0} has more than one inverse")]
    NonUniqueInverse(String),
    #[error("idempotents {0} and {1} do not commute")]
    IdempotentsDontCommute(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroupoid {
    names: Vec<String>,
    blocks: Vec<(usize, usize)>,
    table: Vec<Option<Elem>>,
}

impl Semigroupoid {
    /// Tabulates `mul` on every block-compatible pair and checks associativity.
    pub fn new(
        names: Vec<String>,
        blocks: Vec<(usize, usize)>,
        mut mul: impl FnMut(Elem, Elem) -> Elem,
    ) -> Result<Self, SemigroupoidError> {
        let n = names.len();
        let mut table = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                if blocks[a].1 == blocks[b].0 {
                    let p = mul(a, b);
                    if blocks[p] != (blocks[a].0, blocks[b].1) {
                        return Err(SemigroupoidError::BlockMismatch {
                            a: names[a].clone(),
                            b: names[b].clone(),
                        });
                    }
                    table[a * n + b] = Some(p);
                }
            }
        }
        let s = Self {
            names,
            blocks,
            table,
        };
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = s.mul(a, b) else { continue };
                for c in 0..n {
                    let Some(abc) = s.mul(ab, c) else { continue };
                    let other = s.mul(b, c).and_then(|bc| s.mul(a, bc));
                    if other != Some(abc) {
                        return Err(SemigroupoidError::AssociativityFailure {
                            a: s.names[a].clone(),
                            b: s.names[b].clone(),
                            c: s.names[c].clone(),
                        });
                    }
                }
            }
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.table[a * self.names.len() + b]
    }

    pub fn block(&self, a: Elem) -> (usize, usize) {
        self.blocks[a]
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_idempotent(&self, e: Elem) -> bool {
        self.mul(e, e) == Some(e)
    }

    fn is_inverse_pair(&self, s: Elem, t: Elem) -> bool {
        let sts = self.mul(s, t).and_then(|st| self.mul(st, s));
        let tst = self.mul(t, s).and_then(|ts| self.mul(ts, t));
        sts == Some(s) && tst == Some(t)
    }

    /// The partial product of two subsets.
    pub fn product_set(&self, a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.order());
        for x in a.ones() {
            for y in b.ones() {
                if let Some(p) = self.mul(x, y) {
                    out.insert(p);
                }
            }
        }
        out
    }
}

/// A regular semigroupoid whose composable idempotents commute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSemigroupoid {
    base: Semigroupoid,
    star: Vec<Elem>,
    idempotents: Vec<Elem>,
}

impl InverseSemigroupoid {
    pub fn new(base: Semigroupoid) -> Result<Self, SemigroupoidError> {
        let n = base.order();
        let mut star = Vec::with_capacity(n);
        for s in 0..n {
            let inverses: Vec<Elem> = (0..n).filter(|&t| base.is_inverse_pair(s, t)).collect();
            match inverses.as_slice() {
                [] => return Err(SemigroupoidError::NotRegular(base.names[s].clone())),
                [t] => star.push(*t),
                _ => return Err(SemigroupoidError::NonUniqueInverse(base.names[s].clone())),
            }
        }
        let idempotents: Vec<Elem> = (0..n).filter(|&e| base.is_idempotent(e)).collect();
        for &e in &idempotents {
            for &f in &idempotents {
                if let (Some(ef), Some(fe)) = (base.mul(e, f), base.mul(f, e)) {
                    if ef != fe {
                        return Err(SemigroupoidError::IdempotentsDontCommute(
                            base.names[e].clone(),
                            base.names[f].clone(),
                        ));
                    }
                }
            }
        }
        Ok(Self {
            base,
            star,
            idempotents,
        })
    }

    pub fn semigroupoid(&self) -> &Semigroupoid {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.base.mul(a, b)
    }

    pub fn name(&self, a: Elem) -> &str {
        self.base.name(a)
    }

    pub fn star(&self, s: Elem) -> Elem {
        self.star[s]
    }

    pub fn idempotents(&self) -> &[Elem] {
        &self.idempotents
    }

    /// `s*s`
    pub fn dom(&self, s: Elem) -> Elem {
        self.mul(self.star[s], s).expect("s*s is always defined")
    }

    /// `ss*`
    pub fn ran(&self, s: Elem) -> Elem {
        self.mul(s, self.star[s]).expect("ss* is always defined")
    }

    /// `s <= t` iff `t(s*s)` is defined and equals `s`.
    pub fn natural_leq(&self, s: Elem, t: Elem) -> bool {
        self.mul(t, self.dom(s)) == Some(s)
    }
}

impl From<&InverseSemigroup> for InverseSemigroupoid {
    fn from(s: &InverseSemigroup) -> Self {
        let n = s.order();
        let base = Semigroupoid {
            names: s.names().to_vec(),
            blocks: vec![(0, 0); n],
            table: s.table().iter().map(|&v| Some(v)).collect(),
        };
        Self {
            base,
            star: s.elements().map(|a| s.star(a)).collect(),
            idempotents: s.idempotent_list().to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{brandt, trivial_group};

    #[test]
    fn inverse_semigroup_as_one_block() {
        let b = brandt(&trivial_group(), 2).unwrap();
        let r = InverseSemigroupoid::from(&b);
        for s in b.elements() {
            assert_eq!(r.star(s), b.star(s));
            for t in b.elements() {
                assert_eq!(r.natural_leq(s, t), b.natural_leq(s, t));
            }
        }
    }

    #[test]
    fn matrix_units_over_two_blocks() {
        // the groupoid {1,2} x {1,2} as a semigroupoid
        let names = ["11", "12", "21", "22"].map(String::from).to_vec();
        let blocks = vec![(0, 0), (0, 1), (1, 0), (1, 1)];
        let sg = Semigroupoid::new(names, blocks.clone(), |a, b| {
            let (i, _) = blocks[a];
            let (_, l) = blocks[b];
            blocks.iter().position(|&p| p == (i, l)).unwrap()
        })
        .unwrap();
        assert_eq!(sg.mul(1, 1), None);
        let inv = InverseSemigroupoid::new(sg).unwrap();
        assert_eq!(inv.star(1), 2);
        assert_eq!(inv.idempotents(), &[0, 3]);
    }
}
