use std::ops::Deref;

use thiserror::Error;

use super::{Elem, FiniteSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InverseError {
    #[error("element {0} has no inverse")]
    NotRegular(String),
    #[error("idempotents {0} and {1} do not commute")]
    IdempotentsDontCommute(String, String),
    #[error("element {element} has inverses {first} and {second}")]
    NonUniqueInverse {
        element: String,
        first: String,
        second: String,
    },
}

/// A finite semigroup in which every element has a unique inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSemigroup {
    base: FiniteSemigroup,
    star: Vec<Elem>,
    idempotents: Vec<Elem>,
}

impl Deref for InverseSemigroup {
    type Target = FiniteSemigroup;

    fn deref(&self) -> &FiniteSemigroup {
        &self.base
    }
}

impl InverseSemigroup {
    /// Succeeds iff `base` is regular with commuting idempotents.
    pub fn new(base: FiniteSemigroup) -> Result<Self, InverseError> {
        let n = base.order();
        let mut star = Vec::with_capacity(n);
        for s in 0..n {
            match base.inverses_of(s).first() {
                Some(&t) => star.push(t),
                None => return Err(InverseError::NotRegular(base.name(s).into())),
            }
        }
        let idempotents = base.idempotents();
        for (i, &e) in idempotents.iter().enumerate() {
            for &f in &idempotents[i + 1..] {
                if base.mul(e, f) != base.mul(f, e) {
                    return Err(InverseError::IdempotentsDontCommute(
                        base.name(e).into(),
                        base.name(f).into(),
                    ));
                }
            }
        }
        for s in 0..n {
            let inverses = base.inverses_of(s);
            if inverses.len() > 1 {
                return Err(InverseError::NonUniqueInverse {
                    element: base.name(s).into(),
                    first: base.name(inverses[0]).into(),
                    second: base.name(inverses[1]).into(),
                });
            }
        }
        Ok(Self {
            base,
            star,
            idempotents,
        })
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.base
    }

    pub fn into_semigroup(self) -> FiniteSemigroup {
        self.base
    }

    #[inline]
    pub fn star(&self, s: Elem) -> Elem {
        self.star[s]
    }

    /// `E(S)` in index order (cached).
    pub fn idempotent_list(&self) -> &[Elem] {
        &self.idempotents
    }

    /// `s*s`, the domain idempotent.
    #[inline]
    pub fn dom(&self, s: Elem) -> Elem {
        self.mul(self.star[s], s)
    }

    /// `ss*`, the range idempotent.
    #[inline]
    pub fn ran(&self, s: Elem) -> Elem {
        self.mul(s, self.star[s])
    }

    /// The natural partial order: `s <= t` iff `s = t(s*s)`.
    pub fn natural_leq(&self, s: Elem, t: Elem) -> bool {
        s == self.mul(t, self.dom(s))
    }

    /// Every local submonoid `eSe` is E-unitary.
    pub fn is_locally_e_unitary(&self) -> bool {
        self.locally_e_unitary_witness().is_none()
    }

    /// A triple `(e, s, d)` with `s` in `eSe` not idempotent but above the
    /// idempotent `d` of `eSe`.
    pub fn locally_e_unitary_witness(&self) -> Option<(Elem, Elem, Elem)> {
        for &e in &self.idempotents {
            for s in self.elements() {
                if self.mul(self.mul(e, s), e) != s || self.is_idempotent(s) {
                    continue;
                }
                for &d in &self.idempotents {
                    let in_local = self.mul(self.mul(e, d), e) == d;
                    if in_local && self.natural_leq(d, s) {
                        return Some((e, s, d));
                    }
                }
            }
        }
        None
    }
}

impl FiniteSemigroup {
    pub fn as_inverse(&self) -> Result<InverseSemigroup, InverseError> {
        InverseSemigroup::new(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::*;

    #[test]
    fn group_inverse() {
        let c2 = cyclic_group(2).unwrap();
        assert_eq!(c2.star(1), 1);
        assert_eq!(c2.idempotents(), vec![0]);
        let c3 = cyclic_group(3).unwrap();
        assert_eq!(c3.inverses_of(1), vec![2]);
    }

    #[test]
    fn brandt_star_transposes() {
        let b = brandt(&trivial_group(), 2).unwrap();
        let e12 = b.index_of("(1,2)").unwrap();
        let e21 = b.index_of("(2,1)").unwrap();
        assert_eq!(b.star(e12), e21);
        let idem: Vec<&str> = b.idempotents().iter().map(|&e| b.name(e)).collect();
        assert_eq!(idem, vec!["(1,1)", "(2,2)", "0"]);
        let zero = b.index_of("0").unwrap();
        assert!(b.natural_leq(zero, e12));
        assert!(!b.natural_leq(e12, zero));
    }

    #[test]
    fn left_zero_band_is_not_inverse() {
        let names = vec!["x".to_string(), "y".to_string()];
        let lz = FiniteSemigroup::from_fn(names, |a, _| a).unwrap();
        assert_eq!(
            lz.as_inverse(),
            Err(InverseError::IdempotentsDontCommute("x".into(), "y".into()))
        );
    }

    #[test]
    fn null_semigroup_is_not_regular() {
        let names = vec!["a".to_string(), "z".to_string()];
        let null = FiniteSemigroup::new(names, vec![1, 1, 1, 1]).unwrap();
        assert_eq!(null.as_inverse(), Err(InverseError::NotRegular("a".into())));
    }

    #[test]
    fn chain_order() {
        let chain = chain_semilattice(2).unwrap();
        assert!(chain.natural_leq(1, 0));
        assert!(!chain.natural_leq(0, 1));
    }

    #[test]
    fn group_order_is_discrete() {
        let c4 = cyclic_group(4).unwrap();
        for s in c4.elements() {
            for t in c4.elements() {
                assert_eq!(c4.natural_leq(s, t), s == t);
            }
        }
    }

    #[test]
    fn locally_e_unitary_examples() {
        assert!(chain_semilattice(3).unwrap().is_locally_e_unitary());
        assert!(cyclic_group(5).unwrap().is_locally_e_unitary());
        assert!(brandt(&trivial_group(), 2).unwrap().is_locally_e_unitary());
        // C2 with zero: 0 <= g and 0 is an idempotent in 1S1 while g is not
        let c2 = cyclic_group(2).unwrap();
        assert!(!group_with_zero(&c2).unwrap().is_locally_e_unitary());
    }
}
