//! Finite semigroups given by Cayley tables.
//!
//! Elements are dense indices `0..n`; the names are only used for display and
//! for the `.smg` text format.

mod builders;
pub(crate) mod format;
mod inverse;

pub use builders::{
    brandt, chain_semilattice, cyclic_group, group_with_zero, symmetric_inverse_monoid,
    trivial_group, BuildError,
};
pub use format::{parse_semigroup, write_semigroup, ParseError};
pub use inverse::{InverseError, InverseSemigroup};

use fixedbitset::FixedBitSet;
use thiserror::Error;

/// Index of an element of a finite semigroup.
pub type Elem = usize;

/// A triple `(a, b, c)` with `(ab)c != a(bc)`, by name and by index.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not associative: ({a}{b}){c} = {left} but {a}({b}{c}) = {right}")]
pub struct AssociativityFailure {
    pub a: String,
    pub b: String,
    pub c: String,
    pub left: String,
    pub right: String,
    pub triple: (Elem, Elem, Elem),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("table has {rows} rows but {n} elements")]
    Shape { n: usize, rows: usize },
    #[error("table entry {value} out of range at ({row}, {col})")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error(transparent)]
    NotAssociative(Box<AssociativityFailure>),
    #[error("subset is not closed under multiplication: {a}{b} = {product}")]
    NotASubsemigroup {
        a: String,
        b: String,
        product: String,
    },
    #[error("empty semigroup")]
    Empty,
}

/// A finite semigroup stored as an `n x n` multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    names: Vec<String>,
    table: Vec<Elem>,
}

/// Local-unit properties of a semigroup, each decided by enumerating products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct LocalUnitFlags {
    /// `S E(S) = S`
    pub right_local_units: bool,
    /// `E(S) S = S`
    pub left_local_units: bool,
    pub local_units: bool,
    /// `S E(S) S = S`
    pub sandwich: bool,
}

impl FiniteSemigroup {
    /// Builds a semigroup from element names and a row-major table, checking
    /// associativity. The first failing triple in index order is reported.
    pub fn new(names: Vec<String>, table: Vec<Elem>) -> Result<Self, SemigroupError> {
        let s = Self::new_unchecked(names, table)?;
        if let Some((a, b, c)) = s.associativity_witness() {
            let left = s.mul(s.mul(a, b), c);
            let right = s.mul(a, s.mul(b, c));
            return Err(SemigroupError::NotAssociative(Box::new(
                AssociativityFailure {
                    a: s.name(a).into(),
                    b: s.name(b).into(),
                    c: s.name(c).into(),
                    left: s.name(left).into(),
                    right: s.name(right).into(),
                    triple: (a, b, c),
                },
            )));
        }
        Ok(s)
    }

    /// Builds the table without the associativity check; shape and range are
    /// still validated.
    pub fn new_unchecked(names: Vec<String>, table: Vec<Elem>) -> Result<Self, SemigroupError> {
        let n = names.len();
        if n == 0 {
            return Err(SemigroupError::Empty);
        }
        if table.len() != n * n {
            return Err(SemigroupError::Shape {
                n,
                rows: table.len() / n,
            });
        }
        if let Some(pos) = table.iter().position(|&v| v >= n) {
            return Err(SemigroupError::OutOfRange {
                row: pos / n,
                col: pos % n,
                value: table[pos],
            });
        }
        Ok(Self { names, table })
    }

    /// Builds a semigroup from a product closure over `0..n`.
    pub fn from_fn(
        names: Vec<String>,
        mut mul: impl FnMut(Elem, Elem) -> Elem,
    ) -> Result<Self, SemigroupError> {
        let n = names.len();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(mul(a, b));
            }
        }
        Self::new(names, table)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.names.len() + b]
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn index_of(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name)
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    /// First triple `(a, b, c)` in lexicographic order with `(ab)c != a(bc)`.
    pub fn associativity_witness(&self) -> Option<(Elem, Elem, Elem)> {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_idempotent(&self, e: Elem) -> bool {
        self.mul(e, e) == e
    }

    /// `E(S)` in index order.
    pub fn idempotents(&self) -> Vec<Elem> {
        self.elements().filter(|&e| self.is_idempotent(e)).collect()
    }

    /// `V(s) = { t : sts = s and tst = t }`.
    pub fn inverses_of(&self, s: Elem) -> Vec<Elem> {
        self.elements()
            .filter(|&t| {
                let st = self.mul(s, t);
                self.mul(st, s) == s && self.mul(self.mul(t, s), t) == t
            })
            .collect()
    }

    pub fn is_regular(&self) -> bool {
        self.elements().all(|s| !self.inverses_of(s).is_empty())
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut all = FixedBitSet::with_capacity(self.order());
        all.insert_range(..);
        all
    }

    pub fn subset(&self, elems: impl IntoIterator<Item = Elem>) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.order());
        for e in elems {
            set.insert(e);
        }
        set
    }

    /// The product set `AB = { ab : a in A, b in B }`.
    pub fn product_set(&self, a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.order());
        for x in a.ones() {
            for y in b.ones() {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    pub fn local_unit_flags(&self) -> LocalUnitFlags {
        let all = self.full_set();
        let idem = self.subset(self.idempotents());
        let se = self.product_set(&all, &idem);
        let es = self.product_set(&idem, &all);
        let ses = self.product_set(&se, &all);
        let right = se == all;
        let left = es == all;
        LocalUnitFlags {
            right_local_units: right,
            left_local_units: left,
            local_units: right && left,
            sandwich: ses == all,
        }
    }

    pub fn has_right_local_units(&self) -> bool {
        let all = self.full_set();
        let idem = self.subset(self.idempotents());
        self.product_set(&all, &idem) == all
    }

    /// Fails with the first pair (in index order) whose product leaves the subset.
    pub fn check_subsemigroup(&self, sub: &FixedBitSet) -> Result<(), SemigroupError> {
        for a in sub.ones() {
            for b in sub.ones() {
                let ab = self.mul(a, b);
                if !sub.contains(ab) {
                    return Err(SemigroupError::NotASubsemigroup {
                        a: self.name(a).into(),
                        b: self.name(b).into(),
                        product: self.name(ab).into(),
                    });
                }
            }
        }
        Ok(())
    }

    /// `T` (this semigroup) is an enlargement of the subsemigroup `S` when
    /// `S = STS` and `T = TST`.
    pub fn is_semigroup_enlargement(&self, sub: &FixedBitSet) -> Result<bool, SemigroupError> {
        self.check_subsemigroup(sub)?;
        let all = self.full_set();
        let sts = self.product_set(&self.product_set(sub, &all), sub);
        let tst = self.product_set(&self.product_set(&all, sub), &all);
        Ok(&sts == sub && tst == all)
    }

    /// Closure of a set of generators under multiplication.
    pub fn generated(&self, gens: impl IntoIterator<Item = Elem>) -> FixedBitSet {
        let mut set = self.subset(gens);
        let mut frontier: Vec<Elem> = set.ones().collect();
        while let Some(a) = frontier.pop() {
            let current: Vec<Elem> = set.ones().collect();
            for b in current {
                for p in [self.mul(a, b), self.mul(b, a)] {
                    if !set.put(p) {
                        frontier.push(p);
                    }
                }
            }
        }
        set
    }

    /// The subsemigroup on `sub` as a standalone semigroup, together with the
    /// embedding (position `i` of the result is element `embedding[i]` here).
    pub fn induced(
        &self,
        sub: &FixedBitSet,
    ) -> Result<(FiniteSemigroup, Vec<Elem>), SemigroupError> {
        self.check_subsemigroup(sub)?;
        let embedding: Vec<Elem> = sub.ones().collect();
        let mut position = vec![usize::MAX; self.order()];
        for (i, &e) in embedding.iter().enumerate() {
            position[e] = i;
        }
        let names = embedding.iter().map(|&e| self.names[e].clone()).collect();
        let table = embedding
            .iter()
            .flat_map(|&a| embedding.iter().map(move |&b| (a, b)))
            .map(|(a, b)| position[self.mul(a, b)])
            .collect();
        let sg = FiniteSemigroup::new_unchecked(names, table)?;
        Ok((sg, embedding))
    }

    /// A copy with one table cell overwritten; the result is not checked.
    pub fn with_cell(&self, a: Elem, b: Elem, value: Elem) -> FiniteSemigroup {
        let mut copy = self.clone();
        let n = copy.order();
        copy.table[a * n + b] = value;
        copy
    }
}
