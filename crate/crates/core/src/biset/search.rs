//! Exhaustive search for equivalence bisets of a bounded size.
//!
//! The four tables are filled cell by cell. After every decision each axiom
//! instance is evaluated on the partial tables: an instance with both sides
//! known is checked, and one with a known side and a single empty cell on the
//! other fills that cell. Points not yet mentioned are interchangeable, so a
//! point-valued cell only tries mentioned points and the least fresh one.

use super::{verify_biset, BisetError, EquivalenceBiset};
use crate::semigroup::InverseSemigroup;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

const EMPTY: usize = usize::MAX;

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub biset: Option<EquivalenceBiset>,
    /// Cell assignments made, decisions and propagations together.
    pub assignments: u64,
}

#[derive(Clone, Copy)]
enum Side {
    Known(usize),
    Cell(usize),
    Blocked,
}

struct Search<'a> {
    s: &'a InverseSemigroup,
    t: &'a InverseSemigroup,
    k: usize,
    cells: Vec<usize>,
    trail: Vec<usize>,
    order: Vec<usize>,
    assignments: u64,
    budget: u64,
}

struct Conflict;

impl<'a> Search<'a> {
    fn new(
        s: &'a InverseSemigroup,
        t: &'a InverseSemigroup,
        k: usize,
        budget: u64,
        used: u64,
    ) -> Self {
        let (ns, nt) = (s.order(), t.order());
        let total = ns * k + k * nt + 2 * k * k;
        let mut search = Self {
            s,
            t,
            k,
            cells: vec![EMPTY; total],
            trail: Vec::new(),
            order: Vec::with_capacity(total),
            assignments: used,
            budget,
        };
        let mut order = Vec::with_capacity(total);
        for x in 0..k {
            order.push(search.p(x, x));
            order.push(search.q(x, x));
            for y in 0..x {
                order.extend([
                    search.p(x, y),
                    search.p(y, x),
                    search.q(x, y),
                    search.q(y, x),
                ]);
            }
            order.extend(s.elements().map(|a| search.l(a, x)));
            order.extend(t.elements().map(|c| search.r(x, c)));
        }
        search.order = order;
        search
    }

    fn l(&self, a: usize, x: usize) -> usize {
        a * self.k + x
    }

    fn r(&self, x: usize, c: usize) -> usize {
        self.s.order() * self.k + x * self.t.order() + c
    }

    fn p(&self, x: usize, y: usize) -> usize {
        self.s.order() * self.k + self.k * self.t.order() + x * self.k + y
    }

    fn q(&self, x: usize, y: usize) -> usize {
        self.p(0, 0) + self.k * self.k + x * self.k + y
    }

    fn side(&self, cell: Option<usize>) -> Side {
        match cell {
            None => Side::Blocked,
            Some(c) if self.cells[c] == EMPTY => Side::Cell(c),
            Some(c) => Side::Known(self.cells[c]),
        }
    }

    fn get(&self, cell: usize) -> Option<usize> {
        let v = self.cells[cell];
        (v != EMPTY).then_some(v)
    }

    fn side_l(&self, a: Option<usize>, x: Option<usize>) -> Side {
        self.side(a.zip(x).map(|(a, x)| self.l(a, x)))
    }

    fn side_r(&self, x: Option<usize>, c: Option<usize>) -> Side {
        self.side(x.zip(c).map(|(x, c)| self.r(x, c)))
    }

    fn side_p(&self, x: Option<usize>, y: Option<usize>) -> Side {
        self.side(x.zip(y).map(|(x, y)| self.p(x, y)))
    }

    fn side_q(&self, x: Option<usize>, y: Option<usize>) -> Side {
        self.side(x.zip(y).map(|(x, y)| self.q(x, y)))
    }

    fn assign(&mut self, cell: usize, v: usize) -> Result<(), BisetError> {
        self.assignments += 1;
        if self.assignments > self.budget {
            return Err(BisetError::BudgetExceeded(self.budget));
        }
        self.cells[cell] = v;
        self.trail.push(cell);
        Ok(())
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let c = self.trail.pop().unwrap();
            self.cells[c] = EMPTY;
        }
    }

    /// Checks or forces one equation. Returns whether a cell was filled.
    fn unify(&mut self, a: Side, b: Side) -> Result<Result<bool, Conflict>, BisetError> {
        Ok(match (a, b) {
            (Side::Known(u), Side::Known(v)) => {
                if u == v {
                    Ok(false)
                } else {
                    Err(Conflict)
                }
            }
            (Side::Known(v), Side::Cell(c)) | (Side::Cell(c), Side::Known(v)) => {
                self.assign(c, v)?;
                Ok(true)
            }
            _ => Ok(false),
        })
    }

    /// Applies every axiom instance until nothing changes.
    fn propagate(&mut self) -> Result<Result<(), Conflict>, BisetError> {
        let (s, t, k) = (self.s, self.t, self.k);
        loop {
            let mut changed = false;
            macro_rules! eq {
                ($a:expr, $b:expr) => {{
                    let (a, b) = ($a, $b);
                    match self.unify(a, b)? {
                        Ok(c) => changed |= c,
                        Err(Conflict) => return Ok(Err(Conflict)),
                    }
                }};
            }
            for x in 0..k {
                // M3 and M6
                let pxx = self.get(self.p(x, x));
                eq!(self.side_l(pxx, Some(x)), Side::Known(x));
                let qxx = self.get(self.q(x, x));
                eq!(self.side_r(Some(x), qxx), Side::Known(x));
                for y in 0..k {
                    // M2 and M5
                    let pxy = self.get(self.p(x, y));
                    eq!(
                        self.side_p(Some(y), Some(x)),
                        pxy.map_or(Side::Blocked, |v| Side::Known(s.star(v)))
                    );
                    let qyx = self.get(self.q(y, x));
                    eq!(
                        self.side_q(Some(x), Some(y)),
                        qyx.map_or(Side::Blocked, |v| Side::Known(t.star(v)))
                    );
                    // M7
                    for z in 0..k {
                        let qyz = self.get(self.q(y, z));
                        eq!(self.side_l(pxy, Some(z)), self.side_r(Some(x), qyz));
                    }
                    // M1
                    for a in s.elements() {
                        let ax = self.get(self.l(a, x));
                        let rhs = pxy.map_or(Side::Blocked, |v| Side::Known(s.mul(a, v)));
                        eq!(self.side_p(ax, Some(y)), rhs);
                    }
                    // M4
                    let qxy = self.get(self.q(x, y));
                    for c in t.elements() {
                        let yc = self.get(self.r(y, c));
                        let rhs = qxy.map_or(Side::Blocked, |v| Side::Known(t.mul(v, c)));
                        eq!(self.side_q(Some(x), yc), rhs);
                    }
                }
                for a in s.elements() {
                    let ax = self.get(self.l(a, x));
                    for b in s.elements() {
                        let bx = self.get(self.l(b, x));
                        eq!(
                            self.side_l(Some(s.mul(a, b)), Some(x)),
                            self.side_l(Some(a), bx)
                        );
                    }
                    for c in t.elements() {
                        let xc = self.get(self.r(x, c));
                        eq!(self.side_r(ax, Some(c)), self.side_l(Some(a), xc));
                    }
                }
                for c in t.elements() {
                    let xc = self.get(self.r(x, c));
                    for d in t.elements() {
                        eq!(
                            self.side_r(Some(x), Some(t.mul(c, d))),
                            self.side_r(xc, Some(d))
                        );
                    }
                }
            }
            if !changed {
                return Ok(Ok(()));
            }
        }
    }

    fn is_point_cell(&self, cell: usize) -> bool {
        cell < self.p(0, 0)
    }

    fn cell_points(&self, cell: usize) -> [usize; 2] {
        let (ns, nt, k) = (self.s.order(), self.t.order(), self.k);
        if cell < ns * k {
            [cell % k, cell % k]
        } else if cell < ns * k + k * nt {
            let x = (cell - ns * k) / nt;
            [x, x]
        } else {
            let i = (cell - self.p(0, 0)) % (k * k);
            [i / k, i % k]
        }
    }

    fn mentioned(&self, branch: usize) -> Vec<bool> {
        let mut seen = vec![false; self.k];
        for &c in &self.trail {
            for x in self.cell_points(c) {
                seen[x] = true;
            }
            if self.is_point_cell(c) {
                seen[self.cells[c]] = true;
            }
        }
        for x in self.cell_points(branch) {
            seen[x] = true;
        }
        seen
    }

    fn surjection_possible(&self) -> bool {
        let k2 = self.k * self.k;
        let check = |start: usize, n: usize| {
            let mut hit = vec![false; n];
            let mut open = 0;
            for &v in &self.cells[start..start + k2] {
                if v == EMPTY {
                    open += 1;
                } else {
                    hit[v] = true;
                }
            }
            hit.iter().filter(|&&h| !h).count() <= open
        };
        check(self.p(0, 0), self.s.order()) && check(self.q(0, 0), self.t.order())
    }

    fn solve(&mut self) -> Result<bool, BisetError> {
        if !self.surjection_possible() {
            return Ok(false);
        }
        let Some(&cell) = self.order.iter().find(|&&c| self.cells[c] == EMPTY) else {
            return Ok(true);
        };
        let candidates: Vec<usize> = if self.is_point_cell(cell) {
            let seen = self.mentioned(cell);
            let fresh = seen.iter().position(|&m| !m);
            (0..self.k)
                .filter(|&x| seen[x] || Some(x) == fresh)
                .collect()
        } else if cell < self.q(0, 0) {
            self.s.elements().collect()
        } else {
            self.t.elements().collect()
        };
        for v in candidates {
            let mark = self.trail.len();
            self.assign(cell, v)?;
            if self.propagate()?.is_ok() && self.solve()? {
                return Ok(true);
            }
            self.undo(mark);
        }
        Ok(false)
    }

    fn into_biset(self) -> EquivalenceBiset {
        let (ns, nt, k) = (self.s.order(), self.t.order(), self.k);
        let c = &self.cells;
        let (lact, rest) = c.split_at(ns * k);
        let (ract, rest) = rest.split_at(k * nt);
        let (inn_s, inn_t) = rest.split_at(k * k);
        EquivalenceBiset::new(
            self.s.clone(),
            self.t.clone(),
            (0..k).map(|x| format!("x{x}")).collect(),
            lact.to_vec(),
            ract.to_vec(),
            inn_s.to_vec(),
            inn_t.to_vec(),
        )
        .expect("complete tables have the right shape")
    }
}

/// Searches carriers of size `1..=max_points` in increasing order and returns
/// the first equivalence biset found. The budget bounds the total number of
/// cell assignments across all sizes.
pub fn exhaustive_biset_search(
    s: &InverseSemigroup,
    t: &InverseSemigroup,
    max_points: usize,
    budget: u64,
) -> Result<SearchOutcome, BisetError> {
    let mut used = 0;
    for k in 1..=max_points {
        if k * k < s.order().max(t.order()) {
            continue;
        }
        let mut search = Search::new(s, t, k, budget, used);
        let found = search.propagate()?.is_ok() && search.solve()?;
        used = search.assignments;
        if found {
            let biset = search.into_biset();
            debug_assert!(verify_biset(&biset).holds());
            return Ok(SearchOutcome {
                biset: Some(biset),
                assignments: used,
            });
        }
    }
    Ok(SearchOutcome {
        biset: None,
        assignments: used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::*;

    #[test]
    fn finds_self_biset_of_group() {
        let c2 = cyclic_group(2).unwrap();
        let out = exhaustive_biset_search(&c2, &c2, 2, DEFAULT_BUDGET).unwrap();
        let b = out.biset.expect("C2 is equivalent to itself");
        assert!(verify_biset(&b).holds());
    }

    #[test]
    fn no_biset_between_c2_and_c3() {
        let c2 = cyclic_group(2).unwrap();
        let c3 = cyclic_group(3).unwrap();
        let out = exhaustive_biset_search(&c2, &c3, 4, DEFAULT_BUDGET).unwrap();
        assert!(out.biset.is_none());
    }

    #[test]
    fn chain_and_brandt() {
        let c = chain_semilattice(2).unwrap();
        let b = brandt(&trivial_group(), 2).unwrap();
        let out = exhaustive_biset_search(&c, &b, 6, DEFAULT_BUDGET).unwrap();
        let x = out.biset.expect("the 2-chain is a corner of B(1,2)");
        assert!(verify_biset(&x).holds());
    }

    #[test]
    fn budget_is_enforced() {
        let c2 = cyclic_group(2).unwrap();
        let c3 = cyclic_group(3).unwrap();
        assert_eq!(
            exhaustive_biset_search(&c2, &c3, 4, 10).unwrap_err(),
            BisetError::BudgetExceeded(10)
        );
    }
}
