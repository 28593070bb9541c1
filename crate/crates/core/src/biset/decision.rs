use serde::Serialize;

use crate::category::{
    categories_equivalent, cauchy_completion, check_weak_equivalence, skeleton, FiniteCategory,
    Functor,
};
use crate::semigroup::InverseSemigroup;

/// Shape of a skeleton: object count, morphism count and the hom-set size matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkeletonSummary {
    pub objects: usize,
    pub morphisms: usize,
    pub hom_sizes: Vec<Vec<usize>>,
}

impl SkeletonSummary {
    pub fn of(c: &FiniteCategory) -> Self {
        let sk = skeleton(c).category;
        let n = sk.object_count();
        Self {
            objects: n,
            morphisms: sk.morphism_count(),
            hom_sizes: (0..n)
                .map(|a| (0..n).map(|b| sk.hom(a, b).len()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct MoritaDecision {
    pub equivalent: bool,
    pub cauchy_s: FiniteCategory,
    pub cauchy_t: FiniteCategory,
    pub skeleton_s: SkeletonSummary,
    pub skeleton_t: SkeletonSummary,
    /// A weak equivalence `C(S) -> C(T)` and one back.
    pub witness: Option<(Functor, Functor)>,
}

impl MoritaDecision {
    /// Both witness functors are weak equivalences (vacuous without a witness).
    pub fn witness_checks(&self) -> bool {
        match &self.witness {
            None => true,
            Some((f, g)) => {
                check_weak_equivalence(f, &self.cauchy_s, &self.cauchy_t) == Ok(true)
                    && check_weak_equivalence(g, &self.cauchy_t, &self.cauchy_s) == Ok(true)
            }
        }
    }
}

/// Decides Morita equivalence by comparing the Cauchy completions `C(S)` and `C(T)`.
pub fn morita_equivalent(s: &InverseSemigroup, t: &InverseSemigroup) -> MoritaDecision {
    let cauchy_s = cauchy_completion(s);
    let cauchy_t = cauchy_completion(t);
    let witness = categories_equivalent(&cauchy_s, &cauchy_t);
    MoritaDecision {
        equivalent: witness.is_some(),
        skeleton_s: SkeletonSummary::of(&cauchy_s),
        skeleton_t: SkeletonSummary::of(&cauchy_t),
        cauchy_s,
        cauchy_t,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::*;

    #[test]
    fn positives() {
        let b12 = brandt(&trivial_group(), 2).unwrap();
        let b13 = brandt(&trivial_group(), 3).unwrap();
        let chain2 = chain_semilattice(2).unwrap();
        for (s, t) in [(&b12, &b13), (&b12, &chain2), (&b12, &b12)] {
            let d = morita_equivalent(s, t);
            assert!(d.equivalent);
            assert!(d.witness_checks());
            assert_eq!(d.skeleton_s, d.skeleton_t);
        }
        assert_eq!(morita_equivalent(&b12, &b13).skeleton_s.objects, 2);
    }

    #[test]
    fn negatives() {
        let c2 = cyclic_group(2).unwrap();
        let c3 = cyclic_group(3).unwrap();
        let d = morita_equivalent(&c2, &c3);
        assert!(!d.equivalent);
        assert_eq!(d.skeleton_s.hom_sizes, vec![vec![2]]);
        assert_eq!(d.skeleton_t.hom_sizes, vec![vec![3]]);
        assert!(
            !morita_equivalent(
                &chain_semilattice(2).unwrap(),
                &chain_semilattice(3).unwrap()
            )
            .equivalent
        );
        assert!(!morita_equivalent(&c2, &chain_semilattice(2).unwrap()).equivalent);
    }
}
