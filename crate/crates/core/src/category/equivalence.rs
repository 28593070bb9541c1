//! Deciding isomorphism and equivalence of finite categories.
//!
//! Two finite categories are equivalent iff their skeletons are isomorphic.
//! The isomorphism search first matches objects by hom-set profiles, then
//! matches morphisms hom set by hom set while propagating forced images
//! through the composition table.

use super::{CategoryError, FiniteCategory, Functor, Mor, Obj, UNDEFINED};

/// A skeleton together with how the original objects map onto it.
#[derive(Debug, Clone)]
pub struct Skeleton {
    pub category: FiniteCategory,
    /// Inclusion of the skeleton into the original category.
    pub inclusion: Functor,
    /// For each original object, the index of its class in the skeleton.
    pub class_of: Vec<Obj>,
}

/// Full subcategory on the smallest object of each isomorphism class.
pub fn skeleton(c: &FiniteCategory) -> Skeleton {
    let n = c.object_count();
    let mut class_of = vec![UNDEFINED; n];
    let mut reps = Vec::new();
    for a in 0..n {
        if class_of[a] != UNDEFINED {
            continue;
        }
        let class = reps.len();
        reps.push(a);
        for (b, slot) in class_of.iter_mut().enumerate().skip(a) {
            if *slot == UNDEFINED && c.iso_between(a, b).is_some() {
                *slot = class;
            }
        }
    }
    let (category, inclusion) = c.full_subcategory(&reps);
    Skeleton {
        category,
        inclusion,
        class_of,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, serde::Serialize)]
pub struct WeakEquivalenceReport {
    pub functor: bool,
    pub full: bool,
    pub faithful: bool,
    pub essentially_surjective: bool,
    /// Source objects `a, b` and a target morphism `F a -> F b` not in the image.
    pub fullness_witness: Option<(Obj, Obj, Mor)>,
    /// Two distinct parallel source morphisms with the same image.
    pub faithfulness_witness: Option<(Mor, Mor)>,
    /// A target object not isomorphic to any image object.
    pub surjectivity_witness: Option<Obj>,
}

impl WeakEquivalenceReport {
    pub fn holds(&self) -> bool {
        self.functor && self.full && self.faithful && self.essentially_surjective
    }
}

/// Full, faithful and essentially surjective, each checked exhaustively.
pub fn weak_equivalence_report(
    f: &Functor,
    source: &FiniteCategory,
    target: &FiniteCategory,
) -> Result<WeakEquivalenceReport, CategoryError> {
    let mut report = WeakEquivalenceReport {
        functor: f.is_valid(source, target)?,
        ..Default::default()
    };
    for a in 0..source.object_count() {
        for b in 0..source.object_count() {
            let images: Vec<Mor> = source.hom(a, b).iter().map(|&m| f.mor_map[m]).collect();
            if report.faithfulness_witness.is_none() {
                'outer: for (i, &x) in images.iter().enumerate() {
                    for (j, &y) in images.iter().enumerate().skip(i + 1) {
                        if x == y {
                            let hom = source.hom(a, b);
                            report.faithfulness_witness = Some((hom[i], hom[j]));
                            break 'outer;
                        }
                    }
                }
            }
            if report.fullness_witness.is_none() {
                let (fa, fb) = (f.obj_map[a], f.obj_map[b]);
                if let Some(&m) = target.hom(fa, fb).iter().find(|m| !images.contains(m)) {
                    report.fullness_witness = Some((a, b, m));
                }
            }
        }
    }
    report.surjectivity_witness = (0..target.object_count()).find(|&d| {
        !f.obj_map
            .iter()
            .any(|&fa| fa == d || target.iso_between(fa, d).is_some())
    });
    report.full = report.fullness_witness.is_none();
    report.faithful = report.faithfulness_witness.is_none();
    report.essentially_surjective = report.surjectivity_witness.is_none();
    Ok(report)
}

pub fn check_weak_equivalence(
    f: &Functor,
    source: &FiniteCategory,
    target: &FiniteCategory,
) -> Result<bool, CategoryError> {
    Ok(weak_equivalence_report(f, source, target)?.holds())
}

/// `A -P-> U <-Q- B` with both legs weak equivalences.
pub fn check_morita_context(
    a: &FiniteCategory,
    b: &FiniteCategory,
    u: &FiniteCategory,
    p: &Functor,
    q: &Functor,
) -> Result<bool, CategoryError> {
    Ok(check_weak_equivalence(p, a, u)? && check_weak_equivalence(q, b, u)?)
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct BipartiteReport {
    /// The two parts partition the objects.
    pub b1: bool,
    /// Every object of either part is isomorphic to an object of the other.
    pub b2: bool,
}

impl BipartiteReport {
    pub fn holds(&self) -> bool {
        self.b1 && self.b2
    }
}

fn is_full_embedding(
    f: &Functor,
    sub: &FiniteCategory,
    u: &FiniteCategory,
) -> Result<bool, CategoryError> {
    if !f.is_valid(sub, u)? {
        return Ok(false);
    }
    let mut seen = vec![false; u.object_count()];
    for &a in &f.obj_map {
        if std::mem::replace(&mut seen[a], true) {
            return Ok(false);
        }
    }
    let report = weak_equivalence_report(f, sub, u)?;
    Ok(report.full && report.faithful)
}

/// Checks the two bipartite conditions for full subcategories `A`, `B` of `U`
/// given by their inclusions.
pub fn is_bipartite(
    u: &FiniteCategory,
    (a, pa): (&FiniteCategory, &Functor),
    (b, pb): (&FiniteCategory, &Functor),
) -> Result<BipartiteReport, CategoryError> {
    if !is_full_embedding(pa, a, u)? || !is_full_embedding(pb, b, u)? {
        return Err(CategoryError::NotFullSubcategory);
    }
    let mut count = vec![0usize; u.object_count()];
    for &x in pa.obj_map.iter().chain(&pb.obj_map) {
        count[x] += 1;
    }
    let b1 = count.iter().all(|&c| c == 1);
    let crosses = |from: &[Obj], to: &[Obj]| {
        from.iter()
            .all(|&x| to.iter().any(|&y| u.hom(x, y).iter().any(|&m| u.is_iso(m))))
    };
    let b2 = crosses(&pa.obj_map, &pb.obj_map) && crosses(&pb.obj_map, &pa.obj_map);
    Ok(BipartiteReport { b1, b2 })
}

/// Per-object invariant: endo-hom size, idempotent and iso endo counts, and
/// sorted in/out hom-set sizes.
fn object_signature(c: &FiniteCategory, a: Obj) -> (usize, usize, usize, Vec<usize>, Vec<usize>) {
    let endo = c.hom(a, a);
    let idem = endo.iter().filter(|&&m| c.is_idempotent(m)).count();
    let isos = endo.iter().filter(|&&m| c.is_iso(m)).count();
    let mut out: Vec<usize> = (0..c.object_count()).map(|b| c.hom(a, b).len()).collect();
    let mut inc: Vec<usize> = (0..c.object_count()).map(|b| c.hom(b, a).len()).collect();
    out.sort_unstable();
    inc.sort_unstable();
    (endo.len(), idem, isos, out, inc)
}

fn is_mono(c: &FiniteCategory, f: Mor) -> bool {
    (0..c.object_count()).all(|a| {
        let hom = c.hom(a, c.dom(f));
        let mut images: Vec<Mor> = hom.iter().map(|&g| c.compose(f, g).unwrap()).collect();
        images.sort_unstable();
        images.dedup();
        images.len() == hom.len()
    })
}

fn is_epi(c: &FiniteCategory, f: Mor) -> bool {
    (0..c.object_count()).all(|b| {
        let hom = c.hom(c.cod(f), b);
        let mut images: Vec<Mor> = hom.iter().map(|&g| c.compose(g, f).unwrap()).collect();
        images.sort_unstable();
        images.dedup();
        images.len() == hom.len()
    })
}

/// Index and period of the powers of an endomorphism; `(0, 0)` otherwise.
fn power_type(c: &FiniteCategory, f: Mor) -> (usize, usize) {
    if c.dom(f) != c.cod(f) {
        return (0, 0);
    }
    let mut powers = vec![f];
    loop {
        let next = c.compose(f, *powers.last().unwrap()).unwrap();
        if let Some(i) = powers.iter().position(|&p| p == next) {
            return (i + 1, powers.len() - i);
        }
        powers.push(next);
    }
}

fn morphism_signature(
    c: &FiniteCategory,
    f: Mor,
) -> (bool, bool, bool, bool, bool, (usize, usize)) {
    (
        c.is_identity(f),
        c.is_idempotent(f),
        c.is_iso(f),
        is_mono(c, f),
        is_epi(c, f),
        power_type(c, f),
    )
}

/// Backtracking search for an isomorphism of categories.
pub fn categories_isomorphic(c: &FiniteCategory, d: &FiniteCategory) -> Option<Functor> {
    if c.object_count() != d.object_count() || c.morphism_count() != d.morphism_count() {
        return None;
    }
    let sig_c: Vec<_> = (0..c.object_count())
        .map(|a| object_signature(c, a))
        .collect();
    let sig_d: Vec<_> = (0..d.object_count())
        .map(|a| object_signature(d, a))
        .collect();
    let mut sorted_c = sig_c.clone();
    let mut sorted_d = sig_d.clone();
    sorted_c.sort();
    sorted_d.sort();
    if sorted_c != sorted_d {
        return None;
    }
    let candidates: Vec<Vec<Obj>> = sig_c
        .iter()
        .map(|s| (0..d.object_count()).filter(|&b| &sig_d[b] == s).collect())
        .collect();
    let order = most_constrained_order(c, &candidates);
    let mor_sig_c: Vec<_> = (0..c.morphism_count())
        .map(|f| morphism_signature(c, f))
        .collect();
    let mor_sig_d: Vec<_> = (0..d.morphism_count())
        .map(|f| morphism_signature(d, f))
        .collect();
    let mut search = ObjectSearch {
        c,
        d,
        order: &order,
        candidates: &candidates,
        obj_map: vec![UNDEFINED; c.object_count()],
        used: vec![false; d.object_count()],
        mor_sig_c: &mor_sig_c,
        mor_sig_d: &mor_sig_d,
    };
    search.run(0)
}

/// Fewest candidates first, ties broken towards objects connected to those
/// already placed.
fn most_constrained_order(c: &FiniteCategory, candidates: &[Vec<Obj>]) -> Vec<Obj> {
    let n = c.object_count();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&a| !placed[a])
            .min_by_key(|&a| {
                let links: usize = order
                    .iter()
                    .map(|&b| c.hom(a, b).len() + c.hom(b, a).len())
                    .sum();
                (candidates[a].len(), std::cmp::Reverse(links), a)
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

type MorSig = (bool, bool, bool, bool, bool, (usize, usize));

struct ObjectSearch<'a> {
    c: &'a FiniteCategory,
    d: &'a FiniteCategory,
    order: &'a [Obj],
    candidates: &'a [Vec<Obj>],
    obj_map: Vec<Obj>,
    used: Vec<bool>,
    mor_sig_c: &'a [MorSig],
    mor_sig_d: &'a [MorSig],
}

impl ObjectSearch<'_> {
    fn run(&mut self, depth: usize) -> Option<Functor> {
        if depth == self.order.len() {
            return MorphismSearch::new(
                self.c,
                self.d,
                &self.obj_map,
                self.mor_sig_c,
                self.mor_sig_d,
            )
            .and_then(|mut m| m.run());
        }
        let a = self.order[depth];
        for &b in &self.candidates[a] {
            if self.used[b] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&x| {
                let y = self.obj_map[x];
                self.c.hom(a, x).len() == self.d.hom(b, y).len()
                    && self.c.hom(x, a).len() == self.d.hom(y, b).len()
            }) && self.c.hom(a, a).len() == self.d.hom(b, b).len();
            if !consistent {
                continue;
            }
            self.obj_map[a] = b;
            self.used[b] = true;
            if let Some(f) = self.run(depth + 1) {
                return Some(f);
            }
            self.used[b] = false;
            self.obj_map[a] = UNDEFINED;
        }
        None
    }
}

struct MorphismSearch<'a> {
    c: &'a FiniteCategory,
    d: &'a FiniteCategory,
    obj_map: &'a [Obj],
    candidates: Vec<Vec<Mor>>,
    order: Vec<Mor>,
    map: Vec<Mor>,
    used: Vec<bool>,
    trail: Vec<Mor>,
}

impl<'a> MorphismSearch<'a> {
    fn new(
        c: &'a FiniteCategory,
        d: &'a FiniteCategory,
        obj_map: &'a [Obj],
        sig_c: &[MorSig],
        sig_d: &[MorSig],
    ) -> Option<Self> {
        let mut candidates = Vec::with_capacity(c.morphism_count());
        for f in 0..c.morphism_count() {
            let target = d.hom(obj_map[c.dom(f)], obj_map[c.cod(f)]);
            let cands: Vec<Mor> = target
                .iter()
                .copied()
                .filter(|&g| sig_d[g] == sig_c[f])
                .collect();
            if cands.is_empty() {
                return None;
            }
            candidates.push(cands);
        }
        let mut order: Vec<Mor> = (0..c.morphism_count()).collect();
        order.sort_by_key(|&f| (candidates[f].len(), f));
        let mut search = Self {
            c,
            d,
            obj_map,
            candidates,
            order,
            map: vec![UNDEFINED; c.morphism_count()],
            used: vec![false; d.morphism_count()],
            trail: Vec::new(),
        };
        for (a, &b) in obj_map.iter().enumerate() {
            if !search.assign(c.identity(a), d.identity(b)) {
                return None;
            }
        }
        Some(search)
    }

    /// Assigns `f |-> g` and everything it forces through composition.
    fn assign(&mut self, f: Mor, g: Mor) -> bool {
        let mut queue = vec![(f, g)];
        while let Some((f, g)) = queue.pop() {
            if self.map[f] != UNDEFINED {
                if self.map[f] != g {
                    return false;
                }
                continue;
            }
            if self.used[g] || !self.candidates[f].contains(&g) {
                return false;
            }
            self.map[f] = g;
            self.used[g] = true;
            self.trail.push(f);
            for h in self.c.postcomposable(f) {
                if self.map[h] != UNDEFINED {
                    let hf = self.c.compose(h, f).unwrap();
                    match self.d.compose(self.map[h], g) {
                        Some(img) => queue.push((hf, img)),
                        None => return false,
                    }
                }
            }
            for h in self.c.precomposable(f) {
                if self.map[h] != UNDEFINED {
                    let fh = self.c.compose(f, h).unwrap();
                    match self.d.compose(g, self.map[h]) {
                        Some(img) => queue.push((fh, img)),
                        None => return false,
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let f = self.trail.pop().unwrap();
            self.used[self.map[f]] = false;
            self.map[f] = UNDEFINED;
        }
    }

    fn run(&mut self) -> Option<Functor> {
        let Some(&f) = self.order.iter().find(|&&f| self.map[f] == UNDEFINED) else {
            let functor = Functor {
                obj_map: self.obj_map.to_vec(),
                mor_map: self.map.clone(),
            };
            return (functor.is_valid(self.c, self.d) == Ok(true)).then_some(functor);
        };
        for i in 0..self.candidates[f].len() {
            let g = self.candidates[f][i];
            if self.used[g] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(f, g) {
                if let Some(found) = self.run() {
                    return Some(found);
                }
            }
            self.undo(mark);
        }
        None
    }
}

/// Decides equivalence through skeletons. On success returns a weak
/// equivalence `C -> D` and a pseudo-inverse `D -> C`.
pub fn categories_equivalent(c: &FiniteCategory, d: &FiniteCategory) -> Option<(Functor, Functor)> {
    let sk_c = skeleton(c);
    let sk_d = skeleton(d);
    let iso = categories_isomorphic(&sk_c.category, &sk_d.category)?;
    let inverse = invert(&iso);
    let forward = extend_along_skeletons(c, &sk_c, &sk_d, &iso);
    let backward = extend_along_skeletons(d, &sk_d, &sk_c, &inverse);
    Some((forward, backward))
}

fn invert(f: &Functor) -> Functor {
    let mut obj_map = vec![0; f.obj_map.len()];
    for (a, &b) in f.obj_map.iter().enumerate() {
        obj_map[b] = a;
    }
    let mut mor_map = vec![0; f.mor_map.len()];
    for (m, &n) in f.mor_map.iter().enumerate() {
        mor_map[n] = m;
    }
    Functor { obj_map, mor_map }
}

/// `C -> sk(C) -iso-> sk(D) -> D`, where the first leg conjugates by a chosen
/// isomorphism from each object to its class representative.
fn extend_along_skeletons(
    c: &FiniteCategory,
    sk_c: &Skeleton,
    sk_d: &Skeleton,
    iso: &Functor,
) -> Functor {
    let reps = &sk_c.inclusion.obj_map;
    let to_rep: Vec<Mor> = (0..c.object_count())
        .map(|a| {
            let r = reps[sk_c.class_of[a]];
            if r == a {
                c.identity(a)
            } else {
                c.iso_between(a, r)
                    .expect("objects in a class are isomorphic")
            }
        })
        .collect();
    let from_rep: Vec<Mor> = to_rep
        .iter()
        .map(|&i| c.inverse_of(i).expect("chosen morphism is an isomorphism"))
        .collect();
    let mut sk_index = vec![UNDEFINED; c.morphism_count()];
    for (m, &orig) in sk_c.inclusion.mor_map.iter().enumerate() {
        sk_index[orig] = m;
    }
    let obj_map = (0..c.object_count())
        .map(|a| sk_d.inclusion.obj_map[iso.obj_map[sk_c.class_of[a]]])
        .collect();
    let mor_map = (0..c.morphism_count())
        .map(|f| {
            let conj = c
                .compose(to_rep[c.cod(f)], c.compose(f, from_rep[c.dom(f)]).unwrap())
                .unwrap();
            sk_d.inclusion.mor_map[iso.mor_map[sk_index[conj]]]
        })
        .collect();
    Functor { obj_map, mor_map }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{cauchy_completion, left_cancellative_category, Morphism};
    use crate::semigroup::*;

    #[test]
    fn skeleton_of_brandt_completion() {
        let b = brandt(&trivial_group(), 2).unwrap();
        let sk = skeleton(&cauchy_completion(&b));
        assert_eq!(sk.category.object_count(), 2);
        assert_eq!(sk.class_of, vec![0, 0, 1]);
    }

    #[test]
    fn skeleton_of_group_and_chain_is_identity() {
        let c3 = cauchy_completion(&cyclic_group(3).unwrap());
        let sk = skeleton(&c3);
        assert_eq!(sk.category, c3);
        let chain = cauchy_completion(&chain_semilattice(2).unwrap());
        assert_eq!(skeleton(&chain).category, chain);
    }

    #[test]
    fn identity_is_found() {
        let c = cauchy_completion(&symmetric_inverse_monoid(2).unwrap());
        let f = categories_isomorphic(&c, &c).unwrap();
        assert_eq!(f.is_valid(&c, &c), Ok(true));
    }

    #[test]
    fn brandt_and_group_with_zero_skeletons() {
        let b = brandt(&trivial_group(), 2).unwrap();
        let gz = group_with_zero(&trivial_group()).unwrap();
        let x = skeleton(&cauchy_completion(&b)).category;
        let y = skeleton(&cauchy_completion(&gz)).category;
        let f = categories_isomorphic(&x, &y).expect("2-object skeletons agree");
        assert_eq!(f.is_valid(&x, &y), Ok(true));
    }

    #[test]
    fn different_groups_are_not_isomorphic() {
        let c2 = cauchy_completion(&cyclic_group(2).unwrap());
        let c3 = cauchy_completion(&cyclic_group(3).unwrap());
        assert!(categories_isomorphic(&c2, &c3).is_none());
        assert!(categories_equivalent(&c2, &c3).is_none());
        // same size, different structure
        let c4 = cauchy_completion(&cyclic_group(4).unwrap());
        let k4 = {
            let klein =
                FiniteSemigroup::from_fn((0..4).map(|i| format!("k{i}")).collect(), |a, b| a ^ b)
                    .unwrap();
            cauchy_completion(&klein)
        };
        assert!(categories_isomorphic(&c4, &k4).is_none());
    }

    #[test]
    fn brandt_completions_are_equivalent() {
        let c2 = cauchy_completion(&brandt(&trivial_group(), 2).unwrap());
        let c3 = cauchy_completion(&brandt(&trivial_group(), 3).unwrap());
        let (f, g) = categories_equivalent(&c2, &c3).unwrap();
        assert!(check_weak_equivalence(&f, &c2, &c3).unwrap());
        assert!(check_weak_equivalence(&g, &c3, &c2).unwrap());
    }

    #[test]
    fn category_equivalent_to_its_skeleton() {
        let c = cauchy_completion(&brandt(&trivial_group(), 3).unwrap());
        let sk = skeleton(&c);
        assert!(check_weak_equivalence(&sk.inclusion, &sk.category, &c).unwrap());
        let (f, g) = categories_equivalent(&c, &sk.category).unwrap();
        assert!(check_weak_equivalence(&f, &c, &sk.category).unwrap());
        assert!(check_weak_equivalence(&g, &sk.category, &c).unwrap());
    }

    #[test]
    fn bipartite_conditions() {
        let l = left_cancellative_category(&cyclic_group(2).unwrap());
        // disjoint union of two copies, no cross arrows
        let mut morphisms: Vec<Morphism> = l.morphisms().to_vec();
        for m in l.morphisms() {
            morphisms.push(Morphism {
                dom: 1,
                cod: 1,
                label: format!("{}'", m.label),
            });
        }
        let n = l.morphism_count();
        let u = FiniteCategory::new(
            vec!["a".into(), "b".into()],
            morphisms,
            vec![0, n],
            |g, f| {
                if g < n {
                    l.compose(g, f).unwrap()
                } else {
                    n + l.compose(g - n, f - n).unwrap()
                }
            },
        )
        .unwrap();
        let left = Functor {
            obj_map: vec![0],
            mor_map: (0..n).collect(),
        };
        let right = Functor {
            obj_map: vec![1],
            mor_map: (n..2 * n).collect(),
        };
        let r = is_bipartite(&u, (&l, &left), (&l, &right)).unwrap();
        assert!(r.b1 && !r.b2);
        let r = is_bipartite(&u, (&l, &left), (&l, &left)).unwrap();
        assert!(!r.b1);
        let not_full = Functor {
            obj_map: vec![0],
            mor_map: vec![0, 0],
        };
        assert_eq!(
            is_bipartite(&u, (&l, &not_full), (&l, &right)),
            Err(CategoryError::NotFullSubcategory)
        );
    }
}
