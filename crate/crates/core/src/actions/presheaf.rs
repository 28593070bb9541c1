use super::{enumerate_maps, ActionError, EtaleAction, RightAction};
use crate::category::{left_cancellative_category, FiniteCategory, Functor, Morphism};
use crate::semigroup::InverseSemigroup;

/// A set-valued contravariant functor on a finite category. `transition[m]`
/// maps the fiber over `cod(m)` to the fiber over `dom(m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presheaf {
    pub fibers: Vec<Vec<String>>,
    pub transition: Vec<Vec<usize>>,
}

impl Presheaf {
    /// Checks shapes, identities and `P(g f) = P(f) P(g)`.
    pub fn new(
        site: &FiniteCategory,
        fibers: Vec<Vec<String>>,
        transition: Vec<Vec<usize>>,
    ) -> Result<Self, ActionError> {
        let p = Self { fibers, transition };
        p.check(site)?;
        Ok(p)
    }

    pub fn check(&self, site: &FiniteCategory) -> Result<(), ActionError> {
        if self.fibers.len() != site.object_count()
            || self.transition.len() != site.morphism_count()
        {
            return Err(ActionError::WrongSite);
        }
        for m in 0..site.morphism_count() {
            let t = &self.transition[m];
            let (dom, cod) = (site.dom(m), site.cod(m));
            if t.len() != self.fibers[cod].len() || t.iter().any(|&x| x >= self.fibers[dom].len()) {
                return Err(ActionError::NotAPresheaf(format!(
                    "transition of {} has the wrong shape",
                    site.label(m)
                )));
            }
            if site.is_identity(m) && t.iter().enumerate().any(|(i, &x)| i != x) {
                return Err(ActionError::NotAPresheaf(format!(
                    "{} acts non-trivially",
                    site.label(m)
                )));
            }
            for g in site.postcomposable(m) {
                let gm = site.compose(g, m).unwrap();
                let ok = (0..self.fibers[site.cod(g)].len())
                    .all(|x| self.transition[gm][x] == t[self.transition[g][x]]);
                if !ok {
                    return Err(ActionError::NotAPresheaf(format!(
                        "not functorial at {} . {}",
                        site.label(g),
                        site.label(m)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn total_size(&self) -> usize {
        self.fibers.iter().map(Vec::len).sum()
    }

    /// Equal fiber sizes and transitions, labels ignored.
    pub fn same_shape(&self, other: &Presheaf) -> bool {
        self.transition == other.transition
            && self
                .fibers
                .iter()
                .map(Vec::len)
                .eq(other.fibers.iter().map(Vec::len))
    }
}

/// The fiber presheaf on `L(S)`: `e |-> p^-1(e)`, with `(e, s)` moving
/// `x in p^-1(e)` to `xs in p^-1(s*s)`.
pub fn presheaf_of_etale(x: &EtaleAction, s: &InverseSemigroup) -> Presheaf {
    let l = left_cancellative_category(s);
    let idem = s.idempotent_list();
    let mut index = Vec::with_capacity(x.len());
    let mut fibers: Vec<Vec<String>> = vec![Vec::new(); idem.len()];
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); idem.len()];
    for p in 0..x.len() {
        let c = idem.iter().position(|&e| e == x.anchor[p]).unwrap();
        index.push(fibers[c].len());
        fibers[c].push(x.base.point(p).to_string());
        members[c].push(p);
    }
    let pairs = crate::category::l_pairs(s);
    let transition = pairs
        .iter()
        .enumerate()
        .map(|(m, &(_, a))| {
            members[l.cod(m)]
                .iter()
                .map(|&p| index[x.act(p, a)])
                .collect()
        })
        .collect();
    Presheaf { fibers, transition }
}

/// `⊔_e P(e)` with `(e, x)s = (s*es, P(e, es)(x))`, anchored by `e`.
pub fn etale_of_presheaf(p: &Presheaf, s: &InverseSemigroup) -> Result<EtaleAction, ActionError> {
    let l = left_cancellative_category(s);
    p.check(&l)?;
    let idem = s.idempotent_list();
    let pairs = crate::category::l_pairs(s);
    let mut points = Vec::new();
    let mut offset = Vec::new();
    for (c, fiber) in p.fibers.iter().enumerate() {
        offset.push(points.len());
        for x in fiber {
            points.push((c, x.clone()));
        }
    }
    let cells: Vec<(usize, usize)> = p
        .fibers
        .iter()
        .enumerate()
        .flat_map(|(c, f)| (0..f.len()).map(move |i| (c, i)))
        .collect();
    let base = RightAction::from_fn(
        points
            .iter()
            .map(|(c, x)| format!("{x}@{}", s.name(idem[*c])))
            .collect(),
        s,
        |k, a| {
            let (c, i) = cells[k];
            let e = idem[c];
            let m = pairs.iter().position(|&q| q == (e, s.mul(e, a))).unwrap();
            offset[l.dom(m)] + p.transition[m][i]
        },
    )?;
    let anchor = cells.iter().map(|&(c, _)| idem[c]).collect();
    EtaleAction::new(base, anchor, s)
}

/// Objects `(c, x)` with `x in P(c)`; a morphism `(x, c) -> (x', c')` is a
/// site morphism `m : c -> c'` with `P(m)(x') = x`. Returns the category and
/// the projection to the site.
pub fn category_of_elements(p: &Presheaf, site: &FiniteCategory) -> (FiniteCategory, Functor) {
    let mut obj_index: Vec<Vec<usize>> = Vec::new();
    let mut objects = Vec::new();
    let mut obj_map = Vec::new();
    for (c, fiber) in p.fibers.iter().enumerate() {
        obj_index.push((objects.len()..objects.len() + fiber.len()).collect());
        for x in fiber {
            objects.push(format!("({},{x})", site.object_label(c)));
            obj_map.push(c);
        }
    }
    let mut elems: Vec<(usize, usize)> = Vec::new();
    let mut morphisms = Vec::new();
    let mut mor_map = Vec::new();
    let mut lookup = vec![Vec::new(); site.morphism_count()];
    for m in 0..site.morphism_count() {
        for x2 in 0..p.fibers[site.cod(m)].len() {
            let x = p.transition[m][x2];
            lookup[m].push(elems.len());
            elems.push((m, x2));
            morphisms.push(Morphism {
                dom: obj_index[site.dom(m)][x],
                cod: obj_index[site.cod(m)][x2],
                label: format!("{}@{}", site.label(m), p.fibers[site.cod(m)][x2]),
            });
            mor_map.push(m);
        }
    }
    let identities = (0..objects.len())
        .map(|o| {
            let c = obj_map[o];
            let x = obj_index[c].iter().position(|&q| q == o).unwrap();
            lookup[site.identity(c)][x]
        })
        .collect();
    let category = FiniteCategory::new(objects, morphisms, identities, |g, f| {
        let (mg, x2) = elems[g];
        let (mf, _) = elems[f];
        lookup[site.compose(mg, mf).unwrap()][x2]
    })
    .expect("the category of elements is a category");
    (category, Functor { obj_map, mor_map })
}

/// Every site morphism into `K(a)` has exactly one lift with codomain `a`.
pub fn is_discrete_fibration(k: &Functor, e: &FiniteCategory, c: &FiniteCategory) -> bool {
    (0..e.object_count()).all(|a| {
        (0..c.morphism_count())
            .filter(|&m| c.cod(m) == k.obj_map[a])
            .all(|m| {
                (0..e.morphism_count())
                    .filter(|&f| e.cod(f) == a && k.mor_map[f] == m)
                    .count()
                    == 1
            })
    })
}

/// All natural transformations `P -> P'`, each as one map per object.
pub fn natural_transformations(
    p: &Presheaf,
    q: &Presheaf,
    site: &FiniteCategory,
) -> Vec<Vec<Vec<usize>>> {
    let mut offset = Vec::new();
    let mut domains = Vec::new();
    for (c, fiber) in p.fibers.iter().enumerate() {
        offset.push(domains.len());
        domains.extend(std::iter::repeat_n(q.fibers[c].len(), fiber.len()));
    }
    let mut edges = Vec::new();
    for m in 0..site.morphism_count() {
        for (x2, &x) in p.transition[m].iter().enumerate() {
            edges.push((offset[site.cod(m)] + x2, offset[site.dom(m)] + x, m));
        }
    }
    enumerate_maps(&domains, &edges, &q.transition, usize::MAX)
        .into_iter()
        .map(|flat| {
            p.fibers
                .iter()
                .enumerate()
                .map(|(c, f)| flat[offset[c]..offset[c] + f.len()].to_vec())
                .collect()
        })
        .collect()
}
