use super::{c_of_groupoid, l_of_groupoid, Arrow, GroupoidError, Obj, OrderedGroupoid};
use crate::category::{check_weak_equivalence, Functor};

/// Explicit object and arrow maps between ordered groupoids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedFunctor {
    pub obj_map: Vec<Obj>,
    pub arrow_map: Vec<Arrow>,
}

impl OrderedFunctor {
    pub fn identity(g: &OrderedGroupoid) -> Self {
        Self {
            obj_map: (0..g.object_count()).collect(),
            arrow_map: (0..g.arrow_count()).collect(),
        }
    }

    /// The inclusion of a subgroupoid given by its arrows.
    pub fn inclusion(g: &OrderedGroupoid, sub: &OrderedGroupoid, arrows: &[Arrow]) -> Self {
        Self {
            obj_map: (0..sub.object_count())
                .map(|o| g.dom(arrows[sub.identity(o)]))
                .collect(),
            arrow_map: arrows.to_vec(),
        }
    }

    /// Endpoints, identities, composition and order are preserved.
    pub fn check(&self, g: &OrderedGroupoid, h: &OrderedGroupoid) -> Result<(), GroupoidError> {
        let bad = |s: &str| Err(GroupoidError::NotAnOrderedFunctor(s.to_string()));
        if self.obj_map.len() != g.object_count()
            || self.arrow_map.len() != g.arrow_count()
            || self.obj_map.iter().any(|&o| o >= h.object_count())
            || self.arrow_map.iter().any(|&a| a >= h.arrow_count())
        {
            return bad("maps do not fit source and target");
        }
        let t = &self.arrow_map;
        for x in 0..g.arrow_count() {
            if h.dom(t[x]) != self.obj_map[g.dom(x)] || h.cod(t[x]) != self.obj_map[g.cod(x)] {
                return bad("endpoints not preserved");
            }
            for y in 0..g.arrow_count() {
                if let Some(xy) = g.compose(x, y) {
                    if h.compose(t[x], t[y]) != Some(t[xy]) {
                        return bad("composition not preserved");
                    }
                }
                if g.leq(x, y) && !h.leq(t[x], t[y]) {
                    return bad("order not preserved");
                }
            }
        }
        for o in 0..g.object_count() {
            if t[g.identity(o)] != h.identity(self.obj_map[o]) {
                return bad("identities not preserved");
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct LocalIsoReport {
    /// The underlying groupoid functor is a weak equivalence.
    pub li1: bool,
    /// The object map is a discrete fibration of posets.
    pub li2: bool,
    /// `L(theta)` is a weak equivalence.
    pub l_weak_equivalence: bool,
}

impl LocalIsoReport {
    pub fn holds(&self) -> bool {
        self.li1 && self.li2
    }
}

pub fn is_local_isomorphism(
    theta: &OrderedFunctor,
    g: &OrderedGroupoid,
    h: &OrderedGroupoid,
) -> Result<LocalIsoReport, GroupoidError> {
    theta.check(g, h)?;
    let underlying = Functor {
        obj_map: theta.obj_map.clone(),
        mor_map: theta.arrow_map.clone(),
    };
    let li1 = check_weak_equivalence(&underlying, &g.as_category(), &h.as_category())
        .expect("an ordered functor is a functor");
    let li2 = (0..g.object_count()).all(|a| {
        (0..h.object_count())
            .filter(|&b| h.object_leq(b, theta.obj_map[a]))
            .all(|b| {
                (0..g.object_count())
                    .filter(|&c| g.object_leq(c, a) && theta.obj_map[c] == b)
                    .count()
                    == 1
            })
    });
    let (lg, _) = l_of_groupoid(g);
    let (lh, _) = l_of_groupoid(h);
    let l_weak_equivalence = check_weak_equivalence(&l_of_functor(theta, g, h), &lg, &lh)
        .expect("L(theta) is a functor");
    Ok(LocalIsoReport {
        li1,
        li2,
        l_weak_equivalence,
    })
}

/// `(e, g) |-> (theta e, theta g)`.
pub fn l_of_functor(theta: &OrderedFunctor, g: &OrderedGroupoid, h: &OrderedGroupoid) -> Functor {
    let (_, gp) = l_of_groupoid(g);
    let (_, hp) = l_of_groupoid(h);
    Functor {
        obj_map: theta.obj_map.clone(),
        mor_map: gp
            .iter()
            .map(|&(e, a)| {
                let target = (theta.obj_map[e], theta.arrow_map[a]);
                hp.iter().position(|&p| p == target).unwrap()
            })
            .collect(),
    }
}

/// `(e, x, f) |-> (theta e, theta x, theta f)`, for principally inductive groupoids.
pub fn c_of_functor(
    theta: &OrderedFunctor,
    g: &OrderedGroupoid,
    h: &OrderedGroupoid,
) -> Result<Functor, GroupoidError> {
    let (_, gt) = c_of_groupoid(g)?;
    let (_, ht) = c_of_groupoid(h)?;
    Ok(Functor {
        obj_map: theta.obj_map.clone(),
        mor_map: gt
            .iter()
            .map(|&(e, x, f)| {
                let target = (theta.obj_map[e], theta.arrow_map[x], theta.obj_map[f]);
                ht.iter().position(|&t| t == target).unwrap()
            })
            .collect(),
    })
}
