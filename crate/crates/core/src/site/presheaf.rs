use serde::{Deserialize, Serialize};

use super::FiniteSite;
use crate::budget::Budget;
use crate::classify::{unit, wbar, wbar_map, ClassifyingComplex};
use crate::error::{invalid, Result};
use crate::group::FiniteGroup;
use crate::loops::loop_groupoid;
use crate::sgpd::{SGpdMap, SimplicialGroupoid};
use crate::sset::{pullback, pushout, SimplicialMap, TruncatedSimplicialSet};
use crate::two_gpd::{nerve, NerveComplex, NerveSimplex, TwoFunctor, TwoGroupoid};

/// A value category for presheaves.
pub trait Section: Clone + std::fmt::Debug {
    type Map: Clone + PartialEq + std::fmt::Debug;

    fn identity_map(&self) -> Self::Map;

    /// `second ∘ first`.
    fn then(first: &Self::Map, second: &Self::Map) -> Result<Self::Map>;

    /// Problems with `m` as a map `self → target`.
    fn map_violations(&self, target: &Self, m: &Self::Map) -> Vec<String>;
}

/// A finite set given by element labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Elements(pub Vec<String>);

impl Elements {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn then_tables(first: &[usize], second: &[usize]) -> Result<Vec<usize>> {
    first
        .iter()
        .map(|&x| {
            second
                .get(x)
                .copied()
                .ok_or_else(|| crate::error::Error::Invalid("maps do not compose".into()))
        })
        .collect()
}

impl Section for Elements {
    type Map = Vec<usize>;

    fn identity_map(&self) -> Vec<usize> {
        (0..self.len()).collect()
    }

    fn then(first: &Vec<usize>, second: &Vec<usize>) -> Result<Vec<usize>> {
        then_tables(first, second)
    }

    fn map_violations(&self, target: &Self, m: &Vec<usize>) -> Vec<String> {
        if m.len() != self.len() || m.iter().any(|&y| y >= target.len()) {
            return vec!["not a function between the given sets".into()];
        }
        Vec::new()
    }
}

impl Section for FiniteGroup {
    type Map = Vec<usize>;

    fn identity_map(&self) -> Vec<usize> {
        (0..self.order()).collect()
    }

    fn then(first: &Vec<usize>, second: &Vec<usize>) -> Result<Vec<usize>> {
        then_tables(first, second)
    }

    fn map_violations(&self, target: &Self, m: &Vec<usize>) -> Vec<String> {
        if m.len() != self.order() || m.iter().any(|&y| y >= target.order()) {
            return vec!["not a function between the given groups".into()];
        }
        if !self.is_hom(target, m) {
            return vec!["not a homomorphism".into()];
        }
        Vec::new()
    }
}

impl Section for TruncatedSimplicialSet {
    type Map = SimplicialMap;

    fn identity_map(&self) -> SimplicialMap {
        SimplicialMap::identity(self)
    }

    fn then(first: &SimplicialMap, second: &SimplicialMap) -> Result<SimplicialMap> {
        first.then(second)
    }

    fn map_violations(&self, target: &Self, m: &SimplicialMap) -> Vec<String> {
        if &m.source != self || &m.target != target {
            return vec!["map has the wrong source or target".into()];
        }
        m.violations()
    }
}

impl Section for SimplicialGroupoid {
    type Map = SGpdMap;

    fn identity_map(&self) -> SGpdMap {
        SGpdMap::identity(self)
    }

    fn then(first: &SGpdMap, second: &SGpdMap) -> Result<SGpdMap> {
        if first.target != second.source {
            return invalid("composing maps whose target and source differ");
        }
        Ok(SGpdMap {
            source: first.source.clone(),
            target: second.target.clone(),
            objects: first.objects.iter().map(|&o| second.objects[o]).collect(),
            levels: first
                .levels
                .iter()
                .enumerate()
                .map(|(n, l)| l.iter().map(|&a| second.levels[n][a]).collect())
                .collect(),
        })
    }

    fn map_violations(&self, target: &Self, m: &SGpdMap) -> Vec<String> {
        if &m.source != self || &m.target != target {
            return vec!["map has the wrong source or target".into()];
        }
        m.violations()
    }
}

impl Section for TwoGroupoid {
    type Map = TwoFunctor;

    fn identity_map(&self) -> TwoFunctor {
        TwoFunctor::identity(self)
    }

    fn then(first: &TwoFunctor, second: &TwoFunctor) -> Result<TwoFunctor> {
        if first.target != second.source {
            return invalid("composing 2-functors whose target and source differ");
        }
        Ok(TwoFunctor {
            source: first.source.clone(),
            target: second.target.clone(),
            objects: first.objects.iter().map(|&o| second.objects[o]).collect(),
            one: first.one.iter().map(|&f| second.one[f]).collect(),
            two: first.two.iter().map(|&c| second.two[c]).collect(),
        })
    }

    fn map_violations(&self, target: &Self, m: &TwoFunctor) -> Vec<String> {
        if &m.source != self || &m.target != target {
            return vec!["2-functor has the wrong source or target".into()];
        }
        m.violations()
    }
}

/// `values[u]` per object; `restrictions[f]: values[target f] → values[source f]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Presheaf<V: Section> {
    pub values: Vec<V>,
    pub restrictions: Vec<V::Map>,
}

impl<V: Section> Presheaf<V> {
    pub fn constant(c: &FiniteSite, v: &V) -> Self {
        Presheaf {
            values: vec![v.clone(); c.object_count()],
            restrictions: vec![v.identity_map(); c.arrow_count()],
        }
    }

    /// Functoriality, checked over every arrow and composable pair.
    pub fn violations(&self, c: &FiniteSite) -> Vec<String> {
        if self.values.len() != c.object_count() || self.restrictions.len() != c.arrow_count() {
            return vec!["one value per object and one restriction per arrow are required".into()];
        }
        let mut out = Vec::new();
        for f in 0..c.arrow_count() {
            let (s, t) = (c.source(f), c.target(f));
            for v in self.values[t].map_violations(&self.values[s], &self.restrictions[f]) {
                out.push(format!("restriction along {}: {v}", c.arrows[f].name));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for u in 0..c.object_count() {
            if self.restrictions[c.identities[u]] != self.values[u].identity_map() {
                out.push(format!(
                    "identity of {} does not restrict to the identity",
                    c.objects[u]
                ));
            }
        }
        for f in 0..c.arrow_count() {
            for g in 0..c.arrow_count() {
                if let Some(h) = c.compose(f, g) {
                    let composite = V::then(&self.restrictions[f], &self.restrictions[g]);
                    if composite.as_ref() != Ok(&self.restrictions[h]) {
                        out.push(format!(
                            "restriction along {}∘{} is not the composite",
                            c.arrows[f].name, c.arrows[g].name
                        ));
                    }
                }
            }
        }
        out
    }
}

/// Components `from(U) → to(U)`.
#[derive(Debug, Clone, PartialEq)]
pub struct NaturalTransformation<V: Section> {
    pub components: Vec<V::Map>,
}

impl<V: Section> NaturalTransformation<V> {
    pub fn identity(p: &Presheaf<V>) -> Self {
        NaturalTransformation {
            components: p.values.iter().map(V::identity_map).collect(),
        }
    }

    /// `second ∘ self`.
    pub fn then(&self, second: &NaturalTransformation<V>) -> Result<Self> {
        Ok(NaturalTransformation {
            components: self
                .components
                .iter()
                .zip(&second.components)
                .map(|(a, b)| V::then(a, b))
                .collect::<Result<_>>()?,
        })
    }

    pub fn violations(&self, c: &FiniteSite, from: &Presheaf<V>, to: &Presheaf<V>) -> Vec<String> {
        if self.components.len() != c.object_count() {
            return vec!["one component per object is required".into()];
        }
        let mut out = Vec::new();
        for u in 0..c.object_count() {
            for v in from.values[u].map_violations(&to.values[u], &self.components[u]) {
                out.push(format!("component at {}: {v}", c.objects[u]));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for f in 0..c.arrow_count() {
            let (s, t) = (c.source(f), c.target(f));
            let left = V::then(&self.components[t], &to.restrictions[f]);
            let right = V::then(&from.restrictions[f], &self.components[s]);
            if left.is_err() || left != right {
                out.push(format!("naturality fails along {}", c.arrows[f].name));
            }
        }
        out
    }
}

fn copies(y: &TruncatedSimplicialSet, k: usize) -> Result<TruncatedSimplicialSet> {
    if k == 0 {
        return Ok(TruncatedSimplicialSet::empty(y.depth()));
    }
    TruncatedSimplicialSet::disjoint_union(&vec![y.clone(); k])
}

/// `Y_U(V) = ⊔_{φ: V → U} Y`, restricting copy `φ` along `g` to copy `φ ∘ g`.
pub fn y_u(
    c: &FiniteSite,
    y: &TruncatedSimplicialSet,
    u: usize,
) -> Result<Presheaf<TruncatedSimplicialSet>> {
    let homs: Vec<Vec<usize>> = (0..c.object_count()).map(|v| c.hom(v, u)).collect();
    let values = homs
        .iter()
        .map(|h| copies(y, h.len()))
        .collect::<Result<Vec<_>>>()?;
    let restrictions = (0..c.arrow_count())
        .map(|g| {
            let (w, v) = (c.source(g), c.target(g));
            let levels = (0..=y.depth())
                .map(|n| {
                    let size = y.level_size(n);
                    (0..homs[v].len() * size)
                        .map(|idx| {
                            let (k, s) = (idx / size, idx % size);
                            let phi_g = c.compose(homs[v][k], g).expect("composable");
                            homs[w].iter().position(|&a| a == phi_g).unwrap() * size + s
                        })
                        .collect()
                })
                .collect();
            SimplicialMap::new(values[v].clone(), values[w].clone(), levels)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Presheaf {
        values,
        restrictions,
    })
}

/// Pointwise loop groupoid; every section must have a finite loop groupoid.
pub fn loop_pointwise(
    c: &FiniteSite,
    x: &Presheaf<TruncatedSimplicialSet>,
) -> Result<Presheaf<SimplicialGroupoid>> {
    let values = x
        .values
        .iter()
        .map(|s| loop_groupoid(s, s.depth() - 1)?.to_finite())
        .collect::<Result<Vec<_>>>()?;
    let restrictions = (0..c.arrow_count())
        .map(|f| {
            forest_map(
                &values[c.target(f)],
                &values[c.source(f)],
                &x.restrictions[f],
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Presheaf {
        values,
        restrictions,
    })
}

// arrows of a forest model are determined by their endpoints
fn forest_map(
    a: &SimplicialGroupoid,
    b: &SimplicialGroupoid,
    f: &SimplicialMap,
) -> Result<SGpdMap> {
    let objects: Vec<usize> = f.levels[0].clone();
    let levels = (0..=a.depth())
        .map(|n| {
            let (la, lb) = (a.level(n), b.level(n));
            (0..la.arrow_count())
                .map(|g| lb.hom(objects[la.source(g)], objects[la.target(g)])[0])
                .collect()
        })
        .collect();
    SGpdMap::new(a.clone(), b.clone(), objects, levels)
}

/// `G(f): G(X) → G(Y)` for presheaves whose sections have forest models,
/// given the pointwise loop groupoids.
pub fn loop_pointwise_map(
    gx: &Presheaf<SimplicialGroupoid>,
    gy: &Presheaf<SimplicialGroupoid>,
    f: &NaturalTransformation<TruncatedSimplicialSet>,
) -> Result<NaturalTransformation<SimplicialGroupoid>> {
    let components = f
        .components
        .iter()
        .enumerate()
        .map(|(u, m)| forest_map(&gx.values[u], &gy.values[u], m))
        .collect::<Result<Vec<_>>>()?;
    Ok(NaturalTransformation { components })
}

/// Pointwise `W̄` through level `depth`, with the complexes behind each value.
pub fn wbar_pointwise(
    c: &FiniteSite,
    a: &Presheaf<SimplicialGroupoid>,
    depth: usize,
    budget: &Budget,
) -> Result<(Presheaf<TruncatedSimplicialSet>, Vec<ClassifyingComplex>)> {
    let complexes = a
        .values
        .iter()
        .map(|g| wbar(g, depth, budget))
        .collect::<Result<Vec<_>>>()?;
    let restrictions = (0..c.arrow_count())
        .map(|f| {
            wbar_map(
                &a.restrictions[f],
                &complexes[c.target(f)],
                &complexes[c.source(f)],
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let values = complexes.iter().map(|w| w.sset.clone()).collect();
    Ok((
        Presheaf {
            values,
            restrictions,
        },
        complexes,
    ))
}

/// Pointwise nerve through level `depth`.
pub fn nerve_pointwise(
    c: &FiniteSite,
    k: &Presheaf<TwoGroupoid>,
    depth: usize,
    budget: &Budget,
) -> Result<(Presheaf<TruncatedSimplicialSet>, Vec<NerveComplex>)> {
    let nerves = k
        .values
        .iter()
        .map(|g| nerve(g, depth, budget))
        .collect::<Result<Vec<_>>>()?;
    let restrictions = (0..c.arrow_count())
        .map(|f| {
            let (phi, from, to) = (
                &k.restrictions[f],
                &nerves[c.target(f)],
                &nerves[c.source(f)],
            );
            let levels = (0..=depth)
                .map(|n| {
                    from.simplices[n]
                        .iter()
                        .map(|s| {
                            let image = NerveSimplex {
                                vertices: s.vertices.iter().map(|&v| phi.objects[v]).collect(),
                                edges: s.edges.iter().map(|&e| phi.one[e]).collect(),
                                cells: s.cells.iter().map(|&a| phi.two[a]).collect(),
                            };
                            to.id_of(n, &image).ok_or_else(|| {
                                crate::error::Error::Invalid(
                                    "image simplex is not in the nerve".into(),
                                )
                            })
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            SimplicialMap::new(from.sset.clone(), to.sset.clone(), levels)
        })
        .collect::<Result<Vec<_>>>()?;
    let values = nerves.iter().map(|n| n.sset.clone()).collect();
    Ok((
        Presheaf {
            values,
            restrictions,
        },
        nerves,
    ))
}

/// The unit `X → W̄G(X)` applied pointwise, with its target presheaf.
pub fn unit_pointwise(
    c: &FiniteSite,
    x: &Presheaf<TruncatedSimplicialSet>,
    budget: &Budget,
) -> Result<(
    Presheaf<TruncatedSimplicialSet>,
    NaturalTransformation<TruncatedSimplicialSet>,
)> {
    let depth = x.values.first().map_or(0, |v| v.depth());
    let g = loop_pointwise(c, x)?;
    let (target, _) = wbar_pointwise(c, &g, depth, budget)?;
    let components = x
        .values
        .iter()
        .map(|s| unit(s, budget).map(|u| u.map))
        .collect::<Result<Vec<_>>>()?;
    Ok((target, NaturalTransformation { components }))
}

/// Sectionwise pushout of `B ← A → C`.
pub fn presheaf_pushout(
    c: &FiniteSite,
    b: &Presheaf<TruncatedSimplicialSet>,
    cc: &Presheaf<TruncatedSimplicialSet>,
    f: &NaturalTransformation<TruncatedSimplicialSet>,
    g: &NaturalTransformation<TruncatedSimplicialSet>,
) -> Result<(
    Presheaf<TruncatedSimplicialSet>,
    NaturalTransformation<TruncatedSimplicialSet>,
    NaturalTransformation<TruncatedSimplicialSet>,
)> {
    let parts = (0..c.object_count())
        .map(|u| pushout(&f.components[u], &g.components[u]))
        .collect::<Result<Vec<_>>>()?;
    let restrictions = (0..c.arrow_count())
        .map(|a| {
            let (u, v) = (c.target(a), c.source(a));
            let (from, to) = (&parts[u], &parts[v]);
            let levels = (0..=from.object.depth())
                .map(|n| {
                    let mut row = vec![usize::MAX; from.object.level_size(n)];
                    for x in 0..b.values[u].level_size(n) {
                        let y = b.restrictions[a].apply(n, x);
                        row[from.from_left.apply(n, x)] = to.from_left.apply(n, y);
                    }
                    for x in 0..cc.values[u].level_size(n) {
                        let y = cc.restrictions[a].apply(n, x);
                        row[from.from_right.apply(n, x)] = to.from_right.apply(n, y);
                    }
                    row
                })
                .collect();
            SimplicialMap::new(from.object.clone(), to.object.clone(), levels)
        })
        .collect::<Result<Vec<_>>>()?;
    let values = parts.iter().map(|p| p.object.clone()).collect();
    let left = NaturalTransformation {
        components: parts.iter().map(|p| p.from_left.clone()).collect(),
    };
    let right = NaturalTransformation {
        components: parts.iter().map(|p| p.from_right.clone()).collect(),
    };
    Ok((
        Presheaf {
            values,
            restrictions,
        },
        left,
        right,
    ))
}

/// Sectionwise pullback of `B → Y ← C`.
pub fn presheaf_pullback(
    c: &FiniteSite,
    b: &Presheaf<TruncatedSimplicialSet>,
    cc: &Presheaf<TruncatedSimplicialSet>,
    f: &NaturalTransformation<TruncatedSimplicialSet>,
    g: &NaturalTransformation<TruncatedSimplicialSet>,
) -> Result<(
    Presheaf<TruncatedSimplicialSet>,
    NaturalTransformation<TruncatedSimplicialSet>,
    NaturalTransformation<TruncatedSimplicialSet>,
)> {
    let parts = (0..c.object_count())
        .map(|u| pullback(&f.components[u], &g.components[u]))
        .collect::<Result<Vec<_>>>()?;
    let restrictions = (0..c.arrow_count())
        .map(|a| {
            let (u, v) = (c.target(a), c.source(a));
            let (from, to) = (&parts[u], &parts[v]);
            let levels = (0..=from.object.depth())
                .map(|n| {
                    from.pairs[n]
                        .iter()
                        .map(|&(x, y)| {
                            let key = (
                                b.restrictions[a].apply(n, x),
                                cc.restrictions[a].apply(n, y),
                            );
                            to.pairs[n]
                                .iter()
                                .position(|&p| p == key)
                                .expect("pullback is closed under restriction")
                        })
                        .collect()
                })
                .collect();
            SimplicialMap::new(from.object.clone(), to.object.clone(), levels)
        })
        .collect::<Result<Vec<_>>>()?;
    let values = parts.iter().map(|p| p.object.clone()).collect();
    let left = NaturalTransformation {
        components: parts.iter().map(|p| p.to_left.clone()).collect(),
    };
    let right = NaturalTransformation {
        components: parts.iter().map(|p| p.to_right.clone()).collect(),
    };
    Ok((
        Presheaf {
            values,
            restrictions,
        },
        left,
        right,
    ))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::sset::{standard_complex, validate_sset, ComplexKind};

    #[test]
    fn representable_copies() {
        let c = two_object();
        let pt = standard_complex(ComplexKind::Point, 0, None, 2).unwrap();
        let y = y_u(&c, &pt, 0).unwrap();
        assert!(y.violations(&c).is_empty());
        assert_eq!(y.values[0].level_size(0), 1);
        assert_eq!(y.values[1].level_size(0), 1);
        let yv = y_u(&c, &pt, 1).unwrap();
        assert_eq!(yv.values[0].level_size(0), 0);
        let empty = TruncatedSimplicialSet::empty(2);
        let e = y_u(&c, &empty, 0).unwrap();
        assert!(e.values.iter().all(|v| v.total_size() == 0));
    }

    #[test]
    fn pointwise_wbar_of_constant() {
        let c = two_object();
        let b = Budget::new(1_000_000);
        let z2 = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2), 2);
        let a = Presheaf::constant(&c, &z2);
        assert!(a.violations(&c).is_empty());
        let (w, _) = wbar_pointwise(&c, &a, 3, &b).unwrap();
        assert!(w.violations(&c).is_empty());
        let direct = wbar(&z2, 3, &b).unwrap().sset;
        assert!(w.values.iter().all(|v| *v == direct));
        assert!(w.restrictions.iter().all(|r| r.is_iso()));
    }

    #[test]
    fn pointwise_unit_is_natural() {
        let c = two_object();
        let b = Budget::new(10_000_000);
        let x = interval_and_point(&c, 2);
        assert!(x.violations(&c).is_empty(), "{:?}", x.violations(&c));
        let (target, eta) = unit_pointwise(&c, &x, &b).unwrap();
        assert!(target.violations(&c).is_empty());
        assert!(target.values.iter().all(|v| validate_sset(v).is_empty()));
        assert!(
            eta.violations(&c, &x, &target).is_empty(),
            "{:?}",
            eta.violations(&c, &x, &target)
        );
    }

    #[test]
    fn pointwise_nerve_is_a_presheaf() {
        use crate::two_gpd::fixtures::z2_on_z3;
        let c = two_opens();
        let k = Presheaf::constant(&c, &z2_on_z3());
        let (n, _) = nerve_pointwise(&c, &k, 3, &Budget::new(10_000_000)).unwrap();
        assert!(n.violations(&c).is_empty());
    }
}
