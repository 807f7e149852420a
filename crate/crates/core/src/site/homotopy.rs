//! Homotopy presheaves and sheaves over comma sites, and the criterion that a
//! map is a weak equivalence when it induces isomorphisms of all of them.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::presheaf::{Elements, NaturalTransformation, Presheaf};
use super::sheaf::{natural_isomorphism, sheafify, sheafify_groups};
use super::{comma_site, CommaSite, FiniteSite};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::loops::loop_groupoid;
use crate::presentation::Verdict;
use crate::sgpd::{moore_pi_n, pi0_sgpd, SimplicialGroupoid};
use crate::sset::{pi0_sset, pi_n_kan, Basepoint, Components, TruncatedSimplicialSet};
use crate::two_gpd::{pi0_2gpd, pi1_classes, pi2_2gpd, TwoGroupoid};

/// A presheaf of any of the supported kinds.
#[derive(Debug, Clone)]
pub enum Sections {
    SSet(Presheaf<TruncatedSimplicialSet>),
    SGpd(Presheaf<SimplicialGroupoid>),
    TwoGpd(Presheaf<TwoGroupoid>),
}

/// A map between presheaves of the same kind.
#[derive(Debug, Clone)]
pub enum SectionMap {
    SSet(NaturalTransformation<TruncatedSimplicialSet>),
    SGpd(NaturalTransformation<crate::sgpd::SimplicialGroupoid>),
    TwoGpd(NaturalTransformation<TwoGroupoid>),
}

impl Sections {
    fn kind(&self) -> &'static str {
        match self {
            Sections::SSet(_) => "simplicial sets",
            Sections::SGpd(_) => "simplicial groupoids",
            Sections::TwoGpd(_) => "2-groupoids",
        }
    }

    /// Basepoints over `u`: vertices or objects of the section.
    fn points(&self, u: usize) -> usize {
        match self {
            Sections::SSet(x) => x.values[u].level_size(0),
            Sections::SGpd(x) => x.values[u].objects().len(),
            Sections::TwoGpd(x) => x.values[u].object_count(),
        }
    }

    fn point_name(&self, u: usize, p: usize) -> String {
        match self {
            Sections::SSet(x) => x.values[u].name(0, p).to_string(),
            Sections::SGpd(x) => x.values[u].objects()[p].clone(),
            Sections::TwoGpd(x) => x.values[u].one.objects[p].clone(),
        }
    }

    /// Image of basepoint `p` under restriction along `f`.
    fn restrict_point(&self, f: usize, p: usize) -> usize {
        match self {
            Sections::SSet(x) => x.restrictions[f].apply(0, p),
            Sections::SGpd(x) => x.restrictions[f].objects[p],
            Sections::TwoGpd(x) => x.restrictions[f].objects[p],
        }
    }
}

impl SectionMap {
    fn on_point(&self, u: usize, p: usize) -> usize {
        match self {
            SectionMap::SSet(m) => m.components[u].apply(0, p),
            SectionMap::SGpd(m) => m.components[u].objects[p],
            SectionMap::TwoGpd(m) => m.components[u].objects[p],
        }
    }
}

fn components_of(x: &Sections, u: usize) -> Result<Components> {
    match x {
        Sections::SSet(p) => pi0_sset(&p.values[u]),
        Sections::SGpd(p) => Ok(pi0_sgpd(&p.values[u])),
        Sections::TwoGpd(p) => Ok(pi0_2gpd(&p.values[u])),
    }
}

/// The presheaf of path components.
pub fn pi0_presheaf(c: &FiniteSite, x: &Sections) -> Result<Presheaf<Elements>> {
    let comps = (0..c.object_count())
        .map(|u| components_of(x, u))
        .collect::<Result<Vec<_>>>()?;
    let values = comps
        .iter()
        .enumerate()
        .map(|(u, k)| {
            Elements(
                k.representatives()
                    .iter()
                    .map(|&p| x.point_name(u, p))
                    .collect(),
            )
        })
        .collect();
    let restrictions = (0..c.arrow_count())
        .map(|f| {
            let (t, s) = (c.target(f), c.source(f));
            comps[t]
                .representatives()
                .iter()
                .map(|&p| comps[s].class_of[x.restrict_point(f, p)])
                .collect()
        })
        .collect();
    Ok(Presheaf {
        values,
        restrictions,
    })
}

/// A homotopy group with a representative per class and a classifier.
struct Classes {
    group: FiniteGroup,
    representatives: Vec<usize>,
    /// `None`: the group is trivial and everything lands in class 0.
    class_of: Option<HashMap<usize, usize>>,
}

impl Classes {
    fn trivial() -> Self {
        Classes {
            group: FiniteGroup::trivial(),
            representatives: vec![0],
            class_of: None,
        }
    }

    fn classify(&self, id: usize) -> Result<usize> {
        match &self.class_of {
            None => Ok(0),
            Some(m) => m
                .get(&id)
                .copied()
                .ok_or_else(|| Error::Invalid("restriction does not preserve cycles".into())),
        }
    }
}

fn assemble(
    cs: &CommaSite,
    classes: &[Classes],
    image: impl Fn(usize, usize) -> usize,
) -> Result<Presheaf<FiniteGroup>> {
    let restrictions = (0..cs.site.arrow_count())
        .map(|a| {
            let (t, s) = (cs.site.target(a), cs.site.source(a));
            classes[t]
                .representatives
                .iter()
                .map(|&r| classes[s].classify(image(a, r)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Presheaf {
        values: classes.iter().map(|k| k.group.clone()).collect(),
        restrictions,
    })
}

/// Basepoint over each comma object `φ: V → U`.
fn comma_points(c: &FiniteSite, cs: &CommaSite, x: &Sections, point: usize) -> Vec<usize> {
    let _ = c;
    cs.structure
        .iter()
        .map(|&phi| x.restrict_point(phi, point))
        .collect()
}

/// `φ ↦ π_n(X(V)(x_V, x_V))` on `C ↓ U`, from Moore complexes.
pub fn homotopy_presheaf_sgpd(
    c: &FiniteSite,
    x: &Presheaf<SimplicialGroupoid>,
    u: usize,
    point: usize,
    n: usize,
) -> Result<(CommaSite, Presheaf<FiniteGroup>)> {
    let cs = comma_site(c, u)?;
    let sx = Sections::SGpd(x.clone());
    check_point(&sx, u, point)?;
    let points = comma_points(c, &cs, &sx, point);
    let classes = (0..cs.site.object_count())
        .map(|o| {
            let m = moore_pi_n(&x.values[cs.base_object(c, o)], points[o], n)?;
            Ok(Classes {
                group: m.group,
                representatives: m.representatives,
                class_of: Some(m.class_of),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let p = assemble(&cs, &classes, |a, r| {
        x.restrictions[cs.underlying[a]].levels[n][r]
    })?;
    Ok((cs, p))
}

/// `φ ↦ π_n(X(V), x_V)` on `C ↓ U` for `n ≥ 1`. Kan sections use pointed
/// spheres; sections whose loop groupoid is free on forests have trivial
/// `π_n`, since their loop groupoid has trivial vertex groups in every level.
pub fn homotopy_presheaf_sset(
    c: &FiniteSite,
    x: &Presheaf<TruncatedSimplicialSet>,
    u: usize,
    point: usize,
    n: usize,
    budget: &Budget,
) -> Result<(CommaSite, Presheaf<FiniteGroup>)> {
    if n == 0 {
        return Err(Error::Invalid("use the π_0 presheaf for n = 0".into()));
    }
    let cs = comma_site(c, u)?;
    let sx = Sections::SSet(x.clone());
    check_point(&sx, u, point)?;
    let points = comma_points(c, &cs, &sx, point);
    let classes = (0..cs.site.object_count())
        .map(|o| {
            let v = cs.base_object(c, o);
            let section = &x.values[v];
            match pi_n_kan(section, Basepoint(points[o]), n, budget) {
                Ok(h) => Ok(Classes {
                    group: h.group.expect("n ≥ 1 carries a group"),
                    representatives: h.representatives,
                    class_of: Some(h.class_of),
                }),
                Err(Error::NotKan { .. }) => {
                    if section.depth() >= 1 && loop_groupoid(section, section.depth() - 1)?.is_finite() {
                        Ok(Classes::trivial())
                    } else {
                        Err(Error::Invalid(format!(
                            "section over {} is neither Kan nor free on forests; π_{n} is not computed",
                            c.objects[v]
                        )))
                    }
                }
                Err(e) => Err(e),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let p = assemble(&cs, &classes, |a, r| {
        x.restrictions[cs.underlying[a]].apply(n, r)
    })?;
    Ok((cs, p))
}

/// `φ ↦ π_i(K(V), x_V)` on `C ↓ U` for `i ∈ {1, 2}`.
pub fn homotopy_presheaf_2gpd(
    c: &FiniteSite,
    k: &Presheaf<TwoGroupoid>,
    u: usize,
    point: usize,
    i: usize,
) -> Result<(CommaSite, Presheaf<FiniteGroup>)> {
    if !(1..=2).contains(&i) {
        return Err(Error::Invalid(format!(
            "2-groupoids carry π_1 and π_2 only, not π_{i}"
        )));
    }
    let cs = comma_site(c, u)?;
    let sk = Sections::TwoGpd(k.clone());
    check_point(&sk, u, point)?;
    let points = comma_points(c, &cs, &sk, point);
    let classes = (0..cs.site.object_count())
        .map(|o| {
            let g = &k.values[cs.base_object(c, o)];
            let x = points[o];
            if i == 1 {
                let (group, loops, class) = pi1_classes(g, x);
                let mut representatives = vec![usize::MAX; group.order()];
                for (p, &cl) in class.iter().enumerate().rev() {
                    representatives[cl] = loops[p];
                }
                let class_of = loops.iter().zip(&class).map(|(&l, &cl)| (l, cl)).collect();
                Ok(Classes {
                    group,
                    representatives,
                    class_of: Some(class_of),
                })
            } else {
                let group = pi2_2gpd(g, x)?;
                let id = g.one.identity(x);
                let cells = g.cells_between(id, id);
                Ok(Classes {
                    group,
                    class_of: Some(
                        cells
                            .iter()
                            .enumerate()
                            .map(|(p, &cell)| (cell, p))
                            .collect(),
                    ),
                    representatives: cells,
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let p = assemble(&cs, &classes, |a, r| {
        let phi = &k.restrictions[cs.underlying[a]];
        if i == 1 {
            phi.one[r]
        } else {
            phi.two[r]
        }
    })?;
    Ok((cs, p))
}

fn check_point(x: &Sections, u: usize, point: usize) -> Result<()> {
    if point >= x.points(u) {
        return Err(Error::UnknownId {
            level: 0,
            id: format!("basepoint {point}"),
        });
    }
    Ok(())
}

/// The homotopy sheaf: sheafification of a homotopy presheaf on its comma site.
pub fn homotopy_sheaf(
    cs: &CommaSite,
    p: &Presheaf<FiniteGroup>,
    budget: &Budget,
) -> Result<Presheaf<FiniteGroup>> {
    sheafify_groups(&cs.site, p, budget)
}

/// Outcome of the weak-equivalence criterion, with every sheaf compared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeqReport {
    pub verdict: Verdict,
    /// Sheaves compared, in order.
    pub checked: Vec<String>,
    /// The first sheaf that is not isomorphic, or the reason for `unknown`.
    pub witness: Option<String>,
}

fn homotopy_sheaf_of(
    c: &FiniteSite,
    x: &Sections,
    u: usize,
    point: usize,
    n: usize,
    budget: &Budget,
) -> Result<(CommaSite, Presheaf<FiniteGroup>)> {
    let (cs, p) = match x {
        Sections::SSet(s) => homotopy_presheaf_sset(c, s, u, point, n, budget)?,
        Sections::SGpd(s) => homotopy_presheaf_sgpd(c, s, u, point, n)?,
        Sections::TwoGpd(s) => homotopy_presheaf_2gpd(c, s, u, point, n)?,
    };
    let sheaf = homotopy_sheaf(&cs, &p, budget)?;
    Ok((cs, sheaf))
}

/// Whether `f: X → Y` induces isomorphisms of the `π_0` sheaf and of every
/// homotopy sheaf `π_n(X|_U, x)` with `n ≤ n_max` (Moore degrees `0..=n_max`
/// for simplicial groupoids, `1..=min(n_max, 2)` otherwise). Isomorphism is
/// decided by natural-isomorphism search; a spent budget gives `unknown`.
pub fn is_weak_equivalence(
    c: &FiniteSite,
    x: &Sections,
    y: &Sections,
    f: &SectionMap,
    n_max: usize,
    budget: &Budget,
) -> Result<WeqReport> {
    if std::mem::discriminant(x) != std::mem::discriminant(y) {
        return Err(Error::Invalid(format!(
            "source holds {} but target holds {}",
            x.kind(),
            y.kind()
        )));
    }
    let mut report = WeqReport {
        verdict: Verdict::Yes,
        checked: Vec::new(),
        witness: None,
    };
    let settle = |report: &mut WeqReport, what: String, v: Verdict| -> bool {
        report.checked.push(what.clone());
        match v {
            Verdict::Yes => true,
            Verdict::No => {
                report.verdict = Verdict::No;
                report.witness = Some(format!("{what} is not isomorphic"));
                false
            }
            Verdict::Unknown => {
                if report.verdict == Verdict::Yes {
                    report.verdict = Verdict::Unknown;
                    report.witness = Some(format!("{what}: search budget exhausted"));
                }
                true
            }
        }
    };
    let p0x = sheafify(c, &pi0_presheaf(c, x)?, budget)?;
    let p0y = sheafify(c, &pi0_presheaf(c, y)?, budget)?;
    let (v, _) = natural_isomorphism(c, &p0x, &p0y, budget)?;
    if !settle(&mut report, "π_0 sheaf".into(), v) {
        return Ok(report);
    }
    let degrees: Vec<usize> = match x {
        Sections::SGpd(_) => (0..=n_max).collect(),
        Sections::SSet(_) => (1..=n_max).collect(),
        Sections::TwoGpd(_) => (1..=n_max.min(2)).collect(),
    };
    for u in 0..c.object_count() {
        for point in 0..x.points(u) {
            let image = f.on_point(u, point);
            for &n in &degrees {
                let (cs, left) = homotopy_sheaf_of(c, x, u, point, n, budget)?;
                let (_, right) = homotopy_sheaf_of(c, y, u, image, n, budget)?;
                let (v, _) = natural_isomorphism(&cs.site, &left, &right, budget)?;
                let what = format!(
                    "π_{n} sheaf over {} at {}",
                    c.objects[u],
                    x.point_name(u, point)
                );
                if !settle(&mut report, what, v) {
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::two_gpd::fixtures::cyclic_two_cells;

    #[test]
    fn constant_z2_groupoid() {
        let c = two_object();
        let z2 = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2), 2);
        let x = Presheaf::constant(&c, &z2);
        let (cs, p0) = homotopy_presheaf_sgpd(&c, &x, 0, 0, 0).unwrap();
        assert!(p0.values.iter().all(|g| g.order() == 2));
        assert!(p0.violations(&cs.site).is_empty());
        let (_, p1) = homotopy_presheaf_sgpd(&c, &x, 0, 0, 1).unwrap();
        assert!(p1.values.iter().all(|g| g.order() == 1));
    }

    #[test]
    fn sectionwise_values() {
        // Z/2 over U, trivial over V
        let c = two_object();
        let z2 = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2), 2);
        let one = SimplicialGroupoid::constant_group(&FiniteGroup::trivial(), 2);
        let to_one =
            crate::sgpd::SGpdMap::new(z2.clone(), one.clone(), vec![0], vec![vec![0, 0]; 3])
                .unwrap();
        let x = Presheaf {
            values: vec![z2.clone(), one.clone()],
            restrictions: vec![
                crate::sgpd::SGpdMap::identity(&z2),
                crate::sgpd::SGpdMap::identity(&one),
                to_one,
            ],
        };
        assert!(x.violations(&c).is_empty());
        let (cs, p0) = homotopy_presheaf_sgpd(&c, &x, 0, 0, 0).unwrap();
        let orders: Vec<usize> = (0..cs.site.object_count())
            .map(|o| p0.values[o].order())
            .collect();
        assert_eq!(orders, vec![2, 1]);
        // over the covered object the sheaf only sees V
        let sheaf = homotopy_sheaf(&cs, &p0, &Budget::new(1_000_000)).unwrap();
        assert!(sheaf.values.iter().all(|g| g.order() == 1));
        let trivial = two_object().trivial_topology();
        let (cs, p0) = homotopy_presheaf_sgpd(&trivial, &x, 0, 0, 0).unwrap();
        let sheaf = homotopy_sheaf(&cs, &p0, &Budget::new(1_000_000)).unwrap();
        assert_eq!(sheaf.values[0].order(), 2);
    }

    #[test]
    fn two_groupoid_pi2_sheaf() {
        let c = two_object();
        let k = Presheaf::constant(&c, &cyclic_two_cells(3));
        let (cs, p) = homotopy_presheaf_2gpd(&c, &k, 0, 0, 2).unwrap();
        let s = homotopy_sheaf(&cs, &p, &Budget::new(1_000_000)).unwrap();
        assert!(s.values.iter().all(|g| g.order() == 3));
        let b = Budget::new(1_000_000);
        assert_eq!(
            natural_isomorphism(&cs.site, &p, &s, &b).unwrap().0,
            Verdict::Yes
        );
    }

    #[test]
    fn identity_is_a_weak_equivalence() {
        let c = two_object();
        let z2 = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2), 2);
        let x = Presheaf::constant(&c, &z2);
        let id = NaturalTransformation::identity(&x);
        let r = is_weak_equivalence(
            &c,
            &Sections::SGpd(x.clone()),
            &Sections::SGpd(x),
            &SectionMap::SGpd(id),
            1,
            &Budget::new(1_000_000),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Yes, "{r:?}");
    }
}
