//! Finite Grothendieck sites, presheaves on them, sheafification, homotopy
//! sheaves and lifting problems.
//!
//! Arrows compose in function order: `compose(f, g) = f ∘ g` needs
//! `target(g) = source(f)`. A sieve on `U` is a set of arrow ids into `U`
//! closed under precomposition.

mod homotopy;
mod json;
mod lifting;
mod presheaf;
mod sheaf;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

pub use homotopy::{
    homotopy_presheaf_2gpd, homotopy_presheaf_sgpd, homotopy_presheaf_sset, homotopy_sheaf,
    is_weak_equivalence, pi0_presheaf, SectionMap, Sections, WeqReport,
};
pub use json::{LiftingJson, PresheafJson, TransformationJson, Wire};
pub use lifting::{
    bounds, count_presheaf_maps, generating_inclusions, is_trivial_fibration, solve_lifting,
    FibrationReport, Inclusion, LiftOutcome, LiftingProblem,
};
pub use presheaf::{
    loop_pointwise, loop_pointwise_map, nerve_pointwise, presheaf_pullback, presheaf_pushout,
    unit_pointwise, wbar_pointwise, y_u, Elements, NaturalTransformation, Presheaf, Section,
};
pub use sheaf::{is_sheaf, natural_isomorphism, plus, sheafify, sheafify_groups, Valued};

pub type Sieve = BTreeSet<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SiteArrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSite {
    pub objects: Vec<String>,
    pub arrows: Vec<SiteArrow>,
    comp: Vec<Vec<Option<usize>>>,
    pub identities: Vec<usize>,
    /// Covering sieves of each object.
    pub covers: Vec<Vec<Sieve>>,
}

impl FiniteSite {
    /// Builds a site from a composition function; each cover is given by
    /// generating arrows and closed under precomposition.
    pub fn from_fn(
        objects: Vec<String>,
        arrows: Vec<SiteArrow>,
        compose: impl Fn(usize, usize) -> Option<usize>,
        covers: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let n = arrows.len();
        let comp = (0..n)
            .map(|f| {
                (0..n)
                    .map(|g| {
                        if arrows[g].target == arrows[f].source {
                            compose(f, g)
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        let mut site = FiniteSite {
            objects,
            arrows,
            comp,
            identities: Vec::new(),
            covers: Vec::new(),
        };
        site.identities = site.find_identities()?;
        if covers.len() != site.objects.len() {
            return invalid("one list of covers per object is required");
        }
        site.covers = covers
            .into_iter()
            .enumerate()
            .map(|(u, list)| {
                let mut out: Vec<Sieve> = list
                    .iter()
                    .map(|g| site.generated_sieve(u, g))
                    .collect::<Result<_>>()?;
                out.sort();
                out.dedup();
                Ok(out)
            })
            .collect::<Result<_>>()?;
        Ok(site)
    }

    fn find_identities(&self) -> Result<Vec<usize>> {
        (0..self.objects.len())
            .map(|u| {
                (0..self.arrows.len())
                    .find(|&e| {
                        self.arrows[e].source == u
                            && self.arrows[e].target == u
                            && (0..self.arrows.len()).all(|g| {
                                (self.arrows[g].target != u || self.comp[e][g] == Some(g))
                                    && (self.arrows[g].source != u || self.comp[g][e] == Some(g))
                            })
                    })
                    .ok_or_else(|| {
                        Error::Invalid(format!("object {} has no identity", self.objects[u]))
                    })
            })
            .collect()
    }

    /// The category with its coarsest topology: only maximal sieves cover.
    pub fn trivial_topology(&self) -> Self {
        let mut s = self.clone();
        s.covers = (0..self.objects.len())
            .map(|u| vec![self.maximal_sieve(u)])
            .collect();
        s
    }

    /// Same category, covers given by generating arrow names per object name.
    pub fn with_covers(&self, covers: &BTreeMap<String, Vec<Vec<String>>>) -> Result<Self> {
        let mut lists = vec![Vec::new(); self.objects.len()];
        for (obj, list) in covers {
            let u = self.object_id(obj)?;
            for gens in list {
                lists[u].push(
                    gens.iter()
                        .map(|g| self.arrow_id(g))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
        }
        FiniteSite::from_fn(
            self.objects.clone(),
            self.arrows.clone(),
            |f, g| self.comp[f][g],
            lists,
        )
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn source(&self, f: usize) -> usize {
        self.arrows[f].source
    }

    pub fn target(&self, f: usize) -> usize {
        self.arrows[f].target
    }

    /// `f ∘ g`.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.comp[f][g]
    }

    pub fn object_id(&self, name: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or(Error::UnknownId {
                level: 0,
                id: name.to_string(),
            })
    }

    pub fn arrow_id(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or(Error::UnknownId {
                level: 1,
                id: name.to_string(),
            })
    }

    /// Arrows with target `u`, in id order.
    pub fn arrows_into(&self, u: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&f| self.arrows[f].target == u)
            .collect()
    }

    /// Arrows `v → u`.
    pub fn hom(&self, v: usize, u: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&f| self.arrows[f].source == v && self.arrows[f].target == u)
            .collect()
    }

    pub fn maximal_sieve(&self, u: usize) -> Sieve {
        self.arrows_into(u).into_iter().collect()
    }

    /// The smallest sieve on `u` containing `gens`.
    pub fn generated_sieve(&self, u: usize, gens: &[usize]) -> Result<Sieve> {
        let mut out = Sieve::new();
        for &f in gens {
            if f >= self.arrows.len() || self.arrows[f].target != u {
                return invalid(format!("arrow {f} does not end at {}", self.objects[u]));
            }
            for g in 0..self.arrows.len() {
                if let Some(h) = self.comp[f][g] {
                    out.insert(h);
                }
            }
        }
        Ok(out)
    }

    /// `f^* S = {g | f ∘ g ∈ S}`, a sieve on the source of `f`.
    pub fn pullback_sieve(&self, f: usize, s: &Sieve) -> Sieve {
        (0..self.arrows.len())
            .filter(|&g| self.comp[f][g].is_some_and(|h| s.contains(&h)))
            .collect()
    }

    pub fn is_covering(&self, u: usize, s: &Sieve) -> bool {
        self.covers[u].contains(s)
    }

    /// Every sieve on `u` (downward-closed subsets of the arrows into `u`).
    pub fn sieves(&self, u: usize) -> Result<Vec<Sieve>> {
        let into = self.arrows_into(u);
        if into.len() > 20 {
            return invalid(format!(
                "{} arrows into {}: too many to enumerate sieves",
                into.len(),
                self.objects[u]
            ));
        }
        let mut out = Vec::new();
        for mask in 0u32..(1 << into.len()) {
            let s: Sieve = into
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &f)| f)
                .collect();
            if self.is_sieve(u, &s) {
                out.push(s);
            }
        }
        Ok(out)
    }

    fn is_sieve(&self, u: usize, s: &Sieve) -> bool {
        s.iter().all(|&f| {
            self.arrows[f].target == u
                && (0..self.arrows.len()).all(|g| self.comp[f][g].is_none_or(|h| s.contains(&h)))
        })
    }

    pub(crate) fn sieve_names(&self, s: &Sieve) -> String {
        let names: Vec<&str> = s.iter().map(|&f| self.arrows[f].name.as_str()).collect();
        format!("{{{}}}", names.join(", "))
    }

    pub fn to_json(&self) -> SiteJson {
        let name = |f: usize| self.arrows[f].name.clone();
        let mut comp: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        for f in 0..self.arrows.len() {
            for g in 0..self.arrows.len() {
                if let Some(h) = self.comp[f][g] {
                    comp.entry(name(f)).or_default().insert(name(g), name(h));
                }
            }
        }
        let covers = (0..self.objects.len())
            .map(|u| {
                (
                    self.objects[u].clone(),
                    self.covers[u]
                        .iter()
                        .map(|s| s.iter().map(|&f| name(f)).collect())
                        .collect(),
                )
            })
            .collect();
        SiteJson {
            objects: self.objects.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    id: a.name.clone(),
                    src: self.objects[a.source].clone(),
                    tgt: self.objects[a.target].clone(),
                })
                .collect(),
            comp,
            covers,
        }
    }

    pub fn from_json(j: &SiteJson) -> Result<Self> {
        let obj = |n: &str| {
            j.objects
                .iter()
                .position(|o| o == n)
                .ok_or(Error::UnknownId {
                    level: 0,
                    id: n.to_string(),
                })
        };
        let arrows = j
            .arrows
            .iter()
            .map(|a| {
                Ok(SiteArrow {
                    name: a.id.clone(),
                    source: obj(&a.src)?,
                    target: obj(&a.tgt)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let arrow = |n: &str| {
            arrows
                .iter()
                .position(|a| a.name == n)
                .ok_or(Error::UnknownId {
                    level: 1,
                    id: n.to_string(),
                })
        };
        let mut table = vec![vec![None; arrows.len()]; arrows.len()];
        for (f, row) in &j.comp {
            for (g, h) in row {
                table[arrow(f)?][arrow(g)?] = Some(arrow(h)?);
            }
        }
        let mut covers = vec![Vec::new(); j.objects.len()];
        for (o, list) in &j.covers {
            let u = obj(o)?;
            for s in list {
                covers[u].push(s.iter().map(|n| arrow(n)).collect::<Result<Vec<_>>>()?);
            }
        }
        FiniteSite::from_fn(j.objects.clone(), arrows, |f, g| table[f][g], covers)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

/// `{objects, arrows: [{id, src, tgt}], comp: {f: {g: f∘g}}, covers: {object: [[arrow ids]]}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SiteJson {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    pub comp: BTreeMap<String, BTreeMap<String, String>>,
    pub covers: BTreeMap<String, Vec<Vec<String>>>,
}

impl Serialize for FiniteSite {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteSite {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SiteJson::deserialize(d)?;
        FiniteSite::from_json(&j).map_err(serde::de::Error::custom)
    }
}

/// Every failed category law or topology axiom.
pub fn validate_site(c: &FiniteSite) -> Vec<String> {
    let mut out = Vec::new();
    let n = c.arrows.len();
    for f in 0..n {
        for g in 0..n {
            let composable = c.arrows[g].target == c.arrows[f].source;
            match c.comp[f][g] {
                Some(_) if !composable => out.push(format!(
                    "{}∘{} is defined but not composable",
                    c.arrows[f].name, c.arrows[g].name
                )),
                None if composable => out.push(format!(
                    "{}∘{} is missing",
                    c.arrows[f].name, c.arrows[g].name
                )),
                Some(h)
                    if c.arrows[h].source != c.arrows[g].source
                        || c.arrows[h].target != c.arrows[f].target =>
                {
                    out.push(format!(
                        "{}∘{} has the wrong endpoints",
                        c.arrows[f].name, c.arrows[g].name
                    ))
                }
                _ => {}
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for f in 0..n {
        for g in 0..n {
            for h in 0..n {
                if let (Some(fg), Some(gh)) = (c.comp[f][g], c.comp[g][h]) {
                    if c.comp[fg][h] != c.comp[f][gh] {
                        out.push(format!(
                            "associativity fails at ({}, {}, {})",
                            c.arrows[f].name, c.arrows[g].name, c.arrows[h].name
                        ));
                    }
                }
            }
        }
    }
    for u in 0..c.objects.len() {
        let on = &c.objects[u];
        for s in &c.covers[u] {
            if !c.is_sieve(u, s) {
                out.push(format!("cover {} of {on} is not a sieve", c.sieve_names(s)));
            }
        }
        if !c.is_covering(u, &c.maximal_sieve(u)) {
            out.push(format!("maximal sieve on {on} does not cover"));
        }
        for s in &c.covers[u] {
            for f in c.arrows_into(u) {
                let p = c.pullback_sieve(f, s);
                if !c.is_covering(c.arrows[f].source, &p) {
                    out.push(format!(
                        "pullback stability: cover {} of {on} pulled back along {} does not cover",
                        c.sieve_names(s),
                        c.arrows[f].name
                    ));
                }
            }
        }
        let all = match c.sieves(u) {
            Ok(a) => a,
            Err(e) => {
                out.push(e.to_string());
                continue;
            }
        };
        for r in &all {
            if c.is_covering(u, r) {
                continue;
            }
            for s in &c.covers[u] {
                if s.iter()
                    .all(|&f| c.is_covering(c.arrows[f].source, &c.pullback_sieve(f, r)))
                {
                    out.push(format!(
                        "local character: {} is locally covering along {} but does not cover {on}",
                        c.sieve_names(r),
                        c.sieve_names(s)
                    ));
                    break;
                }
            }
        }
    }
    out
}

/// `C ↓ U` with the induced topology, and its projection to `C`.
#[derive(Debug, Clone)]
pub struct CommaSite {
    pub site: FiniteSite,
    /// Object `φ: V → U` of the comma site → arrow `φ` of `C`.
    pub structure: Vec<usize>,
    /// Arrow of the comma site → underlying arrow of `C`.
    pub underlying: Vec<usize>,
}

impl CommaSite {
    /// Object of `C` under an object of the comma site.
    pub fn base_object(&self, c: &FiniteSite, phi: usize) -> usize {
        c.source(self.structure[phi])
    }
}

pub fn comma_site(c: &FiniteSite, u: usize) -> Result<CommaSite> {
    if u >= c.object_count() {
        return Err(Error::UnknownId {
            level: 0,
            id: format!("object {u}"),
        });
    }
    let structure = c.arrows_into(u);
    let pos: BTreeMap<usize, usize> = structure.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    // arrow (g over φ): φ∘g → φ
    let mut arrows = Vec::new();
    let mut underlying = Vec::new();
    let mut index = BTreeMap::new();
    for (t, &phi) in structure.iter().enumerate() {
        for g in 0..c.arrow_count() {
            if let Some(h) = c.compose(phi, g) {
                index.insert((g, t), arrows.len());
                arrows.push(SiteArrow {
                    name: format!("{}/{}", c.arrows[g].name, c.arrows[phi].name),
                    source: pos[&h],
                    target: t,
                });
                underlying.push(g);
            }
        }
    }
    let objects = structure
        .iter()
        .map(|&f| c.arrows[f].name.clone())
        .collect();
    let arrows_ref = &arrows;
    let compose = |a: usize, b: usize| -> Option<usize> {
        let (g, t) = (underlying[a], arrows_ref[a].target);
        let gh = c.compose(g, underlying[b])?;
        index.get(&(gh, t)).copied()
    };
    let covers = structure
        .iter()
        .enumerate()
        .map(|(t, &phi)| {
            c.covers[c.source(phi)]
                .iter()
                .map(|s| s.iter().map(|&g| index[&(g, t)]).collect())
                .collect()
        })
        .collect();
    let site = FiniteSite::from_fn(objects, arrows.clone(), compose, covers)?;
    Ok(CommaSite {
        site,
        structure,
        underlying,
    })
}

/// Standard sites used in tests, examples and the CLI.
pub mod fixtures {
    use super::*;
    use crate::sset::{standard_complex, ComplexKind, SimplicialMap, TruncatedSimplicialSet};

    /// One object, its identity, only the maximal sieve.
    pub fn one_object() -> FiniteSite {
        FiniteSite::from_fn(
            vec!["*".into()],
            vec![SiteArrow {
                name: "id".into(),
                source: 0,
                target: 0,
            }],
            |_, _| Some(0),
            vec![vec![vec![0]]],
        )
        .unwrap()
    }

    /// Objects `U`, `V` and `f: V → U`; `U` is covered by `⟨f⟩`.
    pub fn two_object() -> FiniteSite {
        let arrows = vec![
            SiteArrow {
                name: "id_U".into(),
                source: 0,
                target: 0,
            },
            SiteArrow {
                name: "id_V".into(),
                source: 1,
                target: 1,
            },
            SiteArrow {
                name: "f".into(),
                source: 1,
                target: 0,
            },
        ];
        let compose = |f: usize, g: usize| match (f, g) {
            (0, x) | (x, 1) => Some(x),
            _ => None,
        };
        FiniteSite::from_fn(
            vec!["U".into(), "V".into()],
            arrows,
            compose,
            vec![vec![vec![0], vec![2]], vec![vec![1]]],
        )
        .unwrap()
    }

    /// Opens `W ⊆ A, B ⊆ X` with `X` covered by `A` and `B`, and `W = A ∩ B`
    /// covered by nothing smaller.
    pub fn two_opens() -> FiniteSite {
        // objects X, A, B, W; arrows are inclusions
        let objects: Vec<String> = ["X", "A", "B", "W"].iter().map(|s| s.to_string()).collect();
        let leq = |a: usize, b: usize| a == b || b == 0 || a == 3;
        let mut arrows = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                if leq(a, b) {
                    arrows.push(SiteArrow {
                        name: if a == b {
                            format!("id_{}", objects[a])
                        } else {
                            format!("{}<{}", objects[a], objects[b])
                        },
                        source: a,
                        target: b,
                    });
                }
            }
        }
        let find = |a: usize, b: usize| arrows.iter().position(|x| x.source == a && x.target == b);
        let compose = |f: usize, g: usize| find(arrows[g].source, arrows[f].target);
        let covers = vec![
            vec![
                vec![find(0, 0).unwrap()],
                vec![find(1, 0).unwrap(), find(2, 0).unwrap()],
            ],
            vec![vec![find(1, 1).unwrap()]],
            vec![vec![find(2, 2).unwrap()]],
            vec![vec![find(3, 3).unwrap()]],
        ];
        FiniteSite::from_fn(objects, arrows.clone(), compose, covers).unwrap()
    }

    /// `Δ^1 ⊔ Δ^0` over `U`, a point over `V`, for the two-object
    /// site or its trivial topology.
    pub fn interval_and_point(c: &FiniteSite, depth: usize) -> Presheaf<TruncatedSimplicialSet> {
        let d1 = standard_complex(ComplexKind::Simplex, 1, None, depth).unwrap();
        let pt = standard_complex(ComplexKind::Point, 0, None, depth).unwrap();
        let xu = TruncatedSimplicialSet::disjoint_union(&[d1, pt.clone()]).unwrap();
        let to_pt = SimplicialMap::new(
            xu.clone(),
            pt.clone(),
            (0..=depth).map(|n| vec![0; xu.level_size(n)]).collect(),
        )
        .unwrap();
        let mut restrictions = vec![
            SimplicialMap::identity(&xu),
            SimplicialMap::identity(&pt),
            to_pt,
        ];
        restrictions.truncate(c.arrow_count());
        Presheaf {
            values: vec![xu, pt],
            restrictions,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn fixtures_are_sites() {
        for s in [one_object(), two_object(), two_opens()] {
            assert!(validate_site(&s).is_empty(), "{:?}", validate_site(&s));
            assert!(validate_site(&s.trivial_topology()).is_empty());
        }
    }

    #[test]
    fn planted_unstable_coverage() {
        // a cover of X by A alone, without its pullback to B covering B
        let s = two_opens();
        let mut covers: BTreeMap<String, Vec<Vec<String>>> = BTreeMap::new();
        covers.insert("X".into(), vec![vec!["id_X".into()], vec!["A<X".into()]]);
        for o in ["A", "B", "W"] {
            covers.insert(o.into(), vec![vec![format!("id_{o}")]]);
        }
        let bad = s.with_covers(&covers).unwrap();
        let v = validate_site(&bad);
        assert!(
            v.iter().any(|m| m.starts_with("pullback stability")),
            "{v:?}"
        );
    }

    #[test]
    fn comma_sites() {
        let c = two_object();
        let over_u = comma_site(&c, 0).unwrap();
        assert_eq!(over_u.site.object_count(), c.arrows_into(0).len());
        assert!(validate_site(&over_u.site).is_empty());
        let over_v = comma_site(&c, 1).unwrap();
        assert_eq!(over_v.site.object_count(), 1);
        let one = comma_site(&one_object(), 0).unwrap();
        assert_eq!(one.site.object_count(), 1);
        let x = comma_site(&two_opens(), 0).unwrap();
        assert_eq!(x.site.object_count(), 4);
        assert_eq!(x.site.arrow_count(), two_opens().arrow_count());
        assert!(validate_site(&x.site).is_empty());
    }

    #[test]
    fn json_round_trip() {
        let s = two_opens();
        let text = serde_json::to_string(&s).unwrap();
        let back: FiniteSite = serde_json::from_str(&text).unwrap();
        assert_eq!(s, back);
    }
}
