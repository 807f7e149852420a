//! Wire forms of presheaves and natural transformations. Values use the
//! formats of their own modules; maps are written by element names.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::homotopy::{SectionMap, Sections};
use super::lifting::LiftingProblem;
use super::presheaf::{Elements, NaturalTransformation, Presheaf, Section};
use super::FiniteSite;
use crate::error::{invalid, Error, Result};
use crate::group::FiniteGroup;
use crate::sgpd::{SGpdMap, SimplicialGroupoid};
use crate::sset::{SimplicialMap, TruncatedSimplicialSet};
use crate::two_gpd::{TwoFunctor, TwoGroupoid};

/// `{"kind", "values": {object: value}, "restrictions": {arrow: map}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PresheafJson {
    pub kind: String,
    pub values: BTreeMap<String, Value>,
    pub restrictions: BTreeMap<String, Value>,
}

/// `{"components": {object: map}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformationJson {
    pub components: BTreeMap<String, Value>,
}

/// A value domain with a wire form for values and for maps between them.
pub trait Wire: Section {
    const KIND: &'static str;
    fn value_to_json(&self) -> Value;
    fn value_from_json(v: &Value) -> Result<Self>;
    fn map_to_json(&self, target: &Self, m: &Self::Map) -> Value;
    fn map_from_json(&self, target: &Self, v: &Value) -> Result<Self::Map>;
}

fn parse<T: serde::de::DeserializeOwned>(v: &Value) -> Result<T> {
    Ok(serde_json::from_value(v.clone())?)
}

fn lookup(names: &[String], name: &str, level: usize) -> Result<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| Error::UnknownId {
            level,
            id: name.to_string(),
        })
}

fn named_table(from: &[String], to: &[String], table: &[usize]) -> BTreeMap<String, String> {
    table
        .iter()
        .enumerate()
        .map(|(x, &y)| (from[x].clone(), to[y].clone()))
        .collect()
}

fn read_table(
    from: &[String],
    to: &[String],
    m: &BTreeMap<String, String>,
    level: usize,
) -> Result<Vec<usize>> {
    from.iter()
        .map(|x| {
            let y = m
                .get(x)
                .ok_or_else(|| Error::Invalid(format!("map undefined on {x:?}")))?;
            lookup(to, y, level)
        })
        .collect()
}

impl Wire for Elements {
    const KIND: &'static str = "sets";

    fn value_to_json(&self) -> Value {
        json!(self.0)
    }

    fn value_from_json(v: &Value) -> Result<Self> {
        Ok(Elements(parse(v)?))
    }

    fn map_to_json(&self, target: &Self, m: &Vec<usize>) -> Value {
        json!(named_table(&self.0, &target.0, m))
    }

    fn map_from_json(&self, target: &Self, v: &Value) -> Result<Vec<usize>> {
        read_table(&self.0, &target.0, &parse(v)?, 0)
    }
}

impl Wire for FiniteGroup {
    const KIND: &'static str = "groups";

    fn value_to_json(&self) -> Value {
        json!(self)
    }

    fn value_from_json(v: &Value) -> Result<Self> {
        let g: FiniteGroup = parse(v)?;
        FiniteGroup::new(g.labels, g.mul, g.identity)
    }

    fn map_to_json(&self, target: &Self, m: &Vec<usize>) -> Value {
        json!(named_table(&self.labels, &target.labels, m))
    }

    fn map_from_json(&self, target: &Self, v: &Value) -> Result<Vec<usize>> {
        read_table(&self.labels, &target.labels, &parse(v)?, 0)
    }
}

impl Wire for TruncatedSimplicialSet {
    const KIND: &'static str = "sset";

    fn value_to_json(&self) -> Value {
        json!(self.to_json())
    }

    fn value_from_json(v: &Value) -> Result<Self> {
        TruncatedSimplicialSet::from_json(&parse(v)?)
    }

    fn map_to_json(&self, _: &Self, m: &SimplicialMap) -> Value {
        json!(m.to_names())
    }

    fn map_from_json(&self, target: &Self, v: &Value) -> Result<SimplicialMap> {
        SimplicialMap::from_names(
            self.clone(),
            target.clone(),
            &parse::<Vec<BTreeMap<String, String>>>(v)?,
        )
    }
}

fn arrow_names(a: &SimplicialGroupoid, n: usize) -> Vec<String> {
    a.level(n).arrows.iter().map(|x| x.name.clone()).collect()
}

#[derive(Serialize, Deserialize)]
struct SGpdMapJson {
    objects: BTreeMap<String, String>,
    levels: Vec<BTreeMap<String, String>>,
}

impl Wire for SimplicialGroupoid {
    const KIND: &'static str = "sgpd";

    fn value_to_json(&self) -> Value {
        json!(self.to_json())
    }

    fn value_from_json(v: &Value) -> Result<Self> {
        SimplicialGroupoid::from_json(&parse(v)?)
    }

    fn map_to_json(&self, target: &Self, m: &SGpdMap) -> Value {
        json!(SGpdMapJson {
            objects: named_table(self.objects(), target.objects(), &m.objects),
            levels: (0..=self.depth())
                .map(|n| named_table(&arrow_names(self, n), &arrow_names(target, n), &m.levels[n]))
                .collect(),
        })
    }

    fn map_from_json(&self, target: &Self, v: &Value) -> Result<SGpdMap> {
        let j: SGpdMapJson = parse(v)?;
        if j.levels.len() != self.depth() + 1 {
            return invalid("map table needs one entry per level");
        }
        let objects = read_table(self.objects(), target.objects(), &j.objects, 0)?;
        let levels = (0..=self.depth())
            .map(|n| {
                read_table(
                    &arrow_names(self, n),
                    &arrow_names(target, n),
                    &j.levels[n],
                    n,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        SGpdMap::new(self.clone(), target.clone(), objects, levels)
    }
}

#[derive(Serialize, Deserialize)]
struct FunctorJson {
    objects: BTreeMap<String, String>,
    one: BTreeMap<String, String>,
    two: BTreeMap<String, String>,
}

fn one_names(k: &TwoGroupoid) -> Vec<String> {
    k.one.arrows.iter().map(|a| a.name.clone()).collect()
}

fn two_names(k: &TwoGroupoid) -> Vec<String> {
    k.cells.iter().map(|a| a.name.clone()).collect()
}

impl Wire for TwoGroupoid {
    const KIND: &'static str = "2gpd";

    fn value_to_json(&self) -> Value {
        json!(self.to_json())
    }

    fn value_from_json(v: &Value) -> Result<Self> {
        TwoGroupoid::from_json(&parse(v)?)
    }

    fn map_to_json(&self, target: &Self, m: &TwoFunctor) -> Value {
        json!(FunctorJson {
            objects: named_table(&self.one.objects, &target.one.objects, &m.objects),
            one: named_table(&one_names(self), &one_names(target), &m.one),
            two: named_table(&two_names(self), &two_names(target), &m.two),
        })
    }

    fn map_from_json(&self, target: &Self, v: &Value) -> Result<TwoFunctor> {
        let j: FunctorJson = parse(v)?;
        let m = TwoFunctor {
            source: self.clone(),
            target: target.clone(),
            objects: read_table(&self.one.objects, &target.one.objects, &j.objects, 0)?,
            one: read_table(&one_names(self), &one_names(target), &j.one, 1)?,
            two: read_table(&two_names(self), &two_names(target), &j.two, 2)?,
        };
        match m.violations().first() {
            None => Ok(m),
            Some(v) => invalid(format!("not a 2-functor: {v}")),
        }
    }
}

fn entry<'a>(m: &'a BTreeMap<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    m.get(key)
        .ok_or_else(|| Error::Invalid(format!("{what} missing for {key:?}")))
}

impl PresheafJson {
    pub fn from_presheaf<V: Wire>(c: &FiniteSite, p: &Presheaf<V>) -> Self {
        PresheafJson {
            kind: V::KIND.into(),
            values: c
                .objects
                .iter()
                .cloned()
                .zip(p.values.iter().map(V::value_to_json))
                .collect(),
            restrictions: c
                .arrows
                .iter()
                .enumerate()
                .map(|(f, a)| {
                    let (t, s) = (&p.values[a.target], &p.values[a.source]);
                    (a.name.clone(), t.map_to_json(s, &p.restrictions[f]))
                })
                .collect(),
        }
    }

    /// Reads the presheaf, checking its kind and functoriality.
    pub fn to_presheaf<V: Wire>(&self, c: &FiniteSite) -> Result<Presheaf<V>> {
        if self.kind != V::KIND {
            return invalid(format!(
                "expected a presheaf of {}, found {}",
                V::KIND,
                self.kind
            ));
        }
        let values = c
            .objects
            .iter()
            .map(|o| V::value_from_json(entry(&self.values, o, "value")?))
            .collect::<Result<Vec<_>>>()?;
        let restrictions = c
            .arrows
            .iter()
            .map(|a| {
                values[a.target].map_from_json(
                    &values[a.source],
                    entry(&self.restrictions, &a.name, "restriction")?,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        let p = Presheaf {
            values,
            restrictions,
        };
        match p.violations(c).first() {
            None => Ok(p),
            Some(v) => invalid(format!("not a presheaf: {v}")),
        }
    }

    /// Reads a presheaf of simplicial sets, simplicial groupoids or 2-groupoids.
    pub fn to_sections(&self, c: &FiniteSite) -> Result<Sections> {
        match self.kind.as_str() {
            "sset" => Ok(Sections::SSet(self.to_presheaf(c)?)),
            "sgpd" => Ok(Sections::SGpd(self.to_presheaf(c)?)),
            "2gpd" => Ok(Sections::TwoGpd(self.to_presheaf(c)?)),
            other => invalid(format!("presheaves of {other} carry no homotopy")),
        }
    }
}

impl TransformationJson {
    pub fn from_transformation<V: Wire>(
        c: &FiniteSite,
        from: &Presheaf<V>,
        to: &Presheaf<V>,
        m: &NaturalTransformation<V>,
    ) -> Self {
        TransformationJson {
            components: (0..c.object_count())
                .map(|u| {
                    (
                        c.objects[u].clone(),
                        from.values[u].map_to_json(&to.values[u], &m.components[u]),
                    )
                })
                .collect(),
        }
    }

    pub fn to_transformation<V: Wire>(
        &self,
        c: &FiniteSite,
        from: &Presheaf<V>,
        to: &Presheaf<V>,
    ) -> Result<NaturalTransformation<V>> {
        let components = (0..c.object_count())
            .map(|u| {
                from.values[u].map_from_json(
                    &to.values[u],
                    entry(&self.components, &c.objects[u], "component")?,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        let m = NaturalTransformation { components };
        match m.violations(c, from, to).first() {
            None => Ok(m),
            Some(v) => invalid(format!("not natural: {v}")),
        }
    }

    /// Reads a map between two presheaves of the same homotopical kind.
    pub fn to_section_map(
        &self,
        c: &FiniteSite,
        from: &Sections,
        to: &Sections,
    ) -> Result<SectionMap> {
        match (from, to) {
            (Sections::SSet(a), Sections::SSet(b)) => {
                Ok(SectionMap::SSet(self.to_transformation(c, a, b)?))
            }
            (Sections::SGpd(a), Sections::SGpd(b)) => {
                Ok(SectionMap::SGpd(self.to_transformation(c, a, b)?))
            }
            (Sections::TwoGpd(a), Sections::TwoGpd(b)) => {
                Ok(SectionMap::TwoGpd(self.to_transformation(c, a, b)?))
            }
            _ => invalid("source and target presheaves have different kinds"),
        }
    }
}

/// A lifting square: four presheaves of simplicial sets and four maps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LiftingJson {
    pub a: PresheafJson,
    pub b: PresheafJson,
    pub x: PresheafJson,
    pub y: PresheafJson,
    pub i: TransformationJson,
    pub p: TransformationJson,
    pub top: TransformationJson,
    pub bottom: TransformationJson,
}

impl LiftingJson {
    pub fn to_problem(&self, c: &FiniteSite) -> Result<LiftingProblem> {
        let (a, b, x, y) = (
            self.a.to_presheaf(c)?,
            self.b.to_presheaf(c)?,
            self.x.to_presheaf(c)?,
            self.y.to_presheaf(c)?,
        );
        Ok(LiftingProblem {
            i: self.i.to_transformation(c, &a, &b)?,
            p: self.p.to_transformation(c, &x, &y)?,
            top: self.top.to_transformation(c, &a, &x)?,
            bottom: self.bottom.to_transformation(c, &b, &y)?,
            a,
            b,
            x,
            y,
        })
    }

    pub fn from_problem(c: &FiniteSite, p: &LiftingProblem) -> Self {
        LiftingJson {
            a: PresheafJson::from_presheaf(c, &p.a),
            b: PresheafJson::from_presheaf(c, &p.b),
            x: PresheafJson::from_presheaf(c, &p.x),
            y: PresheafJson::from_presheaf(c, &p.y),
            i: TransformationJson::from_transformation(c, &p.a, &p.b, &p.i),
            p: TransformationJson::from_transformation(c, &p.x, &p.y, &p.p),
            top: TransformationJson::from_transformation(c, &p.a, &p.x, &p.top),
            bottom: TransformationJson::from_transformation(c, &p.b, &p.y, &p.bottom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::two_gpd::fixtures::z2_on_z3;

    fn round_trip<V: Wire + PartialEq>(c: &FiniteSite, p: &Presheaf<V>)
    where
        V::Map: PartialEq,
    {
        let j = PresheafJson::from_presheaf(c, p);
        let text = serde_json::to_string(&j).unwrap();
        let back: PresheafJson = serde_json::from_str(&text).unwrap();
        assert_eq!(&back.to_presheaf::<V>(c).unwrap(), p);
        let id = NaturalTransformation::identity(p);
        let t = TransformationJson::from_transformation(c, p, p, &id);
        assert_eq!(t.to_transformation(c, p, p).unwrap(), id);
    }

    #[test]
    fn presheaves_round_trip() {
        let c = two_object();
        round_trip(&c, &interval_and_point(&c, 2));
        round_trip(&c, &Presheaf::constant(&c, &FiniteGroup::cyclic(3)));
        round_trip(
            &c,
            &Presheaf {
                values: vec![
                    Elements(vec!["a".into(), "b".into()]),
                    Elements(vec!["c".into()]),
                ],
                restrictions: vec![vec![0, 1], vec![0], vec![0, 0]],
            },
        );
        round_trip(
            &c,
            &Presheaf::constant(
                &c,
                &SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2), 2),
            ),
        );
        round_trip(&c, &Presheaf::constant(&c, &z2_on_z3()));
    }

    #[test]
    fn kind_mismatch_is_rejected() {
        let c = two_object();
        let j = PresheafJson::from_presheaf(&c, &Presheaf::constant(&c, &FiniteGroup::cyclic(2)));
        assert!(j.to_presheaf::<Elements>(&c).is_err());
        assert!(j.to_sections(&c).is_err());
    }
}
