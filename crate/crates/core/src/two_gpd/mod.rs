//! Finite strict 2-groupoids given by tables.
//!
//! 1-cells compose in function order (`g ∘ f` when `target(f) = source(g)`).
//! For 2-cells, `vertical(β, α) = β · α` needs `target(α) = source(β)`, and
//! `horizontal(β, α) = β * α` takes `α: f ⇒ f'` and `β: g ⇒ g'` to
//! `g ∘ f ⇒ g' ∘ f'`.

mod maps;
mod nerve;
mod presented;

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::group::FiniteGroup;
use crate::groupoid::{pi0_groupoid, FiniteGroupoid, GroupoidJson};
use crate::sset::Components;

pub use maps::{
    ms_fibration, ms_weak_equivalence, ms_weak_equivalence_presented, MsVerdict, TwoFunctor,
};
pub use nerve::{nerve, NerveComplex, NerveSimplex};
pub use presented::{
    counit_2gpd, count_presented_homs, for_each_presented_hom, whitehead_2gpd, PresentedHom,
    PresentedTwoGroupoid, Relation, TwoGenerator,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoCell {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoGroupoid {
    /// Objects and 1-cells.
    pub one: FiniteGroupoid,
    pub cells: Vec<TwoCell>,
    vertical: Vec<Vec<Option<usize>>>,
    horizontal: Vec<Vec<Option<usize>>>,
    /// Identity 2-cell of each 1-cell.
    pub identities: Vec<usize>,
    /// Vertical inverse of each 2-cell.
    pub inverses: Vec<usize>,
}

/// A crossed module `∂: M → N` with `N` acting on `M`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossedModule {
    pub n: FiniteGroup,
    pub m: FiniteGroup,
    pub boundary: Vec<usize>,
    /// `action[n][m] = ⁿm`.
    pub action: Vec<Vec<usize>>,
}

impl CrossedModule {
    /// `M` with trivial `N` and trivial action: only 2-cells.
    pub fn second_only(m: FiniteGroup) -> Self {
        let action = vec![(0..m.order()).collect()];
        CrossedModule {
            n: FiniteGroup::trivial(),
            boundary: vec![0; m.order()],
            m,
            action,
        }
    }

    /// `N` acting on `M` through `act`, with trivial boundary.
    pub fn with_action(
        n: FiniteGroup,
        m: FiniteGroup,
        act: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let action = (0..n.order())
            .map(|a| (0..m.order()).map(|b| act(a, b)).collect())
            .collect();
        CrossedModule {
            boundary: vec![n.identity; m.order()],
            n,
            m,
            action,
        }
    }

    /// Every failed crossed-module axiom.
    pub fn violations(&self) -> Vec<String> {
        let (n, m) = (&self.n, &self.m);
        let mut out = Vec::new();
        if self.boundary.len() != m.order() || !m.is_hom(n, &self.boundary) {
            out.push("boundary is not a homomorphism".into());
            return out;
        }
        for a in 0..n.order() {
            if !m.is_iso(m, &self.action[a]) {
                out.push(format!("{} does not act by an automorphism", n.labels[a]));
            }
            for b in 0..n.order() {
                for x in 0..m.order() {
                    if self.action[n.op(a, b)][x] != self.action[a][self.action[b][x]] {
                        out.push("action is not a left action".into());
                        return out;
                    }
                }
            }
        }
        for a in 0..n.order() {
            for x in 0..m.order() {
                let lhs = self.boundary[self.action[a][x]];
                let rhs = n.op(n.op(a, self.boundary[x]), n.inverse(a));
                if lhs != rhs {
                    out.push(format!(
                        "equivariance fails at ({}, {})",
                        n.labels[a], m.labels[x]
                    ));
                }
            }
        }
        for x in 0..m.order() {
            for y in 0..m.order() {
                if self.action[self.boundary[x]][y] != m.op(m.op(x, y), m.inverse(x)) {
                    out.push(format!(
                        "Peiffer identity fails at ({}, {})",
                        m.labels[x], m.labels[y]
                    ));
                }
            }
        }
        out
    }
}

impl TwoGroupoid {
    /// Assemble from tables; laws are not checked here (see [`validate_2gpd`]).
    pub fn from_tables(
        one: FiniteGroupoid,
        cells: Vec<TwoCell>,
        vertical: Vec<Vec<Option<usize>>>,
        horizontal: Vec<Vec<Option<usize>>>,
        identities: Vec<usize>,
        inverses: Vec<usize>,
    ) -> Result<Self> {
        let c = cells.len();
        if [&vertical, &horizontal]
            .iter()
            .any(|t| t.len() != c || t.iter().any(|r| r.len() != c))
        {
            return invalid("2-cell composition tables have the wrong shape");
        }
        if identities.len() != one.arrow_count() || inverses.len() != c {
            return invalid("identity/inverse tables have the wrong length");
        }
        if cells
            .iter()
            .any(|a| a.source >= one.arrow_count() || a.target >= one.arrow_count())
            || identities.iter().chain(&inverses).any(|&a| a >= c)
            || vertical
                .iter()
                .chain(&horizontal)
                .flatten()
                .flatten()
                .any(|&a| a >= c)
        {
            return invalid("2-cell reference out of range");
        }
        Ok(TwoGroupoid {
            one,
            cells,
            vertical,
            horizontal,
            identities,
            inverses,
        })
    }

    /// Build from composition closures on composable pairs.
    pub fn from_fn(
        one: FiniteGroupoid,
        cells: Vec<TwoCell>,
        vertical: impl Fn(usize, usize) -> usize,
        horizontal: impl Fn(usize, usize) -> usize,
        identity: impl Fn(usize) -> usize,
        inverse: impl Fn(usize) -> usize,
    ) -> Result<Self> {
        let c = cells.len();
        let v = (0..c)
            .map(|b| {
                (0..c)
                    .map(|a| (cells[a].target == cells[b].source).then(|| vertical(b, a)))
                    .collect()
            })
            .collect();
        let h = (0..c)
            .map(|b| {
                (0..c)
                    .map(|a| {
                        (one.target(cells[a].source) == one.source(cells[b].source))
                            .then(|| horizontal(b, a))
                    })
                    .collect()
            })
            .collect();
        let ids = (0..one.arrow_count()).map(identity).collect();
        let inv = (0..c).map(inverse).collect();
        Self::from_tables(one, cells, v, h, ids, inv)
    }

    /// A groupoid with identity 2-cells only.
    pub fn from_groupoid(g: &FiniteGroupoid) -> Self {
        let cells = g
            .arrows
            .iter()
            .enumerate()
            .map(|(f, a)| TwoCell {
                name: format!("1_{}", a.name),
                source: f,
                target: f,
            })
            .collect();
        Self::from_fn(
            g.clone(),
            cells,
            |b, _| b,
            |b, a| g.compose(b, a).unwrap(),
            |f| f,
            |a| a,
        )
        .expect("groupoid as 2-groupoid")
    }

    /// One object, 1-cells `N`, 2-cells `(m, n): n ⇒ ∂(m) n`.
    pub fn from_crossed_module(cm: &CrossedModule) -> Result<Self> {
        if let Some(v) = cm.violations().first() {
            return invalid(format!("not a crossed module: {v}"));
        }
        let (n, m) = (&cm.n, &cm.m);
        let one = FiniteGroupoid::from_group(n);
        let k = n.order();
        // cell (x, a) has index x * k + a
        let cells = (0..m.order())
            .flat_map(|x| (0..k).map(move |a| (x, a)))
            .map(|(x, a)| TwoCell {
                name: format!("({},{})", m.labels[x], n.labels[a]),
                source: a,
                target: n.op(cm.boundary[x], a),
            })
            .collect();
        let split = |c: usize| (c / k, c % k);
        Self::from_fn(
            one,
            cells,
            |b, a| {
                let ((x2, _), (x1, a1)) = (split(b), split(a));
                m.op(x2, x1) * k + a1
            },
            |b, a| {
                let ((x2, a2), (x1, a1)) = (split(b), split(a));
                m.op(x2, cm.action[a2][x1]) * k + n.op(a2, a1)
            },
            |a| m.identity * k + a,
            |c| {
                let (x, a) = split(c);
                m.inverse(x) * k + n.op(cm.boundary[x], a)
            },
        )
    }

    /// Product with another 2-groupoid.
    pub fn product(&self, other: &TwoGroupoid) -> Self {
        let one = self.one.product(&other.one);
        let k1 = other.one.arrow_count();
        let k2 = other.cells.len();
        let cells = self
            .cells
            .iter()
            .flat_map(|a| {
                other.cells.iter().map(move |b| TwoCell {
                    name: format!("({},{})", a.name, b.name),
                    source: a.source * k1 + b.source,
                    target: a.target * k1 + b.target,
                })
            })
            .collect();
        Self::from_fn(
            one,
            cells,
            |b, a| {
                self.vertical(b / k2, a / k2).unwrap() * k2
                    + other.vertical(b % k2, a % k2).unwrap()
            },
            |b, a| {
                self.horizontal(b / k2, a / k2).unwrap() * k2
                    + other.horizontal(b % k2, a % k2).unwrap()
            },
            |f| self.identities[f / k1] * k2 + other.identities[f % k1],
            |c| self.inverses[c / k2] * k2 + other.inverses[c % k2],
        )
        .expect("product 2-groupoid")
    }

    pub fn disjoint_union(parts: &[TwoGroupoid]) -> Self {
        let ones: Vec<FiniteGroupoid> = parts.iter().map(|p| p.one.clone()).collect();
        let one = FiniteGroupoid::disjoint_union(&ones);
        let mut cells = Vec::new();
        let mut c_off = Vec::new();
        let mut a_off = Vec::new();
        let mut a_acc = 0;
        for (k, p) in parts.iter().enumerate() {
            c_off.push(cells.len());
            a_off.push(a_acc);
            cells.extend(p.cells.iter().map(|c| TwoCell {
                name: format!("{k}/{}", c.name),
                source: c.source + a_acc,
                target: c.target + a_acc,
            }));
            a_acc += p.one.arrow_count();
        }
        let part = |c: usize| c_off.iter().rposition(|&o| o <= c).unwrap();
        let part_arrow = |f: usize| a_off.iter().rposition(|&o| o <= f).unwrap();
        Self::from_fn(
            one,
            cells,
            |b, a| {
                let k = part(b);
                c_off[k] + parts[k].vertical(b - c_off[k], a - c_off[k]).unwrap()
            },
            |b, a| {
                let k = part(b);
                c_off[k] + parts[k].horizontal(b - c_off[k], a - c_off[k]).unwrap()
            },
            |f| {
                let k = part_arrow(f);
                c_off[k] + parts[k].identities[f - a_off[k]]
            },
            |c| {
                let k = part(c);
                c_off[k] + parts[k].inverses[c - c_off[k]]
            },
        )
        .expect("disjoint union of 2-groupoids")
    }

    pub fn object_count(&self) -> usize {
        self.one.object_count()
    }

    #[inline]
    pub fn vertical(&self, b: usize, a: usize) -> Option<usize> {
        self.vertical[b][a]
    }

    #[inline]
    pub fn horizontal(&self, b: usize, a: usize) -> Option<usize> {
        self.horizontal[b][a]
    }

    /// 2-cells `f ⇒ g`.
    pub fn cells_between(&self, f: usize, g: usize) -> Vec<usize> {
        (0..self.cells.len())
            .filter(|&c| self.cells[c].source == f && self.cells[c].target == g)
            .collect()
    }

    /// Left whiskering `g * α` (identity on `g`).
    pub fn whisker_left(&self, g: usize, a: usize) -> Option<usize> {
        self.horizontal(self.identities[g], a)
    }

    /// Right whiskering `α * f`.
    pub fn whisker_right(&self, a: usize, f: usize) -> Option<usize> {
        self.horizontal(a, self.identities[f])
    }

    pub fn to_json(&self) -> TwoGpdJson {
        let arrow = |f: usize| self.one.arrows[f].name.clone();
        let cell = |c: usize| self.cells[c].name.clone();
        let table = |t: &Vec<Vec<Option<usize>>>| {
            let mut out: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
            for (b, row) in t.iter().enumerate() {
                for (a, r) in row.iter().enumerate() {
                    if let Some(r) = r {
                        out.entry(cell(b)).or_default().insert(cell(a), cell(*r));
                    }
                }
            }
            out
        };
        TwoGpdJson {
            one: self.one.to_json(),
            cells: self
                .cells
                .iter()
                .map(|c| CellJson {
                    id: c.name.clone(),
                    src: arrow(c.source),
                    tgt: arrow(c.target),
                })
                .collect(),
            vertical: table(&self.vertical),
            horizontal: table(&self.horizontal),
            identities: (0..self.one.arrow_count())
                .map(|f| (arrow(f), cell(self.identities[f])))
                .collect(),
            inverses: (0..self.cells.len())
                .map(|c| (cell(c), cell(self.inverses[c])))
                .collect(),
        }
    }

    pub fn from_json(j: &TwoGpdJson) -> Result<Self> {
        let one = FiniteGroupoid::from_json(&j.one)?;
        let cells = j
            .cells
            .iter()
            .map(|c| {
                Ok(TwoCell {
                    name: c.id.clone(),
                    source: one.arrow_id(&c.src)?,
                    target: one.arrow_id(&c.tgt)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let idx: HashMap<&str, usize> = j
            .cells
            .iter()
            .enumerate()
            .map(|(i, c)| (c.id.as_str(), i))
            .collect();
        if idx.len() != cells.len() {
            return invalid("duplicate 2-cell ids");
        }
        let look = |s: &str| {
            idx.get(s)
                .copied()
                .ok_or_else(|| Error::Invalid(format!("unknown 2-cell {s:?}")))
        };
        let n = cells.len();
        let table =
            |t: &BTreeMap<String, BTreeMap<String, String>>| -> Result<Vec<Vec<Option<usize>>>> {
                let mut out = vec![vec![None; n]; n];
                for (b, row) in t {
                    for (a, r) in row {
                        out[look(b)?][look(a)?] = Some(look(r)?);
                    }
                }
                Ok(out)
            };
        let identities =
            one.arrows
                .iter()
                .map(|a| {
                    look(j.identities.get(&a.name).ok_or_else(|| {
                        Error::Invalid(format!("no identity 2-cell on {}", a.name))
                    })?)
                })
                .collect::<Result<Vec<_>>>()?;
        let inverses = cells
            .iter()
            .map(|c| {
                look(
                    j.inverses
                        .get(&c.name)
                        .ok_or_else(|| Error::Invalid(format!("no inverse of {}", c.name)))?,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_tables(
            one,
            cells.clone(),
            table(&j.vertical)?,
            table(&j.horizontal)?,
            identities,
            inverses,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

/// Wire form of a 2-groupoid: the underlying groupoid, 2-cells and both composition tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoGpdJson {
    pub one: GroupoidJson,
    pub cells: Vec<CellJson>,
    /// `vertical[β][α] = β · α`.
    pub vertical: BTreeMap<String, BTreeMap<String, String>>,
    /// `horizontal[β][α] = β * α`.
    pub horizontal: BTreeMap<String, BTreeMap<String, String>>,
    pub identities: BTreeMap<String, String>,
    pub inverses: BTreeMap<String, String>,
}

impl Serialize for TwoGroupoid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TwoGroupoid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::from_json(&TwoGpdJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Every failed 2-groupoid law, named.
pub fn validate_2gpd(k: &TwoGroupoid) -> Vec<String> {
    let mut out: Vec<String> = k
        .one
        .violations()
        .into_iter()
        .map(|v| format!("1-cells: {v}"))
        .collect();
    if !out.is_empty() {
        return out;
    }
    let one = &k.one;
    let c = k.cells.len();
    let name = |a: usize| k.cells[a].name.as_str();
    for b in 0..c {
        for a in 0..c {
            let (ca, cb) = (&k.cells[a], &k.cells[b]);
            match (ca.target == cb.source, k.vertical[b][a]) {
                (true, None) => out.push(format!("vertical {}·{} undefined", name(b), name(a))),
                (false, Some(_)) => out.push(format!(
                    "vertical {}·{} defined on a non-composable pair",
                    name(b),
                    name(a)
                )),
                (true, Some(r))
                    if k.cells[r].source != ca.source || k.cells[r].target != cb.target =>
                {
                    out.push(format!(
                        "vertical {}·{} has the wrong boundary",
                        name(b),
                        name(a)
                    ))
                }
                _ => {}
            }
            let composable = one.target(ca.source) == one.source(cb.source);
            match (composable, k.horizontal[b][a]) {
                (true, None) => out.push(format!("horizontal {}*{} undefined", name(b), name(a))),
                (false, Some(_)) => out.push(format!(
                    "horizontal {}*{} defined on a non-composable pair",
                    name(b),
                    name(a)
                )),
                (true, Some(r)) => {
                    let s = one.compose(cb.source, ca.source);
                    let t = one.compose(cb.target, ca.target);
                    if Some(k.cells[r].source) != s || Some(k.cells[r].target) != t {
                        out.push(format!(
                            "horizontal {}*{} has the wrong boundary",
                            name(b),
                            name(a)
                        ));
                    }
                }
                _ => {}
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for f in 0..one.arrow_count() {
        let e = k.identities[f];
        if k.cells[e].source != f || k.cells[e].target != f {
            out.push(format!(
                "identity 2-cell of {} is not an endo-cell",
                one.arrows[f].name
            ));
            return out;
        }
    }
    for a in 0..c {
        let (s, t) = (k.cells[a].source, k.cells[a].target);
        if k.vertical[a][k.identities[s]] != Some(a) || k.vertical[k.identities[t]][a] != Some(a) {
            out.push(format!("vertical identity law fails at {}", name(a)));
        }
        let inv = k.inverses[a];
        if k.vertical[inv][a] != Some(k.identities[s])
            || k.vertical[a][inv] != Some(k.identities[t])
        {
            out.push(format!("vertical inverse law fails at {}", name(a)));
        }
        let x = one.source(s);
        let y = one.target(s);
        let (ix, iy) = (k.identities[one.identity(x)], k.identities[one.identity(y)]);
        if k.horizontal[a][ix] != Some(a) || k.horizontal[iy][a] != Some(a) {
            out.push(format!("horizontal identity law fails at {}", name(a)));
        }
    }
    for f in 0..one.arrow_count() {
        for g in 0..one.arrow_count() {
            if let Some(gf) = one.compose(g, f) {
                if k.horizontal[k.identities[g]][k.identities[f]] != Some(k.identities[gf]) {
                    out.push(format!(
                        "identity 2-cells are not horizontally functorial at ({}, {})",
                        one.arrows[g].name, one.arrows[f].name
                    ));
                }
            }
        }
    }
    'v: for a in 0..c {
        for b in 0..c {
            let Some(ba) = k.vertical[b][a] else { continue };
            for d in 0..c {
                let Some(db) = k.vertical[d][b] else { continue };
                if k.vertical[d][ba] != k.vertical[db][a] {
                    out.push(format!(
                        "vertical associativity fails at ({}, {}, {})",
                        name(d),
                        name(b),
                        name(a)
                    ));
                    break 'v;
                }
            }
        }
    }
    'h: for a in 0..c {
        for b in 0..c {
            let Some(ba) = k.horizontal[b][a] else {
                continue;
            };
            for d in 0..c {
                let Some(db) = k.horizontal[d][b] else {
                    continue;
                };
                if k.horizontal[d][ba] != k.horizontal[db][a] {
                    out.push(format!(
                        "horizontal associativity fails at ({}, {}, {})",
                        name(d),
                        name(b),
                        name(a)
                    ));
                    break 'h;
                }
            }
        }
    }
    // interchange: (β'·β) * (α'·α) = (β'*α')·(β*α)
    'i: for a in 0..c {
        for a2 in 0..c {
            let Some(va) = k.vertical[a2][a] else {
                continue;
            };
            for b in 0..c {
                let Some(ha) = k.horizontal[b][a] else {
                    continue;
                };
                for b2 in 0..c {
                    let Some(vb) = k.vertical[b2][b] else {
                        continue;
                    };
                    let lhs = k.horizontal[vb][va];
                    let rhs = k.horizontal[b2][a2].and_then(|h2| k.vertical[h2][ha]);
                    if lhs != rhs {
                        out.push(format!(
                            "interchange fails at ({}, {}, {}, {})",
                            name(b2),
                            name(b),
                            name(a2),
                            name(a)
                        ));
                        break 'i;
                    }
                }
            }
        }
    }
    out
}

pub fn pi0_2gpd(k: &TwoGroupoid) -> Components {
    pi0_groupoid(&k.one)
}

/// Loops at `x` modulo 2-cells, under composition.
pub fn pi1_2gpd(k: &TwoGroupoid, x: usize) -> Result<FiniteGroup> {
    check_object(k, x)?;
    Ok(pi1_classes(k, x).0)
}

/// `π_1` together with the loops at `x` and the class of each loop.
pub(crate) fn pi1_classes(k: &TwoGroupoid, x: usize) -> (FiniteGroup, Vec<usize>, Vec<usize>) {
    let (g, elems) = k.one.vertex_group(x);
    let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let id = k.one.identity(x);
    let normal: Vec<usize> = elems
        .iter()
        .filter(|&&f| !k.cells_between(id, f).is_empty())
        .map(|f| pos[f])
        .collect();
    let (q, class) = g.quotient(&normal);
    (q, elems, class)
}

/// 2-cells `id_x ⇒ id_x` under vertical composition.
pub fn pi2_2gpd(k: &TwoGroupoid, x: usize) -> Result<FiniteGroup> {
    check_object(k, x)?;
    let id = k.one.identity(x);
    let elems = k.cells_between(id, id);
    let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mul = elems
        .iter()
        .map(|&b| {
            elems
                .iter()
                .map(|&a| pos[&k.vertical(b, a).unwrap()])
                .collect()
        })
        .collect();
    FiniteGroup::new(
        elems.iter().map(|&c| k.cells[c].name.clone()).collect(),
        mul,
        pos[&k.identities[id]],
    )
}

fn check_object(k: &TwoGroupoid, x: usize) -> Result<()> {
    if x >= k.object_count() {
        return Err(Error::UnknownId {
            level: 0,
            id: format!("object {x}"),
        });
    }
    Ok(())
}

/// Standard fixtures used across tests, examples and the CLI.
pub mod fixtures {
    use super::*;

    /// One object, one 1-cell, 2-cells `ℤ/n`.
    pub fn cyclic_two_cells(n: usize) -> TwoGroupoid {
        TwoGroupoid::from_crossed_module(&CrossedModule::second_only(FiniteGroup::cyclic(n)))
            .unwrap()
    }

    /// 1-cells `ℤ/2` acting on 2-cells `ℤ/3` by inversion.
    pub fn z2_on_z3() -> TwoGroupoid {
        let z3 = FiniteGroup::cyclic(3);
        let cm = CrossedModule::with_action(FiniteGroup::cyclic(2), z3.clone(), |a, x| {
            if a == 0 {
                x
            } else {
                z3.inverse(x)
            }
        });
        TwoGroupoid::from_crossed_module(&cm).unwrap()
    }

    /// `ℤ/4 → ℤ/2` reduction mod 2 with trivial action: `π_1 = 0`, `π_2 = ℤ/2`.
    pub fn z4_onto_z2() -> TwoGroupoid {
        let cm = CrossedModule {
            n: FiniteGroup::cyclic(2),
            m: FiniteGroup::cyclic(4),
            boundary: vec![0, 1, 0, 1],
            action: vec![vec![0, 1, 2, 3]; 2],
        };
        TwoGroupoid::from_crossed_module(&cm).unwrap()
    }

    /// The identity crossed module on `ℤ/2` (contractible).
    pub fn identity_z2() -> TwoGroupoid {
        let cm = CrossedModule {
            n: FiniteGroup::cyclic(2),
            m: FiniteGroup::cyclic(2),
            boundary: vec![0, 1],
            action: vec![vec![0, 1]; 2],
        };
        TwoGroupoid::from_crossed_module(&cm).unwrap()
    }

    pub fn interval() -> TwoGroupoid {
        TwoGroupoid::from_groupoid(&FiniteGroupoid::interval())
    }

    pub fn point() -> TwoGroupoid {
        TwoGroupoid::from_groupoid(&FiniteGroupoid::from_group(&FiniteGroup::trivial()))
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn fixtures_validate() {
        for k in [
            cyclic_two_cells(3),
            z2_on_z3(),
            z4_onto_z2(),
            identity_z2(),
            interval(),
            interval().product(&cyclic_two_cells(2)),
            TwoGroupoid::disjoint_union(&[point(), cyclic_two_cells(2)]),
            TwoGroupoid::from_groupoid(&FiniteGroupoid::from_group(&FiniteGroup::symmetric3())),
        ] {
            assert!(validate_2gpd(&k).is_empty(), "{:?}", validate_2gpd(&k));
        }
    }

    #[test]
    fn planted_interchange_violation_is_named() {
        let mut k = z2_on_z3();
        // redirect one horizontal composite to another cell with the same boundary
        let (b, a) = (2 + 1, 2 + 1);
        let r = k.horizontal[b][a].unwrap();
        let same: Vec<usize> = k.cells_between(k.cells[r].source, k.cells[r].target);
        let other = *same.iter().find(|&&c| c != r).unwrap();
        k.horizontal[b][a] = Some(other);
        let report = validate_2gpd(&k);
        assert!(!report.is_empty());
        assert!(
            report.iter().any(|v| v.contains("interchange")
                || v.contains("associativity")
                || v.contains("identity")),
            "{report:?}"
        );
    }

    #[test]
    fn homotopy_groups() {
        assert_eq!(pi2_2gpd(&cyclic_two_cells(3), 0).unwrap().order(), 3);
        assert!(pi1_2gpd(&interval(), 0).unwrap().is_trivial());
        let z2 = TwoGroupoid::from_groupoid(&FiniteGroupoid::from_group(&FiniteGroup::cyclic(2)));
        assert_eq!(pi1_2gpd(&z2, 0).unwrap().order(), 2);
        assert!(pi1_2gpd(&z4_onto_z2(), 0).unwrap().is_trivial());
        assert_eq!(pi2_2gpd(&z4_onto_z2(), 0).unwrap().order(), 2);
        assert!(pi2_2gpd(&identity_z2(), 0).unwrap().is_trivial());
        assert_eq!(
            pi0_2gpd(&TwoGroupoid::disjoint_union(&[point(), point()])).count,
            2
        );
    }

    #[test]
    fn json_round_trip() {
        let k = z2_on_z3();
        let s = serde_json::to_string(&k).unwrap();
        let back: TwoGroupoid = serde_json::from_str(&s).unwrap();
        assert_eq!(k, back);
    }
}
