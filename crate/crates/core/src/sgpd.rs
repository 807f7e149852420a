//! Simplicial groupoids with a constant object set and finite levels, their
//! hom complexes, path components and Moore-complex homotopy groups.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::group::FiniteGroup;
use crate::groupoid::{pi0_groupoid, FiniteGroupoid, GroupoidJson};
use crate::sset::{validate_sset, Components, TruncatedSimplicialSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialGroupoid {
    objects: Vec<String>,
    levels: Vec<FiniteGroupoid>,
    /// `faces[n][i][a]` for arrows `a` of level `n ≥ 1`.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degeneracies[n][i][a]` for arrows `a` of level `n < depth`.
    degeneracies: Vec<Vec<Vec<usize>>>,
}

impl SimplicialGroupoid {
    /// Assemble from tables; shapes are checked, laws are not (see
    /// [`SimplicialGroupoid::violations`]).
    pub fn from_tables(
        levels: Vec<FiniteGroupoid>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let Some(first) = levels.first() else {
            return invalid("a simplicial groupoid needs level 0");
        };
        let objects = first.objects.clone();
        if levels.iter().any(|l| l.objects != objects) {
            return invalid("every level must share the object set");
        }
        let depth = levels.len() - 1;
        if faces.len() != depth + 1 || degeneracies.len() != depth + 1 {
            return invalid("one face/degeneracy entry per level required");
        }
        for n in 0..=depth {
            let size = levels[n].arrow_count();
            let nf = if n == 0 { 0 } else { n + 1 };
            if faces[n].len() != nf
                || faces[n]
                    .iter()
                    .any(|t| t.len() != size || t.iter().any(|&b| b >= levels[n - 1].arrow_count()))
            {
                return invalid(format!("face tables at level {n} are malformed"));
            }
            let nd = if n < depth { n + 1 } else { 0 };
            if degeneracies[n].len() != nd
                || degeneracies[n]
                    .iter()
                    .any(|t| t.len() != size || t.iter().any(|&b| b >= levels[n + 1].arrow_count()))
            {
                return invalid(format!("degeneracy tables at level {n} are malformed"));
            }
        }
        Ok(SimplicialGroupoid {
            objects,
            levels,
            faces,
            degeneracies,
        })
    }

    /// Build from operator closures on arrow ids.
    pub fn from_fn(
        levels: Vec<FiniteGroupoid>,
        face: impl Fn(usize, usize, usize) -> usize,
        degeneracy: impl Fn(usize, usize, usize) -> usize,
    ) -> Result<Self> {
        let depth = levels.len().saturating_sub(1);
        let faces = (0..=depth)
            .map(|n| {
                if n == 0 {
                    Vec::new()
                } else {
                    (0..=n)
                        .map(|i| {
                            (0..levels[n].arrow_count())
                                .map(|a| face(n, i, a))
                                .collect()
                        })
                        .collect()
                }
            })
            .collect();
        let degeneracies = (0..=depth)
            .map(|n| {
                if n == depth {
                    Vec::new()
                } else {
                    (0..=n)
                        .map(|i| {
                            (0..levels[n].arrow_count())
                                .map(|a| degeneracy(n, i, a))
                                .collect()
                        })
                        .collect()
                }
            })
            .collect();
        Self::from_tables(levels, faces, degeneracies)
    }

    /// The same groupoid in every level, all operators the identity.
    pub fn constant(g: &FiniteGroupoid, depth: usize) -> Self {
        Self::from_fn(vec![g.clone(); depth + 1], |_, _, a| a, |_, _, a| a)
            .expect("constant simplicial groupoid")
    }

    /// Constant simplicial group.
    pub fn constant_group(g: &FiniteGroup, depth: usize) -> Self {
        Self::constant(&FiniteGroupoid::from_group(g), depth)
    }

    pub fn disjoint_union(parts: &[SimplicialGroupoid]) -> Result<Self> {
        let depth = parts
            .first()
            .map(|p| p.depth())
            .ok_or_else(|| Error::Invalid("empty disjoint union".into()))?;
        if parts.iter().any(|p| p.depth() != depth) {
            return invalid("disjoint union needs equal depths");
        }
        let levels: Vec<FiniteGroupoid> = (0..=depth)
            .map(|n| {
                let ls: Vec<FiniteGroupoid> = parts.iter().map(|p| p.levels[n].clone()).collect();
                FiniteGroupoid::disjoint_union(&ls)
            })
            .collect();
        let offsets: Vec<Vec<usize>> = (0..=depth)
            .map(|n| {
                parts
                    .iter()
                    .scan(0, |acc, p| {
                        let o = *acc;
                        *acc += p.levels[n].arrow_count();
                        Some(o)
                    })
                    .collect()
            })
            .collect();
        let locate = |n: usize, a: usize| -> (usize, usize) {
            let k = offsets[n].iter().rposition(|&o| o <= a).unwrap();
            (k, a - offsets[n][k])
        };
        Self::from_fn(
            levels,
            |n, i, a| {
                let (k, b) = locate(n, a);
                offsets[n - 1][k] + parts[k].face(n, i, b)
            },
            |n, i, a| {
                let (k, b) = locate(n, a);
                offsets[n + 1][k] + parts[k].degeneracy(n, i, b)
            },
        )
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn level(&self, n: usize) -> &FiniteGroupoid {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[FiniteGroupoid] {
        &self.levels
    }

    #[inline]
    pub fn face(&self, n: usize, i: usize, a: usize) -> usize {
        self.faces[n][i][a]
    }

    #[inline]
    pub fn degeneracy(&self, n: usize, i: usize, a: usize) -> usize {
        self.degeneracies[n][i][a]
    }

    /// Keep levels `0..=depth`.
    pub fn truncate(&self, depth: usize) -> Result<Self> {
        if depth > self.depth() {
            return Err(Error::DepthTooSmall {
                have: self.depth(),
                need: depth,
                context: "truncating a simplicial groupoid".into(),
            });
        }
        let mut degeneracies = self.degeneracies[..=depth].to_vec();
        degeneracies[depth].clear();
        Self::from_tables(
            self.levels[..=depth].to_vec(),
            self.faces[..=depth].to_vec(),
            degeneracies,
        )
    }

    /// The arrows with their operators, as a simplicial set.
    pub fn arrow_sset(&self) -> Result<TruncatedSimplicialSet> {
        TruncatedSimplicialSet::from_tables(
            self.depth(),
            self.levels
                .iter()
                .map(|l| l.arrows.iter().map(|a| a.name.clone()).collect())
                .collect(),
            self.faces.clone(),
            self.degeneracies.clone(),
        )
    }

    /// Every failed law: levelwise groupoid laws, operators fixing objects and
    /// preserving composition, and the simplicial identities.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (n, l) in self.levels.iter().enumerate() {
            out.extend(
                l.violations()
                    .into_iter()
                    .map(|v| format!("level {n}: {v}")),
            );
        }
        if !out.is_empty() {
            return out;
        }
        let depth = self.depth();
        let mut check_functor = |n: usize, m: usize, table: &[usize], what: String| {
            let (src, tgt) = (&self.levels[n], &self.levels[m]);
            for a in 0..src.arrow_count() {
                let b = table[a];
                if tgt.source(b) != src.source(a) || tgt.target(b) != src.target(a) {
                    out.push(format!(
                        "{what} moves the endpoints of {}",
                        src.arrows[a].name
                    ));
                    return;
                }
            }
            for f in 0..src.arrow_count() {
                for g in 0..src.arrow_count() {
                    if let Some(h) = src.compose(f, g) {
                        if tgt.compose(table[f], table[g]) != Some(table[h]) {
                            out.push(format!(
                                "{what} does not preserve {}∘{}",
                                src.arrows[f].name, src.arrows[g].name
                            ));
                            return;
                        }
                    }
                }
            }
        };
        for n in 1..=depth {
            for i in 0..=n {
                check_functor(n, n - 1, &self.faces[n][i], format!("d_{i} at level {n}"));
            }
        }
        for n in 0..depth {
            for i in 0..=n {
                check_functor(
                    n,
                    n + 1,
                    &self.degeneracies[n][i],
                    format!("s_{i} at level {n}"),
                );
            }
        }
        match self.arrow_sset() {
            Ok(s) => out.extend(validate_sset(&s).into_iter().map(|v| v.to_string())),
            Err(e) => out.push(e.to_string()),
        }
        out
    }

    /// `A(x, y)`: arrows `x → y` in every level with the restricted operators.
    pub fn hom_complex(&self, x: usize, y: usize) -> Result<TruncatedSimplicialSet> {
        if x >= self.objects.len() || y >= self.objects.len() {
            return Err(Error::UnknownId {
                level: 0,
                id: format!("object {}", x.max(y)),
            });
        }
        let levels: Vec<Vec<usize>> = self.levels.iter().map(|l| l.hom(x, y)).collect();
        TruncatedSimplicialSet::build(
            self.depth(),
            levels
                .into_iter()
                .map(|l| l.into_iter().collect())
                .collect(),
            |n, &a| self.levels[n].arrows[a].name.clone(),
            |n, i, &a| self.face(n, i, a),
            |n, i, &a| self.degeneracy(n, i, a),
        )
    }

    pub fn to_json(&self) -> SGpdJson {
        let name = |n: usize, a: usize| self.levels[n].arrows[a].name.clone();
        let table = |tables: &[Vec<Vec<usize>>], shift: isize| {
            let mut out = BTreeMap::new();
            for (n, ops) in tables.iter().enumerate() {
                for (i, t) in ops.iter().enumerate() {
                    let m = (n as isize + shift) as usize;
                    out.insert(
                        format!("{n},{i}"),
                        t.iter()
                            .enumerate()
                            .map(|(a, &b)| (name(n, a), name(m, b)))
                            .collect(),
                    );
                }
            }
            out
        };
        SGpdJson {
            objects: self.objects.clone(),
            levels: self.levels.iter().map(FiniteGroupoid::to_json).collect(),
            faces: table(&self.faces, -1),
            degeneracies: table(&self.degeneracies, 1),
        }
    }

    pub fn from_json(j: &SGpdJson) -> Result<Self> {
        let levels = j
            .levels
            .iter()
            .map(FiniteGroupoid::from_json)
            .collect::<Result<Vec<_>>>()?;
        if levels.first().is_some_and(|l| l.objects != j.objects) {
            return invalid("level objects differ from the shared object list");
        }
        let depth = levels.len().saturating_sub(1);
        let lookup = |n: usize,
                      m: usize,
                      key: &str,
                      tables: &BTreeMap<String, BTreeMap<String, String>>|
         -> Result<Vec<usize>> {
            let t = tables
                .get(key)
                .ok_or_else(|| Error::Invalid(format!("missing operator {key}")))?;
            levels[n]
                .arrows
                .iter()
                .map(|a| {
                    let b = t.get(&a.name).ok_or_else(|| {
                        Error::Invalid(format!("operator {key} undefined on {}", a.name))
                    })?;
                    levels[m].arrow_id(b)
                })
                .collect()
        };
        let mut faces = vec![Vec::new(); depth + 1];
        let mut degeneracies = vec![Vec::new(); depth + 1];
        for n in 0..=depth {
            if n > 0 {
                for i in 0..=n {
                    faces[n].push(lookup(n, n - 1, &format!("{n},{i}"), &j.faces)?);
                }
            }
            if n < depth {
                for i in 0..=n {
                    degeneracies[n].push(lookup(n, n + 1, &format!("{n},{i}"), &j.degeneracies)?);
                }
            }
        }
        Self::from_tables(levels, faces, degeneracies)
    }
}

/// Wire form: shared objects, one groupoid per level, operator maps keyed `"n,i"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SGpdJson {
    pub objects: Vec<String>,
    pub levels: Vec<GroupoidJson>,
    pub faces: BTreeMap<String, BTreeMap<String, String>>,
    pub degeneracies: BTreeMap<String, BTreeMap<String, String>>,
}

impl Serialize for SimplicialGroupoid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialGroupoid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::from_json(&SGpdJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Path components of a simplicial groupoid: those of its level 0.
pub fn pi0_sgpd(a: &SimplicialGroupoid) -> Components {
    pi0_groupoid(a.level(0))
}

/// A homotopy group of a vertex simplicial group, with the class of every cycle.
#[derive(Debug, Clone)]
pub struct MooreHomotopy {
    pub n: usize,
    pub group: FiniteGroup,
    /// Arrow id at level `n` → class, for every Moore cycle.
    pub class_of: HashMap<usize, usize>,
    /// One cycle per class.
    pub representatives: Vec<usize>,
}

/// `π_n A(x, x)` as `(N_n ∩ ker d_0) / d_0(N_{n+1})`, where `N_n` is the
/// intersection of the kernels of `d_1, …, d_n` on the vertex group at `x`.
pub fn moore_pi_n(a: &SimplicialGroupoid, x: usize, n: usize) -> Result<MooreHomotopy> {
    if a.depth() < n + 1 {
        return Err(Error::DepthTooSmall {
            have: a.depth(),
            need: n + 1,
            context: format!("Moore π_{n} needs level {}", n + 1),
        });
    }
    if x >= a.objects().len() {
        return Err(Error::UnknownId {
            level: 0,
            id: format!("object {x}"),
        });
    }
    let id = |m: usize| a.level(m).identity(x);
    let normalized = |m: usize| -> Vec<usize> {
        a.level(m)
            .hom(x, x)
            .into_iter()
            .filter(|&g| (1..=m).all(|i| a.face(m, i, g) == id(m - 1)))
            .collect()
    };
    let (group, elems) = a.level(n).vertex_group(x);
    let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let cycles: Vec<usize> = if n == 0 {
        elems.clone()
    } else {
        normalized(n)
            .into_iter()
            .filter(|&g| a.face(n, 0, g) == id(n - 1))
            .collect()
    };
    let mut boundaries: Vec<usize> = normalized(n + 1)
        .into_iter()
        .map(|g| a.face(n + 1, 0, g))
        .collect();
    boundaries.sort_unstable();
    boundaries.dedup();
    if let Some(&b) = boundaries.iter().find(|b| !cycles.contains(b)) {
        return invalid(format!(
            "boundary {} is not a cycle; operators are inconsistent",
            a.level(n).arrows[b].name
        ));
    }
    let sub: Vec<usize> = cycles.iter().map(|g| pos[g]).collect();
    let normal: Vec<usize> = boundaries.iter().map(|g| pos[g]).collect();
    let (mut quotient, class) = group.quotient_of_subgroup(&sub, &normal);
    let mut representatives = vec![usize::MAX; quotient.order()];
    let mut class_of = HashMap::new();
    for &g in &cycles {
        let c = class[pos[&g]];
        class_of.insert(g, c);
        if representatives[c] == usize::MAX {
            representatives[c] = g;
        }
    }
    quotient.labels = representatives
        .iter()
        .map(|&g| format!("[{}]", a.level(n).arrows[g].name))
        .collect();
    Ok(MooreHomotopy {
        n,
        group: quotient,
        class_of,
        representatives,
    })
}

/// A map of simplicial groupoids: an object function and arrow functions per level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SGpdMap {
    pub source: SimplicialGroupoid,
    pub target: SimplicialGroupoid,
    pub objects: Vec<usize>,
    pub levels: Vec<Vec<usize>>,
}

impl SGpdMap {
    pub fn new(
        source: SimplicialGroupoid,
        target: SimplicialGroupoid,
        objects: Vec<usize>,
        levels: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let m = SGpdMap {
            source,
            target,
            objects,
            levels,
        };
        match m.violations().first() {
            None => Ok(m),
            Some(v) => invalid(format!("not a map of simplicial groupoids: {v}")),
        }
    }

    pub fn identity(a: &SimplicialGroupoid) -> Self {
        SGpdMap {
            source: a.clone(),
            target: a.clone(),
            objects: (0..a.objects().len()).collect(),
            levels: a
                .levels()
                .iter()
                .map(|l| (0..l.arrow_count()).collect())
                .collect(),
        }
    }

    pub fn violations(&self) -> Vec<String> {
        let (s, t) = (&self.source, &self.target);
        if s.depth() != t.depth() || self.levels.len() != s.depth() + 1 {
            return vec!["depth mismatch".into()];
        }
        if self.objects.len() != s.objects().len()
            || self.objects.iter().any(|&o| o >= t.objects().len())
        {
            return vec!["object function is not total".into()];
        }
        let mut out = Vec::new();
        for n in 0..=s.depth() {
            let (ls, lt) = (s.level(n), t.level(n));
            let f = &self.levels[n];
            if f.len() != ls.arrow_count() || f.iter().any(|&b| b >= lt.arrow_count()) {
                return vec![format!("level {n} is not a total function")];
            }
            for a in 0..ls.arrow_count() {
                if lt.source(f[a]) != self.objects[ls.source(a)]
                    || lt.target(f[a]) != self.objects[ls.target(a)]
                {
                    out.push(format!(
                        "level {n}: {} lands on the wrong endpoints",
                        ls.arrows[a].name
                    ));
                }
                if n > 0 {
                    for i in 0..=n {
                        if self.levels[n - 1][s.face(n, i, a)] != t.face(n, i, f[a]) {
                            out.push(format!("d_{i} fails at {}", ls.arrows[a].name));
                        }
                    }
                }
                if n < s.depth() {
                    for i in 0..=n {
                        if self.levels[n + 1][s.degeneracy(n, i, a)] != t.degeneracy(n, i, f[a]) {
                            out.push(format!("s_{i} fails at {}", ls.arrows[a].name));
                        }
                    }
                }
            }
            for g in 0..ls.arrow_count() {
                for h in 0..ls.arrow_count() {
                    if let Some(c) = ls.compose(g, h) {
                        if lt.compose(f[g], f[h]) != Some(f[c]) {
                            out.push(format!("level {n}: composition not preserved"));
                        }
                    }
                }
            }
        }
        out
    }
}

/// A finite chain complex of finite abelian groups `C_k = ⊕ ℤ/m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainFixture {
    /// `moduli[k]` lists the cyclic factors of `C_k` (each at least 2).
    pub moduli: Vec<Vec<u64>>,
    /// `boundaries[k]` is the matrix of `∂: C_k → C_{k-1}` (rows index the
    /// target factors); `boundaries[0]` is empty.
    pub boundaries: Vec<Vec<Vec<i64>>>,
}

impl ChainFixture {
    /// A single group in one degree, zero elsewhere.
    pub fn concentrated(moduli: Vec<u64>, degree: usize) -> Self {
        let mut m = vec![Vec::new(); degree + 1];
        m[degree] = moduli;
        let boundaries = (0..=degree)
            .map(|k| {
                if k == 0 {
                    Vec::new()
                } else {
                    vec![vec![0; m[k].len()]; m[k - 1].len()]
                }
            })
            .collect();
        ChainFixture {
            moduli: m,
            boundaries,
        }
    }

    pub fn top(&self) -> usize {
        self.moduli.len().saturating_sub(1)
    }

    pub fn size(&self, k: usize) -> u64 {
        self.moduli.get(k).map_or(1, |m| m.iter().product())
    }

    pub fn validate(&self) -> Result<()> {
        if self.boundaries.len() != self.moduli.len() {
            return invalid("one boundary matrix per degree required");
        }
        if self.moduli.iter().flatten().any(|&m| m < 2) {
            return invalid("cyclic factors must have order at least 2");
        }
        for k in 1..self.moduli.len() {
            let d = &self.boundaries[k];
            let (rows, cols) = (self.moduli[k - 1].len(), self.moduli[k].len());
            if d.len() != rows || d.iter().any(|r| r.len() != cols) {
                return invalid(format!("boundary {k} has the wrong shape"));
            }
            for j in 0..cols {
                for r in 0..rows {
                    let m = self.moduli[k - 1][r] as i128;
                    if (self.moduli[k][j] as i128 * d[r][j] as i128).rem_euclid(m) != 0 {
                        return invalid(format!("boundary {k} is not well defined on factor {j}"));
                    }
                }
            }
            if k >= 2 {
                for j in 0..cols {
                    for r in 0..self.moduli[k - 2].len() {
                        let s: i128 = (0..rows)
                            .map(|q| self.boundaries[k - 1][r][q] as i128 * d[q][j] as i128)
                            .sum();
                        if s.rem_euclid(self.moduli[k - 2][r] as i128) != 0 {
                            return invalid(format!("∂∂ ≠ 0 at degree {k}"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `∂` on coordinates.
    pub fn boundary(&self, k: usize, c: &[u64]) -> Vec<u64> {
        if k == 0 || k > self.top() {
            return Vec::new();
        }
        self.moduli[k - 1]
            .iter()
            .enumerate()
            .map(|(r, &m)| {
                let s: i128 = c
                    .iter()
                    .enumerate()
                    .map(|(j, &v)| self.boundaries[k][r][j] as i128 * v as i128)
                    .sum();
                s.rem_euclid(m as i128) as u64
            })
            .collect()
    }

    fn decode(&self, k: usize, mut x: u64) -> Vec<u64> {
        let m = self.moduli.get(k).map(Vec::as_slice).unwrap_or(&[]);
        m.iter()
            .map(|&q| {
                let v = x % q;
                x /= q;
                v
            })
            .collect()
    }

    fn encode(&self, k: usize, c: &[u64]) -> u64 {
        let m = self.moduli.get(k).map(Vec::as_slice).unwrap_or(&[]);
        m.iter().zip(c).rev().fold(0, |acc, (&q, &v)| acc * q + v)
    }
}

/// Surjections `[n] → [k]` as nondecreasing sequences hitting every value.
fn surjections(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize];
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n + 1 {
            if *cur.last().unwrap() == k {
                out.push(cur.clone());
            }
            return;
        }
        let last = *cur.last().unwrap();
        for next in [last, last + 1] {
            if next <= k {
                cur.push(next);
                rec(n, k, cur, out);
                cur.pop();
            }
        }
    }
    if k <= n {
        rec(n, k, &mut cur, &mut out);
    }
    out
}

/// The simplicial abelian group attached to a chain complex: level `n` is
/// `⊕ C_k` over surjections `[n] ↠ [k]`, with operators acting through
/// epi-mono factorization (the summand survives a face when the composite
/// stays surjective, maps by `∂` when it misses `0` only, and dies otherwise).
pub fn dold_kan(c: &ChainFixture, depth: usize) -> Result<SimplicialGroupoid> {
    c.validate()?;
    // summands[n] = (k, surjection) with C_k nontrivial
    let summands: Vec<Vec<(usize, Vec<usize>)>> = (0..=depth)
        .map(|n| {
            (0..=n.min(c.top()))
                .filter(|&k| c.size(k) > 1)
                .flat_map(|k| surjections(n, k).into_iter().map(move |s| (k, s)))
                .collect()
        })
        .collect();
    let sizes: Vec<u64> = summands
        .iter()
        .map(|l| l.iter().map(|(k, _)| c.size(*k)).product())
        .collect();
    if let Some(n) = sizes.iter().position(|&s| s > 4096) {
        return invalid(format!("level {n} would have {} elements", sizes[n]));
    }
    // element ↔ one coordinate per summand
    let decode = |n: usize, mut x: usize| -> Vec<u64> {
        summands[n]
            .iter()
            .map(|(k, _)| {
                let q = c.size(*k) as usize;
                let v = x % q;
                x /= q;
                v as u64
            })
            .collect()
    };
    let encode = |n: usize, v: &[u64]| -> usize {
        summands[n]
            .iter()
            .zip(v)
            .rev()
            .fold(0usize, |acc, ((k, _), &x)| {
                acc * c.size(*k) as usize + x as usize
            })
    };
    let index: Vec<HashMap<(usize, Vec<usize>), usize>> = summands
        .iter()
        .map(|l| l.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect())
        .collect();
    let add = |k: usize, a: u64, b: u64| -> u64 {
        let (x, y) = (c.decode(k, a), c.decode(k, b));
        let s: Vec<u64> = x
            .iter()
            .zip(&y)
            .zip(&c.moduli[k])
            .map(|((p, q), m)| (p + q) % m)
            .collect();
        c.encode(k, &s)
    };
    let levels: Vec<FiniteGroupoid> = (0..=depth)
        .map(|n| {
            let size = sizes[n] as usize;
            let arrows = (0..size)
                .map(|x| crate::groupoid::Arrow {
                    name: format!("{:?}", decode(n, x)).replace(' ', ""),
                    source: 0,
                    target: 0,
                })
                .collect();
            FiniteGroupoid::from_fn(vec!["*".into()], arrows, |x, y| {
                let (a, b) = (decode(n, x), decode(n, y));
                let s: Vec<u64> = summands[n]
                    .iter()
                    .enumerate()
                    .map(|(p, (k, _))| add(*k, a[p], b[p]))
                    .collect();
                encode(n, &s)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    // image of a summand under precomposition with a map [m] → [n] given as
    // the reindexed sequence
    let transport =
        |m: usize, v: &[u64], n: usize, reindex: &dyn Fn(&[usize]) -> Vec<usize>| -> usize {
            let mut out = vec![0u64; summands[m].len()];
            for (p, (k, s)) in summands[n].iter().enumerate() {
                if v[p] == 0 {
                    continue;
                }
                let t = reindex(s);
                let mut present = vec![false; k + 1];
                t.iter().for_each(|&j| present[j] = true);
                let missing: Vec<usize> = (0..=*k).filter(|&j| !present[j]).collect();
                let (target_k, seq, val) = match missing.as_slice() {
                    [] => (*k, t, v[p]),
                    [0] => {
                        let cv = c.boundary(*k, &c.decode(*k, v[p]));
                        let seq = t.iter().map(|&j| j - 1).collect();
                        (*k - 1, seq, c.encode(*k - 1, &cv))
                    }
                    _ => continue,
                };
                if c.size(target_k) <= 1 || val == 0 {
                    continue;
                }
                let q = index[m][&(target_k, seq)];
                out[q] = add(target_k, out[q], val);
            }
            encode(m, &out)
        };
    SimplicialGroupoid::from_fn(
        levels,
        |n, i, x| {
            let v = decode(n, x);
            transport(n - 1, &v, n, &|s: &[usize]| {
                s.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &y)| y)
                    .collect()
            })
        },
        |n, i, x| {
            let v = decode(n, x);
            transport(n + 1, &v, n, &|s: &[usize]| {
                let mut t = s.to_vec();
                t.insert(i, s[i]);
                t
            })
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_groups() {
        let a = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2), 3);
        assert!(a.violations().is_empty());
        assert_eq!(moore_pi_n(&a, 0, 0).unwrap().group.order(), 2);
        assert!(moore_pi_n(&a, 0, 1).unwrap().group.is_trivial());
        assert!(matches!(
            moore_pi_n(&a, 0, 3),
            Err(Error::DepthTooSmall { .. })
        ));
    }

    #[test]
    fn hom_complexes() {
        let a = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2), 2);
        assert_eq!(a.hom_complex(0, 0).unwrap().level_sizes(), vec![2, 2, 2]);
        let i = SimplicialGroupoid::constant(&FiniteGroupoid::interval(), 2);
        assert_eq!(i.hom_complex(0, 1).unwrap().level_sizes(), vec![1, 1, 1]);
    }

    #[test]
    fn components() {
        let i = SimplicialGroupoid::constant(&FiniteGroupoid::interval(), 1);
        assert_eq!(pi0_sgpd(&i).count, 1);
        let z = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2), 1);
        let two = SimplicialGroupoid::disjoint_union(&[z.clone(), z]).unwrap();
        assert!(two.violations().is_empty());
        assert_eq!(pi0_sgpd(&two).count, 2);
    }

    #[test]
    fn dold_kan_levels() {
        let c = ChainFixture::concentrated(vec![2], 1);
        let a = dold_kan(&c, 3).unwrap();
        let sizes: Vec<usize> = a.levels().iter().map(|l| l.arrow_count()).collect();
        assert_eq!(sizes, vec![1, 2, 4, 8]);
        assert!(a.violations().is_empty(), "{:?}", a.violations());
        assert_eq!(moore_pi_n(&a, 0, 1).unwrap().group.order(), 2);
        assert!(moore_pi_n(&a, 0, 0).unwrap().group.is_trivial());

        let zero = dold_kan(&ChainFixture::concentrated(vec![], 0), 2).unwrap();
        assert!(zero.levels().iter().all(|l| l.arrow_count() == 1));
        let c0 = dold_kan(&ChainFixture::concentrated(vec![2], 0), 2).unwrap();
        assert_eq!(
            c0,
            SimplicialGroupoid::from_fn(c0.levels().to_vec(), |_, _, a| a, |_, _, a| a).unwrap()
        );
    }

    #[test]
    fn dold_kan_with_boundary() {
        // ℤ/4 --×2--> ℤ/4: H_0 = ℤ/2, H_1 = ℤ/2
        let c = ChainFixture {
            moduli: vec![vec![4], vec![4]],
            boundaries: vec![vec![], vec![vec![2]]],
        };
        let a = dold_kan(&c, 2).unwrap();
        assert!(a.violations().is_empty(), "{:?}", a.violations());
        assert_eq!(moore_pi_n(&a, 0, 0).unwrap().group.order(), 2);
        assert_eq!(moore_pi_n(&a, 0, 1).unwrap().group.order(), 2);
    }

    #[test]
    fn json_round_trip() {
        let a = dold_kan(&ChainFixture::concentrated(vec![2], 1), 2).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        let b: SimplicialGroupoid = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }
}
