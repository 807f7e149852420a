//! Truncated simplicial sets with explicit face and degeneracy tables.
//!
//! Every simplex is stored, degenerate or not. [`TruncatedSimplicialSet::normal_form`]
//! recovers the Eilenberg–Zilber decomposition when it is needed.

mod fundamental;
mod homotopy;
mod limits;
mod maps;
mod standard;

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

pub use fundamental::{edge_path_group, second_homotopy_order, EdgePathGroup, SecondHomotopy};
pub use homotopy::{check_kan, pi0_sset, pi_n_kan, Components, KanHomotopy, DEFAULT_FILLER_BUDGET};
pub use limits::{pullback, pushout, Pullback, Pushout};
pub use maps::{all_maps, for_each_map};
pub(crate) use standard::{seq_name, sequences};
pub use standard::{standard_complex, ComplexKind};

/// A simplicial set known in levels `0..=depth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSimplicialSet {
    depth: usize,
    names: Vec<Vec<String>>,
    /// `faces[n][i][x]` is `d_i x` for `x` at level `n ≥ 1`.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degeneracies[n][i][x]` is `s_i x` for `x` at level `n < depth`.
    degeneracies: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<String, usize>>,
}

/// A simplex addressed by level and position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    pub level: usize,
    pub id: usize,
}

/// A vertex used as a basepoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Basepoint(pub usize);

impl Basepoint {
    pub fn new(x: &TruncatedSimplicialSet, vertex: usize) -> Result<Self> {
        if vertex < x.level_size(0) {
            Ok(Basepoint(vertex))
        } else {
            Err(Error::UnknownId {
                level: 0,
                id: vertex.to_string(),
            })
        }
    }

    pub fn named(x: &TruncatedSimplicialSet, name: &str) -> Result<Self> {
        x.id(0, name).map(Basepoint)
    }
}

/// One failed simplicial identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub identity: String,
    pub level: usize,
    pub simplex: String,
}

impl TruncatedSimplicialSet {
    /// Assemble from raw tables, checking shapes, ranges and id uniqueness.
    /// Simplicial identities are not checked here; see [`validate_sset`].
    pub fn from_tables(
        depth: usize,
        names: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if names.len() != depth + 1 {
            return invalid(format!(
                "expected {} levels, got {}",
                depth + 1,
                names.len()
            ));
        }
        if faces.len() != depth + 1 || degeneracies.len() != depth + 1 {
            return invalid("face/degeneracy tables must have one entry per level");
        }
        let mut index = Vec::with_capacity(depth + 1);
        for (n, level) in names.iter().enumerate() {
            let mut map = HashMap::with_capacity(level.len());
            for (k, name) in level.iter().enumerate() {
                if map.insert(name.clone(), k).is_some() {
                    return invalid(format!("duplicate id {name:?} at level {n}"));
                }
            }
            index.push(map);
        }
        for n in 0..=depth {
            let expect_faces = if n == 0 { 0 } else { n + 1 };
            if faces[n].len() != expect_faces {
                return invalid(format!("level {n} needs {expect_faces} face maps"));
            }
            for table in &faces[n] {
                if table.len() != names[n].len() || table.iter().any(|&y| y >= names[n - 1].len()) {
                    return invalid(format!("face table at level {n} is not total"));
                }
            }
            let expect_degs = if n < depth { n + 1 } else { 0 };
            if degeneracies[n].len() != expect_degs {
                return invalid(format!("level {n} needs {expect_degs} degeneracy maps"));
            }
            for table in &degeneracies[n] {
                if table.len() != names[n].len() || table.iter().any(|&y| y >= names[n + 1].len()) {
                    return invalid(format!("degeneracy table at level {n} is not total"));
                }
            }
        }
        Ok(TruncatedSimplicialSet {
            depth,
            names,
            faces,
            degeneracies,
            index,
        })
    }

    /// Build from keyed simplices: `levels[n]` lists the keys at level `n`,
    /// and the operator closures must land on listed keys.
    pub fn build<K, N, F, S>(
        depth: usize,
        levels: Vec<Vec<K>>,
        name: N,
        face: F,
        degeneracy: S,
    ) -> Result<Self>
    where
        K: Clone + Eq + Hash + std::fmt::Debug,
        N: Fn(usize, &K) -> String,
        F: Fn(usize, usize, &K) -> K,
        S: Fn(usize, usize, &K) -> K,
    {
        if levels.len() != depth + 1 {
            return invalid("one key list per level required");
        }
        let lookup: Vec<HashMap<&K, usize>> = levels
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, k)| (k, i)).collect())
            .collect();
        let find = |n: usize, k: &K| -> Result<usize> {
            lookup[n].get(k).copied().ok_or_else(|| {
                Error::Invalid(format!("operator result {k:?} missing from level {n}"))
            })
        };
        let mut faces = vec![Vec::new(); depth + 1];
        let mut degeneracies = vec![Vec::new(); depth + 1];
        for n in 0..=depth {
            if n > 0 {
                for i in 0..=n {
                    let table = levels[n]
                        .iter()
                        .map(|k| find(n - 1, &face(n, i, k)))
                        .collect::<Result<Vec<_>>>()?;
                    faces[n].push(table);
                }
            }
            if n < depth {
                for i in 0..=n {
                    let table = levels[n]
                        .iter()
                        .map(|k| find(n + 1, &degeneracy(n, i, k)))
                        .collect::<Result<Vec<_>>>()?;
                    degeneracies[n].push(table);
                }
            }
        }
        let names = levels
            .iter()
            .enumerate()
            .map(|(n, l)| l.iter().map(|k| name(n, k)).collect())
            .collect();
        Self::from_tables(depth, names, faces, degeneracies)
    }

    /// The empty simplicial set.
    pub fn empty(depth: usize) -> Self {
        Self::from_tables(
            depth,
            vec![Vec::new(); depth + 1],
            (0..=depth)
                .map(|n| if n == 0 { vec![] } else { vec![vec![]; n + 1] })
                .collect(),
            (0..=depth)
                .map(|n| {
                    if n < depth {
                        vec![vec![]; n + 1]
                    } else {
                        vec![]
                    }
                })
                .collect(),
        )
        .expect("empty simplicial set")
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.names.get(n).map_or(0, Vec::len)
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.names.iter().map(Vec::len).collect()
    }

    pub fn total_size(&self) -> usize {
        self.names.iter().map(Vec::len).sum()
    }

    pub fn name(&self, n: usize, x: usize) -> &str {
        &self.names[n][x]
    }

    pub fn names(&self, n: usize) -> &[String] {
        &self.names[n]
    }

    pub fn id(&self, n: usize, name: &str) -> Result<usize> {
        self.index
            .get(n)
            .and_then(|m| m.get(name))
            .copied()
            .ok_or_else(|| Error::UnknownId {
                level: n,
                id: name.to_string(),
            })
    }

    #[inline]
    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][i][x]
    }

    #[inline]
    pub fn degeneracy(&self, n: usize, i: usize, x: usize) -> usize {
        self.degeneracies[n][i][x]
    }

    /// Iterated degeneracy `s_0^k` of a vertex, landing at level `k`.
    pub fn degenerate_vertex(&self, v: usize, k: usize) -> usize {
        (0..k).fold(v, |x, n| self.degeneracy(n, 0, x))
    }

    /// Vertex `k` of an `n`-simplex.
    pub fn vertex(&self, n: usize, x: usize, k: usize) -> usize {
        // delete every vertex above k (from the top), then every vertex below it
        let mut cur = x;
        let mut level = n;
        while level > k {
            cur = self.face(level, level, cur);
            level -= 1;
        }
        while level > 0 {
            cur = self.face(level, 0, cur);
            level -= 1;
        }
        cur
    }

    /// Whether `x` at level `n` is the image of some degeneracy.
    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        n > 0 && (0..n).any(|i| self.degeneracy(n - 1, i, self.face(n, i, x)) == x)
    }

    /// Eilenberg–Zilber normal form: `x = s_{i_k} … s_{i_1} y` with
    /// `i_k > … > i_1` and `y` nondegenerate. Returns `(y, level of y, [i_k, …, i_1])`.
    pub fn normal_form(&self, n: usize, x: usize) -> (usize, usize, Vec<usize>) {
        let mut word = Vec::new();
        let (mut cur, mut level) = (x, n);
        loop {
            let hit = (0..level)
                .rev()
                .find(|&i| self.degeneracy(level - 1, i, self.face(level, i, cur)) == cur);
            match hit {
                Some(i) => {
                    word.push(i);
                    cur = self.face(level, i, cur);
                    level -= 1;
                }
                None => return (cur, level, word),
            }
        }
    }

    /// Nondegenerate simplices per level.
    pub fn nondegenerate(&self, n: usize) -> Vec<usize> {
        (0..self.level_size(n))
            .filter(|&x| !self.is_degenerate(n, x))
            .collect()
    }

    pub fn nondegenerate_counts(&self) -> Vec<usize> {
        (0..=self.depth)
            .map(|n| self.nondegenerate(n).len())
            .collect()
    }

    /// Restrict to levels `0..=depth`.
    pub fn truncate(&self, depth: usize) -> Result<Self> {
        if depth > self.depth {
            return Err(Error::DepthTooSmall {
                have: self.depth,
                need: depth,
                context: "truncation".into(),
            });
        }
        let mut degeneracies = self.degeneracies[..=depth].to_vec();
        degeneracies[depth] = Vec::new();
        Self::from_tables(
            depth,
            self.names[..=depth].to_vec(),
            self.faces[..=depth].to_vec(),
            degeneracies,
        )
    }

    /// Coproduct; simplex names are prefixed with the summand index.
    pub fn disjoint_union(parts: &[TruncatedSimplicialSet]) -> Result<Self> {
        let depth = parts.first().map_or(0, |p| p.depth);
        if parts.iter().any(|p| p.depth != depth) {
            return invalid("disjoint union of different depths");
        }
        let mut levels = vec![Vec::new(); depth + 1];
        for (k, p) in parts.iter().enumerate() {
            for (n, level) in levels.iter_mut().enumerate() {
                level.extend((0..p.level_size(n)).map(|x| (k, x)));
            }
        }
        Self::build(
            depth,
            levels,
            |n, &(k, x)| {
                if parts.len() == 1 {
                    parts[k].name(n, x).to_string()
                } else {
                    format!("{k}/{}", parts[k].name(n, x))
                }
            },
            |n, i, &(k, x)| (k, parts[k].face(n, i, x)),
            |n, i, &(k, x)| (k, parts[k].degeneracy(n, i, x)),
        )
    }

    /// Per-level cardinality report.
    pub fn bounds(&self) -> Bounds {
        Bounds {
            depth: self.depth,
            level_sizes: self.level_sizes(),
            nondegenerate: self.nondegenerate_counts(),
        }
    }

    pub fn to_json(&self) -> SSetJson {
        let mut faces = BTreeMap::new();
        let mut degeneracies = BTreeMap::new();
        for n in 0..=self.depth {
            if n > 0 {
                for i in 0..=n {
                    let table: BTreeMap<String, String> = (0..self.level_size(n))
                        .map(|x| {
                            (
                                self.names[n][x].clone(),
                                self.names[n - 1][self.face(n, i, x)].clone(),
                            )
                        })
                        .collect();
                    faces.insert(format!("{n},{i}"), table);
                }
            }
            if n < self.depth {
                for i in 0..=n {
                    let table: BTreeMap<String, String> = (0..self.level_size(n))
                        .map(|x| {
                            (
                                self.names[n][x].clone(),
                                self.names[n + 1][self.degeneracy(n, i, x)].clone(),
                            )
                        })
                        .collect();
                    degeneracies.insert(format!("{n},{i}"), table);
                }
            }
        }
        SSetJson {
            depth: self.depth,
            levels: self.names.clone(),
            faces,
            degeneracies,
        }
    }

    pub fn from_json(j: &SSetJson) -> Result<Self> {
        let depth = j.depth;
        if j.levels.len() != depth + 1 {
            return invalid(format!("depth {depth} but {} levels", j.levels.len()));
        }
        let lookup: Vec<HashMap<&str, usize>> = j
            .levels
            .iter()
            .map(|l| l.iter().enumerate().map(|(k, s)| (s.as_str(), k)).collect())
            .collect();
        let table = |key: String,
                     from: usize,
                     to: usize,
                     src: &BTreeMap<String, BTreeMap<String, String>>|
         -> Result<Vec<usize>> {
            let m = src
                .get(&key)
                .ok_or_else(|| Error::Invalid(format!("missing table {key:?}")))?;
            j.levels[from]
                .iter()
                .map(|x| {
                    let y = m.get(x).ok_or_else(|| {
                        Error::Invalid(format!("table {key:?} undefined on {x:?}"))
                    })?;
                    lookup[to]
                        .get(y.as_str())
                        .copied()
                        .ok_or_else(|| Error::UnknownId {
                            level: to,
                            id: y.clone(),
                        })
                })
                .collect()
        };
        let mut faces = vec![Vec::new(); depth + 1];
        let mut degeneracies = vec![Vec::new(); depth + 1];
        for n in 0..=depth {
            if n > 0 {
                for i in 0..=n {
                    faces[n].push(table(format!("{n},{i}"), n, n - 1, &j.faces)?);
                }
            }
            if n < depth {
                for i in 0..=n {
                    degeneracies[n].push(table(format!("{n},{i}"), n, n + 1, &j.degeneracies)?);
                }
            }
        }
        Self::from_tables(depth, j.levels.clone(), faces, degeneracies)
    }
}

impl Serialize for TruncatedSimplicialSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedSimplicialSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SSetJson::deserialize(d)?;
        Self::from_json(&j).map_err(serde::de::Error::custom)
    }
}

/// Wire form of a truncated simplicial set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SSetJson {
    pub depth: usize,
    pub levels: Vec<Vec<String>>,
    pub faces: BTreeMap<String, BTreeMap<String, String>>,
    pub degeneracies: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub depth: usize,
    pub level_sizes: Vec<usize>,
    pub nondegenerate: Vec<usize>,
}

/// Every instance of a simplicial identity that fails within the stored depth.
pub fn validate_sset(x: &TruncatedSimplicialSet) -> Vec<Violation> {
    let mut out = Vec::new();
    let d = x.depth;
    let mut report = |identity: String, level: usize, s: usize| {
        out.push(Violation {
            identity,
            level,
            simplex: x.name(level, s).to_string(),
        })
    };
    for n in 2..=d {
        for s in 0..x.level_size(n) {
            for j in 0..=n {
                for i in 0..j {
                    if x.face(n - 1, i, x.face(n, j, s)) != x.face(n - 1, j - 1, x.face(n, i, s)) {
                        report(format!("d_{i} d_{j} = d_{} d_{i}", j - 1), n, s);
                    }
                }
            }
        }
    }
    for n in 0..d {
        for s in 0..x.level_size(n) {
            for j in 0..=n {
                let sj = x.degeneracy(n, j, s);
                if x.face(n + 1, j, sj) != s {
                    report(format!("d_{j} s_{j} = id"), n, s);
                }
                if x.face(n + 1, j + 1, sj) != s {
                    report(format!("d_{} s_{j} = id", j + 1), n, s);
                }
                for i in 0..=n + 1 {
                    if i < j {
                        let rhs = x.degeneracy(n - 1, j - 1, x.face(n, i, s));
                        if x.face(n + 1, i, sj) != rhs {
                            report(format!("d_{i} s_{j} = s_{} d_{i}", j - 1), n, s);
                        }
                    } else if i > j + 1 {
                        let rhs = x.degeneracy(n - 1, j, x.face(n, i - 1, s));
                        if x.face(n + 1, i, sj) != rhs {
                            report(format!("d_{i} s_{j} = s_{j} d_{}", i - 1), n, s);
                        }
                    }
                }
                if n + 2 <= d {
                    for i in 0..=j {
                        let lhs = x.degeneracy(n + 1, i, sj);
                        let rhs = x.degeneracy(n + 1, j + 1, x.degeneracy(n, i, s));
                        if lhs != rhs {
                            report(format!("s_{i} s_{j} = s_{} s_{i}", j + 1), n, s);
                        }
                    }
                }
            }
        }
    }
    out
}

/// A levelwise function between simplicial sets of equal depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    pub source: TruncatedSimplicialSet,
    pub target: TruncatedSimplicialSet,
    pub levels: Vec<Vec<usize>>,
}

impl SimplicialMap {
    /// Checked constructor: shapes, ranges and commutation with every operator.
    pub fn new(
        source: TruncatedSimplicialSet,
        target: TruncatedSimplicialSet,
        levels: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let m = SimplicialMap {
            source,
            target,
            levels,
        };
        match m.violations().first() {
            None => Ok(m),
            Some(v) => invalid(format!("not a simplicial map: {v}")),
        }
    }

    pub(crate) fn unchecked(
        source: TruncatedSimplicialSet,
        target: TruncatedSimplicialSet,
        levels: Vec<Vec<usize>>,
    ) -> Self {
        SimplicialMap {
            source,
            target,
            levels,
        }
    }

    pub fn identity(x: &TruncatedSimplicialSet) -> Self {
        let levels = (0..=x.depth())
            .map(|n| (0..x.level_size(n)).collect())
            .collect();
        SimplicialMap::unchecked(x.clone(), x.clone(), levels)
    }

    pub fn violations(&self) -> Vec<String> {
        let (s, t) = (&self.source, &self.target);
        let mut out = Vec::new();
        if s.depth() != t.depth() {
            out.push(format!("depth mismatch {} vs {}", s.depth(), t.depth()));
            return out;
        }
        if self.levels.len() != s.depth() + 1 {
            out.push("wrong number of levels".into());
            return out;
        }
        for n in 0..=s.depth() {
            if self.levels[n].len() != s.level_size(n)
                || self.levels[n].iter().any(|&y| y >= t.level_size(n))
            {
                out.push(format!("level {n} is not a total function"));
                return out;
            }
        }
        for n in 0..=s.depth() {
            for x in 0..s.level_size(n) {
                let fx = self.levels[n][x];
                if n > 0 {
                    for i in 0..=n {
                        if self.levels[n - 1][s.face(n, i, x)] != t.face(n, i, fx) {
                            out.push(format!("d_{i} fails at {}", s.name(n, x)));
                        }
                    }
                }
                if n < s.depth() {
                    for i in 0..=n {
                        if self.levels[n + 1][s.degeneracy(n, i, x)] != t.degeneracy(n, i, fx) {
                            out.push(format!("s_{i} fails at {}", s.name(n, x)));
                        }
                    }
                }
            }
        }
        out
    }

    #[inline]
    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.levels[n][x]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if self.target != other.source {
            return invalid("composing maps whose target and source differ");
        }
        let levels = self
            .levels
            .iter()
            .enumerate()
            .map(|(n, l)| l.iter().map(|&x| other.levels[n][x]).collect())
            .collect();
        Ok(SimplicialMap::unchecked(
            self.source.clone(),
            other.target.clone(),
            levels,
        ))
    }

    pub fn is_injective(&self) -> bool {
        self.levels.iter().all(|l| {
            let mut v = l.clone();
            v.sort_unstable();
            v.windows(2).all(|w| w[0] != w[1])
        })
    }

    pub fn is_surjective(&self) -> bool {
        self.levels.iter().enumerate().all(|(n, l)| {
            let mut hit = vec![false; self.target.level_size(n)];
            l.iter().for_each(|&y| hit[y] = true);
            hit.into_iter().all(|b| b)
        })
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Map given by a name table per level, as in the JSON format.
    pub fn from_names(
        source: TruncatedSimplicialSet,
        target: TruncatedSimplicialSet,
        table: &[BTreeMap<String, String>],
    ) -> Result<Self> {
        if table.len() != source.depth() + 1 {
            return invalid("map table needs one entry per level");
        }
        let levels = (0..=source.depth())
            .map(|n| {
                source
                    .names(n)
                    .iter()
                    .map(|x| {
                        let y = table[n]
                            .get(x)
                            .ok_or_else(|| Error::Invalid(format!("map undefined on {x:?}")))?;
                        target.id(n, y)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, levels)
    }

    pub fn to_names(&self) -> Vec<BTreeMap<String, String>> {
        self.levels
            .iter()
            .enumerate()
            .map(|(n, l)| {
                l.iter()
                    .enumerate()
                    .map(|(x, &y)| {
                        (
                            self.source.name(n, x).to_string(),
                            self.target.name(n, y).to_string(),
                        )
                    })
                    .collect()
            })
            .collect()
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} violated at level {} on {}",
            self.identity, self.level, self.simplex
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planted_defect_is_named() {
        // two-level object: one vertex, one edge, one 2-simplex whose faces disagree
        let mut x = standard_complex(ComplexKind::Simplex, 2, None, 2).unwrap();
        let t = x.to_json();
        let mut j = t.clone();
        // redirect d_0 of the 2-simplex 012 to edge 01 so that d_0 d_1 ≠ d_0 d_0
        j.faces
            .get_mut("2,0")
            .unwrap()
            .insert("012".into(), "01".into());
        x = TruncatedSimplicialSet::from_json(&j).unwrap();
        let v = validate_sset(&x);
        assert!(!v.is_empty());
        assert!(v
            .iter()
            .any(|v| v.identity.starts_with("d_0 d_1") && v.simplex == "012"));
    }

    #[test]
    fn normal_form_of_degenerate() {
        let x = standard_complex(ComplexKind::Simplex, 1, None, 3).unwrap();
        let s = x.id(3, "0011").unwrap();
        let (y, level, word) = x.normal_form(3, s);
        assert_eq!(level, 1);
        assert_eq!(x.name(1, y), "01");
        assert_eq!(word, vec![2, 0]);
        assert_eq!(x.nondegenerate_counts(), vec![2, 1, 0, 0]);
    }

    #[test]
    fn json_round_trip() {
        let x = standard_complex(ComplexKind::Horn, 2, Some(1), 3).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        let y: TruncatedSimplicialSet = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn vertices_of_simplex() {
        let x = standard_complex(ComplexKind::Simplex, 3, None, 3).unwrap();
        let s = x.id(3, "0123").unwrap();
        let v: Vec<&str> = (0..4).map(|k| x.name(0, x.vertex(3, s, k))).collect();
        assert_eq!(v, vec!["0", "1", "2", "3"]);
    }
}
