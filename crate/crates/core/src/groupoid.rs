//! Finite groupoids given by tables, and free groupoids on a directed graph
//! with arrows as reduced words.
//!
//! Composition is written in function order: `compose(f, g) = f ∘ g` is
//! defined when `target(g) == source(f)`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::group::FiniteGroup;
use crate::presentation::{free_reduce, Letter, Word};
use crate::util::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    pub objects: Vec<String>,
    pub arrows: Vec<Arrow>,
    /// `comp[f][g] = f ∘ g` when defined.
    comp: Vec<Vec<Option<usize>>>,
    pub identities: Vec<usize>,
    pub inverses: Vec<usize>,
}

impl FiniteGroupoid {
    /// Assemble from tables. Laws are not checked; see [`FiniteGroupoid::violations`].
    pub fn from_tables(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        comp: Vec<Vec<Option<usize>>>,
        identities: Vec<usize>,
        inverses: Vec<usize>,
    ) -> Result<Self> {
        let n = arrows.len();
        if comp.len() != n || comp.iter().any(|r| r.len() != n) {
            return invalid("composition table has the wrong shape");
        }
        if identities.len() != objects.len() || inverses.len() != n {
            return invalid("identity/inverse tables have the wrong length");
        }
        if arrows
            .iter()
            .any(|a| a.source >= objects.len() || a.target >= objects.len())
        {
            return invalid("arrow endpoint out of range");
        }
        Ok(FiniteGroupoid {
            objects,
            arrows,
            comp,
            identities,
            inverses,
        })
    }

    /// Build from an arrow list and a composition closure on composable pairs.
    pub fn from_fn(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = arrows.len();
        let comp: Vec<Vec<Option<usize>>> = (0..n)
            .map(|f| {
                (0..n)
                    .map(|g| (arrows[g].target == arrows[f].source).then(|| compose(f, g)))
                    .collect()
            })
            .collect();
        let identities = (0..objects.len())
            .map(|x| {
                (0..n)
                    .find(|&a| {
                        arrows[a].source == x
                            && arrows[a].target == x
                            && (0..n).all(|g| {
                                comp[a][g].is_none_or(|c| c == g)
                                    && comp[g][a].is_none_or(|c| c == g)
                            })
                    })
                    .ok_or_else(|| Error::Invalid(format!("object {x} has no identity")))
            })
            .collect::<Result<Vec<_>>>()?;
        let inverses = (0..n)
            .map(|f| {
                let src = arrows[f].source;
                (0..n)
                    .find(|&g| {
                        comp[f][g] == Some(identities[arrows[g].source]) && arrows[g].target == src
                    })
                    .ok_or_else(|| Error::Invalid(format!("arrow {f} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_tables(objects, arrows, comp, identities, inverses)
    }

    /// One object, arrows the group elements.
    pub fn from_group(g: &FiniteGroup) -> Self {
        let arrows = g
            .labels
            .iter()
            .map(|l| Arrow {
                name: l.clone(),
                source: 0,
                target: 0,
            })
            .collect();
        Self::from_fn(vec!["*".into()], arrows, |a, b| g.op(a, b)).expect("group as groupoid")
    }

    /// Objects only, identity arrows only.
    pub fn discrete(objects: Vec<String>) -> Self {
        let arrows = (0..objects.len())
            .map(|x| Arrow {
                name: format!("id_{}", objects[x]),
                source: x,
                target: x,
            })
            .collect();
        Self::from_fn(objects, arrows, |f, _| f).expect("discrete groupoid")
    }

    /// Exactly one arrow between any two objects.
    pub fn codiscrete(objects: Vec<String>) -> Self {
        let k = objects.len();
        let arrows: Vec<Arrow> = (0..k)
            .flat_map(|s| (0..k).map(move |t| (s, t)))
            .map(|(s, t)| Arrow {
                name: format!("{}>{}", objects[s], objects[t]),
                source: s,
                target: t,
            })
            .collect();
        // arrow (s,t) has index s*k + t
        Self::from_fn(objects, arrows, |f, g| (g / k) * k + (f % k)).expect("codiscrete groupoid")
    }

    /// The interval groupoid `I`: objects `0`, `1` and one isomorphism between them.
    pub fn interval() -> Self {
        Self::codiscrete(vec!["0".into(), "1".into()])
    }

    /// Cartesian product.
    pub fn product(&self, other: &FiniteGroupoid) -> Self {
        let m = other.objects.len();
        let objects = self
            .objects
            .iter()
            .flat_map(|a| other.objects.iter().map(move |b| format!("({a},{b})")))
            .collect();
        let k = other.arrows.len();
        let arrows = self
            .arrows
            .iter()
            .flat_map(|f| {
                other.arrows.iter().map(move |g| Arrow {
                    name: format!("({},{})", f.name, g.name),
                    source: f.source * m + g.source,
                    target: f.target * m + g.target,
                })
            })
            .collect();
        Self::from_fn(objects, arrows, |x, y| {
            let f = self.compose(x / k, y / k).expect("composable");
            let g = other.compose(x % k, y % k).expect("composable");
            f * k + g
        })
        .expect("product groupoid")
    }

    pub fn disjoint_union(parts: &[FiniteGroupoid]) -> Self {
        let mut objects = Vec::new();
        let mut arrows = Vec::new();
        let mut obj_off = Vec::new();
        let mut arr_off = Vec::new();
        for (k, p) in parts.iter().enumerate() {
            obj_off.push(objects.len());
            arr_off.push(arrows.len());
            objects.extend(p.objects.iter().map(|o| format!("{k}/{o}")));
            arrows.extend(p.arrows.iter().map(|a| Arrow {
                name: format!("{k}/{}", a.name),
                source: a.source + obj_off[k],
                target: a.target + obj_off[k],
            }));
        }
        let part_of = |a: usize| arr_off.iter().rposition(|&o| o <= a).unwrap();
        Self::from_fn(objects, arrows, |f, g| {
            let k = part_of(f);
            arr_off[k] + parts[k].compose(f - arr_off[k], g - arr_off[k]).unwrap()
        })
        .expect("disjoint union of groupoids")
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    #[inline]
    pub fn source(&self, f: usize) -> usize {
        self.arrows[f].source
    }

    #[inline]
    pub fn target(&self, f: usize) -> usize {
        self.arrows[f].target
    }

    /// `f ∘ g`, when `target(g) == source(f)`.
    #[inline]
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.comp[f][g]
    }

    #[inline]
    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    #[inline]
    pub fn inverse(&self, f: usize) -> usize {
        self.inverses[f]
    }

    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&f| self.arrows[f].source == x && self.arrows[f].target == y)
            .collect()
    }

    pub fn arrow_id(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::Invalid(format!("unknown arrow {name:?}")))
    }

    pub fn object_id(&self, name: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| Error::Invalid(format!("unknown object {name:?}")))
    }

    /// Evaluate a word `l_0 ∘ l_1 ∘ … ∘ l_k` whose letters name arrows
    /// (with inverse flags); `start` is the object for the empty word.
    pub fn evaluate(&self, word: &[Letter], start: usize) -> Result<usize> {
        let mut acc = self.identity(start);
        for (pos, l) in word.iter().enumerate().rev() {
            let a = if l.inverse {
                self.inverse(l.gen)
            } else {
                l.gen
            };
            acc = self
                .compose(a, acc)
                .ok_or(Error::NotComposable { position: pos })?;
        }
        Ok(acc)
    }

    /// The automorphism group of an object.
    pub fn vertex_group(&self, x: usize) -> (FiniteGroup, Vec<usize>) {
        let elems = self.hom(x, x);
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let mul = elems
            .iter()
            .map(|&a| {
                elems
                    .iter()
                    .map(|&b| pos[&self.compose(a, b).unwrap()])
                    .collect()
            })
            .collect();
        let g = FiniteGroup {
            labels: elems.iter().map(|&a| self.arrows[a].name.clone()).collect(),
            mul,
            identity: pos[&self.identity(x)],
        };
        (g, elems)
    }

    /// Every failed groupoid law.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.arrows.len();
        for f in 0..n {
            for g in 0..n {
                let composable = self.target(g) == self.source(f);
                match self.comp[f][g] {
                    Some(_) if !composable => {
                        out.push(format!("{f}∘{g} defined but not composable"))
                    }
                    None if composable => out.push(format!("{f}∘{g} undefined")),
                    Some(h)
                        if h >= n
                            || self.source(h) != self.source(g)
                            || self.target(h) != self.target(f) =>
                    {
                        out.push(format!("{f}∘{g} has wrong endpoints"))
                    }
                    _ => {}
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in 0..self.objects.len() {
            let e = self.identities[x];
            if self.source(e) != x || self.target(e) != x {
                out.push(format!("identity of {x} is not a loop at {x}"));
                continue;
            }
            for f in 0..n {
                if self.source(f) == x && self.comp[f][e] != Some(f) {
                    out.push(format!("right identity fails for arrow {f}"));
                }
                if self.target(f) == x && self.comp[e][f] != Some(f) {
                    out.push(format!("left identity fails for arrow {f}"));
                }
            }
        }
        for f in 0..n {
            let g = self.inverses[f];
            if g >= n
                || self.comp[f][g] != Some(self.identities[self.target(f)])
                || self.comp[g][f] != Some(self.identities[self.source(f)])
            {
                out.push(format!("inverse law fails for arrow {f}"));
            }
        }
        'assoc: for f in 0..n {
            for g in 0..n {
                let Some(fg) = self.comp[f][g] else { continue };
                for h in 0..n {
                    let Some(gh) = self.comp[g][h] else { continue };
                    if self.comp[fg][h] != self.comp[f][gh] {
                        out.push(format!("associativity fails at ({f},{g},{h})"));
                        break 'assoc;
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> GroupoidJson {
        let name = |a: usize| self.arrows[a].name.clone();
        let mut comp = BTreeMap::new();
        for f in 0..self.arrows.len() {
            for g in 0..self.arrows.len() {
                if let Some(h) = self.comp[f][g] {
                    comp.entry(name(f))
                        .or_insert_with(BTreeMap::new)
                        .insert(name(g), name(h));
                }
            }
        }
        GroupoidJson {
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
            identities: (0..self.objects.len())
                .map(|x| (self.objects[x].clone(), name(self.identities[x])))
                .collect(),
            inverses: (0..self.arrows.len())
                .map(|f| (name(f), name(self.inverses[f])))
                .collect(),
        }
    }

    pub fn from_json(j: &GroupoidJson) -> Result<Self> {
        let obj: HashMap<&str, usize> = j
            .objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.as_str(), i))
            .collect();
        let look_obj = |s: &str| {
            obj.get(s)
                .copied()
                .ok_or_else(|| Error::Invalid(format!("unknown object {s:?}")))
        };
        let arrows = j
            .arrows
            .iter()
            .map(|a| {
                Ok(Arrow {
                    name: a.id.clone(),
                    source: look_obj(&a.src)?,
                    target: look_obj(&a.tgt)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let arr: HashMap<&str, usize> = j
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (a.id.as_str(), i))
            .collect();
        if arr.len() != arrows.len() {
            return invalid("duplicate arrow ids");
        }
        let look = |s: &str| {
            arr.get(s)
                .copied()
                .ok_or_else(|| Error::Invalid(format!("unknown arrow {s:?}")))
        };
        let n = arrows.len();
        let mut comp = vec![vec![None; n]; n];
        for (f, row) in &j.comp {
            for (g, h) in row {
                comp[look(f)?][look(g)?] = Some(look(h)?);
            }
        }
        let identities = j
            .objects
            .iter()
            .map(|o| {
                let a = j
                    .identities
                    .get(o)
                    .ok_or_else(|| Error::Invalid(format!("no identity for {o:?}")))?;
                look(a)
            })
            .collect::<Result<Vec<_>>>()?;
        let inverses = j
            .arrows
            .iter()
            .map(|a| {
                let b = j
                    .inverses
                    .get(&a.id)
                    .ok_or_else(|| Error::Invalid(format!("no inverse for {:?}", a.id)))?;
                look(b)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_tables(j.objects.clone(), arrows, comp, identities, inverses)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

/// Wire form of a finite groupoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidJson {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    /// `comp[f][g] = f ∘ g`.
    pub comp: BTreeMap<String, BTreeMap<String, String>>,
    pub identities: BTreeMap<String, String>,
    pub inverses: BTreeMap<String, String>,
}

impl Serialize for FiniteGroupoid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteGroupoid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::from_json(&GroupoidJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Path components of a groupoid.
pub fn pi0_groupoid(h: &FiniteGroupoid) -> crate::sset::Components {
    let mut uf = UnionFind::new(h.object_count());
    for a in &h.arrows {
        uf.union(a.source, a.target);
    }
    let (class_of, count) = uf.classes();
    crate::sset::Components { class_of, count }
}

/// A free groupoid on a directed graph of generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeGroupoid {
    pub objects: Vec<String>,
    pub generators: Vec<Arrow>,
}

/// A reduced word with its endpoints; letters compose in function order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupoidWord {
    pub source: usize,
    pub target: usize,
    pub letters: Word,
}

impl GroupoidWord {
    pub fn identity(x: usize) -> Self {
        GroupoidWord {
            source: x,
            target: x,
            letters: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GroupoidWord {
            source: self.target,
            target: self.source,
            letters: crate::presentation::invert_word(&self.letters),
        }
    }
}

impl FreeGroupoid {
    pub fn letter_source(&self, l: Letter) -> usize {
        let g = &self.generators[l.gen];
        if l.inverse {
            g.target
        } else {
            g.source
        }
    }

    pub fn letter_target(&self, l: Letter) -> usize {
        let g = &self.generators[l.gen];
        if l.inverse {
            g.source
        } else {
            g.target
        }
    }

    pub fn generator(&self, g: usize) -> GroupoidWord {
        GroupoidWord {
            source: self.generators[g].source,
            target: self.generators[g].target,
            letters: vec![Letter::new(g)],
        }
    }

    /// Reduce a composable letter chain; `at` gives the object of an empty word.
    pub fn reduce_word(&self, word: &[Letter], at: Option<usize>) -> Result<GroupoidWord> {
        for (pos, pair) in word.windows(2).enumerate() {
            if self.letter_source(pair[0]) != self.letter_target(pair[1]) {
                return Err(Error::NotComposable { position: pos + 1 });
            }
        }
        let (source, target) = match (word.last(), word.first()) {
            (Some(&last), Some(&first)) => (self.letter_source(last), self.letter_target(first)),
            _ => {
                let x = at.ok_or_else(|| Error::Invalid("empty word needs an object".into()))?;
                (x, x)
            }
        };
        if let Some(x) = at {
            if word.is_empty() || x == source {
            } else {
                return Err(Error::NotComposable {
                    position: word.len(),
                });
            }
        }
        Ok(GroupoidWord {
            source,
            target,
            letters: free_reduce(word),
        })
    }

    /// `f ∘ g`.
    pub fn compose(&self, f: &GroupoidWord, g: &GroupoidWord) -> Result<GroupoidWord> {
        if g.target != f.source {
            return Err(Error::NotComposable {
                position: f.letters.len(),
            });
        }
        let mut letters = f.letters.clone();
        letters.extend_from_slice(&g.letters);
        Ok(GroupoidWord {
            source: g.source,
            target: f.target,
            letters: free_reduce(&letters),
        })
    }

    /// All reduced words `x → y` of length at most `cap`, shortest first.
    pub fn words_up_to(&self, x: usize, y: usize, cap: usize) -> Vec<GroupoidWord> {
        // grow words on the left: w ↦ l ∘ w
        let mut out = Vec::new();
        let mut frontier = vec![GroupoidWord::identity(x)];
        for len in 0..=cap {
            out.extend(frontier.iter().filter(|w| w.target == y).cloned());
            if len == cap {
                break;
            }
            let mut next = Vec::new();
            for w in &frontier {
                for g in 0..self.generators.len() {
                    for l in [Letter::new(g), Letter::inv(g)] {
                        if self.letter_source(l) != w.target
                            || w.letters.first() == Some(&l.inverted())
                        {
                            continue;
                        }
                        let mut letters = vec![l];
                        letters.extend_from_slice(&w.letters);
                        next.push(GroupoidWord {
                            source: x,
                            target: self.letter_target(l),
                            letters,
                        });
                    }
                }
            }
            frontier = next;
        }
        out
    }

    /// Whether the underlying undirected generator graph has no cycles, so that
    /// every hom-set has at most one element.
    pub fn is_forest(&self) -> bool {
        let mut uf = UnionFind::new(self.objects.len());
        self.generators.iter().all(|g| uf.union(g.source, g.target))
    }

    /// Object components of the generator graph.
    pub fn components(&self) -> crate::sset::Components {
        let mut uf = UnionFind::new(self.objects.len());
        for g in &self.generators {
            uf.union(g.source, g.target);
        }
        let (class_of, count) = uf.classes();
        crate::sset::Components { class_of, count }
    }

    /// Spanning-forest paths: for each object, a word from the root of its
    /// component to it, and the set of generators used by the forest.
    pub fn spanning_paths(&self) -> (Vec<GroupoidWord>, Vec<bool>) {
        let n = self.objects.len();
        let mut path: Vec<Option<GroupoidWord>> = vec![None; n];
        let mut in_tree = vec![false; self.generators.len()];
        for root in 0..n {
            if path[root].is_some() {
                continue;
            }
            path[root] = Some(GroupoidWord::identity(root));
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for (g, a) in self.generators.iter().enumerate() {
                    let (l, other) = if a.source == v {
                        (Letter::new(g), a.target)
                    } else if a.target == v {
                        (Letter::inv(g), a.source)
                    } else {
                        continue;
                    };
                    if path[other].is_none() {
                        in_tree[g] = true;
                        let base = path[v].as_ref().unwrap();
                        let mut letters = vec![l];
                        letters.extend_from_slice(&base.letters);
                        path[other] = Some(GroupoidWord {
                            source: base.source,
                            target: other,
                            letters,
                        });
                        queue.push_back(other);
                    }
                }
            }
        }
        (path.into_iter().map(Option::unwrap).collect(), in_tree)
    }

    /// Materialize as a finite groupoid when the generator graph is a forest:
    /// one arrow per ordered pair of objects in the same component.
    pub fn to_finite(&self) -> Option<(FiniteGroupoid, HashMap<(usize, usize), usize>)> {
        if !self.is_forest() {
            return None;
        }
        let comps = self.components();
        let n = self.objects.len();
        let mut arrows = Vec::new();
        let mut index = HashMap::new();
        for s in 0..n {
            for t in 0..n {
                if comps.class_of[s] == comps.class_of[t] {
                    index.insert((s, t), arrows.len());
                    arrows.push(Arrow {
                        name: if s == t {
                            format!("id_{}", self.objects[s])
                        } else {
                            format!("{}>{}", self.objects[s], self.objects[t])
                        },
                        source: s,
                        target: t,
                    });
                }
            }
        }
        let g = FiniteGroupoid::from_fn(self.objects.clone(), arrows.clone(), |f, g| {
            index[&(arrows[g].source, arrows[f].target)]
        })
        .ok()?;
        Some((g, index))
    }
}
