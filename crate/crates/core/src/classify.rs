//! The classifying complex `W̄A`, the total space `W`, and the adjunction
//! between the loop groupoid and `W̄` with its unit and counit.
//!
//! Strings are stored leading entry first: an `n`-simplex of `W̄A` is
//! `(g_{n-1}, …, g_0)` with `g_i` an arrow of `A_i` and
//! `source(g_i) = target(g_{i-1})`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{invalid, Error, Result};
use crate::groupoid::GroupoidWord;
use crate::loops::{loop_groupoid, LoopGroupoid};
use crate::presentation::Letter;
use crate::sgpd::{SGpdMap, SimplicialGroupoid};
use crate::sset::{all_maps, SimplicialMap, TruncatedSimplicialSet};

/// `W̄A` together with the string behind each simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyingComplex {
    pub sset: TruncatedSimplicialSet,
    /// Level 0: `[object]`; level `n`: `[g_{n-1}, …, g_0]`.
    pub strings: Vec<Vec<Vec<usize>>>,
    lookup: Vec<HashMap<Vec<usize>, usize>>,
}

impl ClassifyingComplex {
    pub fn id_of(&self, n: usize, key: &[usize]) -> Option<usize> {
        self.lookup[n].get(key).copied()
    }
}

/// Composable strings of a simplicial groupoid, level by level.
fn strings(a: &SimplicialGroupoid, depth: usize, budget: &Budget) -> Result<Vec<Vec<Vec<usize>>>> {
    let mut levels: Vec<Vec<Vec<usize>>> = vec![(0..a.objects().len()).map(|x| vec![x]).collect()];
    // strings stored trailing-first while growing, reversed at the end
    let mut grow: Vec<Vec<usize>> = vec![Vec::new()];
    for n in 1..=depth {
        let lvl = a.level(n - 1);
        let mut next = Vec::new();
        for s in &grow {
            for g in 0..lvl.arrow_count() {
                let ok = match s.last() {
                    None => true,
                    Some(&prev) => lvl.source(g) == a.level(n - 2).target(prev),
                };
                if ok {
                    let mut t = s.clone();
                    t.push(g);
                    next.push(t);
                }
            }
        }
        budget.charge(next.len() as u64, "enumerating composable strings")?;
        levels.push(
            next.iter()
                .map(|s| s.iter().rev().copied().collect())
                .collect(),
        );
        grow = next;
    }
    Ok(levels)
}

/// `W̄A` through level `depth`; uses levels `0..depth` of `A`.
pub fn wbar(a: &SimplicialGroupoid, depth: usize, budget: &Budget) -> Result<ClassifyingComplex> {
    if depth >= 1 && a.depth() + 1 < depth {
        return Err(Error::DepthTooSmall {
            have: a.depth(),
            need: depth - 1,
            context: format!(
                "W̄ through level {depth} needs the groupoid through level {}",
                depth - 1
            ),
        });
    }
    let levels = strings(a, depth, budget)?;
    let face = |n: usize, i: usize, v: &Vec<usize>| -> Vec<usize> {
        if n == 1 {
            let g = v[0];
            return vec![if i == 0 {
                a.level(0).source(g)
            } else {
                a.level(0).target(g)
            }];
        }
        if i == 0 {
            return v[1..].to_vec();
        }
        if i == n {
            return (0..n - 1)
                .map(|p| a.face(n - 1 - p, n - 1 - p, v[p]))
                .collect();
        }
        let mut out: Vec<usize> = (0..i - 1)
            .map(|p| a.face(n - 1 - p, i - 1 - p, v[p]))
            .collect();
        let lvl = n - i - 1;
        let top = a.face(lvl + 1, 0, v[i - 1]);
        out.push(a.level(lvl).compose(top, v[i]).expect("composable string"));
        out.extend_from_slice(&v[i + 1..]);
        out
    };
    let degeneracy = |n: usize, i: usize, v: &Vec<usize>| -> Vec<usize> {
        if n == 0 {
            return vec![a.level(0).identity(v[0])];
        }
        if i == 0 {
            let obj = a.level(n - 1).target(v[0]);
            let mut out = vec![a.level(n).identity(obj)];
            out.extend_from_slice(v);
            return out;
        }
        let mut out: Vec<usize> = (0..i)
            .map(|p| a.degeneracy(n - 1 - p, i - 1 - p, v[p]))
            .collect();
        let obj = a.level(n - i).source(v[i - 1]);
        out.push(a.level(n - i).identity(obj));
        out.extend_from_slice(&v[i..]);
        out
    };
    let name = |n: usize, v: &Vec<usize>| -> String {
        if n == 0 {
            return a.objects()[v[0]].clone();
        }
        let parts: Vec<&str> = v
            .iter()
            .enumerate()
            .map(|(p, &g)| a.level(n - 1 - p).arrows[g].name.as_str())
            .collect();
        format!("({})", parts.join("|"))
    };
    let sset = TruncatedSimplicialSet::build(depth, levels.clone(), name, face, degeneracy)?;
    let lookup = levels
        .iter()
        .map(|l| l.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect())
        .collect();
    Ok(ClassifyingComplex {
        sset,
        strings: levels,
        lookup,
    })
}

/// `W̄f`: strings are mapped entry by entry.
pub fn wbar_map(
    f: &SGpdMap,
    source: &ClassifyingComplex,
    target: &ClassifyingComplex,
) -> Result<SimplicialMap> {
    let depth = source.sset.depth();
    if target.sset.depth() != depth {
        return invalid("W̄ of a map needs complexes of equal depth");
    }
    let mut levels = Vec::with_capacity(depth + 1);
    for n in 0..=depth {
        let row = source.strings[n]
            .iter()
            .map(|v| {
                let key: Vec<usize> = if n == 0 {
                    vec![f.objects[v[0]]]
                } else {
                    v.iter()
                        .enumerate()
                        .map(|(p, &g)| f.levels[n - 1 - p][g])
                        .collect()
                };
                target
                    .id_of(n, &key)
                    .ok_or_else(|| Error::Invalid("image string is missing from the target".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        levels.push(row);
    }
    SimplicialMap::new(source.sset.clone(), target.sset.clone(), levels)
}

/// The total space `W` of a one-object simplicial groupoid with `q: W → W̄A`.
#[derive(Debug, Clone)]
pub struct TotalSpace {
    pub total: TruncatedSimplicialSet,
    pub base: ClassifyingComplex,
    pub q: SimplicialMap,
    /// Level `n`: `[g_n, …, g_0]`.
    pub tuples: Vec<Vec<Vec<usize>>>,
}

/// `W_n = A_n × A_{n-1} × … × A_0`; `q` drops the leading factor.
pub fn w_total(a: &SimplicialGroupoid, depth: usize, budget: &Budget) -> Result<TotalSpace> {
    if a.objects().len() != 1 {
        return invalid("the total space is built for one-object simplicial groupoids");
    }
    if a.depth() < depth {
        return Err(Error::DepthTooSmall {
            have: a.depth(),
            need: depth,
            context: "W through level n uses the group in level n".into(),
        });
    }
    let mut tuples: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut prev: Vec<Vec<usize>> = vec![Vec::new()];
    for n in 0..=depth {
        let mut next = Vec::new();
        for t in &prev {
            for g in 0..a.level(n).arrow_count() {
                let mut u = vec![g];
                u.extend_from_slice(t);
                next.push(u);
            }
        }
        budget.charge(next.len() as u64, "enumerating total-space tuples")?;
        tuples.push(next.clone());
        prev = next;
    }
    let mul = |lvl: usize, x: usize, y: usize| a.level(lvl).compose(x, y).unwrap();
    let e = |lvl: usize| a.level(lvl).identity(0);
    let face = |n: usize, i: usize, v: &Vec<usize>| -> Vec<usize> {
        if i == n {
            return (0..n).map(|p| a.face(n - p, n - p, v[p])).collect();
        }
        let mut out: Vec<usize> = (0..i).map(|p| a.face(n - p, i - p, v[p])).collect();
        let lvl = n - i - 1;
        out.push(mul(lvl, a.face(lvl + 1, 0, v[i]), v[i + 1]));
        out.extend_from_slice(&v[i + 2..]);
        out
    };
    let degeneracy = |n: usize, i: usize, v: &Vec<usize>| -> Vec<usize> {
        let mut out: Vec<usize> = (0..=i).map(|p| a.degeneracy(n - p, i - p, v[p])).collect();
        out.push(e(n - i));
        out.extend_from_slice(&v[i + 1..]);
        out
    };
    let name = |n: usize, v: &Vec<usize>| -> String {
        let parts: Vec<&str> = v
            .iter()
            .enumerate()
            .map(|(p, &g)| a.level(n - p).arrows[g].name.as_str())
            .collect();
        format!("<{}>", parts.join("|"))
    };
    let total = TruncatedSimplicialSet::build(depth, tuples.clone(), name, face, degeneracy)?;
    let base = wbar(a, depth, budget)?;
    let levels = (0..=depth)
        .map(|n| {
            tuples[n]
                .iter()
                .map(|v| {
                    if n == 0 {
                        base.id_of(0, &[0]).unwrap()
                    } else {
                        base.id_of(n, &v[1..]).unwrap()
                    }
                })
                .collect()
        })
        .collect();
    let q = SimplicialMap::new(total.clone(), base.sset.clone(), levels)?;
    Ok(TotalSpace {
        total,
        base,
        q,
        tuples,
    })
}

/// A map `G(X) → A`: an object function and the image of every generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopMap {
    pub objects: Vec<usize>,
    /// `generators[n][g]` is an arrow of `A_n`.
    pub generators: Vec<Vec<usize>>,
}

impl LoopMap {
    /// Image of a word of level `n`.
    pub fn evaluate(&self, a: &SimplicialGroupoid, n: usize, w: &GroupoidWord) -> Result<usize> {
        let letters: Vec<Letter> = w
            .letters
            .iter()
            .map(|l| Letter {
                gen: self.generators[n][l.gen],
                inverse: l.inverse,
            })
            .collect();
        a.level(n).evaluate(&letters, self.objects[w.source])
    }

    /// Image of `g_x` for `x` at level `n + 1`.
    pub fn on_simplex(
        &self,
        g: &LoopGroupoid,
        a: &SimplicialGroupoid,
        n: usize,
        x: usize,
    ) -> usize {
        match g.generator_of(n, x) {
            Some(k) => self.generators[n][k],
            None => a
                .level(n)
                .identity(self.objects[g.source().vertex(n + 1, x, 0)]),
        }
    }

    /// Every failure of endpoints, faces or degeneracies.
    pub fn violations(&self, g: &LoopGroupoid, a: &SimplicialGroupoid) -> Vec<String> {
        let mut out = Vec::new();
        if g.depth() != a.depth() || self.generators.len() != g.depth() + 1 {
            return vec!["depth mismatch".into()];
        }
        if self.objects.len() != g.level(0).objects.len()
            || self.objects.iter().any(|&o| o >= a.objects().len())
        {
            return vec!["object function is not total".into()];
        }
        for n in 0..=g.depth() {
            let lvl = g.level(n);
            if self.generators[n].len() != lvl.generators.len()
                || self.generators[n]
                    .iter()
                    .any(|&b| b >= a.level(n).arrow_count())
            {
                return vec![format!("level {n} generator images are malformed")];
            }
            for (k, gen) in lvl.generators.iter().enumerate() {
                let b = self.generators[n][k];
                let al = a.level(n);
                if al.source(b) != self.objects[gen.source]
                    || al.target(b) != self.objects[gen.target]
                {
                    out.push(format!(
                        "level {n}: image of {} has the wrong endpoints",
                        gen.name
                    ));
                    continue;
                }
                if n > 0 {
                    for i in 0..=n {
                        let w = g.face_of_generator(n, i, k);
                        if self.evaluate(a, n - 1, &w).ok() != Some(a.face(n, i, b)) {
                            out.push(format!("d_{i} fails on {}", gen.name));
                        }
                    }
                }
                if n < g.depth() {
                    for i in 0..=n {
                        let w = g.degeneracy_of_generator(n, i, k);
                        if self.evaluate(a, n + 1, &w).ok() != Some(a.degeneracy(n, i, b)) {
                            out.push(format!("s_{i} fails on {}", gen.name));
                        }
                    }
                }
            }
        }
        out
    }
}

/// `f ↦ f♯: X → W̄A`, sending `x` to `(f(g_x), f(g_{d_0 x}), …)`.
pub fn transpose_to_wbar(
    f: &LoopMap,
    g: &LoopGroupoid,
    a: &SimplicialGroupoid,
    w: &ClassifyingComplex,
) -> Result<SimplicialMap> {
    let x = g.source();
    let depth = x.depth();
    if w.sset.depth() != depth {
        return invalid("W̄A must have the depth of X");
    }
    let levels = (0..=depth)
        .map(|n| {
            (0..x.level_size(n))
                .map(|s| {
                    let key: Vec<usize> = if n == 0 {
                        vec![f.objects[s]]
                    } else {
                        let mut cur = s;
                        (0..n)
                            .map(|p| {
                                let v = f.on_simplex(g, a, n - 1 - p, cur);
                                if p + 1 < n {
                                    cur = x.face(n - p, 0, cur);
                                }
                                v
                            })
                            .collect()
                    };
                    w.id_of(n, &key).ok_or_else(|| {
                        Error::Invalid(format!("{key:?} is not a composable string"))
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SimplicialMap::new(x.clone(), w.sset.clone(), levels)
}

/// `φ ↦ φ♭: G(X) → A`, sending `g_x` to the leading entry of `φ(x)`.
pub fn transpose_to_loop(phi: &SimplicialMap, g: &LoopGroupoid, w: &ClassifyingComplex) -> LoopMap {
    let objects = (0..g.level(0).objects.len())
        .map(|v| w.strings[0][phi.apply(0, v)][0])
        .collect();
    let generators = (0..=g.depth())
        .map(|n| {
            (0..g.level(n).generators.len())
                .map(|k| w.strings[n + 1][phi.apply(n + 1, g.simplex_of(n, k))][0])
                .collect()
        })
        .collect();
    LoopMap {
        objects,
        generators,
    }
}

/// Calls `visit` on every map `G(X) → A`. Free generators (nondegenerate
/// simplices) are chosen level by level against face constraints; the other
/// generators are forced by degeneracies.
pub fn for_each_loop_map(
    g: &LoopGroupoid,
    a: &SimplicialGroupoid,
    budget: &Budget,
    visit: &mut dyn FnMut(&LoopMap) -> Result<bool>,
) -> Result<()> {
    if g.depth() != a.depth() {
        return invalid("G(X) and A need equal depths");
    }
    let x = g.source();
    let depth = g.depth();
    // forced[n][k] = Some((j, y)): g_x = s_j g_y with y at level n
    let forced: Vec<Vec<Option<(usize, usize)>>> = (0..=depth)
        .map(|n| {
            (0..g.level(n).generators.len())
                .map(|k| {
                    let s = g.simplex_of(n, k);
                    let m = n + 1;
                    (1..m)
                        .find(|&j| x.degeneracy(m - 1, j, x.face(m, j, s)) == s)
                        .map(|j| (j - 1, x.face(m, j, s)))
                })
                .collect()
        })
        .collect();
    let objects_n = x.level_size(0);
    let mut map = LoopMap {
        objects: vec![0; objects_n],
        generators: (0..=depth)
            .map(|n| vec![usize::MAX; g.level(n).generators.len()])
            .collect(),
    };
    let vars: Vec<(usize, usize)> = (0..=depth)
        .flat_map(|n| {
            forced[n]
                .iter()
                .enumerate()
                .filter(|(_, f)| f.is_none())
                .map(move |(k, _)| (n, k))
                .collect::<Vec<_>>()
        })
        .collect();

    struct Ctx<'a> {
        g: &'a LoopGroupoid,
        a: &'a SimplicialGroupoid,
        forced: &'a [Vec<Option<(usize, usize)>>],
        vars: &'a [(usize, usize)],
        budget: &'a Budget,
    }

    fn fill_forced(c: &Ctx, map: &mut LoopMap, n: usize) {
        for (k, f) in c.forced[n].iter().enumerate() {
            if let Some((j, y)) = *f {
                let below = map.on_simplex(c.g, c.a, n - 1, y);
                map.generators[n][k] = c.a.degeneracy(n - 1, j, below);
            }
        }
    }

    fn rec(
        c: &Ctx,
        k: usize,
        map: &mut LoopMap,
        visit: &mut dyn FnMut(&LoopMap) -> Result<bool>,
    ) -> Result<bool> {
        let depth = c.g.depth();
        let cur_level = if k < c.vars.len() {
            c.vars[k].0
        } else {
            depth + 1
        };
        let prev_level = if k == 0 { None } else { Some(c.vars[k - 1].0) };
        if prev_level != Some(cur_level) {
            let from = prev_level.map_or(1, |p| p + 1);
            for n in from.max(1)..=cur_level.min(depth) {
                fill_forced(c, map, n);
            }
        }
        if k == c.vars.len() {
            if map.violations(c.g, c.a).is_empty() {
                return visit(map);
            }
            return Ok(true);
        }
        let (n, gen) = c.vars[k];
        let arrow = &c.g.level(n).generators[gen];
        let (src, tgt) = (map.objects[arrow.source], map.objects[arrow.target]);
        let wants: Vec<Option<usize>> = if n == 0 {
            Vec::new()
        } else {
            (0..=n)
                .map(|i| {
                    map.evaluate(c.a, n - 1, &c.g.face_of_generator(n, i, gen))
                        .ok()
                })
                .collect()
        };
        let cands = c.a.level(n).hom(src, tgt);
        c.budget
            .charge(cands.len() as u64, "enumerating maps out of G(X)")?;
        for b in cands {
            if wants
                .iter()
                .enumerate()
                .all(|(i, w)| *w == Some(c.a.face(n, i, b)))
            {
                map.generators[n][gen] = b;
                if !rec(c, k + 1, map, visit)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    let ctx = Ctx {
        g,
        a,
        forced: &forced,
        vars: &vars,
        budget,
    };
    let n_obj = a.objects().len();
    let total = (n_obj as u128)
        .checked_pow(objects_n as u32)
        .unwrap_or(u128::MAX);
    budget.charge(
        total.min(u64::MAX as u128) as u64,
        "choosing object functions",
    )?;
    let mut choice = vec![0usize; objects_n];
    loop {
        map.objects.clone_from(&choice);
        if (n_obj > 0 || objects_n == 0) && !rec(&ctx, 0, &mut map, visit)? {
            return Ok(());
        }
        // next object function in lexicographic order
        let mut p = 0;
        loop {
            if p == objects_n || n_obj == 0 {
                return Ok(());
            }
            choice[p] += 1;
            if choice[p] < n_obj {
                break;
            }
            choice[p] = 0;
            p += 1;
        }
    }
}

/// Both hom-sets, enumerated independently, with the transposes checked
/// against each other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionWitness {
    pub loop_side: usize,
    pub wbar_side: usize,
    /// Every `f` satisfies `(f♯)♭ = f`.
    pub loop_round_trips: bool,
    /// Every `φ` satisfies `(φ♭)♯ = φ`.
    pub wbar_round_trips: bool,
}

impl AdjunctionWitness {
    pub fn holds(&self) -> bool {
        self.loop_side == self.wbar_side && self.loop_round_trips && self.wbar_round_trips
    }
}

/// Compare `Hom(G(X), A)` with `Hom(X, W̄A)`; `A` must have one level fewer than `X`.
pub fn adjunction_witness(
    x: &TruncatedSimplicialSet,
    a: &SimplicialGroupoid,
    budget: &Budget,
) -> Result<AdjunctionWitness> {
    if x.depth() != a.depth() + 1 {
        return invalid("the adjunction pairs X at depth D with A at depth D - 1");
    }
    let g = loop_groupoid(x, a.depth())?;
    let w = wbar(a, x.depth(), budget)?;
    let mut loop_maps = Vec::new();
    for_each_loop_map(&g, a, budget, &mut |m| {
        loop_maps.push(m.clone());
        Ok(true)
    })?;
    let wbar_maps = all_maps(x, &w.sset, budget)?;
    let mut loop_round_trips = true;
    for f in &loop_maps {
        let phi = transpose_to_wbar(f, &g, a, &w)?;
        loop_round_trips &= transpose_to_loop(&phi, &g, &w) == *f;
    }
    let mut wbar_round_trips = true;
    for phi in &wbar_maps {
        let f = transpose_to_loop(phi, &g, &w);
        wbar_round_trips &= f.violations(&g, a).is_empty()
            && transpose_to_wbar(&f, &g, a, &w)
                .map(|p| p.levels == phi.levels)
                .unwrap_or(false);
    }
    Ok(AdjunctionWitness {
        loop_side: loop_maps.len(),
        wbar_side: wbar_maps.len(),
        loop_round_trips,
        wbar_round_trips,
    })
}

/// `η: X → W̄G(X)` as the transpose of the identity of `G(X)`; needs `G(X)`
/// finite (a forest in every level).
pub struct Unit {
    pub loops: LoopGroupoid,
    pub finite: SimplicialGroupoid,
    pub classifying: ClassifyingComplex,
    pub map: SimplicialMap,
}

pub fn unit(x: &TruncatedSimplicialSet, budget: &Budget) -> Result<Unit> {
    if x.depth() == 0 {
        return Err(Error::DepthTooSmall {
            have: 0,
            need: 1,
            context: "the unit needs X through level 1".into(),
        });
    }
    let g = loop_groupoid(x, x.depth() - 1)?;
    let finite = g.to_finite()?;
    let w = wbar(&finite, x.depth(), budget)?;
    let identity = LoopMap {
        objects: (0..x.level_size(0)).collect(),
        generators: (0..=g.depth())
            .map(|n| {
                (0..g.level(n).generators.len())
                    .map(|k| g.finite_arrow(&finite, n, &g.level(n).generator(k)))
                    .collect()
            })
            .collect(),
    };
    let map = transpose_to_wbar(&identity, &g, &finite, &w)?;
    Ok(Unit {
        loops: g,
        finite,
        classifying: w,
        map,
    })
}

/// `ε: G(W̄A) → A` as the transpose of the identity of `W̄A`.
pub struct Counit {
    pub loops: LoopGroupoid,
    pub classifying: ClassifyingComplex,
    pub map: LoopMap,
}

pub fn counit(a: &SimplicialGroupoid, budget: &Budget) -> Result<Counit> {
    let w = wbar(a, a.depth() + 1, budget)?;
    let g = loop_groupoid(&w.sset, a.depth())?;
    let map = transpose_to_loop(&SimplicialMap::identity(&w.sset), &g, &w);
    let problems = map.violations(&g, a);
    if let Some(p) = problems.first() {
        return invalid(format!("counit is not a map: {p}"));
    }
    Ok(Counit {
        loops: g,
        classifying: w,
        map,
    })
}
