//! A presented 2-groupoid built from the low skeleta of a simplicial set:
//! objects are vertices, 1-generators the nondegenerate edges, 2-generators
//! the nondegenerate triangles, and one cocycle relation per 3-simplex. It
//! stands in for the left adjoint of the nerve; maps out of it are exactly
//! simplicial maps into the nerve.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::nerve::NerveComplex;
use super::TwoGroupoid;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::groupoid::{Arrow, FreeGroupoid, GroupoidWord};
use crate::presentation::{invert_word, Letter, PresentedGroup};
use crate::sset::TruncatedSimplicialSet;

/// `α_x: g_{d_2 x} ∘ g_{d_0 x} ⇒ g_{d_1 x}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoGenerator {
    pub name: String,
    pub simplex: usize,
    pub source: GroupoidWord,
    pub target: GroupoidWord,
}

/// The cocycle relation of a 3-simplex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub simplex: usize,
    pub name: String,
}

#[derive(Debug, Clone)]
pub struct PresentedTwoGroupoid {
    pub source: TruncatedSimplicialSet,
    pub one: FreeGroupoid,
    pub two: Vec<TwoGenerator>,
    pub relations: Vec<Relation>,
    /// Edge id → 1-generator (`None` for degenerate edges).
    pub edge_generator: Vec<Option<usize>>,
    /// Triangle id → 2-generator (`None` for degenerate triangles).
    pub triangle_generator: Vec<Option<usize>>,
}

/// Sub-simplex of `s` (level `n`) spanned by the vertex positions `keep` (increasing).
fn restrict(x: &TruncatedSimplicialSet, n: usize, s: usize, keep: &[usize]) -> usize {
    let (mut cur, mut level) = (s, n);
    for i in (0..=n).rev() {
        if !keep.contains(&i) {
            cur = x.face(level, i, cur);
            level -= 1;
        }
    }
    cur
}

pub fn whitehead_2gpd(x: &TruncatedSimplicialSet) -> Result<PresentedTwoGroupoid> {
    if x.depth() < 3 {
        return Err(Error::DepthTooSmall {
            have: x.depth(),
            need: 3,
            context: "the presented 2-groupoid takes relations from 3-simplices".into(),
        });
    }
    let mut gens = Vec::new();
    let mut edge_generator = vec![None; x.level_size(1)];
    for e in x.nondegenerate(1) {
        edge_generator[e] = Some(gens.len());
        gens.push(Arrow {
            name: x.name(1, e).to_string(),
            source: x.face(1, 0, e),
            target: x.face(1, 1, e),
        });
    }
    let one = FreeGroupoid {
        objects: x.names(0).to_vec(),
        generators: gens,
    };
    let edge_word = |e: usize| -> GroupoidWord {
        match edge_generator[e] {
            Some(g) => one.generator(g),
            None => GroupoidWord::identity(x.face(1, 0, e)),
        }
    };
    let mut two = Vec::new();
    let mut triangle_generator = vec![None; x.level_size(2)];
    for t in x.nondegenerate(2) {
        triangle_generator[t] = Some(two.len());
        let source = one.compose(&edge_word(x.face(2, 2, t)), &edge_word(x.face(2, 0, t)))?;
        two.push(TwoGenerator {
            name: x.name(2, t).to_string(),
            simplex: t,
            source,
            target: edge_word(x.face(2, 1, t)),
        });
    }
    let relations = x
        .nondegenerate(3)
        .into_iter()
        .map(|s| Relation {
            simplex: s,
            name: x.name(3, s).to_string(),
        })
        .collect();
    Ok(PresentedTwoGroupoid {
        source: x.clone(),
        one,
        two,
        relations,
        edge_generator,
        triangle_generator,
    })
}

/// A strict 2-functor out of a presented 2-groupoid, given on generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentedHom {
    pub objects: Vec<usize>,
    pub one: Vec<usize>,
    pub two: Vec<usize>,
}

impl PresentedTwoGroupoid {
    /// Image of an edge (identity when degenerate).
    pub fn edge_image(&self, h: &PresentedHom, k: &TwoGroupoid, e: usize) -> usize {
        match self.edge_generator[e] {
            Some(g) => h.one[g],
            None => k.one.identity(h.objects[self.source.face(1, 0, e)]),
        }
    }

    /// Image of a triangle (identity 2-cell when degenerate).
    pub fn triangle_image(&self, h: &PresentedHom, k: &TwoGroupoid, t: usize) -> usize {
        match self.triangle_generator[t] {
            Some(g) => h.two[g],
            None => k.identities[self.edge_image(h, k, self.source.face(2, 1, t))],
        }
    }

    fn relation_holds(&self, h: &PresentedHom, k: &TwoGroupoid, s: usize) -> bool {
        let x = &self.source;
        let edge = |i: usize, j: usize| self.edge_image(h, k, restrict(x, 3, s, &[i, j]));
        let cell =
            |i: usize, j: usize, l: usize| self.triangle_image(h, k, restrict(x, 3, s, &[i, j, l]));
        let lhs = k
            .whisker_left(edge(0, 1), cell(1, 2, 3))
            .and_then(|w| k.vertical(cell(0, 1, 3), w));
        let rhs = k
            .whisker_right(cell(0, 1, 2), edge(2, 3))
            .and_then(|w| k.vertical(cell(0, 2, 3), w));
        lhs.is_some() && lhs == rhs
    }

    /// Every failure of `h` to be a well-typed 2-functor respecting the relations.
    pub fn hom_violations(&self, h: &PresentedHom, k: &TwoGroupoid) -> Vec<String> {
        let mut out = Vec::new();
        for (g, a) in self.one.generators.iter().enumerate() {
            let f = h.one[g];
            if k.one.source(f) != h.objects[a.source] || k.one.target(f) != h.objects[a.target] {
                out.push(format!("1-generator {} has the wrong endpoints", a.name));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for (g, t) in self.two.iter().enumerate() {
            let x = &self.source;
            let src = k.one.compose(
                self.edge_image(h, k, x.face(2, 2, t.simplex)),
                self.edge_image(h, k, x.face(2, 0, t.simplex)),
            );
            let tgt = self.edge_image(h, k, x.face(2, 1, t.simplex));
            let c = &k.cells[h.two[g]];
            if Some(c.source) != src || c.target != tgt {
                out.push(format!("2-generator {} has the wrong boundary", t.name));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for r in &self.relations {
            if !self.relation_holds(h, k, r.simplex) {
                out.push(format!("relation of {} fails", r.name));
            }
        }
        out
    }

    /// `π_1` at `v`: 1-generators outside a spanning forest, one relator per
    /// 2-generator relating its source and target words.
    pub fn pi1_presentation(&self, v: usize) -> (PresentedGroup, Vec<usize>) {
        let comps = self.one.components();
        let home = comps.class_of[v];
        let (_, in_tree) = self.one.spanning_paths();
        let mut index = vec![None; self.one.generators.len()];
        let mut names = Vec::new();
        let mut back = Vec::new();
        for (g, a) in self.one.generators.iter().enumerate() {
            if !in_tree[g] && comps.class_of[a.source] == home {
                index[g] = Some(back.len());
                back.push(g);
                names.push(a.name.clone());
            }
        }
        let rewrite = |w: &GroupoidWord| -> Vec<Letter> {
            w.letters
                .iter()
                .filter_map(|l| {
                    index[l.gen].map(|k| Letter {
                        gen: k,
                        inverse: l.inverse,
                    })
                })
                .collect()
        };
        let relators = self
            .two
            .iter()
            .filter(|t| comps.class_of[t.target.source] == home)
            .map(|t| {
                let mut r = rewrite(&t.source);
                r.extend(invert_word(&rewrite(&t.target)));
                r
            })
            .collect();
        (PresentedGroup::new(names, relators), back)
    }
}

/// Calls `visit` on every 2-functor from the presented 2-groupoid to `k`.
pub fn for_each_presented_hom(
    w: &PresentedTwoGroupoid,
    k: &TwoGroupoid,
    budget: &Budget,
    visit: &mut dyn FnMut(&PresentedHom) -> Result<bool>,
) -> Result<()> {
    let n_obj = w.one.objects.len();
    let mut h = PresentedHom {
        objects: vec![0; n_obj],
        one: vec![0; w.one.generators.len()],
        two: vec![0; w.two.len()],
    };
    if n_obj > 0 && k.object_count() == 0 {
        return Ok(());
    }
    // relations become checkable once every triangle of the 3-simplex is set;
    // triangles are assigned in generator order
    let x = &w.source;
    let ready_after: Vec<Vec<usize>> = {
        let mut v = vec![Vec::new(); w.two.len() + 1];
        for r in &w.relations {
            let last = (0..4)
                .filter_map(|i| w.triangle_generator[x.face(3, i, r.simplex)])
                .max()
                .map_or(0, |g| g + 1);
            v[last].push(r.simplex);
        }
        v
    };

    fn two_rec(
        w: &PresentedTwoGroupoid,
        k: &TwoGroupoid,
        idx: usize,
        h: &mut PresentedHom,
        ready_after: &[Vec<usize>],
        budget: &Budget,
        visit: &mut dyn FnMut(&PresentedHom) -> Result<bool>,
    ) -> Result<bool> {
        if !ready_after[idx].iter().all(|&s| w.relation_holds(h, k, s)) {
            return Ok(true);
        }
        if idx == w.two.len() {
            return visit(h);
        }
        let t = &w.two[idx];
        let x = &w.source;
        let src = k
            .one
            .compose(
                w.edge_image(h, k, x.face(2, 2, t.simplex)),
                w.edge_image(h, k, x.face(2, 0, t.simplex)),
            )
            .expect("composable images");
        let tgt = w.edge_image(h, k, x.face(2, 1, t.simplex));
        let cands = k.cells_between(src, tgt);
        budget.charge(cands.len() as u64, "enumerating 2-generator images")?;
        for c in cands {
            h.two[idx] = c;
            if !two_rec(w, k, idx + 1, h, ready_after, budget, visit)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn one_rec(
        w: &PresentedTwoGroupoid,
        k: &TwoGroupoid,
        idx: usize,
        h: &mut PresentedHom,
        ready_after: &[Vec<usize>],
        budget: &Budget,
        visit: &mut dyn FnMut(&PresentedHom) -> Result<bool>,
    ) -> Result<bool> {
        if idx == w.one.generators.len() {
            return two_rec(w, k, 0, h, ready_after, budget, visit);
        }
        let a = &w.one.generators[idx];
        let cands = k.one.hom(h.objects[a.source], h.objects[a.target]);
        budget.charge(cands.len() as u64, "enumerating 1-generator images")?;
        for f in cands {
            h.one[idx] = f;
            if !one_rec(w, k, idx + 1, h, ready_after, budget, visit)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    let mut choice = vec![0usize; n_obj];
    loop {
        h.objects.clone_from(&choice);
        budget.charge(1, "choosing object functions")?;
        if !one_rec(w, k, 0, &mut h, &ready_after, budget, visit)? {
            return Ok(());
        }
        let mut p = 0;
        loop {
            if p == n_obj {
                return Ok(());
            }
            choice[p] += 1;
            if choice[p] < k.object_count() {
                break;
            }
            choice[p] = 0;
            p += 1;
        }
    }
}

pub fn count_presented_homs(
    w: &PresentedTwoGroupoid,
    k: &TwoGroupoid,
    budget: &Budget,
) -> Result<usize> {
    let mut count = 0;
    for_each_presented_hom(w, k, budget, &mut |_| {
        count += 1;
        Ok(true)
    })?;
    Ok(count)
}

/// The counit `whitehead(nerve K) → K`: an edge goes to its 1-cell and a
/// triangle to its 2-cell.
pub fn counit_2gpd(w: &PresentedTwoGroupoid, nk: &NerveComplex) -> PresentedHom {
    let x = &w.source;
    PresentedHom {
        objects: (0..x.level_size(0))
            .map(|v| nk.simplices[0][v].vertices[0])
            .collect(),
        one: w
            .one
            .generators
            .iter()
            .enumerate()
            .map(|(g, _)| {
                let e = w.edge_generator.iter().position(|&o| o == Some(g)).unwrap();
                nk.simplices[1][e].edges[0]
            })
            .collect(),
        two: w
            .two
            .iter()
            .map(|t| nk.simplices[2][t.simplex].cells[0])
            .collect(),
    }
}

/// Tree paths from `v` inside its component, as 1-cells of `k` under `h`:
/// `paths[u]` is a 1-cell `h(v) → h(u)`.
pub(crate) fn image_tree_paths(
    w: &PresentedTwoGroupoid,
    h: &PresentedHom,
    k: &TwoGroupoid,
    v: usize,
    use_edge: impl Fn(usize) -> bool,
) -> Vec<Option<usize>> {
    let x = &w.source;
    let mut paths = vec![None; x.level_size(0)];
    paths[v] = Some(k.one.identity(h.objects[v]));
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        for e in 0..x.level_size(1) {
            if !use_edge(e) {
                continue;
            }
            let (s, t) = (x.face(1, 0, e), x.face(1, 1, e));
            let f = w.edge_image(h, k, e);
            let pu = paths[u].unwrap();
            if s == u && paths[t].is_none() {
                paths[t] = k.one.compose(f, pu);
                queue.push_back(t);
            } else if t == u && paths[s].is_none() {
                paths[s] = k.one.compose(k.one.inverse(f), pu);
                queue.push_back(s);
            }
        }
    }
    paths
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::nerve;
    use super::*;
    use crate::sset::{all_maps, standard_complex, ComplexKind};

    #[test]
    fn point_and_circle() {
        let pt = standard_complex(ComplexKind::Point, 0, None, 3).unwrap();
        let w = whitehead_2gpd(&pt).unwrap();
        assert!(w.one.generators.is_empty() && w.two.is_empty());
        let s1 = standard_complex(ComplexKind::Sphere, 1, None, 3).unwrap();
        let w = whitehead_2gpd(&s1).unwrap();
        let (p, _) = w.pi1_presentation(0);
        assert_eq!(p.generators.len(), 1);
        assert!(p.simplified().relators.is_empty());
    }

    #[test]
    fn hom_counts_match_nerve_maps() {
        let b = Budget::new(50_000_000);
        let sources = [
            standard_complex(ComplexKind::Point, 0, None, 3).unwrap(),
            standard_complex(ComplexKind::Simplex, 1, None, 3).unwrap(),
            standard_complex(ComplexKind::Sphere, 1, None, 3).unwrap(),
            standard_complex(ComplexKind::Sphere, 2, None, 3).unwrap(),
        ];
        for k in [cyclic_two_cells(3), interval(), z2_on_z3()] {
            let nk = nerve(&k, 3, &b).unwrap();
            for x in &sources {
                let w = whitehead_2gpd(x).unwrap();
                let left = count_presented_homs(&w, &k, &b).unwrap();
                let right = all_maps(x, &nk.sset, &b).unwrap().len();
                assert_eq!(left, right);
            }
        }
    }
}
