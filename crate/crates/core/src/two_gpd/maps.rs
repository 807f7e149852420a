//! Strict 2-functors and the two predicates on them.

use serde::{Deserialize, Serialize};

use super::presented::{image_tree_paths, PresentedHom, PresentedTwoGroupoid};
use super::{pi0_2gpd, pi1_classes, pi2_2gpd, TwoGroupoid};
use crate::budget::Budget;
use crate::error::Result;
use crate::presentation::Verdict;
use crate::sset::{edge_path_group, pi0_sset, second_homotopy_order, Basepoint};

/// A strict 2-functor between finite 2-groupoids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoFunctor {
    pub source: TwoGroupoid,
    pub target: TwoGroupoid,
    pub objects: Vec<usize>,
    pub one: Vec<usize>,
    pub two: Vec<usize>,
}

impl TwoFunctor {
    pub fn identity(k: &TwoGroupoid) -> Self {
        TwoFunctor {
            source: k.clone(),
            target: k.clone(),
            objects: (0..k.object_count()).collect(),
            one: (0..k.one.arrow_count()).collect(),
            two: (0..k.cells.len()).collect(),
        }
    }

    /// The map to the one-object, one-1-cell, one-2-cell 2-groupoid.
    pub fn to_terminal(k: &TwoGroupoid) -> Self {
        TwoFunctor {
            source: k.clone(),
            target: super::fixtures::point(),
            objects: vec![0; k.object_count()],
            one: vec![0; k.one.arrow_count()],
            two: vec![0; k.cells.len()],
        }
    }

    pub fn violations(&self) -> Vec<String> {
        let (k, l) = (&self.source, &self.target);
        let mut out = Vec::new();
        if self.objects.len() != k.object_count()
            || self.one.len() != k.one.arrow_count()
            || self.two.len() != k.cells.len()
        {
            return vec!["table sizes do not match the source".into()];
        }
        if self.objects.iter().any(|&v| v >= l.object_count())
            || self.one.iter().any(|&f| f >= l.one.arrow_count())
            || self.two.iter().any(|&c| c >= l.cells.len())
        {
            return vec!["image out of range".into()];
        }
        let one_name = |f: usize| &k.one.arrows[f].name;
        for f in 0..k.one.arrow_count() {
            let g = self.one[f];
            if l.one.source(g) != self.objects[k.one.source(f)]
                || l.one.target(g) != self.objects[k.one.target(f)]
            {
                out.push(format!(
                    "1-cell {} lands on the wrong endpoints",
                    one_name(f)
                ));
            }
        }
        for v in 0..k.object_count() {
            if self.one[k.one.identity(v)] != l.one.identity(self.objects[v]) {
                out.push(format!("identity of {} is not preserved", k.one.objects[v]));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for f in 0..k.one.arrow_count() {
            for g in 0..k.one.arrow_count() {
                if let Some(h) = k.one.compose(f, g) {
                    if l.one.compose(self.one[f], self.one[g]) != Some(self.one[h]) {
                        out.push(format!(
                            "composite {}∘{} is not preserved",
                            one_name(f),
                            one_name(g)
                        ));
                    }
                }
            }
        }
        for (a, c) in k.cells.iter().enumerate() {
            let d = &l.cells[self.two[a]];
            if d.source != self.one[c.source] || d.target != self.one[c.target] {
                out.push(format!("2-cell {} lands on the wrong boundary", c.name));
            }
        }
        for f in 0..k.one.arrow_count() {
            if self.two[k.identities[f]] != l.identities[self.one[f]] {
                out.push(format!(
                    "identity 2-cell of {} is not preserved",
                    one_name(f)
                ));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for b in 0..k.cells.len() {
            for a in 0..k.cells.len() {
                if let Some(c) = k.vertical(b, a) {
                    if l.vertical(self.two[b], self.two[a]) != Some(self.two[c]) {
                        out.push(format!(
                            "vertical {}·{} is not preserved",
                            k.cells[b].name, k.cells[a].name
                        ));
                    }
                }
                if let Some(c) = k.horizontal(b, a) {
                    if l.horizontal(self.two[b], self.two[a]) != Some(self.two[c]) {
                        out.push(format!(
                            "horizontal {}*{} is not preserved",
                            k.cells[b].name, k.cells[a].name
                        ));
                    }
                }
            }
        }
        out
    }
}

/// A verdict with a human-readable reason when it is not `yes`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MsVerdict {
    pub verdict: Verdict,
    pub witness: Option<String>,
}

impl MsVerdict {
    fn yes() -> Self {
        MsVerdict {
            verdict: Verdict::Yes,
            witness: None,
        }
    }

    fn no(w: String) -> Self {
        MsVerdict {
            verdict: Verdict::No,
            witness: Some(w),
        }
    }

    fn unknown(w: String) -> Self {
        MsVerdict {
            verdict: Verdict::Unknown,
            witness: Some(w),
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Yes
    }
}

/// Essentially surjective on objects, and an equivalence on every hom groupoid.
pub fn ms_weak_equivalence(phi: &TwoFunctor) -> MsVerdict {
    let (k, l) = (&phi.source, &phi.target);
    let obj = |v: usize| &l.one.objects[v];
    for y in 0..l.object_count() {
        if !(0..k.object_count()).any(|a| !l.one.hom(phi.objects[a], y).is_empty()) {
            return MsVerdict::no(format!("object {} is not reached up to a 1-cell", obj(y)));
        }
    }
    let cell_name = |f: usize| &l.one.arrows[f].name;
    for a in 0..k.object_count() {
        for b in 0..k.object_count() {
            let here = format!("hom ({}, {})", k.one.objects[a], k.one.objects[b]);
            let src = k.one.hom(a, b);
            for g in l.one.hom(phi.objects[a], phi.objects[b]) {
                if !src
                    .iter()
                    .any(|&f| !l.cells_between(phi.one[f], g).is_empty())
                {
                    return MsVerdict::no(format!(
                        "{here}: 1-cell {} is not reached up to a 2-cell",
                        cell_name(g)
                    ));
                }
            }
            for &f in &src {
                for &f2 in &src {
                    let upstairs = k.cells_between(f, f2);
                    let downstairs = l.cells_between(phi.one[f], phi.one[f2]);
                    let (nf, nf2) = (&k.one.arrows[f].name, &k.one.arrows[f2].name);
                    if upstairs.is_empty() && !downstairs.is_empty() {
                        return MsVerdict::no(format!(
                            "{here}: not faithful up to 2-cells, {nf} and {nf2} become isomorphic"
                        ));
                    }
                    let mut images: Vec<usize> = upstairs.iter().map(|&c| phi.two[c]).collect();
                    images.sort_unstable();
                    images.dedup();
                    if images.len() < upstairs.len() {
                        return MsVerdict::no(format!(
                            "{here}: not faithful on 2-cells {nf} ⇒ {nf2}"
                        ));
                    }
                    if images.len() < downstairs.len() {
                        return MsVerdict::no(format!("{here}: not full on 2-cells {nf} ⇒ {nf2}"));
                    }
                }
            }
        }
    }
    MsVerdict::yes()
}

/// Lifting of 1-cells out of the image and of 2-cells out of images of 1-cells.
pub fn ms_fibration(psi: &TwoFunctor) -> MsVerdict {
    let (l, k) = (&psi.source, &psi.target);
    for a in 0..l.object_count() {
        for g in 0..k.one.arrow_count() {
            if k.one.source(g) != psi.objects[a] {
                continue;
            }
            let lifts = (0..l.one.arrow_count()).any(|f| l.one.source(f) == a && psi.one[f] == g);
            if !lifts {
                return MsVerdict::no(format!(
                    "1-cell {} out of the image of {} has no lift",
                    k.one.arrows[g].name, l.one.objects[a]
                ));
            }
        }
    }
    for f in 0..l.one.arrow_count() {
        for (alpha, c) in k.cells.iter().enumerate() {
            if c.source != psi.one[f] {
                continue;
            }
            let lifts = l
                .cells
                .iter()
                .enumerate()
                .any(|(b, d)| d.source == f && psi.two[b] == alpha);
            if !lifts {
                return MsVerdict::no(format!(
                    "2-cell {} out of the image of {} has no lift",
                    c.name, l.one.arrows[f].name
                ));
            }
        }
    }
    MsVerdict::yes()
}

/// The same predicate for a 2-functor out of a presented 2-groupoid, decided
/// through homotopy groups: a bijection on components, and at each component
/// isomorphisms on `π_1` and `π_2`. Orders come from coset enumeration, so the
/// answer is `unknown` when that exceeds the budget.
pub fn ms_weak_equivalence_presented(
    w: &PresentedTwoGroupoid,
    h: &PresentedHom,
    k: &TwoGroupoid,
    budget: &Budget,
) -> Result<MsVerdict> {
    let bad = w.hom_violations(h, k);
    if !bad.is_empty() {
        return Ok(MsVerdict::no(format!(
            "not a 2-functor: {}",
            bad.join("; ")
        )));
    }
    let x = &w.source;
    let src = pi0_sset(x)?;
    let tgt = pi0_2gpd(k);
    let mut image = vec![usize::MAX; src.count];
    for v in 0..x.level_size(0) {
        let c = tgt.class_of[h.objects[v]];
        let slot = &mut image[src.class_of[v]];
        if *slot == usize::MAX {
            *slot = c;
        }
    }
    let mut seen = vec![false; tgt.count];
    for &c in &image {
        if std::mem::replace(&mut seen[c], true) {
            return Ok(MsVerdict::no("two components have the same image".into()));
        }
    }
    if let Some(c) = seen.iter().position(|s| !s) {
        let rep = tgt.representatives()[c];
        return Ok(MsVerdict::no(format!(
            "object {} is not reached up to a 1-cell",
            k.one.objects[rep]
        )));
    }

    for base in src.representatives() {
        let hb = h.objects[base];
        let here = x.name(0, base);
        let epg = edge_path_group(x, Basepoint(base))?;
        let (p1, loops, class) = pi1_classes(k, hb);
        let tree_edge = |e: usize| epg.edge_word[e].is_empty();
        let paths = image_tree_paths(w, h, k, base, tree_edge);
        let generator_image: Vec<usize> = epg
            .generator_edge
            .iter()
            .map(|&e| {
                let (s, t) = (x.face(1, 0, e), x.face(1, 1, e));
                let there = k
                    .one
                    .compose(w.edge_image(h, k, e), paths[s].unwrap())
                    .unwrap();
                let f = k
                    .one
                    .compose(k.one.inverse(paths[t].unwrap()), there)
                    .unwrap();
                class[loops.iter().position(|&l| l == f).unwrap()]
            })
            .collect();
        for r in &epg.presentation.relators {
            let value = r.iter().fold(p1.identity, |acc, l| {
                let g = generator_image[l.gen];
                p1.op(if l.inverse { p1.inverse(g) } else { g }, acc)
            });
            if value != p1.identity {
                return Ok(MsVerdict::no(format!(
                    "π_1 at {here}: a relator is not sent to the identity"
                )));
            }
        }
        if p1.generated(&generator_image).len() != p1.order() {
            return Ok(MsVerdict::no(format!("π_1 at {here} is not surjective")));
        }
        let Some((_, table)) = epg.presentation.to_finite(budget)? else {
            return Ok(MsVerdict::unknown(format!(
                "π_1 at {here} could not be enumerated"
            )));
        };
        if table.order() != p1.order() {
            return Ok(MsVerdict::no(format!(
                "π_1 at {here} has order {} but its image has order {}",
                table.order(),
                p1.order()
            )));
        }

        let p2 = pi2_2gpd(k, hb)?;
        let Some(sh) = second_homotopy_order(x, Basepoint(base), budget)? else {
            return Ok(MsVerdict::unknown(format!(
                "π_2 at {here} could not be computed"
            )));
        };
        if sh.order() != Some(p2.order() as u64) {
            return Ok(MsVerdict::no(format!(
                "π_2 at {here} is {} but the target has order {}",
                if sh.free_rank > 0 {
                    "infinite".to_string()
                } else {
                    format!("of order {}", sh.order().unwrap())
                },
                p2.order()
            )));
        }
        // spheres at the base: triangles whose edges are all degenerate
        let flat = x.degeneracy(0, 0, base);
        let id = k.one.identity(hb);
        let elems = k.cells_between(id, id);
        let reached: Vec<usize> = w
            .two
            .iter()
            .enumerate()
            .filter(|(_, t)| (0..3).all(|i| x.face(2, i, t.simplex) == flat))
            .map(|(g, _)| elems.iter().position(|&c| c == h.two[g]).unwrap())
            .collect();
        if p2.generated(&reached).len() != p2.order() {
            return Ok(MsVerdict::unknown(format!(
                "π_2 at {here}: orders agree but surjectivity is not witnessed by flat triangles"
            )));
        }
    }
    Ok(MsVerdict::yes())
}
