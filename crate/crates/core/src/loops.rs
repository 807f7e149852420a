//! The loop groupoid of a simplicial set: level `n` is the free groupoid on
//! the `(n+1)`-simplices, with generators of the form `s_0 y` set to identities.
//!
//! Conventions: the generator `g_x` runs from vertex 1 of `x` to vertex 0;
//! `d_i g_x = g_{d_{i+1} x}` for `i ≥ 1`, `d_0 g_x = g_{d_1 x} ∘ g_{d_0 x}⁻¹`
//! and `s_i g_x = g_{s_{i+1} x}`.

use crate::error::{Error, Result};
use crate::groupoid::{Arrow, FreeGroupoid, GroupoidWord};
use crate::presentation::{format_word, invert_word, Letter, PresentedGroup};
use crate::sgpd::SimplicialGroupoid;
use crate::sset::{Components, TruncatedSimplicialSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopGroupoid {
    source: TruncatedSimplicialSet,
    levels: Vec<FreeGroupoid>,
    /// `generator_of[n][x]` for `x` at level `n + 1` of the source; `None` when killed.
    generator_of: Vec<Vec<Option<usize>>>,
    /// `simplex_of[n][g]`: the `(n+1)`-simplex behind generator `g` of level `n`.
    simplex_of: Vec<Vec<usize>>,
}

/// `G(X)` in levels `0..=depth`; needs `X` through level `depth + 1`.
pub fn loop_groupoid(x: &TruncatedSimplicialSet, depth: usize) -> Result<LoopGroupoid> {
    if x.depth() < depth + 1 {
        return Err(Error::DepthTooSmall {
            have: x.depth(),
            need: depth + 1,
            context: format!(
                "G in levels 0..={depth} uses simplices through level {}",
                depth + 1
            ),
        });
    }
    let objects: Vec<String> = x.names(0).to_vec();
    let mut levels = Vec::new();
    let mut generator_of = Vec::new();
    let mut simplex_of = Vec::new();
    for n in 0..=depth {
        let m = n + 1;
        let mut gens = Vec::new();
        let mut of = vec![None; x.level_size(m)];
        let mut back = Vec::new();
        for s in 0..x.level_size(m) {
            if x.degeneracy(n, 0, x.face(m, 0, s)) == s {
                continue;
            }
            of[s] = Some(gens.len());
            back.push(s);
            gens.push(Arrow {
                name: x.name(m, s).to_string(),
                source: x.vertex(m, s, 1),
                target: x.vertex(m, s, 0),
            });
        }
        levels.push(FreeGroupoid {
            objects: objects.clone(),
            generators: gens,
        });
        generator_of.push(of);
        simplex_of.push(back);
    }
    Ok(LoopGroupoid {
        source: x.clone(),
        levels,
        generator_of,
        simplex_of,
    })
}

impl LoopGroupoid {
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn source(&self) -> &TruncatedSimplicialSet {
        &self.source
    }

    pub fn level(&self, n: usize) -> &FreeGroupoid {
        &self.levels[n]
    }

    pub fn generator_of(&self, n: usize, x: usize) -> Option<usize> {
        self.generator_of[n][x]
    }

    pub fn simplex_of(&self, n: usize, g: usize) -> usize {
        self.simplex_of[n][g]
    }

    /// `g_x` for `x` at level `n + 1`: a generator, or an identity when killed.
    pub fn simplex_word(&self, n: usize, x: usize) -> GroupoidWord {
        match self.generator_of[n][x] {
            Some(g) => self.levels[n].generator(g),
            None => GroupoidWord::identity(self.source.vertex(n + 1, x, 0)),
        }
    }

    /// `d_i g` for generator `g` of level `n ≥ 1`.
    pub fn face_of_generator(&self, n: usize, i: usize, g: usize) -> GroupoidWord {
        let x = self.simplex_of[n][g];
        let m = n + 1;
        if i >= 1 {
            return self.simplex_word(n - 1, self.source.face(m, i + 1, x));
        }
        let a = self.simplex_word(n - 1, self.source.face(m, 1, x));
        let b = self
            .simplex_word(n - 1, self.source.face(m, 0, x))
            .inverse();
        self.levels[n - 1]
            .compose(&a, &b)
            .expect("loop groupoid faces compose")
    }

    /// `s_i g` for generator `g` of level `n < depth`.
    pub fn degeneracy_of_generator(&self, n: usize, i: usize, g: usize) -> GroupoidWord {
        let x = self.simplex_of[n][g];
        self.simplex_word(n + 1, self.source.degeneracy(n + 1, i + 1, x))
    }

    /// Substitute each generator of a level-`n` word by a word of another level.
    pub fn substitute(
        &self,
        target: usize,
        w: &GroupoidWord,
        image: impl Fn(usize) -> GroupoidWord,
    ) -> GroupoidWord {
        let mut letters = Vec::new();
        for l in &w.letters {
            let im = image(l.gen);
            if l.inverse {
                letters.extend(invert_word(&im.letters));
            } else {
                letters.extend(im.letters);
            }
        }
        self.levels[target]
            .reduce_word(&letters, Some(w.source))
            .expect("substituted word is composable")
    }

    pub fn face_word(&self, n: usize, i: usize, w: &GroupoidWord) -> GroupoidWord {
        self.substitute(n - 1, w, |g| self.face_of_generator(n, i, g))
    }

    pub fn degeneracy_word(&self, n: usize, i: usize, w: &GroupoidWord) -> GroupoidWord {
        self.substitute(n + 1, w, |g| self.degeneracy_of_generator(n, i, g))
    }

    /// Path components: those of the level-0 generator graph.
    pub fn pi0(&self) -> Components {
        self.levels[0].components()
    }

    /// Whether every level is free on a forest, so that `G(X)` is finite.
    pub fn is_finite(&self) -> bool {
        self.levels.iter().all(FreeGroupoid::is_forest)
    }

    /// Failed simplicial identities, checked on every generator. Reduced
    /// words are canonical, so equality of words is equality of arrows.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let depth = self.depth();
        let mut check = |ok: bool, what: &str, n: usize, g: usize| {
            if !ok {
                out.push(format!(
                    "{what} fails on {} at level {n}",
                    self.levels[n].generators[g].name
                ));
            }
        };
        for n in 0..=depth {
            for g in 0..self.levels[n].generators.len() {
                let w = self.levels[n].generator(g);
                let face = |i| self.face_of_generator(n, i, g);
                let degen = |j| self.degeneracy_of_generator(n, j, g);
                if n >= 1 {
                    for i in 0..=n {
                        let f = face(i);
                        check(
                            (f.source, f.target) == (w.source, w.target),
                            "face endpoints",
                            n,
                            g,
                        );
                    }
                }
                for j in (n >= 2).then_some(1..=n).into_iter().flatten() {
                    for i in 0..j {
                        let lhs = self.face_word(n - 1, i, &face(j));
                        let rhs = self.face_word(n - 1, j - 1, &face(i));
                        check(lhs == rhs, &format!("d_{i} d_{j}"), n, g);
                    }
                }
                if n == depth {
                    continue;
                }
                for j in 0..=n {
                    let s = degen(j);
                    for i in 0..=n + 1 {
                        let lhs = self.face_word(n + 1, i, &s);
                        let rhs = if i == j || i == j + 1 {
                            w.clone()
                        } else if i < j {
                            self.degeneracy_word(n - 1, j - 1, &face(i))
                        } else {
                            self.degeneracy_word(n - 1, j, &face(i - 1))
                        };
                        check(lhs == rhs, &format!("d_{i} s_{j}"), n, g);
                    }
                    if n + 2 <= depth {
                        for i in 0..=j {
                            let lhs = self.degeneracy_word(n + 1, i, &s);
                            let rhs = self.degeneracy_word(n + 1, j + 1, &degen(i));
                            check(lhs == rhs, &format!("s_{i} s_{j}"), n, g);
                        }
                    }
                }
            }
        }
        out
    }

    /// The finite simplicial groupoid when every level is a forest. Each
    /// hom-set then has at most one element, named `s>t`.
    pub fn to_finite(&self) -> Result<SimplicialGroupoid> {
        let mut levels = Vec::new();
        let mut index = Vec::new();
        for (n, l) in self.levels.iter().enumerate() {
            let (g, idx) = l.to_finite().ok_or(Error::InfiniteLevel { level: n })?;
            levels.push(g);
            index.push(idx);
        }
        let (levels_ref, index_ref) = (&levels, &index);
        let endpoint_map = move |from: usize, to: usize, a: usize| -> usize {
            let arrow = &levels_ref[from].arrows[a];
            index_ref[to][&(arrow.source, arrow.target)]
        };
        SimplicialGroupoid::from_fn(
            levels.clone(),
            |n, _, a| endpoint_map(n, n - 1, a),
            |n, _, a| endpoint_map(n, n + 1, a),
        )
    }

    /// Arrow of the finite model carried by a word (see [`LoopGroupoid::to_finite`]).
    pub fn finite_arrow(&self, finite: &SimplicialGroupoid, n: usize, w: &GroupoidWord) -> usize {
        let l = finite.level(n);
        (0..l.arrow_count())
            .find(|&a| l.source(a) == w.source && l.target(a) == w.target)
            .expect("endpoints connected in the finite model")
    }

    fn word_name(&self, n: usize, w: &GroupoidWord) -> String {
        if w.letters.is_empty() {
            return format!("id_{}", self.levels[n].objects[w.source]);
        }
        let names: Vec<String> = self.levels[n]
            .generators
            .iter()
            .map(|g| g.name.clone())
            .collect();
        format_word(&w.letters, &names)
    }

    /// `G(X)(x, y)` with every level cut to reduced words of length at most
    /// `cap`. Fails when an operator leaves the cap.
    pub fn hom_complex_capped(
        &self,
        x: usize,
        y: usize,
        cap: usize,
    ) -> Result<TruncatedSimplicialSet> {
        let depth = self.depth();
        let levels: Vec<Vec<GroupoidWord>> = (0..=depth)
            .map(|n| self.levels[n].words_up_to(x, y, cap))
            .collect();
        TruncatedSimplicialSet::build(
            depth,
            levels,
            |n, w| self.word_name(n, w),
            |n, i, w| self.face_word(n, i, w),
            |n, i, w| self.degeneracy_word(n, i, w),
        )
        .map_err(|e| {
            Error::Invalid(format!(
                "word-length cap {cap} is not closed under the operators: {e}"
            ))
        })
    }

    /// `π_0 G(X)(v, v)` presented on the level-0 generators outside a spanning
    /// forest, with one relator `d_0 g_y · (d_1 g_y)⁻¹` per level-1 generator.
    /// Also returns, for each presentation generator, its level-0 generator.
    pub fn pi0_vertex_presentation(&self, v: usize) -> Result<(PresentedGroup, Vec<usize>)> {
        if self.depth() < 1 {
            return Err(Error::DepthTooSmall {
                have: self.depth(),
                need: 1,
                context: "π_0 of a vertex complex needs level 1".into(),
            });
        }
        let l0 = &self.levels[0];
        let comps = l0.components();
        let home = comps.class_of[v];
        let (_, in_tree) = l0.spanning_paths();
        let mut gen_index = vec![None; l0.generators.len()];
        let mut names = Vec::new();
        let mut back = Vec::new();
        for (g, a) in l0.generators.iter().enumerate() {
            if !in_tree[g] && comps.class_of[a.source] == home {
                gen_index[g] = Some(back.len());
                back.push(g);
                names.push(a.name.clone());
            }
        }
        let rewrite = |w: &GroupoidWord| -> Vec<Letter> {
            w.letters
                .iter()
                .filter_map(|l| {
                    gen_index[l.gen].map(|k| Letter {
                        gen: k,
                        inverse: l.inverse,
                    })
                })
                .collect()
        };
        let mut relators = Vec::new();
        for g in 0..self.levels[1].generators.len() {
            if comps.class_of[self.levels[1].generators[g].source] != home {
                continue;
            }
            let mut r = rewrite(&self.face_of_generator(1, 0, g));
            r.extend(invert_word(&rewrite(&self.face_of_generator(1, 1, g))));
            relators.push(r);
        }
        Ok((PresentedGroup::new(names, relators), back))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sgpd::pi0_sgpd;
    use crate::sset::{standard_complex, ComplexKind};

    #[test]
    fn point_has_trivial_levels() {
        let pt = standard_complex(ComplexKind::Point, 0, None, 3).unwrap();
        let g = loop_groupoid(&pt, 2).unwrap();
        assert!(g.levels.iter().all(|l| l.generators.is_empty()));
        assert_eq!(g.level(0).objects.len(), 1);
    }

    #[test]
    fn circle_is_free_on_one_loop() {
        let s1 = standard_complex(ComplexKind::Sphere, 1, None, 3).unwrap();
        let g = loop_groupoid(&s1, 1).unwrap();
        assert_eq!(g.level(0).generators.len(), 1);
        assert!(!g.is_finite());
        assert_eq!(g.pi0().count, 1);
        let h = g.hom_complex_capped(0, 0, 3).unwrap();
        assert_eq!(h.level_size(0), 7);
        let (p, _) = g.pi0_vertex_presentation(0).unwrap();
        assert_eq!(p.abelianization().unwrap().free_rank, 1);
    }

    #[test]
    fn interval_is_finite() {
        let d1 = standard_complex(ComplexKind::Simplex, 1, None, 3).unwrap();
        let g = loop_groupoid(&d1, 2).unwrap();
        let f = g.to_finite().unwrap();
        assert!(f.violations().is_empty(), "{:?}", f.violations());
        assert_eq!(f.level(0).arrow_count(), 4);
        assert_eq!(pi0_sgpd(&f).count, 1);
    }

    #[test]
    fn faces_preserve_endpoints() {
        let d3 = standard_complex(ComplexKind::Simplex, 3, None, 3).unwrap();
        let g = loop_groupoid(&d3, 2).unwrap();
        for n in 1..=2 {
            for k in 0..g.level(n).generators.len() {
                let a = &g.level(n).generators[k];
                for i in 0..=n {
                    let w = g.face_of_generator(n, i, k);
                    assert_eq!((w.source, w.target), (a.source, a.target));
                }
            }
        }
        assert!(matches!(
            g.to_finite(),
            Err(Error::InfiniteLevel { level: 0 })
        ));
    }

    #[test]
    fn identities_hold_on_small_complexes() {
        for (kind, n) in [
            (ComplexKind::Simplex, 3),
            (ComplexKind::Sphere, 1),
            (ComplexKind::Sphere, 2),
            (ComplexKind::Boundary, 3),
        ] {
            let x = standard_complex(kind, n, None, 4).unwrap();
            let g = loop_groupoid(&x, 3).unwrap();
            assert!(
                g.violations().is_empty(),
                "{kind:?} {n}: {:?}",
                g.violations()
            );
        }
    }

    #[test]
    fn swapped_generators_are_caught() {
        let d3 = standard_complex(ComplexKind::Simplex, 3, None, 4).unwrap();
        let mut g = loop_groupoid(&d3, 3).unwrap();
        g.simplex_of[1].swap(0, 1);
        assert!(!g.violations().is_empty());
    }
}
