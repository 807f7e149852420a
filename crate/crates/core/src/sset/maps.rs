//! Enumeration of simplicial maps between finite truncated simplicial sets.

use std::collections::HashMap;

use super::{SimplicialMap, TruncatedSimplicialSet};
use crate::budget::Budget;
use crate::error::{invalid, Result};

/// Calls `visit` on every simplicial map `x → y` (as level tables) that agrees
/// with `fixed` where it is given. Images of nondegenerate simplices are
/// chosen level by level among simplices with matching faces, nondegenerate
/// candidates first; degenerate simplices of `x` follow. `visit` returns `false` to stop early.
pub fn for_each_map(
    x: &TruncatedSimplicialSet,
    y: &TruncatedSimplicialSet,
    fixed: Option<&[Vec<Option<usize>>]>,
    budget: &Budget,
    visit: &mut dyn FnMut(&[Vec<usize>]) -> Result<bool>,
) -> Result<()> {
    if x.depth() != y.depth() {
        return invalid("maps need equal depths");
    }
    let depth = x.depth();
    let by_faces: Vec<HashMap<Vec<usize>, Vec<usize>>> = (0..=depth)
        .map(|n| {
            let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
            for s in 0..y.level_size(n) {
                let key = if n == 0 {
                    Vec::new()
                } else {
                    (0..=n).map(|i| y.face(n, i, s)).collect()
                };
                m.entry(key).or_default().push(s);
            }
            // nondegenerate candidates first, so first-found maps avoid collapsing
            for bucket in m.values_mut() {
                bucket.sort_by_key(|&s| (n > 0 && y.is_degenerate(n, s), s));
            }
            m
        })
        .collect();
    // degenerate x = s_i (d_i x): remember (i, d_i x)
    let split: Vec<Vec<Option<(usize, usize)>>> = (0..=depth)
        .map(|n| {
            (0..x.level_size(n))
                .map(|s| {
                    (0..n)
                        .find(|&i| x.degeneracy(n - 1, i, x.face(n, i, s)) == s)
                        .map(|i| (i, x.face(n, i, s)))
                })
                .collect()
        })
        .collect();
    let vars: Vec<(usize, usize)> = (0..=depth)
        .flat_map(|n| {
            (0..x.level_size(n))
                .filter(|&s| split[n][s].is_none())
                .map(move |s| (n, s))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut img: Vec<Vec<usize>> = (0..=depth)
        .map(|n| vec![usize::MAX; x.level_size(n)])
        .collect();

    struct Ctx<'a> {
        x: &'a TruncatedSimplicialSet,
        y: &'a TruncatedSimplicialSet,
        fixed: Option<&'a [Vec<Option<usize>>]>,
        by_faces: &'a [HashMap<Vec<usize>, Vec<usize>>],
        split: &'a [Vec<Option<(usize, usize)>>],
        vars: &'a [(usize, usize)],
        budget: &'a Budget,
    }

    fn fill_degenerate(c: &Ctx, img: &mut [Vec<usize>], n: usize) {
        for s in 0..c.x.level_size(n) {
            if let Some((i, f)) = c.split[n][s] {
                img[n][s] = c.y.degeneracy(n - 1, i, img[n - 1][f]);
            }
        }
    }

    fn consistent(c: &Ctx, img: &[Vec<usize>]) -> bool {
        let depth = c.x.depth();
        (0..=depth).all(|n| {
            (0..c.x.level_size(n)).all(|s| {
                let t = img[n][s];
                let fixed_ok = c.fixed.is_none_or(|f| f[n][s].is_none_or(|v| v == t));
                let faces_ok =
                    n == 0 || (0..=n).all(|i| c.y.face(n, i, t) == img[n - 1][c.x.face(n, i, s)]);
                let degs_ok = n == depth
                    || (0..=n)
                        .all(|i| c.y.degeneracy(n, i, t) == img[n + 1][c.x.degeneracy(n, i, s)]);
                fixed_ok && faces_ok && degs_ok
            })
        })
    }

    fn rec(
        c: &Ctx,
        k: usize,
        img: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]) -> Result<bool>,
    ) -> Result<bool> {
        let level_done = |k: usize| k == c.vars.len() || (k > 0 && c.vars[k].0 != c.vars[k - 1].0);
        if k == c.vars.len() {
            // levels above the last variable hold only degenerate simplices
            let last = c.vars.last().map_or(0, |v| v.0);
            for n in last.max(1)..=c.x.depth() {
                fill_degenerate(c, img, n);
            }
            if consistent(c, img) {
                return visit(img);
            }
            return Ok(true);
        }
        let (n, s) = c.vars[k];
        if k == 0 || level_done(k) {
            // entering level n: fill degenerate simplices of every level up to n
            let from = if k == 0 { 1 } else { c.vars[k - 1].0 + 1 };
            for m in from.max(1)..=n {
                fill_degenerate(c, img, m);
            }
        }
        let key: Vec<usize> = if n == 0 {
            Vec::new()
        } else {
            (0..=n).map(|i| img[n - 1][c.x.face(n, i, s)]).collect()
        };
        let Some(cands) = c.by_faces[n].get(&key) else {
            return Ok(true);
        };
        c.budget
            .charge(cands.len() as u64, "enumerating simplicial maps")?;
        for &t in cands {
            if let Some(f) = c.fixed {
                if f[n][s].is_some_and(|v| v != t) {
                    continue;
                }
            }
            img[n][s] = t;
            if !rec(c, k + 1, img, visit)? {
                return Ok(false);
            }
        }
        img[n][s] = usize::MAX;
        Ok(true)
    }

    let ctx = Ctx {
        x,
        y,
        fixed,
        by_faces: &by_faces,
        split: &split,
        vars: &vars,
        budget,
    };
    rec(&ctx, 0, &mut img, visit).map(|_| ())
}

/// All simplicial maps `x → y`.
pub fn all_maps(
    x: &TruncatedSimplicialSet,
    y: &TruncatedSimplicialSet,
    budget: &Budget,
) -> Result<Vec<SimplicialMap>> {
    let mut out = Vec::new();
    for_each_map(x, y, None, budget, &mut |levels| {
        out.push(SimplicialMap::unchecked(
            x.clone(),
            y.clone(),
            levels.to_vec(),
        ));
        Ok(true)
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{standard_complex, ComplexKind};

    #[test]
    fn maps_into_a_simplex_are_vertex_maps() {
        // maps Δ^1 → Δ^2 are order-preserving vertex maps: 6
        let d1 = standard_complex(ComplexKind::Simplex, 1, None, 2).unwrap();
        let d2 = standard_complex(ComplexKind::Simplex, 2, None, 2).unwrap();
        let maps = all_maps(&d1, &d2, &Budget::new(10_000)).unwrap();
        assert_eq!(maps.len(), 6);
        assert!(maps.iter().all(|m| m.violations().is_empty()));
    }

    #[test]
    fn circle_to_circle() {
        // S^1 → S^1: the constant map and the identity
        let s1 = standard_complex(ComplexKind::Sphere, 1, None, 2).unwrap();
        assert_eq!(all_maps(&s1, &s1, &Budget::new(10_000)).unwrap().len(), 2);
    }
}
