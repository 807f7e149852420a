//! Path components, the Kan condition and homotopy groups of finite Kan
//! complexes by direct enumeration of spheres and fillers.

use std::collections::{HashMap, HashSet};

use super::{Basepoint, TruncatedSimplicialSet};
use crate::budget::Budget;
use crate::error::{invalid, Error, Result};
use crate::group::FiniteGroup;
use crate::util::UnionFind;

/// Default number of candidate fillers inspected before giving up.
pub const DEFAULT_FILLER_BUDGET: u64 = 1_000_000;

/// Vertex classes under the equivalence generated by edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub class_of: Vec<usize>,
    pub count: usize,
}

impl Components {
    /// Smallest vertex of each class.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.count];
        for (v, &c) in self.class_of.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = v;
            }
        }
        reps
    }
}

pub fn pi0_sset(x: &TruncatedSimplicialSet) -> Result<Components> {
    if x.depth() < 1 {
        return Err(Error::DepthTooSmall {
            have: x.depth(),
            need: 1,
            context: "path components need edges".into(),
        });
    }
    let mut uf = UnionFind::new(x.level_size(0));
    for e in 0..x.level_size(1) {
        uf.union(x.face(1, 0, e), x.face(1, 1, e));
    }
    let (class_of, count) = uf.classes();
    Ok(Components { class_of, count })
}

/// Enumerate every horn `Λ^m_k` (compatible families of `(m-1)`-simplices
/// indexed by `j ≠ k`), calling `visit` with the family in index order.
pub(crate) fn for_each_horn(
    x: &TruncatedSimplicialSet,
    m: usize,
    k: usize,
    budget: &Budget,
    visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<()> {
    let slots: Vec<usize> = (0..=m).filter(|&j| j != k).collect();
    let lower = m - 1;
    let size = x.level_size(lower);
    // by_face[i][y] = simplices at level m-1 whose d_i is y
    let by_face: Vec<HashMap<usize, Vec<usize>>> = if lower >= 1 {
        (0..=lower)
            .map(|i| {
                let mut map: HashMap<usize, Vec<usize>> = HashMap::new();
                for s in 0..size {
                    map.entry(x.face(lower, i, s)).or_default().push(s);
                }
                map
            })
            .collect()
    } else {
        Vec::new()
    };
    let mut chosen: Vec<usize> = Vec::with_capacity(slots.len());
    fn rec(
        x: &TruncatedSimplicialSet,
        lower: usize,
        size: usize,
        slots: &[usize],
        by_face: &[HashMap<usize, Vec<usize>>],
        chosen: &mut Vec<usize>,
        budget: &Budget,
        visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
    ) -> Result<bool> {
        let depth = chosen.len();
        if depth == slots.len() {
            return visit(chosen);
        }
        let j = slots[depth];
        let all: Vec<usize>;
        let candidates: &[usize] = if depth == 0 || lower == 0 {
            all = (0..size).collect();
            &all
        } else {
            let i0 = slots[0];
            let want = x.face(lower, j - 1, chosen[0]);
            match by_face[i0].get(&want) {
                Some(v) => v,
                None => return Ok(true),
            }
        };
        budget.charge(candidates.len() as u64, "enumerating horns")?;
        'cand: for &c in candidates {
            for (p, &i) in slots[..depth].iter().enumerate() {
                // i < j: d_i x_j = d_{j-1} x_i
                if lower >= 1 && x.face(lower, i, c) != x.face(lower, j - 1, chosen[p]) {
                    continue 'cand;
                }
            }
            chosen.push(c);
            let go_on = rec(x, lower, size, slots, by_face, chosen, budget, visit)?;
            chosen.pop();
            if !go_on {
                return Ok(false);
            }
        }
        Ok(true)
    }
    rec(x, lower, size, &slots, &by_face, &mut chosen, budget, visit).map(|_| ())
}

/// Check that every horn `Λ^m_k` with `1 ≤ m ≤ up_to` has a filler.
pub fn check_kan(x: &TruncatedSimplicialSet, up_to: usize, budget: &Budget) -> Result<()> {
    if up_to > x.depth() {
        return Err(Error::DepthTooSmall {
            have: x.depth(),
            need: up_to,
            context: "Kan check".into(),
        });
    }
    for m in 1..=up_to {
        for k in 0..=m {
            let fillable: HashSet<Vec<usize>> = (0..x.level_size(m))
                .map(|z| {
                    (0..=m)
                        .filter(|&j| j != k)
                        .map(|j| x.face(m, j, z))
                        .collect()
                })
                .collect();
            let mut missing: Option<Vec<usize>> = None;
            for_each_horn(x, m, k, budget, &mut |h| {
                if fillable.contains(h) {
                    Ok(true)
                } else {
                    missing = Some(h.to_vec());
                    Ok(false)
                }
            })?;
            if let Some(h) = missing {
                let names: Vec<&str> = h.iter().map(|&s| x.name(m - 1, s)).collect();
                return Err(Error::NotKan {
                    level: m,
                    horn: format!("Λ^{m}_{k} ({})", names.join(", ")),
                });
            }
        }
    }
    Ok(())
}

/// Homotopy classes of pointed spheres in a finite Kan complex.
#[derive(Debug, Clone)]
pub struct KanHomotopy {
    pub n: usize,
    /// For `n ≥ 1`: class of each pointed `n`-sphere (simplex id → class).
    /// For `n = 0`: class of each vertex.
    pub class_of: HashMap<usize, usize>,
    /// Representative simplex per class.
    pub representatives: Vec<usize>,
    /// Group structure for `n ≥ 1`.
    pub group: Option<FiniteGroup>,
}

impl KanHomotopy {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn class(&self, simplex: usize) -> Option<usize> {
        self.class_of.get(&simplex).copied()
    }
}

/// `π_n(X, base)` for a finite Kan complex, computed from pointed `n`-spheres
/// modulo homotopies through level `n + 1`. Requires depth at least `n + 1`;
/// the Kan condition is verified up to that level first.
pub fn pi_n_kan(
    x: &TruncatedSimplicialSet,
    base: Basepoint,
    n: usize,
    budget: &Budget,
) -> Result<KanHomotopy> {
    if x.depth() < n + 1 {
        return Err(Error::DepthTooSmall {
            have: x.depth(),
            need: n + 1,
            context: format!("π_{n} needs simplices through level {}", n + 1),
        });
    }
    if base.0 >= x.level_size(0) {
        return Err(Error::UnknownId {
            level: 0,
            id: base.0.to_string(),
        });
    }
    check_kan(x, n + 1, budget)?;
    if n == 0 {
        let comps = pi0_sset(x)?;
        let representatives = comps.representatives();
        return Ok(KanHomotopy {
            n,
            class_of: comps.class_of.iter().copied().enumerate().collect(),
            representatives,
            group: None,
        });
    }
    let base_lo = x.degenerate_vertex(base.0, n - 1);
    let base_n = x.degenerate_vertex(base.0, n);
    let spheres: Vec<usize> = (0..x.level_size(n))
        .filter(|&s| (0..=n).all(|i| x.face(n, i, s) == base_lo))
        .collect();
    let pos: HashMap<usize, usize> = spheres.iter().enumerate().map(|(p, &s)| (s, p)).collect();
    let mut uf = UnionFind::new(spheres.len());
    let top = n + 1;
    budget.charge(2 * x.level_size(top) as u64, "scanning homotopies")?;
    let mut products: HashMap<(usize, usize), usize> = HashMap::new();
    for z in 0..x.level_size(top) {
        // homotopy: d_i z = base for i < n, d_n z ~ d_{n+1} z
        if (0..n).all(|i| x.face(top, i, z) == base_n) {
            if let (Some(&a), Some(&b)) =
                (pos.get(&x.face(top, n, z)), pos.get(&x.face(top, n + 1, z)))
            {
                uf.union(a, b);
            }
        }
        // product: d_i w = base for i < n-1, then (d_{n-1}, d_{n+1}) ↦ d_n
        if (0..n - 1).all(|i| x.face(top, i, z) == base_n) {
            let (a, b, c) = (
                x.face(top, n - 1, z),
                x.face(top, n + 1, z),
                x.face(top, n, z),
            );
            if pos.contains_key(&a) && pos.contains_key(&b) && pos.contains_key(&c) {
                products.entry((a, b)).or_insert(c);
            }
        }
    }
    let (class, count) = uf.classes();
    let mut representatives = vec![usize::MAX; count];
    for (p, &c) in class.iter().enumerate() {
        if representatives[c] == usize::MAX {
            representatives[c] = spheres[p];
        }
    }
    let class_of: HashMap<usize, usize> = spheres
        .iter()
        .enumerate()
        .map(|(p, &s)| (s, class[p]))
        .collect();
    let mut mul = vec![vec![usize::MAX; count]; count];
    for (a, &ra) in representatives.iter().enumerate() {
        for (b, &rb) in representatives.iter().enumerate() {
            let Some(&c) = products.get(&(ra, rb)) else {
                return Err(Error::NotKan {
                    level: top,
                    horn: format!("product horn on ({}, {})", x.name(n, ra), x.name(n, rb)),
                });
            };
            mul[a][b] = class_of[&c];
        }
    }
    let labels = representatives
        .iter()
        .map(|&s| format!("[{}]", x.name(n, s)))
        .collect();
    let identity = class_of
        .get(&base_n)
        .copied()
        .ok_or_else(|| Error::Invalid("basepoint sphere missing".into()))?;
    let group = FiniteGroup {
        labels,
        mul,
        identity,
    };
    let problems = group.violations();
    if !problems.is_empty() {
        return invalid(format!(
            "homotopy classes do not form a group: {}",
            problems.join("; ")
        ));
    }
    Ok(KanHomotopy {
        n,
        class_of,
        representatives,
        group: Some(group),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{standard_complex, ComplexKind, TruncatedSimplicialSet};

    #[test]
    fn point_has_trivial_groups() {
        let pt = standard_complex(ComplexKind::Point, 0, None, 4).unwrap();
        for n in 1..=3 {
            let h = pi_n_kan(&pt, Basepoint(0), n, &Budget::new(1_000_000)).unwrap();
            assert!(h.group.unwrap().is_trivial());
        }
    }

    #[test]
    fn components() {
        let s = standard_complex(ComplexKind::Simplex, 3, None, 3).unwrap();
        assert_eq!(pi0_sset(&s).unwrap().count, 1);
        let b = standard_complex(ComplexKind::Boundary, 2, None, 2).unwrap();
        assert_eq!(pi0_sset(&b).unwrap().count, 1);
        let p = standard_complex(ComplexKind::Point, 0, None, 1).unwrap();
        let two = TruncatedSimplicialSet::disjoint_union(&[p.clone(), p]).unwrap();
        assert_eq!(pi0_sset(&two).unwrap().count, 2);
        let p0 = standard_complex(ComplexKind::Point, 0, None, 0).unwrap();
        assert!(pi0_sset(&p0).is_err());
    }

    #[test]
    fn simplex_is_not_kan() {
        let d1 = standard_complex(ComplexKind::Simplex, 1, None, 2).unwrap();
        assert!(matches!(
            check_kan(&d1, 2, &Budget::new(1000)),
            Err(Error::NotKan { .. })
        ));
        let b = standard_complex(ComplexKind::Boundary, 2, None, 2).unwrap();
        assert!(check_kan(&b, 2, &Budget::new(10_000)).is_err());
    }

    #[test]
    fn budget_is_reported() {
        let d2 = standard_complex(ComplexKind::Simplex, 2, None, 3).unwrap();
        assert!(matches!(
            check_kan(&d2, 3, &Budget::new(3)),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
