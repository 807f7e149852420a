//! The nerve of a 2-groupoid.
//!
//! An `n`-simplex is a family of objects `v_i`, 1-cells `e_ij: v_j → v_i`
//! (`i < j`) and 2-cells `α_ijk: e_ij ∘ e_jk ⇒ e_ik` (`i < j < k`) with the
//! cocycle `α_ijl · (e_ij * α_jkl) = α_ikl · (α_ijk * e_kl)` on every
//! 4-subset. Above level 3 this is the coskeleton of the 3-truncation.

use std::collections::HashMap;

use super::TwoGroupoid;
use crate::budget::Budget;
use crate::error::Result;
use crate::sset::TruncatedSimplicialSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NerveSimplex {
    pub vertices: Vec<usize>,
    /// Indexed by pairs `i < j` in lexicographic order.
    pub edges: Vec<usize>,
    /// Indexed by triples `i < j < k` in lexicographic order.
    pub cells: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct NerveComplex {
    pub sset: TruncatedSimplicialSet,
    pub simplices: Vec<Vec<NerveSimplex>>,
    lookup: Vec<HashMap<NerveSimplex, usize>>,
}

impl NerveComplex {
    pub fn id_of(&self, n: usize, s: &NerveSimplex) -> Option<usize> {
        self.lookup[n].get(s).copied()
    }
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut t = vec![vec![usize::MAX; n + 1]; n + 1];
    let mut c = 0;
    for i in 0..=n {
        for j in i + 1..=n {
            t[i][j] = c;
            c += 1;
        }
    }
    t
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// The simplex obtained by reindexing along `σ: [m] → [n]` (order preserving).
fn reindex(k: &TwoGroupoid, s: &NerveSimplex, n: usize, sigma: &[usize]) -> NerveSimplex {
    let m = sigma.len() - 1;
    let p_old = pair_index(n);
    let vertices: Vec<usize> = sigma.iter().map(|&a| s.vertices[a]).collect();
    let edge = |a: usize, b: usize| -> usize {
        if a == b {
            k.one.identity(s.vertices[a])
        } else {
            s.edges[p_old[a][b]]
        }
    };
    let mut edges = Vec::new();
    for i in 0..=m {
        for j in i + 1..=m {
            edges.push(edge(sigma[i], sigma[j]));
        }
    }
    let t_old: HashMap<(usize, usize, usize), usize> = triples(n)
        .into_iter()
        .enumerate()
        .map(|(c, t)| (t, c))
        .collect();
    let cells = triples(m)
        .into_iter()
        .map(|(i, j, l)| {
            let (a, b, c) = (sigma[i], sigma[j], sigma[l]);
            if a == b || b == c {
                k.identities[edge(a, c)]
            } else {
                s.cells[t_old[&(a, b, c)]]
            }
        })
        .collect();
    NerveSimplex {
        vertices,
        edges,
        cells,
    }
}

/// Whether the cocycle holds on `(i, j, l, m)` given accessors.
fn cocycle(
    k: &TwoGroupoid,
    edge: impl Fn(usize, usize) -> usize,
    cell: impl Fn(usize, usize, usize) -> usize,
    (i, j, l, m): (usize, usize, usize, usize),
) -> bool {
    let lhs = k
        .whisker_left(edge(i, j), cell(j, l, m))
        .and_then(|w| k.vertical(cell(i, j, m), w));
    let rhs = k
        .whisker_right(cell(i, j, l), edge(l, m))
        .and_then(|w| k.vertical(cell(i, l, m), w));
    lhs.is_some() && lhs == rhs
}

/// The nerve through level `depth`.
pub fn nerve(k: &TwoGroupoid, depth: usize, budget: &Budget) -> Result<NerveComplex> {
    let mut levels: Vec<Vec<NerveSimplex>> = vec![(0..k.object_count())
        .map(|v| NerveSimplex {
            vertices: vec![v],
            edges: vec![],
            cells: vec![],
        })
        .collect()];
    for n in 1..=depth {
        let mut next = Vec::new();
        let p_new = pair_index(n);
        let t_new = triples(n);
        let t_pos: HashMap<(usize, usize, usize), usize> = t_new
            .iter()
            .copied()
            .enumerate()
            .map(|(c, t)| (t, c))
            .collect();
        // the new cells (i, j, n), in lexicographic order
        let new_cells: Vec<(usize, usize)> = t_new
            .iter()
            .filter(|t| t.2 == n)
            .map(|t| (t.0, t.1))
            .collect();
        for base in &levels[n - 1] {
            for v in 0..k.object_count() {
                // choose e_{i n} for i = 0..n-1
                let mut choices: Vec<Vec<usize>> = vec![Vec::new()];
                for i in 0..n {
                    let opts = k.one.hom(v, base.vertices[i]);
                    choices = choices
                        .into_iter()
                        .flat_map(|c| {
                            opts.iter().map(move |&e| {
                                let mut d = c.clone();
                                d.push(e);
                                d
                            })
                        })
                        .collect();
                }
                budget.charge(choices.len() as u64, "enumerating nerve edges")?;
                for new_edges in choices {
                    let mut vertices = base.vertices.clone();
                    vertices.push(v);
                    let mut edges = vec![0; n * (n + 1) / 2];
                    let p_old = pair_index(n - 1);
                    for i in 0..n {
                        for j in i + 1..n {
                            edges[p_new[i][j]] = base.edges[p_old[i][j]];
                        }
                        edges[p_new[i][n]] = new_edges[i];
                    }
                    let mut cells = vec![usize::MAX; t_new.len()];
                    for (c, t) in triples(n - 1).into_iter().enumerate() {
                        cells[t_pos[&t]] = base.cells[c];
                    }
                    let edge = |a: usize, b: usize| edges[p_new[a][b]];
                    // backtrack over new cells
                    fn rec(
                        k: &TwoGroupoid,
                        n: usize,
                        idx: usize,
                        new_cells: &[(usize, usize)],
                        cells: &mut Vec<usize>,
                        t_pos: &HashMap<(usize, usize, usize), usize>,
                        edge: &dyn Fn(usize, usize) -> usize,
                        budget: &Budget,
                        out: &mut Vec<Vec<usize>>,
                    ) -> Result<()> {
                        if idx == new_cells.len() {
                            out.push(cells.clone());
                            return Ok(());
                        }
                        let (i, j) = new_cells[idx];
                        let source = k
                            .one
                            .compose(edge(i, j), edge(j, n))
                            .expect("composable edges");
                        let cands = k.cells_between(source, edge(i, n));
                        budget.charge(cands.len() as u64, "enumerating nerve 2-cells")?;
                        for c in cands {
                            cells[t_pos[&(i, j, n)]] = c;
                            // 4-subsets (a, b, d, n) all of whose new cells are now set
                            let ok = (0..n).all(|a| {
                                (a + 1..n).all(|b| {
                                    (b + 1..n).all(|d| {
                                        let set = |x: usize, y: usize| {
                                            cells[t_pos[&(x, y, n)]] != usize::MAX
                                        };
                                        if !(set(a, b) && set(b, d) && set(a, d)) {
                                            return true;
                                        }
                                        cocycle(
                                            k,
                                            edge,
                                            |x, y, z| cells[t_pos[&(x, y, z)]],
                                            (a, b, d, n),
                                        )
                                    })
                                })
                            });
                            if ok {
                                rec(k, n, idx + 1, new_cells, cells, t_pos, edge, budget, out)?;
                            }
                        }
                        cells[t_pos[&(i, j, n)]] = usize::MAX;
                        Ok(())
                    }
                    let mut found = Vec::new();
                    rec(
                        k, n, 0, &new_cells, &mut cells, &t_pos, &edge, budget, &mut found,
                    )?;
                    for cells in found {
                        next.push(NerveSimplex {
                            vertices: vertices.clone(),
                            edges: edges.clone(),
                            cells,
                        });
                    }
                }
            }
        }
        levels.push(next);
    }
    let name = |n: usize, s: &NerveSimplex| -> String {
        match n {
            0 => k.one.objects[s.vertices[0]].clone(),
            1 => k.one.arrows[s.edges[0]].name.clone(),
            _ => {
                let e: Vec<&str> = s
                    .edges
                    .iter()
                    .map(|&f| k.one.arrows[f].name.as_str())
                    .collect();
                let c: Vec<&str> = s.cells.iter().map(|&a| k.cells[a].name.as_str()).collect();
                format!("<{}|{}>", e.join(","), c.join(","))
            }
        }
    };
    let face = |n: usize, i: usize, s: &NerveSimplex| {
        let sigma: Vec<usize> = (0..=n).filter(|&j| j != i).collect();
        reindex(k, s, n, &sigma)
    };
    let degeneracy = |n: usize, i: usize, s: &NerveSimplex| {
        let sigma: Vec<usize> = (0..=n + 1)
            .map(|j| if j <= i { j } else { j - 1 })
            .collect();
        reindex(k, s, n, &sigma)
    };
    let sset = TruncatedSimplicialSet::build(depth, levels.clone(), name, face, degeneracy)?;
    let lookup = levels
        .iter()
        .map(|l| l.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect())
        .collect();
    Ok(NerveComplex {
        sset,
        simplices: levels,
        lookup,
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::sset::validate_sset;

    #[test]
    fn level_counts() {
        let b = Budget::new(10_000_000);
        assert_eq!(
            nerve(&point(), 3, &b).unwrap().sset.level_sizes(),
            vec![1, 1, 1, 1]
        );
        assert_eq!(nerve(&interval(), 2, &b).unwrap().sset.level_size(1), 4);
        let z3 = nerve(&cyclic_two_cells(3), 3, &b).unwrap();
        assert_eq!(z3.sset.level_sizes(), vec![1, 1, 3, 27]);
    }

    #[test]
    fn nerves_validate() {
        let b = Budget::new(10_000_000);
        for k in [cyclic_two_cells(2), z2_on_z3(), interval(), identity_z2()] {
            let n = nerve(&k, 3, &b).unwrap();
            assert!(
                validate_sset(&n.sset).is_empty(),
                "{:?}",
                validate_sset(&n.sset)
            );
        }
    }
}
