//! Combinatorial invariants that do not need the Kan condition: the
//! edge-path presentation of `π_1` and `π_2` as `H_2` of the universal cover.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{pi0_sset, Basepoint, TruncatedSimplicialSet};
use crate::algebra::smith_diagonal;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::presentation::{Letter, PresentedGroup, Word};

/// The edge-path group of the component of a basepoint, presented on the
/// nondegenerate edges outside a spanning tree.
#[derive(Debug, Clone)]
pub struct EdgePathGroup {
    pub presentation: PresentedGroup,
    /// Word of each edge (all edges of level 1; empty for tree, degenerate
    /// and out-of-component edges).
    pub edge_word: Vec<Word>,
    /// Generator index → edge id.
    pub generator_edge: Vec<usize>,
    /// Vertices in the component of the basepoint.
    pub component: Vec<usize>,
}

impl EdgePathGroup {
    pub fn word_of_edge(&self, e: usize) -> &[Letter] {
        &self.edge_word[e]
    }
}

/// Edge-path presentation: one generator per non-tree nondegenerate edge,
/// one relator `e12 · e01 · e02⁻¹` per nondegenerate 2-simplex, where `eij`
/// is the edge between vertices `i < j` read from vertex `j` to vertex `i`.
pub fn edge_path_group(x: &TruncatedSimplicialSet, base: Basepoint) -> Result<EdgePathGroup> {
    if x.depth() < 2 {
        return Err(Error::DepthTooSmall {
            have: x.depth(),
            need: 2,
            context: "edge-path group needs 2-simplices".into(),
        });
    }
    let comps = pi0_sset(x)?;
    let home = comps.class_of[base.0];
    let component: Vec<usize> = (0..x.level_size(0))
        .filter(|&v| comps.class_of[v] == home)
        .collect();
    let edges: Vec<usize> = x
        .nondegenerate(1)
        .into_iter()
        .filter(|&e| comps.class_of[x.face(1, 0, e)] == home)
        .collect();
    // spanning tree by BFS from the basepoint
    let mut in_tree = BTreeSet::new();
    let mut seen = BTreeSet::from([base.0]);
    let mut queue = VecDeque::from([base.0]);
    while let Some(v) = queue.pop_front() {
        for &e in &edges {
            let (a, b) = (x.face(1, 0, e), x.face(1, 1, e));
            let other = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if seen.insert(other) {
                in_tree.insert(e);
                queue.push_back(other);
            }
        }
    }
    let mut edge_word = vec![Vec::new(); x.level_size(1)];
    let mut generator_edge = Vec::new();
    let mut names = Vec::new();
    for &e in &edges {
        if !in_tree.contains(&e) {
            edge_word[e] = vec![Letter::new(generator_edge.len())];
            generator_edge.push(e);
            names.push(x.name(1, e).to_string());
        }
    }
    let mut relators = Vec::new();
    for s in x.nondegenerate(2) {
        if comps.class_of[x.vertex(2, s, 0)] != home {
            continue;
        }
        let mut r = edge_word[x.face(2, 0, s)].clone();
        r.extend(edge_word[x.face(2, 2, s)].iter().copied());
        r.extend(crate::presentation::invert_word(
            &edge_word[x.face(2, 1, s)],
        ));
        relators.push(r);
    }
    Ok(EdgePathGroup {
        presentation: PresentedGroup::new(names, relators),
        edge_word,
        generator_edge,
        component,
    })
}

/// `π_2` of the component of a basepoint, as `H_2` of the universal cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecondHomotopy {
    pub pi1_order: usize,
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl SecondHomotopy {
    /// Order when finite.
    pub fn order(&self) -> Option<u64> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    /// The group as a table when finite (direct product of cyclic factors).
    pub fn to_group(&self) -> Option<FiniteGroup> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().fold(FiniteGroup::trivial(), |g, &d| {
            g.product(&FiniteGroup::cyclic(d as usize))
        }))
    }
}

/// Computes `π_2(X, base)` via Hurewicz on the universal cover of the
/// 3-skeleton. Needs depth at least 3 and a finite `π_1` (enumerated within
/// the budget); `Ok(None)` when `π_1` could not be enumerated.
pub fn second_homotopy_order(
    x: &TruncatedSimplicialSet,
    base: Basepoint,
    budget: &Budget,
) -> Result<Option<SecondHomotopy>> {
    if x.depth() < 3 {
        return Err(Error::DepthTooSmall {
            have: x.depth(),
            need: 3,
            context: "π_2 via the universal cover needs 3-simplices".into(),
        });
    }
    let epg = edge_path_group(x, base)?;
    let Some((group, table)) = epg.presentation.to_finite(budget)? else {
        return Ok(None);
    };
    let order = table.order();
    let label: Vec<usize> = epg.edge_word.iter().map(|w| table.evaluate(w)).collect();
    let in_comp: BTreeSet<usize> = epg.component.iter().copied().collect();
    let cells = |n: usize| -> Vec<usize> {
        x.nondegenerate(n)
            .into_iter()
            .filter(|&s| in_comp.contains(&x.vertex(n, s, 0)))
            .collect()
    };
    let (c1, c2, c3) = (cells(1), cells(2), cells(3));
    let position = |list: &[usize]| -> std::collections::HashMap<usize, usize> {
        list.iter().enumerate().map(|(i, &s)| (s, i)).collect()
    };
    let (p1, p2) = (position(&c1), position(&c2));
    // last edge of an n-simplex (between vertices n-1 and n)
    let last_edge = |n: usize, s: usize| -> usize {
        (0..n - 1)
            .fold((n, s), |(lvl, cur), _| (lvl - 1, x.face(lvl, 0, cur)))
            .1
    };
    let boundary = |n: usize,
                    s: usize,
                    g: usize,
                    pos: &std::collections::HashMap<usize, usize>,
                    width: usize|
     -> Vec<i128> {
        let mut row = vec![0i128; width * order];
        for i in 0..=n {
            let f = x.face(n, i, s);
            let Some(&k) = pos.get(&f) else { continue };
            let sheet = if i < n {
                g
            } else {
                group.op(g, label[last_edge(n, s)])
            };
            row[k * order + sheet] += if i % 2 == 0 { 1 } else { -1 };
        }
        row
    };
    budget.charge(
        ((c2.len() + c3.len()) * order) as u64,
        "building cover chains",
    )?;
    let d2: Vec<Vec<i128>> = c2
        .iter()
        .flat_map(|&s| (0..order).map(move |g| (s, g)))
        .map(|(s, g)| boundary(2, s, g, &p1, c1.len()))
        .collect();
    let d3: Vec<Vec<i128>> = c3
        .iter()
        .flat_map(|&s| (0..order).map(move |g| (s, g)))
        .map(|(s, g)| boundary(3, s, g, &p2, c2.len()))
        .collect();
    let rank2 = smith_diagonal(d2, c1.len() * order)?.rank();
    let snf3 = smith_diagonal(d3, c2.len() * order)?;
    let mut torsion = snf3.torsion();
    torsion.sort_unstable();
    Ok(Some(SecondHomotopy {
        pi1_order: order,
        free_rank: c2.len() * order - rank2 - snf3.rank(),
        torsion,
    }))
}
