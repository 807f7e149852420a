use super::{SimplicialMap, TruncatedSimplicialSet};
use crate::error::{invalid, Result};
use crate::util::UnionFind;

/// A pushout square `B → D ← C` under a span `B ← A → C`.
#[derive(Debug, Clone)]
pub struct Pushout {
    pub object: TruncatedSimplicialSet,
    pub from_left: SimplicialMap,
    pub from_right: SimplicialMap,
}

/// A pullback `B ← P → C` over a cospan `B → Y ← C`.
#[derive(Debug, Clone)]
pub struct Pullback {
    pub object: TruncatedSimplicialSet,
    pub to_left: SimplicialMap,
    pub to_right: SimplicialMap,
    /// `pairs[n][p] = (b, c)`.
    pub pairs: Vec<Vec<(usize, usize)>>,
}

/// Levelwise pushout of sets with the induced operators.
pub fn pushout(f: &SimplicialMap, g: &SimplicialMap) -> Result<Pushout> {
    if f.source != g.source {
        return invalid("pushout needs maps with a shared source");
    }
    let (b, c) = (&f.target, &g.target);
    let depth = f.source.depth();
    // per level: union-find on B_n ⊔ C_n
    let mut class_of: Vec<Vec<usize>> = Vec::with_capacity(depth + 1);
    let mut reps: Vec<Vec<(bool, usize)>> = Vec::with_capacity(depth + 1);
    for n in 0..=depth {
        let nb = b.level_size(n);
        let mut uf = UnionFind::new(nb + c.level_size(n));
        for a in 0..f.source.level_size(n) {
            uf.union(f.apply(n, a), nb + g.apply(n, a));
        }
        let (class, count) = uf.classes();
        let mut r = vec![(false, 0); count];
        let mut seen = vec![false; count];
        for (x, &k) in class.iter().enumerate() {
            if !seen[k] {
                seen[k] = true;
                r[k] = if x < nb { (false, x) } else { (true, x - nb) };
            }
        }
        class_of.push(class);
        reps.push(r);
    }
    let nb: Vec<usize> = (0..=depth).map(|n| b.level_size(n)).collect();
    let cls = |n: usize, (right, x): (bool, usize)| -> usize {
        class_of[n][if right { nb[n] + x } else { x }]
    };
    let levels: Vec<Vec<usize>> = (0..=depth).map(|n| (0..reps[n].len()).collect()).collect();
    let object = TruncatedSimplicialSet::build(
        depth,
        levels,
        |n, &k| {
            let (right, x) = reps[n][k];
            if right {
                format!("C:{}", c.name(n, x))
            } else {
                format!("B:{}", b.name(n, x))
            }
        },
        |n, i, &k| {
            let (right, x) = reps[n][k];
            let y = if right {
                c.face(n, i, x)
            } else {
                b.face(n, i, x)
            };
            cls(n - 1, (right, y))
        },
        |n, i, &k| {
            let (right, x) = reps[n][k];
            let y = if right {
                c.degeneracy(n, i, x)
            } else {
                b.degeneracy(n, i, x)
            };
            cls(n + 1, (right, y))
        },
    )?;
    let from_left = SimplicialMap::unchecked(
        b.clone(),
        object.clone(),
        (0..=depth)
            .map(|n| (0..b.level_size(n)).map(|x| cls(n, (false, x))).collect())
            .collect(),
    );
    let from_right = SimplicialMap::unchecked(
        c.clone(),
        object.clone(),
        (0..=depth)
            .map(|n| (0..c.level_size(n)).map(|x| cls(n, (true, x))).collect())
            .collect(),
    );
    Ok(Pushout {
        object,
        from_left,
        from_right,
    })
}

/// Levelwise fiber product with the induced operators.
pub fn pullback(f: &SimplicialMap, g: &SimplicialMap) -> Result<Pullback> {
    if f.target != g.target {
        return invalid("pullback needs maps with a shared target");
    }
    let (b, c) = (&f.source, &g.source);
    let depth = b.depth();
    let pairs: Vec<Vec<(usize, usize)>> = (0..=depth)
        .map(|n| {
            let mut out = Vec::new();
            for x in 0..b.level_size(n) {
                for y in 0..c.level_size(n) {
                    if f.apply(n, x) == g.apply(n, y) {
                        out.push((x, y));
                    }
                }
            }
            out
        })
        .collect();
    let object = TruncatedSimplicialSet::build(
        depth,
        pairs.clone(),
        |n, &(x, y)| format!("({},{})", b.name(n, x), c.name(n, y)),
        |n, i, &(x, y)| (b.face(n, i, x), c.face(n, i, y)),
        |n, i, &(x, y)| (b.degeneracy(n, i, x), c.degeneracy(n, i, y)),
    )?;
    let to_left = SimplicialMap::unchecked(
        object.clone(),
        b.clone(),
        pairs
            .iter()
            .map(|l| l.iter().map(|p| p.0).collect())
            .collect(),
    );
    let to_right = SimplicialMap::unchecked(
        object.clone(),
        c.clone(),
        pairs
            .iter()
            .map(|l| l.iter().map(|p| p.1).collect())
            .collect(),
    );
    Ok(Pullback {
        object,
        to_left,
        to_right,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{standard_complex, validate_sset, ComplexKind};

    fn inclusion(sub: &TruncatedSimplicialSet, sup: &TruncatedSimplicialSet) -> SimplicialMap {
        let levels = (0..=sub.depth())
            .map(|n| sub.names(n).iter().map(|s| sup.id(n, s).unwrap()).collect())
            .collect();
        SimplicialMap::new(sub.clone(), sup.clone(), levels).unwrap()
    }

    fn to_point(x: &TruncatedSimplicialSet) -> SimplicialMap {
        let pt = standard_complex(ComplexKind::Point, 0, None, x.depth()).unwrap();
        let levels = (0..=x.depth()).map(|n| vec![0; x.level_size(n)]).collect();
        SimplicialMap::new(x.clone(), pt, levels).unwrap()
    }

    #[test]
    fn collapsing_boundary_of_interval_gives_circle() {
        let d = 3;
        let bd = standard_complex(ComplexKind::Boundary, 1, None, d).unwrap();
        let iv = standard_complex(ComplexKind::Simplex, 1, None, d).unwrap();
        let po = pushout(&inclusion(&bd, &iv), &to_point(&bd)).unwrap();
        let s1 = standard_complex(ComplexKind::Sphere, 1, None, d).unwrap();
        assert_eq!(po.object.level_sizes(), s1.level_sizes());
        assert!(validate_sset(&po.object).is_empty());
        assert!(po.from_left.violations().is_empty());
        assert!(po.from_right.violations().is_empty());
    }

    #[test]
    fn pushout_of_injections_counts() {
        let d = 2;
        let bd = standard_complex(ComplexKind::Boundary, 1, None, d).unwrap();
        let iv = standard_complex(ComplexKind::Simplex, 1, None, d).unwrap();
        let i = inclusion(&bd, &iv);
        let po = pushout(&i, &i).unwrap();
        for n in 0..=d {
            assert_eq!(
                po.object.level_size(n),
                2 * iv.level_size(n) - bd.level_size(n)
            );
        }
    }

    #[test]
    fn pullback_of_distinct_vertices_is_empty() {
        let d = 2;
        let iv = standard_complex(ComplexKind::Simplex, 1, None, d).unwrap();
        let pt = standard_complex(ComplexKind::Point, 0, None, d).unwrap();
        let at = |v: usize| {
            let levels = (0..=d).map(|n| vec![iv.degenerate_vertex(v, n)]).collect();
            SimplicialMap::new(pt.clone(), iv.clone(), levels).unwrap()
        };
        let pb = pullback(&at(0), &at(1)).unwrap();
        assert_eq!(pb.object.total_size(), 0);
        let pb = pullback(&at(0), &at(0)).unwrap();
        assert_eq!(pb.object.level_sizes(), vec![1; d + 1]);
    }
}
