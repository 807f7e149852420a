//! Lifting problems between presheaves of simplicial sets, the generating
//! inclusions into representables, and trivial fibrations tested against them.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::presheaf::{y_u, NaturalTransformation, Presheaf};
use super::FiniteSite;
use crate::budget::Budget;
use crate::error::{invalid, Error, Result};
use crate::presentation::Verdict;
use crate::sset::{
    for_each_map, seq_name, sequences, standard_complex, ComplexKind, SimplicialMap,
    TruncatedSimplicialSet,
};

type Sset = TruncatedSimplicialSet;
type Tables = Vec<Vec<usize>>;

/// A commutative square `top: A → X`, `bottom: B → Y` over `i: A → B` and
/// `p: X → Y`, asking for `h: B → X` with `h ∘ i = top` and `p ∘ h = bottom`.
#[derive(Debug, Clone)]
pub struct LiftingProblem {
    pub a: Presheaf<Sset>,
    pub b: Presheaf<Sset>,
    pub x: Presheaf<Sset>,
    pub y: Presheaf<Sset>,
    pub i: NaturalTransformation<Sset>,
    pub p: NaturalTransformation<Sset>,
    pub top: NaturalTransformation<Sset>,
    pub bottom: NaturalTransformation<Sset>,
}

impl LiftingProblem {
    pub fn violations(&self, c: &FiniteSite) -> Vec<String> {
        let mut out = Vec::new();
        for (name, p) in [
            ("A", &self.a),
            ("B", &self.b),
            ("X", &self.x),
            ("Y", &self.y),
        ] {
            out.extend(p.violations(c).into_iter().map(|v| format!("{name}: {v}")));
        }
        let arrows = [
            ("i", &self.i, &self.a, &self.b),
            ("p", &self.p, &self.x, &self.y),
            ("top", &self.top, &self.a, &self.x),
            ("bottom", &self.bottom, &self.b, &self.y),
        ];
        for (name, m, from, to) in arrows {
            out.extend(
                m.violations(c, from, to)
                    .into_iter()
                    .map(|v| format!("{name}: {v}")),
            );
        }
        if out.is_empty() && self.top.then(&self.p).ok() != self.i.then(&self.bottom).ok() {
            out.push("the square does not commute".into());
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LiftOutcome {
    Lift(NaturalTransformation<Sset>),
    /// The search space was exhausted.
    NoLift,
    BudgetExceeded,
}

/// Calls `visit` on every natural transformation `from → to` (as level tables
/// per object) agreeing with `fixed`. Objects are handled in order; maps
/// already chosen pin entries of later components through naturality, and
/// `accept(u, tables)` prunes a component as soon as it is chosen.
pub(crate) fn for_each_presheaf_map(
    c: &FiniteSite,
    from: &Presheaf<Sset>,
    to: &Presheaf<Sset>,
    fixed: &[Vec<Vec<Option<usize>>>],
    budget: &Budget,
    accept: &dyn Fn(usize, &[Vec<usize>]) -> bool,
    visit: &mut dyn FnMut(&[Tables]) -> Result<bool>,
) -> Result<()> {
    struct Ctx<'a> {
        c: &'a FiniteSite,
        from: &'a Presheaf<Sset>,
        to: &'a Presheaf<Sset>,
        fixed: &'a [Vec<Vec<Option<usize>>>],
        budget: &'a Budget,
        accept: &'a dyn Fn(usize, &[Vec<usize>]) -> bool,
    }

    // naturality along f: h_src(from.r_f(s)) = to.r_f(h_tgt(s))
    fn natural(ctx: &Ctx, f: usize, h: &[Tables]) -> bool {
        let (s, t) = (ctx.c.source(f), ctx.c.target(f));
        let (rf, rt) = (&ctx.from.restrictions[f], &ctx.to.restrictions[f]);
        (0..h[t].len())
            .all(|n| (0..h[t][n].len()).all(|x| h[s][n][rf.apply(n, x)] == rt.apply(n, h[t][n][x])))
    }

    fn rec(
        ctx: &Ctx,
        u: usize,
        h: &mut Vec<Tables>,
        visit: &mut dyn FnMut(&[Tables]) -> Result<bool>,
    ) -> Result<bool> {
        if u == ctx.c.object_count() {
            return visit(h);
        }
        let mut pinned = ctx.fixed[u].clone();
        for f in 0..ctx.c.arrow_count() {
            let (s, t) = (ctx.c.source(f), ctx.c.target(f));
            if s != u || t >= u {
                continue;
            }
            let (rf, rt) = (&ctx.from.restrictions[f], &ctx.to.restrictions[f]);
            for n in 0..h[t].len() {
                for x in 0..h[t][n].len() {
                    let (at, want) = (rf.apply(n, x), rt.apply(n, h[t][n][x]));
                    match pinned[n][at] {
                        Some(v) if v != want => return Ok(true),
                        _ => pinned[n][at] = Some(want),
                    }
                }
            }
        }
        let mut keep_going = true;
        for_each_map(
            &ctx.from.values[u],
            &ctx.to.values[u],
            Some(&pinned),
            ctx.budget,
            &mut |tables| {
                if !(ctx.accept)(u, tables) {
                    return Ok(true);
                }
                h[u] = tables.to_vec();
                let settled = (0..ctx.c.arrow_count()).all(|f| {
                    let (s, t) = (ctx.c.source(f), ctx.c.target(f));
                    s.max(t) != u || natural(ctx, f, h)
                });
                if settled && !rec(ctx, u + 1, h, visit)? {
                    keep_going = false;
                    return Ok(false);
                }
                Ok(true)
            },
        )?;
        h[u] = Vec::new();
        Ok(keep_going)
    }

    let ctx = Ctx {
        c,
        from,
        to,
        fixed,
        budget,
        accept,
    };
    let mut h = vec![Vec::new(); c.object_count()];
    rec(&ctx, 0, &mut h, visit).map(|_| ())
}

/// Number of natural transformations `from → to`.
pub fn count_presheaf_maps(
    c: &FiniteSite,
    from: &Presheaf<Sset>,
    to: &Presheaf<Sset>,
    budget: &Budget,
) -> Result<u64> {
    let mut count = 0;
    for_each_presheaf_map(
        c,
        from,
        to,
        &unfixed(from),
        budget,
        &|_, _| true,
        &mut |_| {
            count += 1;
            Ok(true)
        },
    )?;
    Ok(count)
}

fn unfixed(p: &Presheaf<Sset>) -> Vec<Vec<Vec<Option<usize>>>> {
    p.values
        .iter()
        .map(|v| {
            (0..=v.depth())
                .map(|n| vec![None; v.level_size(n)])
                .collect()
        })
        .collect()
}

fn to_transformation(
    from: &Presheaf<Sset>,
    to: &Presheaf<Sset>,
    h: &[Tables],
) -> Result<NaturalTransformation<Sset>> {
    let components = h
        .iter()
        .enumerate()
        .map(|(u, t)| SimplicialMap::new(from.values[u].clone(), to.values[u].clone(), t.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(NaturalTransformation { components })
}

/// Searches for a lift, preferring nondegenerate images.
pub fn solve_lifting(
    c: &FiniteSite,
    problem: &LiftingProblem,
    budget: &Budget,
) -> Result<LiftOutcome> {
    if let Some(v) = problem.violations(c).first() {
        return invalid(format!("not a lifting problem: {v}"));
    }
    let mut fixed = unfixed(&problem.b);
    for u in 0..c.object_count() {
        let (i, top) = (&problem.i.components[u], &problem.top.components[u]);
        for (n, level) in fixed[u].iter_mut().enumerate() {
            for a in 0..problem.a.values[u].level_size(n) {
                level[i.apply(n, a)] = Some(top.apply(n, a));
            }
        }
    }
    let accept = |u: usize, t: &[Vec<usize>]| {
        let (p, bottom) = (&problem.p.components[u], &problem.bottom.components[u]);
        t.iter().enumerate().all(|(n, level)| {
            level
                .iter()
                .enumerate()
                .all(|(b, &x)| p.apply(n, x) == bottom.apply(n, b))
        })
    };
    let mut found = None;
    let run = for_each_presheaf_map(
        c,
        &problem.b,
        &problem.x,
        &fixed,
        budget,
        &accept,
        &mut |h| {
            found = Some(h.to_vec());
            Ok(false)
        },
    );
    match run {
        Err(Error::BudgetExceeded { .. }) => Ok(LiftOutcome::BudgetExceeded),
        Err(e) => Err(e),
        Ok(()) => match found {
            Some(h) => Ok(LiftOutcome::Lift(to_transformation(
                &problem.b, &problem.x, &h,
            )?)),
            None => Ok(LiftOutcome::NoLift),
        },
    }
}

/// A subpresheaf `K ⊆ Δ^n_U` and its inclusion.
#[derive(Debug, Clone)]
pub struct Inclusion {
    pub name: String,
    pub object: usize,
    pub n: usize,
    pub sub: Presheaf<Sset>,
    pub ambient: Presheaf<Sset>,
    pub inclusion: NaturalTransformation<Sset>,
}

impl Inclusion {
    pub fn is_identity(&self) -> bool {
        self.inclusion.components.iter().all(|m| m.is_iso())
    }
}

/// A subcomplex of `Δ^n`, as the set of vertex sets of its nondegenerate simplices.
type Subcomplex = BTreeSet<BTreeSet<usize>>;

fn subcomplexes(n: usize) -> Vec<Subcomplex> {
    let faces: Vec<BTreeSet<usize>> = (1u32..1 << (n + 1))
        .map(|m| (0..=n).filter(|&v| m & (1 << v) != 0).collect())
        .collect();
    (0u64..1 << faces.len())
        .map(|m| {
            faces
                .iter()
                .enumerate()
                .filter(|(i, _)| m & (1 << i) != 0)
                .map(|(_, f)| f.clone())
                .collect::<Subcomplex>()
        })
        .filter(|k| {
            k.iter().all(|f| {
                f.len() == 1
                    || f.iter().all(|v| {
                        let mut g = f.clone();
                        g.remove(v);
                        k.contains(&g)
                    })
            })
        })
        .collect()
}

fn describe(n: usize, k: &Subcomplex) -> String {
    let maximal: Vec<String> = k
        .iter()
        .filter(|f| !k.iter().any(|g| g.len() > f.len() && f.is_subset(g)))
        .map(|f| f.iter().map(|v| v.to_string()).collect())
        .collect();
    if maximal.is_empty() {
        "∅".into()
    } else if k.len() == (1 << (n + 1)) - 1 {
        format!("Δ^{n}")
    } else {
        maximal.join("|")
    }
}

/// Level tables of the inclusion of `k` into `Δ^n` at `depth`, and `k` itself.
fn sub_simplex(n: usize, k: &Subcomplex, depth: usize) -> Result<(Sset, Tables)> {
    let image = |s: &Vec<usize>| s.iter().copied().collect::<BTreeSet<usize>>();
    let levels: Vec<Vec<Vec<usize>>> = (0..=depth)
        .map(|m| {
            sequences(n, m)
                .into_iter()
                .filter(|s| k.contains(&image(s)))
                .collect()
        })
        .collect();
    let positions: Vec<HashMap<Vec<usize>, usize>> = (0..=depth)
        .map(|m| {
            sequences(n, m)
                .into_iter()
                .enumerate()
                .map(|(i, s)| (s, i))
                .collect()
        })
        .collect();
    let tables = levels
        .iter()
        .enumerate()
        .map(|(m, l)| l.iter().map(|s| positions[m][s]).collect())
        .collect();
    let sub = Sset::build(
        depth,
        levels,
        |_, s: &Vec<usize>| seq_name(n, s),
        |_, i, s| {
            let mut t = s.clone();
            t.remove(i);
            t
        },
        |_, i, s| {
            let mut t = s.clone();
            t.insert(i, s[i]);
            t
        },
    )?;
    Ok((sub, tables))
}

/// Every subpresheaf of `Δ^n_U = y_U(Δ^n)`, the identity included. A
/// subpresheaf picks a subcomplex `K_φ ⊆ Δ^n` per arrow `φ` into `U` with
/// `K_φ ⊆ K_{φ∘g}`.
pub fn generating_inclusions(
    c: &FiniteSite,
    u: usize,
    n: usize,
    depth: usize,
    budget: &Budget,
) -> Result<Vec<Inclusion>> {
    if n > 3 {
        return invalid("generating inclusions are enumerated for n ≤ 3");
    }
    if u >= c.object_count() {
        return Err(Error::UnknownId {
            level: 0,
            id: format!("object {u}"),
        });
    }
    let delta = standard_complex(ComplexKind::Simplex, n, None, depth)?;
    let ambient = y_u(c, &delta, u)?;
    let arrows = c.arrows_into(u);
    let pos: BTreeMap<usize, usize> = arrows.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let subs = subcomplexes(n);
    // pairs (φ, φ∘g) that must nest
    let mut below: Vec<Vec<usize>> = vec![Vec::new(); arrows.len()];
    for (i, &phi) in arrows.iter().enumerate() {
        for g in 0..c.arrow_count() {
            if let Some(h) = c.compose(phi, g) {
                below[i].push(pos[&h]);
            }
        }
    }
    let mut choices: Vec<Vec<usize>> = Vec::new();
    let mut cur = vec![usize::MAX; arrows.len()];
    fn rec(
        i: usize,
        cur: &mut Vec<usize>,
        subs: &[Subcomplex],
        below: &[Vec<usize>],
        budget: &Budget,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        if i == cur.len() {
            out.push(cur.clone());
            return Ok(());
        }
        budget.charge(subs.len() as u64, "enumerating subpresheaves")?;
        for k in 0..subs.len() {
            cur[i] = k;
            let nested = (0..=i).all(|j| {
                below[j]
                    .iter()
                    .all(|&h| h > i || subs[cur[j]].is_subset(&subs[cur[h]]))
                    && (j == i
                        || below[i]
                            .iter()
                            .all(|&h| h > i || subs[cur[i]].is_subset(&subs[cur[h]])))
            });
            if nested {
                rec(i + 1, cur, subs, below, budget, out)?;
            }
        }
        cur[i] = usize::MAX;
        Ok(())
    }
    rec(0, &mut cur, &subs, &below, budget, &mut choices)?;

    let homs: Vec<Vec<usize>> = (0..c.object_count()).map(|v| c.hom(v, u)).collect();
    choices
        .into_iter()
        .map(|choice| {
            let mut values = Vec::new();
            let mut components = Vec::new();
            for (v, hom) in homs.iter().enumerate() {
                let parts = hom
                    .iter()
                    .map(|phi| sub_simplex(n, &subs[choice[pos[phi]]], depth))
                    .collect::<Result<Vec<_>>>()?;
                let value = if parts.is_empty() {
                    Sset::empty(depth)
                } else {
                    Sset::disjoint_union(&parts.iter().map(|p| p.0.clone()).collect::<Vec<_>>())?
                };
                let levels = (0..=depth)
                    .map(|m| {
                        let size = delta.level_size(m);
                        parts
                            .iter()
                            .enumerate()
                            .flat_map(|(k, p)| p.1[m].iter().map(move |&s| k * size + s))
                            .collect()
                    })
                    .collect();
                components.push(SimplicialMap::new(
                    value.clone(),
                    ambient.values[v].clone(),
                    levels,
                )?);
                values.push(value);
            }
            // restrictions are those of Δ^n_U, read back through the inclusions
            let restrictions = (0..c.arrow_count())
                .map(|g| {
                    let (w, v) = (c.source(g), c.target(g));
                    let levels = (0..=depth)
                        .map(|m| {
                            let back: HashMap<usize, usize> = components[w].levels[m]
                                .iter()
                                .enumerate()
                                .map(|(i, &s)| (s, i))
                                .collect();
                            components[v].levels[m]
                                .iter()
                                .map(|&s| back[&ambient.restrictions[g].apply(m, s)])
                                .collect()
                        })
                        .collect();
                    SimplicialMap::new(values[v].clone(), values[w].clone(), levels)
                })
                .collect::<Result<Vec<_>>>()?;
            let name = format!(
                "{{{}}} ⊆ Δ^{n}_{}",
                arrows
                    .iter()
                    .enumerate()
                    .map(|(i, &phi)| format!(
                        "{}:{}",
                        c.arrows[phi].name,
                        describe(n, &subs[choice[i]])
                    ))
                    .collect::<Vec<_>>()
                    .join(","),
                c.objects[u]
            );
            Ok(Inclusion {
                name,
                object: u,
                n,
                sub: Presheaf {
                    values,
                    restrictions,
                },
                ambient: ambient.clone(),
                inclusion: NaturalTransformation { components },
            })
        })
        .collect()
}

/// Outcome of testing a map against every generating inclusion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationReport {
    pub verdict: Verdict,
    /// Lifting squares solved.
    pub squares: u64,
    pub witness: Option<String>,
}

/// Whether `p: X → Y` has the right lifting property against every
/// generating inclusion `K ⊆ Δ^n_U` with `n ≤ n_max`.
pub fn is_trivial_fibration(
    c: &FiniteSite,
    x: &Presheaf<Sset>,
    y: &Presheaf<Sset>,
    p: &NaturalTransformation<Sset>,
    n_max: usize,
    budget: &Budget,
) -> Result<FibrationReport> {
    if let Some(v) = p.violations(c, x, y).first() {
        return invalid(format!("not a map of presheaves: {v}"));
    }
    let depth = x.values.first().map_or(0, |v| v.depth());
    let mut report = FibrationReport {
        verdict: Verdict::Yes,
        squares: 0,
        witness: None,
    };
    let attempt = |report: &mut FibrationReport| -> Result<()> {
        for u in 0..c.object_count() {
            for n in 0..=n_max.min(depth) {
                for inc in generating_inclusions(c, u, n, depth, budget)? {
                    if inc.is_identity() {
                        continue;
                    }
                    let accept = |_: usize, _: &[Vec<usize>]| true;
                    let mut bottoms = Vec::new();
                    for_each_presheaf_map(
                        c,
                        &inc.ambient,
                        y,
                        &unfixed(&inc.ambient),
                        budget,
                        &accept,
                        &mut |h| {
                            bottoms.push(h.to_vec());
                            Ok(true)
                        },
                    )?;
                    let mut failure = None;
                    for_each_presheaf_map(
                        c,
                        &inc.sub,
                        x,
                        &unfixed(&inc.sub),
                        budget,
                        &accept,
                        &mut |top| {
                            for bottom in &bottoms {
                                let commutes = (0..c.object_count()).all(|v| {
                                    (0..=depth).all(|m| {
                                        top[v][m].iter().enumerate().all(|(a, &t)| {
                                            p.components[v].apply(m, t)
                                                == bottom[v][m]
                                                    [inc.inclusion.components[v].apply(m, a)]
                                        })
                                    })
                                });
                                if !commutes {
                                    continue;
                                }
                                report.squares += 1;
                                let problem = LiftingProblem {
                                    a: inc.sub.clone(),
                                    b: inc.ambient.clone(),
                                    x: x.clone(),
                                    y: y.clone(),
                                    i: inc.inclusion.clone(),
                                    p: p.clone(),
                                    top: to_transformation(&inc.sub, x, top)?,
                                    bottom: to_transformation(&inc.ambient, y, bottom)?,
                                };
                                match solve_lifting(c, &problem, budget)? {
                                    LiftOutcome::Lift(_) => {}
                                    LiftOutcome::NoLift => {
                                        let images: Vec<String> = (0..c.object_count())
                                            .flat_map(|v| {
                                                let sub = &inc.sub.values[v];
                                                (0..=depth).flat_map(move |m| {
                                                    sub.nondegenerate(m)
                                                        .into_iter()
                                                        .map(move |s| (v, m, s))
                                                })
                                            })
                                            .map(|(v, m, s)| {
                                                x.values[v].name(m, top[v][m][s]).to_string()
                                            })
                                            .collect();
                                        failure = Some(format!(
                                            "no lift for {} with top [{}]",
                                            inc.name,
                                            images.join(", ")
                                        ));
                                        return Ok(false);
                                    }
                                    LiftOutcome::BudgetExceeded => {
                                        return Err(Error::BudgetExceeded {
                                            budget: budget.limit(),
                                            context: "lifting".into(),
                                        })
                                    }
                                }
                            }
                            Ok(true)
                        },
                    )?;
                    if let Some(w) = failure {
                        report.verdict = Verdict::No;
                        report.witness = Some(w);
                        return Ok(());
                    }
                }
            }
        }
        Ok(())
    };
    match attempt(&mut report) {
        Ok(()) => Ok(report),
        Err(Error::BudgetExceeded { .. }) => Ok(FibrationReport {
            verdict: Verdict::Unknown,
            squares: report.squares,
            witness: Some("search budget exhausted".into()),
        }),
        Err(e) => Err(e),
    }
}

/// Per object, the number of simplices in each level.
pub fn bounds(c: &FiniteSite, x: &Presheaf<Sset>) -> BTreeMap<String, Vec<usize>> {
    (0..c.object_count())
        .map(|u| (c.objects[u].clone(), x.values[u].level_sizes()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn b() -> Budget {
        Budget::new(10_000_000)
    }

    #[test]
    fn inclusion_counts() {
        let one = one_object();
        assert_eq!(generating_inclusions(&one, 0, 0, 1, &b()).unwrap().len(), 2);
        assert_eq!(generating_inclusions(&one, 0, 1, 1, &b()).unwrap().len(), 5);
        let two = two_object();
        assert_eq!(
            generating_inclusions(&two, 0, 1, 1, &b()).unwrap().len(),
            14
        );
        assert_eq!(generating_inclusions(&two, 1, 1, 1, &b()).unwrap().len(), 5);
        assert_eq!(generating_inclusions(&two, 0, 0, 1, &b()).unwrap().len(), 3);
        assert_eq!(generating_inclusions(&two, 1, 0, 1, &b()).unwrap().len(), 2);
        for inc in generating_inclusions(&two, 0, 1, 2, &b()).unwrap() {
            assert!(inc.sub.violations(&two).is_empty(), "{}", inc.name);
            assert!(
                inc.inclusion
                    .violations(&two, &inc.sub, &inc.ambient)
                    .is_empty(),
                "{}",
                inc.name
            );
        }
    }

    #[test]
    fn circle_lift_prefers_the_loop() {
        let c = one_object();
        let d1 = standard_complex(ComplexKind::Simplex, 1, None, 2).unwrap();
        let bd = standard_complex(ComplexKind::Boundary, 1, None, 2).unwrap();
        let s1 = standard_complex(ComplexKind::Sphere, 1, None, 2).unwrap();
        let pt = standard_complex(ComplexKind::Point, 0, None, 2).unwrap();
        let k = |v: &Sset| Presheaf::constant(&c, v);
        let nt = |m: SimplicialMap| NaturalTransformation {
            components: vec![m],
        };
        let to_pt = |v: &Sset| {
            SimplicialMap::new(
                v.clone(),
                pt.clone(),
                (0..=2).map(|n| vec![0; v.level_size(n)]).collect(),
            )
            .unwrap()
        };
        let incl = SimplicialMap::new(
            bd.clone(),
            d1.clone(),
            (0..=2)
                .map(|n| {
                    (0..bd.level_size(n))
                        .map(|s| d1.id(n, bd.name(n, s)).unwrap())
                        .collect()
                })
                .collect(),
        )
        .unwrap();
        let top = SimplicialMap::new(
            bd.clone(),
            s1.clone(),
            (0..=2)
                .map(|n| vec![s1.degenerate_vertex(0, n); bd.level_size(n)])
                .collect(),
        )
        .unwrap();
        let problem = LiftingProblem {
            a: k(&bd),
            b: k(&d1),
            x: k(&s1),
            y: k(&pt),
            i: nt(incl),
            p: nt(to_pt(&s1)),
            top: nt(top),
            bottom: nt(to_pt(&d1)),
        };
        match solve_lifting(&c, &problem, &b()).unwrap() {
            LiftOutcome::Lift(h) => {
                let e = h.components[0].apply(1, d1.id(1, "01").unwrap());
                assert!(!s1.is_degenerate(1, e));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn circle_is_not_a_trivial_fibration() {
        let c = one_object();
        let s1 = standard_complex(ComplexKind::Sphere, 1, None, 2).unwrap();
        let pt = standard_complex(ComplexKind::Point, 0, None, 2).unwrap();
        let x = Presheaf::constant(&c, &s1);
        let y = Presheaf::constant(&c, &pt);
        let p = NaturalTransformation {
            components: vec![SimplicialMap::new(
                s1.clone(),
                pt,
                (0..=2).map(|n| vec![0; s1.level_size(n)]).collect(),
            )
            .unwrap()],
        };
        let low = is_trivial_fibration(&c, &x, &y, &p, 1, &b()).unwrap();
        assert_eq!(low.verdict, Verdict::Yes, "{low:?}");
        let high = is_trivial_fibration(&c, &x, &y, &p, 2, &b()).unwrap();
        assert_eq!(high.verdict, Verdict::No);
        assert!(high.witness.unwrap().contains("Δ^2"));
    }

    #[test]
    fn identity_is_a_trivial_fibration() {
        let c = two_object();
        let d1 = standard_complex(ComplexKind::Simplex, 1, None, 1).unwrap();
        let x = y_u(&c, &d1, 0).unwrap();
        let id = NaturalTransformation::identity(&x);
        let r = is_trivial_fibration(&c, &x, &x, &id, 1, &b()).unwrap();
        assert_eq!(r.verdict, Verdict::Yes);
        assert!(r.squares > 0);
        let sizes = bounds(&c, &x);
        assert_eq!(sizes["U"], vec![2, 3]);
        assert_eq!(sizes["V"], vec![2, 3]);
    }
}
