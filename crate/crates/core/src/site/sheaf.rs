//! The plus construction, sheafification as its square, the sheaf condition,
//! and natural isomorphisms between finite presheaves.

use std::collections::BTreeMap;

use super::presheaf::{Elements, Presheaf, Section};
use super::{FiniteSite, Sieve};
use crate::budget::Budget;
use crate::error::{invalid, Error, Result};
use crate::group::FiniteGroup;
use crate::presentation::Verdict;
use crate::util::UnionFind;

/// Sections whose underlying data is a finite set with table maps.
pub trait Valued: Section<Map = Vec<usize>> {
    fn size(&self) -> usize;
    fn label(&self, i: usize) -> String;
    /// Every isomorphism `self → other`.
    fn isomorphisms(&self, other: &Self, budget: &Budget) -> Result<Vec<Vec<usize>>>;
}

impl Valued for Elements {
    fn size(&self) -> usize {
        self.len()
    }

    fn label(&self, i: usize) -> String {
        self.0[i].clone()
    }

    fn isomorphisms(&self, other: &Self, budget: &Budget) -> Result<Vec<Vec<usize>>> {
        let n = self.len();
        if n != other.len() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        // Heap's algorithm
        let mut c = vec![0; n];
        out.push(perm.clone());
        let mut i = 0;
        while i < n {
            if c[i] < i {
                perm.swap(if i % 2 == 0 { 0 } else { c[i] }, i);
                budget.charge(1, "enumerating bijections")?;
                out.push(perm.clone());
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        out.sort();
        Ok(out)
    }
}

impl Valued for FiniteGroup {
    fn size(&self) -> usize {
        self.order()
    }

    fn label(&self, i: usize) -> String {
        self.labels[i].clone()
    }

    fn isomorphisms(&self, other: &Self, budget: &Budget) -> Result<Vec<Vec<usize>>> {
        self.all_isomorphisms(other, budget)
    }
}

type Family = BTreeMap<usize, usize>;

/// Matching families of `f` on the sieve `s`.
fn matching_families<V: Valued>(
    c: &FiniteSite,
    f: &Presheaf<V>,
    s: &Sieve,
    budget: &Budget,
) -> Result<Vec<Family>> {
    let arrows: Vec<usize> = s.iter().copied().collect();
    let mut out = Vec::new();
    let mut current = Family::new();
    fn rec<V: Valued>(
        c: &FiniteSite,
        f: &Presheaf<V>,
        arrows: &[usize],
        idx: usize,
        current: &mut Family,
        budget: &Budget,
        out: &mut Vec<Family>,
    ) -> Result<()> {
        if idx == arrows.len() {
            out.push(current.clone());
            return Ok(());
        }
        let a = arrows[idx];
        let size = f.values[c.source(a)].size();
        budget.charge(size as u64, "enumerating matching families")?;
        for x in 0..size {
            current.insert(a, x);
            // compatibility with every assigned pair (b, g) with b ∘ g = h
            let ok = current.iter().all(|(&b, &xb)| {
                (0..c.arrow_count()).all(|g| match c.compose(b, g) {
                    Some(h) => current
                        .get(&h)
                        .is_none_or(|&xh| f.restrictions[g][xb] == xh),
                    None => true,
                })
            });
            if ok {
                rec(c, f, arrows, idx + 1, current, budget, out)?;
            }
            current.remove(&a);
        }
        Ok(())
    }
    rec(c, f, &arrows, 0, &mut current, budget, &mut out)?;
    Ok(out)
}

struct PlusLevel {
    /// All (sieve, family) pairs over covering sieves.
    families: Vec<(Sieve, Family)>,
    class_of: Vec<usize>,
    classes: usize,
    /// Representative per class: the family on the smallest covering sieve.
    representative: Vec<usize>,
}

fn restrict_family(family: &Family, r: &Sieve) -> Family {
    family
        .iter()
        .filter(|(a, _)| r.contains(a))
        .map(|(&a, &x)| (a, x))
        .collect()
}

fn plus_level<V: Valued>(
    c: &FiniteSite,
    f: &Presheaf<V>,
    u: usize,
    budget: &Budget,
) -> Result<PlusLevel> {
    let mut families = Vec::new();
    for s in &c.covers[u] {
        for fam in matching_families(c, f, s, budget)? {
            families.push((s.clone(), fam));
        }
    }
    let mut uf = UnionFind::new(families.len());
    for i in 0..families.len() {
        for j in i + 1..families.len() {
            let (s, x) = &families[i];
            let (t, y) = (&families[j].0, &families[j].1);
            let agree = c.covers[u]
                .iter()
                .filter(|r| r.is_subset(s) && r.is_subset(t))
                .any(|r| restrict_family(x, r) == restrict_family(y, r));
            if agree {
                uf.union(i, j);
            }
        }
    }
    let (class_of, classes) = uf.classes();
    let mut representative = vec![usize::MAX; classes];
    for (i, &k) in class_of.iter().enumerate() {
        let better = representative[k] == usize::MAX
            || families[i].0.len() < families[representative[k]].0.len();
        if better {
            representative[k] = i;
        }
    }
    Ok(PlusLevel {
        families,
        class_of,
        classes,
        representative,
    })
}

fn family_label<V: Valued>(c: &FiniteSite, f: &Presheaf<V>, family: &Family) -> String {
    // a family on the maximal sieve is its value at the identity
    if let Some((&a, &x)) = family.iter().find(|(&a, _)| c.identities[c.target(a)] == a) {
        return f.values[c.source(a)].label(x);
    }
    let parts: Vec<String> = family
        .iter()
        .map(|(&a, &x)| format!("{}:{}", c.arrows[a].name, f.values[c.source(a)].label(x)))
        .collect();
    format!("{{{}}}", parts.join(","))
}

struct Plus {
    levels: Vec<PlusLevel>,
    restrictions: Vec<Vec<usize>>,
}

fn plus_core<V: Valued>(c: &FiniteSite, f: &Presheaf<V>, budget: &Budget) -> Result<Plus> {
    let bad = f.violations(c);
    if let Some(v) = bad.first() {
        return invalid(format!("not a presheaf: {v}"));
    }
    let levels = (0..c.object_count())
        .map(|u| plus_level(c, f, u, budget))
        .collect::<Result<Vec<_>>>()?;
    let restrictions = (0..c.arrow_count())
        .map(|a| {
            let (u, v) = (c.target(a), c.source(a));
            (0..levels[u].classes)
                .map(|k| {
                    let (s, x) = &levels[u].families[levels[u].representative[k]];
                    let pulled = c.pullback_sieve(a, s);
                    let fam: Family = pulled
                        .iter()
                        .map(|&g| (g, x[&c.compose(a, g).unwrap()]))
                        .collect();
                    let i = levels[v]
                        .families
                        .iter()
                        .position(|(t, y)| *t == pulled && *y == fam)
                        .ok_or_else(|| {
                            Error::Invalid("coverage is not stable under pullback".into())
                        })?;
                    Ok(levels[v].class_of[i])
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Plus {
        levels,
        restrictions,
    })
}

/// `F⁺(U)`: matching families over covering sieves, identified when they
/// agree on a common covering sieve.
pub fn plus(c: &FiniteSite, f: &Presheaf<Elements>, budget: &Budget) -> Result<Presheaf<Elements>> {
    let p = plus_core(c, f, budget)?;
    let values = p
        .levels
        .iter()
        .map(|l| {
            Elements(
                l.representative
                    .iter()
                    .map(|&i| family_label(c, f, &l.families[i].1))
                    .collect(),
            )
        })
        .collect();
    Ok(Presheaf {
        values,
        restrictions: p.restrictions,
    })
}

pub fn sheafify(
    c: &FiniteSite,
    f: &Presheaf<Elements>,
    budget: &Budget,
) -> Result<Presheaf<Elements>> {
    plus(c, &plus(c, f, budget)?, budget)
}

fn plus_groups(
    c: &FiniteSite,
    f: &Presheaf<FiniteGroup>,
    budget: &Budget,
) -> Result<Presheaf<FiniteGroup>> {
    let p = plus_core(c, f, budget)?;
    let values = (0..c.object_count())
        .map(|u| {
            let l = &p.levels[u];
            let find = |s: &Sieve, fam: &Family| -> Result<usize> {
                l.families
                    .iter()
                    .position(|(t, y)| t == s && y == fam)
                    .map(|i| l.class_of[i])
                    .ok_or_else(|| {
                        Error::Invalid("family missing from the plus construction".into())
                    })
            };
            let mut mul = vec![vec![0; l.classes]; l.classes];
            for a in 0..l.classes {
                for b in 0..l.classes {
                    let (s, x) = &l.families[l.representative[a]];
                    let (t, y) = &l.families[l.representative[b]];
                    let r = c.covers[u]
                        .iter()
                        .find(|r| r.is_subset(s) && r.is_subset(t))
                        .ok_or_else(|| {
                            Error::Invalid(
                                "two covering sieves share no covering refinement".into(),
                            )
                        })?;
                    let z: Family = r
                        .iter()
                        .map(|&g| (g, f.values[c.source(g)].op(x[&g], y[&g])))
                        .collect();
                    mul[a][b] = find(r, &z)?;
                }
            }
            let max = c.maximal_sieve(u);
            let unit: Family = max
                .iter()
                .map(|&g| (g, f.values[c.source(g)].identity))
                .collect();
            let identity = find(&max, &unit)?;
            let labels = l
                .representative
                .iter()
                .map(|&i| family_label(c, f, &l.families[i].1))
                .collect();
            FiniteGroup::new(labels, mul, identity)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Presheaf {
        values,
        restrictions: p.restrictions,
    })
}

/// Sheafification of a presheaf of groups; the group law is computed on a
/// common covering refinement.
pub fn sheafify_groups(
    c: &FiniteSite,
    f: &Presheaf<FiniteGroup>,
    budget: &Budget,
) -> Result<Presheaf<FiniteGroup>> {
    plus_groups(c, &plus_groups(c, f, budget)?, budget)
}

/// The sheaf condition on every covering sieve: sections correspond exactly
/// to matching families. Returns the failures.
pub fn is_sheaf<V: Valued>(
    c: &FiniteSite,
    f: &Presheaf<V>,
    budget: &Budget,
) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for u in 0..c.object_count() {
        for s in &c.covers[u] {
            let families = matching_families(c, f, s, budget)?;
            let mut hit = vec![0usize; families.len()];
            for x in 0..f.values[u].size() {
                let fam: Family = s.iter().map(|&a| (a, f.restrictions[a][x])).collect();
                if let Some(i) = families.iter().position(|y| *y == fam) {
                    hit[i] += 1;
                }
            }
            let name = format!("{} on {}", c.sieve_names(s), c.objects[u]);
            if hit.iter().any(|&h| h > 1) {
                out.push(format!("separation fails for {name}"));
            }
            if hit.contains(&0) {
                out.push(format!("gluing fails for {name}"));
            }
        }
    }
    Ok(out)
}

/// Whether `f` and `g` are naturally isomorphic, by search over per-object
/// isomorphisms; `unknown` when the budget runs out.
pub fn natural_isomorphism<V: Valued>(
    c: &FiniteSite,
    f: &Presheaf<V>,
    g: &Presheaf<V>,
    budget: &Budget,
) -> Result<(Verdict, Option<Vec<Vec<usize>>>)> {
    let run = || -> Result<Option<Vec<Vec<usize>>>> {
        let candidates = (0..c.object_count())
            .map(|u| f.values[u].isomorphisms(&g.values[u], budget))
            .collect::<Result<Vec<_>>>()?;
        if candidates.iter().any(Vec::is_empty) {
            return Ok(None);
        }
        let mut chosen: Vec<usize> = Vec::new();
        fn rec<V: Valued>(
            c: &FiniteSite,
            f: &Presheaf<V>,
            g: &Presheaf<V>,
            candidates: &[Vec<Vec<usize>>],
            chosen: &mut Vec<usize>,
            budget: &Budget,
        ) -> Result<bool> {
            let u = chosen.len();
            if u == c.object_count() {
                return Ok(true);
            }
            for k in 0..candidates[u].len() {
                budget.charge(1, "searching for a natural isomorphism")?;
                chosen.push(k);
                let alpha = |w: usize| &candidates[w][chosen[w]];
                // squares whose corners are both chosen
                let ok = (0..c.arrow_count()).all(|a| {
                    let (s, t) = (c.source(a), c.target(a));
                    if s > u || t > u || (s != u && t != u) {
                        return true;
                    }
                    (0..f.values[t].size())
                        .all(|x| g.restrictions[a][alpha(t)[x]] == alpha(s)[f.restrictions[a][x]])
                });
                if ok && rec(c, f, g, candidates, chosen, budget)? {
                    return Ok(true);
                }
                chosen.pop();
            }
            Ok(false)
        }
        if rec(c, f, g, &candidates, &mut chosen, budget)? {
            Ok(Some(
                chosen
                    .iter()
                    .enumerate()
                    .map(|(u, &k)| candidates[u][k].clone())
                    .collect(),
            ))
        } else {
            Ok(None)
        }
    };
    match run() {
        Ok(Some(m)) => Ok((Verdict::Yes, Some(m))),
        Ok(None) => Ok((Verdict::No, None)),
        Err(Error::BudgetExceeded { .. }) => Ok((Verdict::Unknown, None)),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn set(labels: &[&str]) -> Elements {
        Elements(labels.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn two_object_collapse() {
        let c = two_object();
        let b = Budget::new(1_000_000);
        let f = Presheaf {
            values: vec![set(&["a", "b"]), set(&["c"])],
            restrictions: vec![vec![0, 1], vec![0], vec![0, 0]],
        };
        let l2 = sheafify(&c, &f, &b).unwrap();
        assert_eq!(l2.values[0].len(), 1);
        assert_eq!(l2.values[1].len(), 1);
        assert!(is_sheaf(&c, &l2, &b).unwrap().is_empty());
        assert!(!is_sheaf(&c, &f, &b).unwrap().is_empty());
    }

    #[test]
    fn trivial_topology_changes_nothing() {
        let c = two_object().trivial_topology();
        let b = Budget::new(1_000_000);
        let f = Presheaf {
            values: vec![set(&["a", "b"]), set(&["c"])],
            restrictions: vec![vec![0, 1], vec![0], vec![0, 0]],
        };
        let l2 = sheafify(&c, &f, &b).unwrap();
        assert_eq!(
            natural_isomorphism(&c, &f, &l2, &b).unwrap().0,
            Verdict::Yes
        );
        let z3 = Presheaf::constant(&c, &FiniteGroup::cyclic(3));
        let g = sheafify_groups(&c, &z3, &b).unwrap();
        assert_eq!(
            natural_isomorphism(&c, &z3, &g, &b).unwrap().0,
            Verdict::Yes
        );
    }

    #[test]
    fn gluing_over_two_opens() {
        // sections over X are pairs agreeing on W; here F(X) is empty
        let c = two_opens();
        let b = Budget::new(1_000_000);
        let arrows = &c.arrows;
        let values = vec![set(&[]), set(&["p", "q"]), set(&["r"]), set(&["s"])];
        let restrictions = arrows
            .iter()
            .map(|a| vec![0; values[a.target].len()])
            .collect::<Vec<_>>();
        let restrictions = restrictions
            .into_iter()
            .enumerate()
            .map(|(i, r)| {
                if arrows[i].source == arrows[i].target {
                    (0..r.len()).collect()
                } else {
                    r
                }
            })
            .collect();
        let f = Presheaf {
            values,
            restrictions,
        };
        assert!(f.violations(&c).is_empty(), "{:?}", f.violations(&c));
        let l2 = sheafify(&c, &f, &b).unwrap();
        assert_eq!(l2.values[0].len(), 2);
        assert!(is_sheaf(&c, &l2, &b).unwrap().is_empty());
    }
}
