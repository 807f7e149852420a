//! Words in generators and their formal inverses, finitely presented groups,
//! and Todd–Coxeter coset enumeration.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::Result;
use crate::group::FiniteGroup;

/// A generator or its formal inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Self {
        Letter {
            gen,
            inverse: false,
        }
    }

    pub fn inv(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    /// Column index used by coset tables.
    fn column(self) -> usize {
        2 * self.gen + usize::from(self.inverse)
    }
}

pub type Word = Vec<Letter>;

/// Cancel adjacent `x x^-1` pairs.
pub fn free_reduce(word: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&l.inverted()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn invert_word(word: &[Letter]) -> Word {
    word.iter().rev().map(|l| l.inverted()).collect()
}

/// Free and cyclic reduction.
pub fn cyclic_reduce(word: &[Letter]) -> Word {
    let mut w = free_reduce(word);
    while w.len() >= 2 && w[0] == w[w.len() - 1].inverted() {
        w.pop();
        w.remove(0);
    }
    w
}

/// Canonical representative of a relator up to cyclic permutation and inversion.
pub fn relator_key(word: &[Letter]) -> Word {
    let w = cyclic_reduce(word);
    if w.is_empty() {
        return w;
    }
    let mut best: Option<Word> = None;
    for base in [w.clone(), invert_word(&w)] {
        for k in 0..base.len() {
            let mut rot = base[k..].to_vec();
            rot.extend_from_slice(&base[..k]);
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

pub fn format_word(word: &[Letter], names: &[String]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter()
        .map(|l| {
            if l.inverse {
                format!("{}^-1", names[l.gen])
            } else {
                names[l.gen].clone()
            }
        })
        .collect::<Vec<_>>()
        .join("·")
}

/// Three-valued answer for bounded decision procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }
}

/// A group given by generators and relator words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentedGroup {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl fmt::Display for PresentedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| format_word(r, &self.generators))
            .collect();
        write!(
            f,
            "< {} | {} >",
            self.generators.join(", "),
            rels.join(", ")
        )
    }
}

/// Free rank and torsion coefficients of an abelian group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl PresentedGroup {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        PresentedGroup {
            generators,
            relators,
        }
    }

    /// Drop trivial relators and cyclically reduce the rest.
    pub fn simplified(&self) -> PresentedGroup {
        let mut rels: Vec<Word> = self
            .relators
            .iter()
            .map(|r| relator_key(r))
            .filter(|r| !r.is_empty())
            .collect();
        rels.sort();
        rels.dedup();
        PresentedGroup {
            generators: self.generators.clone(),
            relators: rels,
        }
    }

    /// Invariants of the abelianization.
    pub fn abelianization(&self) -> Result<AbelianInvariants> {
        let n = self.generators.len();
        let rows: Vec<Vec<i128>> = self
            .relators
            .iter()
            .map(|r| {
                let mut row = vec![0i128; n];
                for l in r {
                    row[l.gen] += if l.inverse { -1 } else { 1 };
                }
                row
            })
            .collect();
        let snf = crate::algebra::smith_diagonal(rows, n)?;
        let mut torsion = snf.torsion();
        torsion.sort_unstable();
        Ok(AbelianInvariants {
            free_rank: n - snf.rank(),
            torsion,
        })
    }

    /// Enumerate the group by Todd–Coxeter over the trivial subgroup. `Ok(None)`
    /// means the budget of defined cosets ran out (the group may be infinite).
    pub fn enumerate(&self, budget: &Budget) -> Result<Option<CosetTable>> {
        let cols = 2 * self.generators.len();
        let mut tc = ToddCoxeter {
            table: vec![vec![None; cols]],
            forward: vec![0],
            cols,
        };
        let relators: Vec<Word> = self
            .relators
            .iter()
            .map(|r| free_reduce(r))
            .filter(|r| !r.is_empty())
            .collect();
        let mut c = 0;
        while c < tc.table.len() {
            if budget.charge(1, "enumerating cosets").is_err() {
                return Ok(None);
            }
            if tc.forward[c] == c {
                for r in &relators {
                    if budget.charge(r.len() as u64, "enumerating cosets").is_err() {
                        return Ok(None);
                    }
                    tc.scan_and_fill(c, r);
                    if tc.forward[c] != c {
                        break;
                    }
                }
                if tc.forward[c] == c {
                    for x in 0..cols {
                        if tc.table[c][x].is_none() {
                            tc.define(c, x);
                        }
                    }
                }
            }
            c += 1;
        }
        Ok(Some(tc.compact()))
    }

    /// The group as a finite table when coset enumeration completes.
    pub fn to_finite(&self, budget: &Budget) -> Result<Option<(FiniteGroup, CosetTable)>> {
        Ok(self
            .enumerate(budget)?
            .map(|t| (t.group(&self.generators), t)))
    }

    /// Bounded isomorphism test.
    pub fn isomorphic(&self, other: &PresentedGroup, budget: &Budget) -> Result<Verdict> {
        let (a, b) = (self.abelianization()?, other.abelianization()?);
        if a != b {
            return Ok(Verdict::No);
        }
        let (p, q) = (self.simplified(), other.simplified());
        if p.relators.is_empty() && q.relators.is_empty() {
            return Ok(Verdict::from_bool(p.generators.len() == q.generators.len()));
        }
        if p.generators.len() == q.generators.len() && p.relators == q.relators {
            return Ok(Verdict::Yes);
        }
        if let (Some((g, _)), Some((h, _))) = (p.to_finite(budget)?, q.to_finite(budget)?) {
            return Ok(Verdict::from_bool(
                g.find_isomorphism(&h, budget)?.is_some(),
            ));
        }
        Ok(Verdict::Unknown)
    }

    /// Whether sending generator `i` of `self` to generator `gen_map[i]` of
    /// `target` is a bijection of generators carrying the relator set onto the
    /// relator set (up to cyclic permutation and inversion).
    pub fn matches_under(&self, target: &PresentedGroup, gen_map: &[usize]) -> bool {
        let n = self.generators.len();
        if gen_map.len() != n || target.generators.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &g in gen_map {
            if g >= n || std::mem::replace(&mut seen[g], true) {
                return false;
            }
        }
        let mapped = PresentedGroup {
            generators: target.generators.clone(),
            relators: self
                .relators
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|l| Letter {
                            gen: gen_map[l.gen],
                            inverse: l.inverse,
                        })
                        .collect()
                })
                .collect(),
        };
        mapped.simplified().relators == target.simplified().relators
    }
}

/// A completed coset table for the trivial subgroup: cosets are group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    /// `action[c][col]` is `c · letter`, columns `2g` (generator) and `2g+1` (inverse).
    pub action: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn order(&self) -> usize {
        self.action.len()
    }

    /// Element represented by a word.
    pub fn evaluate(&self, word: &[Letter]) -> usize {
        word.iter().fold(0, |c, l| self.action[c][l.column()])
    }

    /// Shortest-word representatives by breadth-first search.
    pub fn representatives(&self) -> Vec<Word> {
        let n = self.order();
        let mut reps: Vec<Option<Word>> = vec![None; n];
        reps[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0usize]);
        let ngens = self.action.first().map_or(0, |r| r.len() / 2);
        while let Some(c) = queue.pop_front() {
            for g in 0..ngens {
                for l in [Letter::new(g), Letter::inv(g)] {
                    let d = self.action[c][l.column()];
                    if reps[d].is_none() {
                        let mut w = reps[c].clone().unwrap();
                        w.push(l);
                        reps[d] = Some(w);
                        queue.push_back(d);
                    }
                }
            }
        }
        reps.into_iter().map(|r| r.unwrap_or_default()).collect()
    }

    pub fn group(&self, names: &[String]) -> FiniteGroup {
        let reps = self.representatives();
        let n = self.order();
        let mul = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| reps[b].iter().fold(a, |c, l| self.action[c][l.column()]))
                    .collect()
            })
            .collect();
        FiniteGroup {
            labels: reps.iter().map(|w| format_word(w, names)).collect(),
            mul,
            identity: 0,
        }
    }
}

struct ToddCoxeter {
    table: Vec<Vec<Option<usize>>>,
    forward: Vec<usize>,
    cols: usize,
}

#[inline]
fn inv_col(x: usize) -> usize {
    x ^ 1
}

impl ToddCoxeter {
    fn define(&mut self, c: usize, x: usize) {
        let d = self.table.len();
        self.table.push(vec![None; self.cols]);
        self.forward.push(d);
        self.table[c][x] = Some(d);
        self.table[d][inv_col(x)] = Some(c);
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.forward[root] != root {
            root = self.forward[root];
        }
        let mut x = c;
        while self.forward[x] != root {
            let next = self.forward[x];
            self.forward[x] = root;
            x = next;
        }
        root
    }

    fn merge(&mut self, k: usize, l: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(k), self.rep(l));
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.forward[hi] = lo;
        queue.push(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                if let Some(f) = self.table[e][x] {
                    self.table[f][inv_col(x)] = None;
                    let e1 = self.rep(e);
                    let f1 = self.rep(f);
                    if let Some(t) = self.table[e1][x] {
                        self.merge(f1, t, &mut queue);
                    } else if let Some(t) = self.table[f1][inv_col(x)] {
                        self.merge(e1, t, &mut queue);
                    } else {
                        self.table[e1][x] = Some(f1);
                        self.table[f1][inv_col(x)] = Some(e1);
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[Letter]) {
        let cols: Vec<usize> = w.iter().map(|l| l.column()).collect();
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = cols.len() as isize - 1;
        loop {
            while (i as isize) <= j {
                match self.table[f][cols[i]] {
                    Some(n) => {
                        f = n;
                        i += 1;
                    }
                    None => break,
                }
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return;
            }
            while j >= i as isize {
                match self.table[b][inv_col(cols[j as usize])] {
                    Some(n) => {
                        b = n;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j < i as isize {
                self.coincidence(f, b);
                return;
            } else if j == i as isize {
                self.table[f][cols[i]] = Some(b);
                self.table[b][inv_col(cols[i])] = Some(f);
                return;
            } else {
                self.define(f, cols[i]);
            }
        }
    }

    fn compact(mut self) -> CosetTable {
        let live: Vec<usize> = (0..self.table.len())
            .filter(|&c| self.forward[c] == c)
            .collect();
        let index: BTreeMap<usize, usize> = live.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let action = live
            .iter()
            .map(|&c| {
                (0..self.cols)
                    .map(|x| {
                        let t = self.table[c][x].expect("incomplete coset table");
                        let r = self.rep(t);
                        index[&r]
                    })
                    .collect()
            })
            .collect();
        CosetTable { action }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn reduction_cancels_pairs() {
        let w = vec![Letter::new(0), Letter::inv(0), Letter::new(1)];
        assert_eq!(free_reduce(&w), vec![Letter::new(1)]);
        assert_eq!(
            cyclic_reduce(&[Letter::new(1), Letter::new(0), Letter::inv(1)]),
            vec![Letter::new(0)]
        );
    }

    #[test]
    fn todd_coxeter_orders() {
        let b = Budget::new(1_000_000);
        // cyclic of order 5
        let p = PresentedGroup::new(gens(1), vec![vec![Letter::new(0); 5]]);
        assert_eq!(p.enumerate(&b).unwrap().unwrap().order(), 5);
        // S3 = <a,b | a^2, b^3, (ab)^2>
        let (a, bb) = (Letter::new(0), Letter::new(1));
        let s3 = PresentedGroup::new(
            gens(2),
            vec![vec![a, a], vec![bb, bb, bb], vec![a, bb, a, bb]],
        );
        let (g, _) = s3.to_finite(&b).unwrap().unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert!(g
            .find_isomorphism(&FiniteGroup::symmetric3(), &b)
            .unwrap()
            .is_some());
        // trivial from redundant relators
        let t = PresentedGroup::new(gens(2), vec![vec![a], vec![a, bb]]);
        assert_eq!(t.enumerate(&b).unwrap().unwrap().order(), 1);
    }

    #[test]
    fn infinite_group_exhausts_budget() {
        let p = PresentedGroup::new(gens(1), vec![]);
        assert!(p.enumerate(&Budget::new(1000)).unwrap().is_none());
        assert_eq!(
            p.abelianization().unwrap(),
            AbelianInvariants {
                free_rank: 1,
                torsion: vec![]
            }
        );
    }

    #[test]
    fn free_groups_compare() {
        let b = Budget::new(1000);
        let z = PresentedGroup::new(gens(1), vec![]);
        let z2 = PresentedGroup::new(gens(1), vec![vec![Letter::new(0), Letter::new(0)]]);
        assert_eq!(z.isomorphic(&z, &b).unwrap(), Verdict::Yes);
        assert_eq!(z.isomorphic(&z2, &b).unwrap(), Verdict::No);
        assert!(z.matches_under(&z, &[0]));
    }
}
