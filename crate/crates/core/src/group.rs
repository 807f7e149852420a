//! Finite groups given by multiplication tables.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{invalid, Result};

/// A finite group as an explicit Cayley table. Element `0` need not be the
/// identity; the identity is stored explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    pub labels: Vec<String>,
    pub mul: Vec<Vec<usize>>,
    pub identity: usize,
}

impl FiniteGroup {
    /// Build from a table, checking the group axioms.
    pub fn new(labels: Vec<String>, mul: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let g = FiniteGroup {
            labels,
            mul,
            identity,
        };
        let problems = g.violations();
        if problems.is_empty() {
            Ok(g)
        } else {
            invalid(format!("not a group: {}", problems.join("; ")))
        }
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            labels: vec!["e".into()],
            mul: vec![vec![0]],
            identity: 0,
        }
    }

    /// The cyclic group of order `n` with elements labelled `0..n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order zero");
        FiniteGroup {
            labels: (0..n).map(|i| i.to_string()).collect(),
            mul: (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
            identity: 0,
        }
    }

    /// Symmetric group on three letters, elements as permutations of `012`.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        // (a*b)(i) = a(b(i))
        let mul = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| idx([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        FiniteGroup {
            labels: perms
                .iter()
                .map(|p| format!("{}{}{}", p[0], p[1], p[2]))
                .collect(),
            mul,
            identity: 0,
        }
    }

    /// Direct product with lexicographic element order.
    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order();
        let n = self.order() * m;
        let mul = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| self.op(x / m, y / m) * m + other.op(x % m, y % m))
                    .collect()
            })
            .collect();
        FiniteGroup {
            labels: (0..n)
                .map(|x| format!("({},{})", self.labels[x / m], other.labels[x % m]))
                .collect(),
            mul,
            identity: self.identity * m + other.identity,
        }
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.mul[a][b] == self.identity)
            .expect("group element without inverse")
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.op(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// Every failed group axiom, described.
    pub fn violations(&self) -> Vec<String> {
        let n = self.mul.len();
        let mut out = Vec::new();
        if n == 0 {
            out.push("empty carrier".into());
            return out;
        }
        if self.labels.len() != n {
            out.push(format!("{} labels for {} elements", self.labels.len(), n));
        }
        if self.identity >= n {
            out.push("identity out of range".into());
            return out;
        }
        for (a, row) in self.mul.iter().enumerate() {
            if row.len() != n || row.iter().any(|&c| c >= n) {
                out.push(format!("row {a} malformed"));
                return out;
            }
        }
        for a in 0..n {
            if self.mul[self.identity][a] != a || self.mul[a][self.identity] != a {
                out.push(format!("identity law fails at {a}"));
            }
            if !(0..n).any(|b| self.mul[a][b] == self.identity && self.mul[b][a] == self.identity) {
                out.push(format!("{a} has no inverse"));
            }
        }
        'assoc: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]] {
                        out.push(format!("associativity fails at ({a},{b},{c})"));
                        break 'assoc;
                    }
                }
            }
        }
        out
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.op(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// A small generating set chosen greedily, largest element orders first.
    pub fn generators(&self) -> Vec<usize> {
        let mut candidates: Vec<usize> = (0..self.order()).collect();
        candidates.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for a in candidates {
            if span.len() == self.order() {
                break;
            }
            if span.binary_search(&a).is_err() {
                gens.push(a);
                span = self.generated(&gens);
            }
        }
        gens
    }

    /// Whether `map` (indexed by elements of `self`) is a homomorphism into `target`.
    pub fn is_hom(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        let n = self.order();
        map.len() == n
            && map.iter().all(|&x| x < target.order())
            && (0..n).all(|a| (0..n).all(|b| map[self.op(a, b)] == target.op(map[a], map[b])))
    }

    pub fn is_iso(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        if self.order() != target.order() || !self.is_hom(target, map) {
            return false;
        }
        let image: BTreeSet<usize> = map.iter().copied().collect();
        image.len() == self.order()
    }

    /// Search for an isomorphism `self -> other`, returning it when found.
    pub fn find_isomorphism(
        &self,
        other: &FiniteGroup,
        budget: &Budget,
    ) -> Result<Option<Vec<usize>>> {
        if self.order() != other.order() || self.is_abelian() != other.is_abelian() {
            return Ok(None);
        }
        let mut self_orders: Vec<usize> =
            (0..self.order()).map(|a| self.element_order(a)).collect();
        let mut other_orders: Vec<usize> =
            (0..other.order()).map(|a| other.element_order(a)).collect();
        let by_order: Vec<usize> = other_orders.clone();
        self_orders.sort_unstable();
        other_orders.sort_unstable();
        if self_orders != other_orders {
            return Ok(None);
        }
        let gens = self.generators();
        let mut images = Vec::with_capacity(gens.len());
        self.iso_search(other, &gens, &by_order, &mut images, budget)
    }

    fn iso_search(
        &self,
        other: &FiniteGroup,
        gens: &[usize],
        other_orders: &[usize],
        images: &mut Vec<usize>,
        budget: &Budget,
    ) -> Result<Option<Vec<usize>>> {
        if images.len() == gens.len() {
            budget.charge(1, "searching for a group isomorphism")?;
            return Ok(self
                .extend_on_generators(other, gens, images)
                .filter(|m| self.is_iso(other, m)));
        }
        let g = gens[images.len()];
        let want = self.element_order(g);
        for cand in 0..other.order() {
            if other_orders[cand] != want {
                continue;
            }
            images.push(cand);
            if let Some(found) = self.iso_search(other, gens, other_orders, images, budget)? {
                return Ok(Some(found));
            }
            images.pop();
        }
        Ok(None)
    }

    /// Every isomorphism `self -> other`, found by assigning generator images.
    pub fn all_isomorphisms(
        &self,
        other: &FiniteGroup,
        budget: &Budget,
    ) -> Result<Vec<Vec<usize>>> {
        if self.order() != other.order() {
            return Ok(Vec::new());
        }
        let gens = self.generators();
        let mut out = Vec::new();
        let mut images = vec![0; gens.len()];
        loop {
            budget.charge(1, "enumerating group isomorphisms")?;
            if let Some(m) = self.extend_on_generators(other, &gens, &images) {
                if self.is_iso(other, &m) {
                    out.push(m);
                }
            }
            let mut p = 0;
            loop {
                if p == gens.len() {
                    out.sort();
                    out.dedup();
                    return Ok(out);
                }
                images[p] += 1;
                if images[p] < other.order() {
                    break;
                }
                images[p] = 0;
                p += 1;
            }
        }
    }

    /// Extend an assignment on generators to a map on all elements by
    /// breadth-first search over words; `None` if inconsistent.
    pub fn extend_on_generators(
        &self,
        other: &FiniteGroup,
        gens: &[usize],
        images: &[usize],
    ) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order()];
        map[self.identity] = other.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (&g, &h) in gens.iter().zip(images) {
                let y = self.op(x, g);
                let fy = other.op(map[x], h);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        if map.contains(&usize::MAX) {
            None
        } else {
            Some(map)
        }
    }

    /// Sorted invariant factors of a finite abelian group (empty when trivial).
    pub fn abelian_invariants(&self) -> Option<Vec<u64>> {
        if !self.is_abelian() {
            return None;
        }
        // relation matrix: columns = elements as generators, rows = relations g_a g_b = g_{ab}
        let n = self.order();
        let mut rows = Vec::new();
        for a in 0..n {
            for b in a..n {
                let mut row = vec![0i128; n];
                row[a] += 1;
                row[b] += 1;
                row[self.op(a, b)] -= 1;
                rows.push(row);
            }
        }
        let mut row = vec![0i128; n];
        row[self.identity] = 1;
        rows.push(row);
        let snf = crate::algebra::smith_diagonal(rows, n).ok()?;
        let mut inv: Vec<u64> = snf
            .diagonal
            .iter()
            .map(|d| d.unsigned_abs() as u64)
            .filter(|&d| d > 1)
            .collect();
        inv.sort_unstable();
        Some(inv)
    }

    pub fn describe(&self) -> String {
        if self.is_trivial() {
            return "1".into();
        }
        match self.abelian_invariants() {
            Some(inv) => inv
                .iter()
                .map(|d| format!("Z/{d}"))
                .collect::<Vec<_>>()
                .join(" x "),
            None => format!("nonabelian of order {}", self.order()),
        }
    }

    /// Quotient by a normal subgroup `normal` of `self`, returning the
    /// quotient table and the class of each element.
    pub fn quotient(&self, normal: &[usize]) -> (FiniteGroup, Vec<usize>) {
        self.quotient_of_subgroup(&(0..self.order()).collect::<Vec<_>>(), normal)
    }

    /// Quotient `sub / normal` where `normal ⊴ sub ≤ self`. Elements outside
    /// `sub` get class `usize::MAX`.
    pub fn quotient_of_subgroup(
        &self,
        sub: &[usize],
        normal: &[usize],
    ) -> (FiniteGroup, Vec<usize>) {
        let mut class = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for &x in sub {
            if class[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for &k in normal {
                class[self.op(x, k)] = c;
            }
        }
        let mul = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| class[self.op(a, b)]).collect())
            .collect();
        let q = FiniteGroup {
            labels: reps
                .iter()
                .map(|&r| format!("[{}]", self.labels[r]))
                .collect(),
            mul,
            identity: class[self.identity],
        };
        (q, class)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_symmetric_are_groups() {
        assert!(FiniteGroup::cyclic(6).violations().is_empty());
        assert!(FiniteGroup::symmetric3().violations().is_empty());
        assert!(!FiniteGroup::symmetric3().is_abelian());
    }

    #[test]
    fn z6_is_z2_times_z3() {
        let b = Budget::new(10_000);
        let p = FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(3));
        assert!(FiniteGroup::cyclic(6)
            .find_isomorphism(&p, &b)
            .unwrap()
            .is_some());
        let k = FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2));
        assert!(FiniteGroup::cyclic(4)
            .find_isomorphism(&k, &b)
            .unwrap()
            .is_none());
        assert_eq!(k.abelian_invariants().unwrap(), vec![2, 2]);
        assert_eq!(
            FiniteGroup::cyclic(6).abelian_invariants().unwrap(),
            vec![6]
        );
    }

    #[test]
    fn s3_not_iso_to_z6() {
        let b = Budget::new(10_000);
        assert!(FiniteGroup::symmetric3()
            .find_isomorphism(&FiniteGroup::cyclic(6), &b)
            .unwrap()
            .is_none());
        let s = FiniteGroup::symmetric3();
        assert!(s.find_isomorphism(&s, &b).unwrap().is_some());
    }

    #[test]
    fn quotient_of_z4_by_z2() {
        let g = FiniteGroup::cyclic(4);
        let (q, class) = g.quotient(&[0, 2]);
        assert_eq!(q.order(), 2);
        assert_eq!(class[1], class[3]);
        assert!(q.violations().is_empty());
    }
}
