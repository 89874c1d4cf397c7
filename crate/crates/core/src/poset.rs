//! Finite partially ordered sets.
//!
//! A poset stores its order relation as one up-set bit row per element.
//! Construction takes an arbitrary list of order pairs, closes it
//! reflexively and transitively, and rejects the result unless it is
//! antisymmetric (returning the offending cycle pair).

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    /// `up[i]` = `{ j | i <= j }`, reflexive and transitive.
    up: Vec<BitSet>,
    /// `dn[i]` = `{ j | j <= i }`.
    dn: Vec<BitSet>,
}

impl Poset {
    /// Builds a poset from generating pairs `(a, b)` meaning `a <= b`.
    pub fn from_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut up: Vec<BitSet> = (0..n).map(|i| BitSet::singleton(n, i)).collect();
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Shape(format!(
                    "order pair ({a}, {b}) out of range for {n} elements"
                )));
            }
            up[a].insert(b);
        }
        // Warshall closure on bit rows.
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) && i != k {
                    let row = up[k].clone();
                    up[i].union_with(&row);
                }
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::NotAntisymmetric(
                        labels[i].clone(),
                        labels[j].clone(),
                    ));
                }
            }
        }
        Ok(Poset::from_up_rows(labels, up))
    }

    /// Builds directly from closed up-set rows; the caller guarantees the
    /// rows already form a partial order.
    pub(crate) fn from_up_rows(labels: Vec<String>, up: Vec<BitSet>) -> Poset {
        let n = labels.len();
        let mut dn: Vec<BitSet> = (0..n).map(|_| BitSet::empty(n)).collect();
        for i in 0..n {
            for j in up[i].iter() {
                dn[j].insert(i);
            }
        }
        Poset { labels, up, dn }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn up(&self, i: usize) -> &BitSet {
        &self.up[i]
    }

    pub fn down(&self, i: usize) -> &BitSet {
        &self.dn[i]
    }

    /// Strict covering pairs `(a, b)`: `a < b` with nothing in between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.size() {
            'next: for b in self.up[a].iter() {
                if a == b {
                    continue;
                }
                for z in self.up[a].iter() {
                    if z != a && z != b && self.leq(z, b) {
                        continue 'next;
                    }
                }
                out.push((a, b));
            }
        }
        out
    }

    pub fn is_downset(&self, s: &BitSet) -> bool {
        s.iter().all(|i| self.dn[i].is_subset(s))
    }

    /// All down-closed subsets, sorted canonically.
    pub fn downsets(&self) -> Vec<BitSet> {
        let n = self.size();
        let mut seen: HashSet<BitSet> = HashSet::new();
        let mut queue = vec![BitSet::empty(n)];
        seen.insert(BitSet::empty(n));
        while let Some(d) = queue.pop() {
            for x in 0..n {
                if d.contains(x) {
                    continue;
                }
                // x can extend d whenever everything strictly below it is in d.
                let mut below = self.dn[x].clone();
                below.remove(x);
                if below.is_subset(&d) {
                    let mut d2 = d.clone();
                    d2.insert(x);
                    if seen.insert(d2.clone()) {
                        queue.push(d2);
                    }
                }
            }
        }
        let mut out: Vec<BitSet> = seen.into_iter().collect();
        out.sort();
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&i| self.dn[i].count() == 1)
            .collect()
    }

    /// Lower bounds of a subset; the empty subset yields the whole universe.
    pub fn lower_bounds(&self, s: &BitSet) -> BitSet {
        let mut acc = BitSet::full(self.size());
        for i in s.iter() {
            acc = acc.intersection(&self.dn[i]);
        }
        acc
    }

    /// Upper bounds of a subset; the empty subset yields the whole universe.
    pub fn upper_bounds(&self, s: &BitSet) -> BitSet {
        let mut acc = BitSet::full(self.size());
        for i in s.iter() {
            acc = acc.intersection(&self.up[i]);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn two_chain_is_valid() {
        let p = Poset::from_pairs(labels(2), &[(0, 1)]).unwrap();
        assert_eq!(p.size(), 2);
        assert!(p.leq(0, 1) && !p.leq(1, 0));
    }

    #[test]
    fn cycle_is_rejected() {
        let err = Poset::from_pairs(labels(2), &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, Error::NotAntisymmetric(_, _)));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let err = Poset::from_pairs(vec!["a".into(), "a".into()], &[]).unwrap_err();
        assert!(matches!(err, Error::DuplicateLabel(_)));
    }

    #[test]
    fn diamond_is_valid() {
        // 0 < x,y < 1
        let p = Poset::from_pairs(labels(4), &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(p.size(), 4);
        assert!(p.leq(0, 3));
        assert!(!p.leq(1, 2) && !p.leq(2, 1));
        assert_eq!(p.covers().len(), 4);
    }

    #[test]
    fn transitive_closure_applied() {
        let p = Poset::from_pairs(labels(3), &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
    }

    #[test]
    fn downsets_of_two_antichain() {
        let p = Poset::from_pairs(labels(2), &[]).unwrap();
        assert_eq!(p.downsets().len(), 4);
    }

    #[test]
    fn empty_poset() {
        let p = Poset::from_pairs(vec![], &[]).unwrap();
        assert_eq!(p.size(), 0);
        assert_eq!(p.downsets().len(), 1);
    }
}
