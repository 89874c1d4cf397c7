//! Finite lattices with tabulated meets and joins.
//!
//! `lattice_structure` turns a poset into a lattice by computing the
//! greatest lower bound and least upper bound of every pair, rejecting
//! the input with a witness pair if either is missing. Empty meets yield
//! the top element and empty joins the bottom, everywhere.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::poset::Poset;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    poset: Poset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

/// Tabulates meet and join for every pair of a poset.
pub fn lattice_structure(p: &Poset) -> Result<Lattice> {
    let n = p.size();
    if n == 0 {
        return Err(Error::NotALattice {
            kind: "bounds",
            a: "(empty universe)".into(),
            b: "(empty universe)".into(),
        });
    }
    let mut meet = vec![0usize; n * n];
    let mut join = vec![0usize; n * n];
    for a in 0..n {
        for b in a..n {
            let m = bound_of(p, a, b, true).ok_or_else(|| Error::NotALattice {
                kind: "greatest lower bound",
                a: p.label(a).to_owned(),
                b: p.label(b).to_owned(),
            })?;
            let j = bound_of(p, a, b, false).ok_or_else(|| Error::NotALattice {
                kind: "least upper bound",
                a: p.label(a).to_owned(),
                b: p.label(b).to_owned(),
            })?;
            meet[a * n + b] = m;
            meet[b * n + a] = m;
            join[a * n + b] = j;
            join[b * n + a] = j;
        }
    }
    let mut bottom = 0;
    let mut top = 0;
    for x in 1..n {
        bottom = meet[bottom * n + x];
        top = join[top * n + x];
    }
    Ok(Lattice {
        poset: p.clone(),
        meet,
        join,
        bottom,
        top,
    })
}

fn bound_of(p: &Poset, a: usize, b: usize, lower: bool) -> Option<usize> {
    let cands = if lower {
        p.down(a).intersection(p.down(b))
    } else {
        p.up(a).intersection(p.up(b))
    };
    cands.iter().find(|&m| {
        if lower {
            cands.is_subset(p.down(m))
        } else {
            cands.is_subset(p.up(m))
        }
    })
}

impl Lattice {
    /// Assembles a lattice from pre-verified parts; used by constructions
    /// that fill the tables directly (powersets, down-set lattices).
    pub(crate) fn from_parts(
        poset: Poset,
        meet: Vec<usize>,
        join: Vec<usize>,
        bottom: usize,
        top: usize,
    ) -> Lattice {
        Lattice {
            poset,
            meet,
            join,
            bottom,
            top,
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn size(&self) -> usize {
        self.poset.size()
    }

    pub fn label(&self, i: usize) -> &str {
        self.poset.label(i)
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Meet of a family; the empty meet is the top element.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of a family; the empty join is the bottom element.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items
            .into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// First triple violating `a /\ (b \/ c) = (a /\ b) \/ (a /\ c)`, if any.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    pub fn require_distributive(&self) -> Result<()> {
        match self.distributivity_witness() {
            None => Ok(()),
            Some((a, b, c)) => Err(Error::NotDistributive {
                a: self.label(a).to_owned(),
                b: self.label(b).to_owned(),
                c: self.label(c).to_owned(),
            }),
        }
    }

    /// Elements `j != 0` such that `j = a \/ b` forces `j = a` or `j = b`.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&j| self.is_join_irreducible(j))
            .collect()
    }

    fn is_join_irreducible(&self, j: usize) -> bool {
        if j == self.bottom {
            return false;
        }
        for a in self.poset.down(j).iter() {
            for b in self.poset.down(j).iter() {
                if self.join(a, b) == j && a != j && b != j {
                    return false;
                }
            }
        }
        true
    }

    /// Join-irreducibility relative to a subset that contains the bottom
    /// element and is closed under binary joins.
    pub fn join_irreducibles_within(&self, members: &BitSet) -> Vec<usize> {
        let mut out = Vec::new();
        'outer: for j in members.iter() {
            if j == self.bottom {
                continue;
            }
            for a in members.iter() {
                for b in members.iter() {
                    if self.join(a, b) == j && a != j && b != j {
                        continue 'outer;
                    }
                }
            }
            out.push(j);
        }
        out
    }

    /// `c* = \/ { x | c /\ x = 0 }`.
    pub fn pseudocomplement(&self, c: usize) -> usize {
        self.join_all((0..self.size()).filter(|&x| self.meet(c, x) == self.bottom))
    }

    /// Elements with `c \/ c* = 1`.
    pub fn complemented_elements(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&c| self.join(c, self.pseudocomplement(c)) == self.top)
            .collect()
    }

    /// Restricts the lattice to a subset closed under meet and join.
    /// Returns the restricted lattice and the map from new to old indices.
    pub fn sublattice(&self, members: &BitSet) -> Result<(Lattice, Vec<usize>)> {
        for a in members.iter() {
            for b in members.iter() {
                for (what, v) in [("meet", self.meet(a, b)), ("join", self.join(a, b))] {
                    if !members.contains(v) {
                        return Err(Error::Shape(format!(
                            "subset is not closed under {what}: `{}` {what} `{}` escapes",
                            self.label(a),
                            self.label(b)
                        )));
                    }
                }
            }
        }
        let new_to_old: Vec<usize> = members.iter().collect();
        let mut old_to_new = HashMap::new();
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new.insert(old, new);
        }
        let k = new_to_old.len();
        let labels: Vec<String> = new_to_old
            .iter()
            .map(|&i| self.label(i).to_owned())
            .collect();
        let up: Vec<BitSet> = new_to_old
            .iter()
            .map(|&i| {
                BitSet::of(
                    k,
                    self.poset
                        .up(i)
                        .iter()
                        .filter_map(|j| old_to_new.get(&j).copied()),
                )
            })
            .collect();
        let poset = Poset::from_up_rows(labels, up);
        let mut meet = vec![0usize; k * k];
        let mut join = vec![0usize; k * k];
        for a in 0..k {
            for b in 0..k {
                meet[a * k + b] = old_to_new[&self.meet(new_to_old[a], new_to_old[b])];
                join[a * k + b] = old_to_new[&self.join(new_to_old[a], new_to_old[b])];
            }
        }
        let bottom = old_to_new[&self.meet_all(new_to_old.iter().copied())];
        let top = old_to_new[&self.join_all(new_to_old.iter().copied())];
        Ok((
            Lattice {
                poset,
                meet,
                join,
                bottom,
                top,
            },
            new_to_old,
        ))
    }
}

/// Label for a set of labels, rendered `{a,b}`.
pub fn set_label<S: AsRef<str>>(items: &[S]) -> String {
    let mut inner: Vec<&str> = items.iter().map(|s| s.as_ref()).collect();
    inner.sort_unstable();
    format!("{{{}}}", inner.join(","))
}

/// The lattice of down-sets of a poset, ordered by inclusion.
pub fn downset_lattice(p: &Poset) -> Lattice {
    let downs = p.downsets();
    let n = downs.len();
    let index: HashMap<&BitSet, usize> = downs.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let labels: Vec<String> = downs
        .iter()
        .map(|d| set_label(&d.iter().map(|i| p.label(i)).collect::<Vec<_>>()))
        .collect();
    let up: Vec<BitSet> = downs
        .iter()
        .map(|d| {
            BitSet::of(
                n,
                downs
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| d.is_subset(e))
                    .map(|(j, _)| j),
            )
        })
        .collect();
    let poset = Poset::from_up_rows(labels, up);
    let mut meet = vec![0usize; n * n];
    let mut join = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            meet[a * n + b] = index[&downs[a].intersection(&downs[b])];
            join[a * n + b] = index[&downs[a].union(&downs[b])];
        }
    }
    let bottom = index[&BitSet::empty(p.size())];
    let top = index[&BitSet::full(p.size())];
    Lattice::from_parts(poset, meet, join, bottom, top)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn diamond_meets_and_joins() {
        let p = fixtures::diamond_poset();
        let l = lattice_structure(&p).unwrap();
        // 0 < x,y < 1 with x = 1, y = 2 in index order.
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(1, 2), 3);
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 3);
        assert!(l.is_distributive());
    }

    #[test]
    fn antichain_without_bounds_rejected() {
        let p = Poset::from_pairs(vec!["a".into(), "b".into()], &[]).unwrap();
        assert!(matches!(
            lattice_structure(&p),
            Err(Error::NotALattice { .. })
        ));
    }

    #[test]
    fn powerset_of_two_is_boolean_four() {
        let l = fixtures::powerset_lattice(2);
        assert_eq!(l.size(), 4);
        assert!(l.is_distributive());
        assert_eq!(l.complemented_elements().len(), 4);
    }

    #[test]
    fn m3_is_not_distributive() {
        let l = fixtures::m3_lattice();
        let (a, b, c) = l.distributivity_witness().expect("M3 must fail");
        let lhs = l.meet(a, l.join(b, c));
        let rhs = l.join(l.meet(a, b), l.meet(a, c));
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn chains_are_distributive() {
        assert!(fixtures::chain_lattice(3).is_distributive());
    }

    #[test]
    fn join_irreducibles_of_three_chain() {
        let l = fixtures::chain_lattice(3);
        assert_eq!(l.join_irreducibles(), vec![1, 2]);
    }

    #[test]
    fn join_irreducibles_of_powerset_are_atoms() {
        let l = fixtures::powerset_lattice(3);
        let js = l.join_irreducibles();
        assert_eq!(js.len(), 3);
        for j in js {
            assert_eq!(l.poset().down(j).count(), 2);
        }
    }

    #[test]
    fn one_element_lattice_has_no_irreducibles() {
        let l = fixtures::chain_lattice(1);
        assert!(l.join_irreducibles().is_empty());
    }

    #[test]
    fn pseudocomplement_in_three_chain() {
        let l = fixtures::chain_lattice(3);
        assert_eq!(l.pseudocomplement(1), 0);
        assert_eq!(l.complemented_elements(), vec![0, 2]);
    }

    #[test]
    fn pseudocomplement_is_greatest_annihilator() {
        for l in [
            fixtures::chain_lattice(4),
            fixtures::powerset_lattice(3),
            fixtures::diamond_lattice(),
        ] {
            for c in 0..l.size() {
                let star = l.pseudocomplement(c);
                assert_eq!(l.meet(c, star), l.bottom());
                for x in 0..l.size() {
                    if l.meet(c, x) == l.bottom() {
                        assert!(l.leq(x, star));
                    }
                }
            }
        }
    }

    #[test]
    fn boolean_pseudocomplement_is_negation() {
        let b = fixtures::powerset_algebra(3);
        for c in 0..b.lattice().size() {
            assert_eq!(b.lattice().pseudocomplement(c), b.neg(c));
        }
        assert_eq!(b.lattice().complemented_elements().len(), 8);
    }

    #[test]
    fn empty_meet_and_join_conventions() {
        let l = fixtures::chain_lattice(3);
        assert_eq!(l.meet_all([]), l.top());
        assert_eq!(l.join_all([]), l.bottom());
    }

    #[test]
    fn downset_lattice_of_two_antichain() {
        let p = Poset::from_pairs(vec!["a".into(), "b".into()], &[]).unwrap();
        let l = downset_lattice(&p);
        assert_eq!(l.size(), 4);
        assert_eq!(l.complemented_elements().len(), 4);
    }
}
