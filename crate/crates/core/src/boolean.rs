//! Finite boolean algebras.
//!
//! A boolean algebra is a distributive lattice in which every element has
//! a (necessarily unique) complement. Finite boolean algebras are atomic:
//! every element is the join of the atoms below it, and the whole algebra
//! is the powerset of its atom set.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::lattice::{set_label, Lattice};
use crate::poset::Poset;

/// Largest supported number of atoms; the element tables are quadratic in
/// `2^atoms`, so anything bigger would exhaust memory before being useful.
pub const MAX_POWERSET_ATOMS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanAlgebra {
    lat: Lattice,
    neg: Vec<usize>,
    atoms: Vec<usize>,
}

/// Derives complementation and the atom list, verifying the boolean laws.
pub fn boolean_structure(lat: Lattice) -> Result<BooleanAlgebra> {
    if let Some((a, b, c)) = lat.distributivity_witness() {
        return Err(Error::NotBooleanAlgebra {
            reason: "not distributive",
            witness: format!(
                "({}, {}, {})",
                lat.label(a),
                lat.label(b),
                lat.label(c)
            ),
        });
    }
    let n = lat.size();
    let mut neg = vec![0usize; n];
    for a in 0..n {
        let mut found = None;
        for x in 0..n {
            if lat.meet(a, x) == lat.bottom() && lat.join(a, x) == lat.top() {
                if found.is_some() {
                    return Err(Error::NotBooleanAlgebra {
                        reason: "complement is not unique",
                        witness: lat.label(a).to_owned(),
                    });
                }
                found = Some(x);
            }
        }
        neg[a] = found.ok_or_else(|| Error::NotBooleanAlgebra {
            reason: "element has no complement",
            witness: lat.label(a).to_owned(),
        })?;
    }
    let atoms: Vec<usize> = (0..n)
        .filter(|&a| a != lat.bottom() && lat.poset().down(a).count() == 2)
        .collect();
    for a in 0..n {
        let below = atoms.iter().copied().filter(|&x| lat.leq(x, a));
        if lat.join_all(below) != a {
            return Err(Error::NotBooleanAlgebra {
                reason: "element is not the join of the atoms below it",
                witness: lat.label(a).to_owned(),
            });
        }
    }
    Ok(BooleanAlgebra { lat, neg, atoms })
}

impl BooleanAlgebra {
    pub fn lattice(&self) -> &Lattice {
        &self.lat
    }

    pub fn size(&self) -> usize {
        self.lat.size()
    }

    pub fn label(&self, i: usize) -> &str {
        self.lat.label(i)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    /// The set of atoms below `a`, as positions in the atom list.
    pub fn atom_support(&self, a: usize) -> BitSet {
        BitSet::of(
            self.atoms.len(),
            self.atoms
                .iter()
                .enumerate()
                .filter(|&(_, &x)| self.lat.leq(x, a))
                .map(|(k, _)| k),
        )
    }

    /// The element whose atom support is the given atom-position set.
    pub fn element_of_support(&self, support: &BitSet) -> usize {
        self.lat
            .join_all(support.iter().map(|k| self.atoms[k]))
    }
}

/// The powerset algebra over a list of atom labels.
///
/// Element `i` is the subset whose characteristic mask is `i`, so the
/// order is the submask order and all tables are filled directly.
pub fn powerset_algebra(atom_labels: &[String]) -> Result<BooleanAlgebra> {
    let k = atom_labels.len();
    if k > MAX_POWERSET_ATOMS {
        return Err(Error::Shape(format!(
            "powerset over {k} atoms exceeds the supported maximum of {MAX_POWERSET_ATOMS}"
        )));
    }
    let n = 1usize << k;
    let labels: Vec<String> = (0..n)
        .map(|m| {
            set_label(
                &(0..k)
                    .filter(|b| m >> b & 1 == 1)
                    .map(|b| atom_labels[b].as_str())
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let up: Vec<BitSet> = (0..n)
        .map(|m| BitSet::of(n, (0..n).filter(|j| m & !j == 0)))
        .collect();
    let poset = Poset::from_up_rows(labels, up);
    let mut meet = vec![0usize; n * n];
    let mut join = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            meet[a * n + b] = a & b;
            join[a * n + b] = a | b;
        }
    }
    let lat = Lattice::from_parts(poset, meet, join, 0, n - 1);
    let neg: Vec<usize> = (0..n).map(|m| !m & (n - 1)).collect();
    let atoms: Vec<usize> = (0..k).map(|b| 1usize << b).collect();
    Ok(BooleanAlgebra { lat, neg, atoms })
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
        Lattice::assemble(poset, meet, join, bottom, top)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lattice::lattice_structure;

    #[test]
    fn powerset_structure_agrees_with_generic_validation() {
        let fast = fixtures::powerset_algebra(3);
        let generic = boolean_structure(fast.lattice().clone()).unwrap();
        assert_eq!(fast.neg, generic.neg);
        assert_eq!(fast.atoms, generic.atoms);
    }

    #[test]
    fn three_chain_is_not_boolean() {
        let err = boolean_structure(fixtures::chain_lattice(3)).unwrap_err();
        assert!(matches!(err, Error::NotBooleanAlgebra { .. }));
    }

    #[test]
    fn m3_is_rejected_as_not_distributive() {
        let err = boolean_structure(fixtures::m3_lattice()).unwrap_err();
        assert!(matches!(
            err,
            Error::NotBooleanAlgebra {
                reason: "not distributive",
                ..
            }
        ));
    }

    #[test]
    fn atoms_generate_every_element() {
        let b = fixtures::powerset_algebra(3);
        for a in 0..b.size() {
            let support = b.atom_support(a);
            assert_eq!(b.element_of_support(&support), a);
        }
    }

    #[test]
    fn degenerate_one_element_algebra() {
        let p = Poset::from_pairs(vec!["*".into()], &[]).unwrap();
        let b = boolean_structure(lattice_structure(&p).unwrap()).unwrap();
        assert_eq!(b.size(), 1);
        assert!(b.atoms().is_empty());
    }
}
