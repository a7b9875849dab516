//! Per-atom initial invariants for extended-connectivity (standard atomic
//! invariants) and functional-connectivity (pharmacophoric) fingerprints.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use std::collections::HashSet;

use crate::ecfp::stable_hash;
use crate::mol::element::{self, NITROGEN, OXYGEN, PHOSPHORUS, SULFUR};
use crate::mol::{BondOrder, Chirality, MoleculeGraph, NeighborRef};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InvariantKind {
    Ecfp,
    Fcfp,
}

impl InvariantKind {
    pub fn code(self) -> u8 {
        match self {
            InvariantKind::Ecfp => 0,
            InvariantKind::Fcfp => 1,
        }
    }

    pub fn from_code(code: u8) -> Option<Self> {
        match code {
            0 => Some(InvariantKind::Ecfp),
            1 => Some(InvariantKind::Fcfp),
            _ => None,
        }
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvariantKind::Ecfp => "ecfp",
            InvariantKind::Fcfp => "fcfp",
        })
    }
}

impl FromStr for InvariantKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ecfp" => Ok(InvariantKind::Ecfp),
            "fcfp" => Ok(InvariantKind::Fcfp),
            other => Err(format!("unknown invariant kind `{other}` (expected ecfp or fcfp)")),
        }
    }
}

/// Small non-negative integers describing one atom; length 6, or 7 with the
/// chirality tag appended.
pub type InvariantTuple = Vec<u32>;

/// Invariant tuples for every atom, sharing one chirality canonicalization.
pub fn all_atom_invariants(graph: &MoleculeGraph, kind: InvariantKind, use_chirality: bool) -> Vec<InvariantTuple> {
    let tags = use_chirality.then(|| canonical_chirality_tags(graph));
    (0..graph.atom_count())
        .map(|a| {
            let mut t = atom_invariants(graph, a, kind, false);
            if let Some(tags) = &tags {
                t.push(tags[a]);
            }
            t
        })
        .collect()
}

pub fn atom_invariants(
    graph: &MoleculeGraph,
    atom: usize,
    kind: InvariantKind,
    use_chirality: bool,
) -> InvariantTuple {
    match kind {
        InvariantKind::Ecfp => standard_invariants(graph, atom, use_chirality),
        InvariantKind::Fcfp => pharmacophoric_invariants(graph, atom, use_chirality),
    }
}

/// `(heavy degree, total H, atomic number, charge + 8, in ring, isotope)`
/// with the canonical tetrahedral tag appended on request. The isotope is the
/// mass number, or 0 when none is given; it is always 0 after normalization.
pub fn standard_invariants(graph: &MoleculeGraph, atom: usize, use_chirality: bool) -> InvariantTuple {
    let a = graph.atom(atom);
    let mut t = vec![
        graph.degree(atom) as u32,
        a.hydrogens as u32,
        a.element as u32,
        (a.charge as i32 + 8).max(0) as u32,
        graph.is_atom_in_ring(atom) as u32,
        a.isotope.map_or(0, u32::from),
    ];
    if use_chirality {
        t.push(chirality_tag(graph, atom, None));
    }
    t
}

/// `(donor, acceptor, aromatic, halogen, basic, acidic)` as 0/1 flags, with
/// the tetrahedral tag appended on request.
pub fn pharmacophoric_invariants(graph: &MoleculeGraph, atom: usize, use_chirality: bool) -> InvariantTuple {
    let a = graph.atom(atom);
    let z = a.element;
    let n_or_o = z == NITROGEN || z == OXYGEN;
    let donor = n_or_o && a.hydrogens > 0;
    let acceptor = (n_or_o || z == element::FLUORINE) && a.charge <= 0;
    let halogen = element::is_halogen(z);
    let basic = z == NITROGEN
        && (a.charge > 0
            || (!a.aromatic
                && graph
                    .neighbors(atom)
                    .iter()
                    .all(|&(_, b)| matches!(graph.bond(b).order, BondOrder::Single))));
    let mut t = vec![
        donor as u32,
        acceptor as u32,
        a.aromatic as u32,
        halogen as u32,
        basic as u32,
        is_acidic_oxygen(graph, atom) as u32,
    ];
    if use_chirality {
        t.push(chirality_tag(graph, atom, None));
    }
    t
}

/// Tetrahedral tag that does not depend on the written neighbour order: 0 for
/// no (or undetermined) stereo, 1 if the neighbours other than the lowest
/// ranked run anticlockwise in ascending rank seen from the lowest ranked one,
/// 2 if clockwise. Neighbours are ranked by refined connectivity classes with
/// hydrogen lowest; centres with tied neighbours get 0.
pub fn canonical_chirality_tags(graph: &MoleculeGraph) -> Vec<u32> {
    let n = graph.atom_count();
    if graph.atoms().iter().all(|a| a.chirality == Chirality::None) {
        return vec![0; n];
    }
    let classes = refined_classes(graph);
    (0..n).map(|a| chirality_tag(graph, a, Some(&classes))).collect()
}

fn chirality_tag(graph: &MoleculeGraph, atom: usize, classes: Option<&[u32]>) -> u32 {
    let chirality = graph.atom(atom).chirality;
    if chirality == Chirality::None {
        return 0;
    }
    let Some(order) = graph.stereo_order(atom).filter(|o| o.len() == 4) else {
        return 0;
    };
    let owned;
    let classes = match classes {
        Some(c) => c,
        None => {
            owned = refined_classes(graph);
            &owned
        }
    };
    let keys: Vec<Option<u32>> = order
        .iter()
        .map(|r| match *r {
            NeighborRef::Hydrogen => None,
            NeighborRef::Atom(k) => Some(classes[k]),
        })
        .collect();
    let mut inversions = 0;
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            match keys[i].cmp(&keys[j]) {
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    let canonical = if inversions % 2 == 0 { chirality } else { chirality.inverted() };
    canonical.tag()
}

/// Iterated neighbourhood hashing until the number of classes stops growing.
fn refined_classes(graph: &MoleculeGraph) -> Vec<u32> {
    let n = graph.atom_count();
    let mut classes: Vec<u32> = (0..n)
        .map(|a| stable_hash(&standard_invariants(graph, a, false)).raw())
        .collect();
    let distinct = |c: &[u32]| c.iter().collect::<HashSet<_>>().len();
    let mut count = distinct(&classes);
    for _ in 0..n {
        let next: Vec<u32> = (0..n)
            .map(|a| {
                let mut nbrs: Vec<(u32, u32)> = graph
                    .neighbors(a)
                    .iter()
                    .map(|&(k, b)| (graph.bond(b).order.code(), classes[k]))
                    .collect();
                nbrs.sort_unstable();
                let mut words = vec![classes[a]];
                words.extend(nbrs.into_iter().flat_map(|(c, k)| [c, k]));
                stable_hash(&words).raw()
            })
            .collect();
        let next_count = distinct(&next);
        if next_count <= count {
            break;
        }
        classes = next;
        count = next_count;
    }
    classes
}

/// Hydroxyl oxygen of a carboxylic, sulfonic or phosphonic acid.
fn is_acidic_oxygen(graph: &MoleculeGraph, atom: usize) -> bool {
    let a = graph.atom(atom);
    if a.element != OXYGEN || a.hydrogens == 0 || graph.degree(atom) != 1 {
        return false;
    }
    let (centre, bond) = graph.neighbors(atom)[0];
    if graph.bond(bond).order != BondOrder::Single {
        return false;
    }
    let double_oxygens = graph
        .neighbors(centre)
        .iter()
        .filter(|&&(n, b)| graph.atom(n).element == OXYGEN && graph.bond(b).order == BondOrder::Double)
        .count();
    match graph.atom(centre).element {
        element::CARBON | PHOSPHORUS => double_oxygens >= 1,
        SULFUR => double_oxygens >= 2,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mol::parse_smiles;

    fn std_of(s: &str, atom: usize) -> Vec<u32> {
        standard_invariants(&parse_smiles(s).unwrap(), atom, false)
    }

    fn ph_of(s: &str, atom: usize) -> Vec<u32> {
        pharmacophoric_invariants(&parse_smiles(s).unwrap(), atom, false)
    }

    #[test]
    fn standard_examples() {
        assert_eq!(std_of("C", 0), vec![0, 4, 6, 8, 0, 0]);
        assert_eq!(std_of("c1ccccc1", 0), vec![2, 1, 6, 8, 1, 0]);
        assert_eq!(std_of("[13CH4]", 0), vec![0, 4, 6, 8, 0, 13]);
        assert_eq!(std_of("[NH4+]", 0), vec![0, 4, 7, 9, 0, 0]);
    }

    #[test]
    fn pharmacophoric_examples() {
        assert_eq!(ph_of("CF", 1), vec![0, 1, 0, 1, 0, 0]);
        assert_eq!(ph_of("CCO", 2), vec![1, 1, 0, 0, 0, 0]);
        assert_eq!(ph_of("c1ccccc1", 0), vec![0, 0, 1, 0, 0, 0]);
    }

    #[test]
    fn acids_and_bases() {
        // carboxylic acid hydroxyl is acidic, carbonyl oxygen is not
        assert_eq!(ph_of("CC(=O)O", 3)[5], 1);
        assert_eq!(ph_of("CC(=O)O", 2)[5], 0);
        assert_eq!(ph_of("CS(=O)(=O)O", 4)[5], 1);
        assert_eq!(ph_of("CP(=O)(O)O", 3)[5], 1);
        assert_eq!(ph_of("CCO", 2)[5], 0);
        // amine and ammonium are basic, pyridine and imine are not
        assert_eq!(ph_of("CCN", 2)[4], 1);
        assert_eq!(ph_of("C[NH3+]", 1)[4], 1);
        assert_eq!(ph_of("c1ccncc1", 3)[4], 0);
        assert_eq!(ph_of("CC=N", 2)[4], 0);
    }

    fn tag_of(s: &str, atom: usize) -> u32 {
        standard_invariants(&parse_smiles(s).unwrap(), atom, true)[6]
    }

    #[test]
    fn chirality_appended() {
        let g = parse_smiles("C[C@@H](N)O").unwrap();
        let t = standard_invariants(&g, 1, true);
        assert_eq!(&t[..6], &[3, 1, 6, 8, 0, 0]);
        assert!(t[6] == 1 || t[6] == 2);
        assert_eq!(pharmacophoric_invariants(&g, 1, true).len(), 7);
        assert_eq!(standard_invariants(&g, 0, true)[6], 0);
        assert_eq!(all_atom_invariants(&g, InvariantKind::Ecfp, true)[1], t);
    }

    #[test]
    fn chirality_tag_ignores_written_order() {
        let t = tag_of("C[C@@H](N)O", 1);
        assert_ne!(t, tag_of("C[C@H](N)O", 1));
        // swapping two neighbours and the tag describes the same centre
        assert_eq!(t, tag_of("C[C@H](O)N", 1));
        assert_eq!(t, tag_of("N[C@H](C)O", 1));
        assert_eq!(t, tag_of("O[C@@H](C)N", 1));
        assert_eq!(t, tag_of("[C@H](C)(N)O", 0));
    }

    #[test]
    fn tied_neighbours_give_no_tag() {
        assert_eq!(tag_of("C[C@H](C)O", 1), 0);
        assert_eq!(tag_of("CC", 0), 0);
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("ecfp".parse::<InvariantKind>(), Ok(InvariantKind::Ecfp));
        assert!("morgan".parse::<InvariantKind>().is_err());
    }
}
