use serde::{Deserialize, Serialize};

use super::rings;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BondOrder {
    Single,
    Double,
    Triple,
    Aromatic,
}

impl BondOrder {
    /// Integer code mixed into substructure hashes.
    pub fn code(self) -> u32 {
        match self {
            BondOrder::Single => 1,
            BondOrder::Double => 2,
            BondOrder::Triple => 3,
            BondOrder::Aromatic => 4,
        }
    }

    /// Contribution to an atom's bond-order sum for valence purposes.
    pub fn valence(self) -> u32 {
        match self {
            BondOrder::Single | BondOrder::Aromatic => 1,
            BondOrder::Double => 2,
            BondOrder::Triple => 3,
        }
    }
}

/// Tetrahedral tag exactly as written: `@` is counterclockwise, `@@` clockwise.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chirality {
    #[default]
    None,
    CounterClockwise,
    Clockwise,
}

impl Chirality {
    pub fn tag(self) -> u32 {
        match self {
            Chirality::None => 0,
            Chirality::CounterClockwise => 1,
            Chirality::Clockwise => 2,
        }
    }

    pub fn inverted(self) -> Self {
        match self {
            Chirality::None => Chirality::None,
            Chirality::CounterClockwise => Chirality::Clockwise,
            Chirality::Clockwise => Chirality::CounterClockwise,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomRecord {
    pub element: u8,
    pub charge: i8,
    /// Total attached hydrogens (implicit, bracket-specified or folded-in
    /// explicit hydrogen atoms).
    pub hydrogens: u8,
    pub aromatic: bool,
    pub isotope: Option<u16>,
    pub chirality: Chirality,
}

impl AtomRecord {
    pub fn new(element: u8) -> Self {
        AtomRecord {
            element,
            charge: 0,
            hydrogens: 0,
            aromatic: false,
            isotope: None,
            chirality: Chirality::None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bond {
    pub begin: usize,
    pub end: usize,
    pub order: BondOrder,
}

impl Bond {
    pub fn other(&self, atom: usize) -> usize {
        if self.begin == atom {
            self.end
        } else {
            self.begin
        }
    }
}

/// Entry in the written neighbour order of a stereocentre.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NeighborRef {
    Atom(usize),
    Hydrogen,
}

/// Parsed molecule. Immutable once built; ring membership is always
/// perceived by the constructors.
#[derive(Clone, Debug)]
pub struct MoleculeGraph {
    atoms: Vec<AtomRecord>,
    bonds: Vec<Bond>,
    adjacency: Vec<Vec<(usize, usize)>>,
    atom_in_ring: Vec<bool>,
    bond_in_ring: Vec<bool>,
    // Written neighbour order, kept only for atoms with a chirality tag.
    stereo: Vec<Option<Vec<NeighborRef>>>,
}

impl MoleculeGraph {
    /// Builds a graph and perceives rings. Callers guarantee valid, unique,
    /// non-self-loop bonds.
    pub(crate) fn from_parts(
        atoms: Vec<AtomRecord>,
        bonds: Vec<Bond>,
        stereo: Vec<Option<Vec<NeighborRef>>>,
    ) -> Self {
        let mut adjacency = vec![Vec::new(); atoms.len()];
        for (i, b) in bonds.iter().enumerate() {
            adjacency[b.begin].push((b.end, i));
            adjacency[b.end].push((b.begin, i));
        }
        let mut graph = MoleculeGraph {
            atom_in_ring: vec![false; atoms.len()],
            bond_in_ring: vec![false; bonds.len()],
            atoms,
            bonds,
            adjacency,
            stereo,
        };
        rings::perceive_rings(&mut graph);
        graph
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn bond_count(&self) -> usize {
        self.bonds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[AtomRecord] {
        &self.atoms
    }

    pub fn atom(&self, index: usize) -> &AtomRecord {
        &self.atoms[index]
    }

    pub fn bonds(&self) -> &[Bond] {
        &self.bonds
    }

    pub fn bond(&self, index: usize) -> &Bond {
        &self.bonds[index]
    }

    /// `(neighbour atom, bond index)` pairs in bond-creation order.
    pub fn neighbors(&self, atom: usize) -> &[(usize, usize)] {
        &self.adjacency[atom]
    }

    /// Number of explicit (heavy-atom) neighbours.
    pub fn degree(&self, atom: usize) -> usize {
        self.adjacency[atom].len()
    }

    pub fn bond_between(&self, a: usize, b: usize) -> Option<usize> {
        self.adjacency[a]
            .iter()
            .find(|(n, _)| *n == b)
            .map(|&(_, bond)| bond)
    }

    pub fn is_atom_in_ring(&self, atom: usize) -> bool {
        self.atom_in_ring[atom]
    }

    pub fn is_bond_in_ring(&self, bond: usize) -> bool {
        self.bond_in_ring[bond]
    }

    pub fn bond_order_sum(&self, atom: usize) -> u32 {
        self.adjacency[atom]
            .iter()
            .map(|&(_, b)| self.bonds[b].order.valence())
            .sum()
    }

    pub(crate) fn stereo_order(&self, atom: usize) -> Option<&[NeighborRef]> {
        self.stereo[atom].as_deref()
    }

    pub(crate) fn set_ring_membership(&mut self, atoms: Vec<bool>, bonds: Vec<bool>) {
        self.atom_in_ring = atoms;
        self.bond_in_ring = bonds;
    }

    /// Connected components as ascending atom-index lists, ordered by their
    /// smallest atom.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.atoms.len()];
        let mut out = Vec::new();
        for start in 0..self.atoms.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(a) = stack.pop() {
                comp.push(a);
                for &(n, _) in &self.adjacency[a] {
                    if !seen[n] {
                        seen[n] = true;
                        stack.push(n);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `keep` (ascending), re-indexed in that order.
    pub fn subgraph(&self, keep: &[usize]) -> MoleculeGraph {
        let mut map = vec![usize::MAX; self.atoms.len()];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new;
        }
        let atoms = keep.iter().map(|&a| self.atoms[a].clone()).collect();
        let bonds = self
            .bonds
            .iter()
            .filter(|b| map[b.begin] != usize::MAX && map[b.end] != usize::MAX)
            .map(|b| Bond {
                begin: map[b.begin],
                end: map[b.end],
                order: b.order,
            })
            .collect();
        let stereo = keep
            .iter()
            .map(|&a| {
                self.stereo[a].as_ref().map(|refs| {
                    refs.iter()
                        .map(|r| match *r {
                            NeighborRef::Atom(n) => NeighborRef::Atom(map[n]),
                            NeighborRef::Hydrogen => NeighborRef::Hydrogen,
                        })
                        .collect()
                })
            })
            .collect();
        MoleculeGraph::from_parts(atoms, bonds, stereo)
    }

    /// Copy with all isotope labels removed.
    pub fn without_isotopes(&self) -> MoleculeGraph {
        let mut g = self.clone();
        for a in &mut g.atoms {
            a.isotope = None;
        }
        g
    }

    /// Copy with atoms relabelled: atom `i` moves to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> MoleculeGraph {
        assert_eq!(perm.len(), self.atoms.len());
        let mut atoms = vec![AtomRecord::new(0); self.atoms.len()];
        let mut stereo = vec![None; self.atoms.len()];
        for (old, &new) in perm.iter().enumerate() {
            atoms[new] = self.atoms[old].clone();
            stereo[new] = self.stereo[old].as_ref().map(|refs| {
                refs.iter()
                    .map(|r| match *r {
                        NeighborRef::Atom(n) => NeighborRef::Atom(perm[n]),
                        NeighborRef::Hydrogen => NeighborRef::Hydrogen,
                    })
                    .collect::<Vec<_>>()
            });
        }
        let bonds = self
            .bonds
            .iter()
            .map(|b| Bond {
                begin: perm[b.begin],
                end: perm[b.end],
                order: b.order,
            })
            .collect();
        MoleculeGraph::from_parts(atoms, bonds, stereo)
    }
}
