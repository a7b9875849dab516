use std::fmt;

use crate::ecfp::stable_hash;
use crate::mol::{BondOrder, MoleculeGraph};

/// Murcko-framework key. All acyclic molecules share [`ScaffoldKey::Acyclic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScaffoldKey {
    Acyclic,
    Hash(u32),
}

impl fmt::Display for ScaffoldKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScaffoldKey::Acyclic => f.write_str("acyclic"),
            ScaffoldKey::Hash(h) => write!(f, "{h:08x}"),
        }
    }
}

/// Atoms of the Bemis–Murcko scaffold: rings and linkers, plus terminal atoms
/// double-bonded to them. Empty for acyclic molecules.
pub fn scaffold_atoms(graph: &MoleculeGraph) -> Vec<usize> {
    let n = graph.atom_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|a| graph.degree(a)).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&a| degree[a] <= 1 && !graph.is_atom_in_ring(a)).collect();
    while let Some(a) = stack.pop() {
        if !alive[a] {
            continue;
        }
        alive[a] = false;
        for &(nb, _) in graph.neighbors(a) {
            if alive[nb] {
                degree[nb] -= 1;
                if degree[nb] <= 1 && !graph.is_atom_in_ring(nb) {
                    stack.push(nb);
                }
            }
        }
    }
    if !alive.iter().any(|&a| a) {
        return Vec::new();
    }
    let framework = alive.clone();
    for a in 0..n {
        if !framework[a] && graph.degree(a) == 1 {
            let (nb, bond) = graph.neighbors(a)[0];
            if framework[nb] && graph.bond(bond).order == BondOrder::Double {
                alive[a] = true;
            }
        }
    }
    (0..n).filter(|&a| alive[a]).collect()
}

/// Hash of the scaffold's sorted `(element, degree, aromatic)` atom tuples
/// and sorted bond codes. Not a canonical form: two different scaffolds with
/// the same multisets share a key.
pub fn scaffold_key(graph: &MoleculeGraph) -> ScaffoldKey {
    let atoms = scaffold_atoms(graph);
    if atoms.is_empty() {
        return ScaffoldKey::Acyclic;
    }
    let mut keep = vec![false; graph.atom_count()];
    for &a in &atoms {
        keep[a] = true;
    }
    let mut tuples: Vec<[u32; 3]> = atoms
        .iter()
        .map(|&a| {
            let degree = graph.neighbors(a).iter().filter(|&&(nb, _)| keep[nb]).count();
            let atom = graph.atom(a);
            [atom.element as u32, degree as u32, atom.aromatic as u32]
        })
        .collect();
    tuples.sort_unstable();
    let mut codes: Vec<u32> = graph
        .bonds()
        .iter()
        .filter(|b| keep[b.begin] && keep[b.end])
        .map(|b| b.order.code())
        .collect();
    codes.sort_unstable();
    let mut words = vec![tuples.len() as u32];
    words.extend(tuples.iter().flatten());
    words.push(codes.len() as u32);
    words.extend(codes);
    ScaffoldKey::Hash(stable_hash(&words).raw())
}
