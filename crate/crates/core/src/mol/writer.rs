//! Deterministic (non-canonical) SMILES writer.
//!
//! Depth-first from the lowest-index atom of each fragment, visiting
//! neighbours in ascending index order. Writing the parse of a written
//! string reproduces it exactly, which is what the normalisation key relies
//! on. Tetrahedral tags are re-expressed relative to the output neighbour
//! order.

use super::element;
use super::graph::{BondOrder, Chirality, MoleculeGraph, NeighborRef};

pub fn write_smiles(graph: &MoleculeGraph) -> String {
    let mut out = String::new();
    for (i, comp) in graph.components().iter().enumerate() {
        if i > 0 {
            out.push('.');
        }
        Writer::new(graph).write_from(comp[0], &mut out);
    }
    out
}

#[derive(Clone, Copy)]
struct RingEntry {
    partner: usize,
    bond: usize,
    opening: bool,
}

struct Writer<'g> {
    g: &'g MoleculeGraph,
    visited: Vec<bool>,
    rank: Vec<usize>,
    parent: Vec<Option<(usize, usize)>>,
    children: Vec<Vec<(usize, usize)>>,
    rings: Vec<Vec<RingEntry>>,
    closure_seen: Vec<bool>,
    digits: Vec<Option<u32>>,
    in_use: Vec<bool>,
    next_rank: usize,
}

impl<'g> Writer<'g> {
    fn new(g: &'g MoleculeGraph) -> Self {
        let n = g.atom_count();
        Writer {
            g,
            visited: vec![false; n],
            rank: vec![usize::MAX; n],
            parent: vec![None; n],
            children: vec![Vec::new(); n],
            rings: vec![Vec::new(); n],
            closure_seen: vec![false; g.bond_count()],
            digits: vec![None; g.bond_count()],
            in_use: vec![false; 100],
            next_rank: 0,
        }
    }

    fn write_from(mut self, start: usize, out: &mut String) {
        self.plan(start, None);
        for atom in 0..self.g.atom_count() {
            let rank = &self.rank;
            // Closings (partner already written) come first, then openings in
            // the order their partners will appear.
            self.rings[atom].sort_by_key(|e| (e.opening, rank[e.partner]));
        }
        self.emit(start, out);
    }

    fn plan(&mut self, atom: usize, via: Option<(usize, usize)>) {
        self.visited[atom] = true;
        self.rank[atom] = self.next_rank;
        self.next_rank += 1;
        self.parent[atom] = via;
        let mut nbrs = self.g.neighbors(atom).to_vec();
        nbrs.sort_unstable();
        for (nb, bond) in nbrs {
            if via.is_some_and(|(_, b)| b == bond) {
                continue;
            }
            if self.visited[nb] {
                if !self.closure_seen[bond] {
                    self.closure_seen[bond] = true;
                    // nb was written earlier: it opens, this atom closes.
                    self.rings[nb].push(RingEntry {
                        partner: atom,
                        bond,
                        opening: true,
                    });
                    self.rings[atom].push(RingEntry {
                        partner: nb,
                        bond,
                        opening: false,
                    });
                }
            } else {
                self.children[atom].push((nb, bond));
                self.plan(nb, Some((atom, bond)));
            }
        }
    }

    fn emit(&mut self, atom: usize, out: &mut String) {
        out.push_str(&self.atom_text(atom));
        let rings = self.rings[atom].clone();
        for entry in rings {
            let d = if entry.opening {
                let d = (1..100u32)
                    .find(|&d| !self.in_use[d as usize])
                    .expect("fewer than 100 open rings");
                self.in_use[d as usize] = true;
                self.digits[entry.bond] = Some(d);
                out.push_str(self.bond_text(entry.bond));
                d
            } else {
                let d = self.digits[entry.bond].expect("ring opened before closing");
                self.in_use[d as usize] = false;
                d
            };
            if d < 10 {
                out.push(char::from(b'0' + d as u8));
            } else {
                out.push('%');
                out.push_str(&d.to_string());
            }
        }
        let children = self.children[atom].clone();
        let last = children.len().saturating_sub(1);
        for (i, (child, bond)) in children.into_iter().enumerate() {
            if i < last {
                out.push('(');
            }
            out.push_str(self.bond_text(bond));
            self.emit(child, out);
            if i < last {
                out.push(')');
            }
        }
    }

    fn bond_text(&self, bond: usize) -> &'static str {
        let b = self.g.bond(bond);
        match b.order {
            BondOrder::Single => {
                if self.g.atom(b.begin).aromatic && self.g.atom(b.end).aromatic {
                    "-"
                } else {
                    ""
                }
            }
            BondOrder::Double => "=",
            BondOrder::Triple => "#",
            BondOrder::Aromatic => "",
        }
    }

    fn output_order(&self, atom: usize) -> Vec<NeighborRef> {
        let mut order = Vec::new();
        if let Some((p, _)) = self.parent[atom] {
            order.push(NeighborRef::Atom(p));
        }
        if self.g.atom(atom).hydrogens > 0 {
            order.push(NeighborRef::Hydrogen);
        }
        order.extend(self.rings[atom].iter().map(|e| NeighborRef::Atom(e.partner)));
        order.extend(self.children[atom].iter().map(|&(c, _)| NeighborRef::Atom(c)));
        order
    }

    fn output_chirality(&self, atom: usize) -> Chirality {
        let tag = self.g.atom(atom).chirality;
        let Some(input) = self.g.stereo_order(atom) else {
            return tag;
        };
        let output = self.output_order(atom);
        match permutation_parity(input, &output) {
            Some(true) => tag,
            Some(false) => tag.inverted(),
            None => tag,
        }
    }

    fn atom_text(&self, atom: usize) -> String {
        let a = self.g.atom(atom);
        let chirality = self.output_chirality(atom);
        let organic = element::default_valences(a.element).is_some()
            && (!a.aromatic || matches!(a.element, 5 | 6 | 7 | 8 | 15 | 16));
        if organic && a.charge == 0 && a.isotope.is_none() && chirality == Chirality::None {
            let implicit =
                element::implicit_hydrogens(a.element, a.aromatic, self.g.bond_order_sum(atom));
            if implicit == Some(a.hydrogens) {
                return symbol_text(a.element, a.aromatic);
            }
        }
        let mut s = String::from("[");
        if let Some(iso) = a.isotope {
            s.push_str(&iso.to_string());
        }
        s.push_str(&symbol_text(a.element, a.aromatic));
        match chirality {
            Chirality::None => {}
            Chirality::CounterClockwise => s.push('@'),
            Chirality::Clockwise => s.push_str("@@"),
        }
        match a.hydrogens {
            0 => {}
            1 => s.push('H'),
            h => {
                s.push('H');
                s.push_str(&h.to_string());
            }
        }
        match a.charge {
            0 => {}
            1 => s.push('+'),
            -1 => s.push('-'),
            c if c > 0 => s.push_str(&format!("+{c}")),
            c => s.push_str(&format!("-{}", -(c as i32))),
        }
        s.push(']');
        s
    }
}

fn symbol_text(z: u8, aromatic: bool) -> String {
    let sym = element::symbol(z);
    if aromatic {
        sym.to_lowercase()
    } else {
        sym.to_string()
    }
}

/// `Some(true)` when `to` is an even permutation of `from`, `Some(false)`
/// when odd, `None` when the lists are not permutations of each other.
fn permutation_parity(from: &[NeighborRef], to: &[NeighborRef]) -> Option<bool> {
    if from.len() != to.len() {
        return None;
    }
    let mut used = vec![false; to.len()];
    let mut perm = Vec::with_capacity(from.len());
    for r in from {
        let j = (0..to.len()).find(|&j| !used[j] && to[j] == *r)?;
        used[j] = true;
        perm.push(j);
    }
    let mut even = true;
    let mut seen = vec![false; perm.len()];
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            even = !even;
        }
    }
    Some(even)
}
