//! SMILES reader.
//!
//! Supports the organic subset and bracket atoms, charges, isotopes, ring
//! closures (including `%nn`), branches, the bond symbols `- = # :`,
//! lowercase aromatic atoms, dot-separated fragments and `@`/`@@`
//! tetrahedral tags. `/` and `\` are read as plain single bonds; their
//! double-bond geometry is not represented.

use std::collections::HashMap;

use thiserror::Error;

use super::element::{self, HYDROGEN};
use super::graph::{AtomRecord, Bond, BondOrder, Chirality, MoleculeGraph, NeighborRef};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("SMILES parse error at offset {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("non-ASCII character")]
    NonAscii,
    #[error("unbalanced parenthesis")]
    UnbalancedParenthesis,
    #[error("branch opened without a preceding atom")]
    BranchWithoutAtom,
    #[error("ring-closure digit {0} is never matched")]
    UnmatchedRingClosure(u32),
    #[error("ring closure without a preceding atom")]
    RingWithoutAtom,
    #[error("conflicting bond symbols on ring closure {0}")]
    RingBondConflict(u32),
    #[error("unknown element symbol `{0}`")]
    UnknownElement(String),
    #[error("valence violation on {0}")]
    ValenceViolation(&'static str),
    #[error("unsupported construct `{0}`")]
    Unsupported(String),
    #[error("bond symbol not followed by an atom")]
    DanglingBond,
    #[error("duplicate bond between the same two atoms")]
    DuplicateBond,
    #[error("bond from an atom to itself")]
    SelfLoop,
    #[error("malformed bracket atom")]
    BadBracketAtom,
    #[error("aromatic atom outside any ring")]
    AromaticOutsideRing,
    #[error("aromatic bond between non-aromatic atoms")]
    AromaticBondMismatch,
}

pub fn parse_smiles(text: &str) -> Result<MoleculeGraph, ParseError> {
    Parser::new(text)?.run()
}

#[derive(Clone, Copy)]
enum Slot {
    Atom(usize),
    Hydrogen,
    Ring(u32),
}

struct RingOpening {
    atom: usize,
    bond: Option<BondOrder>,
    offset: usize,
}

struct RawBond {
    a: usize,
    b: usize,
    order: Option<BondOrder>,
    offset: usize,
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    atoms: Vec<AtomRecord>,
    offsets: Vec<usize>,
    bracketed: Vec<bool>,
    order: Vec<Vec<Slot>>,
    bonds: Vec<RawBond>,
    rings: HashMap<u32, RingOpening>,
    branches: Vec<(usize, usize)>,
    prev: Option<usize>,
    pending: Option<(BondOrder, usize)>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Self, ParseError> {
        if text.is_empty() {
            return Err(err(0, ParseErrorKind::Empty));
        }
        if let Some(i) = text.bytes().position(|b| !b.is_ascii()) {
            return Err(err(i, ParseErrorKind::NonAscii));
        }
        Ok(Parser {
            s: text.as_bytes(),
            pos: 0,
            atoms: Vec::new(),
            offsets: Vec::new(),
            bracketed: Vec::new(),
            order: Vec::new(),
            bonds: Vec::new(),
            rings: HashMap::new(),
            branches: Vec::new(),
            prev: None,
            pending: None,
        })
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn run(mut self) -> Result<MoleculeGraph, ParseError> {
        while let Some(c) = self.peek() {
            let at = self.pos;
            match c {
                b'(' => {
                    let Some(prev) = self.prev else {
                        return Err(err(at, ParseErrorKind::BranchWithoutAtom));
                    };
                    if self.pending.is_some() {
                        return Err(err(at, ParseErrorKind::DanglingBond));
                    }
                    self.branches.push((prev, at));
                    self.pos += 1;
                }
                b')' => {
                    let Some((atom, _)) = self.branches.pop() else {
                        return Err(err(at, ParseErrorKind::UnbalancedParenthesis));
                    };
                    if self.pending.is_some() {
                        return Err(err(at, ParseErrorKind::DanglingBond));
                    }
                    self.prev = Some(atom);
                    self.pos += 1;
                }
                b'-' | b'=' | b'#' | b':' | b'/' | b'\\' => {
                    if self.pending.is_some() {
                        return Err(err(at, ParseErrorKind::DanglingBond));
                    }
                    let order = match c {
                        b'=' => BondOrder::Double,
                        b'#' => BondOrder::Triple,
                        b':' => BondOrder::Aromatic,
                        _ => BondOrder::Single,
                    };
                    self.pending = Some((order, at));
                    self.pos += 1;
                }
                b'.' => {
                    if self.pending.is_some() {
                        return Err(err(at, ParseErrorKind::DanglingBond));
                    }
                    self.prev = None;
                    self.pos += 1;
                }
                b'0'..=b'9' | b'%' => self.ring_closure()?,
                b'[' => self.bracket_atom()?,
                b'A'..=b'Z' | b'a'..=b'z' => self.organic_atom()?,
                _ => {
                    return Err(err(
                        at,
                        ParseErrorKind::Unsupported((c as char).to_string()),
                    ))
                }
            }
        }
        self.finish()
    }

    fn push_atom(&mut self, atom: AtomRecord, offset: usize, bracketed: bool) -> Result<usize, ParseError> {
        let idx = self.atoms.len();
        self.atoms.push(atom);
        self.offsets.push(offset);
        self.bracketed.push(bracketed);
        self.order.push(Vec::new());
        match self.prev {
            Some(prev) => {
                let order = self.pending.take().map(|(o, _)| o);
                self.add_bond(prev, idx, order, offset)?;
                self.order[idx].push(Slot::Atom(prev));
                self.order[prev].push(Slot::Atom(idx));
            }
            None => {
                if let Some((_, at)) = self.pending {
                    return Err(err(at, ParseErrorKind::DanglingBond));
                }
            }
        }
        self.prev = Some(idx);
        Ok(idx)
    }

    fn add_bond(&mut self, a: usize, b: usize, order: Option<BondOrder>, offset: usize) -> Result<(), ParseError> {
        if a == b {
            return Err(err(offset, ParseErrorKind::SelfLoop));
        }
        if self
            .bonds
            .iter()
            .any(|x| (x.a == a && x.b == b) || (x.a == b && x.b == a))
        {
            return Err(err(offset, ParseErrorKind::DuplicateBond));
        }
        self.bonds.push(RawBond { a, b, order, offset });
        Ok(())
    }

    fn organic_atom(&mut self) -> Result<(), ParseError> {
        let at = self.pos;
        let c = self.s[at];
        let next = self.s.get(at + 1).copied();
        let (z, aromatic, len) = match (c, next) {
            (b'B', Some(b'r')) => (element::BROMINE, false, 2),
            (b'C', Some(b'l')) => (element::CHLORINE, false, 2),
            (b'B', _) => (5, false, 1),
            (b'C', _) => (element::CARBON, false, 1),
            (b'N', _) => (element::NITROGEN, false, 1),
            (b'O', _) => (element::OXYGEN, false, 1),
            (b'P', _) => (element::PHOSPHORUS, false, 1),
            (b'S', _) => (element::SULFUR, false, 1),
            (b'F', _) => (element::FLUORINE, false, 1),
            (b'I', _) => (element::IODINE, false, 1),
            (b'b', _) => (5, true, 1),
            (b'c', _) => (element::CARBON, true, 1),
            (b'n', _) => (element::NITROGEN, true, 1),
            (b'o', _) => (element::OXYGEN, true, 1),
            (b'p', _) => (element::PHOSPHORUS, true, 1),
            (b's', _) => (element::SULFUR, true, 1),
            _ => {
                return Err(err(
                    at,
                    ParseErrorKind::UnknownElement((c as char).to_string()),
                ))
            }
        };
        self.pos += len;
        let mut atom = AtomRecord::new(z);
        atom.aromatic = aromatic;
        self.push_atom(atom, at, false)?;
        Ok(())
    }

    fn read_number(&mut self) -> Option<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()?
            .parse()
            .ok()
    }

    fn bracket_atom(&mut self) -> Result<(), ParseError> {
        let at = self.pos;
        self.pos += 1;
        let bad = |p: usize| err(p, ParseErrorKind::BadBracketAtom);

        let isotope = self.read_number();

        let sym_at = self.pos;
        let Some(first) = self.peek() else {
            return Err(bad(sym_at));
        };
        let (z, aromatic) = if first.is_ascii_lowercase() {
            let two = self.s.get(sym_at..sym_at + 2);
            let (sym, len) = match two {
                Some(b"se") => ("Se", 2),
                Some(b"as") => ("As", 2),
                Some(b"te") => ("Te", 2),
                _ => match first {
                    b'b' => ("B", 1),
                    b'c' => ("C", 1),
                    b'n' => ("N", 1),
                    b'o' => ("O", 1),
                    b'p' => ("P", 1),
                    b's' => ("S", 1),
                    _ => {
                        return Err(err(
                            sym_at,
                            ParseErrorKind::UnknownElement((first as char).to_string()),
                        ))
                    }
                },
            };
            self.pos += len;
            (element::atomic_number(sym).expect("table symbol"), true)
        } else if first.is_ascii_uppercase() {
            let second = self.s.get(sym_at + 1).copied().filter(u8::is_ascii_lowercase);
            let two = second.and_then(|c2| {
                let sym = format!("{}{}", first as char, c2 as char);
                element::atomic_number(&sym)
            });
            match two {
                Some(z) => {
                    self.pos += 2;
                    (z, false)
                }
                None => {
                    let sym = (first as char).to_string();
                    let z = element::atomic_number(&sym)
                        .ok_or_else(|| err(sym_at, ParseErrorKind::UnknownElement(sym)))?;
                    self.pos += 1;
                    (z, false)
                }
            }
        } else if first == b'*' {
            return Err(err(sym_at, ParseErrorKind::Unsupported("*".into())));
        } else {
            return Err(bad(sym_at));
        };

        let mut chirality = Chirality::None;
        if self.peek() == Some(b'@') {
            self.pos += 1;
            chirality = Chirality::CounterClockwise;
            if self.peek() == Some(b'@') {
                self.pos += 1;
                chirality = Chirality::Clockwise;
            }
            if self.peek().is_some_and(|c| c.is_ascii_uppercase() && c != b'H') {
                return Err(err(self.pos, ParseErrorKind::Unsupported("non-tetrahedral stereo".into())));
            }
        }

        let mut hydrogens = 0u8;
        if self.peek() == Some(b'H') {
            self.pos += 1;
            hydrogens = match self.read_number() {
                Some(n) => u8::try_from(n).map_err(|_| bad(self.pos))?,
                None => 1,
            };
        }

        let mut charge: i32 = 0;
        if let Some(sign @ (b'+' | b'-')) = self.peek() {
            let unit = if sign == b'+' { 1 } else { -1 };
            self.pos += 1;
            if let Some(n) = self.read_number() {
                charge = unit * n as i32;
            } else {
                charge = unit;
                while self.peek() == Some(sign) {
                    self.pos += 1;
                    charge += unit;
                }
            }
        }
        let charge = i8::try_from(charge).map_err(|_| bad(self.pos))?;

        if self.peek() == Some(b':') {
            self.pos += 1;
            if self.read_number().is_none() {
                return Err(bad(self.pos));
            }
        }
        if self.peek() != Some(b']') {
            return Err(bad(self.pos));
        }
        self.pos += 1;

        if aromatic && !element::can_be_aromatic(z) {
            return Err(err(sym_at, ParseErrorKind::UnknownElement(element::symbol(z).to_lowercase())));
        }
        let isotope = match isotope {
            Some(i) => Some(u16::try_from(i).map_err(|_| bad(at))?),
            None => None,
        };
        let atom = AtomRecord {
            element: z,
            charge,
            hydrogens,
            aromatic,
            isotope,
            chirality,
        };
        let idx = self.push_atom(atom, at, true)?;
        if hydrogens > 0 {
            self.order[idx].push(Slot::Hydrogen);
        }
        Ok(())
    }

    fn ring_closure(&mut self) -> Result<(), ParseError> {
        let at = self.pos;
        let number = if self.s[at] == b'%' {
            let digits = self.s.get(at + 1..at + 3);
            match digits {
                Some(d) if d.iter().all(u8::is_ascii_digit) => {
                    self.pos += 3;
                    ((d[0] - b'0') * 10 + (d[1] - b'0')) as u32
                }
                _ => return Err(err(at, ParseErrorKind::Unsupported("%".into()))),
            }
        } else {
            self.pos += 1;
            (self.s[at] - b'0') as u32
        };
        let Some(prev) = self.prev else {
            return Err(err(at, ParseErrorKind::RingWithoutAtom));
        };
        let bond = self.pending.take().map(|(o, _)| o);
        match self.rings.remove(&number) {
            Some(open) => {
                let order = match (open.bond, bond) {
                    (Some(a), Some(b)) if a != b => {
                        return Err(err(at, ParseErrorKind::RingBondConflict(number)))
                    }
                    (a, b) => a.or(b),
                };
                self.add_bond(open.atom, prev, order, at)?;
                let slot = self.order[open.atom]
                    .iter_mut()
                    .find(|s| matches!(s, Slot::Ring(n) if *n == number))
                    .expect("ring placeholder recorded at opening");
                *slot = Slot::Atom(prev);
                self.order[prev].push(Slot::Atom(open.atom));
            }
            None => {
                self.rings.insert(
                    number,
                    RingOpening {
                        atom: prev,
                        bond,
                        offset: at,
                    },
                );
                self.order[prev].push(Slot::Ring(number));
            }
        }
        Ok(())
    }

    fn finish(self) -> Result<MoleculeGraph, ParseError> {
        if let Some((num, open)) = self.rings.iter().min_by_key(|(_, o)| o.offset) {
            return Err(err(open.offset, ParseErrorKind::UnmatchedRingClosure(*num)));
        }
        if let Some(&(_, at)) = self.branches.first() {
            return Err(err(at, ParseErrorKind::UnbalancedParenthesis));
        }
        if let Some((_, at)) = self.pending {
            return Err(err(at, ParseErrorKind::DanglingBond));
        }
        if self.atoms.is_empty() {
            return Err(err(0, ParseErrorKind::Empty));
        }

        let mut atoms = self.atoms;
        let mut bonds: Vec<Bond> = Vec::with_capacity(self.bonds.len());
        for rb in &self.bonds {
            let both_aromatic = atoms[rb.a].aromatic && atoms[rb.b].aromatic;
            let order = match rb.order {
                Some(BondOrder::Aromatic) if !both_aromatic => {
                    return Err(err(rb.offset, ParseErrorKind::AromaticBondMismatch))
                }
                Some(o) => o,
                None if both_aromatic => BondOrder::Aromatic,
                None => BondOrder::Single,
            };
            bonds.push(Bond {
                begin: rb.a,
                end: rb.b,
                order,
            });
        }

        // Implicit hydrogens for organic-subset atoms, before explicit
        // hydrogen atoms are folded away.
        let mut valence_sum = vec![0u32; atoms.len()];
        for b in &bonds {
            valence_sum[b.begin] += b.order.valence();
            valence_sum[b.end] += b.order.valence();
        }
        for (i, atom) in atoms.iter_mut().enumerate() {
            if self.bracketed[i] {
                continue;
            }
            atom.hydrogens =
                element::implicit_hydrogens(atom.element, atom.aromatic, valence_sum[i])
                    .ok_or_else(|| {
                        err(
                            self.offsets[i],
                            ParseErrorKind::ValenceViolation(element::symbol(atom.element)),
                        )
                    })?;
        }

        let mut order = self.order;
        let (atoms, bonds, order, offsets) = fold_explicit_hydrogens(atoms, bonds, &mut order, self.offsets);

        // Ring perception on the final topology; aromatic bonds that ended up
        // outside every ring are demoted to single bonds.
        let stereo = atoms
            .iter()
            .zip(order)
            .map(|(a, slots)| {
                (a.chirality != Chirality::None).then(|| {
                    slots
                        .into_iter()
                        .map(|s| match s {
                            Slot::Atom(n) => NeighborRef::Atom(n),
                            Slot::Hydrogen => NeighborRef::Hydrogen,
                            Slot::Ring(_) => unreachable!("all rings closed"),
                        })
                        .collect()
                })
            })
            .collect::<Vec<_>>();
        let probe = MoleculeGraph::from_parts(atoms.clone(), bonds.clone(), stereo.clone());
        let mut bonds = bonds;
        for (i, b) in bonds.iter_mut().enumerate() {
            if b.order == BondOrder::Aromatic && !probe.is_bond_in_ring(i) {
                b.order = BondOrder::Single;
            }
        }
        if let Some(a) = (0..atoms.len()).find(|&a| atoms[a].aromatic && !probe.is_atom_in_ring(a)) {
            return Err(err(offsets[a], ParseErrorKind::AromaticOutsideRing));
        }
        Ok(MoleculeGraph::from_parts(atoms, bonds, stereo))
    }
}

type Folded = (Vec<AtomRecord>, Vec<Bond>, Vec<Vec<Slot>>, Vec<usize>);

/// Removes neutral hydrogen atoms bonded to exactly one non-hydrogen atom and
/// adds them to that atom's hydrogen count.
fn fold_explicit_hydrogens(
    mut atoms: Vec<AtomRecord>,
    bonds: Vec<Bond>,
    order: &mut [Vec<Slot>],
    offsets: Vec<usize>,
) -> Folded {
    let mut degree = vec![0usize; atoms.len()];
    for b in &bonds {
        degree[b.begin] += 1;
        degree[b.end] += 1;
    }
    let mut removed = vec![false; atoms.len()];
    for b in &bonds {
        for (h, heavy) in [(b.begin, b.end), (b.end, b.begin)] {
            if atoms[h].element == HYDROGEN
                && atoms[h].charge == 0
                && degree[h] == 1
                && atoms[heavy].element != HYDROGEN
                && b.order == BondOrder::Single
            {
                removed[h] = true;
                atoms[heavy].hydrogens += 1;
                for slot in order[heavy].iter_mut() {
                    if matches!(slot, Slot::Atom(n) if *n == h) {
                        *slot = Slot::Hydrogen;
                    }
                }
            }
        }
    }
    if !removed.iter().any(|&r| r) {
        return (atoms, bonds, order.to_vec(), offsets);
    }
    let mut map = vec![usize::MAX; atoms.len()];
    let mut next = 0;
    for (i, r) in removed.iter().enumerate() {
        if !r {
            map[i] = next;
            next += 1;
        }
    }
    let new_atoms = atoms
        .into_iter()
        .zip(&removed)
        .filter(|(_, r)| !**r)
        .map(|(a, _)| a)
        .collect();
    let new_bonds = bonds
        .into_iter()
        .filter(|b| !removed[b.begin] && !removed[b.end])
        .map(|b| Bond {
            begin: map[b.begin],
            end: map[b.end],
            order: b.order,
        })
        .collect();
    let new_order = order
        .iter()
        .zip(&removed)
        .filter(|(_, r)| !**r)
        .map(|(slots, _)| {
            slots
                .iter()
                .map(|s| match *s {
                    Slot::Atom(n) => Slot::Atom(map[n]),
                    other => other,
                })
                .collect()
        })
        .collect();
    let new_offsets = offsets
        .into_iter()
        .zip(&removed)
        .filter(|(_, r)| !**r)
        .map(|(o, _)| o)
        .collect();
    (new_atoms, new_bonds, new_order, new_offsets)
}

fn err(offset: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { offset, kind }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(s: &str) -> ParseErrorKind {
        parse_smiles(s).unwrap_err().kind
    }

    #[test]
    fn methane() {
        let g = parse_smiles("C").unwrap();
        assert_eq!(g.atom_count(), 1);
        assert_eq!(g.bond_count(), 0);
        assert_eq!(g.atom(0).hydrogens, 4);
    }

    #[test]
    fn benzene() {
        let g = parse_smiles("c1ccccc1").unwrap();
        assert_eq!(g.atom_count(), 6);
        assert_eq!(g.bond_count(), 6);
        assert!(g.atoms().iter().all(|a| a.aromatic && a.element == 6 && a.hydrogens == 1));
        assert!(g.bonds().iter().all(|b| b.order == BondOrder::Aromatic));
        assert!((0..6).all(|a| g.is_atom_in_ring(a)));
    }

    #[test]
    fn acetic_acid() {
        let g = parse_smiles("CC(=O)O").unwrap();
        assert_eq!(g.atom_count(), 4);
        let orders: Vec<_> = g.bonds().iter().map(|b| (b.begin, b.end, b.order)).collect();
        assert_eq!(
            orders,
            vec![
                (0, 1, BondOrder::Single),
                (1, 2, BondOrder::Double),
                (1, 3, BondOrder::Single)
            ]
        );
        let hs: Vec<_> = g.atoms().iter().map(|a| a.hydrogens).collect();
        assert_eq!(hs, vec![3, 0, 0, 1]);
    }

    #[test]
    fn bracket_atoms() {
        let g = parse_smiles("[NH4+]").unwrap();
        assert_eq!(g.atom(0).charge, 1);
        assert_eq!(g.atom(0).hydrogens, 4);
        let g = parse_smiles("[13CH4]").unwrap();
        assert_eq!(g.atom(0).isotope, Some(13));
        let g = parse_smiles("C[N+](=O)[O-]").unwrap();
        assert_eq!(g.atom(3).charge, -1);
        let g = parse_smiles("[Fe++]").unwrap();
        assert_eq!(g.atom(0).charge, 2);
        let g = parse_smiles("c1cc[nH]c1").unwrap();
        assert_eq!(g.atom(3).hydrogens, 1);
        let g = parse_smiles("[se]1cccc1").unwrap();
        assert_eq!(g.atom(0).element, 34);
        let g = parse_smiles("[Cl-]").unwrap();
        assert_eq!(g.atom(0).element, 17);
    }

    #[test]
    fn chirality_tags() {
        let g = parse_smiles("C[C@H](N)O").unwrap();
        assert_eq!(g.atom(1).chirality, Chirality::CounterClockwise);
        let g = parse_smiles("C[C@@H](N)O").unwrap();
        assert_eq!(g.atom(1).chirality, Chirality::Clockwise);
        assert_eq!(
            g.stereo_order(1).unwrap(),
            &[
                NeighborRef::Atom(0),
                NeighborRef::Hydrogen,
                NeighborRef::Atom(2),
                NeighborRef::Atom(3)
            ]
        );
    }

    #[test]
    fn ring_closure_percent_and_bond_on_closure() {
        let g = parse_smiles("C%12CCCCC%12").unwrap();
        assert_eq!(g.bond_count(), 6);
        let g = parse_smiles("C1CCCCC=1").unwrap();
        assert_eq!(g.bond(5).order, BondOrder::Double);
        assert_eq!(g.atom(0).hydrogens, 1);
    }

    #[test]
    fn fragments_and_cis_trans_symbols() {
        let g = parse_smiles("CCO.[Na+]").unwrap();
        assert_eq!(g.components().len(), 2);
        let g = parse_smiles("F/C=C/F").unwrap();
        assert_eq!(g.bond(0).order, BondOrder::Single);
    }

    #[test]
    fn explicit_hydrogens_are_folded() {
        let g = parse_smiles("[H]C([H])([H])[H]").unwrap();
        assert_eq!(g.atom_count(), 1);
        assert_eq!(g.atom(0).hydrogens, 4);
        let g = parse_smiles("[H][H]").unwrap();
        assert_eq!(g.atom_count(), 2);
    }

    #[test]
    fn non_ring_aromatic_bond_is_single() {
        let g = parse_smiles("c1ccccc1c1ccccc1").unwrap();
        assert_eq!(g.bond(6).order, BondOrder::Single);
    }

    #[test]
    fn error_offsets() {
        assert_eq!(parse_smiles("CC(C").unwrap_err().offset, 2);
        assert_eq!(kind("CC(C"), ParseErrorKind::UnbalancedParenthesis);
        assert_eq!(kind("CC)C"), ParseErrorKind::UnbalancedParenthesis);
        assert_eq!(parse_smiles("C1CC").unwrap_err().offset, 1);
        assert_eq!(kind("C1CC"), ParseErrorKind::UnmatchedRingClosure(1));
        assert_eq!(kind("CXC"), ParseErrorKind::UnknownElement("X".into()));
        assert_eq!(kind("C[Xx]"), ParseErrorKind::UnknownElement("X".into()));
        assert_eq!(parse_smiles("CC(C)(C)(C)C").unwrap_err().offset, 1);
        assert_eq!(kind("CC(C)(C)(C)C"), ParseErrorKind::ValenceViolation("C"));
        assert_eq!(kind(""), ParseErrorKind::Empty);
        assert_eq!(kind("CC>>CC"), ParseErrorKind::Unsupported(">".into()));
        assert_eq!(kind("C="), ParseErrorKind::DanglingBond);
        assert_eq!(kind("C11"), ParseErrorKind::SelfLoop);
        assert_eq!(kind("C12CC12"), ParseErrorKind::DuplicateBond);
        assert_eq!(kind("cc"), ParseErrorKind::AromaticOutsideRing);
        assert_eq!(kind("C[C"), ParseErrorKind::BadBracketAtom);
        assert_eq!(kind("(C)"), ParseErrorKind::BranchWithoutAtom);
    }
}
