//! Circular substructure enumeration.
//!
//! Round 0 hashes each atom's invariant tuple. Round `r` hashes the round
//! number, the centre's previous identifier (followed by its chirality tag
//! when enabled) and its neighbours' previous identifiers paired with bond
//! codes, sorted. An environment is emitted
//! only if its covered atom+bond set has not been emitted before; among
//! equal sets found in the same round the smallest identifier wins.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exec::{self, Execution};
use crate::invariants::{all_atom_invariants, canonical_chirality_tags, InvariantKind};
use crate::mol::MoleculeGraph;

const FNV_OFFSET: u32 = 0x811c_9dc5;
const FNV_PRIME: u32 = 0x0100_0193;

/// Identifier in `{1, …, 2³²}`. Stored in 32 bits with the raw value 0
/// standing for 2³², so ordering and arithmetic go through [`value`].
///
/// [`value`]: SubstructureId::value
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubstructureId(u32);

impl SubstructureId {
    pub const fn from_raw(raw: u32) -> Self {
        SubstructureId(raw)
    }

    pub fn from_value(value: u64) -> Option<Self> {
        match value {
            1..=0xffff_ffff => Some(SubstructureId(value as u32)),
            0x1_0000_0000 => Some(SubstructureId(0)),
            _ => None,
        }
    }

    pub const fn raw(self) -> u32 {
        self.0
    }

    pub const fn value(self) -> u64 {
        if self.0 == 0 {
            1 << 32
        } else {
            self.0 as u64
        }
    }
}

impl Ord for SubstructureId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value().cmp(&other.value())
    }
}

impl PartialOrd for SubstructureId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubstructureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.value())
    }
}

impl fmt::Display for SubstructureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl Serialize for SubstructureId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(self.value())
    }
}

impl<'de> Deserialize<'de> for SubstructureId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = u64::deserialize(d)?;
        SubstructureId::from_value(v)
            .ok_or_else(|| serde::de::Error::custom(format!("identifier {v} outside 1..=2^32")))
    }
}

/// FNV-1a (32-bit) over the little-endian bytes of each word; a zero hash
/// is the identifier 2³².
pub fn stable_hash(words: &[u32]) -> SubstructureId {
    let mut h = FNV_OFFSET;
    for w in words {
        for byte in w.to_le_bytes() {
            h ^= byte as u32;
            h = h.wrapping_mul(FNV_PRIME);
        }
    }
    SubstructureId(h)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EcfpParams {
    /// Maximal diameter; even.
    pub diameter: u32,
    pub invariants: InvariantKind,
    pub chirality: bool,
}

impl EcfpParams {
    pub fn new(diameter: u32, invariants: InvariantKind, chirality: bool) -> Self {
        assert!(diameter.is_multiple_of(2), "diameter must be even");
        EcfpParams {
            diameter,
            invariants,
            chirality,
        }
    }

    pub fn max_radius(&self) -> u32 {
        self.diameter / 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence {
    pub center: usize,
    pub radius: u32,
    /// Covered atoms, ascending.
    pub atoms: Vec<usize>,
    /// Covered bonds, ascending.
    pub bonds: Vec<usize>,
    /// Identifier of the same centre one round earlier.
    pub parent: Option<SubstructureId>,
}

/// The identifiers found in one molecule with their occurrences. Sets read
/// back from a fingerprint cache carry identifiers only.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentifierSet {
    entries: BTreeMap<SubstructureId, Vec<Occurrence>>,
}

impl IdentifierSet {
    pub fn from_ids<I: IntoIterator<Item = SubstructureId>>(ids: I) -> Self {
        IdentifierSet {
            entries: ids.into_iter().map(|id| (id, Vec::new())).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, id: SubstructureId) -> bool {
        self.entries.contains_key(&id)
    }

    /// Identifiers in ascending order.
    pub fn ids(&self) -> impl Iterator<Item = SubstructureId> + '_ {
        self.entries.keys().copied()
    }

    pub fn sorted_ids(&self) -> Vec<SubstructureId> {
        self.ids().collect()
    }

    pub fn occurrences(&self, id: SubstructureId) -> &[Occurrence] {
        self.entries.get(&id).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = (SubstructureId, &[Occurrence])> + '_ {
        self.entries.iter().map(|(id, occ)| (*id, occ.as_slice()))
    }

    /// `(child, parent)` links over all occurrences.
    pub fn parent_links(&self) -> impl Iterator<Item = (SubstructureId, SubstructureId)> + '_ {
        self.entries
            .iter()
            .flat_map(|(id, occ)| occ.iter().filter_map(move |o| o.parent.map(|p| (*id, p))))
    }

    fn insert(&mut self, id: SubstructureId, occurrence: Occurrence) {
        self.entries.entry(id).or_default().push(occurrence);
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(bits: usize) -> Self {
        BitSet(vec![0; bits.div_ceil(64).max(1)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= *b;
        }
    }

    fn members(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.0.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let t = bits.trailing_zeros() as usize;
                out.push(w * 64 + t);
                bits &= bits - 1;
            }
        }
        out
    }
}

pub fn enumerate_substructures(graph: &MoleculeGraph, params: &EcfpParams) -> IdentifierSet {
    let n = graph.atom_count();
    let mut out = IdentifierSet::default();
    if n == 0 {
        return out;
    }

    // Chirality enters each centre's hash from round 1 on, so radius-0
    // identifiers are the same with and without it.
    let tags = params.chirality.then(|| canonical_chirality_tags(graph));
    let mut ids: Vec<SubstructureId> = all_atom_invariants(graph, params.invariants, false)
        .iter()
        .map(|t| stable_hash(t))
        .collect();
    let mut atom_env: Vec<BitSet> = (0..n)
        .map(|a| {
            let mut s = BitSet::new(n);
            s.insert(a);
            s
        })
        .collect();
    let mut bond_env: Vec<BitSet> = vec![BitSet::new(graph.bond_count()); n];

    let mut seen: HashSet<(BitSet, BitSet)> = HashSet::new();
    for a in 0..n {
        seen.insert((atom_env[a].clone(), bond_env[a].clone()));
        out.insert(
            ids[a],
            Occurrence {
                center: a,
                radius: 0,
                atoms: vec![a],
                bonds: Vec::new(),
                parent: None,
            },
        );
    }

    let mut neighbour_words: Vec<(u32, SubstructureId)> = Vec::new();
    for radius in 1..=params.max_radius() {
        let mut next_ids = Vec::with_capacity(n);
        let mut next_atoms = Vec::with_capacity(n);
        let mut next_bonds = Vec::with_capacity(n);
        for a in 0..n {
            neighbour_words.clear();
            let mut atoms = atom_env[a].clone();
            let mut bonds = bond_env[a].clone();
            for &(nb, bond) in graph.neighbors(a) {
                neighbour_words.push((graph.bond(bond).order.code(), ids[nb]));
                atoms.union_with(&atom_env[nb]);
                bonds.union_with(&bond_env[nb]);
                bonds.insert(bond);
            }
            neighbour_words.sort_unstable();
            let mut words = Vec::with_capacity(2 + 2 * neighbour_words.len());
            words.push(radius);
            words.push(ids[a].raw());
            if let Some(tags) = &tags {
                words.push(tags[a]);
            }
            for &(code, id) in &neighbour_words {
                words.push(code);
                words.push(id.raw());
            }
            next_ids.push(stable_hash(&words));
            next_atoms.push(atoms);
            next_bonds.push(bonds);
        }

        // Same-round duplicates: keep the smallest identifier (then centre).
        let mut best: HashMap<(&BitSet, &BitSet), usize> = HashMap::new();
        for a in 0..n {
            if seen.contains(&(next_atoms[a].clone(), next_bonds[a].clone())) {
                continue;
            }
            best.entry((&next_atoms[a], &next_bonds[a]))
                .and_modify(|cur| {
                    if (next_ids[a], a) < (next_ids[*cur], *cur) {
                        *cur = a;
                    }
                })
                .or_insert(a);
        }
        let mut winners: Vec<usize> = best.into_values().collect();
        winners.sort_unstable();
        for &a in &winners {
            out.insert(
                next_ids[a],
                Occurrence {
                    center: a,
                    radius,
                    atoms: next_atoms[a].members(),
                    bonds: next_bonds[a].members(),
                    parent: Some(ids[a]),
                },
            );
        }
        let saturated = (0..n).all(|a| next_atoms[a] == atom_env[a] && next_bonds[a] == bond_env[a]);
        for a in 0..n {
            seen.insert((next_atoms[a].clone(), next_bonds[a].clone()));
        }
        ids = next_ids;
        atom_env = next_atoms;
        bond_env = next_bonds;
        if saturated {
            // Every environment already covers its whole component.
            break;
        }
    }
    out
}

/// Enumerates every molecule of a batch.
pub fn enumerate_batch(graphs: &[MoleculeGraph], params: &EcfpParams, exec: Execution) -> Vec<IdentifierSet> {
    exec::map_slice(exec, graphs, |g| enumerate_substructures(g, params))
}
