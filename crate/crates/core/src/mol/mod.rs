//! Molecular graphs: SMILES parsing, ring perception, a SMILES writer and
//! the light standardisation applied before fingerprinting.

pub mod element;
mod graph;
mod normalize;
mod rings;
mod smiles;
mod writer;

pub use graph::{AtomRecord, Bond, BondOrder, Chirality, MoleculeGraph, NeighborRef};
pub use normalize::{largest_fragment, normalize_record, normalize_smiles, DatasetRecord};
pub use rings::perceive_rings;
pub use smiles::{parse_smiles, ParseError, ParseErrorKind};
pub use writer::write_smiles;
