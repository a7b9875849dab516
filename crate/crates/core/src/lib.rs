//! Circular substructure fingerprints with pluggable substructure pooling.
//!
//! The pipeline is: SMILES text ([`mol`]) → per-atom invariants
//! ([`invariants`]) → circular substructure identifiers ([`ecfp`]) →
//! training-set statistics ([`index`]) → a fitted pooling operator that maps
//! identifier sets to fixed-length bit vectors ([`pooling`]). The [`eval`]
//! module wraps all of it in a cross-validation harness.

pub mod cache;
pub mod dataset;
pub mod ecfp;
pub mod error;
pub mod eval;
pub mod exec;
pub mod index;
pub mod invariants;
pub mod mol;
pub mod pooling;
pub mod stats;

pub use ecfp::{enumerate_substructures, stable_hash, EcfpParams, IdentifierSet, SubstructureId};
pub use error::{Error, Result};
pub use index::{FrequencyStats, SupportIndex};
pub use invariants::InvariantKind;
pub use mol::{parse_smiles, MoleculeGraph};
pub use pooling::{BinaryLabels, BitVector, PoolerModel, PoolingKind};
