//! Substructure pooling: maps an identifier set to a fixed-length bit vector.
//!
//! Folding reduces identifiers modulo `L`. The three selection methods (Sort
//! & Slice, filtering, MIM) pick at most `L` training identifiers and give
//! each its own slot, so every set bit names exactly one identifier.

mod bitvec;
mod labels;
mod select;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ecfp::{IdentifierSet, SubstructureId};
use crate::error::{Error, Result};
use crate::exec::{map_slice, Execution};

pub use bitvec::BitVector;
pub use labels::{binarize_labels, BinaryLabels};
pub use select::{fit_filter, fit_mim, fit_sort_slice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PoolingKind {
    Fold,
    #[serde(rename = "sortslice")]
    SortSlice,
    Filter,
    Mim,
}

impl PoolingKind {
    pub const ALL: [PoolingKind; 4] = [
        PoolingKind::Fold,
        PoolingKind::SortSlice,
        PoolingKind::Filter,
        PoolingKind::Mim,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PoolingKind::Fold => "fold",
            PoolingKind::SortSlice => "sortslice",
            PoolingKind::Filter => "filter",
            PoolingKind::Mim => "mim",
        }
    }

    /// Whether fitting uses binary training labels.
    pub fn is_supervised(self) -> bool {
        matches!(self, PoolingKind::Filter | PoolingKind::Mim)
    }
}

impl fmt::Display for PoolingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PoolingKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PoolingKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown pooling method `{s}` (expected fold, sortslice, filter or mim)"))
    }
}

/// Hash-based folding: bit `J mod L` for every identifier.
pub fn pool_fold(ids: &IdentifierSet, dim: usize) -> BitVector {
    assert!(dim >= 1, "fingerprint length must be at least 1");
    let mut v = BitVector::zeros(dim);
    for id in ids.ids() {
        v.set((id.value() % dim as u64) as usize);
    }
    v
}

#[derive(Serialize, Deserialize)]
struct ModelRepr {
    kind: PoolingKind,
    dim: usize,
    slots: Vec<SubstructureId>,
    padding: usize,
}

/// A fitted pooling function of dimension `dim`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "ModelRepr", into = "ModelRepr")]
pub struct PoolerModel {
    kind: PoolingKind,
    dim: usize,
    slots: Vec<SubstructureId>,
    lookup: HashMap<SubstructureId, usize>,
}

impl PartialEq for PoolerModel {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.dim == other.dim && self.slots == other.slots
    }
}

impl Eq for PoolerModel {}

impl PoolerModel {
    pub fn fold(dim: usize) -> Result<Self> {
        Self::new(PoolingKind::Fold, dim, Vec::new())
    }

    /// Selection model with slot `k` holding `slots[k]`; the remaining
    /// `dim - slots.len()` slots are zero padding.
    pub fn new(kind: PoolingKind, dim: usize, slots: Vec<SubstructureId>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Config("fingerprint length must be at least 1".into()));
        }
        if kind == PoolingKind::Fold && !slots.is_empty() {
            return Err(Error::Config("a fold model has no slots".into()));
        }
        if slots.len() > dim {
            return Err(Error::Config(format!("{} slots exceed dimension {dim}", slots.len())));
        }
        let lookup: HashMap<_, _> = slots.iter().enumerate().map(|(k, &id)| (id, k)).collect();
        if lookup.len() != slots.len() {
            return Err(Error::Config("slot identifiers must be distinct".into()));
        }
        Ok(PoolerModel {
            kind,
            dim,
            slots,
            lookup,
        })
    }

    pub fn kind(&self) -> PoolingKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn slots(&self) -> &[SubstructureId] {
        &self.slots
    }

    /// Number of all-zero trailing slots.
    pub fn padding(&self) -> usize {
        if self.kind == PoolingKind::Fold {
            0
        } else {
            self.dim - self.slots.len()
        }
    }

    pub fn slot_of(&self, id: SubstructureId) -> Option<usize> {
        match self.kind {
            PoolingKind::Fold => Some((id.value() % self.dim as u64) as usize),
            _ => self.lookup.get(&id).copied(),
        }
    }

    pub fn apply(&self, ids: &IdentifierSet) -> BitVector {
        if self.kind == PoolingKind::Fold {
            return pool_fold(ids, self.dim);
        }
        let mut v = BitVector::zeros(self.dim);
        for id in ids.ids() {
            if let Some(&k) = self.lookup.get(&id) {
                v.set(k);
            }
        }
        v
    }

    pub fn apply_batch(&self, sets: &[IdentifierSet], exec: Execution) -> Vec<BitVector> {
        map_slice(exec, sets, |s| self.apply(s))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl TryFrom<ModelRepr> for PoolerModel {
    type Error = Error;

    fn try_from(r: ModelRepr) -> Result<Self> {
        let model = PoolerModel::new(r.kind, r.dim, r.slots)?;
        if model.padding() != r.padding {
            return Err(Error::Config(format!(
                "padding {} does not match dimension {} with {} slots",
                r.padding,
                r.dim,
                model.slots.len()
            )));
        }
        Ok(model)
    }
}

impl From<PoolerModel> for ModelRepr {
    fn from(m: PoolerModel) -> Self {
        let padding = m.padding();
        ModelRepr {
            kind: m.kind,
            dim: m.dim,
            slots: m.slots,
            padding,
        }
    }
}

/// Fits a pooler of any kind. `labels` is required for the supervised kinds.
pub fn fit_pooler(
    kind: PoolingKind,
    index: &crate::index::SupportIndex,
    labels: Option<&BinaryLabels>,
    dim: usize,
    seed: u64,
) -> Result<PoolerModel> {
    let need_labels = || {
        labels.ok_or_else(|| Error::Config(format!("pooling method `{kind}` needs training labels")))
    };
    match kind {
        PoolingKind::Fold => PoolerModel::fold(dim),
        PoolingKind::SortSlice => fit_sort_slice(index, dim),
        PoolingKind::Filter => fit_filter(index, need_labels()?, dim, seed),
        PoolingKind::Mim => fit_mim(index, need_labels()?, dim, seed),
    }
}

/// Pairs of distinct ids that share a fold slot; each id is paired with the
/// first id seen in its slot.
pub fn fold_collisions<'a, I>(ids: I, dim: usize) -> Vec<(SubstructureId, SubstructureId)>
where
    I: IntoIterator<Item = &'a SubstructureId>,
{
    let mut first: HashMap<u64, SubstructureId> = HashMap::new();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &id in ids {
        if !seen.insert(id) {
            continue;
        }
        let slot = id.value() % dim as u64;
        match first.get(&slot) {
            Some(&other) => out.push((other, id)),
            None => {
                first.insert(slot, id);
            }
        }
    }
    out
}
