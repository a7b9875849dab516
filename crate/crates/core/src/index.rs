//! Training-set statistics over substructure identifiers.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::ecfp::{IdentifierSet, SubstructureId};
use crate::error::{Error, Result};

/// Per-identifier supports over a training set of `n` compounds. Supports are
/// ascending compound-index lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportIndex {
    n: usize,
    supports: BTreeMap<SubstructureId, Vec<u32>>,
    parents: BTreeMap<SubstructureId, BTreeSet<SubstructureId>>,
}

impl SupportIndex {
    pub fn fit<'a, I>(sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a IdentifierSet>,
    {
        let mut n = 0usize;
        let mut supports: BTreeMap<SubstructureId, Vec<u32>> = BTreeMap::new();
        let mut parents: BTreeMap<SubstructureId, BTreeSet<SubstructureId>> = BTreeMap::new();
        for (i, set) in sets.into_iter().enumerate() {
            n = i + 1;
            for id in set.ids() {
                supports.entry(id).or_default().push(i as u32);
            }
            for (child, parent) in set.parent_links() {
                parents.entry(child).or_default().insert(parent);
            }
        }
        if n == 0 {
            return Err(Error::EmptyTrainingSet);
        }
        Ok(SupportIndex { n, supports, parents })
    }

    /// Builds an index directly from supports and `(child, parent)` links.
    pub fn from_supports<S, P>(n: usize, supports: S, parent_links: P) -> Result<Self>
    where
        S: IntoIterator<Item = (SubstructureId, Vec<u32>)>,
        P: IntoIterator<Item = (SubstructureId, SubstructureId)>,
    {
        if n == 0 {
            return Err(Error::EmptyTrainingSet);
        }
        let mut map = BTreeMap::new();
        for (id, mut supp) in supports {
            supp.sort_unstable();
            supp.dedup();
            if supp.is_empty() || supp.last().is_some_and(|&i| i as usize >= n) {
                return Err(Error::Config(format!(
                    "support of {id} must be a non-empty subset of 0..{n}"
                )));
            }
            map.insert(id, supp);
        }
        let mut parents: BTreeMap<SubstructureId, BTreeSet<SubstructureId>> = BTreeMap::new();
        for (child, parent) in parent_links {
            parents.entry(child).or_default().insert(parent);
        }
        Ok(SupportIndex {
            n,
            supports: map,
            parents,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct training identifiers.
    pub fn m_t(&self) -> usize {
        self.supports.len()
    }

    /// Identifiers in ascending order.
    pub fn ids(&self) -> impl Iterator<Item = SubstructureId> + '_ {
        self.supports.keys().copied()
    }

    pub fn support(&self, id: SubstructureId) -> Option<&[u32]> {
        self.supports.get(&id).map(Vec::as_slice)
    }

    /// `c(J)`; zero for identifiers never seen in training.
    pub fn count(&self, id: SubstructureId) -> usize {
        self.supports.get(&id).map_or(0, Vec::len)
    }

    /// Binary feature value `f_J` of training compound `compound`.
    pub fn feature(&self, id: SubstructureId, compound: usize) -> bool {
        self.support(id)
            .is_some_and(|s| s.binary_search(&(compound as u32)).is_ok())
    }

    pub fn iter(&self) -> impl Iterator<Item = (SubstructureId, &[u32])> + '_ {
        self.supports.iter().map(|(id, s)| (*id, s.as_slice()))
    }

    pub fn parents(&self, id: SubstructureId) -> impl Iterator<Item = SubstructureId> + '_ {
        self.parents.get(&id).into_iter().flatten().copied()
    }

    /// Transitive closure of the parent relation, excluding `id` itself.
    pub fn proper_ancestors(&self, id: SubstructureId) -> BTreeSet<SubstructureId> {
        let mut out = BTreeSet::new();
        let mut stack: Vec<SubstructureId> = self.parents(id).collect();
        while let Some(p) = stack.pop() {
            if p != id && out.insert(p) {
                stack.extend(self.parents(p));
            }
        }
        out
    }

    pub fn frequency_report(&self) -> FrequencyStats {
        let counts: Vec<usize> = self.supports.values().map(Vec::len).collect();
        FrequencyStats::from_counts(self.n, &counts)
    }
}

/// Shape of the support-count distribution. Percentages are of `m_t`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrequencyStats {
    pub n: usize,
    pub m_t: usize,
    /// `c(J) = 1`
    pub singleton_pct: f64,
    /// `c(J) ≤ 10`
    pub at_most_10_pct: f64,
    /// `c(J) ≤ 100`
    pub at_most_100_pct: f64,
    /// `c(J) < n/2`
    pub below_half_pct: f64,
    /// `c(J) > n/2`
    pub above_half_count: usize,
    /// `c(J) ≥ 0.9·n`
    pub at_least_90pct_count: usize,
}

impl FrequencyStats {
    pub fn from_counts(n: usize, counts: &[usize]) -> Self {
        let m = counts.len();
        let pct = |k: usize| if m == 0 { 0.0 } else { 100.0 * k as f64 / m as f64 };
        let count = |f: &dyn Fn(usize) -> bool| counts.iter().filter(|&&c| f(c)).count();
        FrequencyStats {
            n,
            m_t: m,
            singleton_pct: pct(count(&|c| c == 1)),
            at_most_10_pct: pct(count(&|c| c <= 10)),
            at_most_100_pct: pct(count(&|c| c <= 100)),
            below_half_pct: pct(count(&|c| 2 * c < n)),
            above_half_count: count(&|c| 2 * c > n),
            at_least_90pct_count: count(&|c| 10 * c >= 9 * n),
        }
    }
}
