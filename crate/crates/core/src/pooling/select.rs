use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BinaryLabels, PoolerModel, PoolingKind};
use crate::ecfp::SubstructureId;
use crate::error::{Error, Result};
use crate::index::SupportIndex;
use crate::stats::{chi2_independence_p, mutual_information_table, ContingencyTable2x2};

/// Keeps the `dim` most frequent training identifiers, ties going to the
/// larger id. Slot 0 holds the most frequent.
pub fn fit_sort_slice(index: &SupportIndex, dim: usize) -> Result<PoolerModel> {
    let mut ranked: Vec<(usize, SubstructureId)> = index.iter().map(|(id, s)| (s.len(), id)).collect();
    ranked.sort_unstable_by(|a, b| b.cmp(a));
    ranked.truncate(dim);
    PoolerModel::new(PoolingKind::SortSlice, dim, ranked.into_iter().map(|(_, id)| id).collect())
}

/// Filtering: drop singletons at random, then non-closed identifiers at
/// random, then the least significant identifiers by χ² p-value.
pub fn fit_filter(index: &SupportIndex, labels: &BinaryLabels, dim: usize, seed: u64) -> Result<PoolerModel> {
    check_labels(index, labels)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current: BTreeSet<SubstructureId> = index.ids().collect();

    let mut singletons: Vec<SubstructureId> = index.iter().filter(|(_, s)| s.len() == 1).map(|(id, _)| id).collect();
    while current.len() > dim && !singletons.is_empty() {
        let victim = singletons.remove(rng.random_range(0..singletons.len()));
        current.remove(&victim);
    }

    if current.len() > dim {
        remove_non_closed(index, &mut current, dim, &mut rng);
    }

    let y = labels.as_slice();
    let mut scored: Vec<(f64, SubstructureId)> = current
        .iter()
        .map(|&id| {
            let table = ContingencyTable2x2::from_support(index.support(id).unwrap_or_default(), y);
            (chi2_independence_p(&table), id)
        })
        .collect();
    // Highest rank first: smaller p, then larger id.
    scored.sort_unstable_by(|a, b| a.0.total_cmp(&b.0).then(b.1.cmp(&a.1)));
    scored.truncate(dim);
    PoolerModel::new(PoolingKind::Filter, dim, scored.into_iter().map(|(_, id)| id).collect())
}

/// Step 2 of filtering. An identifier is non-closed while some proper
/// ancestor with the same support is still selected.
fn remove_non_closed(index: &SupportIndex, current: &mut BTreeSet<SubstructureId>, dim: usize, rng: &mut ChaCha8Rng) {
    let mut blockers: HashMap<SubstructureId, usize> = HashMap::new();
    let mut dependents: HashMap<SubstructureId, Vec<SubstructureId>> = HashMap::new();
    for &id in current.iter() {
        let supp = index.support(id);
        for anc in index.proper_ancestors(id) {
            if current.contains(&anc) && index.support(anc) == supp {
                *blockers.entry(id).or_default() += 1;
                dependents.entry(anc).or_default().push(id);
            }
        }
    }
    let mut candidates: Vec<SubstructureId> = blockers.keys().copied().collect();
    candidates.sort_unstable();

    while current.len() > dim && !candidates.is_empty() {
        let victim = candidates.remove(rng.random_range(0..candidates.len()));
        current.remove(&victim);
        for dep in dependents.get(&victim).into_iter().flatten() {
            let left = blockers.get_mut(dep).expect("dependent has blockers");
            *left -= 1;
            if *left == 0 {
                if let Ok(pos) = candidates.binary_search(dep) {
                    candidates.remove(pos);
                }
            }
        }
    }
}

/// Mutual-information maximisation: thin out identifiers sharing a support
/// at random, then keep the highest-MI identifiers.
pub fn fit_mim(index: &SupportIndex, labels: &BinaryLabels, dim: usize, seed: u64) -> Result<PoolerModel> {
    check_labels(index, labels)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current: BTreeSet<SubstructureId> = index.ids().collect();

    if current.len() > dim {
        let mut groups: HashMap<&[u32], Vec<SubstructureId>> = HashMap::new();
        for (id, supp) in index.iter() {
            groups.entry(supp).or_default().push(id);
        }
        let groups: Vec<Vec<SubstructureId>> = groups.into_values().filter(|g| g.len() > 1).collect();
        let mut group_of: HashMap<SubstructureId, usize> = HashMap::new();
        let mut alive: Vec<usize> = Vec::with_capacity(groups.len());
        for (g, members) in groups.iter().enumerate() {
            alive.push(members.len());
            for &id in members {
                group_of.insert(id, g);
            }
        }
        let mut candidates: Vec<SubstructureId> = group_of.keys().copied().collect();
        candidates.sort_unstable();

        while current.len() > dim && !candidates.is_empty() {
            let victim = candidates.remove(rng.random_range(0..candidates.len()));
            current.remove(&victim);
            let g = group_of[&victim];
            alive[g] -= 1;
            if alive[g] == 1 {
                let last = groups[g].iter().find(|id| current.contains(id)).expect("one member left");
                if let Ok(pos) = candidates.binary_search(last) {
                    candidates.remove(pos);
                }
            }
        }
    }

    let y = labels.as_slice();
    let mut scored: Vec<(f64, SubstructureId)> = current
        .iter()
        .map(|&id| {
            let table = ContingencyTable2x2::from_support(index.support(id).unwrap_or_default(), y);
            (mutual_information_table(&table), id)
        })
        .collect();
    scored.sort_unstable_by(|a, b| match b.0.total_cmp(&a.0) {
        Ordering::Equal => b.1.cmp(&a.1),
        o => o,
    });
    scored.truncate(dim);
    PoolerModel::new(PoolingKind::Mim, dim, scored.into_iter().map(|(_, id)| id).collect())
}

fn check_labels(index: &SupportIndex, labels: &BinaryLabels) -> Result<()> {
    if labels.len() != index.n() {
        return Err(Error::LabelCount {
            expected: index.n(),
            actual: labels.len(),
        });
    }
    Ok(())
}
