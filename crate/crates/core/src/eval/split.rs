use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::ScaffoldKey;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitStrategy {
    Random,
    Stratified,
    Scaffold,
}

impl SplitStrategy {
    pub fn name(self) -> &'static str {
        match self {
            SplitStrategy::Random => "random",
            SplitStrategy::Stratified => "stratified",
            SplitStrategy::Scaffold => "scaffold",
        }
    }
}

impl fmt::Display for SplitStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SplitStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "random" => Ok(SplitStrategy::Random),
            "stratified" => Ok(SplitStrategy::Stratified),
            "scaffold" => Ok(SplitStrategy::Scaffold),
            other => Err(format!("unknown split strategy `{other}`")),
        }
    }
}

/// Two-fold assignment of compounds for one seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPlan {
    pub strategy: SplitStrategy,
    pub seed: u64,
    fold_of: Vec<u8>,
}

impl SplitPlan {
    pub fn len(&self) -> usize {
        self.fold_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fold_of.is_empty()
    }

    pub fn fold_of(&self, compound: usize) -> usize {
        self.fold_of[compound] as usize
    }

    /// Ascending compound indices of fold `k` (0 or 1).
    pub fn fold(&self, k: usize) -> Vec<usize> {
        (0..self.fold_of.len()).filter(|&i| self.fold_of[i] as usize == k).collect()
    }

    /// `(train, test)` with fold `k` held out.
    pub fn cell(&self, k: usize) -> (Vec<usize>, Vec<usize>) {
        (self.fold(1 - k), self.fold(k))
    }
}

fn check_size(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooFewValues { required: 2, actual: n });
    }
    Ok(())
}

/// Seeded shuffle, first half to fold 0.
pub fn random_split(n: usize, seed: u64) -> Result<SplitPlan> {
    check_size(n)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut fold_of = vec![1u8; n];
    for &i in &order[..n / 2] {
        fold_of[i] = 0;
    }
    Ok(SplitPlan {
        strategy: SplitStrategy::Random,
        seed,
        fold_of,
    })
}

/// Per-class seeded shuffle, members dealt alternately to the two folds. Each
/// class starts on whichever fold is currently smaller.
pub fn stratified_split(labels: &[bool], seed: u64) -> Result<SplitPlan> {
    check_size(labels.len())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fold_of = vec![0u8; labels.len()];
    let mut sizes = [0usize; 2];
    for class in [false, true] {
        let mut members: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] == class).collect();
        members.shuffle(&mut rng);
        let start = usize::from(sizes[1] < sizes[0]);
        for (j, &i) in members.iter().enumerate() {
            let f = (start + j) % 2;
            fold_of[i] = f as u8;
            sizes[f] += 1;
        }
    }
    Ok(SplitPlan {
        strategy: SplitStrategy::Stratified,
        seed,
        fold_of,
    })
}

/// Scaffold groups in seeded random order, each placed whole into the
/// currently smaller fold (fold 0 on ties).
pub fn scaffold_split(keys: &[ScaffoldKey], seed: u64) -> Result<SplitPlan> {
    check_size(keys.len())?;
    let mut groups: BTreeMap<ScaffoldKey, Vec<usize>> = BTreeMap::new();
    for (i, &k) in keys.iter().enumerate() {
        groups.entry(k).or_default().push(i);
    }
    if groups.len() < 2 {
        return Err(Error::TooFewScaffolds(groups.len()));
    }
    let mut groups: Vec<Vec<usize>> = groups.into_values().collect();
    groups.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut fold_of = vec![0u8; keys.len()];
    let mut sizes = [0usize; 2];
    for g in groups {
        let f = usize::from(sizes[1] < sizes[0]);
        sizes[f] += g.len();
        for i in g {
            fold_of[i] = f as u8;
        }
    }
    Ok(SplitPlan {
        strategy: SplitStrategy::Scaffold,
        seed,
        fold_of,
    })
}
