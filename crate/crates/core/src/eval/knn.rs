use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exec::{map_slice, Execution};
use crate::pooling::BitVector;

/// Mean label of the `k` Tanimoto-nearest training vectors for each test
/// vector. Distance ties go to the lower training index. With 0/1 labels the
/// prediction is the fraction of positive neighbours.
pub fn knn_predict(
    train: &[BitVector],
    train_labels: &[f64],
    test: &[BitVector],
    k: usize,
    exec: Execution,
) -> Result<Vec<f64>> {
    if train.len() != train_labels.len() {
        return Err(Error::LengthMismatch(train.len(), train_labels.len()));
    }
    if k == 0 || k > train.len() {
        return Err(Error::NeighborCount { k, n: train.len() });
    }
    Ok(map_slice(exec, test, |q| predict_one(train, train_labels, q, k)))
}

fn predict_one(train: &[BitVector], labels: &[f64], query: &BitVector, k: usize) -> f64 {
    // (|a ∧ b|, |a ∨ b|, index); similarity compared exactly as fractions
    let mut scored: Vec<(u32, u32, usize)> = train
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let (inter, union) = query.and_or_counts(t);
            (inter, union, i)
        })
        .collect();
    scored.select_nth_unstable_by(k - 1, closer);
    let mut nearest: Vec<usize> = scored[..k].iter().map(|s| s.2).collect();
    nearest.sort_unstable();
    nearest.iter().map(|&i| labels[i]).sum::<f64>() / k as f64
}

/// Orders by ascending distance, then ascending index. Two all-zero vectors
/// have similarity 1.
fn closer(a: &(u32, u32, usize), b: &(u32, u32, usize)) -> Ordering {
    let frac = |(i, u): (u32, u32)| if u == 0 { (1u64, 1u64) } else { (i as u64, u as u64) };
    let (ai, au) = frac((a.0, a.1));
    let (bi, bu) = frac((b.0, b.1));
    // larger similarity first
    (bi * au).cmp(&(ai * bu)).then(a.2.cmp(&b.2))
}
