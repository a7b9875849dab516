use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricKind {
    Mae,
    Auroc,
    Auprc,
}

impl MetricKind {
    pub fn name(self) -> &'static str {
        match self {
            MetricKind::Mae => "mae",
            MetricKind::Auroc => "auroc",
            MetricKind::Auprc => "auprc",
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MetricKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mae" => Ok(MetricKind::Mae),
            "auroc" => Ok(MetricKind::Auroc),
            "auprc" => Ok(MetricKind::Auprc),
            other => Err(format!("unknown metric `{other}`")),
        }
    }
}

pub fn compute_metric(kind: MetricKind, predictions: &[f64], truths: &[f64]) -> Result<f64> {
    if predictions.len() != truths.len() {
        return Err(Error::LengthMismatch(predictions.len(), truths.len()));
    }
    if truths.is_empty() {
        return Err(Error::TooFewValues { required: 1, actual: 0 });
    }
    match kind {
        MetricKind::Mae => Ok(mean_absolute_error(predictions, truths)),
        MetricKind::Auroc => auroc(predictions, &binary_truths(truths)?),
        MetricKind::Auprc => auprc(predictions, &binary_truths(truths)?),
    }
}

pub fn mean_absolute_error(predictions: &[f64], truths: &[f64]) -> f64 {
    predictions.iter().zip(truths).map(|(p, t)| (p - t).abs()).sum::<f64>() / truths.len() as f64
}

fn binary_truths(truths: &[f64]) -> Result<Vec<bool>> {
    truths
        .iter()
        .enumerate()
        .map(|(index, &value)| match value {
            0.0 => Ok(false),
            1.0 => Ok(true),
            _ => Err(Error::NonBinaryLabel { index, value }),
        })
        .collect()
}

/// Score-descending groups of tied scores as `(positives, negatives)`.
fn tie_groups(scores: &[f64], truths: &[bool]) -> Vec<(u64, u64)> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]));
    let mut groups: Vec<(u64, u64)> = Vec::new();
    let mut last: Option<f64> = None;
    for i in order {
        if last != Some(scores[i]) {
            groups.push((0, 0));
            last = Some(scores[i]);
        }
        let g = groups.last_mut().expect("group pushed");
        if truths[i] {
            g.0 += 1;
        } else {
            g.1 += 1;
        }
    }
    groups
}

fn class_counts(truths: &[bool], metric: &'static str) -> Result<(u64, u64)> {
    let pos = truths.iter().filter(|&&t| t).count() as u64;
    let neg = truths.len() as u64 - pos;
    if pos == 0 || neg == 0 {
        return Err(Error::SingleClass { metric });
    }
    Ok((pos, neg))
}

/// Probability that a random positive outscores a random negative, ties
/// counting one half.
pub fn auroc(scores: &[f64], truths: &[bool]) -> Result<f64> {
    let (pos, neg) = class_counts(truths, "AUROC")?;
    let mut neg_above = 0u64;
    let mut twice_wins = 0u64;
    for (p, n) in tie_groups(scores, truths) {
        twice_wins += 2 * p * (neg - neg_above - n) + p * n;
        neg_above += n;
    }
    Ok(twice_wins as f64 / (2 * pos * neg) as f64)
}

/// Average precision: `Σ (R_k − R_{k−1}) · P_k` over score thresholds, tied
/// scores forming one threshold.
pub fn auprc(scores: &[f64], truths: &[bool]) -> Result<f64> {
    let (pos, _) = class_counts(truths, "AUPRC")?;
    let (mut tp, mut fp) = (0u64, 0u64);
    let mut ap = 0.0;
    for (p, n) in tie_groups(scores, truths) {
        tp += p;
        fp += n;
        if p > 0 {
            ap += (p as f64 / pos as f64) * (tp as f64 / (tp + fp) as f64);
        }
    }
    Ok(ap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mae_examples() {
        assert_eq!(compute_metric(MetricKind::Mae, &[1.0, 2.0], &[1.0, 2.0]).unwrap(), 0.0);
        assert_eq!(compute_metric(MetricKind::Mae, &[0.0, 4.0], &[1.0, 2.0]).unwrap(), 1.5);
    }

    #[test]
    fn auroc_examples() {
        let truths = [1.0, 0.0, 1.0, 0.0];
        assert_eq!(compute_metric(MetricKind::Auroc, &[0.9, 0.8, 0.7, 0.6], &truths).unwrap(), 0.75);
        assert_eq!(compute_metric(MetricKind::Auroc, &[0.9, 0.1, 0.7, 0.6], &truths).unwrap(), 1.0);
        assert_eq!(compute_metric(MetricKind::Auroc, &[0.5; 4], &truths).unwrap(), 0.5);
    }

    #[test]
    fn auprc_examples() {
        let truths = [1.0, 0.0, 1.0, 0.0];
        // thresholds: (R .5, P 1), (R .5, P .5), (R 1, P 2/3), (R 1, P .5)
        let ap = compute_metric(MetricKind::Auprc, &[0.9, 0.8, 0.7, 0.6], &truths).unwrap();
        assert!((ap - (0.5 + 0.5 * 2.0 / 3.0)).abs() < 1e-15);
        assert_eq!(compute_metric(MetricKind::Auprc, &[0.9, 0.1, 0.7, 0.6], &truths).unwrap(), 1.0);
        // one tied group: precision = prevalence
        assert_eq!(compute_metric(MetricKind::Auprc, &[0.5; 4], &truths).unwrap(), 0.5);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            compute_metric(MetricKind::Auroc, &[0.1, 0.2], &[1.0, 1.0]),
            Err(Error::SingleClass { .. })
        ));
        assert!(matches!(
            compute_metric(MetricKind::Mae, &[0.1], &[1.0, 1.0]),
            Err(Error::LengthMismatch(1, 2))
        ));
        assert!(matches!(
            compute_metric(MetricKind::Auprc, &[0.1, 0.2], &[1.0, 0.5]),
            Err(Error::NonBinaryLabel { index: 1, .. })
        ));
    }
}
