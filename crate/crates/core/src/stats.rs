//! χ² independence test, plug-in entropy and mutual information for binary
//! variables.

use libm::erfc;

use crate::error::{Error, Result};

/// 2×2 counts; first index is the feature value, second the label value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ContingencyTable2x2 {
    pub n00: u64,
    pub n01: u64,
    pub n10: u64,
    pub n11: u64,
}

impl ContingencyTable2x2 {
    pub fn new(n00: u64, n01: u64, n10: u64, n11: u64) -> Self {
        ContingencyTable2x2 { n00, n01, n10, n11 }
    }

    /// Table for a feature given as a support (sorted indices of compounds with
    /// the feature) against binary labels.
    pub fn from_support(support: &[u32], labels: &[bool]) -> Self {
        let positives = labels.iter().filter(|&&l| l).count() as u64;
        let n = labels.len() as u64;
        let n11 = support.iter().filter(|&&i| labels[i as usize]).count() as u64;
        let n10 = support.len() as u64 - n11;
        let n01 = positives - n11;
        let n00 = n - n11 - n10 - n01;
        ContingencyTable2x2 { n00, n01, n10, n11 }
    }

    pub fn from_columns(feature: &[bool], label: &[bool]) -> Result<Self> {
        if feature.len() != label.len() {
            return Err(Error::LengthMismatch(feature.len(), label.len()));
        }
        let mut t = ContingencyTable2x2::default();
        for (&f, &l) in feature.iter().zip(label) {
            match (f, l) {
                (false, false) => t.n00 += 1,
                (false, true) => t.n01 += 1,
                (true, false) => t.n10 += 1,
                (true, true) => t.n11 += 1,
            }
        }
        Ok(t)
    }

    pub fn total(&self) -> u64 {
        self.n00 + self.n01 + self.n10 + self.n11
    }

    /// Pearson statistic without continuity correction; 0 when any margin is
    /// empty.
    pub fn chi2_statistic(&self) -> f64 {
        let n = self.total() as u128;
        let row0 = (self.n00 + self.n01) as u128;
        let row1 = (self.n10 + self.n11) as u128;
        let col0 = (self.n00 + self.n10) as u128;
        let col1 = (self.n01 + self.n11) as u128;
        if row0 == 0 || row1 == 0 || col0 == 0 || col1 == 0 {
            return 0.0;
        }
        let cross = (self.n11 as i128 * self.n00 as i128 - self.n10 as i128 * self.n01 as i128).unsigned_abs();
        // n·cross² / (row0·row1·col0·col1), with the squared term kept exact
        let num = n as f64 * (cross as f64) * (cross as f64);
        num / (row0 as f64 * row1 as f64 * col0 as f64 * col1 as f64)
    }
}

/// p-value of the 1-degree-of-freedom χ² test: `Q(1/2, x/2) = erfc(√(x/2))`.
pub fn chi2_independence_p(table: &ContingencyTable2x2) -> f64 {
    let x = table.chi2_statistic();
    if x == 0.0 {
        return 1.0;
    }
    erfc((x / 2.0).sqrt()).clamp(0.0, 1.0)
}

/// Shannon entropy in bits of a Bernoulli(p) variable, `0·log 0 = 0`.
pub fn binary_entropy(p: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&p));
    plogp(p) + plogp(1.0 - p)
}

fn plogp(p: f64) -> f64 {
    if p <= 0.0 {
        0.0
    } else {
        -p * p.log2()
    }
}

/// Plug-in mutual information (bits) between the feature and label of a
/// table: `H(feature) + H(label) − H(joint)`, clamped at zero.
pub fn mutual_information_table(t: &ContingencyTable2x2) -> f64 {
    let n = t.total() as f64;
    if n == 0.0 {
        return 0.0;
    }
    let h_feature = binary_entropy((t.n10 + t.n11) as f64 / n);
    let h_label = binary_entropy((t.n01 + t.n11) as f64 / n);
    // Summed in sorted order so that transposing the table is exact.
    let mut cells = [t.n00, t.n01, t.n10, t.n11].map(|c| plogp(c as f64 / n));
    cells.sort_by(f64::total_cmp);
    let h_joint: f64 = cells.iter().sum();
    (h_feature + h_label - h_joint).max(0.0)
}

pub fn mutual_information(feature: &[bool], label: &[bool]) -> Result<f64> {
    if feature.is_empty() {
        return Err(Error::TooFewValues {
            required: 1,
            actual: 0,
        });
    }
    Ok(mutual_information_table(&ContingencyTable2x2::from_columns(feature, label)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi2_examples() {
        let t = ContingencyTable2x2::new(2, 2, 2, 2);
        assert_eq!(t.chi2_statistic(), 0.0);
        assert_eq!(chi2_independence_p(&t), 1.0);

        let t = ContingencyTable2x2::new(4, 0, 0, 4);
        assert_eq!(t.chi2_statistic(), 8.0);
        assert!((chi2_independence_p(&t) - 0.004677734981047266).abs() < 1e-12);

        let t = ContingencyTable2x2::new(3, 1, 1, 3);
        assert_eq!(t.chi2_statistic(), 2.0);
        assert!((chi2_independence_p(&t) - 0.15729920705028513).abs() < 1e-12, "{}", chi2_independence_p(&t));
    }

    #[test]
    fn degenerate_margin() {
        let t = ContingencyTable2x2::new(5, 3, 0, 0);
        assert_eq!(chi2_independence_p(&t), 1.0);
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(binary_entropy(0.5), 1.0);
        assert_eq!(binary_entropy(0.0), 0.0);
        assert_eq!(binary_entropy(1.0), 0.0);
        assert!((binary_entropy(0.25) - 0.8112781244591328).abs() < 1e-15);
    }

    #[test]
    fn mi_examples() {
        let label = [true, true, true, true, false, false, false, false];
        assert!((mutual_information(&label, &label).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(mutual_information(&[true; 8], &label).unwrap(), 0.0);
        // agrees on 6 of 8
        let feature = [true, true, true, false, false, false, false, true];
        let mi = mutual_information(&feature, &label).unwrap();
        assert!((mi - 0.18872187554086717).abs() < 1e-12, "{mi}");
    }

    #[test]
    fn mi_length_mismatch() {
        assert!(matches!(
            mutual_information(&[true], &[true, false]),
            Err(Error::LengthMismatch(1, 2))
        ));
    }

    #[test]
    fn table_from_support_matches_columns() {
        let labels = [true, false, true, true, false];
        let support = [0u32, 1, 4];
        let feature: Vec<bool> = (0..5).map(|i| support.contains(&(i as u32))).collect();
        assert_eq!(
            ContingencyTable2x2::from_support(&support, &labels),
            ContingencyTable2x2::from_columns(&feature, &labels).unwrap()
        );
    }
}
