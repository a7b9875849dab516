use crate::error::{Error, Result};

/// One binary label per training compound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryLabels(Vec<bool>);

impl BinaryLabels {
    pub fn new(labels: Vec<bool>) -> Self {
        BinaryLabels(labels)
    }

    /// Accepts values that are exactly 0 or 1.
    pub fn from_values(values: &[f64]) -> Result<Self> {
        values
            .iter()
            .enumerate()
            .map(|(index, &value)| {
                if value == 0.0 {
                    Ok(false)
                } else if value == 1.0 {
                    Ok(true)
                } else {
                    Err(Error::NonBinaryLabel { index, value })
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryLabels)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }

    pub fn positives(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }
}

/// Splits real labels at the lower median: `y ≤ median → 0`, otherwise 1.
pub fn binarize_labels(values: &[f64]) -> Result<BinaryLabels> {
    if values.len() < 2 {
        return Err(Error::TooFewValues {
            required: 2,
            actual: values.len(),
        });
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let median = sorted[(sorted.len() - 1) / 2];
    Ok(BinaryLabels(values.iter().map(|&v| v > median).collect()))
}
