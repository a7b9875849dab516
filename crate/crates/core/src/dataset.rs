//! CSV ingestion: `smiles,label` rows are normalized, bad rows are logged
//! and skipped, and duplicate normalized keys keep their first occurrence.

use std::collections::HashSet;
use std::fs::File;
use std::io::Read;
use std::path::Path;

use log::warn;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{map_slice, Execution};
use crate::mol::{normalize_record, parse_smiles, DatasetRecord, MoleculeGraph};

/// Row accounting for one load.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LoadReport {
    pub rows: usize,
    pub malformed: usize,
    pub unparsable: usize,
    pub duplicates: usize,
}

impl LoadReport {
    pub fn kept(&self) -> usize {
        self.rows - self.malformed - self.unparsable - self.duplicates
    }

    pub fn dropped(&self) -> usize {
        self.rows - self.kept()
    }
}

#[derive(Clone, Debug)]
pub struct Dataset {
    pub name: String,
    pub records: Vec<DatasetRecord>,
    pub report: LoadReport,
}

impl Dataset {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn labels(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.label).collect()
    }

    /// Parses every normalized key.
    pub fn graphs(&self, exec: Execution) -> Result<Vec<MoleculeGraph>> {
        map_slice(exec, &self.records, |r| parse_smiles(&r.smiles_normalized))
            .into_iter()
            .map(|g| g.map_err(Error::from))
            .collect()
    }
}

pub fn load_dataset(path: &Path, exec: Execution) -> Result<Dataset> {
    let file = File::open(path).map_err(|e| Error::Dataset {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    read_dataset(file, &path.display().to_string(), exec)
}

/// `origin_row` is the 1-based data row number, the header not counted.
pub fn read_dataset<R: Read>(reader: R, name: &str, exec: Execution) -> Result<Dataset> {
    let mut csv = csv::ReaderBuilder::new().flexible(true).from_reader(reader);
    let headers = csv.headers()?.clone();
    let column = |want: &str| {
        headers
            .iter()
            .position(|h| h.trim().eq_ignore_ascii_case(want))
            .ok_or_else(|| Error::Dataset {
                path: name.to_string(),
                message: format!("missing `{want}` column"),
            })
    };
    let (smiles_col, label_col) = (column("smiles")?, column("label")?);

    let mut report = LoadReport::default();
    let mut raw = Vec::new();
    for (i, row) in csv.records().enumerate() {
        let row_no = i + 1;
        report.rows += 1;
        let row = match row {
            Ok(r) => r,
            Err(e) => {
                warn!("{name}: row {row_no}: {e}");
                report.malformed += 1;
                continue;
            }
        };
        let fields = (row.get(smiles_col), row.get(label_col));
        let (Some(smiles), Some(label)) = fields else {
            warn!("{name}: row {row_no}: missing field");
            report.malformed += 1;
            continue;
        };
        match label.trim().parse::<f64>() {
            Ok(v) if v.is_finite() => raw.push((row_no, smiles.trim().to_string(), v)),
            _ => {
                warn!("{name}: row {row_no}: label `{label}` is not a finite number");
                report.malformed += 1;
            }
        }
    }

    let normalized = map_slice(exec, &raw, |(row, smiles, label)| normalize_record(smiles, *label, *row));
    let mut seen = HashSet::new();
    let mut records = Vec::with_capacity(normalized.len());
    for ((row, smiles, _), rec) in raw.iter().zip(normalized) {
        match rec {
            Ok(rec) => {
                if seen.insert(rec.smiles_normalized.clone()) {
                    records.push(rec);
                } else {
                    report.duplicates += 1;
                }
            }
            Err(e) => {
                warn!("{name}: row {row}: cannot parse `{smiles}`: {e}");
                report.unparsable += 1;
            }
        }
    }
    Ok(Dataset {
        name: name.to_string(),
        records,
        report,
    })
}
