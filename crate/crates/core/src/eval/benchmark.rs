use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use log::info;
use serde::{Deserialize, Serialize};

use super::{compute_metric, knn_predict, random_split, scaffold_key, scaffold_split, stratified_split};
use super::{MetricKind, SplitPlan, SplitStrategy};
use crate::dataset::load_dataset;
use crate::ecfp::{enumerate_batch, EcfpParams, IdentifierSet};
use crate::error::{Error, Result};
use crate::exec::{map_slice, Execution};
use crate::index::SupportIndex;
use crate::invariants::InvariantKind;
use crate::pooling::{binarize_labels, fit_pooler, BinaryLabels, PoolingKind};

pub const SUPPORTED_DIAMETERS: [u32; 3] = [2, 4, 6];
pub const SUPPORTED_DIMS: [usize; 4] = [512, 1024, 2048, 4096];
pub const DEFAULT_SEEDS: [u64; 3] = [0, 1, 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Task {
    Regression,
    Classification,
}

impl Task {
    pub fn default_metric(self) -> MetricKind {
        match self {
            Task::Regression => MetricKind::Mae,
            Task::Classification => MetricKind::Auroc,
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Task::Regression => "regression",
            Task::Classification => "classification",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetSpec {
    pub name: String,
    pub path: PathBuf,
    pub task: Task,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LearnerConfig {
    pub k: usize,
}

impl Default for LearnerConfig {
    fn default() -> Self {
        LearnerConfig { k: 5 }
    }
}

/// Benchmark grid. Relative paths are resolved against the directory of the
/// config file by [`RunConfig::load`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub datasets: Vec<DatasetSpec>,
    #[serde(default = "default_diameters")]
    pub diameters: Vec<u32>,
    pub dims: Vec<usize>,
    #[serde(default = "default_invariants")]
    pub invariants: Vec<InvariantKind>,
    #[serde(default = "default_chirality")]
    pub chirality: Vec<bool>,
    pub pooling: Vec<PoolingKind>,
    #[serde(default = "default_split")]
    pub split: SplitStrategy,
    #[serde(default = "default_seeds")]
    pub seeds: Vec<u64>,
    #[serde(default)]
    pub learner: LearnerConfig,
    /// Defaults to MAE for regression and AUROC for classification.
    #[serde(default)]
    pub metric: Option<MetricKind>,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
}

fn default_diameters() -> Vec<u32> {
    vec![4]
}
fn default_invariants() -> Vec<InvariantKind> {
    vec![InvariantKind::Ecfp]
}
fn default_chirality() -> Vec<bool> {
    vec![true]
}
fn default_split() -> SplitStrategy {
    SplitStrategy::Random
}
fn default_seeds() -> Vec<u64> {
    DEFAULT_SEEDS.to_vec()
}
fn default_output_dir() -> PathBuf {
    PathBuf::from("results")
}

impl RunConfig {
    /// Parses without touching the filesystem; see [`RunConfig::validate`].
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// Reads, resolves relative paths against the file's directory, validates.
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut config = RunConfig::from_json(&text)?;
        let base = path.parent().unwrap_or(Path::new(""));
        for d in &mut config.datasets {
            if d.path.is_relative() {
                d.path = base.join(&d.path);
            }
        }
        if config.output_dir.is_relative() {
            config.output_dir = base.join(&config.output_dir);
        }
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        let lists = [
            ("datasets", self.datasets.len()),
            ("diameters", self.diameters.len()),
            ("dims", self.dims.len()),
            ("invariants", self.invariants.len()),
            ("chirality", self.chirality.len()),
            ("pooling", self.pooling.len()),
            ("seeds", self.seeds.len()),
        ];
        for (name, len) in lists {
            if len == 0 {
                return bad(format!("`{name}` must not be empty"));
            }
        }
        if let Some(d) = self.diameters.iter().find(|d| !SUPPORTED_DIAMETERS.contains(d)) {
            return bad(format!("diameter {d} not in {SUPPORTED_DIAMETERS:?}"));
        }
        if let Some(l) = self.dims.iter().find(|l| !SUPPORTED_DIMS.contains(l)) {
            return bad(format!("dimension {l} not in {SUPPORTED_DIMS:?}"));
        }
        if self.learner.k == 0 {
            return bad("learner k must be at least 1".into());
        }
        let mut names = HashSet::new();
        for d in &self.datasets {
            if !names.insert(d.name.as_str()) {
                return bad(format!("dataset name `{}` used twice", d.name));
            }
            if !d.path.is_file() {
                return bad(format!("dataset `{}`: {} does not exist", d.name, d.path.display()));
            }
            let metric = self.metric_for(d.task);
            let ok = match d.task {
                Task::Regression => metric == MetricKind::Mae,
                Task::Classification => metric != MetricKind::Mae,
            };
            if !ok {
                return bad(format!("metric {metric} does not fit {} dataset `{}`", d.task, d.name));
            }
        }
        if self.split == SplitStrategy::Stratified && self.datasets.iter().any(|d| d.task == Task::Regression) {
            return bad("stratified splitting needs classification datasets".into());
        }
        Ok(())
    }

    pub fn metric_for(&self, task: Task) -> MetricKind {
        self.metric.unwrap_or(task.default_metric())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellResult {
    pub seed: u64,
    /// Held-out fold.
    pub fold: usize,
    pub train_size: usize,
    pub test_size: usize,
    pub value: f64,
}

/// One grid point: every (seed, fold) cell plus their mean and population
/// standard deviation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub dataset: String,
    pub task: Task,
    pub split: SplitStrategy,
    pub diameter: u32,
    pub invariants: InvariantKind,
    pub chirality: bool,
    pub dim: usize,
    pub pooling: PoolingKind,
    pub k: usize,
    pub metric: MetricKind,
    pub cells: Vec<CellResult>,
    pub mean: f64,
    pub sd: f64,
}

impl RunResult {
    pub fn file_stem(&self) -> String {
        let name: String = self
            .dataset
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' })
            .collect();
        format!(
            "{name}_{}_D{}_{}_chir-{}_L{}_{}",
            self.split,
            self.diameter,
            self.invariants,
            if self.chirality { "on" } else { "off" },
            self.dim,
            self.pooling
        )
    }
}

/// Mean and population standard deviation, summed in the given order.
pub fn mean_sd(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Pooler seed for one cell, so filter and MIM draws differ between cells.
pub fn cell_seed(split_seed: u64, fold: usize) -> u64 {
    split_seed.wrapping_mul(2).wrapping_add(fold as u64)
}

struct Cell {
    seed: u64,
    fold: usize,
    train: Vec<usize>,
    test: Vec<usize>,
}

pub fn run_benchmark(config: &RunConfig, exec: Execution) -> Result<Vec<RunResult>> {
    config.validate()?;
    let mut results = Vec::new();
    for spec in &config.datasets {
        let data = load_dataset(&spec.path, exec)?;
        info!(
            "{}: {} compounds kept, {} rows dropped",
            spec.name,
            data.len(),
            data.report.dropped()
        );
        let labels = data.labels();
        if spec.task == Task::Classification {
            BinaryLabels::from_values(&labels)?;
        }
        let graphs = data.graphs(exec)?;
        let plans: Vec<SplitPlan> = config
            .seeds
            .iter()
            .map(|&seed| make_split(config.split, seed, &graphs, &labels))
            .collect::<Result<_>>()?;
        let cells: Vec<Cell> = plans
            .iter()
            .flat_map(|p| {
                (0..2).map(move |fold| {
                    let (train, test) = p.cell(fold);
                    Cell {
                        seed: p.seed,
                        fold,
                        train,
                        test,
                    }
                })
            })
            .collect();
        for c in &cells {
            if c.train.len() < config.learner.k || c.test.is_empty() {
                return Err(Error::NeighborCount {
                    k: config.learner.k,
                    n: c.train.len(),
                });
            }
        }
        let metric = config.metric_for(spec.task);

        for &diameter in &config.diameters {
            for &invariants in &config.invariants {
                for &chirality in &config.chirality {
                    let params = EcfpParams::new(diameter, invariants, chirality);
                    let sets = enumerate_batch(&graphs, &params, exec);
                    let indices: Vec<SupportIndex> = map_slice(exec, &cells, |c| {
                        SupportIndex::fit(c.train.iter().map(|&i| &sets[i]))
                    })
                    .into_iter()
                    .collect::<Result<_>>()?;
                    let grid: Vec<(usize, PoolingKind)> = config
                        .dims
                        .iter()
                        .flat_map(|&d| config.pooling.iter().map(move |&p| (d, p)))
                        .collect();
                    let jobs: Vec<(usize, PoolingKind, usize)> = grid
                        .iter()
                        .flat_map(|&(d, p)| (0..cells.len()).map(move |c| (d, p, c)))
                        .collect();
                    let values: Vec<f64> = map_slice(exec, &jobs, |&(dim, pooling, c)| {
                        run_cell(&cells[c], &indices[c], &sets, &labels, spec.task, metric, dim, pooling, config.learner.k)
                    })
                    .into_iter()
                    .collect::<Result<_>>()?;
                    for (g, &(dim, pooling)) in grid.iter().enumerate() {
                        let cell_results: Vec<CellResult> = cells
                            .iter()
                            .enumerate()
                            .map(|(c, cell)| CellResult {
                                seed: cell.seed,
                                fold: cell.fold,
                                train_size: cell.train.len(),
                                test_size: cell.test.len(),
                                value: values[g * cells.len() + c],
                            })
                            .collect();
                        let (mean, sd) = mean_sd(&cell_results.iter().map(|c| c.value).collect::<Vec<_>>());
                        let result = RunResult {
                            dataset: spec.name.clone(),
                            task: spec.task,
                            split: config.split,
                            diameter,
                            invariants,
                            chirality,
                            dim,
                            pooling,
                            k: config.learner.k,
                            metric,
                            cells: cell_results,
                            mean,
                            sd,
                        };
                        info!("{}: {metric} {mean:.4} ± {sd:.4}", result.file_stem());
                        results.push(result);
                    }
                }
            }
        }
    }
    Ok(results)
}

pub fn make_split(
    strategy: SplitStrategy,
    seed: u64,
    graphs: &[crate::mol::MoleculeGraph],
    labels: &[f64],
) -> Result<SplitPlan> {
    match strategy {
        SplitStrategy::Random => random_split(graphs.len(), seed),
        SplitStrategy::Stratified => stratified_split(BinaryLabels::from_values(labels)?.as_slice(), seed),
        SplitStrategy::Scaffold => {
            let keys: Vec<_> = graphs.iter().map(scaffold_key).collect();
            scaffold_split(&keys, seed)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_cell(
    cell: &Cell,
    index: &SupportIndex,
    sets: &[IdentifierSet],
    labels: &[f64],
    task: Task,
    metric: MetricKind,
    dim: usize,
    pooling: PoolingKind,
    k: usize,
) -> Result<f64> {
    let train_labels: Vec<f64> = cell.train.iter().map(|&i| labels[i]).collect();
    let binary = if pooling.is_supervised() {
        Some(match task {
            Task::Regression => binarize_labels(&train_labels)?,
            Task::Classification => BinaryLabels::from_values(&train_labels)?,
        })
    } else {
        None
    };
    let model = fit_pooler(pooling, index, binary.as_ref(), dim, cell_seed(cell.seed, cell.fold))?;
    let train_fp: Vec<_> = cell.train.iter().map(|&i| model.apply(&sets[i])).collect();
    let test_fp: Vec<_> = cell.test.iter().map(|&i| model.apply(&sets[i])).collect();
    let truths: Vec<f64> = cell.test.iter().map(|&i| labels[i]).collect();
    let predictions = knn_predict(&train_fp, &train_labels, &test_fp, k, Execution::Sequential)?;
    compute_metric(metric, &predictions, &truths)
}

/// Writes one pretty JSON report per result and `summary.csv`; returns the
/// written paths.
pub fn write_reports(results: &[RunResult], dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for r in results {
        let path = dir.join(format!("{}.json", r.file_stem()));
        let mut text = serde_json::to_string_pretty(r)?;
        text.push('\n');
        fs::write(&path, text)?;
        written.push(path);
    }
    let path = dir.join("summary.csv");
    let mut w = csv::Writer::from_path(&path)?;
    w.write_record([
        "dataset", "task", "split", "diameter", "invariants", "chirality", "dim", "pooling", "k", "metric", "cells",
        "mean", "sd",
    ])?;
    for r in results {
        w.write_record([
            r.dataset.clone(),
            r.task.to_string(),
            r.split.to_string(),
            r.diameter.to_string(),
            r.invariants.to_string(),
            (if r.chirality { "on" } else { "off" }).to_string(),
            r.dim.to_string(),
            r.pooling.to_string(),
            r.k.to_string(),
            r.metric.to_string(),
            r.cells.len().to_string(),
            r.mean.to_string(),
            r.sd.to_string(),
        ])?;
    }
    w.flush()?;
    written.push(path);
    Ok(written)
}
