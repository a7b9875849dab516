//! Cross-validation harness: seeded two-fold splits, a Tanimoto k-NN learner,
//! metrics and the benchmark grid runner.

mod benchmark;
mod knn;
mod metrics;
mod scaffold;
mod split;

pub use benchmark::{
    cell_seed, make_split, mean_sd, run_benchmark, write_reports, CellResult, DatasetSpec, LearnerConfig, RunConfig,
    RunResult, Task, DEFAULT_SEEDS, SUPPORTED_DIAMETERS, SUPPORTED_DIMS,
};
pub use knn::knn_predict;
pub use metrics::{auprc, auroc, compute_metric, mean_absolute_error, MetricKind};
pub use scaffold::{scaffold_atoms, scaffold_key, ScaffoldKey};
pub use split::{random_split, scaffold_split, stratified_split, SplitPlan, SplitStrategy};
