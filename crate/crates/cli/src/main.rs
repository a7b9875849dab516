use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{info, warn};

use fp_pool_core::cache::{load_cache, save_cache};
use fp_pool_core::dataset::{load_dataset, Dataset};
use fp_pool_core::ecfp::enumerate_batch;
use fp_pool_core::eval::{run_benchmark, write_reports, RunConfig};
use fp_pool_core::exec::{with_jobs, Execution};
use fp_pool_core::pooling::{binarize_labels, fit_pooler};
use fp_pool_core::{BinaryLabels, EcfpParams, Error, IdentifierSet, InvariantKind, PoolerModel, PoolingKind, SupportIndex};

const SEED_ENV: &str = "FP_POOL_SEED";

/// Circular fingerprints with hash-based folding or substructure pooling.
#[derive(Parser)]
#[command(name = "fp-pool", version)]
struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Seed, or comma-separated seed list for `benchmark`. Overrides FP_POOL_SEED.
    #[arg(long, global = true, value_name = "k")]
    seed: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate identifiers for a CSV and write an FPS1 cache.
    Fingerprint {
        #[arg(long, value_name = "CSV")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        output: PathBuf,
        #[command(flatten)]
        fp: FingerprintArgs,
    },
    /// Print the training-set frequency report as JSON.
    Stats {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        fp: FingerprintArgs,
    },
    /// Fit a pooler on a training CSV and write its JSON model.
    FitPooler {
        #[arg(long, value_name = "CSV")]
        input: PathBuf,
        #[arg(long)]
        pooling: PoolingKind,
        #[arg(long = "dim", value_name = "L")]
        dim: usize,
        /// How labels are turned binary for filter and mim.
        #[arg(long, value_enum, default_value_t = TaskArg::Regression)]
        task: TaskArg,
        /// Model file (default: stdout).
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
        #[command(flatten)]
        fp: FingerprintArgs,
    },
    /// Apply a fitted pooler; writes `row,bits` CSV.
    ApplyPooler {
        #[arg(long, value_name = "FILE")]
        model: PathBuf,
        #[command(flatten)]
        source: Source,
        /// Output CSV (default: stdout).
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
        #[command(flatten)]
        fp: FingerprintArgs,
    },
    /// Run a cross-validation grid described by a JSON config.
    Benchmark {
        #[arg(long, value_name = "FILE")]
        config: PathBuf,
        /// Overrides the config's output directory.
        #[arg(long, value_name = "DIR")]
        output_dir: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Dataset CSV with `smiles,label` columns.
    #[arg(long, value_name = "CSV")]
    input: Option<PathBuf>,
    /// FPS1 cache written by `fingerprint`.
    #[arg(long, value_name = "FILE")]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct FingerprintArgs {
    /// Maximal substructure diameter, even [default: 4].
    #[arg(long, value_parser = parse_diameter)]
    diameter: Option<u32>,
    /// Atom invariants: ecfp or fcfp [default: ecfp].
    #[arg(long)]
    invariants: Option<InvariantKind>,
    /// Tetrahedral chirality [default: on].
    #[arg(long, value_enum)]
    chirality: Option<Switch>,
}

impl FingerprintArgs {
    fn params(&self) -> EcfpParams {
        EcfpParams::new(
            self.diameter.unwrap_or(4),
            self.invariants.unwrap_or(InvariantKind::Ecfp),
            self.chirality.unwrap_or(Switch::On) == Switch::On,
        )
    }

    fn given(&self) -> bool {
        self.diameter.is_some() || self.invariants.is_some() || self.chirality.is_some()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum TaskArg {
    Regression,
    Classification,
}

fn parse_diameter(s: &str) -> Result<u32, String> {
    let d: u32 = s.parse().map_err(|e| format!("{e}"))?;
    if !d.is_multiple_of(2) {
        return Err(format!("diameter must be even, got {d}"));
    }
    Ok(d)
}

/// Usage and configuration problems exit with 2, everything else with 1.
struct Usage(String);

impl std::fmt::Debug for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    let jobs = cli.jobs;
    match with_jobs(jobs, || run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage =
                e.downcast_ref::<Usage>().is_some() || matches!(e.downcast_ref::<Error>(), Some(Error::Config(_)));
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let exec = Execution::default();
    let seeds = seed_list(cli.seed.as_deref())?;
    match cli.command {
        Command::Fingerprint { input, output, fp } => {
            let data = load_nonempty(&input, exec)?;
            let sets = fingerprints(&data, &fp.params(), exec)?;
            save_cache(&output, &fp.params(), &sets).with_context(|| format!("writing {}", output.display()))?;
            info!(
                "{}: {} rows, {} fingerprinted, {} dropped",
                input.display(),
                data.report.rows,
                sets.len(),
                data.report.dropped()
            );
        }
        Command::Stats { source, fp } => {
            let sets = load_sets(&source, &fp, exec)?;
            let index = SupportIndex::fit(&sets)?;
            println!("{}", serde_json::to_string_pretty(&index.frequency_report())?);
        }
        Command::FitPooler {
            input,
            pooling,
            dim,
            task,
            output,
            fp,
        } => {
            if dim == 0 {
                return Err(Usage("--dim must be at least 1".into()).into());
            }
            let data = load_nonempty(&input, exec)?;
            let sets = fingerprints(&data, &fp.params(), exec)?;
            let index = SupportIndex::fit(&sets)?;
            let labels = if pooling.is_supervised() {
                Some(match task {
                    TaskArg::Regression => binarize_labels(&data.labels())?,
                    TaskArg::Classification => BinaryLabels::from_values(&data.labels())?,
                })
            } else {
                None
            };
            let seed = seeds.as_ref().map_or(0, |s| s[0]);
            let model = fit_pooler(pooling, &index, labels.as_ref(), dim, seed)?;
            info!(
                "{pooling} model: {} slots, {} padding, from {} training ids",
                model.slots().len(),
                model.padding(),
                index.m_t()
            );
            write_output(output.as_deref(), &(model.to_json()? + "\n"))?;
        }
        Command::ApplyPooler {
            model,
            source,
            output,
            fp,
        } => {
            let text = fs::read_to_string(&model).with_context(|| format!("reading {}", model.display()))?;
            let model = PoolerModel::from_json(&text).map_err(|e| Usage(format!("{}: {e}", model.display())))?;
            let sets = load_sets(&source, &fp, exec)?;
            let bits = model.apply_batch(&sets, exec);
            let mut out = String::from("row,bits\n");
            for (i, v) in bits.iter().enumerate() {
                let s: String = (0..v.len()).map(|b| if v.get(b) { '1' } else { '0' }).collect();
                out.push_str(&format!("{i},{s}\n"));
            }
            write_output(output.as_deref(), &out)?;
        }
        Command::Benchmark { config, output_dir } => {
            let mut config = RunConfig::load(&config)?;
            if let Some(seeds) = seeds {
                config.seeds = seeds;
            }
            if let Some(dir) = output_dir {
                config.output_dir = dir;
            }
            let results = run_benchmark(&config, exec)?;
            let written = write_reports(&results, &config.output_dir)?;
            info!("wrote {} files to {}", written.len(), config.output_dir.display());
        }
    }
    Ok(())
}

/// `--seed` wins over FP_POOL_SEED; `None` means use the defaults.
fn seed_list(flag: Option<&str>) -> anyhow::Result<Option<Vec<u64>>> {
    let (text, origin) = match (flag, std::env::var(SEED_ENV).ok()) {
        (Some(s), _) => (s.to_string(), "--seed"),
        (None, Some(s)) => (s, SEED_ENV),
        (None, None) => return Ok(None),
    };
    let seeds: Result<Vec<u64>, _> = text.split(',').map(|s| s.trim().parse::<u64>()).collect();
    match seeds {
        Ok(s) if !s.is_empty() => Ok(Some(s)),
        _ => Err(Usage(format!("{origin}: expected comma-separated non-negative integers, got `{text}`")).into()),
    }
}

fn load_nonempty(path: &Path, exec: Execution) -> anyhow::Result<Dataset> {
    let data = load_dataset(path, exec)?;
    if data.is_empty() {
        bail!("{}: no usable rows ({} read, {} dropped)", path.display(), data.report.rows, data.report.dropped());
    }
    Ok(data)
}

fn fingerprints(data: &Dataset, params: &EcfpParams, exec: Execution) -> anyhow::Result<Vec<IdentifierSet>> {
    let graphs = data.graphs(exec)?;
    Ok(enumerate_batch(&graphs, params, exec))
}

fn load_sets(source: &Source, fp: &FingerprintArgs, exec: Execution) -> anyhow::Result<Vec<IdentifierSet>> {
    if let Some(path) = &source.cache {
        let (params, sets) = load_cache(path).with_context(|| format!("reading {}", path.display()))?;
        if fp.given() && params != fp.params() {
            warn!(
                "{}: cache was written with diameter {}, {}, chirality {}; fingerprint flags ignored",
                path.display(),
                params.diameter,
                params.invariants,
                if params.chirality { "on" } else { "off" }
            );
        }
        if sets.is_empty() {
            bail!("{}: cache holds no molecules", path.display());
        }
        return Ok(sets);
    }
    let path = source.input.as_ref().expect("clap enforces one source");
    let data = load_nonempty(path, exec)?;
    fingerprints(&data, &fp.params(), exec)
}

fn write_output(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}
