use std::path::PathBuf;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fp_pool_core::dataset::load_dataset;
use fp_pool_core::ecfp::enumerate_batch;
use fp_pool_core::eval::knn_predict;
use fp_pool_core::exec::Execution;
use fp_pool_core::pooling::fit_sort_slice;
use fp_pool_core::{EcfpParams, InvariantKind, SupportIndex};

fn pipeline(c: &mut Criterion) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/lipophilicity.csv");
    let data = load_dataset(&path, Execution::default()).expect("dataset");
    let graphs = data.graphs(Execution::default()).expect("graphs");
    let labels = data.labels();
    let params = EcfpParams::new(4, InvariantKind::Ecfp, true);
    let sets = enumerate_batch(&graphs, &params, Execution::default());
    let index = SupportIndex::fit(&sets).expect("index");
    let model = fit_sort_slice(&index, 1024).expect("model");
    let vectors = model.apply_batch(&sets, Execution::default());
    let (train, test) = vectors.split_at(vectors.len() / 2);
    let train_labels = &labels[..train.len()];

    let modes = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);
    for (name, exec) in modes {
        group.bench_with_input(BenchmarkId::new("enumerate", name), &exec, |b, &exec| {
            b.iter(|| enumerate_batch(&graphs, &params, exec))
        });
        group.bench_with_input(BenchmarkId::new("apply_sortslice", name), &exec, |b, &exec| {
            b.iter(|| model.apply_batch(&sets, exec))
        });
        group.bench_with_input(BenchmarkId::new("knn", name), &exec, |b, &exec| {
            b.iter(|| knn_predict(train, train_labels, test, 5, exec).expect("knn"))
        });
    }
    group.finish();
}

criterion_group!(benches, pipeline);
criterion_main!(benches);
