mod common;

use std::collections::HashSet;

use fp_pool_core::eval::{
    auroc, knn_predict, mean_absolute_error, mean_sd, random_split, scaffold_key, scaffold_split, stratified_split,
};
use fp_pool_core::exec::Execution;
use fp_pool_core::pooling::{binarize_labels, fit_pooler, fit_sort_slice};
use fp_pool_core::{
    enumerate_substructures, parse_smiles, BitVector, EcfpParams, IdentifierSet, InvariantKind, PoolingKind,
    SupportIndex,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::smiles_strategy;

fn dataset() -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec(smiles_strategy(), 12..40)
}

fn fingerprints(smiles: &[String]) -> Vec<IdentifierSet> {
    let params = EcfpParams::new(4, InvariantKind::Ecfp, false);
    smiles
        .iter()
        .map(|s| enumerate_substructures(&parse_smiles(s).unwrap(), &params))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scaffold_folds_share_no_scaffold(smiles in dataset(), seed in any::<u64>()) {
        let keys: Vec<_> = smiles.iter().map(|s| scaffold_key(&parse_smiles(s).unwrap())).collect();
        prop_assume!(keys.iter().collect::<HashSet<_>>().len() >= 2);
        let plan = scaffold_split(&keys, seed).unwrap();
        for fold in 0..2 {
            let (train, test) = plan.cell(fold);
            prop_assert!(!train.is_empty() && !test.is_empty());
            let train_keys: HashSet<_> = train.iter().map(|&i| keys[i]).collect();
            prop_assert!(test.iter().all(|&i| !train_keys.contains(&keys[i])));
        }
    }

    #[test]
    fn splits_partition_the_compounds(labels in prop::collection::vec(any::<bool>(), 2..200), seed in any::<u64>()) {
        let n = labels.len();
        let plan = random_split(n, seed).unwrap();
        let (train, test) = plan.cell(0);
        prop_assert_eq!(train.len() + test.len(), n);
        prop_assert_eq!(plan.fold(0).len(), n / 2);
        prop_assert!(train.iter().all(|&i| plan.fold_of(i) == 1) && test.iter().all(|&i| plan.fold_of(i) == 0));
        prop_assert_eq!(&plan, &random_split(n, seed).unwrap());
        if let Ok(strat) = stratified_split(&labels, seed) {
            for class in [false, true] {
                let per_fold: Vec<usize> = (0..2)
                    .map(|k| strat.fold(k).iter().filter(|&&i| labels[i] == class).count())
                    .collect();
                prop_assert!(per_fold[0].abs_diff(per_fold[1]) <= 1);
            }
        }
    }

    #[test]
    fn test_compounds_do_not_leak(smiles in dataset(), values in prop::collection::vec(-3.0f64..5.0, 40), seed in any::<u64>(), dim in 1usize..300) {
        let sets = fingerprints(&smiles);
        let n = sets.len();
        let plan = random_split(n, seed).unwrap();
        let (train, test) = plan.cell(0);
        let train_labels = binarize_labels(&train.iter().map(|&i| values[i]).collect::<Vec<_>>()).unwrap();
        let index = SupportIndex::fit(train.iter().map(|&i| &sets[i])).unwrap();
        for &dropped in &test {
            let remaining: Vec<IdentifierSet> = (0..n).filter(|&i| i != dropped).map(|i| sets[i].clone()).collect();
            let shifted = train.iter().map(|&i| if i > dropped { i - 1 } else { i });
            let refit = SupportIndex::fit(shifted.map(|i| &remaining[i])).unwrap();
            for kind in PoolingKind::ALL {
                let a = fit_pooler(kind, &index, Some(&train_labels), dim, seed).unwrap();
                let b = fit_pooler(kind, &refit, Some(&train_labels), dim, seed).unwrap();
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn unsliced_sort_slice_matches_one_hot(smiles in dataset(), values in prop::collection::vec(-3.0f64..5.0, 40), seed in any::<u64>(), extra in 0usize..50) {
        let sets = fingerprints(&smiles);
        let plan = random_split(sets.len(), seed).unwrap();
        let (train, test) = plan.cell(1);
        let index = SupportIndex::fit(train.iter().map(|&i| &sets[i])).unwrap();
        let vocabulary: Vec<_> = index.ids().collect();
        let one_hot = |s: &IdentifierSet| BitVector::from_bits(&vocabulary.iter().map(|&j| s.contains(j)).collect::<Vec<_>>());
        let model = fit_sort_slice(&index, index.m_t() + extra).unwrap();
        let train_labels: Vec<f64> = train.iter().map(|&i| values[i]).collect();
        let k = 5.min(train.len());
        let sliced = knn_predict(
            &train.iter().map(|&i| model.apply(&sets[i])).collect::<Vec<_>>(),
            &train_labels,
            &test.iter().map(|&i| model.apply(&sets[i])).collect::<Vec<_>>(),
            k,
            Execution::Sequential,
        ).unwrap();
        let oracle = knn_predict(
            &train.iter().map(|&i| one_hot(&sets[i])).collect::<Vec<_>>(),
            &train_labels,
            &test.iter().map(|&i| one_hot(&sets[i])).collect::<Vec<_>>(),
            k,
            Execution::Parallel,
        ).unwrap();
        prop_assert_eq!(sliced, oracle);
    }

    #[test]
    fn mae_is_non_negative(pairs in prop::collection::vec((-1e3f64..1e3, -1e3f64..1e3), 1..100)) {
        let (p, t): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
        prop_assert!(mean_absolute_error(&p, &t) >= 0.0);
        prop_assert_eq!(mean_absolute_error(&t, &t), 0.0);
    }

    #[test]
    fn aggregate_mean_is_arithmetic_mean(values in prop::collection::vec(-10.0f64..10.0, 6)) {
        let (mean, sd) = mean_sd(&values);
        prop_assert_eq!(mean, values.iter().sum::<f64>() / 6.0);
        prop_assert!(sd >= 0.0);
    }
}

#[test]
fn shuffled_labels_give_chance_auroc() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let scores: Vec<f64> = (0..200).map(|_| rng.random::<f64>()).collect();
    let mut total = 0.0;
    for _ in 0..1000 {
        let mut truths: Vec<bool> = (0..200).map(|_| rng.random_bool(0.5)).collect();
        truths[0] = true;
        truths[1] = false;
        total += auroc(&scores, &truths).unwrap();
    }
    let mean = total / 1000.0;
    assert!((mean - 0.5).abs() <= 0.05, "{mean}");
}
