//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use fp_pool_core::{SubstructureId, SupportIndex};
use rand::Rng;

pub fn lipophilicity_csv() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/lipophilicity.csv")
}

/// erfc by the positive-term series of erf below 2 and a Lentz-evaluated
/// continued fraction above.
pub fn erfc_oracle(x: f64) -> f64 {
    assert!(x >= 0.0);
    if x < 2.0 {
        // erf(x) = 2/√π e^(−x²) Σ 2^k x^(2k+1) / (1·3·…·(2k+1))
        let mut term = x;
        let mut sum = x;
        let mut k = 0.0;
        while term > 1e-18 * sum {
            k += 1.0;
            term *= 2.0 * x * x / (2.0 * k + 1.0);
            sum += term;
        }
        1.0 - 2.0 / std::f64::consts::PI.sqrt() * (-x * x).exp() * sum
    } else {
        // erfc(x) = e^(−x²)/√π · 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + …))))
        let tiny = 1e-300;
        let mut f = x;
        let mut c = x;
        let mut d = 0.0;
        for j in 1..5000 {
            let a = j as f64 / 2.0;
            d = x + a * d;
            if d.abs() < tiny {
                d = tiny;
            }
            c = x + a / c;
            if c.abs() < tiny {
                c = tiny;
            }
            d = 1.0 / d;
            let delta = c * d;
            f *= delta;
            if (delta - 1.0).abs() < 1e-16 {
                break;
            }
        }
        (-x * x).exp() / std::f64::consts::PI.sqrt() / f
    }
}

/// Pearson statistic from observed minus expected counts.
pub fn chi2_oracle(n00: u64, n01: u64, n10: u64, n11: u64) -> f64 {
    let obs = [[n00 as f64, n01 as f64], [n10 as f64, n11 as f64]];
    let n: f64 = obs.iter().flatten().sum();
    let rows = [obs[0][0] + obs[0][1], obs[1][0] + obs[1][1]];
    let cols = [obs[0][0] + obs[1][0], obs[0][1] + obs[1][1]];
    if rows.contains(&0.0) || cols.contains(&0.0) {
        return 0.0;
    }
    let mut x = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let e = rows[i] * cols[j] / n;
            x += (obs[i][j] - e) * (obs[i][j] - e) / e;
        }
    }
    x
}

pub fn chi2_p_oracle(n00: u64, n01: u64, n10: u64, n11: u64) -> f64 {
    let x = chi2_oracle(n00, n01, n10, n11);
    if x == 0.0 {
        1.0
    } else {
        erfc_oracle((x / 2.0).sqrt())
    }
}

/// Σ p(f,y) log₂(p(f,y) / (p(f) p(y))) over the four cells.
pub fn mi_oracle(feature: &[bool], label: &[bool]) -> f64 {
    let n = feature.len() as f64;
    let mut mi = 0.0;
    for f in [false, true] {
        for y in [false, true] {
            let joint = feature.iter().zip(label).filter(|&(&a, &b)| a == f && b == y).count() as f64 / n;
            let pf = feature.iter().filter(|&&a| a == f).count() as f64 / n;
            let py = label.iter().filter(|&&b| b == y).count() as f64 / n;
            if joint > 0.0 {
                mi += joint * (joint / (pf * py)).log2();
            }
        }
    }
    mi
}

/// Brute-force Sort & Slice: sort (count, id) descending, keep the first
/// `dim`, one bit per kept id in that order.
pub fn sort_slice_oracle(index: &SupportIndex, dim: usize, molecule: &BTreeSet<SubstructureId>) -> Vec<bool> {
    let mut ranked: Vec<(usize, SubstructureId)> = index.iter().map(|(id, s)| (s.len(), id)).collect();
    ranked.sort();
    ranked.reverse();
    let mut bits = vec![false; dim];
    for (slot, (_, id)) in ranked.iter().take(dim).enumerate() {
        bits[slot] = molecule.contains(id);
    }
    bits
}

pub fn id(v: u32) -> SubstructureId {
    SubstructureId::from_raw(v)
}

#[derive(Clone, Copy, PartialEq)]
enum Token {
    Element(&'static str, u8),
    Phenyl,
}

const TOKENS: [Token; 10] = [
    Token::Element("C", 4),
    Token::Element("C", 4),
    Token::Element("C", 4),
    Token::Element("N", 3),
    Token::Element("O", 2),
    Token::Element("S", 2),
    Token::Element("F", 1),
    Token::Element("Cl", 1),
    Token::Phenyl,
    Token::Element("C", 4),
];

/// Random valid SMILES over C, N, O, S, F, Cl and phenyl leaves, with up to
/// two ring closures, occasional double bonds and tetrahedral centres.
pub fn random_smiles<R: Rng>(rng: &mut R, max_atoms: usize) -> String {
    let n = rng.random_range(1..=max_atoms.max(1));
    let mut tokens = vec![Token::Element("C", 4)];
    let mut free: Vec<u8> = vec![4];
    let mut parent = vec![usize::MAX];
    let mut order = vec![1u8];
    for _ in 1..n {
        let tok = TOKENS[rng.random_range(0..TOKENS.len())];
        let candidates: Vec<usize> = (0..tokens.len())
            .filter(|&i| free[i] > 0 && tokens[i] != Token::Phenyl)
            .collect();
        if candidates.is_empty() {
            break;
        }
        let p = candidates[rng.random_range(0..candidates.len())];
        let cap = match tok {
            Token::Element(_, v) => v,
            Token::Phenyl => 1,
        };
        let bond = if cap >= 2 && free[p] >= 2 && matches!(tok, Token::Element(..)) && rng.random_bool(0.15) {
            2
        } else {
            1
        };
        free[p] -= bond;
        tokens.push(tok);
        free.push(cap - bond);
        parent.push(p);
        order.push(bond);
    }
    let m = tokens.len();
    let mut adjacent = vec![BTreeSet::new(); m];
    for i in 1..m {
        adjacent[i].insert(parent[i]);
        adjacent[parent[i]].insert(i);
    }
    let mut closures: Vec<Vec<u8>> = vec![Vec::new(); m];
    let mut next_digit = 1u8;
    for _ in 0..rng.random_range(0..=2) {
        let open: Vec<usize> = (0..m).filter(|&i| free[i] > 0 && tokens[i] != Token::Phenyl).collect();
        if open.len() < 2 {
            break;
        }
        let a = open[rng.random_range(0..open.len())];
        let b = open[rng.random_range(0..open.len())];
        if a == b || adjacent[a].contains(&b) {
            continue;
        }
        free[a] -= 1;
        free[b] -= 1;
        adjacent[a].insert(b);
        adjacent[b].insert(a);
        closures[a].push(next_digit);
        closures[b].push(next_digit);
        next_digit += 1;
    }
    let children: Vec<Vec<usize>> = (0..m).map(|i| (i + 1..m).filter(|&j| parent[j] == i).collect()).collect();
    let mut out = String::new();
    emit(0, &tokens, &free, &adjacent, &closures, &children, &order, rng, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn emit<R: Rng>(
    atom: usize,
    tokens: &[Token],
    free: &[u8],
    adjacent: &[BTreeSet<usize>],
    closures: &[Vec<u8>],
    children: &[Vec<usize>],
    order: &[u8],
    rng: &mut R,
    out: &mut String,
) {
    match tokens[atom] {
        Token::Phenyl => out.push_str("c9ccccc9"),
        Token::Element(sym, _) => {
            let single_only = order[atom] == 1 && children[atom].iter().all(|&c| order[c] == 1);
            if sym == "C" && adjacent[atom].len() == 3 && free[atom] == 1 && single_only && rng.random_bool(0.5) {
                out.push_str(if rng.random_bool(0.5) { "[C@H]" } else { "[C@@H]" });
            } else {
                out.push_str(sym);
            }
        }
    }
    for d in &closures[atom] {
        out.push(char::from(b'0' + d));
    }
    let kids = &children[atom];
    for (i, &c) in kids.iter().enumerate() {
        let last = i + 1 == kids.len();
        if !last {
            out.push('(');
        }
        if order[c] == 2 {
            out.push('=');
        }
        emit(c, tokens, free, adjacent, closures, children, order, rng, out);
        if !last {
            out.push(')');
        }
    }
}

/// Parsable SMILES of the bundled lipophilicity set.
pub fn lipophilicity_smiles() -> &'static [String] {
    static CELL: std::sync::OnceLock<Vec<String>> = std::sync::OnceLock::new();
    CELL.get_or_init(|| {
        let mut reader = csv::Reader::from_path(lipophilicity_csv()).expect("dataset present");
        let col = reader
            .headers()
            .expect("header")
            .iter()
            .position(|h| h.eq_ignore_ascii_case("smiles"))
            .expect("smiles column");
        reader
            .records()
            .map(|r| r.expect("row")[col].to_string())
            .filter(|s| fp_pool_core::parse_smiles(s).is_ok())
            .collect()
    })
}

/// Generated organic-subset strings mixed with real drug-like molecules.
pub fn smiles_strategy() -> proptest::strategy::BoxedStrategy<String> {
    use proptest::prelude::*;
    prop_oneof![
        any::<u64>().prop_map(|s| random_smiles(&mut <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(s), 20)),
        (0..lipophilicity_smiles().len()).prop_map(|i| lipophilicity_smiles()[i].clone()),
    ]
    .boxed()
}

/// Random permutation of `0..n` from a seed.
pub fn permutation(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed));
    perm
}
