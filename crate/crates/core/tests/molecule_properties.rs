mod common;

use fp_pool_core::ecfp::enumerate_batch;
use fp_pool_core::exec::Execution;
use fp_pool_core::invariants::all_atom_invariants;
use fp_pool_core::mol::{normalize_smiles, write_smiles, BondOrder};
use fp_pool_core::{enumerate_substructures, parse_smiles, EcfpParams, InvariantKind, MoleculeGraph};
use proptest::prelude::*;

use common::{permutation, smiles_strategy};

type AtomShape = (u8, usize, i8, bool, u8);
type BondShape = ((u8, bool), (u8, bool), BondOrder);

/// (element, degree, charge, aromatic, H) per atom plus per-bond endpoint tuples
/// with the order, both sorted.
fn shape(g: &MoleculeGraph) -> (Vec<AtomShape>, Vec<BondShape>) {
    let mut atoms: Vec<_> = (0..g.atom_count())
        .map(|i| {
            let a = g.atom(i);
            (a.element, g.degree(i), a.charge, a.aromatic, a.hydrogens)
        })
        .collect();
    atoms.sort();
    let mut bonds: Vec<_> = g
        .bonds()
        .iter()
        .map(|b| {
            let end = |i: usize| (g.atom(i).element, g.atom(i).aromatic);
            let (x, y) = (end(b.begin), end(b.end));
            (x.min(y), x.max(y), b.order)
        })
        .collect();
    bonds.sort();
    (atoms, bonds)
}

fn mirror(smiles: &str) -> String {
    smiles.replace("@@", "\u{0}").replace('@', "@@").replace('\u{0}', "@")
}

const KINDS: [InvariantKind; 2] = [InvariantKind::Ecfp, InvariantKind::Fcfp];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn writer_is_idempotent(smiles in smiles_strategy()) {
        let once = write_smiles(&parse_smiles(&smiles).unwrap());
        let twice = write_smiles(&parse_smiles(&once).unwrap());
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn written_form_is_isomorphic(smiles in smiles_strategy(), seed in any::<u64>()) {
        let g = parse_smiles(&smiles).unwrap();
        let relabelled = g.permuted(&permutation(g.atom_count(), seed));
        let back = parse_smiles(&write_smiles(&relabelled)).unwrap();
        prop_assert_eq!(shape(&g), shape(&back));
    }

    #[test]
    fn normalization_is_idempotent(a in smiles_strategy(), b in smiles_strategy()) {
        let salt = format!("{a}.{b}.[Na+].[Cl-]");
        let once = normalize_smiles(&salt).unwrap();
        prop_assert!(!once.contains('.'));
        prop_assert_eq!(normalize_smiles(&once).unwrap(), once.clone());
        let single = normalize_smiles(&a).unwrap();
        prop_assume!(!a.contains('.'));
        prop_assert_eq!(shape(&parse_smiles(&single).unwrap()), shape(&parse_smiles(&a).unwrap()));
    }

    #[test]
    fn aromatic_bonds_join_aromatic_atoms(smiles in smiles_strategy()) {
        let g = parse_smiles(&smiles).unwrap();
        for b in g.bonds().iter().filter(|b| b.order == BondOrder::Aromatic) {
            prop_assert!(g.atom(b.begin).aromatic && g.atom(b.end).aromatic);
        }
    }

    #[test]
    fn invariants_follow_relabelling(smiles in smiles_strategy(), seed in any::<u64>(), chiral in any::<bool>()) {
        let g = parse_smiles(&smiles).unwrap();
        let perm = permutation(g.atom_count(), seed);
        let h = g.permuted(&perm);
        for kind in KINDS {
            let before = all_atom_invariants(&g, kind, chiral);
            let after = all_atom_invariants(&h, kind, chiral);
            for (old, &new) in perm.iter().enumerate() {
                prop_assert_eq!(&before[old], &after[new]);
            }
            prop_assert_eq!(before, all_atom_invariants(&g, kind, chiral));
        }
    }

    #[test]
    fn identifiers_are_isomorphism_invariant(smiles in smiles_strategy(), seed in any::<u64>(), d in 0u32..4) {
        let g = parse_smiles(&smiles).unwrap();
        let h = g.permuted(&permutation(g.atom_count(), seed));
        let rewritten = parse_smiles(&write_smiles(&h)).unwrap();
        for kind in KINDS {
            for chirality in [false, true] {
                let params = EcfpParams::new(2 * d, kind, chirality);
                let ids = enumerate_substructures(&g, &params).sorted_ids();
                prop_assert_eq!(&ids, &enumerate_substructures(&h, &params).sorted_ids());
                prop_assert_eq!(&ids, &enumerate_substructures(&rewritten, &params).sorted_ids());
            }
        }
    }

    #[test]
    fn identifiers_grow_with_diameter(smiles in smiles_strategy(), chirality in any::<bool>()) {
        let g = parse_smiles(&smiles).unwrap();
        let mut previous = Vec::new();
        for d in [0, 2, 4, 6, 8] {
            let ids = enumerate_substructures(&g, &EcfpParams::new(d, InvariantKind::Ecfp, chirality)).sorted_ids();
            prop_assert!(previous.iter().all(|j| ids.binary_search(j).is_ok()));
            previous = ids;
        }
    }

    #[test]
    fn no_two_occurrences_cover_the_same_substructure(smiles in smiles_strategy(), chirality in any::<bool>()) {
        let g = parse_smiles(&smiles).unwrap();
        let set = enumerate_substructures(&g, &EcfpParams::new(6, InvariantKind::Ecfp, chirality));
        let mut covers: Vec<(Vec<usize>, Vec<usize>)> = set
            .iter()
            .flat_map(|(_, occ)| occ.iter().map(|o| (o.atoms.clone(), o.bonds.clone())))
            .collect();
        let total = covers.len();
        covers.sort();
        covers.dedup();
        prop_assert_eq!(covers.len(), total);
        prop_assert!(set.iter().all(|(_, occ)| !occ.is_empty()));
    }

    #[test]
    fn mirror_images_agree_without_chirality(smiles in smiles_strategy()) {
        let a = parse_smiles(&smiles).unwrap();
        let b = parse_smiles(&mirror(&smiles)).unwrap();
        let params = EcfpParams::new(4, InvariantKind::Ecfp, false);
        prop_assert_eq!(enumerate_substructures(&a, &params), enumerate_substructures(&b, &params));
    }

    #[test]
    fn batch_modes_agree(smiles in prop::collection::vec(smiles_strategy(), 1..12)) {
        let graphs: Vec<_> = smiles.iter().map(|s| parse_smiles(s).unwrap()).collect();
        let params = EcfpParams::new(4, InvariantKind::Fcfp, true);
        let seq = enumerate_batch(&graphs, &params, Execution::Sequential);
        prop_assert_eq!(&seq, &enumerate_batch(&graphs, &params, Execution::Parallel));
        prop_assert_eq!(seq, enumerate_batch(&graphs, &params, Execution::Sequential));
    }
}

#[test]
fn chirality_separates_enantiomers() {
    let r = parse_smiles("C[C@H](N)O").unwrap();
    let s = parse_smiles("C[C@@H](N)O").unwrap();
    let on = EcfpParams::new(4, InvariantKind::Ecfp, true);
    let off = EcfpParams::new(4, InvariantKind::Ecfp, false);
    assert_ne!(enumerate_substructures(&r, &on).sorted_ids(), enumerate_substructures(&s, &on).sorted_ids());
    assert_eq!(enumerate_substructures(&r, &off).sorted_ids(), enumerate_substructures(&s, &off).sorted_ids());
    // same enantiomer written from another atom
    let r2 = parse_smiles("O[C@H](C)N").unwrap();
    assert_eq!(enumerate_substructures(&r, &on).sorted_ids(), enumerate_substructures(&r2, &on).sorted_ids());
}
