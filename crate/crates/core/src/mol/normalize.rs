use serde::{Deserialize, Serialize};

use super::element::HYDROGEN;
use super::graph::MoleculeGraph;
use super::smiles::{parse_smiles, ParseError};
use super::writer::write_smiles;

/// One cleaned dataset row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DatasetRecord {
    pub smiles_normalized: String,
    pub label: f64,
    pub origin_row: usize,
}

/// Keeps the fragment with the most heavy atoms. Ties go to the fragment with
/// more atoms counting hydrogens, then to the lexicographically smallest
/// written form.
pub fn largest_fragment(graph: &MoleculeGraph) -> MoleculeGraph {
    let comps = graph.components();
    if comps.len() <= 1 {
        return graph.clone();
    }
    let score = |comp: &[usize]| {
        let heavy = comp
            .iter()
            .filter(|&&a| graph.atom(a).element != HYDROGEN)
            .count();
        let all: usize = comp
            .iter()
            .map(|&a| 1 + graph.atom(a).hydrogens as usize)
            .sum();
        (heavy, all)
    };
    let best = comps.iter().map(|c| score(c)).max().expect("non-empty graph");
    comps
        .iter()
        .filter(|c| score(c) == best)
        .map(|c| {
            let sub = graph.subgraph(c);
            (write_smiles(&sub), sub)
        })
        .min_by(|a, b| a.0.cmp(&b.0))
        .map(|(_, g)| g)
        .expect("at least one candidate")
}

/// Largest fragment, isotopes stripped, written back out. The result is the
/// deduplication key and is a fixed point of this function.
pub fn normalize_smiles(smiles: &str) -> Result<String, ParseError> {
    let graph = parse_smiles(smiles)?;
    Ok(write_smiles(&largest_fragment(&graph).without_isotopes()))
}

pub fn normalize_record(smiles: &str, label: f64, origin_row: usize) -> Result<DatasetRecord, ParseError> {
    Ok(DatasetRecord {
        smiles_normalized: normalize_smiles(smiles)?,
        label,
        origin_row,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_fragment_unchanged() {
        let r = normalize_record("CCO", 1.2, 0).unwrap();
        assert_eq!(r.smiles_normalized, "CCO");
        assert_eq!(r.label, 1.2);
    }

    #[test]
    fn salt_is_removed() {
        let r = normalize_record("CCO.[Na+]", 1.2, 3).unwrap();
        let g = parse_smiles(&r.smiles_normalized).unwrap();
        assert_eq!(g.atom_count(), 3);
        assert!(g.atoms().iter().all(|a| a.element != 11));
        assert_eq!(normalize_smiles("[Cl-].C[NH3+]").unwrap(), "C[NH3+]");
    }

    #[test]
    fn isotope_stripped() {
        assert_eq!(normalize_smiles("[13CH4]").unwrap(), normalize_smiles("C").unwrap());
        assert_eq!(normalize_smiles("[2H]C([2H])([2H])O").unwrap(), "CO");
    }

    #[test]
    fn equal_fragments_tie_break_on_text() {
        // both fragments have one heavy atom and five atoms with hydrogens
        assert_eq!(normalize_smiles("[NH4+].C").unwrap(), "C");
        assert_eq!(normalize_smiles("C.[NH4+]").unwrap(), "C");
    }

    #[test]
    fn idempotent() {
        for s in ["CCO.[Na+]", "OC(=O)[C@@H](N)Cc1ccccc1.Cl", "[13CH3]c1ccncc1"] {
            let once = normalize_smiles(s).unwrap();
            assert_eq!(normalize_smiles(&once).unwrap(), once);
        }
    }

    #[test]
    fn parse_failure_propagates() {
        assert!(normalize_record("C1CC", 0.0, 0).is_err());
    }
}
