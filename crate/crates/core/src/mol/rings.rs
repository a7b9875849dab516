//! Ring membership from the cycle space.
//!
//! A bond lies on a simple cycle iff it belongs to the support of the cycle
//! space, which is the union of the fundamental cycles of any spanning
//! forest. Each non-tree bond closes one fundamental cycle: itself plus the
//! tree path between its endpoints.

use super::graph::MoleculeGraph;

pub fn perceive_rings(graph: &mut MoleculeGraph) {
    let n = graph.atom_count();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree_bond = vec![false; graph.bond_count()];

    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            for &(nb, bond) in graph.neighbors(a) {
                if depth[nb] == usize::MAX {
                    depth[nb] = depth[a] + 1;
                    parent[nb] = Some((a, bond));
                    tree_bond[bond] = true;
                    queue.push_back(nb);
                }
            }
        }
    }

    let mut bond_in_ring = vec![false; graph.bond_count()];
    for (i, bond) in graph.bonds().iter().enumerate() {
        if tree_bond[i] {
            continue;
        }
        bond_in_ring[i] = true;
        let (mut u, mut v) = (bond.begin, bond.end);
        while u != v {
            if depth[u] < depth[v] {
                std::mem::swap(&mut u, &mut v);
            }
            let (up, via) = parent[u].expect("non-root atom has a tree parent");
            bond_in_ring[via] = true;
            u = up;
        }
    }

    let mut atom_in_ring = vec![false; n];
    for (i, bond) in graph.bonds().iter().enumerate() {
        if bond_in_ring[i] {
            atom_in_ring[bond.begin] = true;
            atom_in_ring[bond.end] = true;
        }
    }
    graph.set_ring_membership(atom_in_ring, bond_in_ring);
}
