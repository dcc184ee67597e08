//! Fixed inputs shared by the benchmarks.

use fideal_core::{enumerate_v, CensusConfig, MonomialIdeal};

fn ideal(n: usize, sets: &[&[usize]]) -> MonomialIdeal {
    MonomialIdeal::from_index_sets(n, sets.iter().map(|s| s.iter().copied())).unwrap()
}

/// Mixed-degree f-ideal on five variables.
pub fn mixed() -> MonomialIdeal {
    ideal(5, &[&[1, 4], &[2, 5], &[1, 2, 3], &[3, 4, 5]])
}

/// First witness of V(6,3).
pub fn cubic_six() -> MonomialIdeal {
    let cfg = CensusConfig { witness_cap: 1, ..CensusConfig::default() };
    enumerate_v(6, 3, &cfg).unwrap().witnesses[0].ideal.clone()
}

/// Edge ideal of the path on `n` vertices.
pub fn path(n: usize) -> MonomialIdeal {
    let edges: Vec<[usize; 2]> = (1..n).map(|v| [v, v + 1]).collect();
    let sets: Vec<&[usize]> = edges.iter().map(|e| &e[..]).collect();
    ideal(n, &sets)
}
