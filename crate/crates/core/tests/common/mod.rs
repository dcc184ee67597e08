#![allow(dead_code)]

use std::collections::HashSet;

use fideal_core::{MonomialIdeal, SquareFreeMonomial};

pub fn ideal(n: usize, sets: &[&[usize]]) -> MonomialIdeal {
    MonomialIdeal::from_index_sets(n, sets.iter().map(|s| s.iter().copied())).unwrap()
}

pub fn mixed() -> MonomialIdeal {
    ideal(5, &[&[1, 4], &[2, 5], &[1, 2, 3], &[3, 4, 5]])
}

/// Every nonzero square-free ideal in `n <= 4` variables, by filtering all families of
/// nonempty subsets for the antichain property.
pub fn all_ideals(n: usize) -> Vec<MonomialIdeal> {
    assert!(n <= 4);
    let subsets: Vec<u32> = (1u32..1 << n).collect();
    let mut out = Vec::new();
    for family in 1u64..1 << subsets.len() {
        let chosen: Vec<u32> =
            subsets.iter().enumerate().filter(|(i, _)| family >> i & 1 == 1).map(|(_, &s)| s).collect();
        let antichain = chosen
            .iter()
            .all(|&a| chosen.iter().all(|&b| a == b || a & !b != 0));
        if antichain {
            let gens =
                chosen.iter().map(|&b| SquareFreeMonomial::from_bits(n, b).unwrap()).collect();
            out.push(MonomialIdeal::new(n, gens).unwrap());
        }
    }
    out
}

/// f-vectors (as `(f_{-1}, f_0, ...)`, trailing zeros dropped) of all simplicial
/// complexes with vertices in `{1..n}`, found by deciding every subset in turn and
/// admitting it only when all of its codimension-one faces are present.
pub fn complex_fvectors(n: usize) -> HashSet<Vec<u64>> {
    assert!(n <= 6);
    let mut order: Vec<u32> = (1u32..1 << n).collect();
    order.sort_by_key(|&m| (m.count_ones(), m));
    let mut packed = HashSet::new();
    // the void complex
    packed.insert(0u64);
    let mut counts = [0u64; 8];
    counts[0] = 1;
    walk(&order, 0, 1, &mut counts, &mut packed);
    packed
        .into_iter()
        .map(|key| {
            let mut v: Vec<u64> = (0..8).map(|i| key >> (8 * i) & 0xff).collect();
            while v.last() == Some(&0) {
                v.pop();
            }
            v
        })
        .collect()
}

fn walk(order: &[u32], i: usize, faces: u64, counts: &mut [u64; 8], out: &mut HashSet<u64>) {
    if i == order.len() {
        out.insert(counts.iter().enumerate().fold(0u64, |k, (j, &c)| k | c << (8 * j)));
        return;
    }
    let s = order[i];
    walk(order, i + 1, faces, counts, out);
    let mut rest = s;
    let mut admissible = true;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        admissible &= faces >> (s ^ bit) & 1 == 1;
        rest ^= bit;
    }
    if admissible {
        let size = s.count_ones() as usize;
        counts[size] += 1;
        walk(order, i + 1, faces | 1 << s, counts, out);
        counts[size] -= 1;
    }
}

/// `C(n, k)` by Pascal's rule for small `n`, by the product formula otherwise.
pub fn pascal(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    if n > 60 {
        let k = k.min(n - k);
        let value = (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128);
        return u64::try_from(value).expect("binomial fits in u64");
    }
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for j in 1..row.len() {
            next[j] = row[j - 1] + row[j];
        }
        row = next;
    }
    row[k as usize]
}
