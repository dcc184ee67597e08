//! Macaulay expansions and four equivalent tests for whether an integer vector is the
//! f-vector of a simplicial complex:
//!
//! 1. [`exists_complex_oracle`]: a complex realizing it exists (decided by search)
//! 2. [`kk_valid`]: `f_t <= f_{t-1}^{(t)}` for every `1 <= t <= d`
//! 3. the complemented vector `(C(n,i) - f_{n-i-1})_i` passes the same test
//! 4. [`kk_valid_dual`]: `C(n,t+1) - [C(n,t+2) - f_{t+1}]^{(n-t-2)} <= f_t` for
//!    `0 <= t <= d-1`

use std::collections::HashSet;
use std::fmt;
use std::ops::ControlFlow;
use std::sync::OnceLock;

use serde::Serialize;

use crate::combinatorics::{binomial, checked_binomial};
use crate::complex::FVector;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::monomial::masks_of_degree;

/// `a = C(a_j, j) + C(a_{j-1}, j-1) + ... + C(a_k, k)` with
/// `a_j > a_{j-1} > ... > a_k >= k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MacaulayExpansion {
    pub value: u64,
    pub index: u32,
    /// `(a_i, i)` with `i` descending from `index`.
    pub terms: Vec<(u64, u32)>,
}

impl MacaulayExpansion {
    /// `a^{(j)}`: every binomial's lower index raised by one.
    pub fn bound(&self) -> u64 {
        self.terms.iter().map(|&(top, i)| binomial(top, i as u64 + 1)).sum()
    }
}

impl fmt::Display for MacaulayExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} =", self.value)?;
        for (k, (top, i)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" +")?;
            }
            write!(f, " C({top},{i})")?;
        }
        Ok(())
    }
}

/// Greedy expansion: take the largest `a_j` with `C(a_j, j) <= a` and recurse on the
/// remainder with `j - 1`.
pub fn macaulay_expansion(a: u64, j: u32) -> Result<MacaulayExpansion> {
    if a == 0 || j == 0 {
        return Err(Error::InvalidMacaulayArgument { a, j });
    }
    let mut rest = a;
    let mut terms = Vec::new();
    let mut i = j;
    while rest > 0 {
        // i >= 1 here: at i = 1 the term C(rest, 1) clears the remainder
        let k = i as u64;
        let mut top = k;
        while checked_binomial(top + 1, k).is_some_and(|c| c <= rest) {
            top += 1;
        }
        terms.push((top, i));
        rest -= binomial(top, k);
        i -= 1;
    }
    Ok(MacaulayExpansion { value: a, index: j, terms })
}

/// `a^{(j)}`. Zero maps to zero for every `j`; `j = 0` is otherwise rejected.
pub fn macaulay_bound(a: u64, j: u32) -> Result<u64> {
    if a == 0 {
        return Ok(0);
    }
    Ok(macaulay_expansion(a, j)?.bound())
}

/// `(f_{-1}, f_0, ..., f_d)` with `f_{-1} = 1` and every entry positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CandidateFVector(Vec<u64>);

impl CandidateFVector {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        match counts.first() {
            None => return Err(Error::MalformedFVector("empty vector".into())),
            Some(&1) => {}
            Some(&other) => {
                return Err(Error::MalformedFVector(format!("f_-1 = {other}, expected 1")))
            }
        }
        if counts.contains(&0) {
            return Err(Error::MalformedFVector("entries must be positive".into()));
        }
        Ok(Self(counts))
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// `d`, so that the vector is `(f_{-1}, ..., f_d)`.
    pub fn dimension(&self) -> i64 {
        self.0.len() as i64 - 2
    }

    /// `f_i`, zero beyond `d`.
    pub fn get(&self, i: i64) -> u64 {
        if i < -1 {
            return 0;
        }
        self.0.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn vertices(&self) -> u64 {
        self.get(0)
    }
}

impl TryFrom<FVector> for CandidateFVector {
    type Error = Error;

    fn try_from(f: FVector) -> Result<Self> {
        Self::new(f.into_counts())
    }
}

impl fmt::Display for CandidateFVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Macaulay bounds on consecutive entries.
pub fn kk_valid(f: &CandidateFVector) -> bool {
    macaulay_chain_holds(f.counts())
}

fn macaulay_chain_holds(counts: &[u64]) -> bool {
    // counts[t + 1] = f_t
    (1..counts.len().saturating_sub(1)).all(|t| {
        let prev = counts[t];
        let cur = counts[t + 1];
        macaulay_bound(prev, t as u32).is_ok_and(|b| cur <= b)
    })
}

/// Whether an arbitrary count sequence `(f_{-1}, ..., f_d)` is an f-vector. The empty
/// sequence is the void complex; otherwise `f_{-1} = 1`, all entries positive and the
/// Macaulay bounds hold.
pub fn is_fvector_sequence(counts: &[u64]) -> bool {
    if counts.is_empty() {
        return true;
    }
    counts[0] == 1 && !counts.contains(&0) && macaulay_chain_holds(counts)
}

/// `(C(n,i) - f_{n-i-1})` for `i = 0..=n`, with `f_i = 0` beyond `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementVector {
    /// All `n + 1` slots.
    pub raw: Vec<u64>,
    /// `raw` without trailing zeros; empty when every slot is zero (the void complex).
    pub trimmed: Vec<u64>,
    /// `C(n,1) - f_{n-2}`.
    pub nominal_vertices: u64,
}

impl ComplementVector {
    pub fn is_fvector(&self) -> bool {
        is_fvector_sequence(&self.trimmed)
    }
}

fn check_fits(f: &CandidateFVector, n: usize) -> Result<()> {
    if f.dimension() > n as i64 - 1 {
        return Err(Error::NotComplementable { index: 0 });
    }
    for (k, &c) in f.counts().iter().enumerate() {
        // c = f_{k-1}, which lands in slot n - k
        if c > binomial(n as u64, k as u64) {
            return Err(Error::NotComplementable { index: n - k });
        }
    }
    Ok(())
}

pub fn complement_fvector(f: &CandidateFVector, n: usize) -> Result<ComplementVector> {
    check_fits(f, n)?;
    let big_n = n as u64;
    let raw: Vec<u64> = (0..=n)
        .map(|i| binomial(big_n, i as u64) - f.get(n as i64 - i as i64 - 1))
        .collect();
    let mut trimmed = raw.clone();
    while trimmed.last() == Some(&0) {
        trimmed.pop();
    }
    let nominal_vertices = big_n - f.get(n as i64 - 2);
    Ok(ComplementVector { raw, trimmed, nominal_vertices })
}

/// The Macaulay condition rewritten through the complement. A bracket
/// `C(n,t+2) - f_{t+1}` of zero contributes `0^{(j)} = 0`; a negative bracket means `f`
/// does not fit in `n` vertices and is reported as [`Error::NotComplementable`].
pub fn kk_valid_dual(f: &CandidateFVector, n: usize) -> Result<bool> {
    check_fits(f, n)?;
    let big_n = n as u64;
    let d = f.dimension();
    for t in 0..d {
        let bracket = binomial(big_n, (t + 2) as u64) - f.get(t + 1);
        let j = n as i64 - t - 2;
        // j < 0 would need t >= n - 1, but then f_{t+1} = 0 > C(n, t+2) fails check_fits
        debug_assert!(j >= 0);
        let shifted = macaulay_bound(bracket, j as u32)?;
        let lhs = binomial(big_n, (t + 1) as u64) as i128 - shifted as i128;
        if lhs > f.get(t) as i128 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertex bound for [`exists_complex_oracle`].
pub const ORACLE_MAX_VERTICES: u64 = 7;
/// At or below this many vertices the oracle consults an exhaustive table.
pub const ORACLE_EXHAUSTIVE_VERTICES: usize = 5;

/// Whether some complex on `f_0` labelled vertices has f-vector `f`. Decided by an
/// exhaustive table of all complexes for `f_0 <= 5`, and by the compressed (colex)
/// construction above that.
pub fn exists_complex_oracle(f: &CandidateFVector) -> Result<bool> {
    let vertices = f.vertices();
    if vertices > ORACLE_MAX_VERTICES {
        return Err(Error::OracleUnavailable { vertices, max: ORACLE_MAX_VERTICES });
    }
    if vertices as usize <= ORACLE_EXHAUSTIVE_VERTICES {
        Ok(exhaustive_table().contains(f.counts()))
    } else {
        Ok(compressed_witness_exists(f.counts()))
    }
}

fn exhaustive_table() -> &'static HashSet<Vec<u64>> {
    static TABLE: OnceLock<HashSet<Vec<u64>>> = OnceLock::new();
    TABLE.get_or_init(|| realizable_fvectors(ORACLE_EXHAUSTIVE_VERTICES))
}

/// f-vectors of every simplicial complex whose vertices lie in `{1..n}` (`n <= 8`),
/// found by walking all antichains of facets.
pub fn realizable_fvectors(n: usize) -> HashSet<Vec<u64>> {
    let lattice = Lattice::new(n);
    let mut seen = HashSet::new();
    let _ = lattice.for_each_antichain::<()>(true, |facets| {
        let faces = lattice.down_closure(facets);
        let mut counts = vec![0u64; n + 1];
        for s in faces.iter() {
            counts[s.count_ones() as usize] += 1;
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        seen.insert(counts);
        ControlFlow::Continue(())
    });
    seen
}

/// Takes the first `f_t` sets of size `t+1` in colex order on `{1..f_0}` and checks
/// that the result is closed under removing a vertex.
pub fn compressed_witness_exists(counts: &[u64]) -> bool {
    if counts.is_empty() {
        return true;
    }
    if counts[0] != 1 {
        return false;
    }
    let vertices = counts.get(1).copied().unwrap_or(0) as usize;
    if vertices > 20 {
        return false;
    }
    // colex order on equal-size sets is ascending bitmask order
    let mut last_chosen: Vec<u32> = vec![0];
    for (size, &count) in counts.iter().enumerate().skip(1) {
        let layer = masks_of_degree(vertices, size);
        if count == 0 || count as usize > layer.len() {
            return false;
        }
        let chosen = &layer[..count as usize];
        let boundary_limit = last_chosen[size - 1];
        for &s in chosen {
            let mut rest = s;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if s ^ bit > boundary_limit {
                    return false;
                }
                rest ^= bit;
            }
        }
        last_chosen.push(*chosen.last().unwrap());
    }
    true
}
