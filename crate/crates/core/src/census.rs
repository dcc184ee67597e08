//! Censuses of f-ideals on few variables.
//!
//! `V(n, d)` is the set of f-ideals of `k[x_1..x_n]` equigenerated in degree `d`.
//! Ideals are counted as labelled objects. Candidates are produced in a fixed order,
//! evaluated in parallel blocks and merged in order, so results never depend on the
//! worker count. Budgets cap the number of candidates tested, not wall time.

use std::collections::{BTreeSet, HashSet};
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::checked_binomial;
use crate::duality::newton_dual;
use crate::error::{Error, Result};
use crate::fideal::{is_f_ideal, Method};
use crate::ideal::{degree_extremes, MonomialIdeal};
use crate::lattice::{Lattice, MAX_LATTICE_VARS};
use crate::monomial::{masks_of_degree, SquareFreeMonomial};

const BLOCK: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusConfig {
    /// Maximum number of candidate ideals tested.
    pub budget: u64,
    /// Maximum number of witnesses kept; the count is always exact.
    pub witness_cap: usize,
    /// Worker threads; 0 lets the pool decide.
    pub workers: usize,
    pub method: Method,
}

impl Default for CensusConfig {
    fn default() -> Self {
        Self { budget: 50_000_000, witness_cap: 100, workers: 0, method: Method::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeSpec {
    /// Equigenerated in this degree.
    Exact(usize),
    /// Any generator degrees.
    Mixed,
    /// Generator degrees spanning exactly this `ω - α`.
    Gap(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub ideal: MonomialIdeal,
    pub alpha: usize,
    pub omega: usize,
}

impl Witness {
    fn new(ideal: MonomialIdeal) -> Self {
        let (alpha, omega) = degree_extremes(&ideal).unwrap_or((0, 0));
        Self { ideal, alpha, omega }
    }

    pub fn is_mixed(&self) -> bool {
        self.alpha != self.omega
    }
}

#[derive(Debug, Clone)]
pub struct CensusRecord {
    pub n: usize,
    pub degree: DegreeSpec,
    /// Number of f-ideals found. A lower bound when `budget_exhausted`.
    pub count: u64,
    pub candidates_tested: u64,
    pub witnesses: Vec<Witness>,
    pub elapsed: Duration,
    pub budget_exhausted: bool,
}

impl CensusRecord {
    pub fn ideals(&self) -> impl Iterator<Item = &MonomialIdeal> {
        self.witnesses.iter().map(|w| &w.ideal)
    }
}

struct Tally {
    n: usize,
    config: CensusConfig,
    count: u64,
    tested: u64,
    witnesses: Vec<Witness>,
    pending: Vec<Vec<u32>>,
    exhausted: bool,
    keep: fn(&Witness, usize) -> bool,
    keep_arg: usize,
    error: Option<Error>,
}

impl Tally {
    fn new(n: usize, config: CensusConfig) -> Self {
        Self {
            n,
            config,
            count: 0,
            tested: 0,
            witnesses: Vec::new(),
            pending: Vec::with_capacity(BLOCK),
            exhausted: false,
            keep: |_, _| true,
            keep_arg: 0,
            error: None,
        }
    }

    fn offer(&mut self, generators: &[u32]) -> ControlFlow<()> {
        if self.tested == self.config.budget {
            self.exhausted = true;
            return ControlFlow::Break(());
        }
        self.tested += 1;
        self.pending.push(generators.to_vec());
        if self.pending.len() == BLOCK {
            self.flush()?;
        }
        ControlFlow::Continue(())
    }

    fn flush(&mut self) -> ControlFlow<()> {
        let n = self.n;
        let method = self.config.method;
        let block = std::mem::take(&mut self.pending);
        let results: Vec<Result<Option<MonomialIdeal>>> = block
            .into_par_iter()
            .map(|gens| {
                let mut monomials: Vec<SquareFreeMonomial> = gens
                    .into_iter()
                    .map(|b| SquareFreeMonomial::from_bits_unchecked(n, b))
                    .collect();
                monomials.sort();
                let ideal = MonomialIdeal::from_minimal_unchecked(n, monomials);
                Ok(is_f_ideal(&ideal, method)?.then_some(ideal))
            })
            .collect();
        for r in results {
            match r {
                Ok(Some(ideal)) => {
                    let w = Witness::new(ideal);
                    if (self.keep)(&w, self.keep_arg) {
                        self.count += 1;
                        if self.witnesses.len() < self.config.witness_cap {
                            self.witnesses.push(w);
                        }
                    }
                }
                Ok(None) => {}
                Err(e) => {
                    self.error = Some(e);
                    return ControlFlow::Break(());
                }
            }
        }
        self.pending = Vec::with_capacity(BLOCK);
        ControlFlow::Continue(())
    }

    fn finish(mut self, degree: DegreeSpec, started: Instant) -> Result<CensusRecord> {
        if self.error.is_none() {
            let _ = self.flush();
        }
        if let Some(e) = self.error {
            return Err(e);
        }
        Ok(CensusRecord {
            n: self.n,
            degree,
            count: self.count,
            candidates_tested: self.tested,
            witnesses: self.witnesses,
            elapsed: started.elapsed(),
            budget_exhausted: self.exhausted,
        })
    }
}

fn with_pool<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(job),
        Err(_) => job(),
    }
}

fn check_census_ambient(n: usize, d: usize) -> Result<()> {
    if n == 0 || n > MAX_LATTICE_VARS {
        return Err(Error::CensusOutOfRange { n, d });
    }
    Ok(())
}

/// Visits `k`-subsets of `0..len` in lexicographic order.
fn for_each_combination(
    len: usize,
    k: usize,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if k > len {
        return ControlFlow::Continue(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx)?;
        let Some(i) = (0..k).rev().find(|&i| idx[i] < i + len - k) else {
            return ControlFlow::Continue(());
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `V(n, d)` for `1 <= d <= n-1`, `n <= 8`.
///
/// An equigenerated f-ideal has exactly `C(n,d)/2` generators, so only subsets of
/// `M_d` of that size are tested, and none at all when `C(n,d)` is odd.
pub fn enumerate_v(n: usize, d: usize, config: &CensusConfig) -> Result<CensusRecord> {
    check_census_ambient(n, d)?;
    if d == 0 || d >= n {
        return Err(Error::CensusOutOfRange { n, d });
    }
    let started = Instant::now();
    let layer = masks_of_degree(n, d);
    let mut tally = Tally::new(n, *config);
    if layer.len() % 2 == 0 {
        let k = layer.len() / 2;
        let mut buf = Vec::with_capacity(k);
        with_pool(config.workers, || {
            let _ = for_each_combination(layer.len(), k, |idx| {
                buf.clear();
                buf.extend(idx.iter().map(|&i| layer[i]));
                tally.offer(&buf)
            });
            tally.finish(DegreeSpec::Exact(d), started)
        })
    } else {
        tally.finish(DegreeSpec::Exact(d), started)
    }
}

/// Every f-ideal on `n <= 8` variables, found by walking all antichains of nonempty
/// subsets of `{1..n}` (exhaustive within the budget).
pub fn enumerate_all_fideals(n: usize, config: &CensusConfig) -> Result<CensusRecord> {
    enumerate_filtered(n, config, DegreeSpec::Mixed, |_, _| true, 0)
}

/// f-ideals with `ω(I) - α(I) = gap`, searched exhaustively within the budget.
pub fn search_degree_gap(n: usize, gap: usize, config: &CensusConfig) -> Result<CensusRecord> {
    enumerate_filtered(n, config, DegreeSpec::Gap(gap), |w, gap| w.omega - w.alpha == gap, gap)
}

fn enumerate_filtered(
    n: usize,
    config: &CensusConfig,
    degree: DegreeSpec,
    keep: fn(&Witness, usize) -> bool,
    keep_arg: usize,
) -> Result<CensusRecord> {
    check_census_ambient(n, 0)?;
    let started = Instant::now();
    let lattice = Lattice::new(n);
    let mut tally = Tally::new(n, *config);
    tally.keep = keep;
    tally.keep_arg = keep_arg;
    with_pool(config.workers, || {
        let _ = lattice.for_each_antichain(false, |chain| {
            if chain.is_empty() {
                return ControlFlow::Continue(());
            }
            tally.offer(chain)
        });
        tally.finish(degree, started)
    })
}

/// A random nonzero square-free ideal with generator degrees in `1..=n-1`, so that
/// its dual is never the unit ideal.
pub fn random_ideal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> MonomialIdeal {
    assert!(n >= 2, "need two variables for a nonunit dual");
    let count = rng.gen_range(1..=2 * n);
    let gens: Vec<SquareFreeMonomial> = (0..count)
        .map(|_| {
            let degree = rng.gen_range(1..n);
            let mut bits = 0u32;
            while (bits.count_ones() as usize) < degree {
                bits |= 1 << rng.gen_range(0..n);
            }
            SquareFreeMonomial::from_bits_unchecked(n, bits)
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("generators are nonunit and in range")
}

/// Tests `samples` seeded random ideals (see [`random_ideal`]); the count is the number
/// of distinct f-ideals hit.
pub fn sample_fideals(n: usize, samples: u64, seed: u64, config: &CensusConfig) -> Result<CensusRecord> {
    if n < 2 || n > crate::monomial::MAX_VARS {
        return Err(Error::CensusOutOfRange { n, d: 0 });
    }
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ideals: Vec<MonomialIdeal> = (0..samples).map(|_| random_ideal(n, &mut rng)).collect();
    let method = config.method;
    let hits = with_pool(config.workers, || {
        ideals
            .into_par_iter()
            .map(|i| Ok(is_f_ideal(&i, method)?.then_some(i)))
            .collect::<Result<Vec<_>>>()
    })?;
    let distinct: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut distinct = distinct;
    let mut witnesses = Vec::new();
    for ideal in hits.into_iter().flatten() {
        let key: Vec<u32> = ideal.generators().iter().map(|g| g.bits()).collect();
        if distinct.insert(key) && witnesses.len() < config.witness_cap {
            witnesses.push(Witness::new(ideal));
        }
    }
    Ok(CensusRecord {
        n,
        degree: DegreeSpec::Mixed,
        count: distinct.len() as u64,
        candidates_tested: samples,
        witnesses,
        elapsed: started.elapsed(),
        budget_exhausted: false,
    })
}

/// `|V(n,d)|` against `|V(n,n-d)|`, with the complementary dual checked to map one
/// witness set onto the other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairingReport {
    pub n: usize,
    pub d: usize,
    pub count: u64,
    pub dual_count: u64,
    pub equal: bool,
    pub bijection_checked: bool,
    /// Either census ran out of budget, so nothing was concluded.
    pub inconclusive: bool,
}

pub fn verify_duality_pairing(n: usize, d: usize, config: &CensusConfig) -> Result<PairingReport> {
    let full = CensusConfig { witness_cap: usize::MAX, ..*config };
    let left = enumerate_v(n, d, &full)?;
    let right = enumerate_v(n, n - d, &full)?;
    let inconclusive = left.budget_exhausted || right.budget_exhausted;
    let equal = !inconclusive && left.count == right.count;
    let mut bijection_checked = false;
    if equal {
        let targets: HashSet<&MonomialIdeal> = right.ideals().collect();
        let mut images = HashSet::new();
        let mut all_land = true;
        for ideal in left.ideals() {
            let dual = newton_dual(ideal)?;
            all_land &= targets.contains(&dual);
            images.insert(dual);
        }
        bijection_checked = all_land && images.len() == targets.len();
    }
    Ok(PairingReport {
        n,
        d,
        count: left.count,
        dual_count: right.count,
        equal,
        bijection_checked,
        inconclusive,
    })
}

/// Number of classes of `ideals` under permutations of the variables. Inputs must share
/// one ambient `n <= 8`.
pub fn orbit_count(ideals: &[MonomialIdeal]) -> usize {
    let Some(first) = ideals.first() else {
        return 0;
    };
    let n = first.ambient();
    assert!(n <= MAX_LATTICE_VARS, "orbit counting limited to n <= {MAX_LATTICE_VARS}");
    let perms = permutations(n);
    let canon: HashSet<Vec<u32>> = ideals
        .iter()
        .map(|ideal| {
            perms
                .iter()
                .map(|p| {
                    let mut image: Vec<u32> =
                        ideal.generators().iter().map(|g| permute(g.bits(), p)).collect();
                    image.sort_unstable();
                    image
                })
                .min()
                .unwrap_or_default()
        })
        .collect();
    canon.len()
}

fn permute(bits: u32, perm: &[usize]) -> u32 {
    perm.iter()
        .enumerate()
        .filter(|(i, _)| bits >> i & 1 == 1)
        .fold(0, |acc, (_, &to)| acc | 1 << to)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    // Heap's algorithm
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut out = vec![p.clone()];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `C(C(n,d), C(n,d)/2)` when `C(n,d)` is even, i.e. the pruned candidate count of
/// [`enumerate_v`]; `None` on overflow.
pub fn equigenerated_candidate_count(n: usize, d: usize) -> Option<u64> {
    let layer = checked_binomial(n as u64, d as u64)?;
    if layer % 2 == 1 {
        return Some(0);
    }
    checked_binomial(layer, layer / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, sets: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_index_sets(n, sets.iter().map(|s| s.iter().copied())).unwrap()
    }

    #[test]
    fn combinations_are_lexicographic_and_complete() {
        let mut seen = Vec::new();
        let _ = for_each_combination(5, 2, |c| {
            seen.push(c.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(seen.len(), 10);
        assert_eq!(seen.first().unwrap(), &vec![0, 1]);
        assert_eq!(seen.last().unwrap(), &vec![3, 4]);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));

        let mut count = 0;
        let _ = for_each_combination(4, 0, |c| {
            assert!(c.is_empty());
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 1);
        let mut count = 0;
        let _ = for_each_combination(3, 3, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn small_censuses() {
        let cfg = CensusConfig::default();
        let v21 = enumerate_v(2, 1, &cfg).unwrap();
        assert_eq!(v21.count, 2);
        let ideals: Vec<&MonomialIdeal> = v21.ideals().collect();
        assert_eq!(ideals, vec![&ideal(2, &[&[1]]), &ideal(2, &[&[2]])]);

        assert_eq!(enumerate_v(3, 1, &cfg).unwrap().count, 0);
        assert_eq!(enumerate_v(3, 2, &cfg).unwrap().count, 0);

        let v42 = enumerate_v(4, 2, &cfg).unwrap();
        assert!(v42.count > 0);
        assert!(v42.ideals().any(|i| *i == ideal(4, &[&[1, 2], &[2, 3], &[3, 4]])));
        assert_eq!(v42.candidates_tested, 20);

        assert!(enumerate_v(4, 0, &cfg).is_err());
        assert!(enumerate_v(4, 4, &cfg).is_err());
        assert!(enumerate_v(9, 2, &cfg).is_err());
    }

    #[test]
    fn budget_truncates_and_flags() {
        let cfg = CensusConfig { budget: 5, ..CensusConfig::default() };
        let r = enumerate_v(4, 2, &cfg).unwrap();
        assert!(r.budget_exhausted);
        assert_eq!(r.candidates_tested, 5);
        let cfg = CensusConfig { budget: 20, ..CensusConfig::default() };
        assert!(!enumerate_v(4, 2, &cfg).unwrap().budget_exhausted);
    }

    #[test]
    fn witness_cap_keeps_exact_count() {
        let cfg = CensusConfig { witness_cap: 1, ..CensusConfig::default() };
        let r = enumerate_v(4, 2, &cfg).unwrap();
        assert_eq!(r.witnesses.len(), 1);
        assert!(r.count > 1);
    }

    #[test]
    fn all_fideals_small_n() {
        let cfg = CensusConfig::default();
        let r = enumerate_all_fideals(2, &cfg).unwrap();
        let ideals: Vec<&MonomialIdeal> = r.ideals().collect();
        assert_eq!(ideals, vec![&ideal(2, &[&[1]]), &ideal(2, &[&[2]])]);
        // nonempty antichains of nonempty subsets of {1,2}: {1},{2},{12},{1,2}
        assert_eq!(r.candidates_tested, 4);

        let r = enumerate_all_fideals(3, &cfg).unwrap();
        assert!(!r.witnesses.iter().any(|w| w.alpha == 1 && w.omega == 1));
    }

    #[test]
    fn gap_search_bounds() {
        let cfg = CensusConfig::default();
        assert_eq!(search_degree_gap(4, 3, &cfg).unwrap().count, 0);
        assert!(search_degree_gap(4, 0, &cfg).unwrap().count > 0);
    }

    #[test]
    fn orbits_of_v42() {
        let cfg = CensusConfig { witness_cap: usize::MAX, ..CensusConfig::default() };
        let r = enumerate_v(4, 2, &cfg).unwrap();
        let ideals: Vec<MonomialIdeal> = r.ideals().cloned().collect();
        let orbits = orbit_count(&ideals);
        assert!(orbits >= 1 && orbits <= ideals.len());
        assert_eq!(permutations(4).len(), 24);
        let distinct: HashSet<Vec<usize>> = permutations(5).into_iter().collect();
        assert_eq!(distinct.len(), 120);
    }

    #[test]
    fn candidate_counts() {
        assert_eq!(equigenerated_candidate_count(4, 2), Some(20));
        assert_eq!(equigenerated_candidate_count(3, 1), Some(0));
        assert_eq!(equigenerated_candidate_count(6, 3), Some(184_756));
    }

    #[test]
    fn random_ideals_are_seeded() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let x = random_ideal(6, &mut a);
            assert_eq!(x, random_ideal(6, &mut b));
            assert!(!x.has_full_generator() && !x.is_zero());
        }
    }
}
