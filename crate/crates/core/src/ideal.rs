//! Square-free monomial ideals given by their minimal generators `G(I)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{check_ambient, minimalize, SquareFreeMonomial};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IdealOptions {
    /// Accept the unit monomial `1` as a generator.
    pub allow_unit: bool,
}

/// A square-free monomial ideal of `k[x_1..x_n]`.
///
/// The generator list is always `G(I)`: an antichain under divisibility, without
/// duplicates, in canonical order. An empty list is the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<SquareFreeMonomial>,
}

impl MonomialIdeal {
    /// Minimalizes `generators`. The unit monomial is rejected.
    pub fn new(n: usize, generators: Vec<SquareFreeMonomial>) -> Result<Self> {
        Self::with_options(n, generators, IdealOptions::default())
    }

    pub fn with_options(
        n: usize,
        generators: Vec<SquareFreeMonomial>,
        options: IdealOptions,
    ) -> Result<Self> {
        check_ambient(n)?;
        for g in &generators {
            if g.ambient() != n {
                return Err(Error::AmbientMismatch { left: n, right: g.ambient() });
            }
            if g.is_unit() && !options.allow_unit {
                return Err(Error::UnitGenerator);
            }
        }
        let generators = minimalize(&generators)?;
        Ok(Self { n, generators })
    }

    /// Convenience constructor from 1-based index lists.
    pub fn from_index_sets<S, I>(n: usize, sets: S) -> Result<Self>
    where
        S: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let generators = sets
            .into_iter()
            .map(|vars| SquareFreeMonomial::new(n, vars))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, generators)
    }

    /// Caller guarantees `generators` is an antichain in canonical order.
    pub(crate) fn from_minimal_unchecked(n: usize, generators: Vec<SquareFreeMonomial>) -> Self {
        debug_assert!(generators.windows(2).all(|w| w[0] < w[1]));
        Self { n, generators }
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_ambient(n)?;
        Ok(Self { n, generators: Vec::new() })
    }

    pub fn unit(n: usize) -> Result<Self> {
        Ok(Self { n, generators: vec![SquareFreeMonomial::unit(n)?] })
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.n
    }

    /// `G(I)` in canonical order.
    #[inline]
    pub fn generators(&self) -> &[SquareFreeMonomial] {
        &self.generators
    }

    /// `p = |G(I)|`.
    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_unit())
    }

    pub fn has_full_generator(&self) -> bool {
        self.generators.iter().any(|g| g.is_full())
    }

    pub fn is_equigenerated(&self) -> bool {
        self.generators.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    pub(crate) fn generator_bits(&self) -> impl Iterator<Item = u32> + '_ {
        self.generators.iter().map(|g| g.bits())
    }

    pub fn contains(&self, m: &SquareFreeMonomial) -> Result<bool> {
        if m.ambient() != self.n {
            return Err(Error::AmbientMismatch { left: self.n, right: m.ambient() });
        }
        Ok(self.contains_bits(m.bits()))
    }

    #[inline]
    pub(crate) fn contains_bits(&self, bits: u32) -> bool {
        self.generators.iter().any(|g| g.bits() & !bits == 0)
    }

    /// Whether `bits` divides some minimal generator.
    #[inline]
    pub(crate) fn divides_generator_bits(&self, bits: u32) -> bool {
        self.generators.iter().any(|g| bits & !g.bits() == 0)
    }

    pub(crate) fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_proper_nonzero(&self) -> Result<()> {
        self.require_nonzero()?;
        if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "> in {} variables", self.n)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Whether `m ∈ I`.
pub fn contains(ideal: &MonomialIdeal, m: &SquareFreeMonomial) -> Result<bool> {
    ideal.contains(m)
}

/// `(α(I), ω(I))`: the smallest and largest generator degrees.
pub fn degree_extremes(ideal: &MonomialIdeal) -> Result<(usize, usize)> {
    ideal.require_nonzero()?;
    let alpha = ideal.generators.iter().map(|g| g.degree()).min().unwrap_or(0);
    let omega = ideal.generators.iter().map(|g| g.degree()).max().unwrap_or(0);
    Ok((alpha, omega))
}

/// Minimal primes of a square-free monomial ideal, i.e. the minimal vertex covers of
/// its generator supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalPrimes {
    /// Each prime `<x_i : i ∈ T>` is represented by `T`, canonically ordered.
    pub primes: Vec<SquareFreeMonomial>,
    pub height: usize,
    pub unmixed: bool,
}

/// Minimal transversals of `G(I)`, computed incrementally one generator at a time.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<MinimalPrimes> {
    ideal.require_nonzero()?;
    let n = ideal.ambient();
    let mut covers: Vec<u32> = vec![0];
    for g in ideal.generator_bits() {
        let mut next = Vec::with_capacity(covers.len());
        for &t in &covers {
            if t & g != 0 {
                next.push(t);
            } else {
                let mut rest = g;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    next.push(t | bit);
                    rest ^= bit;
                }
            }
        }
        covers = minimal_sets(next);
    }
    let primes: Vec<SquareFreeMonomial> = covers
        .into_iter()
        .map(|bits| SquareFreeMonomial::from_bits_unchecked(n, bits))
        .collect();
    let height = primes.iter().map(|p| p.degree()).min().unwrap_or(0);
    let unmixed = primes.iter().all(|p| p.degree() == height);
    Ok(MinimalPrimes { primes, height, unmixed })
}

/// Inclusion-minimal members of `sets`, canonically ordered.
fn minimal_sets(mut sets: Vec<u32>) -> Vec<u32> {
    sets.sort_by_key(|&b| (b.count_ones(), b));
    sets.dedup();
    let mut kept: Vec<u32> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    kept
}

/// `table[mask]` is true iff the monomial with support `mask` lies in the ideal
/// generated by `generators`. Length `2^n`.
pub(crate) fn membership_table(n: usize, generators: impl Iterator<Item = u32>) -> Vec<bool> {
    let size = 1usize << n;
    let mut table = vec![false; size];
    for g in generators {
        table[g as usize] = true;
    }
    for i in 0..n {
        let bit = 1usize << i;
        for mask in 0..size {
            if mask & bit != 0 && table[mask ^ bit] {
                table[mask] = true;
            }
        }
    }
    table
}

/// `table[mask]` is true iff `mask` is a subset of some member of `sets`. Length `2^n`.
pub(crate) fn down_closure_table(n: usize, sets: impl Iterator<Item = u32>) -> Vec<bool> {
    let size = 1usize << n;
    let mut table = vec![false; size];
    for s in sets {
        table[s as usize] = true;
    }
    for i in 0..n {
        let bit = 1usize << i;
        for mask in (0..size).rev() {
            if mask & bit == 0 && table[mask | bit] {
                table[mask] = true;
            }
        }
    }
    table
}
