//! Square-free monomials as bitsets over `{1..n}`, plus general exponent monomials
//! for the beta-dual.
//!
//! Variable `x_i` occupies bit `i - 1`. A [`SquareFreeMonomial`] is simultaneously a
//! monomial and a face of a simplicial complex on the same variables.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported ambient variable count.
pub const MAX_VARS: usize = 20;

/// Rejects ambient variable counts outside `1..=MAX_VARS`.
pub fn check_ambient(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        Err(Error::UnsupportedAmbient { n, max: MAX_VARS })
    } else {
        Ok(())
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// A square-free monomial `x_{i1}...x_{ij}` in `k[x_1..x_n]`, stored as its support.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SquareFreeMonomial {
    bits: u32,
    n: u8,
}

impl SquareFreeMonomial {
    /// Builds a monomial from 1-based variable indices. Repeated indices collapse.
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, vars: I) -> Result<Self> {
        check_ambient(n)?;
        let mut bits = 0u32;
        for index in vars {
            if index == 0 || index > n {
                return Err(Error::VariableOutOfRange { index, n });
            }
            bits |= 1 << (index - 1);
        }
        Ok(Self { bits, n: n as u8 })
    }

    /// Builds a monomial from a raw bitset. Bits at or above `n` are rejected.
    pub fn from_bits(n: usize, bits: u32) -> Result<Self> {
        check_ambient(n)?;
        if bits & !full_mask(n) != 0 {
            let index = 32 - (bits & !full_mask(n)).leading_zeros() as usize;
            return Err(Error::VariableOutOfRange { index, n });
        }
        Ok(Self { bits, n: n as u8 })
    }

    /// Caller guarantees `n` is in range and `bits` fits.
    #[inline]
    pub(crate) fn from_bits_unchecked(n: usize, bits: u32) -> Self {
        debug_assert!(n <= MAX_VARS && bits & !full_mask(n) == 0);
        Self { bits, n: n as u8 }
    }

    /// The empty monomial `1`.
    pub fn unit(n: usize) -> Result<Self> {
        Self::from_bits(n, 0)
    }

    /// `x_1 x_2 ... x_n`.
    pub fn full(n: usize) -> Result<Self> {
        check_ambient(n)?;
        Ok(Self { bits: full_mask(n), n: n as u8 })
    }

    #[inline]
    pub fn bits(&self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_unit(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.ambient())
    }

    pub fn contains_var(&self, index: usize) -> bool {
        index >= 1 && index <= self.ambient() && self.bits & (1 << (index - 1)) != 0
    }

    /// 1-based variable indices in ascending order.
    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.ambient()).filter(move |i| bits & (1 << i) != 0).map(|i| i + 1)
    }

    /// `(x_1...x_n) / self`.
    pub fn complement(&self) -> Self {
        Self { bits: full_mask(self.ambient()) & !self.bits, n: self.n }
    }

    /// Whether `self` divides `other`, i.e. `supp(self) ⊆ supp(other)`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_same_ambient(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    pub(crate) fn check_same_ambient(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::AmbientMismatch { left: self.ambient(), right: other.ambient() })
        } else {
            Ok(())
        }
    }
}

/// Canonical order: ascending degree, then ascending bitset value.
impl Ord for SquareFreeMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.degree().cmp(&other.degree()))
            .then(self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for SquareFreeMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SquareFreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        for (k, v) in self.vars().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SquareFreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `a | b` for square-free monomials.
pub fn divides(a: &SquareFreeMonomial, b: &SquareFreeMonomial) -> Result<bool> {
    a.divides(b)
}

/// Divisibility-minimal elements of `monomials`, deduplicated and in canonical order.
pub fn minimalize(monomials: &[SquareFreeMonomial]) -> Result<Vec<SquareFreeMonomial>> {
    if let Some(first) = monomials.first() {
        for m in monomials {
            first.check_same_ambient(m)?;
        }
    }
    let mut sorted = monomials.to_vec();
    sorted.sort();
    sorted.dedup();
    // a divisor always has degree <= its multiple, so it precedes it canonically
    let mut kept: Vec<SquareFreeMonomial> = Vec::with_capacity(sorted.len());
    for m in sorted {
        if !kept.iter().any(|k| k.bits & !m.bits == 0) {
            kept.push(m);
        }
    }
    Ok(kept)
}

/// All `C(n, d)` square-free monomials of degree `d`, canonically ordered.
/// Empty when `d > n`.
pub fn monomials_of_degree(n: usize, d: usize) -> Result<Vec<SquareFreeMonomial>> {
    check_ambient(n)?;
    if d > n {
        return Ok(Vec::new());
    }
    Ok(masks_of_degree(n, d)
        .into_iter()
        .map(|bits| SquareFreeMonomial::from_bits_unchecked(n, bits))
        .collect())
}

/// Bitsets of popcount `d` below `2^n` in ascending order (Gosper's hack).
pub(crate) fn masks_of_degree(n: usize, d: usize) -> Vec<u32> {
    if d > n {
        return Vec::new();
    }
    if d == 0 {
        return vec![0];
    }
    let limit = 1u64 << n;
    let mut out = Vec::new();
    let mut x: u64 = (1u64 << d) - 1;
    while x < limit {
        out.push(x as u32);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

/// A general monomial `x_1^{e_1} ... x_n^{e_n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentMonomial {
    exponents: Vec<u32>,
}

impl ExponentMonomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        check_ambient(exponents.len())?;
        Ok(Self { exponents })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn ambient(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Entrywise `self <= other`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        if self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch { left: self.ambient(), right: other.ambient() });
        }
        Ok(self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b))
    }

    pub fn is_square_free(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    pub fn to_square_free(&self) -> Result<SquareFreeMonomial> {
        if !self.is_square_free() {
            return Err(Error::NotSquareFree);
        }
        let bits = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e == 1)
            .fold(0u32, |acc, (i, _)| acc | (1 << i));
        SquareFreeMonomial::from_bits(self.ambient(), bits)
    }
}

impl From<&SquareFreeMonomial> for ExponentMonomial {
    fn from(m: &SquareFreeMonomial) -> Self {
        let exponents = (0..m.ambient()).map(|i| (m.bits() >> i) & 1).collect();
        Self { exponents }
    }
}

impl fmt::Display for ExponentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExponentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
