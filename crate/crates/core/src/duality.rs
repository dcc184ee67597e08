//! Newton complementary duals.
//!
//! For a square-free ideal the dual `Î` is generated by `(x_1...x_n)/m` over
//! `m ∈ G(I)`. The generalized version replaces `x_1...x_n` by any `x^β` that
//! dominates every generator.

use std::fmt;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::ideal::{IdealOptions, MonomialIdeal};
use crate::monomial::{check_ambient, masks_of_degree, ExponentMonomial, SquareFreeMonomial};

/// `Î`. Fails with [`Error::UnitGenerator`] when `x_1...x_n ∈ G(I)`.
pub fn newton_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    newton_dual_with(ideal, IdealOptions::default())
}

/// `Î`, optionally admitting the unit ideal as the result.
pub fn newton_dual_with(ideal: &MonomialIdeal, options: IdealOptions) -> Result<MonomialIdeal> {
    ideal.require_nonzero()?;
    let complements: Vec<SquareFreeMonomial> =
        ideal.generators().iter().map(|g| g.complement()).collect();
    MonomialIdeal::with_options(ideal.ambient(), complements, options)
}

/// The exponent bound `β` of a generalized dual.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaVector(Vec<u32>);

impl BetaVector {
    pub fn new(bounds: Vec<u32>) -> Result<Self> {
        check_ambient(bounds.len())?;
        Ok(Self(bounds))
    }

    /// `β = (1, ..., 1)`.
    pub fn ones(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn bounds(&self) -> &[u32] {
        &self.0
    }
}

/// A monomial ideal with arbitrary exponents, kept minimally generated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentIdeal {
    n: usize,
    generators: Vec<ExponentMonomial>,
}

impl ExponentIdeal {
    pub fn new(n: usize, generators: Vec<ExponentMonomial>) -> Result<Self> {
        check_ambient(n)?;
        for g in &generators {
            if g.ambient() != n {
                return Err(Error::ExponentLength { expected: n, found: g.ambient() });
            }
        }
        Ok(Self { n, generators: minimalize_exponents(generators) })
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Minimal generators, sorted by degree then colex on the exponent vector
    /// (the square-free order when all exponents are 0 or 1).
    pub fn generators(&self) -> &[ExponentMonomial] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_unit())
    }

    /// Converts back to a square-free ideal; the unit ideal passes only with
    /// `allow_unit`.
    pub fn to_square_free(&self, options: IdealOptions) -> Result<MonomialIdeal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.to_square_free())
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::with_options(self.n, gens, options)
    }
}

impl From<&MonomialIdeal> for ExponentIdeal {
    fn from(ideal: &MonomialIdeal) -> Self {
        let generators = ideal.generators().iter().map(ExponentMonomial::from).collect();
        Self { n: ideal.ambient(), generators: minimalize_exponents(generators) }
    }
}

impl fmt::Display for ExponentIdeal {
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

impl fmt::Debug for ExponentIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn minimalize_exponents(mut gens: Vec<ExponentMonomial>) -> Vec<ExponentMonomial> {
    gens.sort_by(|a, b| {
        a.degree().cmp(&b.degree()).then_with(|| a.exponents().iter().rev().cmp(b.exponents().iter().rev()))
    });
    gens.dedup();
    let mut kept: Vec<ExponentMonomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g).unwrap_or(false)) {
            kept.push(g);
        }
    }
    kept
}

/// `Î^[β] = < x^β / m : m ∈ G(I) >`.
pub fn generalized_newton_dual(ideal: &ExponentIdeal, beta: &BetaVector) -> Result<ExponentIdeal> {
    if beta.bounds().len() != ideal.ambient() {
        return Err(Error::ExponentLength { expected: ideal.ambient(), found: beta.bounds().len() });
    }
    let mut quotients = Vec::with_capacity(ideal.generators().len());
    for g in ideal.generators() {
        let mut exps = Vec::with_capacity(ideal.ambient());
        for (l, (&b, &e)) in beta.bounds().iter().zip(g.exponents()).enumerate() {
            if e > b {
                return Err(Error::InvalidBeta { coordinate: l + 1, bound: b, exponent: e });
            }
            exps.push(b - e);
        }
        quotients.push(ExponentMonomial::new(exps)?);
    }
    ExponentIdeal::new(ideal.ambient(), quotients)
}

/// Both sides of the divisor/dual-member bijection at dimension index `j`:
/// square-free monomials of degree `j+1` dividing some generator of `I`, and
/// square-free monomials of degree `n-j-1` lying in `Î`.
pub fn dual_divisor_count(ideal: &MonomialIdeal, j: i64) -> Result<(u64, u64)> {
    let n = ideal.ambient();
    if j < -1 || j > n as i64 - 1 {
        return Err(Error::IndexOutOfRange { j, max: n as i64 - 1 });
    }
    ideal.require_nonzero()?;
    let dual = newton_dual_with(ideal, IdealOptions { allow_unit: true })?;
    let lhs = masks_of_degree(n, (j + 1) as usize)
        .into_iter()
        .filter(|&m| ideal.divides_generator_bits(m))
        .count() as u64;
    let rhs = masks_of_degree(n, (n as i64 - j - 1) as usize)
        .into_iter()
        .filter(|&m| dual.contains_bits(m))
        .count() as u64;
    debug_assert!(lhs <= binomial(n as u64, (j + 1) as u64));
    Ok((lhs, rhs))
}
