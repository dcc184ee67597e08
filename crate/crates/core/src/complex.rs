//! Simplicial complexes on subsets of `{x_1..x_n}` and the two complexes attached to a
//! square-free monomial ideal.
//!
//! Faces reuse [`SquareFreeMonomial`]: a face is the support of a square-free monomial.
//! The vertex set of a complex is always the union of its facets, so the facet complex
//! only sees variables occurring in `G(I)` and the non-face complex only sees
//! variables not in `I`. Two complexes built from the same ideal can therefore live on
//! different vertex sets, and f-vectors are compared without padding.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{down_closure_table, membership_table, MonomialIdeal};
use crate::monomial::{check_ambient, full_mask, SquareFreeMonomial};

/// A simplicial complex given by its facets.
///
/// Two degenerate values are distinguished: the void complex (no faces at all) and
/// the irrelevant complex `{∅}` (one facet, the empty face).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    vertices: SquareFreeMonomial,
    facets: Vec<SquareFreeMonomial>,
}

impl SimplicialComplex {
    /// The downward closure of `faces`. Only inclusion-maximal inputs survive as facets.
    pub fn from_faces(n: usize, faces: Vec<SquareFreeMonomial>) -> Result<Self> {
        check_ambient(n)?;
        for f in &faces {
            if f.ambient() != n {
                return Err(Error::AmbientMismatch { left: n, right: f.ambient() });
            }
        }
        let bits = maximal_sets(faces.iter().map(|f| f.bits()).collect());
        Ok(Self::from_maximal_bits(n, bits))
    }

    pub fn from_index_sets<S, I>(n: usize, sets: S) -> Result<Self>
    where
        S: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let faces = sets
            .into_iter()
            .map(|vars| SquareFreeMonomial::new(n, vars))
            .collect::<Result<Vec<_>>>()?;
        Self::from_faces(n, faces)
    }

    fn from_maximal_bits(n: usize, mut bits: Vec<u32>) -> Self {
        bits.sort_by_key(|&b| (b.count_ones(), b));
        let union = bits.iter().fold(0u32, |acc, &b| acc | b);
        Self {
            n,
            vertices: SquareFreeMonomial::from_bits_unchecked(n, union),
            facets: bits.into_iter().map(|b| SquareFreeMonomial::from_bits_unchecked(n, b)).collect(),
        }
    }

    pub fn void(n: usize) -> Result<Self> {
        check_ambient(n)?;
        Ok(Self::from_maximal_bits(n, Vec::new()))
    }

    pub fn irrelevant(n: usize) -> Result<Self> {
        check_ambient(n)?;
        Ok(Self::from_maximal_bits(n, vec![0]))
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: SquareFreeMonomial) -> Self {
        Self::from_maximal_bits(vertices.ambient(), vec![vertices.bits()])
    }

    /// Ambient variable count of the faces.
    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> SquareFreeMonomial {
        self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.degree()
    }

    /// Facets in canonical order.
    pub fn facets(&self) -> &[SquareFreeMonomial] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_unit()
    }

    pub fn contains_face(&self, face: &SquareFreeMonomial) -> bool {
        face.ambient() == self.n && self.contains_face_bits(face.bits())
    }

    pub(crate) fn contains_face_bits(&self, bits: u32) -> bool {
        self.facets.iter().any(|f| bits & !f.bits() == 0)
    }

    /// Membership table over all `2^n` subsets.
    pub(crate) fn face_table(&self) -> Vec<bool> {
        down_closure_table(self.n, self.facets.iter().map(|f| f.bits()))
    }

    /// All faces, canonically ordered.
    pub fn faces(&self) -> Vec<SquareFreeMonomial> {
        let table = self.face_table();
        let mut out: Vec<SquareFreeMonomial> = table
            .iter()
            .enumerate()
            .filter(|(_, &is_face)| is_face)
            .map(|(mask, _)| SquareFreeMonomial::from_bits_unchecked(self.n, mask as u32))
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return f.write_str("void");
        }
        f.write_str("<")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("{")?;
            for (k, v) in facet.vars().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn maximal_sets(mut sets: Vec<u32>) -> Vec<u32> {
    sets.sort_by_key(|&b| std::cmp::Reverse((b.count_ones(), b)));
    sets.dedup();
    let mut kept: Vec<u32> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept
}

/// `(f_{-1}, f_0, ..., f_d)`, with `f_i` the number of `i`-dimensional faces.
///
/// Stored without trailing zeros, so equality also compares dimensions. The void
/// complex has the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(Vec<u64>);

impl FVector {
    /// Rejects trailing zeros and a first entry other than 1.
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.last() == Some(&0) {
            return Err(Error::MalformedFVector("trailing zero".into()));
        }
        if let Some(&first) = counts.first() {
            if first != 1 {
                return Err(Error::MalformedFVector(format!("f_-1 = {first}, expected 1")));
            }
        }
        Ok(Self(counts))
    }

    /// Drops trailing zeros; the remainder is stored as is.
    pub(crate) fn trimmed(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Self(counts)
    }

    /// Entries starting at `f_{-1}`.
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn into_counts(self) -> Vec<u64> {
        self.0
    }

    pub fn is_void(&self) -> bool {
        self.0.is_empty()
    }

    /// `d` where the vector is `(f_{-1}, ..., f_d)`; `None` for the void complex.
    pub fn dimension(&self) -> Option<i64> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() as i64 - 2)
        }
    }

    /// `f_i`, zero outside the stored range.
    pub fn get(&self, i: i64) -> u64 {
        if i < -1 {
            return 0;
        }
        self.0.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for FVector {
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

impl fmt::Debug for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `δ_F(I)`: facets are the supports of the minimal generators.
pub fn facet_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if ideal.is_zero() {
        return Err(Error::VoidComplex);
    }
    let bits = ideal.generators().iter().map(|g| g.bits()).collect();
    Ok(SimplicialComplex::from_maximal_bits(ideal.ambient(), bits))
}

/// `δ_N(I)`: the Stanley-Reisner complex, whose faces are the supports of square-free
/// monomials outside `I`. The unit ideal gives the void complex.
pub fn nonface_complex(ideal: &MonomialIdeal) -> SimplicialComplex {
    let n = ideal.ambient();
    let member = membership_table(n, ideal.generators().iter().map(|g| g.bits()));
    let full = full_mask(n);
    let facets = (0..1u32 << n)
        .filter(|&mask| {
            !member[mask as usize] && {
                let mut rest = full & !mask;
                let mut maximal = true;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    if !member[(mask | bit) as usize] {
                        maximal = false;
                        break;
                    }
                    rest ^= bit;
                }
                maximal
            }
        })
        .collect();
    SimplicialComplex::from_maximal_bits(n, facets)
}

/// Counts faces by dimension after closing the facets downward.
pub fn f_vector(complex: &SimplicialComplex) -> FVector {
    if complex.is_void() {
        return FVector::default();
    }
    let table = complex.face_table();
    let mut counts = vec![0u64; complex.ambient() + 1];
    for (mask, &is_face) in table.iter().enumerate() {
        if is_face {
            counts[(mask as u32).count_ones() as usize] += 1;
        }
    }
    FVector::trimmed(counts)
}

/// Largest facet size minus one; `-1` for the irrelevant complex.
pub fn dimension(complex: &SimplicialComplex) -> Result<i64> {
    complex
        .facets()
        .iter()
        .map(|f| f.degree() as i64 - 1)
        .max()
        .ok_or(Error::VoidComplex)
}

fn check_within(complex: &SimplicialComplex, ambient: &SquareFreeMonomial) -> Result<()> {
    complex.vertices().check_same_ambient(ambient)?;
    if complex.vertices().bits() & !ambient.bits() != 0 {
        return Err(Error::VerticesOutsideAmbient);
    }
    Ok(())
}

/// `Δ^∨ = { F ⊆ X : X \ F ∉ Δ }`.
pub fn alexander_dual(
    complex: &SimplicialComplex,
    ambient: &SquareFreeMonomial,
) -> Result<SimplicialComplex> {
    check_within(complex, ambient)?;
    let n = complex.ambient();
    let x = ambient.bits();
    let faces = complex.face_table();
    let is_dual_face = |f: u32| !faces[(x & !f) as usize];
    let mut facets = Vec::new();
    for f in submasks(x) {
        if !is_dual_face(f) {
            continue;
        }
        let mut rest = x & !f;
        let mut maximal = true;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if is_dual_face(f | bit) {
                maximal = false;
                break;
            }
            rest ^= bit;
        }
        if maximal {
            facets.push(f);
        }
    }
    Ok(SimplicialComplex::from_maximal_bits(n, facets))
}

/// The Stanley-Reisner ideal of `Δ` over the variables of `X`: minimally generated by
/// the inclusion-minimal subsets of `X` that are not faces. The void complex gives the
/// unit ideal and the full simplex on `X` the zero ideal.
pub fn nonface_ideal(
    complex: &SimplicialComplex,
    ambient: &SquareFreeMonomial,
) -> Result<MonomialIdeal> {
    check_within(complex, ambient)?;
    let n = complex.ambient();
    let faces = complex.face_table();
    let mut minimal: Vec<SquareFreeMonomial> = submasks(ambient.bits())
        .filter(|&s| {
            if faces[s as usize] {
                return false;
            }
            let mut rest = s;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if !faces[(s ^ bit) as usize] {
                    return false;
                }
                rest ^= bit;
            }
            true
        })
        .map(|s| SquareFreeMonomial::from_bits_unchecked(n, s))
        .collect();
    minimal.sort();
    Ok(MonomialIdeal::from_minimal_unchecked(n, minimal))
}

/// Every submask of `mask`, including `0` and `mask`.
pub(crate) fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}
