//! Deciding and certifying the f-ideal property.
//!
//! Two independent criteria are implemented: comparing `f(δ_F(I))` with `f(δ_N(I))`,
//! and comparing `|A_d(I)|` with `|C_d(I)|` for every degree `d`, where `M_d` splits as
//!
//! * `A_d`: not in `I`, divides no generator
//! * `B_d`: not in `I`, divides some generator
//! * `C_d`: minimal generators of degree `d`
//! * `D_d`: in `I` but not minimal generators

use serde::Serialize;

use crate::combinatorics::binomial;
use crate::complex::{dimension, f_vector, facet_complex, nonface_complex, FVector};
use crate::duality::newton_dual;
use crate::error::{Error, Result};
use crate::ideal::{degree_extremes, membership_table, minimal_primes, MonomialIdeal};
use crate::monomial::{masks_of_degree, SquareFreeMonomial};

/// `M_d = A ⊔ B ⊔ C ⊔ D` for one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreePartition {
    pub degree: usize,
    pub a: Vec<SquareFreeMonomial>,
    pub b: Vec<SquareFreeMonomial>,
    pub c: Vec<SquareFreeMonomial>,
    pub d: Vec<SquareFreeMonomial>,
}

impl DegreePartition {
    pub fn sizes(&self) -> PartitionSizes {
        PartitionSizes {
            degree: self.degree,
            a: self.a.len() as u64,
            b: self.b.len() as u64,
            c: self.c.len() as u64,
            d: self.d.len() as u64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartitionSizes {
    pub degree: usize,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    A,
    B,
    C,
    D,
}

/// Classifies every subset of `{1..n}` in one sweep.
struct Classifier {
    member: Vec<bool>,
    below_generator: Vec<bool>,
    generator: Vec<bool>,
}

impl Classifier {
    fn new(ideal: &MonomialIdeal) -> Self {
        let n = ideal.ambient();
        let size = 1usize << n;
        let mut generator = vec![false; size];
        for g in ideal.generators() {
            generator[g.bits() as usize] = true;
        }
        let gens = || ideal.generators().iter().map(|g| g.bits());
        Self {
            member: membership_table(n, gens()),
            below_generator: crate::ideal::down_closure_table(n, gens()),
            generator,
        }
    }

    #[inline]
    fn class(&self, mask: u32) -> Class {
        let i = mask as usize;
        match (self.member[i], self.generator[i], self.below_generator[i]) {
            (true, true, _) => Class::C,
            (true, false, _) => Class::D,
            (false, _, true) => Class::B,
            (false, _, false) => Class::A,
        }
    }
}

/// The partition of `M_d`. Empty sets when `d > n`.
pub fn degree_partition(ideal: &MonomialIdeal, d: usize) -> DegreePartition {
    let n = ideal.ambient();
    let classifier = Classifier::new(ideal);
    let mut out = DegreePartition { degree: d, a: vec![], b: vec![], c: vec![], d: vec![] };
    for mask in masks_of_degree(n, d) {
        let m = SquareFreeMonomial::from_bits_unchecked(n, mask);
        match classifier.class(mask) {
            Class::A => out.a.push(m),
            Class::B => out.b.push(m),
            Class::C => out.c.push(m),
            Class::D => out.d.push(m),
        }
    }
    out
}

/// Sizes of the partition for every `0 <= d <= n`.
pub fn partition_sizes(ideal: &MonomialIdeal) -> Vec<PartitionSizes> {
    let n = ideal.ambient();
    let classifier = Classifier::new(ideal);
    let mut sizes: Vec<PartitionSizes> = (0..=n)
        .map(|degree| PartitionSizes { degree, a: 0, b: 0, c: 0, d: 0 })
        .collect();
    for mask in 0u32..(1 << n) {
        let s = &mut sizes[mask.count_ones() as usize];
        match classifier.class(mask) {
            Class::A => s.a += 1,
            Class::B => s.b += 1,
            Class::C => s.c += 1,
            Class::D => s.d += 1,
        }
    }
    sizes
}

/// Which criterion [`is_f_ideal`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Compare the f-vectors of the two complexes.
    FVector,
    /// Compare `|A_d|` with `|C_d|` for every degree.
    Partition,
    /// Run both; disagreement is an error.
    Both,
}

impl Default for Method {
    fn default() -> Self {
        if cfg!(debug_assertions) {
            Method::Both
        } else {
            Method::Partition
        }
    }
}

fn by_fvector(ideal: &MonomialIdeal) -> Result<bool> {
    let facet = f_vector(&facet_complex(ideal)?);
    let nonface = f_vector(&nonface_complex(ideal));
    Ok(facet == nonface)
}

fn by_partition(ideal: &MonomialIdeal) -> bool {
    partition_sizes(ideal).iter().all(|s| s.a == s.c)
}

/// Whether `f(δ_F(I)) = f(δ_N(I))`. The zero and unit ideals are rejected.
pub fn is_f_ideal(ideal: &MonomialIdeal, method: Method) -> Result<bool> {
    ideal.require_proper_nonzero()?;
    match method {
        Method::FVector => by_fvector(ideal),
        Method::Partition => Ok(by_partition(ideal)),
        Method::Both => {
            let fvector = by_fvector(ideal)?;
            let partition = by_partition(ideal);
            if fvector != partition {
                return Err(Error::CriterionDisagreement { fvector, partition });
            }
            Ok(fvector)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Warning {
    /// `x_1...x_n ∈ G(I)`; such an ideal is never an f-ideal.
    FullMonomialGenerator,
    /// The two complexes live on different vertex sets.
    DistinctVertexSets { facet: Vec<usize>, nonface: Vec<usize> },
    /// The complexes have different dimensions, so the f-vectors differ in length.
    DimensionMismatch { facet: i64, nonface: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartitionFailure {
    pub degree: usize,
    pub a: u64,
    pub c: u64,
}

/// Everything needed to audit an f-ideal verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FIdealCertificate {
    pub is_f_ideal: bool,
    pub facet_fvector: FVector,
    pub nonface_fvector: FVector,
    pub partition: Vec<PartitionSizes>,
    pub first_failure: Option<PartitionFailure>,
    pub warnings: Vec<Warning>,
}

pub fn certify(ideal: &MonomialIdeal) -> Result<FIdealCertificate> {
    ideal.require_proper_nonzero()?;
    let facet = facet_complex(ideal)?;
    let nonface = nonface_complex(ideal);
    let facet_fvector = f_vector(&facet);
    let nonface_fvector = f_vector(&nonface);
    let partition = partition_sizes(ideal);
    let first_failure = partition
        .iter()
        .find(|s| s.a != s.c)
        .map(|s| PartitionFailure { degree: s.degree, a: s.a, c: s.c });

    let by_vectors = facet_fvector == nonface_fvector;
    let by_sizes = first_failure.is_none();
    if by_vectors != by_sizes {
        return Err(Error::CriterionDisagreement { fvector: by_vectors, partition: by_sizes });
    }

    let mut warnings = Vec::new();
    if ideal.has_full_generator() {
        warnings.push(Warning::FullMonomialGenerator);
    }
    if facet.vertices() != nonface.vertices() {
        warnings.push(Warning::DistinctVertexSets {
            facet: facet.vertices().vars().collect(),
            nonface: nonface.vertices().vars().collect(),
        });
    }
    let facet_dim = dimension(&facet)?;
    // nonface complex of a proper ideal always contains the empty face
    let nonface_dim = dimension(&nonface)?;
    if facet_dim != nonface_dim {
        warnings.push(Warning::DimensionMismatch { facet: facet_dim, nonface: nonface_dim });
    }

    Ok(FIdealCertificate {
        is_f_ideal: by_vectors,
        facet_fvector,
        nonface_fvector,
        partition,
        first_failure,
        warnings,
    })
}

/// Why a report could not be evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Inapplicable {
    NotAnFIdeal,
    Equigenerated,
    NotEquigeneratedInDegreeNMinusTwo,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "report", rename_all = "snake_case")]
pub enum Applicability<T> {
    Applicable(T),
    Inapplicable(Inapplicable),
}

impl<T> Applicability<T> {
    pub fn applicable(self) -> Option<T> {
        match self {
            Applicability::Applicable(t) => Some(t),
            Applicability::Inapplicable(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    /// The item's hypothesis does not apply (empty range, or not equigenerated).
    Vacuous,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn is_ok(self) -> bool {
        self != Outcome::Fail
    }
}

/// Five necessary conditions on the f-vector `f` of an f-ideal with generator degrees
/// in `[α, ω]`:
///
/// 1. `f_i = C(n, i+1)` for `i <= α-2`
/// 2. `f_{α-1} >= C(n, α)/2`
/// 3. `f_{ω-1} <= C(n, ω)/2`
/// 4. `f_{α-1} = C(n, α)/2` when `α = ω`
/// 5. both complexes have dimension `ω-1 <= n-2`
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NecessaryConditions {
    pub n: usize,
    pub alpha: usize,
    pub omega: usize,
    pub fvector: FVector,
    pub full_faces_below_alpha: Outcome,
    pub lower_half_at_alpha: Outcome,
    pub upper_half_at_omega: Outcome,
    pub equigenerated_half: Outcome,
    pub dimension: Outcome,
}

impl NecessaryConditions {
    pub fn items(&self) -> [Outcome; 5] {
        [
            self.full_faces_below_alpha,
            self.lower_half_at_alpha,
            self.upper_half_at_omega,
            self.equigenerated_half,
            self.dimension,
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.items().iter().all(|o| o.is_ok())
    }
}

pub fn necessary_conditions(ideal: &MonomialIdeal) -> Result<Applicability<NecessaryConditions>> {
    if !is_f_ideal(ideal, Method::default())? {
        return Ok(Applicability::Inapplicable(Inapplicable::NotAnFIdeal));
    }
    let n = ideal.ambient();
    let (alpha, omega) = degree_extremes(ideal)?;
    let facet = facet_complex(ideal)?;
    let nonface = nonface_complex(ideal);
    let f = f_vector(&facet);
    let big_n = n as u64;

    let full_faces_below_alpha = if alpha < 2 {
        Outcome::Vacuous
    } else {
        Outcome::from_bool(
            (0..=alpha as i64 - 2).all(|i| f.get(i) == binomial(big_n, (i + 1) as u64)),
        )
    };
    let f_alpha = f.get(alpha as i64 - 1);
    let f_omega = f.get(omega as i64 - 1);
    let lower_half_at_alpha = Outcome::from_bool(2 * f_alpha >= binomial(big_n, alpha as u64));
    let upper_half_at_omega = Outcome::from_bool(2 * f_omega <= binomial(big_n, omega as u64));
    let equigenerated_half = if alpha == omega {
        Outcome::from_bool(2 * f_alpha == binomial(big_n, alpha as u64))
    } else {
        Outcome::Vacuous
    };
    let expected_dim = omega as i64 - 1;
    let dims_ok = dimension(&facet)? == expected_dim
        && dimension(&nonface)? == expected_dim
        && expected_dim <= n as i64 - 2;

    Ok(Applicability::Applicable(NecessaryConditions {
        n,
        alpha,
        omega,
        fvector: f,
        full_faces_below_alpha,
        lower_half_at_alpha,
        upper_half_at_omega,
        equigenerated_half,
        dimension: Outcome::from_bool(dims_ok),
    }))
}

/// A hypothesis about the f-vector and whether its promised generator exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Implication {
    pub hypothesis_held: bool,
    /// `None` when the hypothesis failed, so nothing was promised.
    pub conclusion_verified: Option<bool>,
}

impl Implication {
    pub fn is_ok(&self) -> bool {
        self.conclusion_verified != Some(false)
    }
}

/// For a mixed-degree f-ideal:
///
/// * `f_{α-1} > C(n, α) - n + α` promises a generator of degree `α+1`
/// * `f_{ω-1} < ω` promises a generator of degree `ω-1`
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorImplications {
    pub alpha: usize,
    pub omega: usize,
    pub fvector: FVector,
    pub above_alpha: Implication,
    pub below_omega: Implication,
}

impl GeneratorImplications {
    pub fn is_ok(&self) -> bool {
        self.above_alpha.is_ok() && self.below_omega.is_ok()
    }
}

pub fn generator_degree_implications(
    ideal: &MonomialIdeal,
) -> Result<Applicability<GeneratorImplications>> {
    let (alpha, omega) = degree_extremes(ideal)?;
    if alpha == omega {
        return Ok(Applicability::Inapplicable(Inapplicable::Equigenerated));
    }
    if !is_f_ideal(ideal, Method::default())? {
        return Ok(Applicability::Inapplicable(Inapplicable::NotAnFIdeal));
    }
    let n = ideal.ambient() as i64;
    let f = f_vector(&facet_complex(ideal)?);
    let has_degree = |deg: usize| ideal.generators().iter().any(|g| g.degree() == deg);

    let threshold = binomial(n as u64, alpha as u64) as i64 - n + alpha as i64;
    let held = f.get(alpha as i64 - 1) as i64 > threshold;
    let above_alpha = Implication {
        hypothesis_held: held,
        conclusion_verified: held.then(|| has_degree(alpha + 1)),
    };

    let held = f.get(omega as i64 - 1) < omega as u64;
    let below_omega = Implication {
        hypothesis_held: held,
        conclusion_verified: held.then(|| has_degree(omega - 1)),
    };

    Ok(Applicability::Applicable(GeneratorImplications {
        alpha,
        omega,
        fvector: f,
        above_alpha,
        below_omega,
    }))
}

/// The three clauses for an ideal equigenerated in degree `n-2`:
/// `I` is an f-ideal, `Î` is an f-ideal, and `Î` is unmixed of height `n-2` with
/// `C(n,2)/2` generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeNMinusTwoEquivalence {
    pub is_f_ideal: bool,
    pub dual_is_f_ideal: bool,
    pub dual_unmixed_half: bool,
}

/// Evaluates all three clauses independently; any disagreement is an
/// [`Error::EquivalenceMismatch`].
pub fn equigenerated_n_minus_2_equivalence(
    ideal: &MonomialIdeal,
) -> Result<Applicability<DegreeNMinusTwoEquivalence>> {
    let n = ideal.ambient();
    if n < 3
        || ideal.is_zero()
        || !ideal.generators().iter().all(|g| g.degree() == n - 2)
    {
        return Ok(Applicability::Inapplicable(Inapplicable::NotEquigeneratedInDegreeNMinusTwo));
    }
    let first = is_f_ideal(ideal, Method::default())?;
    let dual = newton_dual(ideal)?;
    let second = is_f_ideal(&dual, Method::default())?;
    let primes = minimal_primes(&dual)?;
    let pairs = binomial(n as u64, 2);
    let third = primes.unmixed
        && primes.height == n - 2
        && pairs % 2 == 0
        && dual.num_generators() as u64 == pairs / 2;
    if first != second || second != third {
        return Err(Error::EquivalenceMismatch { first, second, third });
    }
    Ok(Applicability::Applicable(DegreeNMinusTwoEquivalence {
        is_f_ideal: first,
        dual_is_f_ideal: second,
        dual_unmixed_half: third,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, sets: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_index_sets(n, sets.iter().map(|s| s.iter().copied())).unwrap()
    }

    fn m(n: usize, vars: &[usize]) -> SquareFreeMonomial {
        SquareFreeMonomial::new(n, vars.iter().copied()).unwrap()
    }

    fn mixed() -> MonomialIdeal {
        ideal(5, &[&[1, 4], &[2, 5], &[1, 2, 3], &[3, 4, 5]])
    }

    /// Classification by scanning `G(I)` directly, one monomial at a time.
    fn classify_by_scan(i: &MonomialIdeal, m: &SquareFreeMonomial) -> char {
        let in_ideal = i.generators().iter().any(|g| g.divides(m).unwrap());
        let is_gen = i.generators().contains(m);
        let divides_gen = i.generators().iter().any(|g| m.divides(g).unwrap());
        match (in_ideal, is_gen, divides_gen) {
            (true, true, _) => 'C',
            (true, false, _) => 'D',
            (false, _, true) => 'B',
            _ => 'A',
        }
    }

    #[test]
    fn partition_of_mixed_in_degree_two() {
        let i = mixed();
        let p = degree_partition(&i, 2);
        for (set, label) in [(&p.a, 'A'), (&p.b, 'B'), (&p.c, 'C'), (&p.d, 'D')] {
            for x in set {
                assert_eq!(classify_by_scan(&i, x), label, "{x}");
            }
        }
        assert_eq!(p.a, vec![m(5, &[2, 4]), m(5, &[1, 5])]);
        assert_eq!((p.b.len(), p.c.len(), p.d.len()), (6, 2, 0));
    }

    #[test]
    fn partition_edge_degrees() {
        let i = mixed();
        let p = degree_partition(&i, 0);
        assert_eq!(p.sizes(), PartitionSizes { degree: 0, a: 0, b: 1, c: 0, d: 0 });
        let p = degree_partition(&i, 5);
        assert_eq!(p.sizes(), PartitionSizes { degree: 5, a: 0, b: 0, c: 0, d: 1 });
        assert_eq!(partition_sizes(&i)[2], degree_partition(&i, 2).sizes());
    }

    #[test]
    fn is_f_ideal_examples() {
        for method in [Method::FVector, Method::Partition, Method::Both] {
            assert!(is_f_ideal(&mixed(), method).unwrap());
            assert!(is_f_ideal(&ideal(5, &[&[1], &[2, 3], &[2, 4], &[3, 4]]), method).unwrap());
            assert!(!is_f_ideal(&ideal(3, &[&[1, 2]]), method).unwrap());
        }
        assert_eq!(is_f_ideal(&MonomialIdeal::zero(3).unwrap(), Method::Both), Err(Error::ZeroIdeal));
        assert_eq!(is_f_ideal(&MonomialIdeal::unit(3).unwrap(), Method::Both), Err(Error::UnitIdeal));
    }

    #[test]
    fn certify_examples() {
        let c = certify(&mixed()).unwrap();
        assert!(c.is_f_ideal);
        assert_eq!(c.facet_fvector.counts(), &[1, 5, 8, 2]);
        assert_eq!(c.nonface_fvector.counts(), &[1, 5, 8, 2]);
        assert_eq!(c.first_failure, None);
        assert!(c.warnings.is_empty());

        let c = certify(&ideal(3, &[&[1, 2]])).unwrap();
        assert!(!c.is_f_ideal);
        // M_1: x3 is in A while C_1 is empty, so degree 1 already fails
        assert_eq!(c.first_failure, Some(PartitionFailure { degree: 1, a: 1, c: 0 }));
        assert_eq!((c.partition[2].a, c.partition[2].c), (2, 1));
        assert!(c.warnings.contains(&Warning::DistinctVertexSets { facet: vec![1, 2], nonface: vec![1, 2, 3] }));

        let c = certify(&newton_dual(&mixed()).unwrap()).unwrap();
        assert!(c.is_f_ideal);
        assert_eq!(c.facet_fvector.counts(), &[1, 5, 8, 2]);
        assert_eq!(c.nonface_fvector.counts(), &[1, 5, 8, 2]);

        let c = certify(&ideal(5, &[&[1], &[2, 3], &[2, 4], &[3, 4]])).unwrap();
        assert!(c.is_f_ideal);
        assert_eq!(c.warnings.len(), 1);

        let c = certify(&ideal(3, &[&[1, 2, 3]])).unwrap();
        assert!(!c.is_f_ideal);
        assert!(c.warnings.contains(&Warning::FullMonomialGenerator));
        assert!(c.warnings.contains(&Warning::DimensionMismatch { facet: 2, nonface: 1 }));
    }

    #[test]
    fn necessary_conditions_examples() {
        let r = necessary_conditions(&mixed()).unwrap().applicable().unwrap();
        assert_eq!((r.alpha, r.omega), (2, 3));
        assert_eq!(r.items(), [Outcome::Pass, Outcome::Pass, Outcome::Pass, Outcome::Vacuous, Outcome::Pass]);

        for gens in [&[1usize][..], &[2]] {
            let i = ideal(2, &[gens]);
            let r = necessary_conditions(&i).unwrap().applicable().unwrap();
            assert_eq!(r.fvector.get(0), 1);
            assert_eq!(r.equigenerated_half, Outcome::Pass);
            assert_eq!(r.full_faces_below_alpha, Outcome::Vacuous);
            assert!(r.all_pass());
        }

        let path = ideal(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        let r = necessary_conditions(&path).unwrap().applicable().unwrap();
        assert_eq!(r.fvector.get(1), 3);
        assert!(r.all_pass());

        assert_eq!(
            necessary_conditions(&ideal(3, &[&[1, 2]])).unwrap(),
            Applicability::Inapplicable(Inapplicable::NotAnFIdeal)
        );
    }

    #[test]
    fn generator_implications_on_mixed() {
        let r = generator_degree_implications(&mixed()).unwrap().applicable().unwrap();
        assert_eq!(r.fvector.get(1), 8);
        assert_eq!(r.above_alpha, Implication { hypothesis_held: true, conclusion_verified: Some(true) });
        assert_eq!(r.fvector.get(2), 2);
        assert_eq!(r.below_omega, Implication { hypothesis_held: true, conclusion_verified: Some(true) });

        assert_eq!(
            generator_degree_implications(&ideal(4, &[&[1, 2], &[2, 3], &[3, 4]])).unwrap(),
            Applicability::Inapplicable(Inapplicable::Equigenerated)
        );
        assert_eq!(
            generator_degree_implications(&ideal(4, &[&[1], &[2, 3]])).unwrap(),
            Applicability::Inapplicable(Inapplicable::NotAnFIdeal)
        );
    }

    #[test]
    fn degree_n_minus_two_examples() {
        let path = ideal(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        let i = newton_dual(&path).unwrap();
        let r = equigenerated_n_minus_2_equivalence(&i).unwrap().applicable().unwrap();
        assert!(r.is_f_ideal && r.dual_is_f_ideal && r.dual_unmixed_half);

        let r = equigenerated_n_minus_2_equivalence(&ideal(4, &[&[1, 2]])).unwrap().applicable().unwrap();
        assert!(!r.is_f_ideal && !r.dual_is_f_ideal && !r.dual_unmixed_half);

        let r = equigenerated_n_minus_2_equivalence(&ideal(3, &[&[1]])).unwrap().applicable().unwrap();
        assert!(!r.is_f_ideal && !r.dual_is_f_ideal && !r.dual_unmixed_half);

        assert_eq!(
            equigenerated_n_minus_2_equivalence(&mixed()).unwrap(),
            Applicability::Inapplicable(Inapplicable::NotEquigeneratedInDegreeNMinusTwo)
        );
    }

    #[test]
    fn star_in_four_variables_breaks_the_unmixed_clause() {
        // the dual is a triangle on {2,3,4}: unmixed of height 2 with 3 generators,
        // yet x1 divides none of them and neither ideal is an f-ideal
        let star = ideal(4, &[&[1, 2], &[1, 3], &[1, 4]]);
        assert_eq!(
            equigenerated_n_minus_2_equivalence(&star),
            Err(Error::EquivalenceMismatch { first: false, second: false, third: true })
        );
    }

    #[test]
    fn default_method_follows_build_profile() {
        let expected = if cfg!(debug_assertions) { Method::Both } else { Method::Partition };
        assert_eq!(Method::default(), expected);
    }
}
