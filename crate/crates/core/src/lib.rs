//! Square-free monomial ideals and their facet and Stanley-Reisner complexes.
//!
//! The crate decides whether an ideal is an f-ideal (its facet complex and non-face
//! complex share an f-vector), computes Newton complementary duals, checks candidate
//! f-vectors against four equivalent Kruskal-Katona criteria, and enumerates censuses
//! of f-ideals on few variables.

pub mod census;
pub mod combinatorics;
pub mod complex;
pub mod duality;
pub mod error;
pub mod fideal;
pub mod ideal;
pub mod kruskal_katona;
pub mod lattice;
pub mod monomial;

pub use census::{
    enumerate_all_fideals, enumerate_v, orbit_count, sample_fideals, search_degree_gap,
    verify_duality_pairing, CensusConfig, CensusRecord, DegreeSpec, PairingReport, Witness,
};
pub use complex::{
    alexander_dual, dimension, f_vector, facet_complex, nonface_complex, nonface_ideal, FVector,
    SimplicialComplex,
};
pub use duality::{
    dual_divisor_count, generalized_newton_dual, newton_dual, newton_dual_with, BetaVector,
    ExponentIdeal,
};
pub use error::{Error, Result};
pub use fideal::{
    certify, degree_partition, equigenerated_n_minus_2_equivalence, generator_degree_implications,
    is_f_ideal, necessary_conditions, partition_sizes, Applicability, DegreePartition,
    FIdealCertificate, Method, Outcome, PartitionSizes,
};
pub use ideal::{contains, degree_extremes, minimal_primes, IdealOptions, MinimalPrimes, MonomialIdeal};
pub use kruskal_katona::{
    complement_fvector, exists_complex_oracle, kk_valid, kk_valid_dual, macaulay_bound,
    macaulay_expansion, CandidateFVector, ComplementVector, MacaulayExpansion,
};
pub use monomial::{
    divides, minimalize, monomials_of_degree, ExponentMonomial, SquareFreeMonomial, MAX_VARS,
};
