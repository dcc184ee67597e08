use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient variable counts differ ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },

    #[error("variable index {index} is outside 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("ambient variable count {n} is outside the supported range 1..={max}")]
    UnsupportedAmbient { n: usize, max: usize },

    #[error("the unit monomial is not allowed as a generator")]
    UnitGenerator,

    #[error("operation is undefined on the zero ideal")]
    ZeroIdeal,

    #[error("operation is undefined on the unit ideal")]
    UnitIdeal,

    #[error("complex has vertices outside the ambient vertex set")]
    VerticesOutsideAmbient,

    #[error("operation is undefined on the void complex")]
    VoidComplex,

    #[error("exponent vectors have length {found}, expected {expected}")]
    ExponentLength { expected: usize, found: usize },

    #[error("beta bound {bound} at x{coordinate} is below generator exponent {exponent}")]
    InvalidBeta { coordinate: usize, bound: u32, exponent: u32 },

    #[error("generator is not square-free")]
    NotSquareFree,

    #[error("index {j} is outside -1..={max}")]
    IndexOutOfRange { j: i64, max: i64 },

    #[error("Macaulay expansion needs a >= 1 and j >= 1 (got a = {a}, j = {j})")]
    InvalidMacaulayArgument { a: u64, j: u32 },

    #[error("entry {index} of the complement would be negative")]
    NotComplementable { index: usize },

    #[error("malformed f-vector: {0}")]
    MalformedFVector(String),

    #[error("existence oracle supports at most {max} vertices (got {vertices})")]
    OracleUnavailable { vertices: u64, max: u64 },

    #[error("f-vector criterion says {fvector} but partition criterion says {partition}")]
    CriterionDisagreement { fvector: bool, partition: bool },

    #[error("degree n-2 equivalence failed: (i) {first}, (ii) {second}, (iii) {third}")]
    EquivalenceMismatch { first: bool, second: bool, third: bool },

    #[error("census parameters out of range: n = {n}, d = {d}")]
    CensusOutOfRange { n: usize, d: usize },
}
