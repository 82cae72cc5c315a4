use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("malformed rational {0:?} (expected p, -p or p/q with q > 0)")]
    MalformedRational(String),
    #[error("malformed Gaussian rational {0:?} (expected a, bi or a+bi)")]
    MalformedGaussian(String),
}

/// Errors from reading or constructing an arrangement. Line numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("line {line}: malformed rational {token:?}")]
    MalformedRational { line: usize, token: String },
    #[error("line {line}: expected `normal | offset`")]
    MissingSeparator { line: usize },
    #[error("line {line}: zero normal vector")]
    ZeroNormal { line: usize },
    #[error("line {line}: duplicate hyperplane (same as line {first})")]
    DuplicateHyperplane { line: usize, first: usize },
    #[error("line {line}: expected {expected} normal coefficients, found {found}")]
    DimensionMismatch { line: usize, expected: usize, found: usize },
    #[error("line {line}: expected exactly one offset")]
    BadOffset { line: usize },
    #[error("no hyperplanes found")]
    Empty,
    #[error("ambient dimension must be positive")]
    ZeroDimension,
    #[error("{name} arrangement needs n >= {min}, got {n}")]
    TooSmall { name: &'static str, n: usize, min: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArnoldError {
    #[error("generator A[{i},{j}] is not valid for P_{n} (need 1 <= j < i <= n)")]
    BadGenerator { n: usize, i: usize, j: usize },
    #[error("monomial is not admissible: first indices must strictly increase")]
    Inadmissible,
    #[error("mismatched operands: {0}")]
    Mismatch(&'static str),
    #[error("class is not homogeneous")]
    Inhomogeneous,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharClassError {
    #[error("line {line}: expected 0/1 entries, found {token:?}")]
    BadEntry { line: usize, token: String },
    #[error("line {line}: expected {expected} columns, found {found}")]
    RaggedRow { line: usize, expected: usize, found: usize },
    #[error("rank {n} does not match the abelianization of P_{strands} (rank {expected})")]
    StrandMismatch { strands: usize, n: usize, expected: usize },
    #[error("expected a degree {expected} class, got degree {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("class lives over P_{found}, expected P_{expected}")]
    WrongStrands { expected: usize, found: usize },
    #[error("expected a class over F2")]
    WrongRing,
    #[error("summands have different ranks ({0} vs {1})")]
    RankMismatch(usize, usize),
    #[error(transparent)]
    Arnold(#[from] ArnoldError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BurauError {
    #[error("generator s{k} out of range for B_{n}")]
    GeneratorOutOfRange { n: usize, k: usize },
    #[error("braid groups need n >= 2, got {0}")]
    TooFewStrands(usize),
    #[error("malformed braid letter {0:?} (expected s<k> or s<k>^-1)")]
    BadLetter(String),
    #[error("cannot specialize at t = 0")]
    ZeroSpecialization,
    #[error("specialization at t = 1 is not a permutation matrix")]
    NotPermutation,
    #[error("points {0} and {1} coincide")]
    RepeatedPoint(usize, usize),
    #[error("malformed permutation: {0}")]
    BadPermutation(String),
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeisenbergError {
    #[error("triple (i={i}, t={t}, j={j}) must satisfy 1 <= j < t < i <= {n}")]
    BadTriple { n: usize, i: usize, t: usize, j: usize },
    #[error("need n >= 3 strands for a triple, got {0}")]
    TooFewStrands(usize),
}
