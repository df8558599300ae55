use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("hyperplane {0} has a zero normal vector")]
    ZeroNormal(usize),
    #[error("hyperplanes {0} and {1} coincide")]
    DuplicateHyperplane(usize, usize),
    #[error("multiplicity list has length {found}, arrangement has {expected} hyperplanes")]
    MultiplicityLength { expected: usize, found: usize },
    #[error("the arrangement is not central")]
    NotCentral,
    #[error("hyperplane index {index} out of range (arrangement has {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("index set {0:?} is not a flat of the arrangement")]
    NotAFlat(Vec<usize>),
    #[error("expected rank {expected}, found rank {found}")]
    WrongRank { expected: usize, found: usize },
    #[error("arrangement is not locally A2: a codimension two flat contains {0} hyperplanes")]
    NotLocallyA2(usize),
    #[error("the defining forms are not a positive system: triple {0:?} has no sum relation")]
    NotPositiveSystem([usize; 3]),
    #[error("size guard exceeded: {0}")]
    TooLarge(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported root system {0}")]
    UnsupportedRootSystem(String),
    #[error("zero polynomial has no finite root multiset")]
    ZeroPolynomial,
}
