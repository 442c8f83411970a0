use crate::family::{Element, SetMask};
use thiserror::Error;

/// Errors shared by the whole crate. Contract violations carry enough
/// structure to be replayed against the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element label {label} outside the supported range 1..=64")]
    LabelOutOfRange { label: u64 },

    #[error("{what} exceeds the size guard ({got} > {limit})")]
    SizeGuard {
        what: &'static str,
        limit: u64,
        got: u64,
    },

    #[error("family is not union-closed: {a} ∪ {b} is missing")]
    NotUnionClosed { a: SetMask, b: SetMask },

    #[error("family is not a supratopology: the empty set is missing")]
    MissingEmptySet,

    #[error("point {point} is not in the universe")]
    PointNotInUniverse { point: Element },

    #[error("set {set} is not contained in the universe")]
    SetOutsideUniverse { set: SetMask },

    #[error("family is not normalized: {reason}")]
    NotNormalized { reason: &'static str },

    #[error("the degenerate families are excluded from {what}")]
    DegenerateFamily { what: &'static str },

    #[error("family is not independent: element {element} depends on {on}")]
    NotIndependent { element: Element, on: SetMask },

    #[error("{set} is not a member of the family")]
    SetNotInFamily { set: SetMask },

    #[error("{set} is not minimal: it strictly contains the member {smaller}")]
    NotMinimal { set: SetMask, smaller: SetMask },

    #[error("indexed family is not separating: items for {first} and {second} coincide")]
    DuplicateTranspose { first: Element, second: Element },

    #[error("cannot transpose an empty indexed family")]
    EmptyIndexedFamily,

    #[error("universe is not 1..={expected}; relabel the family first")]
    UniverseNotCompact { expected: u32 },

    #[error("indexing does not list exactly the non-empty members of the family")]
    IndexingMismatch,

    #[error("requested depth {depth} exceeds the {available} reductions available")]
    DepthExceeded { depth: usize, available: usize },

    #[error("relabeling is not a bijection on the universe")]
    InvalidRelabeling,

    #[error(
        "a quotient family has no half-frequency element; this falsifies the frequency conjecture"
    )]
    QuotientWithoutHalfFrequency { quotient: crate::family::SetFamily },
}

pub type Result<T> = std::result::Result<T, Error>;
