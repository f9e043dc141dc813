use thiserror::Error;

/// Errors surfaced by the exact pipeline.
///
/// Most of these signal that an input fails a structural precondition
/// (singular exponent matrix, charges outside the open unit interval, a
/// degenerate restriction) rather than an internal fault; they are part of
/// the public contract and are matched on by the CLI.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,

    #[error("charge q_{index} = {value} lies outside (0,1)")]
    ChargeOutOfRange { index: usize, value: String },

    #[error("polynomial is not a sum of power/cycle/tail atoms: {reason}")]
    NotInvertibleType { reason: String },

    #[error("Milnor number formula gives the non-integer {value}")]
    NonIntegerMilnor { value: String },

    #[error("restriction to {{{indices}}} is degenerate: {reason}")]
    DegenerateRestriction { indices: String, reason: String },

    #[error("invariant element has non-integral degree {value} although the exponential grading element lies in the group")]
    NonIntegralDegree { value: String },

    #[error("group does not contain the exponential grading element")]
    NotAAdmissible,

    #[error("charges do not sum to one")]
    NotCalabiYau,

    #[error("top-class relation between sector rings is not scalar: {reason}")]
    NonScalarRelation { reason: String },

    #[error("moduli of genus {genus} curves with {markings} markings is unstable")]
    UnstableCurve { genus: u32, markings: usize },

    #[error("input is not concave: line bundle {index} has degree {degree} > -1")]
    NotConcave { index: usize, degree: String },

    #[error("degeneration forces a fully ramified (zero-multiplicity) node; rerun with the zero-multiplicity boundary convention enabled")]
    BroadNodeEncountered,

    #[error("element does not belong to the symmetry group of the polynomial")]
    NotASymmetry,

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
