use thiserror::Error;

use crate::diffpoly::DerivVar;

/// Failures raised by the kernel.
///
/// Variants split into two families: malformed input (see
/// [`Error::is_input_error`]) and violated mathematical preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {position}: expected {expected}")]
    Syntax { position: usize, expected: String },
    #[error("unknown indeterminate `{0}`")]
    UnknownIndeterminate(String),
    #[error("exponent or derivative order out of range at offset {0}")]
    ExponentOutOfRange(usize),
    #[error("invalid indeterminate declaration: {0}")]
    InvalidContext(String),
    #[error("malformed document: {0}")]
    Document(String),

    #[error("no value assigned to {0:?}")]
    MissingAssignment(DerivVar),
    #[error("substitution image mentions the substituted indeterminate")]
    RecursiveSubstitution,
    #[error("zero polynomial has no rank")]
    ZeroPolynomial,
    #[error("polynomial is free of the main indeterminate")]
    ConstantPolynomial,
    #[error("divisor is free of the main indeterminate")]
    ConstantDivisor,
    #[error("resultant argument is zero")]
    ZeroArgument,
    #[error("resultant arguments are taken in different variables")]
    LeaderMismatch,
    #[error("witness target is zero")]
    ZeroTarget,
    #[error("target reduces into the differential ideal of the minimal polynomial")]
    ReducesIntoIdeal,
    #[error("discriminant vanishes; minimal polynomial has a repeated factor in its leader")]
    VanishingDiscriminant,
    #[error("resultant vanishes; minimal polynomial is not irreducible")]
    VanishingResultant,
}

impl Error {
    /// True for errors caused by unparsable or malformed input, as opposed to
    /// mathematical precondition violations.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownIndeterminate(_)
                | Error::ExponentOutOfRange(_)
                | Error::InvalidContext(_)
                | Error::Document(_)
                | Error::MissingAssignment(_)
        )
    }

    /// Stable kebab-case tag, used as a machine-readable prefix by the CLI.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax-error",
            Error::UnknownIndeterminate(_) => "unknown-indeterminate",
            Error::ExponentOutOfRange(_) => "exponent-out-of-range",
            Error::InvalidContext(_) => "invalid-context",
            Error::Document(_) => "malformed-document",
            Error::MissingAssignment(_) => "missing-assignment",
            Error::RecursiveSubstitution => "recursive-substitution",
            Error::ZeroPolynomial => "zero-polynomial",
            Error::ConstantPolynomial => "constant-polynomial",
            Error::ConstantDivisor => "constant-divisor",
            Error::ZeroArgument => "zero-argument",
            Error::LeaderMismatch => "leader-mismatch",
            Error::ZeroTarget => "zero-target",
            Error::ReducesIntoIdeal => "reduces-into-ideal",
            Error::VanishingDiscriminant => "vanishing-discriminant",
            Error::VanishingResultant => "vanishing-resultant",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
