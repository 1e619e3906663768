use thiserror::Error;

/// Errors raised by the exact kernel and the algebroid layers.
///
/// Axiom and morphism *checkers* never return errors for a failed identity —
/// a nonzero difference is a FAIL report entry, not an `Err`. Errors here are
/// contract violations: bad input shapes, undeclared localizations, singular
/// matrices, and the like.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("denominator `{denominator}` is not supported by the declared denominator generators")]
    MembershipViolation { denominator: String },

    #[error("syntax error at byte {position}: {message}")]
    SyntaxError { position: usize, message: String },

    #[error("unknown variable `{name}` at byte {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("exponent out of range at byte {position}")]
    ExponentOverflow { position: usize },

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("determinant `{determinant}` is not a unit of the algebra")]
    UnitViolation { determinant: String },

    #[error("form degree would exceed 4")]
    DegreeOverflow,

    #[error("cannot contract a 0-form")]
    DegreeUnderflow,

    #[error("expected a form of degree {expected}, got degree {got}")]
    WrongDegree { expected: usize, got: usize },

    #[error("values live over different ambient algebras")]
    AmbientMismatch,

    #[error("3-form twist is not closed: d(twist) = {witness}")]
    TwistNotClosed { witness: String },

    #[error("invalid basis: {0}")]
    BasisInvalid(String),

    #[error("pairings disagree on the coordinate basis: {witness}")]
    PairingMismatch { witness: String },

    #[error("pairing functional is not A-linear in the probe slot: {witness}")]
    LinearityViolation { witness: String },

    #[error("morphism endpoints do not match: {0}")]
    EndpointMismatch(String),

    #[error("operation requires a 1-variable algebra, got {nvars} variables")]
    NotACurve { nvars: usize },

    #[error("transition data violates the cocycle condition on overlap {overlap}: {witness}")]
    CocycleViolation { overlap: String, witness: String },

    #[error("per-chart bases are incompatible: {0}")]
    BasesIncompatible(String),

    #[error("invalid descriptor: {0}")]
    Descriptor(String),
}
