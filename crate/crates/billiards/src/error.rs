use crate::billiard::BilliardKind;
use crate::state::SymmetryFamily;
use thiserror::Error;

/// Everything that can go wrong when constructing or transforming states.
///
/// Evaluation itself never fails: once a spec exists it can be evaluated
/// anywhere in the plane. Errors arise only from invalid labels, degenerate
/// states, or a verification probe that cannot be placed.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Quantum numbers must satisfy `m > n >= 1`; raising and lowering keeps
    /// the inequality or reports this. Equal `m = n` makes both closed forms
    /// vanish identically, so it is rejected rather than treated as a state.
    #[error("invalid quantum numbers (m, n) = ({m}, {n}): require m > n >= 1")]
    InvalidQuantumNumbers { m: i64, n: i64 },

    /// The sine family of the equilateral billiard degenerates to the zero
    /// function at `m = 2n`; the label does not name an eigenfunction.
    #[error("sine-family state (m, n) = ({m}, {n}) is identically zero (m = 2n)")]
    ZeroFunction { m: i64, n: i64 },

    /// The symmetry family does not belong to this billiard: the isosceles
    /// billiard has the single antisymmetrized family, the equilateral one
    /// has the cosine and sine families.
    #[error("family {family:?} is not defined for the {kind:?} billiard")]
    FamilyMismatch {
        kind: BilliardKind,
        family: SymmetryFamily,
    },

    /// A class index outside `[0, k·n)` labels no equivalence class.
    #[error("class index {index} is outside [0, {modulus})")]
    ClassIndexOutOfRange { index: i64, modulus: i64 },

    /// No valid state exists in the class within the scanned range. With
    /// modulus factors 2 and 3 at most one candidate per class is degenerate,
    /// so this is unreachable for well-formed inputs; it is reported rather
    /// than silently looping.
    #[error("no valid state with m = {index} (mod {modulus}) above n = {n}")]
    EmptyClass { n: i64, index: i64, modulus: i64 },

    /// The five-point stencil with step `h` leaves no admissible interior
    /// sample point (every candidate has an arm ending outside the billiard,
    /// or sits on a node).
    #[error("stencil step h = {h} leaves no admissible interior points")]
    StencilExitsDomain { h: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
