//! Closed-form eigenfunctions of two classically integrable quantum billiards —
//! the right-isosceles triangle and the equilateral triangle, both with side π
//! and Dirichlet walls — together with the algebra that organizes their spectra.
//!
//! Each eigenfunction is a short signed sum of plane waves on an integer
//! frequency lattice. Because the lattice is exact, a raising/lowering operator
//! acts on the representation by pure integer shifts: it maps the state
//! `(m, n)` to `(m + k·n·p, n)`, where `k` is 2 for the isosceles billiard and
//! 3 for the equilateral one. The states with fixed `n` therefore split into
//! equivalence classes labelled by `c = m mod k·n`, and every class is a tower
//! generated from its lowest member.
//!
//! The crate provides:
//!
//! * [`billiard`] — geometry: containment, boundary sampling, bounding boxes.
//! * [`state`] — validated eigenfunction labels and closed-form evaluation.
//! * [`grid`] — rasterized fields over the billiard's bounding box.
//! * [`planewave`] — the exact plane-wave representation and ladder shifts.
//! * [`classes`] — equivalence-class arithmetic: classify, lowest member, towers.
//! * [`nodal`] — sign grids, flood-fill nodal-domain counting, rendering.
//! * [`verify`] — numerical cross-checks: Helmholtz residuals, boundary
//!   residuals, ladder identities, orthogonality, and an aggregated suite.
//!
//! All evaluation is pure and deterministic; nothing here allocates beyond the
//! requested rasters.

pub mod billiard;
pub mod classes;
mod error;
pub mod grid;
pub mod nodal;
pub mod planewave;
pub mod state;
pub mod verify;

pub use billiard::{BilliardKind, Point};
pub use error::{Error, Result};
pub use grid::{FieldGrid, GridSpec};
pub use state::{EigenfunctionSpec, QuantumNumbers, SymmetryFamily};
