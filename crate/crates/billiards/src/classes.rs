//! Equivalence classes of the spectrum under the ladder.
//!
//! Raising changes `m` by `k·n` and leaves `n` alone, so for fixed billiard,
//! family, and `n` the states split into classes labelled by
//! `c = m mod k·n`. Each class is a tower: a lowest member plus the states
//! reached from it by raising. Lowering stops at the bottom — below it the
//! labels violate `m > n` — and, in the sine family, one candidate per class
//! may be the `m = 2n` zero function, which is skipped when locating the
//! lowest member.

use crate::billiard::BilliardKind;
use crate::error::{Error, Result};
use crate::state::{EigenfunctionSpec, SymmetryFamily};

/// A spectral equivalence class: all states with this billiard, family, and
/// `n` whose `m` is congruent to `index` modulo `k·n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EquivalenceClass {
    pub kind: BilliardKind,
    pub family: SymmetryFamily,
    pub n: i64,
    /// Residue `c` in `[0, k·n)`.
    pub index: i64,
}

impl EquivalenceClass {
    /// The class modulus `k·n`.
    pub fn modulus(&self) -> i64 {
        self.kind.modulus_factor() * self.n
    }
}

/// The class a state belongs to: `c = m mod k·n`.
pub fn class_index(spec: &EigenfunctionSpec) -> EquivalenceClass {
    let modulus = spec.kind().modulus_factor() * spec.n();
    EquivalenceClass {
        kind: spec.kind(),
        family: spec.family(),
        n: spec.n(),
        index: spec.m().rem_euclid(modulus),
    }
}

/// The lowest state of a class: the smallest `m > n` with
/// `m ≡ index (mod k·n)`, skipping the sine-family zero function.
pub fn lowest_in_class(
    kind: BilliardKind,
    family: SymmetryFamily,
    n: i64,
    index: i64,
) -> Result<EigenfunctionSpec> {
    let modulus = kind.modulus_factor() * n.max(0);
    if index < 0 || index >= modulus {
        return Err(Error::ClassIndexOutOfRange { index, modulus });
    }
    // Smallest candidate above the floor, then step by the modulus. At most
    // one candidate per class is degenerate, so two periods always suffice;
    // the bound exists so malformed arithmetic loops loudly instead of
    // silently.
    let first = n + 1 + (index - n - 1).rem_euclid(modulus);
    let mut m = first;
    while m <= first + 4 * modulus {
        match EigenfunctionSpec::new(kind, family, m, n) {
            Ok(spec) => return Ok(spec),
            Err(Error::ZeroFunction { .. }) => m += modulus,
            Err(other) => return Err(other),
        }
    }
    Err(Error::EmptyClass { n, index, modulus })
}

/// The first `count` members of a class in ascending energy: the lowest
/// member followed by repeated raising (`m → m + k·n`).
pub fn tower(
    kind: BilliardKind,
    family: SymmetryFamily,
    n: i64,
    index: i64,
    count: usize,
) -> Result<Vec<EigenfunctionSpec>> {
    let lowest = lowest_in_class(kind, family, n, index)?;
    let modulus = kind.modulus_factor() * n;
    let mut members = Vec::with_capacity(count);
    for j in 0..count as i64 {
        members.push(EigenfunctionSpec::new(
            kind,
            family,
            lowest.m() + j * modulus,
            n,
        )?);
    }
    Ok(members)
}

/// Move `p` ladder steps (negative `p` lowers): `m → m + k·n·p`.
///
/// This is straight modular arithmetic on labels; the plane-wave route
/// (`shift`, then `canonical_state`) must agree with it, and the two are
/// checked against each other in the tests.
pub fn step(spec: &EigenfunctionSpec, p: i64) -> Result<EigenfunctionSpec> {
    let modulus = spec.kind().modulus_factor() * spec.n();
    EigenfunctionSpec::new(
        spec.kind(),
        spec.family(),
        spec.m() + modulus * p,
        spec.n(),
    )
}
