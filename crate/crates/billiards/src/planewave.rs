//! Exact plane-wave representation and the raising/lowering ladder.
//!
//! Every eigenfunction in this crate is a signed sum of unit-amplitude plane
//! waves whose wavevectors live on an integer lattice: term `(a, b)` stands
//! for `exp(i·(a·unit_x·x + b·unit_y·y))`, and the eigenfunction is half the
//! real or imaginary part of the signed sum. The isosceles lattice has
//! `unit_x = unit_y = 1` and four terms; the equilateral lattice has
//! `unit_x = 2/3`, `unit_y = 2/√3` and six terms.
//!
//! The ladder operator is diagonal in this representation: raising by one
//! step multiplies each term by a fixed phase, which on the lattice is the
//! *integer* shift `(shift_a, shift_b)` stored alongside the term. Applying
//! `p` steps sends `(m, n)` to `(m + k·n·p, n)` with `k = 2` (isosceles) or
//! `k = 3` (equilateral) — all in exact integer arithmetic, which is what
//! makes round trips and group composition exact rather than approximate.
//!
//! Each term's shift equals `k·n` times the derivative of its frequency pair
//! with respect to `m`; the two sine-family terms whose `b` depends on `m`
//! with opposite signs therefore carry opposite `shift_b`. (Ordering and
//! shift assignment are fixed by the requirement that the shifted sum equal
//! the representation of the raised label term-for-term.)

use crate::billiard::{BilliardKind, Point, SQRT_3};
use crate::error::Result;
use crate::state::{EigenfunctionSpec, SymmetryFamily};

/// Units of the integer frequency lattice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeBasis {
    pub unit_x: f64,
    pub unit_y: f64,
}

impl LatticeBasis {
    pub fn for_kind(kind: BilliardKind) -> Self {
        match kind {
            BilliardKind::RightIsosceles => LatticeBasis {
                unit_x: 1.0,
                unit_y: 1.0,
            },
            BilliardKind::Equilateral => LatticeBasis {
                unit_x: 2.0 / 3.0,
                unit_y: 2.0 / SQRT_3,
            },
        }
    }
}

/// How the complex sum collapses to the real eigenfunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    /// `ψ = Re(Σ)/2` — isosceles family and the equilateral sine family.
    HalfRe,
    /// `ψ = Im(Σ)/2` — the equilateral cosine family.
    HalfIm,
}

/// One signed plane wave `sign·exp(i·(a·unit_x·x + b·unit_y·y))` together
/// with its per-step ladder shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlaneWaveTerm {
    /// +1 or −1.
    pub sign: i8,
    pub a: i64,
    pub b: i64,
    /// Added to `(a, b)` once per raising step.
    pub shift_a: i64,
    pub shift_b: i64,
}

impl PlaneWaveTerm {
    fn new(sign: i8, a: i64, b: i64, shift_a: i64, shift_b: i64) -> Self {
        PlaneWaveTerm {
            sign,
            a,
            b,
            shift_a,
            shift_b,
        }
    }
}

/// The exact representation of one eigenfunction.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneWaveSum {
    kind: BilliardKind,
    family: SymmetryFamily,
    basis: LatticeBasis,
    reduction: Reduction,
    terms: Vec<PlaneWaveTerm>,
}

impl PlaneWaveSum {
    /// Build the representation of a validated state.
    pub fn for_state(spec: &EigenfunctionSpec) -> Self {
        let m = spec.m();
        let n = spec.n();
        let (reduction, terms) = match (spec.kind(), spec.family()) {
            (BilliardKind::RightIsosceles, _) => (
                Reduction::HalfRe,
                vec![
                    PlaneWaveTerm::new(1, m, -n, 2 * n, 0),
                    PlaneWaveTerm::new(-1, m, n, 2 * n, 0),
                    PlaneWaveTerm::new(-1, -n, m, 0, 2 * n),
                    PlaneWaveTerm::new(1, n, m, 0, 2 * n),
                ],
            ),
            (BilliardKind::Equilateral, SymmetryFamily::Cosine) => (
                Reduction::HalfIm,
                vec![
                    PlaneWaveTerm::new(1, 2 * m - n, n, 6 * n, 0),
                    PlaneWaveTerm::new(-1, 2 * m - n, -n, 6 * n, 0),
                    PlaneWaveTerm::new(-1, 2 * n - m, m, -3 * n, 3 * n),
                    PlaneWaveTerm::new(1, 2 * n - m, -m, -3 * n, -3 * n),
                    PlaneWaveTerm::new(-1, m + n, n - m, 3 * n, -3 * n),
                    PlaneWaveTerm::new(1, m + n, m - n, 3 * n, 3 * n),
                ],
            ),
            (BilliardKind::Equilateral, _) => (
                Reduction::HalfRe,
                vec![
                    PlaneWaveTerm::new(1, 2 * m - n, -n, 6 * n, 0),
                    PlaneWaveTerm::new(-1, 2 * m - n, n, 6 * n, 0),
                    PlaneWaveTerm::new(-1, 2 * n - m, -m, -3 * n, -3 * n),
                    PlaneWaveTerm::new(1, 2 * n - m, m, -3 * n, 3 * n),
                    PlaneWaveTerm::new(-1, m + n, n - m, 3 * n, -3 * n),
                    PlaneWaveTerm::new(1, m + n, m - n, 3 * n, 3 * n),
                ],
            ),
        };
        PlaneWaveSum {
            kind: spec.kind(),
            family: spec.family(),
            basis: LatticeBasis::for_kind(spec.kind()),
            reduction,
            terms,
        }
    }

    pub fn kind(&self) -> BilliardKind {
        self.kind
    }

    pub fn family(&self) -> SymmetryFamily {
        self.family
    }

    pub fn basis(&self) -> LatticeBasis {
        self.basis
    }

    pub fn reduction(&self) -> Reduction {
        self.reduction
    }

    pub fn terms(&self) -> &[PlaneWaveTerm] {
        &self.terms
    }

    /// Apply `p` ladder steps (negative `p` lowers). Pure integer shifts:
    /// `shifted(p).shifted(q) == shifted(p + q)` exactly, and `shifted(0)`
    /// is the identity.
    pub fn shifted(&self, p: i64) -> PlaneWaveSum {
        let terms = self
            .terms
            .iter()
            .map(|t| PlaneWaveTerm {
                a: t.a + p * t.shift_a,
                b: t.b + p * t.shift_b,
                ..*t
            })
            .collect();
        PlaneWaveSum {
            terms,
            ..self.clone()
        }
    }

    /// Collapse the complex sum at a point.
    ///
    /// This walks the exponentials directly and is deliberately a different
    /// code path from [`EigenfunctionSpec::eval`], so agreement between the
    /// two is a real identity check, not a tautology.
    pub fn reduce(&self, p: Point) -> f64 {
        let mut re = 0.0f64;
        let mut im = 0.0f64;
        for t in &self.terms {
            let theta = t.a as f64 * self.basis.unit_x * p.x + t.b as f64 * self.basis.unit_y * p.y;
            let s = t.sign as f64;
            re += s * theta.cos();
            im += s * theta.sin();
        }
        match self.reduction {
            Reduction::HalfRe => 0.5 * re,
            Reduction::HalfIm => 0.5 * im,
        }
    }

    /// Read the quantum numbers back off the (possibly shifted) term pattern
    /// and revalidate them.
    ///
    /// The first term carries `(m, −n)` for the isosceles family,
    /// `(2m − n, n)` for the cosine family, and `(2m − n, −n)` for the sine
    /// family, so the label is recoverable by integer arithmetic. Lowering
    /// past the bottom of a tower yields `m ≤ n` and reports
    /// `InvalidQuantumNumbers`; landing on the sine degeneracy reports
    /// `ZeroFunction`.
    pub fn canonical_state(&self) -> Result<EigenfunctionSpec> {
        let first = self.terms[0];
        let (m, n) = match (self.kind, self.family) {
            (BilliardKind::RightIsosceles, _) => (first.a, -first.b),
            (BilliardKind::Equilateral, SymmetryFamily::Cosine) => {
                debug_assert_eq!((first.a + first.b) % 2, 0);
                ((first.a + first.b) / 2, first.b)
            }
            (BilliardKind::Equilateral, _) => {
                debug_assert_eq!((first.a - first.b) % 2, 0);
                ((first.a - first.b) / 2, -first.b)
            }
        };
        EigenfunctionSpec::new(self.kind, self.family, m, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn spec(kind: BilliardKind, family: SymmetryFamily, m: i64, n: i64) -> EigenfunctionSpec {
        EigenfunctionSpec::new(kind, family, m, n).unwrap()
    }

    fn iso(m: i64, n: i64) -> EigenfunctionSpec {
        spec(BilliardKind::RightIsosceles, SymmetryFamily::Default, m, n)
    }

    #[test]
    fn isosceles_terms_match_the_four_exponentials() {
        let sum = PlaneWaveSum::for_state(&iso(2, 1));
        let got: Vec<(i8, i64, i64)> = sum.terms().iter().map(|t| (t.sign, t.a, t.b)).collect();
        assert_eq!(
            got,
            vec![(1, 2, -1), (-1, 2, 1), (-1, -1, 2), (1, 1, 2)],
            "±exp pattern for ψ_{{2,1}}"
        );
        assert_eq!(sum.reduction(), Reduction::HalfRe);
    }

    #[test]
    fn equilateral_cosine_terms_match_the_six_exponentials() {
        let sum = PlaneWaveSum::for_state(&spec(
            BilliardKind::Equilateral,
            SymmetryFamily::Cosine,
            2,
            1,
        ));
        let a: Vec<i64> = sum.terms().iter().map(|t| t.a).collect();
        let b: Vec<i64> = sum.terms().iter().map(|t| t.b).collect();
        assert_eq!(a, vec![3, 3, 0, 0, 3, 3]);
        assert_eq!(b, vec![1, -1, 2, -2, -1, 1]);
        assert_eq!(sum.reduction(), Reduction::HalfIm);
    }

    #[test]
    fn equilateral_terms_pair_under_b_negation_with_sign_flip() {
        // For both equilateral families the signed multiset is invariant
        // under (a, b, sign) → (a, −b, −sign); this is what makes the
        // half-Re/half-Im reductions collapse to real products of trig
        // factors.
        for family in [SymmetryFamily::Cosine, SymmetryFamily::Sine] {
            let sum = PlaneWaveSum::for_state(&spec(BilliardKind::Equilateral, family, 5, 2));
            let mut set: Vec<(i8, i64, i64)> =
                sum.terms().iter().map(|t| (t.sign, t.a, t.b)).collect();
            let mut negated: Vec<(i8, i64, i64)> =
                sum.terms().iter().map(|t| (-t.sign, t.a, -t.b)).collect();
            set.sort_unstable();
            negated.sort_unstable();
            assert_eq!(set, negated, "{family:?} family multiset not symmetric");
        }
    }

    #[test]
    fn reduce_vanishes_at_the_origin() {
        let sum = PlaneWaveSum::for_state(&iso(7, 4));
        assert_eq!(sum.reduce(Point::new(0.0, 0.0)), 0.0);
    }

    #[test]
    fn raising_seven_four_reproduces_fifteen_four_exactly() {
        let raised = PlaneWaveSum::for_state(&iso(7, 4)).shifted(1);
        let direct = PlaneWaveSum::for_state(&iso(15, 4));
        assert_eq!(raised.terms(), direct.terms());
    }

    #[test]
    fn shift_zero_is_the_identity() {
        let sum = PlaneWaveSum::for_state(&spec(
            BilliardKind::Equilateral,
            SymmetryFamily::Sine,
            5,
            2,
        ));
        assert_eq!(sum.shifted(0), sum);
    }

    #[test]
    fn canonical_state_reads_labels_back() {
        let s = iso(23, 4);
        let back = PlaneWaveSum::for_state(&s).canonical_state().unwrap();
        assert_eq!(back, s);

        // Lower (15,4) one step to (7,4).
        let lowered = PlaneWaveSum::for_state(&iso(15, 4)).shifted(-1);
        assert_eq!(lowered.canonical_state().unwrap(), iso(7, 4));
    }

    #[test]
    fn lowering_past_the_bottom_reports_invalid_labels() {
        // (7,4) − 8 = (−1,4): below the m > n floor.
        let sunk = PlaneWaveSum::for_state(&iso(7, 4)).shifted(-1);
        assert_eq!(
            sunk.canonical_state(),
            Err(Error::InvalidQuantumNumbers { m: -1, n: 4 })
        );
    }

    #[test]
    fn lowering_onto_the_sine_degeneracy_reports_zero_function() {
        // Sine (5,1) lowered once lands on m = 2n = 2.
        let s = spec(BilliardKind::Equilateral, SymmetryFamily::Sine, 5, 1);
        let lowered = PlaneWaveSum::for_state(&s).shifted(-1);
        assert_eq!(
            lowered.canonical_state(),
            Err(Error::ZeroFunction { m: 2, n: 1 })
        );
    }

    /// Strategy over valid specs across both billiards.
    fn any_spec() -> impl Strategy<Value = EigenfunctionSpec> {
        (0u8..3, 1i64..8, 1i64..14).prop_filter_map("degenerate", |(which, n, off)| {
            let (kind, family) = match which {
                0 => (BilliardKind::RightIsosceles, SymmetryFamily::Default),
                1 => (BilliardKind::Equilateral, SymmetryFamily::Cosine),
                _ => (BilliardKind::Equilateral, SymmetryFamily::Sine),
            };
            EigenfunctionSpec::new(kind, family, n + off, n).ok()
        })
    }

    proptest! {
        /// Ladder shifts compose exactly: T^p T^q = T^(p+q) on the lattice.
        #[test]
        fn shifts_compose_as_a_group(s in any_spec(), p in -3i64..4, q in -3i64..4) {
            let sum = PlaneWaveSum::for_state(&s);
            prop_assert_eq!(sum.shifted(p).shifted(q), sum.shifted(p + q));
        }

        /// Raise then lower returns the original term list bit for bit.
        #[test]
        fn round_trips_are_exact(s in any_spec(), p in 1i64..4) {
            let sum = PlaneWaveSum::for_state(&s);
            prop_assert_eq!(sum.shifted(p).shifted(-p), sum);
        }

        /// The representation reproduces the closed form pointwise. The two
        /// sides are independent code paths (complex sum vs trig products).
        #[test]
        fn reduction_matches_the_closed_form(
            s in any_spec(),
            x in 0.0f64..PI,
            y in 0.0f64..2.7,
        ) {
            let p = Point::new(x, y);
            let direct = s.eval(p);
            let reduced = PlaneWaveSum::for_state(&s).reduce(p);
            prop_assert!(
                (direct - reduced).abs() < 1e-12,
                "closed form {} vs plane-wave reduction {}",
                direct,
                reduced
            );
        }
    }
}
