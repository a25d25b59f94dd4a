//! Validated eigenfunction labels and their closed-form evaluation.
//!
//! A state is labelled by a billiard, a symmetry family, and a pair of
//! quantum numbers `m > n ≥ 1`. The closed forms are short antisymmetrized
//! products of sines and cosines; no normalization constant is applied, so
//! amplitudes are those of the raw expressions.

use crate::billiard::{BilliardKind, Point, SQRT_3};
use crate::error::{Error, Result};
use crate::grid::{FieldGrid, GridSpec};

/// Symmetry family of the eigenfunction.
///
/// The isosceles billiard has a single (antisymmetrized) family, named
/// `Default`. The equilateral billiard splits into a `Cosine` family (even
/// under the `x → π − x` mirror when `m + n ≡ 0 (mod 3)`) and a `Sine`
/// family (odd under the same condition). Cosine and sine states with equal
/// labels are distinct states and are never identified with each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryFamily {
    Default,
    Cosine,
    Sine,
}

/// The ordered pair `m > n ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    pub m: i64,
    pub n: i64,
}

/// A validated eigenfunction label with its eigenvalue.
///
/// Construction via [`EigenfunctionSpec::new`] enforces `m > n ≥ 1`, the
/// billiard/family pairing, and rejects the sine-family degeneracy `m = 2n`
/// (whose closed form is identically zero). The energy is fixed at
/// construction: `m² + n²` for the isosceles billiard and
/// `(16/9)·(m² + n² − m·n)` for the equilateral one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenfunctionSpec {
    kind: BilliardKind,
    family: SymmetryFamily,
    qn: QuantumNumbers,
    energy: f64,
}

impl EigenfunctionSpec {
    /// Validate a label and fix its energy.
    pub fn new(kind: BilliardKind, family: SymmetryFamily, m: i64, n: i64) -> Result<Self> {
        if n < 1 || m <= n {
            return Err(Error::InvalidQuantumNumbers { m, n });
        }
        match (kind, family) {
            (BilliardKind::RightIsosceles, SymmetryFamily::Default) => {}
            (BilliardKind::Equilateral, SymmetryFamily::Cosine)
            | (BilliardKind::Equilateral, SymmetryFamily::Sine) => {}
            _ => return Err(Error::FamilyMismatch { kind, family }),
        }
        if kind == BilliardKind::Equilateral && family == SymmetryFamily::Sine && m == 2 * n {
            return Err(Error::ZeroFunction { m, n });
        }
        let energy = match kind {
            BilliardKind::RightIsosceles => (m * m + n * n) as f64,
            BilliardKind::Equilateral => 16.0 * ((m * m + n * n - m * n) as f64) / 9.0,
        };
        Ok(EigenfunctionSpec {
            kind,
            family,
            qn: QuantumNumbers { m, n },
            energy,
        })
    }

    pub fn kind(&self) -> BilliardKind {
        self.kind
    }

    pub fn family(&self) -> SymmetryFamily {
        self.family
    }

    pub fn qn(&self) -> QuantumNumbers {
        self.qn
    }

    pub fn m(&self) -> i64 {
        self.qn.m
    }

    pub fn n(&self) -> i64 {
        self.qn.n
    }

    /// The Dirichlet eigenvalue `E` with `−∇²ψ = E·ψ`.
    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// Evaluate the closed form at a point. Defined on the whole plane; the
    /// expression vanishes on the billiard's boundary lines.
    pub fn eval(&self, p: Point) -> f64 {
        let m = self.qn.m as f64;
        let n = self.qn.n as f64;
        match (self.kind, self.family) {
            (BilliardKind::RightIsosceles, _) => iso_product(m, n, p.x, p.y),
            (BilliardKind::Equilateral, SymmetryFamily::Cosine) => {
                equilateral_cosine_product(m, n, p.x, p.y)
            }
            (BilliardKind::Equilateral, _) => equilateral_sine_product(m, n, p.x, p.y),
        }
    }

    /// Rasterize the eigenfunction over the billiard's bounding box.
    ///
    /// Samples sit at cell centers. Cells whose center fails strict
    /// containment (after the grid's inset margin) are masked out and carry
    /// the value 0. Unmasked values are produced by the same code path as
    /// [`eval`](EigenfunctionSpec::eval), bit for bit.
    pub fn eval_grid(&self, grid: &GridSpec) -> FieldGrid {
        let res = grid.resolution;
        let (lo, hi) = self.kind.bounding_box();
        let dx = (hi.x - lo.x) / res as f64;
        let dy = (hi.y - lo.y) / res as f64;
        let margin = grid.inset * self.kind.shortest_side();
        let mut values = vec![0.0f64; res * res];
        let mut mask = vec![false; res * res];
        for row in 0..res {
            let y = lo.y + (row as f64 + 0.5) * dy;
            for col in 0..res {
                let x = lo.x + (col as f64 + 0.5) * dx;
                let p = Point::new(x, y);
                let inside = self.kind.contains(p)
                    && (grid.inset == 0.0 || self.kind.boundary_distance(p) >= margin);
                if inside {
                    let i = row * res + col;
                    values[i] = self.eval(p);
                    mask[i] = true;
                }
            }
        }
        FieldGrid::new(*grid, (lo, hi), values, mask)
    }
}

/// Isosceles closed form: `sin(m·x)·sin(n·y) − sin(n·x)·sin(m·y)`.
pub(crate) fn iso_product(m: f64, n: f64, x: f64, y: f64) -> f64 {
    (m * x).sin() * (n * y).sin() - (n * x).sin() * (m * y).sin()
}

/// Equilateral cosine-family closed form:
/// `cos((2m−n)·2x/3)·sin(n·2y/√3) − cos((2n−m)·2x/3)·sin(m·2y/√3)
///  + cos((m+n)·2x/3)·sin((m−n)·2y/√3)`.
pub(crate) fn equilateral_cosine_product(m: f64, n: f64, x: f64, y: f64) -> f64 {
    let u = 2.0 * x / 3.0;
    let v = 2.0 * y / SQRT_3;
    ((2.0 * m - n) * u).cos() * (n * v).sin() - ((2.0 * n - m) * u).cos() * (m * v).sin()
        + ((m + n) * u).cos() * ((m - n) * v).sin()
}

/// Equilateral sine-family closed form:
/// `sin((2m−n)·2x/3)·sin(n·2y/√3) − sin((2n−m)·2x/3)·sin(m·2y/√3)
///  − sin((m+n)·2x/3)·sin((m−n)·2y/√3)`.
pub(crate) fn equilateral_sine_product(m: f64, n: f64, x: f64, y: f64) -> f64 {
    let u = 2.0 * x / 3.0;
    let v = 2.0 * y / SQRT_3;
    ((2.0 * m - n) * u).sin() * (n * v).sin() - ((2.0 * n - m) * u).sin() * (m * v).sin()
        - ((m + n) * u).sin() * ((m - n) * v).sin()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn iso(m: i64, n: i64) -> EigenfunctionSpec {
        EigenfunctionSpec::new(BilliardKind::RightIsosceles, SymmetryFamily::Default, m, n)
            .unwrap()
    }

    #[test]
    fn construction_validates_labels() {
        assert!(iso(7, 4).energy() == 65.0);
        assert_eq!(
            EigenfunctionSpec::new(BilliardKind::RightIsosceles, SymmetryFamily::Default, 1, 1),
            Err(Error::InvalidQuantumNumbers { m: 1, n: 1 })
        );
        assert_eq!(
            EigenfunctionSpec::new(BilliardKind::RightIsosceles, SymmetryFamily::Default, 3, 5),
            Err(Error::InvalidQuantumNumbers { m: 3, n: 5 })
        );
        assert_eq!(
            EigenfunctionSpec::new(BilliardKind::Equilateral, SymmetryFamily::Sine, 4, 2),
            Err(Error::ZeroFunction { m: 4, n: 2 })
        );
        assert_eq!(
            EigenfunctionSpec::new(BilliardKind::RightIsosceles, SymmetryFamily::Cosine, 3, 1),
            Err(Error::FamilyMismatch {
                kind: BilliardKind::RightIsosceles,
                family: SymmetryFamily::Cosine,
            })
        );
        assert_eq!(
            EigenfunctionSpec::new(BilliardKind::Equilateral, SymmetryFamily::Default, 3, 1),
            Err(Error::FamilyMismatch {
                kind: BilliardKind::Equilateral,
                family: SymmetryFamily::Default,
            })
        );
    }

    #[test]
    fn energies_match_hand_values() {
        assert_eq!(iso(2, 1).energy(), 5.0);
        assert_eq!(iso(15, 4).energy(), 241.0);
        assert_eq!(iso(23, 4).energy(), 545.0);
        let c21 =
            EigenfunctionSpec::new(BilliardKind::Equilateral, SymmetryFamily::Cosine, 2, 1)
                .unwrap();
        assert!(
            (c21.energy() - 16.0 / 3.0).abs() < 1e-15,
            "equilateral (2,1) energy {} != 16/3",
            c21.energy()
        );
    }

    #[test]
    fn eval_matches_hand_values() {
        // sin(π)sin(π/4) − sin(π/2)sin(π/2) = −1.
        let v = iso(2, 1).eval(Point::new(PI / 2.0, PI / 4.0));
        assert!((v + 1.0).abs() < 1e-15, "isosceles (2,1) at (π/2, π/4): {v}");

        // Reduced form 2·cos(2x)·sin(2y/√3) − sin(4y/√3) at (π/2, √3·π/6)
        // gives −3√3/2.
        let c21 =
            EigenfunctionSpec::new(BilliardKind::Equilateral, SymmetryFamily::Cosine, 2, 1)
                .unwrap();
        let v = c21.eval(Point::new(PI / 2.0, SQRT_3 * PI / 6.0));
        let expect = -3.0 * SQRT_3 / 2.0;
        assert!(
            (v - expect).abs() < 1e-14,
            "equilateral cosine (2,1): {v} vs {expect}"
        );
    }

    #[test]
    fn eval_vanishes_on_the_hypotenuse() {
        let s = iso(7, 4);
        for t in 1..40 {
            let x = PI * t as f64 / 40.0;
            let v = s.eval(Point::new(x, x));
            assert!(v.abs() < 1e-13, "ψ(x, x) = {v} at x = {x}");
        }
    }

    #[test]
    fn grid_values_use_the_eval_code_path() {
        let s = iso(3, 1);
        let g = s.eval_grid(&GridSpec::new(64, 0.0));
        let mut checked = 0usize;
        for row in 0..64 {
            for col in 0..64 {
                if g.is_inside(row, col) {
                    let p = Point::new(g.x_at(col), g.y_at(row));
                    assert_eq!(
                        g.value(row, col),
                        s.eval(p),
                        "grid and eval disagree at ({row}, {col})"
                    );
                    checked += 1;
                }
            }
        }
        assert!(checked > 1000, "only {checked} interior samples at 64x64");
    }

    #[test]
    fn grid_res2_has_one_interior_cell() {
        // Cell centers: (π/4, π/4), (3π/4, π/4), (π/4, 3π/4), (3π/4, 3π/4).
        // Only (3π/4, π/4) lies strictly inside 0 < y < x < π; the value
        // there is −√2.
        let g = iso(2, 1).eval_grid(&GridSpec::new(2, 0.0));
        let inside: Vec<usize> = (0..4).filter(|&i| g.mask()[i]).collect();
        assert_eq!(inside, vec![1]);
        assert!((g.values()[1] + std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn grid_inset_shrinks_the_mask() {
        let s = iso(2, 1);
        let full = s.eval_grid(&GridSpec::new(128, 0.0));
        let inset = s.eval_grid(&GridSpec::new(128, 0.1));
        let count_full = full.mask().iter().filter(|&&b| b).count();
        let count_inset = inset.mask().iter().filter(|&&b| b).count();
        assert!(
            count_inset < count_full,
            "inset mask ({count_inset}) not smaller than full ({count_full})"
        );
        assert!(count_inset > 0, "inset 0.1 masked out everything");
    }

    #[test]
    fn lowest_isosceles_state_is_single_signed() {
        // ψ_{2,1} = 2·sin x·sin y·(cos x − cos y) < 0 on 0 < y < x < π.
        let g = iso(2, 1).eval_grid(&GridSpec::new(512, 0.0));
        let mut max_inside = f64::NEG_INFINITY;
        for (v, &inside) in g.values().iter().zip(g.mask()) {
            if inside {
                max_inside = max_inside.max(*v);
            }
        }
        assert!(
            max_inside < 0.0,
            "ψ_{{2,1}} should be strictly negative inside, max {max_inside}"
        );
    }

    proptest! {
        /// Both closed forms are antisymmetric under m ↔ n; this is what
        /// makes the label ordering m > n a convention rather than a loss.
        #[test]
        fn antisymmetry_under_label_swap(
            m in 1i64..20,
            n in 1i64..20,
            x in 0.0f64..PI,
            y in 0.0f64..2.7,
        ) {
            let (mf, nf) = (m as f64, n as f64);
            let a = iso_product(mf, nf, x, y);
            let b = iso_product(nf, mf, x, y);
            prop_assert!((a + b).abs() < 1e-12);
            let a = equilateral_cosine_product(mf, nf, x, y);
            let b = equilateral_cosine_product(nf, mf, x, y);
            prop_assert!((a + b).abs() < 1e-12);
            let a = equilateral_sine_product(mf, nf, x, y);
            let b = equilateral_sine_product(nf, mf, x, y);
            prop_assert!((a + b).abs() < 1e-12);
        }

        /// Mirror parity about x = π/2 for the equilateral families, on the
        /// m + n ≡ 0 (mod 3) subclass where the mirror acts diagonally.
        #[test]
        fn mirror_parity_on_the_mod3_subclass(
            seed_m in 1i64..12,
            n in 1i64..8,
            x in 0.0f64..PI,
            y in 0.0f64..2.7,
        ) {
            // Pick the smallest m > n with m + n ≡ 0 (mod 3).
            let mut m = n + 1;
            while (m + n) % 3 != 0 {
                m += 1;
            }
            m += 3 * (seed_m % 4);
            let (mf, nf) = (m as f64, n as f64);
            let c = equilateral_cosine_product(mf, nf, x, y);
            let c_ref = equilateral_cosine_product(mf, nf, PI - x, y);
            prop_assert!((c - c_ref).abs() < 1e-11,
                "cosine family not even at (m,n)=({m},{n}): {c} vs {c_ref}");
            if m != 2 * n {
                let s = equilateral_sine_product(mf, nf, x, y);
                let s_ref = equilateral_sine_product(mf, nf, PI - x, y);
                prop_assert!((s + s_ref).abs() < 1e-11,
                    "sine family not odd at (m,n)=({m},{n}): {s} vs {s_ref}");
            }
        }

        /// The zero-function degeneracy is exactly m = 2n: the sine form
        /// vanishes identically there.
        #[test]
        fn sine_degeneracy_is_identically_zero(
            n in 1i64..10,
            x in 0.0f64..PI,
            y in 0.0f64..2.7,
        ) {
            let v = equilateral_sine_product(2.0 * n as f64, n as f64, x, y);
            prop_assert!(v.abs() < 1e-12);
        }
    }
}
