//! Numerical cross-checks: everything the closed forms promise, measured.
//!
//! Four probes, each an independent route to a property the algebra
//! guarantees exactly:
//!
//! * **Helmholtz residual** — a five-point stencil applied to the closed form
//!   must reproduce the eigenvalue to second order in the step.
//! * **Boundary residual** — the eigenfunction must vanish on the billiard's
//!   edges to round-off.
//! * **Ladder identity** — the shifted plane-wave sum must equal the directly
//!   constructed target state pointwise.
//! * **Orthogonality** — distinct states must be orthogonal under midpoint
//!   quadrature over the masked raster.
//!
//! [`run_suite`] sweeps these over a quantum-number range and aggregates
//! worst cases. Tolerances are always passed in ([`SuiteTolerances`]), never
//! inlined, so the acceptance gates and the library agree on one set of
//! numbers.

use crate::billiard::{sample_triangle_edges, BilliardKind, Point};
use crate::classes::step;
use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::planewave::PlaneWaveSum;
use crate::state::{EigenfunctionSpec, SymmetryFamily};

/// Outcome of a Helmholtz-residual measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    /// Stencil step the residual was measured at.
    pub h: f64,
    /// Worst `|(−∇²_h ψ)/ψ − E| / E` over the admissible points.
    pub max_relative_residual: f64,
    /// `log2(residual(h) / residual(h/2))`, present only when both step
    /// sizes were run; ≈ 2 for a correct second-order stencil.
    pub convergence_order: Option<f64>,
    /// Number of admissible sample points used.
    pub points_used: usize,
}

/// Sampling raster used to pick stencil points; 129² cell centers leaves
/// thousands of admissible interior points for desk-scale quantum numbers.
const STENCIL_SAMPLING: usize = 129;
/// Admissible points required before the measurement is trusted.
const STENCIL_MIN_POINTS: usize = 100;
/// Cap on points actually evaluated, taken in row-major order.
const STENCIL_MAX_POINTS: usize = 2000;

/// Admissible stencil centers: strictly interior with all four arms
/// interior, and `|ψ| > 0.1·max|ψ|` so the ratio is well-conditioned.
fn stencil_points(spec: &EigenfunctionSpec, h: f64) -> Result<Vec<Point>> {
    let kind = spec.kind();
    let (lo, hi) = kind.bounding_box();
    let dx = (hi.x - lo.x) / STENCIL_SAMPLING as f64;
    let dy = (hi.y - lo.y) / STENCIL_SAMPLING as f64;
    let mut candidates = Vec::new();
    let mut max_abs = 0.0f64;
    for row in 0..STENCIL_SAMPLING {
        let y = lo.y + (row as f64 + 0.5) * dy;
        for col in 0..STENCIL_SAMPLING {
            let x = lo.x + (col as f64 + 0.5) * dx;
            let p = Point::new(x, y);
            if !kind.contains(p) {
                continue;
            }
            let v = spec.eval(p);
            max_abs = max_abs.max(v.abs());
            let arms_inside = kind.contains(Point::new(x + h, y))
                && kind.contains(Point::new(x - h, y))
                && kind.contains(Point::new(x, y + h))
                && kind.contains(Point::new(x, y - h));
            if arms_inside {
                candidates.push((p, v));
            }
        }
    }
    let threshold = 0.1 * max_abs;
    let points: Vec<Point> = candidates
        .into_iter()
        .filter(|(_, v)| v.abs() > threshold)
        .map(|(p, _)| p)
        .take(STENCIL_MAX_POINTS)
        .collect();
    if points.len() < STENCIL_MIN_POINTS {
        return Err(Error::StencilExitsDomain { h });
    }
    Ok(points)
}

fn max_relative_residual_at(spec: &EigenfunctionSpec, h: f64, points: &[Point]) -> f64 {
    let energy = spec.energy();
    let mut worst = 0.0f64;
    for &p in points {
        let center = spec.eval(p);
        let lap = (spec.eval(Point::new(p.x + h, p.y))
            + spec.eval(Point::new(p.x - h, p.y))
            + spec.eval(Point::new(p.x, p.y + h))
            + spec.eval(Point::new(p.x, p.y - h))
            - 4.0 * center)
            / (h * h);
        let ratio = -lap / center;
        worst = worst.max((ratio - energy).abs() / energy);
    }
    worst
}

/// Measure the eigenvalue residual of the five-point stencil at step `h`.
///
/// Uses at least [`STENCIL_MIN_POINTS`] interior points where `|ψ|` exceeds
/// a tenth of its sampled maximum; reports [`Error::StencilExitsDomain`]
/// when `h` is too large to place them.
pub fn helmholtz_residual(spec: &EigenfunctionSpec, h: f64) -> Result<ResidualReport> {
    let points = stencil_points(spec, h)?;
    Ok(ResidualReport {
        h,
        max_relative_residual: max_relative_residual_at(spec, h, &points),
        convergence_order: None,
        points_used: points.len(),
    })
}

/// Measure at `h` and `h/2` on the same points and report the observed
/// convergence order alongside the `h` residual.
pub fn helmholtz_convergence(spec: &EigenfunctionSpec, h: f64) -> Result<ResidualReport> {
    let points = stencil_points(spec, h)?;
    let coarse = max_relative_residual_at(spec, h, &points);
    let fine = max_relative_residual_at(spec, h / 2.0, &points);
    Ok(ResidualReport {
        h,
        max_relative_residual: coarse,
        convergence_order: Some((coarse / fine).log2()),
        points_used: points.len(),
    })
}

/// Largest `|ψ|` over `count` arc-length-uniform boundary samples.
pub fn boundary_residual(spec: &EigenfunctionSpec, count: usize) -> f64 {
    boundary_residual_at(spec, &spec.kind().boundary_samples(count))
}

/// Largest `|ψ|` over explicit probe points.
pub fn boundary_residual_at(spec: &EigenfunctionSpec, points: &[Point]) -> f64 {
    points
        .iter()
        .map(|&p| spec.eval(p).abs())
        .fold(0.0, f64::max)
}

/// Sensitivity control: the boundary residual measured on a triangle whose
/// vertices are each displaced by `delta`. For any real eigenfunction this
/// must *fail* a round-off tolerance — if it doesn't, the boundary check has
/// no power.
pub fn perturbed_boundary_residual(spec: &EigenfunctionSpec, delta: f64, count: usize) -> f64 {
    let v = spec.kind().vertices();
    let displaced = [
        Point::new(v[0].x + delta, v[0].y),
        Point::new(v[1].x, v[1].y + delta),
        Point::new(v[2].x + delta, v[2].y + delta),
    ];
    boundary_residual_at(spec, &sample_triangle_edges(&displaced, count))
}

/// Sup-norm of `reduce(T^p · rep(spec)) − eval(step(spec, p))` over a
/// `resolution × resolution` raster spanning the bounding box (endpoints
/// included). The two sides take independent routes: integer shifts on the
/// plane-wave lattice versus direct construction of the target label.
pub fn ladder_identity_check(
    spec: &EigenfunctionSpec,
    p: i64,
    resolution: usize,
) -> Result<f64> {
    let target = step(spec, p)?;
    let shifted = PlaneWaveSum::for_state(spec).shifted(p);
    let (lo, hi) = spec.kind().bounding_box();
    let mut worst = 0.0f64;
    for row in 0..resolution {
        let y = lo.y + (hi.y - lo.y) * row as f64 / (resolution - 1) as f64;
        for col in 0..resolution {
            let x = lo.x + (hi.x - lo.x) * col as f64 / (resolution - 1) as f64;
            let q = Point::new(x, y);
            worst = worst.max((shifted.reduce(q) - target.eval(q)).abs());
        }
    }
    Ok(worst)
}

/// Normalized midpoint-rule inner product `|⟨a, b⟩| / (‖a‖·‖b‖)` over the
/// masked raster. Both states must live on the same billiard (panics
/// otherwise — that is a caller bug, not data).
pub fn orthogonality(a: &EigenfunctionSpec, b: &EigenfunctionSpec, resolution: usize) -> f64 {
    assert_eq!(
        a.kind(),
        b.kind(),
        "orthogonality is defined over a single billiard"
    );
    let grid = GridSpec::new(resolution, 0.0);
    let fa = a.eval_grid(&grid);
    let fb = b.eval_grid(&grid);
    let mut dot = 0.0f64;
    let mut na = 0.0f64;
    let mut nb = 0.0f64;
    for i in 0..fa.values().len() {
        if fa.mask()[i] && fb.mask()[i] {
            let (x, y) = (fa.values()[i], fb.values()[i]);
            dot += x * y;
            na += x * x;
            nb += y * y;
        }
    }
    dot.abs() / (na * nb).sqrt()
}

/// Quantum-number sweep and probe parameters for [`run_suite`].
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    /// `n` values to sweep.
    pub n_range: std::ops::RangeInclusive<i64>,
    /// `m = n + offset` for each offset in this range.
    pub m_offset: std::ops::RangeInclusive<i64>,
    /// Raising steps checked for the ladder identity.
    pub p_range: std::ops::RangeInclusive<i64>,
    /// Raster for the ladder identity sup-norm.
    pub ladder_resolution: usize,
    /// Boundary samples per state.
    pub boundary_count: usize,
    /// Stencil step for the Helmholtz probe (measured at `h` and `h/2`).
    pub stencil_h: f64,
    /// Raster for the orthogonality quadrature.
    pub quadrature_resolution: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_range: 1..=6,
            m_offset: 1..=12,
            p_range: 1..=3,
            ladder_resolution: 201,
            boundary_count: 1000,
            stencil_h: 1e-3,
            quadrature_resolution: 400,
        }
    }
}

/// Pass thresholds for the four probes. Defaults are the shipped gates.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteTolerances {
    /// Relative eigenvalue residual at the suite's `stencil_h`.
    pub helmholtz_relative: f64,
    /// Expected stencil convergence order.
    pub convergence_order: f64,
    /// Allowed deviation from the expected order.
    pub order_tolerance: f64,
    /// Absolute boundary residual.
    pub boundary_absolute: f64,
    /// Sup-norm for the ladder identity.
    pub ladder_sup_norm: f64,
    /// Normalized cross inner product.
    pub orthogonality: f64,
}

impl Default for SuiteTolerances {
    fn default() -> Self {
        SuiteTolerances {
            helmholtz_relative: 1e-4,
            convergence_order: 2.0,
            order_tolerance: 0.2,
            boundary_absolute: 1e-12,
            ladder_sup_norm: 1e-9,
            orthogonality: 1e-3,
        }
    }
}

/// One aggregated probe line in a suite report.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckRecord {
    pub name: &'static str,
    /// Number of individual measurements aggregated.
    pub checks: usize,
    /// Worst measured value (largest residual / deviation).
    pub worst: f64,
    /// The threshold the worst value was compared against.
    pub threshold: f64,
    pub passed: bool,
}

/// Aggregated outcome of [`run_suite`].
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub kind: BilliardKind,
    pub family: SymmetryFamily,
    pub records: Vec<CheckRecord>,
    /// Total individual measurements.
    pub checks_run: usize,
    /// Set when the requested range contained no valid state: the suite
    /// passes vacuously and says so.
    pub vacuous: bool,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }
}

/// Sweep every probe over the configured quantum-number range and aggregate
/// worst cases against the tolerances.
pub fn run_suite(
    kind: BilliardKind,
    family: SymmetryFamily,
    config: &SuiteConfig,
    tol: &SuiteTolerances,
) -> Result<SuiteReport> {
    let mut specs = Vec::new();
    for n in config.n_range.clone() {
        for off in config.m_offset.clone() {
            match EigenfunctionSpec::new(kind, family, n + off, n) {
                Ok(s) => specs.push(s),
                Err(Error::ZeroFunction { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    if specs.is_empty() {
        return Ok(SuiteReport {
            kind,
            family,
            records: Vec::new(),
            checks_run: 0,
            vacuous: true,
        });
    }

    let mut records = Vec::new();
    let mut checks_run = 0usize;

    let mut worst_residual = 0.0f64;
    let mut worst_order_dev = 0.0f64;
    for s in &specs {
        let r = helmholtz_convergence(s, config.stencil_h)?;
        worst_residual = worst_residual.max(r.max_relative_residual);
        let order = r.convergence_order.expect("both step sizes were run");
        worst_order_dev = worst_order_dev.max((order - tol.convergence_order).abs());
        checks_run += 1;
    }
    records.push(CheckRecord {
        name: "helmholtz relative residual",
        checks: specs.len(),
        worst: worst_residual,
        threshold: tol.helmholtz_relative,
        passed: worst_residual <= tol.helmholtz_relative,
    });
    records.push(CheckRecord {
        name: "stencil convergence order deviation",
        checks: specs.len(),
        worst: worst_order_dev,
        threshold: tol.order_tolerance,
        passed: worst_order_dev <= tol.order_tolerance,
    });

    let mut worst_boundary = 0.0f64;
    for s in &specs {
        worst_boundary = worst_boundary.max(boundary_residual(s, config.boundary_count));
        checks_run += 1;
    }
    records.push(CheckRecord {
        name: "boundary residual",
        checks: specs.len(),
        worst: worst_boundary,
        threshold: tol.boundary_absolute,
        passed: worst_boundary <= tol.boundary_absolute,
    });

    let mut worst_ladder = 0.0f64;
    let mut ladder_checks = 0usize;
    for s in &specs {
        for p in config.p_range.clone() {
            worst_ladder = worst_ladder.max(ladder_identity_check(s, p, config.ladder_resolution)?);
            ladder_checks += 1;
        }
    }
    checks_run += ladder_checks;
    records.push(CheckRecord {
        name: "ladder identity sup-norm",
        checks: ladder_checks,
        worst: worst_ladder,
        threshold: tol.ladder_sup_norm,
        passed: worst_ladder <= tol.ladder_sup_norm,
    });

    // Orthogonality: the two lowest valid states at each n — distinct
    // energies, same billiard.
    let mut worst_ortho = 0.0f64;
    let mut ortho_checks = 0usize;
    for n in config.n_range.clone() {
        let at_n: Vec<&EigenfunctionSpec> = specs.iter().filter(|s| s.n() == n).collect();
        if at_n.len() >= 2 {
            worst_ortho =
                worst_ortho.max(orthogonality(at_n[0], at_n[1], config.quadrature_resolution));
            ortho_checks += 1;
        }
    }
    checks_run += ortho_checks;
    records.push(CheckRecord {
        name: "orthogonality",
        checks: ortho_checks,
        worst: worst_ortho,
        threshold: tol.orthogonality,
        passed: worst_ortho <= tol.orthogonality,
    });

    Ok(SuiteReport {
        kind,
        family,
        records,
        checks_run,
        vacuous: false,
    })
}
