//! Nodal-domain counting on rasterized fields, plus grayscale rendering.
//!
//! A nodal domain is a maximal connected region where the eigenfunction
//! keeps one sign. On a raster this becomes connected-component counting
//! over the sign grid, using 4-connectivity: diagonal adjacency would fuse
//! same-sign domains that touch only at a nodal-line crossing (the
//! checkerboard corner), silently undercounting. Cells that are masked out
//! or sample an exact zero belong to no domain.

use crate::billiard::Point;
use crate::classes::{class_index, EquivalenceClass};
use crate::grid::{FieldGrid, GridSpec};
use crate::state::EigenfunctionSpec;

/// Pixel adjacency for component counting. Production counting always uses
/// [`Connectivity::Four`]; `Eight` exists so tests can demonstrate the
/// undercount it causes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    Four,
    Eight,
}

/// Per-cell signs: −1, 0, +1. Zero marks masked-out cells and exact zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignGrid {
    resolution: usize,
    signs: Vec<i8>,
}

impl SignGrid {
    /// Collapse a field to signs. Masked-out cells and exact zeros get 0.
    pub fn from_field(field: &FieldGrid) -> Self {
        let signs = field
            .values()
            .iter()
            .zip(field.mask())
            .map(|(&v, &inside)| {
                if !inside || v == 0.0 {
                    0
                } else if v > 0.0 {
                    1
                } else {
                    -1
                }
            })
            .collect();
        SignGrid {
            resolution: field.resolution(),
            signs,
        }
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn sign(&self, row: usize, col: usize) -> i8 {
        self.signs[row * self.resolution + col]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

/// Result of a component count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainCount {
    /// Number of connected same-sign components.
    pub domain_count: usize,
    /// Pixel count of each component, in discovery order (row-major by the
    /// component's first pixel). Their sum equals the number of nonzero
    /// cells.
    pub domain_sizes: Vec<usize>,
    /// Set when any component has fewer than 4 pixels — a sign the raster
    /// is too coarse to trust, not an error.
    pub resolution_suspect: bool,
}

/// Count nodal domains with 4-connectivity.
pub fn count_domains(grid: &SignGrid) -> DomainCount {
    count_domains_with(grid, Connectivity::Four)
}

/// Component counting with an explicit connectivity; see [`Connectivity`].
pub fn count_domains_with(grid: &SignGrid, connectivity: Connectivity) -> DomainCount {
    let res = grid.resolution;
    let signs = &grid.signs;
    let mut visited = vec![false; signs.len()];
    let mut sizes = Vec::new();
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for start in 0..signs.len() {
        if visited[start] || signs[start] == 0 {
            continue;
        }
        let sign = signs[start];
        let mut size = 0usize;
        visited[start] = true;
        stack.push((start / res, start % res));
        while let Some((row, col)) = stack.pop() {
            size += 1;
            let mut try_neighbor = |r: usize, c: usize, visited: &mut Vec<bool>| {
                let i = r * res + c;
                if !visited[i] && signs[i] == sign {
                    visited[i] = true;
                    stack.push((r, c));
                }
            };
            if row > 0 {
                try_neighbor(row - 1, col, &mut visited);
            }
            if row + 1 < res {
                try_neighbor(row + 1, col, &mut visited);
            }
            if col > 0 {
                try_neighbor(row, col - 1, &mut visited);
            }
            if col + 1 < res {
                try_neighbor(row, col + 1, &mut visited);
            }
            if connectivity == Connectivity::Eight {
                if row > 0 && col > 0 {
                    try_neighbor(row - 1, col - 1, &mut visited);
                }
                if row > 0 && col + 1 < res {
                    try_neighbor(row - 1, col + 1, &mut visited);
                }
                if row + 1 < res && col > 0 {
                    try_neighbor(row + 1, col - 1, &mut visited);
                }
                if row + 1 < res && col + 1 < res {
                    try_neighbor(row + 1, col + 1, &mut visited);
                }
            }
        }
        sizes.push(size);
    }
    DomainCount {
        domain_count: sizes.len(),
        resolution_suspect: sizes.iter().any(|&s| s < 4),
        domain_sizes: sizes,
    }
}

/// Nodal count of the separable rectangle mode `sin(m·x)·sin(n·y)` on
/// `(0, π)²`: an exact `m·n` checkerboard. This is the oracle the flood
/// fill is validated against.
pub fn checkerboard_count(m: i64, n: i64) -> i64 {
    m * n
}

/// Rasterize the rectangle mode `sin(m·x)·sin(n·y)` over `(0, π)²` with a
/// full mask — the test field for [`checkerboard_count`].
pub fn rectangle_field(m: i64, n: i64, resolution: usize) -> FieldGrid {
    let spec = GridSpec::new(resolution, 0.0);
    let lo = Point::new(0.0, 0.0);
    let hi = Point::new(std::f64::consts::PI, std::f64::consts::PI);
    let step = std::f64::consts::PI / resolution as f64;
    let (mf, nf) = (m as f64, n as f64);
    let mut values = Vec::with_capacity(resolution * resolution);
    for row in 0..resolution {
        let y = (row as f64 + 0.5) * step;
        for col in 0..resolution {
            let x = (col as f64 + 0.5) * step;
            values.push((mf * x).sin() * (nf * y).sin());
        }
    }
    let mask = vec![true; resolution * resolution];
    FieldGrid::new(spec, (lo, hi), values, mask)
}

/// A state's nodal anatomy at one resolution.
#[derive(Debug, Clone, PartialEq)]
pub struct NodalReport {
    pub spec: EigenfunctionSpec,
    pub class: EquivalenceClass,
    pub resolution: usize,
    pub connectivity: Connectivity,
    pub domain_count: usize,
    pub domain_sizes: Vec<usize>,
    pub resolution_suspect: bool,
}

/// Rasterize, collapse to signs, and count with 4-connectivity.
pub fn analyze(spec: &EigenfunctionSpec, resolution: usize) -> NodalReport {
    let field = spec.eval_grid(&GridSpec::new(resolution, 0.0));
    let counts = count_domains(&SignGrid::from_field(&field));
    NodalReport {
        spec: *spec,
        class: class_index(spec),
        resolution,
        connectivity: Connectivity::Four,
        domain_count: counts.domain_count,
        domain_sizes: counts.domain_sizes,
        resolution_suspect: counts.resolution_suspect,
    }
}

/// Rendering palette for [`render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderMode {
    /// Sign map: −1 → 0, 0 → 128, +1 → 255.
    Sign,
    /// Linear map of `[−max|ψ|, +max|ψ|]` to `[0, 255]`; masked cells → 128.
    Amplitude,
}

/// Render a field to grayscale bytes, row-major with the *top* row (largest
/// `y`) first, ready for image output. Deterministic byte-for-byte.
pub fn render(field: &FieldGrid, mode: RenderMode) -> Vec<u8> {
    let res = field.resolution();
    let amp = field.max_abs();
    let mut bytes = Vec::with_capacity(res * res);
    for row in (0..res).rev() {
        for col in 0..res {
            let inside = field.is_inside(row, col);
            let v = field.value(row, col);
            let byte = if !inside {
                128
            } else {
                match mode {
                    RenderMode::Sign => {
                        if v > 0.0 {
                            255
                        } else if v < 0.0 {
                            0
                        } else {
                            128
                        }
                    }
                    RenderMode::Amplitude => {
                        if amp == 0.0 {
                            128
                        } else {
                            ((v + amp) / (2.0 * amp) * 255.0).round().clamp(0.0, 255.0) as u8
                        }
                    }
                }
            };
            bytes.push(byte);
        }
    }
    bytes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::billiard::BilliardKind;
    use crate::state::SymmetryFamily;
    use proptest::prelude::*;

    fn iso(m: i64, n: i64) -> EigenfunctionSpec {
        EigenfunctionSpec::new(BilliardKind::RightIsosceles, SymmetryFamily::Default, m, n)
            .unwrap()
    }

    #[test]
    fn rectangle_checkerboard_counts_are_exact() {
        for (m, n) in [(1, 1), (2, 1), (3, 2), (5, 4)] {
            let counts = count_domains(&SignGrid::from_field(&rectangle_field(m, n, 128)));
            assert_eq!(
                counts.domain_count as i64,
                checkerboard_count(m, n),
                "rectangle ({m},{n})"
            );
        }
    }

    #[test]
    fn eight_connectivity_fuses_checkerboard_corners() {
        // sin(2x)·sin(2y): four quadrant domains meet at the center. Under
        // 8-connectivity the two positive (and two negative) quadrants touch
        // diagonally and fuse — exactly the undercount that rules it out.
        let grid = SignGrid::from_field(&rectangle_field(2, 2, 64));
        assert_eq!(count_domains_with(&grid, Connectivity::Four).domain_count, 4);
        assert_eq!(count_domains_with(&grid, Connectivity::Eight).domain_count, 2);
    }

    #[test]
    fn lowest_isosceles_states_have_known_counts() {
        // ψ_{2,1} = 2·sin x·sin y·(cos x − cos y): one domain.
        // ψ_{3,1} = −4·sin x·sin y·sin(x+y)·sin(x−y): sign flips only across
        // y = π − x, giving two domains.
        assert_eq!(analyze(&iso(2, 1), 256).domain_count, 1);
        assert_eq!(analyze(&iso(3, 1), 256).domain_count, 2);
    }

    #[test]
    fn domain_sizes_account_for_every_nonzero_cell() {
        let grid = SignGrid::from_field(
            &iso(7, 4).eval_grid(&crate::grid::GridSpec::new(128, 0.0)),
        );
        let counts = count_domains(&grid);
        let nonzero = grid.signs().iter().filter(|&&s| s != 0).count();
        assert_eq!(counts.domain_sizes.iter().sum::<usize>(), nonzero);
    }

    #[test]
    fn single_pixel_domains_raise_the_suspect_flag() {
        // A checkerboard as fine as the raster itself: every cell is its own
        // component.
        let counts = count_domains(&SignGrid::from_field(&rectangle_field(8, 8, 8)));
        assert!(counts.resolution_suspect);
        assert!(!count_domains(&SignGrid::from_field(&rectangle_field(2, 2, 64)))
            .resolution_suspect);
    }

    #[test]
    fn analyze_reports_the_class() {
        let report = analyze(&iso(7, 4), 128);
        assert_eq!(report.class.index, 7);
        assert_eq!(report.class.modulus(), 8);
        assert_eq!(report.connectivity, Connectivity::Four);
    }

    #[test]
    fn sign_render_uses_the_three_level_palette() {
        let field = rectangle_field(1, 1, 4);
        // sin x·sin y > 0 everywhere inside (0,π)²: all 255.
        assert_eq!(render(&field, RenderMode::Sign), vec![255u8; 16]);

        let field = iso(2, 1).eval_grid(&crate::grid::GridSpec::new(2, 0.0));
        // Row 0 (bottom) holds the single interior cell (negative sign);
        // rendering is top-row-first, so it appears in the last row.
        assert_eq!(
            render(&field, RenderMode::Sign),
            vec![128, 128, 128, 0],
        );
    }

    #[test]
    fn amplitude_render_is_symmetric_about_mid_gray() {
        let field = rectangle_field(2, 1, 64);
        let bytes = render(&field, RenderMode::Amplitude);
        // sin(2x)·sin(y) is antisymmetric about x = π/2, so the byte
        // histogram must mirror around 255/2 up to rounding.
        let max = *bytes.iter().max().unwrap();
        let min = *bytes.iter().min().unwrap();
        assert_eq!(max, 255);
        assert_eq!(min, 0);
        assert_eq!(bytes.len(), 64 * 64);
    }

    proptest! {
        /// Flipping the field's sign relabels domains but never changes the
        /// count, the size multiset, or the suspect flag.
        #[test]
        fn counting_is_sign_flip_invariant(m in 1i64..6, n in 1i64..6) {
            let field = rectangle_field(m, n, 96);
            let flipped = rectangle_field(-m, n, 96);
            let a = count_domains(&SignGrid::from_field(&field));
            let b = count_domains(&SignGrid::from_field(&flipped));
            prop_assert_eq!(a.domain_count, b.domain_count);
            let mut sa = a.domain_sizes.clone();
            let mut sb = b.domain_sizes.clone();
            sa.sort_unstable();
            sb.sort_unstable();
            prop_assert_eq!(sa, sb);
        }
    }
}
