//! Rasterized fields over a billiard's bounding box.
//!
//! A grid is `resolution × resolution` cell centers spanning the bounding
//! box; the mask records which centers lie strictly inside the billiard.
//! Masked-out entries always carry the value 0 so that raw buffers stay
//! well-defined. Storage is row-major with row 0 at the *bottom* (smallest
//! `y`); renderers that want display order walk rows in reverse.

use crate::billiard::Point;

/// Sampling parameters for [`eval_grid`](crate::EigenfunctionSpec::eval_grid).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    /// Samples per axis; at least 2.
    pub resolution: usize,
    /// Margin from the boundary in units of the billiard's shortest side,
    /// in `[0, 0.5)`. Zero (the default) means plain strict containment.
    pub inset: f64,
}

impl GridSpec {
    pub fn new(resolution: usize, inset: f64) -> Self {
        assert!(resolution >= 2, "resolution must be >= 2, got {resolution}");
        assert!(
            (0.0..0.5).contains(&inset),
            "inset must lie in [0, 0.5), got {inset}"
        );
        GridSpec { resolution, inset }
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            resolution: 512,
            inset: 0.0,
        }
    }
}

/// A sampled scalar field with its inside/outside mask.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldGrid {
    spec: GridSpec,
    bbox: (Point, Point),
    values: Vec<f64>,
    mask: Vec<bool>,
}

impl FieldGrid {
    pub(crate) fn new(
        spec: GridSpec,
        bbox: (Point, Point),
        values: Vec<f64>,
        mask: Vec<bool>,
    ) -> Self {
        let len = spec.resolution * spec.resolution;
        assert_eq!(values.len(), len);
        assert_eq!(mask.len(), len);
        FieldGrid {
            spec,
            bbox,
            values,
            mask,
        }
    }

    pub fn resolution(&self) -> usize {
        self.spec.resolution
    }

    pub fn grid_spec(&self) -> GridSpec {
        self.spec
    }

    /// Bounding box as `(min, max)` corners.
    pub fn bounding_box(&self) -> (Point, Point) {
        self.bbox
    }

    /// x-coordinate of a column's cell centers.
    pub fn x_at(&self, col: usize) -> f64 {
        let (lo, hi) = self.bbox;
        lo.x + (col as f64 + 0.5) * (hi.x - lo.x) / self.spec.resolution as f64
    }

    /// y-coordinate of a row's cell centers (row 0 at the bottom).
    pub fn y_at(&self, row: usize) -> f64 {
        let (lo, hi) = self.bbox;
        lo.y + (row as f64 + 0.5) * (hi.y - lo.y) / self.spec.resolution as f64
    }

    pub fn index(&self, row: usize, col: usize) -> usize {
        row * self.spec.resolution + col
    }

    pub fn value(&self, row: usize, col: usize) -> f64 {
        self.values[self.index(row, col)]
    }

    pub fn is_inside(&self, row: usize, col: usize) -> bool {
        self.mask[self.index(row, col)]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    /// Largest |value| over unmasked cells; 0 for an all-masked grid.
    pub fn max_abs(&self) -> f64 {
        self.values
            .iter()
            .zip(&self.mask)
            .filter(|(_, &inside)| inside)
            .map(|(v, _)| v.abs())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[should_panic(expected = "resolution must be >= 2")]
    fn resolution_below_two_is_rejected() {
        GridSpec::new(1, 0.0);
    }

    #[test]
    #[should_panic(expected = "inset must lie in [0, 0.5)")]
    fn inset_of_half_is_rejected() {
        GridSpec::new(16, 0.5);
    }

    #[test]
    fn cell_centers_are_offset_by_half_a_step() {
        use crate::billiard::BilliardKind;
        use crate::state::{EigenfunctionSpec, SymmetryFamily};
        let s = EigenfunctionSpec::new(
            BilliardKind::RightIsosceles,
            SymmetryFamily::Default,
            2,
            1,
        )
        .unwrap();
        let g = s.eval_grid(&GridSpec::new(4, 0.0));
        let step = std::f64::consts::PI / 4.0;
        assert!((g.x_at(0) - step / 2.0).abs() < 1e-15);
        assert!((g.y_at(3) - 3.5 * step).abs() < 1e-15);
    }
}
