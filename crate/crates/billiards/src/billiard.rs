//! Billiard geometry: the two triangular tables, strict containment, and
//! arc-length-uniform boundary sampling.
//!
//! Both tables have side π. The right-isosceles triangle sits on the vertices
//! (0,0), (π,0), (π,π) with the interior `0 < y < x < π`; the equilateral
//! triangle sits on (0,0), (π,0), (π/2, √3·π/2). The placements are fixed —
//! every closed form in this crate vanishes on these particular edges and on
//! no others, so the geometry is part of the contract, not a parameter.

use std::f64::consts::PI;

/// √3, spelled out once; `f64::sqrt` is not const.
pub(crate) const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// A point in the plane of the billiard table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }
}

/// The two billiard tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BilliardKind {
    /// Right-isosceles triangle, legs on `y = 0` (after reflection: `x = π`)
    /// and hypotenuse on `y = x`.
    RightIsosceles,
    /// Equilateral triangle with base on `y = 0`.
    Equilateral,
}

impl BilliardKind {
    /// The fixed vertex placement, counter-clockwise from the origin.
    pub fn vertices(self) -> [Point; 3] {
        match self {
            BilliardKind::RightIsosceles => {
                [Point::new(0.0, 0.0), Point::new(PI, 0.0), Point::new(PI, PI)]
            }
            BilliardKind::Equilateral => [
                Point::new(0.0, 0.0),
                Point::new(PI, 0.0),
                Point::new(PI / 2.0, SQRT_3 * PI / 2.0),
            ],
        }
    }

    /// Strict interior containment. Points on edges and vertices are outside;
    /// rasterization and quadrature rely on this so that boundary pixels are
    /// never attributed a sign.
    pub fn contains(self, p: Point) -> bool {
        match self {
            BilliardKind::RightIsosceles => p.y > 0.0 && p.y < p.x && p.x < PI,
            BilliardKind::Equilateral => {
                p.y > 0.0 && p.y < SQRT_3 * p.x && p.y < SQRT_3 * (PI - p.x)
            }
        }
    }

    /// Axis-aligned bounding box as `(min, max)` corners.
    pub fn bounding_box(self) -> (Point, Point) {
        match self {
            BilliardKind::RightIsosceles => (Point::new(0.0, 0.0), Point::new(PI, PI)),
            BilliardKind::Equilateral => {
                (Point::new(0.0, 0.0), Point::new(PI, SQRT_3 * PI / 2.0))
            }
        }
    }

    /// Length of the shortest side: π for both tables. Inset margins are
    /// expressed in units of this length.
    pub fn shortest_side(self) -> f64 {
        PI
    }

    /// The ladder modulus factor `k`: raising shifts `m` by `k·n`, and the
    /// spectral classes are the residues of `m` modulo `k·n`.
    pub fn modulus_factor(self) -> i64 {
        match self {
            BilliardKind::RightIsosceles => 2,
            BilliardKind::Equilateral => 3,
        }
    }

    /// `count` points spread uniformly by arc length over the three edges,
    /// vertices excluded. Every returned point fails [`contains`].
    ///
    /// [`contains`]: BilliardKind::contains
    pub fn boundary_samples(self, count: usize) -> Vec<Point> {
        sample_triangle_edges(&self.vertices(), count)
    }

    /// Distance from an interior point to the nearest edge line. Only
    /// meaningful for points inside the triangle; used to apply inset margins.
    pub(crate) fn boundary_distance(self, p: Point) -> f64 {
        match self {
            BilliardKind::RightIsosceles => {
                // Edges: y = 0, x = π, y = x.
                p.y.min(PI - p.x).min((p.x - p.y) / std::f64::consts::SQRT_2)
            }
            BilliardKind::Equilateral => {
                // Edges: y = 0, y = √3·x, y = √3·(π − x); the slanted-line
                // normals have length 2.
                p.y.min((SQRT_3 * p.x - p.y) / 2.0)
                    .min((SQRT_3 * (PI - p.x) - p.y) / 2.0)
            }
        }
    }
}

/// Sample the closed polyline through `vertices` uniformly by arc length.
///
/// The `count` points sit at arc positions `(j + 1/2)·P/count` along the
/// perimeter `P`, which keeps them strictly between vertices. This also
/// serves the verification suite's sensitivity control, which samples a
/// deliberately perturbed triangle.
pub fn sample_triangle_edges(vertices: &[Point; 3], count: usize) -> Vec<Point> {
    assert!(count >= 3, "need at least one sample per edge, got {count}");
    let mut lens = [0.0f64; 3];
    for i in 0..3 {
        let a = vertices[i];
        let b = vertices[(i + 1) % 3];
        lens[i] = ((b.x - a.x).powi(2) + (b.y - a.y).powi(2)).sqrt();
    }
    let perimeter: f64 = lens.iter().sum();
    let mut out = Vec::with_capacity(count);
    for j in 0..count {
        let mut s = (j as f64 + 0.5) * perimeter / count as f64;
        for i in 0..3 {
            if s <= lens[i] || i == 2 {
                let t = (s / lens[i]).min(1.0);
                let a = vertices[i];
                let b = vertices[(i + 1) % 3];
                out.push(Point::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)));
                break;
            }
            s -= lens[i];
        }
    }
    out
}
