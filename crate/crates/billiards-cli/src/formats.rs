//! Deterministic file formats: decimal CSV and binary PGM.
//!
//! Both formats are reproducible byte for byte: no timestamps, no
//! locale-dependent formatting, LF line endings throughout.

use billiards::grid::FieldGrid;
use billiards::nodal::{render, RenderMode};

/// Significant digits used for every coordinate and value we print.
pub const SIGNIFICANT_DIGITS: i32 = 9;

/// Format `v` in plain decimal notation with `sig` significant digits.
///
/// Exponent notation is never used; small magnitudes simply carry more
/// leading zeros. Exact zero prints as `0`.
pub fn fmt_sig(v: f64, sig: i32) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let exponent = v.abs().log10().floor() as i32;
    let decimals = (sig - 1 - exponent).max(0) as usize;
    format!("{v:.decimals$}")
}

/// Render a field as CSV: header `x,y,value`, then one row per unmasked
/// sample in storage order (row 0 = smallest y, columns left to right).
pub fn grid_csv(field: &FieldGrid) -> String {
    let mut out = String::from("x,y,value\n");
    let res = field.resolution();
    for row in 0..res {
        for col in 0..res {
            if field.is_inside(row, col) {
                out.push_str(&fmt_sig(field.x_at(col), SIGNIFICANT_DIGITS));
                out.push(',');
                out.push_str(&fmt_sig(field.y_at(row), SIGNIFICANT_DIGITS));
                out.push(',');
                out.push_str(&fmt_sig(field.value(row, col), SIGNIFICANT_DIGITS));
                out.push('\n');
            }
        }
    }
    out
}

/// Render a field as a binary PGM image: `P5`, dimensions, maxval 255, then
/// one byte per cell with the top row first (largest y).
pub fn pgm_bytes(field: &FieldGrid, mode: RenderMode) -> Vec<u8> {
    let res = field.resolution();
    let mut bytes = format!("P5\n{res} {res}\n255\n").into_bytes();
    bytes.extend(render(field, mode));
    bytes
}

#[cfg(test)]
mod tests {
    use super::*;
    use billiards::billiard::BilliardKind;
    use billiards::grid::GridSpec;
    use billiards::state::{EigenfunctionSpec, SymmetryFamily};

    #[test]
    fn fmt_sig_keeps_nine_significant_digits() {
        assert_eq!(fmt_sig(0.0, 9), "0");
        assert_eq!(fmt_sig(65.0, 9), "65.0000000");
        assert_eq!(fmt_sig(-std::f64::consts::SQRT_2, 9), "-1.41421356");
        assert_eq!(fmt_sig(0.00123456789, 9), "0.00123456789");
        assert_eq!(fmt_sig(545.0, 9), "545.000000");
    }

    #[test]
    fn csv_lists_only_unmasked_cells() {
        let spec = EigenfunctionSpec::new(
            BilliardKind::RightIsosceles,
            SymmetryFamily::Default,
            2,
            1,
        )
        .unwrap();
        let field = spec.eval_grid(&GridSpec::new(2, 0.0));
        let csv = grid_csv(&field);
        let lines: Vec<&str> = csv.lines().collect();
        // Only one of the four res-2 cell centers lies strictly inside.
        assert_eq!(lines.len(), 2, "header plus a single data row: {csv}");
        assert_eq!(lines[0], "x,y,value");
        assert_eq!(lines[1], "2.35619449,0.785398163,-1.41421356");
    }

    #[test]
    fn pgm_has_the_documented_header() {
        let spec = EigenfunctionSpec::new(
            BilliardKind::RightIsosceles,
            SymmetryFamily::Default,
            2,
            1,
        )
        .unwrap();
        let field = spec.eval_grid(&GridSpec::new(4, 0.0));
        let bytes = pgm_bytes(&field, RenderMode::Sign);
        assert!(bytes.starts_with(b"P5\n4 4\n255\n"));
        assert_eq!(bytes.len(), 11 + 16, "header plus one byte per cell");
    }
}
