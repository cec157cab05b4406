//! Number formatting shared by the commands.

pub const DEFAULT_DIGITS: usize = 9;

/// Fixed notation with `digits` decimals for moderate magnitudes, scientific
/// with `digits` significant digits otherwise.
pub fn format_value(v: f64, digits: usize) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-4..1e9).contains(&a) {
        format!("{v:.digits$}")
    } else if v.is_finite() {
        format!("{v:.prec$e}", prec = digits.saturating_sub(1))
    } else {
        format!("{v}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        assert_eq!(format_value(1.0 / 3.0, 9), "0.333333333");
        assert_eq!(format_value(1.0, 9), "1.000000000");
        assert_eq!(format_value(0.0, 3), "0.000");
        assert_eq!(format_value(1.5e-7, 9), "1.50000000e-7");
        assert_eq!(format_value(-2.0e12, 3), "-2.00e12");
        assert_eq!(format_value(f64::INFINITY, 9), "inf");
    }
}
