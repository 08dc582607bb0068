//! Float helpers that work without `std` and keep generated bounds on
//! clean decimal values.

use alloc::format;
use alloc::string::String;

/// Absolute value without `std`.
pub fn abs(x: f64) -> f64 {
    if x < 0.0 {
        -x
    } else {
        x
    }
}

/// Larger of two finite floats.
pub fn max(a: f64, b: f64) -> f64 {
    if a > b {
        a
    } else {
        b
    }
}

/// `10^n` as an f64, exact for the small exponents used here.
pub fn pow10(n: u32) -> f64 {
    let mut v = 1.0;
    for _ in 0..n {
        v *= 10.0;
    }
    v
}

/// Re-round a computed value to 12 significant decimal digits.
///
/// Scheme bounds are products of decimal inputs with decimal multipliers
/// (e.g. `0.95 * 300`), so their exact values have only a few decimal
/// digits, while f64 arithmetic leaves noise in the last bits
/// (`0.95 * 300 -> 284.99999999999994`). Snapping restores the f64 nearest
/// to the intended decimal, which is also what parsing the decimal literal
/// produces, so measured values compare exactly against bounds.
pub fn snap(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    // 11 digits after the point in scientific notation = 12 significant.
    let formatted = format!("{x:.11e}");
    formatted.parse().unwrap_or(x)
}

/// Round half away from zero at `decimals` decimal places.
pub fn round_half_away(x: f64, decimals: u32) -> f64 {
    let scale = pow10(decimals);
    let scaled = x * scale;
    let rounded = if scaled >= 0.0 {
        trunc(scaled + 0.5)
    } else {
        -trunc(-scaled + 0.5)
    };
    rounded / scale
}

fn trunc(x: f64) -> f64 {
    // Values handled here are small (scores, bounds scaled by <= 10^6).
    (x as i64) as f64
}

/// Format with exactly one decimal digit, rounding half away from zero.
pub fn format_one_decimal(x: f64) -> String {
    let scaled = round_half_away(x, 1) * 10.0;
    let units = if scaled >= 0.0 {
        (scaled + 0.5) as i64
    } else {
        -((-scaled + 0.5) as i64)
    };
    let sign = if units < 0 { "-" } else { "" };
    let mag = units.abs();
    format!("{sign}{}.{}", mag / 10, mag % 10)
}

/// Format a score-valued number: integer when integral, else one decimal.
pub fn format_score_value(x: f64) -> String {
    let tenths = round_half_away(x, 1) * 10.0;
    let units = if tenths >= 0.0 {
        (tenths + 0.5) as i64
    } else {
        -((-tenths + 0.5) as i64)
    };
    if units % 10 == 0 {
        format!("{}", units / 10)
    } else {
        format_one_decimal(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snap_restores_clean_decimals() {
        assert_eq!(snap(0.95 * 300.0), 285.0);
        assert_eq!(snap(0.95 * 750.0), 712.5);
        assert_eq!(snap(0.4 * 60.0), 24.0);
        assert_eq!(snap(1.1 * 0.7), 0.77);
        assert_eq!(snap(1.2 * 0.7), 0.84);
        assert_eq!(snap(0.95 * 80.0), 76.0);
        assert_eq!(snap(f64::INFINITY), f64::INFINITY);
        assert_eq!(snap(0.0), 0.0);
    }

    #[test]
    fn rounding_is_half_away_from_zero() {
        assert_eq!(round_half_away(712.5, 0), 713.0);
        assert_eq!(round_half_away(-712.5, 0), -713.0);
        assert_eq!(round_half_away(1.65, 1), 1.7);
        assert_eq!(round_half_away(1.64, 1), 1.6);
    }

    #[test]
    fn one_decimal_formatting() {
        assert_eq!(format_one_decimal(1.6000000000000001), "1.6");
        assert_eq!(format_one_decimal(5.0), "5.0");
        assert_eq!(format_one_decimal(-2.5), "-2.5");
        assert_eq!(format_one_decimal(-3.0), "-3.0");
    }

    #[test]
    fn score_value_formatting() {
        assert_eq!(format_score_value(1.0), "1");
        assert_eq!(format_score_value(3.5), "3.5");
        assert_eq!(format_score_value(5.0), "5");
        assert_eq!(format_score_value(-3.0), "-3");
        assert_eq!(format_score_value(0.0), "0");
    }
}
