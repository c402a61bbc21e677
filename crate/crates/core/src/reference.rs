//! Published three-decimal eigenvalue tables for the flip graphs with `5 <= n <= 12`,
//! and the constants bracketing the limit of `lambda_min / n`.

/// `(n, lambda_min)`; each entry is the true value rounded up to three decimals.
pub const LAMBDA_MIN_TABLE: [(usize, f64); 8] = [
    (5, -1.618),
    (6, -2.414),
    (7, -3.177),
    (8, -3.912),
    (9, -4.667),
    (10, -5.409),
    (11, -6.157),
    (12, -6.904),
];

/// `(n, lambda_2)`; each entry is the true value rounded down to three decimals.
pub const LAMBDA_2_TABLE: [(usize, f64); 8] = [
    (5, 0.618),
    (6, 2.0),
    (7, 3.231),
    (8, 4.383),
    (9, 5.488),
    (10, 6.564),
    (11, 7.622),
    (12, 8.667),
];

/// Precision of the table entries.
pub const TABLE_STEP: f64 = 1e-3;

/// Smallest eigenvalue of the single-edge flip graph (`n = 4`).
pub const LAMBDA_MIN_N4: f64 = -1.0;

/// Upper end of the limit bracket: `lambda_min` of the 12-gon flip graph over `12 - 2`.
pub const LIMIT_UPPER: f64 = -0.6904;

/// Lower end of the limit bracket, `-(5 + sqrt 5) / 8`.
pub fn limit_lower() -> f64 {
    -(5.0 + libm::sqrt(5.0)) / 8.0
}

pub fn lambda_min_table(n: usize) -> Option<f64> {
    lookup(&LAMBDA_MIN_TABLE, n)
}

pub fn lambda_2_table(n: usize) -> Option<f64> {
    lookup(&LAMBDA_2_TABLE, n)
}

fn lookup(table: &[(usize, f64)], n: usize) -> Option<f64> {
    table.iter().find(|&&(m, _)| m == n).map(|&(_, v)| v)
}

/// `value` rounds up to `entry`: `entry - step < value <= entry`, with `slack` on both sides.
pub fn rounds_up_to(value: f64, entry: f64, slack: f64) -> bool {
    value <= entry + slack && value > entry - TABLE_STEP - slack
}

/// `value` rounds down to `entry`: `entry <= value < entry + step`, with `slack` on both sides.
pub fn rounds_down_to(value: f64, entry: f64, slack: f64) -> bool {
    value >= entry - slack && value < entry + TABLE_STEP + slack
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_behind_small_entries() {
        let golden = (1.0 + libm::sqrt(5.0)) / 2.0;
        assert!(rounds_up_to(-golden, lambda_min_table(5).unwrap(), 0.0));
        assert!(rounds_down_to(golden - 1.0, lambda_2_table(5).unwrap(), 0.0));
        assert!(rounds_up_to(-1.0 - libm::sqrt(2.0), lambda_min_table(6).unwrap(), 0.0));
        assert_eq!(lambda_2_table(6), Some(2.0));
        assert_eq!(lambda_min_table(13), None);
    }

    #[test]
    fn limit_bracket_constants() {
        assert!((limit_lower() + 0.904508).abs() < 1e-6);
        assert!((LIMIT_UPPER - lambda_min_table(12).unwrap() / 10.0).abs() < 1e-12);
    }
}
