//! File formats, JSON reports and the command-line driver for `assoc-core`.

pub mod error;
pub mod formats;
pub mod reports;
pub mod run;

use assoc_core::triangulation::MAX_POLYGON;
use assoc_core::Limits;

pub use error::{CliError, CliResult};

/// Environment variable that raises or lowers the largest accepted polygon size.
pub const MAX_N_VAR: &str = "ASSOC_MAX_N";

/// Default limits, with `max_n` taken from `ASSOC_MAX_N` when set.
pub fn limits_from_env() -> CliResult<Limits> {
    let mut limits = Limits::default();
    if let Ok(raw) = std::env::var(MAX_N_VAR) {
        let n: usize = raw
            .trim()
            .parse()
            .map_err(|_| error::input(format!("{MAX_N_VAR}={raw:?} is not a number")))?;
        if !(3..=MAX_POLYGON).contains(&n) {
            return Err(error::input(format!("{MAX_N_VAR} must lie in [3, {MAX_POLYGON}]")));
        }
        limits.max_n = n;
    }
    Ok(limits)
}
