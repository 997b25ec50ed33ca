//! Size guards for the brute-force routines.
//!
//! Every guard is a hard refusal. The environment variable
//! [`OVERRIDE_ENV`] raises all limits to at least its value.

use crate::error::{Error, Result};

pub const OVERRIDE_ENV: &str = "CROSSFREE_GUARD_OVERRIDE";

/// Largest `n` accepted by the partition enumerator.
pub const ENUMERATION_MAX_N: usize = 12;
/// Largest `n` accepted by the 2-ordered growth explorer.
pub const ORDERED2_MAX_N: usize = 14;
/// Largest `n + m` for pair-based polygonization counting.
pub const PAIR_COUNT_MAX_POINTS: usize = 12;
/// Largest `n + m` for the permutation-based geometric polygonization count.
pub const GEOMETRIC_COUNT_MAX_POINTS: usize = 10;
/// Largest step index of the alternating-edge families.
pub const FAMILY_MAX_STEP: usize = 16;

/// Limit after applying the environment override, if any.
pub fn effective_limit(default: usize) -> usize {
    match std::env::var(OVERRIDE_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
    {
        Some(raised) => default.max(raised),
        None => default,
    }
}

pub(crate) fn check(what: &'static str, requested: usize, default: usize) -> Result<()> {
    let limit = effective_limit(default);
    if requested > limit {
        return Err(Error::GuardExceeded {
            what,
            requested,
            limit,
        });
    }
    Ok(())
}
