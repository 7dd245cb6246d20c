//! File formats, parallel sweeps and the acceptance harness on top of
//! `quasi3-core`.

pub mod format;
pub mod selftest;
pub mod sweep;

pub use quasi3_core as core;

/// Enumeration budget, overridable through `QUASI3_BUDGET`.
pub fn budget_from_env() -> Result<u64, String> {
    match std::env::var("QUASI3_BUDGET") {
        Ok(s) => s.trim().parse().map_err(|_| format!("QUASI3_BUDGET must be a nonnegative integer, got {s:?}")),
        Err(_) => Ok(quasi3_core::paths::DEFAULT_BUDGET),
    }
}
