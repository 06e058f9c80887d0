//! Default iteration and enumeration caps.

/// Largest `m^n` the word enumerators will scan.
pub const DEFAULT_WORD_CAP: u64 = 100_000_000;

/// Environment variable that overrides every default budget below.
pub const BUDGET_ENV: &str = "RPL_BUDGET";

/// Word applications allowed when iterating an orbit: `64 (m + n)^2`.
pub fn orbit_budget(m: usize, n: usize) -> usize {
    64 * (m + n) * (m + n)
}

/// Table positions filled by the placement inverse: `50 n`.
pub fn placement_budget(n: usize) -> usize {
    50 * n
}

/// Reads [`BUDGET_ENV`] if set to a positive integer.
pub fn env_override() -> Option<usize> {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&b| b > 0)
}
