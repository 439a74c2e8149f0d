//! Library surface of the command-line tool, split out so integration
//! tests can drive the scenario suite and constructor parsing directly.

pub mod cache;
pub mod construct;
pub mod suite;

/// Exit codes: stable, documented, suitable for CI.
pub mod exit_codes {
    /// Verdict yes / command succeeded.
    pub const OK: i32 = 0;
    /// A scenario or check failed.
    pub const FAILURE: i32 = 1;
    /// Invalid input (bad JSON, bad constructor, violated precondition).
    pub const INVALID_INPUT: i32 = 2;
    /// Certified no.
    pub const NO: i32 = 3;
    /// Inclusion failed but no structural certificate exists.
    pub const NO_UNCERTIFIED: i32 = 4;
}
