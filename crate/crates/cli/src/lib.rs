//! Batch front end for the decomposition engine: system files, timed runs
//! with atomic artifacts, the corpus benchmark and sampled verification.

pub mod bench;
pub mod run;
pub mod spec;
pub mod verify;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const ERROR: i32 = 1;
    pub const VERIFY_FAILED: i32 = 2;
    pub const TIMEOUT: i32 = 3;
}
