//! File formats, JSON reports, seeded sampling and parallel searches on top
//! of `surfcover-core`. The `surfcover` binary is the command-line front end.

pub mod format;
pub mod report;
pub mod sample;
pub mod search;

pub use surfcover_core as core;
