//! File formats, fixture sets and verification suites behind the
//! `tokenpower` command.

pub mod error;
pub mod fixtures;
pub mod io;
pub mod report;
pub mod suites;
