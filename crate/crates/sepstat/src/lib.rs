//! Command line, file formats and parallel sweeps for `sepstat-core`.

pub mod cli;
pub mod config;
pub mod formats;
pub mod parallel;
