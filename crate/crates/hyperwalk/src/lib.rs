//! Command-line tool, output formats and self-check suites on top of
//! `hyperwalk-core`.

pub mod cli;
pub mod output;
pub mod verify;
