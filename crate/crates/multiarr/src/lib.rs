//! Command-line front end and JSON formats for `multiarr-core`.

pub mod builtins;
pub mod cli;
pub mod format;
pub mod report;
