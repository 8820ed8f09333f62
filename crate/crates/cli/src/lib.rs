//! Library surface of the command-line tool, exposed so the integration
//! suites can drive the same code paths the binary runs.

pub mod checks;
pub mod commands;
pub mod format;
pub mod report;
