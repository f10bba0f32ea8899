//! File formats, fixtures, self-test suites and the command line for
//! `actlog-core`.

pub mod cli;
pub mod fixtures;
pub mod expect;
pub mod format;
pub mod oracle;
pub mod properties;
pub mod random;
pub mod report;
pub mod selftest;
