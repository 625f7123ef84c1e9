//! File formats, reports and the command-line front end for `kr_core`.

pub mod cli;
pub mod document;
pub mod report;
