//! Command-line front end: presentation files, reports and the
//! reproduction table.

pub mod commands;
pub mod dsl;
pub mod report;
pub mod reproduce;
pub mod sample;
