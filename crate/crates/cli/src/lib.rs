//! Command-line front end for `hyperop-core`: operator and corpus file I/O,
//! seeded corpus generation, and built-in verification scenarios.

pub mod commands;
pub mod corpus;
pub mod scenarios;

pub use commands::{run, Cli};
