//! Library behind the `tiescope` command: argument parsing and dispatch,
//! profile constructions, and self-check suites.

pub mod commands;
pub mod construct;
pub mod verify;

pub use commands::{exit_code, run, Cli, Outcome};
