//! Command-line front end for the `blockalg` crate.

pub mod commands;
pub mod expr;

pub use commands::{CliError, Output};
pub use expr::{parse_expr, parse_input, Expr, Input, ParseError};
