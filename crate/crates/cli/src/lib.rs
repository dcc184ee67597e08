//! Command-line front end for `fideal-core`: ideal parsing and rendering plus one
//! subcommand per library operation.

pub mod commands;
pub mod document;

pub use commands::{parse_fvector, run, write_census, Cli, CliError};
pub use document::{parse_ideal, parse_lines, render_record, render_text, IdealDocument, ParseError, Parsed};
