//! Command-line front end: representation expressions, graded output in
//! text and JSON, and subcommand dispatch.

pub mod app;
pub mod output;
pub mod repexpr;

pub use app::{run, Outcome, EXIT_INPUT, EXIT_OK, EXIT_SOLVER};
pub use output::Graded;
pub use repexpr::{parse_rep, ParseError, RepExpr};
