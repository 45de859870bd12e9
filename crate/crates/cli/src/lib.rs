//! The `supertrop` command-line tool: matrix file formats, command dispatch,
//! cross-validation and timing drivers.

pub mod bench;
pub mod check;
mod commands;
pub mod document;
pub mod report;

pub use commands::{run_command, Execution, ExitStatus};
pub use document::{parse_matrix, MatrixDocument, ParseError, SourceFormat};
pub use report::RunReport;
