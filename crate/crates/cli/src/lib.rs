//! Library side of the `midconv` command-line tool: the document format,
//! command dispatch and the invariant checker.

pub mod check;
pub mod commands;
pub mod document;
