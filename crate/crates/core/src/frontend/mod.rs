//! The `.lie` structure-constant format, JSON reports and the command line.

pub mod cli;
pub mod dsl;
pub mod json;

pub use dsl::{emit, parse, AlgebraDocument, BracketLine, ParseError, ParseErrorKind, Span};
pub use json::{emit_json, ClassTReport, CompareReport, InvariantsReport};
