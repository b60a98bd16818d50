//! IO companion to `hexatlas-core`: JSON data-transfer types, the text
//! syntax for degenerating length families, and helpers shared by the CLI
//! and its tests.

pub mod formats;
pub mod seqtext;

pub use formats::{parse_rational, parse_triple, parse_weights};
pub use seqtext::parse_sequence_spec;
