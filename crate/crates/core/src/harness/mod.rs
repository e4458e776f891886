//! Instance files, fixtures, the corpus and the law-checking engine.

pub mod corpus;
pub mod engine;
pub mod fixtures;
pub mod format;
