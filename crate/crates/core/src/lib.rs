//! Toolkit for Ramsey and Gallai-Ramsey computations on edge-colored
//! complete graphs: pattern detection, construction families, closed-form
//! evaluators, desk-scale exhaustive search and structure classifiers.

pub mod coloring;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod naive;
pub mod patterns;
pub mod search;
pub mod selftest;
pub mod structure;

pub use coloring::{read_coloring, write_coloring, BitGraph, Color, ColorClass, EdgeColoring, Embedding};
pub use error::{Error, Result};
pub use formulas::ValueOrInterval;
pub use patterns::PatternSpec;
