//! File formats and input parsing for the `nullpart` command-line tool.
//!
//! The canonical machine format is JSON; every number that can outgrow a
//! machine word (weights, determinants, coefficients) travels as a decimal
//! string, so files stay exact at any magnitude. Serialization is
//! deterministic: equal inputs produce byte-identical files.

pub mod formats;
pub mod input;
