//! Library behind the `nilcap` binary: the algebra file format, builtin
//! expressions, analysis reports and the published-claims table.

pub mod claims;
pub mod expr;
pub mod file;
pub mod report;
