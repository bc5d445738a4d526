//! Command-line driver, generators and reporting around `vc4-core`.

pub mod cli;
pub mod dimacs;
pub mod generate;
pub mod jsonl;
pub mod report;
