//! Support code for the `rpgraph` binary: input loading, shipped data
//! tables and the `verify paper` suites.

pub mod harness;
pub mod input;
pub mod tables;
