//! Verification harness for square Hamiltonian cycle results, and the
//! pieces of the `hamsquare` command-line tool.

pub mod config;
pub mod harness;
pub mod io;
pub mod report;

pub use config::RunConfig;
pub use harness::{run, Session, Target};
pub use report::{Status, VerificationReport};
