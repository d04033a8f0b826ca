//! Configuration, CSV output, parallel execution and acceptance checks for
//! the `mmsec-core` simulator.

pub mod config;
pub mod output;
pub mod parallel;
pub mod run;
pub mod validation;

pub use config::{load_config, parse_config, RunConfig};
pub use output::{read_table, write_table, write_table_atomic, ResultTable};
pub use parallel::Parallel;
pub use run::run;
