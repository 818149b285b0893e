//! Instance generation, text formats and the benchmark harness.

pub mod bench;
pub mod generate;
pub mod io;

pub use bench::{paired_check, run_benchmark, run_points, BenchRecord, BenchRun, BenchSummary};
pub use generate::{generate_stable_set, GenConfig};
