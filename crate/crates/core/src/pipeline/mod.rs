//! End-to-end operations behind the command line: analysis, bounded
//! soundness checking and random workload profiling.

mod analyze;
mod profile;

pub use analyze::{analyze, analyze_problem, debug_dump, Analysis, AnalyzeConfig, AnalyzeError, Problem};
pub use profile::{profile, random_problem, ProfileConfig, ProfileReport, ProfileSample, SizeClass};
