//! Group constructors, manifests, the verification runner and report types
//! behind the `codegree` command.

pub mod error;
pub mod gens;
pub mod manifest;
pub mod report;
pub mod spec;

pub use error::{CliError, Result};
pub use manifest::{default_manifest, parse_manifest, read_manifest, ManifestEntry};
pub use report::{run_suite, GroupRecord, RunOptions, RunReport};
pub use spec::GroupSpec;
