//! File formats, configuration and verification sweeps behind the `bsnum`
//! command-line tool.

pub mod config;
pub mod grid;
pub mod polys;
pub mod report;
pub mod suites;

pub use config::{OutputFormat, Overrides, SweepConfig};
pub use grid::{Grid, TableKind};
pub use polys::PolyFamily;
pub use suites::{Claim, Suite};
