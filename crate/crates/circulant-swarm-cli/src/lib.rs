//! Library behind the `swarmsim` binary: scenario configs, the runner,
//! trajectory CSV, SVG plots and text reports.

pub mod config;
pub mod csv;
pub mod error;
pub mod report;
pub mod scenario;
pub mod svg;

pub use config::{parse_config, Scenario, ScenarioConfig};
pub use error::CliError;
pub use scenario::{run_scenario, Frame, Trajectory};
pub use svg::PlotStyle;
