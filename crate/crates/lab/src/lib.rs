//! Runner around `qdeph-core`: configuration files, CSV sweeps, figure
//! panels with SVG plots, and the oracle verification report.

pub mod config;
mod error;
pub mod figure;
pub mod format;
pub mod plot;
pub mod sweep;
pub mod verify;

pub use error::{LabError, Result};
