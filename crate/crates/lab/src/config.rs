//! Run configuration: a flat `key = value` file with dotted keys, overridden
//! by `--key value` flags of the same names.
//!
//! ```text
//! # bath
//! bath.coupling = 1.0
//! bath.beta = 1.0
//! bath.omega0 = 1.0
//! bath.s = 1.0
//! bath.alpha = 0.5
//! quadrature.omega_max = 6.5
//! quadrature.panels_per_period = 8
//! quadrature.abs_tol = 1e-12
//! variant = correlated            # correlated | uncorrelated | markovian
//! variant.markov_rate = 4.0       # optional, defaults to 4A/β
//! placement = channel             # channel | alice | input
//! t_grid.t_min = 0
//! t_grid.t_max = 10
//! t_grid.n_points = 11
//! outputs = negativity, discord, fidelity, decoherence_functions
//! output_path = sweep.csv
//! oracles = true                  # false skips the brute-force columns
//! oracle.sphere_order = 16
//! ```

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use qdeph_core::bath::{BathParams, QuadratureSpec};
use qdeph_core::channel::{markov_rate_default, ChannelVariant};
use qdeph_core::teleport::NoisePlacement;

use crate::{LabError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Output {
    Negativity,
    Discord,
    Fidelity,
    DecoherenceFunctions,
}

impl Output {
    pub const ALL: [Output; 4] = [Output::Negativity, Output::Discord, Output::Fidelity, Output::DecoherenceFunctions];

    fn parse(s: &str) -> Result<Self> {
        match s {
            "negativity" => Ok(Output::Negativity),
            "discord" => Ok(Output::Discord),
            "fidelity" => Ok(Output::Fidelity),
            "decoherence_functions" => Ok(Output::DecoherenceFunctions),
            other => Err(LabError::config(format!("unknown output '{other}'"))),
        }
    }
}

/// Variant as written in the config; the Markovian rate is resolved against
/// the bath parameters at run time unless given explicitly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VariantKind {
    Correlated,
    Uncorrelated,
    Markovian,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    pub t_min: f64,
    pub t_max: f64,
    pub n_points: usize,
}

impl TimeGrid {
    pub fn points(&self) -> Vec<f64> {
        let step = (self.t_max - self.t_min) / (self.n_points - 1) as f64;
        (0..self.n_points)
            .map(|k| if k + 1 == self.n_points { self.t_max } else { self.t_min + step * k as f64 })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub bath: BathParams,
    pub quadrature: QuadratureSpec,
    pub variant: VariantKind,
    pub markov_rate: Option<f64>,
    pub placement: NoisePlacement,
    pub t_grid: TimeGrid,
    pub outputs: BTreeSet<Output>,
    pub output_path: PathBuf,
    /// Starting order of the sphere-average oracles.
    pub sphere_order: usize,
    /// Whether to fill the `discord_oracle` and `fav_oracle` columns.
    pub oracles: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            bath: BathParams::default(),
            quadrature: QuadratureSpec::default(),
            variant: VariantKind::Correlated,
            markov_rate: None,
            placement: NoisePlacement::ChannelDecoheres,
            t_grid: TimeGrid { t_min: 0.0, t_max: 10.0, n_points: 11 },
            outputs: Output::ALL.into_iter().collect(),
            output_path: PathBuf::from("sweep.csv"),
            sphere_order: 16,
            oracles: true,
        }
    }
}

fn parse_f64(key: &str, value: &str) -> Result<f64> {
    value.parse::<f64>().map_err(|_| LabError::config(format!("{key}: '{value}' is not a number")))
}

fn parse_usize(key: &str, value: &str) -> Result<usize> {
    value.parse::<usize>().map_err(|_| LabError::config(format!("{key}: '{value}' is not a nonnegative integer")))
}

impl RunConfig {
    /// Defaults overlaid with the contents of a config file.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| LabError::io(path, e))?;
        let mut cfg = Self::default();
        cfg.apply_text(&text)?;
        Ok(cfg)
    }

    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| LabError::config(format!("line {}: expected 'key = value'", lineno + 1)))?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    /// Sets one dotted key.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "bath.coupling" | "bath.coupling_A" | "bath.A" => self.bath.coupling = parse_f64(key, value)?,
            "bath.beta" => self.bath.beta = parse_f64(key, value)?,
            "bath.omega0" => self.bath.omega0 = parse_f64(key, value)?,
            "bath.s" => self.bath.separation = parse_f64(key, value)?,
            "bath.alpha" => self.bath.alpha = parse_f64(key, value)?,
            "quadrature.omega_max" => self.quadrature.omega_max = parse_f64(key, value)?,
            "quadrature.panels_per_period" => self.quadrature.panels_per_period = parse_usize(key, value)?,
            "quadrature.abs_tol" => self.quadrature.abs_tol = parse_f64(key, value)?,
            "variant" => {
                self.variant = match value {
                    "correlated" => VariantKind::Correlated,
                    "uncorrelated" => VariantKind::Uncorrelated,
                    "markovian" => VariantKind::Markovian,
                    other => return Err(LabError::config(format!("unknown variant '{other}'"))),
                }
            }
            "variant.markov_rate" => self.markov_rate = Some(parse_f64(key, value)?),
            "placement" => {
                self.placement = match value {
                    "channel" => NoisePlacement::ChannelDecoheres,
                    "alice" => NoisePlacement::AliceQubitsDecohere,
                    "input" => NoisePlacement::InputQubitDecoheres,
                    other => return Err(LabError::config(format!("unknown placement '{other}'"))),
                }
            }
            "t_grid.t_min" => self.t_grid.t_min = parse_f64(key, value)?,
            "t_grid.t_max" => self.t_grid.t_max = parse_f64(key, value)?,
            "t_grid.n_points" => self.t_grid.n_points = parse_usize(key, value)?,
            "outputs" => {
                self.outputs = value
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(Output::parse)
                    .collect::<Result<_>>()?
            }
            "output_path" => self.output_path = PathBuf::from(value),
            "oracle.sphere_order" => self.sphere_order = parse_usize(key, value)?,
            "oracles" => {
                self.oracles = match value {
                    "true" => true,
                    "false" => false,
                    other => return Err(LabError::config(format!("oracles: '{other}' is not true or false"))),
                }
            }
            other => return Err(LabError::config(format!("unknown key '{other}'"))),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.bath.validate().map_err(|e| LabError::config(e.to_string()))?;
        self.quadrature.validate().map_err(|e| LabError::config(e.to_string()))?;
        if let Some(rate) = self.markov_rate {
            if !(rate >= 0.0 && rate.is_finite()) {
                return Err(LabError::config("variant.markov_rate must be finite and nonnegative"));
            }
        }
        let g = &self.t_grid;
        if !(g.t_min >= 0.0 && g.t_min.is_finite()) {
            return Err(LabError::config("t_grid.t_min must be finite and nonnegative"));
        }
        if !(g.t_max > g.t_min && g.t_max.is_finite()) {
            return Err(LabError::config("t_grid.t_max must exceed t_grid.t_min"));
        }
        if g.n_points < 2 {
            return Err(LabError::config("t_grid.n_points must be at least 2"));
        }
        if self.outputs.is_empty() {
            return Err(LabError::config("outputs must not be empty"));
        }
        if self.sphere_order < qdeph_core::teleport::MIN_SPHERE_ORDER {
            return Err(LabError::config("oracle.sphere_order must be at least 16"));
        }
        Ok(())
    }

    pub fn channel_variant(&self) -> ChannelVariant {
        match self.variant {
            VariantKind::Correlated => ChannelVariant::Correlated,
            VariantKind::Uncorrelated => ChannelVariant::Uncorrelated,
            VariantKind::Markovian => ChannelVariant::Markovian {
                rate: self.markov_rate.unwrap_or_else(|| markov_rate_default(&self.bath)),
            },
        }
    }
}

/// Splits `--key value` / `--key=value` pairs into `(key, value)`.
pub fn parse_overrides(args: &[String]) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let Some(flag) = arg.strip_prefix("--") else {
            return Err(LabError::config(format!("unexpected argument '{arg}'")));
        };
        if let Some((k, v)) = flag.split_once('=') {
            out.push((k.to_string(), v.to_string()));
        } else {
            let v = it.next().ok_or_else(|| LabError::config(format!("--{flag} needs a value")))?;
            out.push((flag.to_string(), v.clone()));
        }
    }
    Ok(out)
}
