//! Figure panels. Each panel is a handful of sweeps in one temperature
//! regime, written as a CSV (the sweep columns with a leading `series`
//! column) and an SVG line plot.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::config::{Output, RunConfig, TimeGrid, VariantKind};
use crate::plot::{Plot, Series};
use crate::sweep::{self, Row, HEADER};
use crate::{LabError, Result};

/// Inverse temperature of the low-temperature panels (`βω_c ∼ 1`).
pub const BETA_LOW_T: f64 = 1.0;
/// Inverse temperature of the high-temperature panels (`βω_c ≪ 1`).
pub const BETA_HIGH_T: f64 = 0.05;
/// Separations overlaid in the fidelity-versus-separation panels.
pub const SEPARATIONS: [f64; 4] = [0.5, 1.0, 2.0, 5.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Panel {
    Fig1a,
    Fig1b,
    Fig1c,
    Fig1d,
    Fig2a,
    Fig2b,
    Fig2c,
    Fig2d,
}

impl Panel {
    pub const ALL: [Panel; 8] =
        [Panel::Fig1a, Panel::Fig1b, Panel::Fig1c, Panel::Fig1d, Panel::Fig2a, Panel::Fig2b, Panel::Fig2c, Panel::Fig2d];

    pub fn name(self) -> &'static str {
        match self {
            Panel::Fig1a => "fig1a",
            Panel::Fig1b => "fig1b",
            Panel::Fig1c => "fig1c",
            Panel::Fig1d => "fig1d",
            Panel::Fig2a => "fig2a",
            Panel::Fig2b => "fig2b",
            Panel::Fig2c => "fig2c",
            Panel::Fig2d => "fig2d",
        }
    }

    fn low_temperature(self) -> bool {
        matches!(self, Panel::Fig1a | Panel::Fig1c | Panel::Fig2a | Panel::Fig2c)
    }

    /// The panel's regime on top of the defaults: temperature, a `[0, 80]`
    /// grid and closed forms only. Command-line overrides go on top of this.
    pub fn base_config(self) -> RunConfig {
        let mut cfg = RunConfig {
            t_grid: TimeGrid { t_min: 0.0, t_max: 80.0, n_points: 161 },
            oracles: false,
            ..RunConfig::default()
        };
        cfg.bath.beta = if self.low_temperature() { BETA_LOW_T } else { BETA_HIGH_T };
        cfg.bath.separation = 1.0;
        cfg
    }

    fn title(self, cfg: &RunConfig) -> String {
        let what = match self {
            Panel::Fig1a | Panel::Fig1b => "negativity and discord",
            Panel::Fig1c | Panel::Fig1d => "correlated vs uncorrelated vs Markovian",
            Panel::Fig2a | Panel::Fig2b => "average fidelity for several s",
            Panel::Fig2c | Panel::Fig2d => "fidelity, negativity, discord",
        };
        format!("{}: {what}, beta = {}", self.name(), cfg.bath.beta)
    }
}

impl FromStr for Panel {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        Panel::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| LabError::config(format!("unknown panel '{s}' (expected fig1a..fig1d, fig2a..fig2d)")))
    }
}

#[derive(Debug, Clone, Copy)]
enum Quantity {
    Negativity,
    Discord,
    Fidelity,
}

impl Quantity {
    fn output(self) -> Output {
        match self {
            Quantity::Negativity => Output::Negativity,
            Quantity::Discord => Output::Discord,
            Quantity::Fidelity => Output::Fidelity,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Quantity::Negativity => "N",
            Quantity::Discord => "Q",
            Quantity::Fidelity => "F_av",
        }
    }

    /// Closed form where one exists, the oracle otherwise.
    fn pick(self, row: &Row) -> Option<f64> {
        match self {
            Quantity::Negativity => row.negativity_paper,
            Quantity::Discord => row.discord_closed.or(row.discord_oracle),
            Quantity::Fidelity => row.fav_closed,
        }
    }
}

/// One curve of a panel: the configuration it was swept with and the
/// quantity drawn from it.
struct Curve {
    label: String,
    cfg: RunConfig,
    quantities: Vec<Quantity>,
}

fn curves(panel: Panel, base: &RunConfig) -> Vec<Curve> {
    let with = |f: &dyn Fn(&mut RunConfig), quantities: &[Quantity]| {
        let mut cfg = base.clone();
        f(&mut cfg);
        cfg.outputs = quantities.iter().map(|q| q.output()).collect();
        // Without α = 1/2 the discord has no closed form, so the search runs.
        if quantities.iter().any(|q| matches!(q, Quantity::Discord)) && !cfg.bath.is_symmetric() {
            cfg.oracles = true;
        }
        (cfg, quantities.to_vec())
    };
    match panel {
        Panel::Fig1a | Panel::Fig1b => {
            let (cfg, quantities) = with(&|c| c.variant = VariantKind::Correlated, &[Quantity::Negativity, Quantity::Discord]);
            vec![Curve { label: String::new(), cfg, quantities }]
        }
        Panel::Fig1c | Panel::Fig1d => [
            (VariantKind::Correlated, "correlated"),
            (VariantKind::Uncorrelated, "uncorrelated"),
            (VariantKind::Markovian, "markovian"),
        ]
        .into_iter()
        .map(|(v, name)| {
            let (cfg, quantities) = with(&|c| c.variant = v, &[Quantity::Negativity, Quantity::Discord]);
            Curve { label: name.to_string(), cfg, quantities }
        })
        .collect(),
        Panel::Fig2a | Panel::Fig2b => SEPARATIONS
            .into_iter()
            .map(|s| {
                let (cfg, quantities) = with(&|c| c.bath.separation = s, &[Quantity::Fidelity]);
                Curve { label: format!("s={s}"), cfg, quantities }
            })
            .collect(),
        Panel::Fig2c | Panel::Fig2d => {
            let (cfg, quantities) = with(
                &|c| c.variant = VariantKind::Correlated,
                &[Quantity::Fidelity, Quantity::Negativity, Quantity::Discord],
            );
            vec![Curve { label: String::new(), cfg, quantities }]
        }
    }
}

/// A rendered panel.
#[derive(Debug, Clone)]
pub struct Figure {
    pub panel: Panel,
    pub csv: String,
    pub plot: Plot,
    /// Named series `(label, points)` as drawn.
    pub series: Vec<Series>,
    pub failed_rows: usize,
    pub total_rows: usize,
}

impl Figure {
    pub fn series(&self, label: &str) -> Option<&Series> {
        self.series.iter().find(|s| s.label == label)
    }
}

fn series_label(curve: &str, q: Quantity) -> String {
    if curve.is_empty() {
        q.label().to_string()
    } else {
        format!("{} {curve}", q.label())
    }
}

/// Computes every curve of `panel` starting from `base`.
pub fn render(panel: Panel, base: &RunConfig) -> Result<Figure> {
    let mut csv = format!("series,{HEADER}\n");
    let mut series = Vec::new();
    let (mut failed_rows, mut total_rows) = (0, 0);
    for curve in curves(panel, base) {
        let (grid, sweep) = sweep::run(&curve.cfg)?;
        failed_rows += sweep.failed();
        total_rows += grid.len();
        let name = if curve.label.is_empty() { "main" } else { curve.label.as_str() };
        for line in sweep.to_csv(&grid).lines().skip(1) {
            csv.push_str(name);
            csv.push(',');
            csv.push_str(line);
            csv.push('\n');
        }
        for &q in &curve.quantities {
            let points = sweep
                .rows
                .iter()
                .filter_map(|r| r.as_ref().ok())
                .filter_map(|r| q.pick(r).map(|v| (r.t, v)))
                .collect();
            series.push(Series { label: series_label(&curve.label, q), points });
        }
    }
    let plot = Plot {
        title: panel.title(base),
        x_label: "t".into(),
        y_label: "value".into(),
        series: series.clone(),
    };
    Ok(Figure { panel, csv, plot, series, failed_rows, total_rows })
}

/// Renders `panel` and writes `<out_dir>/<panel>.csv` and `.svg`. Returns
/// the paths written.
pub fn write(panel: Panel, base: &RunConfig, out_dir: &Path) -> Result<(PathBuf, PathBuf)> {
    let fig = render(panel, base)?;
    fs::create_dir_all(out_dir).map_err(|e| LabError::io(out_dir, e))?;
    let csv_path = out_dir.join(format!("{}.csv", panel.name()));
    let svg_path = out_dir.join(format!("{}.svg", panel.name()));
    fs::write(&csv_path, &fig.csv).map_err(|e| LabError::io(&csv_path, e))?;
    fs::write(&svg_path, fig.plot.to_svg()).map_err(|e| LabError::io(&svg_path, e))?;
    if fig.failed_rows > 0 {
        return Err(LabError::RowsFailed { failed: fig.failed_rows, total: fig.total_rows });
    }
    Ok((csv_path, svg_path))
}
