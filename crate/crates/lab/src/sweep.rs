//! Time sweeps: one CSV row of decoherence functions, correlations and
//! fidelities per grid point.

use std::fs;

use rayon::prelude::*;

use qdeph_core::bath::{decoherence_state, BathParams};
use qdeph_core::channel::{channel_state, ChannelState, ChannelVariant};
use qdeph_core::correlations::{
    discord_closed, discord_from_coherence, discord_oracle, negativity_closed, negativity_from_coherence,
    negativity_ppt,
};
use qdeph_core::teleport::{
    average_fidelity_oracle, fav_closed, fav_from_coherence, input_dephasing_oracle, NoisePlacement,
};

use crate::config::{Output, RunConfig};
use crate::format::g12;
use crate::{LabError, Result};

pub const HEADER: &str = "t,gamma_s,zeta,gamma_ic,kappa_re,kappa_im,negativity_paper,negativity_ppt,\
discord_closed,discord_oracle,fav_closed,fav_oracle";

/// One grid point. `None` cells are written empty.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Row {
    pub t: f64,
    pub gamma_s: Option<f64>,
    pub zeta: Option<f64>,
    pub gamma_ic: Option<f64>,
    pub kappa_re: Option<f64>,
    pub kappa_im: Option<f64>,
    pub negativity_paper: Option<f64>,
    pub negativity_ppt: Option<f64>,
    pub discord_closed: Option<f64>,
    pub discord_oracle: Option<f64>,
    pub fav_closed: Option<f64>,
    pub fav_oracle: Option<f64>,
}

impl Row {
    pub fn cells(&self) -> [Option<f64>; 11] {
        [
            self.gamma_s,
            self.zeta,
            self.gamma_ic,
            self.kappa_re,
            self.kappa_im,
            self.negativity_paper,
            self.negativity_ppt,
            self.discord_closed,
            self.discord_oracle,
            self.fav_closed,
            self.fav_oracle,
        ]
    }

    fn render(&self, out: &mut String) {
        out.push_str(&g12(self.t));
        for cell in self.cells() {
            out.push(',');
            if let Some(v) = cell {
                out.push_str(&g12(v));
            }
        }
        out.push('\n');
    }
}

/// Evaluates every requested column at time `t`.
pub fn compute_row(cfg: &RunConfig, t: f64) -> qdeph_core::Result<Row> {
    let p = &cfg.bath;
    let q = &cfg.quadrature;
    let variant = cfg.channel_variant();
    let wants = |o: Output| cfg.outputs.contains(&o);
    let d = decoherence_state(p, q, t)?;
    let ch = channel_state(p, q, variant, t)?;
    let correlated = matches!(variant, ChannelVariant::Correlated);
    let symmetric = p.is_symmetric();
    let mut row = Row { t, ..Row::default() };

    if wants(Output::DecoherenceFunctions) {
        row.gamma_s = Some(d.gamma_s);
        row.zeta = Some(d.zeta);
        row.gamma_ic = Some(d.gamma_ic);
        row.kappa_re = Some(ch.kappa_eff.re);
        row.kappa_im = Some(ch.kappa_eff.im);
    }
    if wants(Output::Negativity) {
        row.negativity_paper = Some(if correlated {
            negativity_closed(p, &d)
        } else {
            negativity_from_coherence(p.alpha, ch.kappa_eff)
        });
        row.negativity_ppt = Some(negativity_ppt(&ch.rho)?);
    }
    if wants(Output::Discord) {
        if symmetric {
            row.discord_closed = Some(if correlated { discord_closed(&d) } else { discord_from_coherence(ch.kappa_eff.norm()) });
        }
        if cfg.oracles {
            row.discord_oracle = Some(discord_oracle(&ch.rho)?);
        }
    }
    if wants(Output::Fidelity) {
        let (closed, oracle) = fidelity_pair(cfg, p, &d, &ch, t)?;
        row.fav_closed = Some(closed);
        row.fav_oracle = oracle;
    }
    Ok(row)
}

fn fidelity_pair(
    cfg: &RunConfig,
    p: &BathParams,
    d: &qdeph_core::bath::DecoherenceState,
    ch: &ChannelState,
    t: f64,
) -> qdeph_core::Result<(f64, Option<f64>)> {
    match cfg.placement {
        NoisePlacement::InputQubitDecoheres => {
            let closed = fav_closed(NoisePlacement::InputQubitDecoheres, p, d)?;
            let oracle = if cfg.oracles {
                Some(input_dephasing_oracle(p, &cfg.quadrature, t, cfg.sphere_order)?.value)
            } else {
                None
            };
            Ok((closed, oracle))
        }
        placement => {
            // Noise on Alice's half or on the shared pair leaves the same
            // two-qubit resource, so both use the channel oracle.
            let closed = if matches!(cfg.channel_variant(), ChannelVariant::Correlated) && p.is_symmetric() {
                fav_closed(placement, p, d)?
            } else {
                fav_from_coherence(p.alpha, ch.kappa_eff)
            };
            if !cfg.oracles {
                return Ok((closed, None));
            }
            Ok((closed, Some(average_fidelity_oracle(ch, cfg.sphere_order)?.value)))
        }
    }
}

/// Result of a sweep held in memory.
#[derive(Debug, Clone)]
pub struct Sweep {
    pub rows: Vec<std::result::Result<Row, qdeph_core::Error>>,
}

impl Sweep {
    pub fn failed(&self) -> usize {
        self.rows.iter().filter(|r| r.is_err()).count()
    }

    /// CSV text. A failed row keeps its `t` with every other cell empty.
    pub fn to_csv(&self, grid: &[f64]) -> String {
        let mut out = String::with_capacity(64 * (self.rows.len() + 1));
        out.push_str(HEADER);
        out.push('\n');
        for (t, row) in grid.iter().zip(&self.rows) {
            match row {
                Ok(r) => r.render(&mut out),
                Err(_) => Row { t: *t, ..Row::default() }.render(&mut out),
            }
        }
        out
    }
}

/// Computes every row of the configured grid in parallel, in grid order.
pub fn run(cfg: &RunConfig) -> Result<(Vec<f64>, Sweep)> {
    cfg.validate()?;
    let grid = cfg.t_grid.points();
    let rows = grid.par_iter().map(|&t| compute_row(cfg, t)).collect();
    Ok((grid, Sweep { rows }))
}

/// Runs the sweep and writes the CSV to `cfg.output_path`. Rows that fail
/// are still written; the error reports how many.
pub fn run_to_file(cfg: &RunConfig) -> Result<()> {
    let (grid, sweep) = run(cfg)?;
    let csv = sweep.to_csv(&grid);
    fs::write(&cfg.output_path, csv).map_err(|e| LabError::io(&cfg.output_path, e))?;
    for (t, row) in grid.iter().zip(&sweep.rows) {
        if let Err(e) = row {
            eprintln!("warning: t = {t}: {e}");
        }
    }
    match sweep.failed() {
        0 => Ok(()),
        failed => Err(LabError::RowsFailed { failed, total: grid.len() }),
    }
}
