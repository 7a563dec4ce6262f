//! Oracle adjudication. Every closed form is checked against an independent
//! computation (partial transpose, brute-force discord search, explicit
//! teleportation averaged over the sphere) or against a known limit, and the
//! results go into a plain-text report.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use qdeph_core::bath::{decoherence_state, BathParams, DecoherenceState, QuadratureSpec};
use qdeph_core::channel::{channel_state, ChannelVariant};
use qdeph_core::correlations::{self, discord_oracle, negativity_ppt};
use qdeph_core::teleport::{self, converged_sphere_average, input_dephasing_oracle, run_protocol, NoisePlacement};

use crate::config::RunConfig;
use crate::sweep;

pub const BETAS: [f64; 3] = [0.05, 1.0, 10.0];
pub const SEPARATIONS: [f64; 3] = [0.0, 1.0, 5.0];
pub const COUPLINGS: [f64; 4] = [0.0, 0.5, 1.0, 2.0];
/// All time grids below run over `[0, T_MAX]`.
pub const T_MAX: f64 = 80.0;

/// The closed forms under test. Swapping one for a corrupted version must
/// make the matching check fail.
#[derive(Clone, Copy)]
pub struct Formulas {
    pub negativity: fn(&BathParams, &DecoherenceState) -> f64,
    pub discord: fn(&DecoherenceState) -> f64,
    pub fav: fn(NoisePlacement, &BathParams, &DecoherenceState) -> qdeph_core::Result<f64>,
}

impl Default for Formulas {
    fn default() -> Self {
        Self {
            negativity: correlations::negativity_closed,
            discord: correlations::discord_closed,
            fav: teleport::fav_closed,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub id: &'static str,
    pub name: &'static str,
    pub mandatory: bool,
    pub passed: bool,
    pub tolerance: f64,
    /// The measured deviation, or the measured margin for threshold checks.
    pub deviation: f64,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
    pub detail: String,
}

impl Check {
    pub fn line(&self) -> String {
        let status = match (self.mandatory, self.passed) {
            (true, true) => "PASS",
            (true, false) => "FAIL",
            (false, true) => "INFO-AGREE",
            (false, false) => "INFO-DIFFER",
        };
        let budget = self.budget.map(|b| format!(" budget={}s", b.as_secs_f64())).unwrap_or_default();
        format!(
            "{status} [{}] {}: tol={:e} deviation={:.3e} time={:.3}s{budget} | {}",
            self.id,
            self.name,
            self.tolerance,
            self.deviation,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.mandatory && !c.passed).count()
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn render(&self) -> String {
        let mut out = String::from("qdeph verification report\n");
        for c in &self.checks {
            out.push_str(&c.line());
            out.push('\n');
        }
        let mandatory = self.checks.iter().filter(|c| c.mandatory).count();
        let _ = writeln!(out, "summary: {} of {mandatory} mandatory checks passed", mandatory - self.failures());
        out
    }
}

pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| if k + 1 == n { b } else { a + (b - a) * k as f64 / (n - 1) as f64 }).collect()
}

fn params(coupling: f64, beta: f64, separation: f64) -> BathParams {
    BathParams { coupling, beta, separation, ..BathParams::default() }
}

/// Grid of `(β, s, t)` triples for the oracle comparisons.
fn grid(betas: &[f64], seps: &[f64], n_t: usize) -> Vec<(f64, f64, f64)> {
    let ts = linspace(0.0, T_MAX, n_t);
    let mut out = Vec::new();
    for &b in betas {
        for &s in seps {
            out.extend(ts.iter().map(|&t| (b, s, t)));
        }
    }
    out
}

fn max_of(values: impl Iterator<Item = f64>) -> f64 {
    values.fold(0.0, |m, v| if v.is_nan() || m.is_nan() { f64::NAN } else { m.max(v) })
}

/// Runs `f`, timing it, and turns its `(deviation, passed, detail)` into a
/// check. A numerical error inside `f` fails the check with the message.
fn timed<F>(id: &'static str, name: &'static str, tolerance: f64, budget: Option<f64>, mandatory: bool, f: F) -> Check
where
    F: FnOnce() -> qdeph_core::Result<(f64, bool, String)>,
{
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let budget = budget.map(Duration::from_secs_f64);
    let within_budget = budget.is_none_or(|b| elapsed <= b);
    let (deviation, passed, mut detail) = match outcome {
        Ok(v) => v,
        Err(e) => (f64::NAN, false, format!("error: {e}")),
    };
    if !within_budget {
        detail.push_str(" (over runtime budget)");
    }
    Check { id, name, mandatory, passed: passed && within_budget, tolerance, deviation, elapsed, budget, detail }
}

fn q() -> QuadratureSpec {
    QuadratureSpec::default()
}

pub fn initial_limits(f: &Formulas) -> Check {
    let tol = 1e-12;
    timed("1", "initial-state limits at t = 0", tol, Some(1.0), true, || {
        let mut dev: f64 = 0.0;
        let mut n = 0;
        for &a in &COUPLINGS {
            for &b in &BETAS {
                for &s in &SEPARATIONS {
                    let p = params(a, b, s);
                    let d = decoherence_state(&p, &q(), 0.0)?;
                    let devs = [
                        (d.kappa - qdeph_core::Complex64::new(1.0, 0.0)).norm(),
                        d.gamma_s.abs(),
                        ((f.negativity)(&p, &d) - 1.0).abs(),
                        ((f.discord)(&d) - 1.0).abs(),
                        ((f.fav)(NoisePlacement::ChannelDecoheres, &p, &d)? - 1.0).abs(),
                    ];
                    dev = dev.max(max_of(devs.into_iter()));
                    n += 1;
                }
            }
        }
        Ok((dev, dev <= tol, format!("{n} parameter sets; kappa, gamma_s, N, Q, F_av")))
    })
}

pub fn negativity_equivalence(f: &Formulas) -> Check {
    let tol = 1e-10;
    timed("2", "negativity closed form = 2 x partial-transpose negativity", tol, Some(10.0), true, || {
        let pts = grid(&BETAS, &SEPARATIONS, 50);
        let devs = pts
            .par_iter()
            .map(|&(b, s, t)| {
                let p = params(1.0, b, s);
                let d = decoherence_state(&p, &q(), t)?;
                let ch = channel_state(&p, &q(), ChannelVariant::Correlated, t)?;
                Ok(((f.negativity)(&p, &d) - 2.0 * negativity_ppt(&ch.rho)?).abs())
            })
            .collect::<qdeph_core::Result<Vec<f64>>>()?;
        let dev = max_of(devs.into_iter());
        Ok((dev, dev <= tol, format!("{} points", pts.len())))
    })
}

pub fn discord_equivalence(f: &Formulas) -> Check {
    let tol = 1e-6;
    timed("3", "discord closed form = brute-force measurement search", tol, Some(120.0), true, || {
        let pts = grid(&BETAS, &SEPARATIONS, 50);
        let devs = pts
            .par_iter()
            .map(|&(b, s, t)| {
                let p = params(1.0, b, s);
                let d = decoherence_state(&p, &q(), t)?;
                let ch = channel_state(&p, &q(), ChannelVariant::Correlated, t)?;
                Ok(((f.discord)(&d) - discord_oracle(&ch.rho)?).abs())
            })
            .collect::<qdeph_core::Result<Vec<f64>>>()?;
        let dev = max_of(devs.into_iter());
        Ok((dev, dev <= tol, format!("{} points, alpha = 1/2", pts.len())))
    })
}

pub fn teleport_equivalence(f: &Formulas) -> Check {
    let tol = 1e-8;
    timed("4", "teleportation fidelity closed form = sphere-averaged protocol", tol, Some(60.0), true, || {
        let pts = grid(&BETAS[..2], &SEPARATIONS, 30);
        let results = pts
            .par_iter()
            .map(|&(b, s, t)| {
                let p = params(1.0, b, s);
                let d = decoherence_state(&p, &q(), t)?;
                let ch = channel_state(&p, &q(), ChannelVariant::Correlated, t)?;
                let mut q_sum_dev: f64 = 0.0;
                let avg = converged_sphere_average(teleport::MIN_SPHERE_ORDER, |input| {
                    let r = run_protocol(input, &ch)?;
                    q_sum_dev = q_sum_dev.max((r.probabilities.iter().sum::<f64>() - 1.0).abs());
                    Ok(r.weighted_fidelity)
                })?;
                let closed = (f.fav)(NoisePlacement::ChannelDecoheres, &p, &d)?;
                Ok(((closed - avg.value).abs(), q_sum_dev))
            })
            .collect::<qdeph_core::Result<Vec<(f64, f64)>>>()?;
        let dev = max_of(results.iter().map(|r| r.0));
        let q_dev = max_of(results.iter().map(|r| r.1));
        let ok = dev <= tol && q_dev <= 1e-12;
        Ok((dev, ok, format!("{} points; max |sum Q_i - 1| = {q_dev:e} (tol 1e-12)", pts.len())))
    })
}

pub fn critical_temperature(f: &Formulas) -> Check {
    let tol = 1e-12;
    timed("5", "input-qubit noise: F_av = 2/3 at beta*omega0 = 2, below 2/3 when hot", tol, None, true, || {
        let ts = linspace(0.0, T_MAX, 30);
        let critical = params(1.0, 2.0, 1.0);
        let mut dev: f64 = 0.0;
        for &t in &ts {
            let d = decoherence_state(&critical, &q(), t)?;
            dev = dev.max(((f.fav)(NoisePlacement::InputQubitDecoheres, &critical, &d)? - 2.0 / 3.0).abs());
        }
        // The coherence factor dies within t ~ 0.2 when this hot, so the sign
        // check also scans a dense early grid.
        let hot = params(1.0, 0.01, 1.0);
        let (mut tested, mut violations) = (0, 0);
        for &t in ts.iter().chain(&linspace(0.0, 1.0, 101)) {
            let d = decoherence_state(&hot, &q(), t)?;
            if d.zeta0.cos() * (-d.gamma1).exp() > 0.01 {
                tested += 1;
                if (f.fav)(NoisePlacement::InputQubitDecoheres, &hot, &d)? >= 2.0 / 3.0 {
                    violations += 1;
                }
            }
        }
        let ok = dev <= tol && violations == 0 && tested > 0;
        Ok((dev, ok, format!("30 times at the critical point; beta*omega0 = 0.01: {tested} times with cos(zeta0) e^-gamma1 > 0.01, {violations} not below 2/3")))
    })
}

/// Oracle self-consistency for the input-qubit case, plus the informational
/// comparison against the closed form.
pub fn input_noise_adjudication(f: &Formulas) -> [Check; 2] {
    let ts = linspace(0.0, T_MAX, 30);
    let mut pts = Vec::new();
    for bw in [0.5, 2.0, 6.0] {
        pts.extend(ts.iter().map(|&t| (bw, t)));
    }
    let start = Instant::now();
    let results = pts
        .par_iter()
        .map(|&(bw, t)| {
            let p = params(1.0, bw, 1.0);
            let d = decoherence_state(&p, &q(), t)?;
            let oracle = input_dephasing_oracle(&p, &q(), t, teleport::MIN_SPHERE_ORDER)?;
            let closed = (f.fav)(NoisePlacement::InputQubitDecoheres, &p, &d)?;
            Ok((bw, t, oracle.delta, (oracle.value - closed).abs(), oracle.value, closed))
        })
        .collect::<qdeph_core::Result<Vec<_>>>();
    let elapsed = start.elapsed();
    match results {
        Ok(rows) => {
            let self_dev = max_of(rows.iter().map(|r| r.2));
            let worst = rows.iter().copied().fold((0.0, 0.0, 0.0, 0.0, 0.0, 0.0), |w, r| if r.3 > w.3 { r } else { w });
            [
                Check {
                    id: "6",
                    name: "input-qubit oracle grid-refinement self-consistency",
                    mandatory: true,
                    passed: self_dev < 1e-8,
                    tolerance: 1e-8,
                    deviation: self_dev,
                    elapsed,
                    budget: None,
                    detail: format!("{} points, beta*omega0 in {{0.5, 2, 6}}", rows.len()),
                },
                Check {
                    id: "6-info",
                    name: "input-qubit oracle vs closed form (informational)",
                    mandatory: false,
                    passed: worst.3 <= 1e-6,
                    tolerance: 1e-6,
                    deviation: worst.3,
                    elapsed,
                    budget: None,
                    detail: format!(
                        "largest gap at beta*omega0 = {}, t = {}: oracle {:.12}, closed form {:.12}",
                        worst.0, worst.1, worst.4, worst.5
                    ),
                },
            ]
        }
        Err(e) => {
            let fail = |id, name, mandatory| Check {
                id,
                name,
                mandatory,
                passed: false,
                tolerance: 1e-8,
                deviation: f64::NAN,
                elapsed,
                budget: None,
                detail: format!("error: {e}"),
            };
            [
                fail("6", "input-qubit oracle grid-refinement self-consistency", true),
                fail("6-info", "input-qubit oracle vs closed form (informational)", false),
            ]
        }
    }
}

pub fn fidelity_shape(f: &Formulas) -> Check {
    timed("7", "fidelity dips then saturates above 2/3 when cold, at 2/3 when hot", 0.01, Some(30.0), true, || {
        let ts = linspace(0.0, T_MAX, 161);
        let curve = |beta: f64| -> qdeph_core::Result<Vec<f64>> {
            let p = params(1.0, beta, 1.0);
            ts.par_iter()
                .map(|&t| (f.fav)(NoisePlacement::ChannelDecoheres, &p, &decoherence_state(&p, &q(), t)?))
                .collect()
        };
        let cold = curve(1.0)?;
        let hot = curve(0.05)?;
        let cold_end = cold[cold.len() - 1] - 2.0 / 3.0;
        let cold_min = cold.iter().copied().fold(f64::INFINITY, f64::min);
        let hot_end = (hot[hot.len() - 1] - 2.0 / 3.0).abs();
        let ok = cold_end > 0.01 && cold_min < cold[0] && hot_end < 0.01;
        Ok((
            hot_end,
            ok,
            format!("beta=1: F(80) - 2/3 = {cold_end:.6}, min F = {cold_min:.6}; beta=0.05: |F(80) - 2/3| = {hot_end:e}"),
        ))
    })
}

pub fn correlation_persistence(f: &Formulas) -> Check {
    timed("8", "correlated negativity and discord persist, Markovian decay", 0.01, Some(30.0), true, || {
        let p = params(1.0, 1.0, 1.0);
        let d = decoherence_state(&p, &q(), T_MAX)?;
        let n_corr = (f.negativity)(&p, &d);
        let q_corr = (f.discord)(&d);
        let mk = channel_state(&p, &q(), ChannelVariant::markovian_default(&p), T_MAX)?;
        let n_mk = correlations::negativity_from_coherence(p.alpha, mk.kappa_eff);
        let q_mk = correlations::discord_from_coherence(mk.kappa_eff.norm());
        let ok = n_corr > 0.01 && q_corr > 0.01 && n_mk < 1e-3 && q_mk < 1e-3;
        Ok((
            n_corr.min(q_corr),
            ok,
            format!("t=80: correlated N = {n_corr:.6}, Q = {q_corr:.6}; Markovian N = {n_mk:e}, Q = {q_mk:e} (need < 1e-3)"),
        ))
    })
}

pub fn quadrature_robustness() -> Check {
    let tol = 1e-10;
    timed("9", "quadrature refinement stability and exponent identity", tol, None, true, || {
        let mut triples = Vec::new();
        for &b in &BETAS {
            for &s in &SEPARATIONS {
                triples.extend([0.1, 1.0, 10.0, 100.0].map(|t| (b, s, t)));
            }
        }
        let fine = q().refined(2);
        let refine = triples
            .par_iter()
            .map(|&(b, s, t)| {
                let p = params(1.0, b, s);
                let a = decoherence_state(&p, &q(), t)?;
                let z = decoherence_state(&p, &fine, t)?;
                Ok(max_of(
                    [a.gamma_s - z.gamma_s, a.zeta - z.zeta, a.zeta0 - z.zeta0, a.gamma1 - z.gamma1]
                        .into_iter()
                        .map(f64::abs),
                ))
            })
            .collect::<qdeph_core::Result<Vec<f64>>>()?;
        let refine_dev = max_of(refine.into_iter());

        let pts = grid(&BETAS, &SEPARATIONS, 50);
        let identity = pts
            .par_iter()
            .map(|&(b, s, t)| {
                let p = params(1.0, b, s);
                let d = decoherence_state(&p, &q(), t)?;
                Ok(((-d.gamma_ic - d.gamma_s).exp() - d.kappa.norm()).abs())
            })
            .collect::<qdeph_core::Result<Vec<f64>>>()?;
        let identity_dev = max_of(identity.into_iter());
        let ok = refine_dev < tol && identity_dev <= 1e-12;
        Ok((
            refine_dev,
            ok,
            format!("{} refinement points; identity exp(-gamma_ic - gamma_s) = |kappa| max gap {identity_dev:e} (tol 1e-12)", triples.len()),
        ))
    })
}

pub fn determinism() -> Check {
    timed("10", "repeated sweeps are byte-identical", 0.0, None, true, || {
        let cfg = RunConfig::default();
        let render = || -> qdeph_core::Result<String> {
            let (grid, sweep) = sweep::run(&cfg).map_err(|_| qdeph_core::Error::InvalidParameter("sweep config"))?;
            Ok(sweep.to_csv(&grid))
        };
        let first = render()?;
        let second = render()?;
        let differing = first.lines().zip(second.lines()).filter(|(a, b)| a != b).count();
        let ok = first == second;
        Ok((differing as f64, ok, format!("{} bytes per run, {differing} differing lines", first.len())))
    })
}

/// Every check, in criterion order.
pub fn run_all(f: &Formulas) -> Report {
    let mut checks = vec![
        initial_limits(f),
        negativity_equivalence(f),
        discord_equivalence(f),
        teleport_equivalence(f),
        critical_temperature(f),
    ];
    checks.extend(input_noise_adjudication(f));
    checks.push(fidelity_shape(f));
    checks.push(correlation_persistence(f));
    checks.push(quadrature_robustness());
    checks.push(determinism());
    Report { checks }
}
