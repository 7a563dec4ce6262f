//! Decoherence functions of the two-qubit dephasing model.
//!
//! Everything is dimensionless with the bath cutoff set to one: frequencies
//! are in units of ω_c, times and the separation `s = L/c` in units of
//! 1/ω_c, and β in units of 1/ω_c. The coupling prefactors are collapsed into
//! a single knob `A`; γ_s carries `A` and ζ carries `A/2`. The single-qubit
//! functions γ₁ and ζ₀ drop the angular factor `1 + sinc(ωs)` and carry half
//! of the corresponding two-qubit prefactor.

use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)] // needed without std; shadowed by inherent methods with it
use num_traits::Float;

use crate::quadrature::GaussLegendre;
use crate::{Error, Result};

/// Nodes per Gauss–Legendre panel.
const PANEL_ORDER: usize = 10;
/// Panel doublings tried before giving up.
const MAX_REFINEMENTS: usize = 8;
/// Below this `x = βω/2` the coth series is used.
const COTH_SERIES_CUTOFF: f64 = 1e-4;

/// Physical configuration of bath and channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathParams {
    /// Dimensionless coupling `A ≥ 0`.
    pub coupling: f64,
    /// Inverse temperature, `β > 0`.
    pub beta: f64,
    /// Qubit splitting ω₀ > 0.
    pub omega0: f64,
    /// Qubit separation time `s = L/c ≥ 0`.
    pub separation: f64,
    /// Channel weight α ∈ [0, 1] of `√α|00⟩ + √(1−α)|11⟩`.
    pub alpha: f64,
}

impl Default for BathParams {
    fn default() -> Self {
        Self { coupling: 1.0, beta: 1.0, omega0: 1.0, separation: 1.0, alpha: 0.5 }
    }
}

impl BathParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.coupling >= 0.0 && self.coupling.is_finite()) {
            return Err(Error::InvalidParameter("coupling must be finite and nonnegative"));
        }
        if !(self.beta > 0.0) {
            return Err(Error::InvalidParameter("beta must be positive"));
        }
        if !(self.omega0 > 0.0 && self.omega0.is_finite()) {
            return Err(Error::InvalidParameter("omega0 must be positive"));
        }
        if !(self.separation >= 0.0 && self.separation.is_finite()) {
            return Err(Error::InvalidParameter("separation must be finite and nonnegative"));
        }
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(Error::InvalidParameter("alpha must lie in [0, 1]"));
        }
        Ok(())
    }

    pub fn beta_omega0(&self) -> f64 {
        self.beta * self.omega0
    }

    /// True for the symmetric channel α = 1/2, where several closed forms
    /// are stated.
    pub fn is_symmetric(&self) -> bool {
        self.alpha == 0.5
    }
}

/// Controls for the frequency integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Upper integration limit; the Gaussian weight is below 1e-18 past 6.5.
    pub omega_max: f64,
    /// Panels per oscillation period of the fastest factor.
    pub panels_per_period: usize,
    /// Required agreement between successive panel doublings.
    pub abs_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { omega_max: 6.5, panels_per_period: 8, abs_tol: 1e-12 }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.omega_max >= 6.0 && self.omega_max.is_finite()) {
            return Err(Error::InvalidParameter("omega_max must be at least 6"));
        }
        if self.panels_per_period == 0 {
            return Err(Error::InvalidParameter("panels_per_period must be positive"));
        }
        if !(self.abs_tol > 0.0) {
            return Err(Error::InvalidParameter("abs_tol must be positive"));
        }
        Ok(())
    }

    /// The same spec with `factor` times the panel density.
    pub fn refined(&self, factor: usize) -> Self {
        Self { panels_per_period: self.panels_per_period * factor, ..*self }
    }

    /// Number of panels on `[0, omega_max]` for a given time and
    /// separation: width `2π / (panels_per_period · max(t, s, 1))`.
    pub fn panels_for(&self, t: f64, s: f64) -> usize {
        let fastest = t.max(s).max(1.0);
        let width = 2.0 * PI / (self.panels_per_period as f64 * fastest);
        (self.omega_max / width).ceil() as usize
    }
}

/// All decoherence functions at one time point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecoherenceState {
    pub t: f64,
    pub gamma_s: f64,
    pub zeta: f64,
    pub zeta0: f64,
    pub gamma1: f64,
    /// `−ln |bracket|`, the extra decay from the initial correlations. For
    /// α = 1/2 this is the closed form of [`gamma_ic`].
    pub gamma_ic: f64,
    pub kappa: Complex64,
}

/// `coth(x)`; `+∞` at `x = 0`.
pub fn coth(x: f64) -> f64 {
    if x == 0.0 {
        f64::INFINITY
    } else if x.abs() < COTH_SERIES_CUTOFF {
        1.0 / x + x / 3.0 - x * x * x / 45.0
    } else {
        let s = x.signum();
        s * (1.0 + 2.0 / (2.0 * x.abs()).exp_m1())
    }
}

/// `coth(βω/2)`.
pub fn coth_half(beta: f64, omega: f64) -> f64 {
    coth(0.5 * beta * omega)
}

/// `ω·coth(βω/2)`, finite everywhere with value `2/β` at `ω = 0`.
pub fn omega_coth_half(beta: f64, omega: f64) -> f64 {
    let x = 0.5 * beta * omega;
    if x < COTH_SERIES_CUTOFF {
        // ω(1/x + x/3 − x³/45) with ω/x = 2/β
        2.0 / beta + omega * (x / 3.0 - x * x * x / 45.0)
    } else {
        omega * coth(x)
    }
}

/// `sin(x)/x` with the removable singularity filled in.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// Two-qubit angular factor `1 + sin(ωs)/(ωs)`; exactly 2 at `s = 0`.
fn two_qubit_angular(omega: f64, s: f64) -> f64 {
    1.0 + sinc(omega * s)
}

fn check_time(t: f64) -> Result<()> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::InvalidParameter("time must be finite and nonnegative"));
    }
    Ok(())
}

/// Integrates `f` over `[0, omega_max]` with period-locked panels, doubling
/// the panel count until two successive estimates agree to `abs_tol`.
fn integrate<F: Fn(f64) -> f64>(q: &QuadratureSpec, t: f64, s: f64, f: F) -> Result<f64> {
    q.validate()?;
    let rule = GaussLegendre::new(PANEL_ORDER);
    let mut panels = q.panels_for(t, s);
    let mut coarse = rule.composite(&f, 0.0, q.omega_max, panels);
    let mut delta = f64::INFINITY;
    for _ in 0..MAX_REFINEMENTS {
        panels *= 2;
        let fine = rule.composite(&f, 0.0, q.omega_max, panels);
        delta = (fine - coarse).abs();
        if delta < q.abs_tol {
            return Ok(fine);
        }
        coarse = fine;
    }
    Err(Error::QuadratureNonConvergence { t, delta })
}

fn thermal_integral<G: Fn(f64) -> f64>(
    p: &BathParams,
    q: &QuadratureSpec,
    t: f64,
    prefactor: f64,
    angular: G,
) -> Result<f64> {
    p.validate()?;
    check_time(t)?;
    if t == 0.0 || prefactor == 0.0 {
        return Ok(0.0);
    }
    let beta = p.beta;
    integrate(q, t, p.separation, |w| {
        let half = (0.5 * w * t).sin();
        prefactor * omega_coth_half(beta, w) * (-w * w).exp() * angular(w) * half * half
    })
}

fn phase_integral<G: Fn(f64) -> f64>(
    p: &BathParams,
    q: &QuadratureSpec,
    t: f64,
    prefactor: f64,
    angular: G,
) -> Result<f64> {
    p.validate()?;
    check_time(t)?;
    if t == 0.0 || prefactor == 0.0 {
        return Ok(0.0);
    }
    integrate(q, t, p.separation, |w| prefactor * w * (-w * w).exp() * angular(w) * (w * t).sin())
}

/// Standard decoherence exponent
/// `γ_s(t) = A ∫ ω e^{−ω²} (1 + sinc ωs) sin²(ωt/2) coth(βω/2) dω`.
pub fn gamma_s(p: &BathParams, q: &QuadratureSpec, t: f64) -> Result<f64> {
    let s = p.separation;
    thermal_integral(p, q, t, p.coupling, |w| two_qubit_angular(w, s))
}

/// Correlation phase `ζ(t) = (A/2) ∫ ω e^{−ω²} (1 + sinc ωs) sin(ωt) dω`.
pub fn zeta(p: &BathParams, q: &QuadratureSpec, t: f64) -> Result<f64> {
    let s = p.separation;
    phase_integral(p, q, t, 0.5 * p.coupling, |w| two_qubit_angular(w, s))
}

/// Single-qubit phase `ζ₀(t) = (A/4) ∫ ω e^{−ω²} sin(ωt) dω`.
pub fn zeta0(p: &BathParams, q: &QuadratureSpec, t: f64) -> Result<f64> {
    phase_integral(p, q, t, 0.25 * p.coupling, |_| 1.0)
}

/// Single-qubit decoherence exponent
/// `γ₁(t) = (A/2) ∫ ω e^{−ω²} sin²(ωt/2) coth(βω/2) dω`.
pub fn gamma1(p: &BathParams, q: &QuadratureSpec, t: f64) -> Result<f64> {
    thermal_integral(p, q, t, 0.5 * p.coupling, |_| 1.0)
}

/// The correlation bracket of κ(t) for a given phase ζ:
/// `(α e^{−βω₀} e^{2iζ} + (1−α) e^{βω₀} e^{−2iζ}) / (α e^{−βω₀} + (1−α) e^{βω₀})`.
///
/// Weights are normalised in log space so βω₀ up to several hundred does
/// not overflow.
pub fn correlation_bracket(p: &BathParams, zeta: f64) -> Complex64 {
    let bw = p.beta_omega0();
    let (wp, wm) = normalized_weights(p.alpha.ln() - bw, (1.0 - p.alpha).ln() + bw);
    let phase = Complex64::from_polar(1.0, 2.0 * zeta);
    phase * wp + phase.conj() * wm
}

/// `(e^{a}, e^{b}) / (e^{a} + e^{b})` evaluated without overflow. Either
/// log-weight may be `−∞`.
pub(crate) fn normalized_weights(log_a: f64, log_b: f64) -> (f64, f64) {
    let m = log_a.max(log_b);
    let a = (log_a - m).exp();
    let b = (log_b - m).exp();
    let total = a + b;
    (a / total, b / total)
}

/// Coherence factor `κ(t)` multiplying the `|00⟩⟨11|` element of ρ_S(t).
pub fn kappa(p: &BathParams, q: &QuadratureSpec, t: f64) -> Result<Complex64> {
    let z = zeta(p, q, t)?;
    let g = gamma_s(p, q, t)?;
    Ok(correlation_bracket(p, z) * (-g).exp())
}

/// Extra decay from the initial correlations for the symmetric channel:
/// `γ_ic = −½ ln[cos²(2ζ) + sin²(2ζ) tanh²(βω₀)]`.
pub fn gamma_ic(p: &BathParams, q: &QuadratureSpec, t: f64) -> Result<f64> {
    if !p.is_symmetric() {
        return Err(Error::Unsupported("gamma_ic closed form requires alpha = 1/2"));
    }
    let z = zeta(p, q, t)?;
    Ok(gamma_ic_from_zeta(p.beta_omega0(), z))
}

pub(crate) fn gamma_ic_from_zeta(beta_omega0: f64, zeta: f64) -> f64 {
    let angle = 2.0 * zeta;
    let (s, c) = angle.sin_cos();
    let th = beta_omega0.tanh();
    -0.5 * (c * c + s * s * th * th).ln()
}

/// Evaluates every decoherence function at `t`.
pub fn decoherence_state(p: &BathParams, q: &QuadratureSpec, t: f64) -> Result<DecoherenceState> {
    let gamma_s = gamma_s(p, q, t)?;
    let zeta = zeta(p, q, t)?;
    let zeta0 = zeta0(p, q, t)?;
    let gamma1 = gamma1(p, q, t)?;
    let bracket = correlation_bracket(p, zeta);
    let gamma_ic = if p.is_symmetric() {
        gamma_ic_from_zeta(p.beta_omega0(), zeta)
    } else {
        -bracket.norm().ln()
    };
    Ok(DecoherenceState { t, gamma_s, zeta, zeta0, gamma1, gamma_ic, kappa: bracket * (-gamma_s).exp() })
}
