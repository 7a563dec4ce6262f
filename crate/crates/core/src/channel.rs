//! The evolved two-qubit channel
//! `ρ_S(t) = α|00⟩⟨00| + √(α(1−α)) κ|00⟩⟨11| + h.c. + (1−α)|11⟩⟨11|`
//! and its baselines.

use num_complex::Complex64;
#[allow(unused_imports)] // needed without std; shadowed by inherent methods with it
use num_traits::Float;

use crate::bath::{self, BathParams, QuadratureSpec};
use crate::qmatrix::{ComplexMatrix, DensityMatrix};
use crate::{Error, Result};

/// Which coherence factor drives the channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelVariant {
    /// Full κ(t), including the initial-correlation bracket.
    Correlated,
    /// Product initial state: the bracket is replaced by 1, leaving `e^{−γ_s}`.
    Uncorrelated,
    /// Memoryless exponential decay `e^{−Γt}`.
    Markovian { rate: f64 },
}

impl ChannelVariant {
    /// Markovian baseline at the white-noise rate of [`markov_rate_default`].
    pub fn markovian_default(p: &BathParams) -> Self {
        ChannelVariant::Markovian { rate: markov_rate_default(p) }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ChannelVariant::Markovian { rate } if !(rate >= 0.0 && rate.is_finite()) => {
                Err(Error::InvalidParameter("markov rate must be finite and nonnegative"))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChannelState {
    pub t: f64,
    pub rho: DensityMatrix,
    /// The off-diagonal factor actually used.
    pub kappa_eff: Complex64,
}

impl ChannelState {
    pub fn alpha(&self) -> f64 {
        self.rho.matrix()[(0, 0)].re
    }
}

/// Builds the X-shaped channel state for a given weight and coherence
/// factor.
pub fn x_state(alpha: f64, kappa: Complex64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidParameter("alpha must lie in [0, 1]"));
    }
    let mut m = ComplexMatrix::from_real_diagonal(&[alpha, 0.0, 0.0, 1.0 - alpha])?;
    let off = kappa * (alpha * (1.0 - alpha)).sqrt();
    m[(0, 3)] = off;
    m[(3, 0)] = off.conj();
    DensityMatrix::new(m)
}

/// ρ_S(t) for the chosen variant.
pub fn channel_state(p: &BathParams, q: &QuadratureSpec, variant: ChannelVariant, t: f64) -> Result<ChannelState> {
    p.validate()?;
    variant.validate()?;
    let kappa_eff = match variant {
        ChannelVariant::Correlated => bath::kappa(p, q, t)?,
        ChannelVariant::Uncorrelated => Complex64::new((-bath::gamma_s(p, q, t)?).exp(), 0.0),
        ChannelVariant::Markovian { rate } => {
            if !(t >= 0.0 && t.is_finite()) {
                return Err(Error::InvalidParameter("time must be finite and nonnegative"));
            }
            Complex64::new((-rate * t).exp(), 0.0)
        }
    };
    Ok(ChannelState { t, rho: x_state(p.alpha, kappa_eff)?, kappa_eff })
}

/// White-noise dephasing rate `Γ = 4A/β`: the ω → 0 density of the γ_s
/// integrand, `A · (2/β) · (1 + sinc 0)`.
pub fn markov_rate_default(p: &BathParams) -> f64 {
    4.0 * p.coupling / p.beta
}
