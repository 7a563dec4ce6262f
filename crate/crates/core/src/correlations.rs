//! Negativity and quantum discord of the two-qubit channel.
//!
//! Each quantity has a closed form for the X-shaped channel and an
//! independent brute-force route (partial transpose spectrum for negativity,
//! explicit optimisation over projective measurements for discord).

use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)] // needed without std; shadowed by inherent methods with it
use num_traits::Float;

use crate::bath::{BathParams, DecoherenceState};
use crate::qmatrix::{self, kron, partial_trace, partial_transpose, trace_norm, ComplexMatrix, DensityMatrix};
use crate::{xlog2x, Error, Result};

/// Grid cells per measurement angle for the discord search.
pub const DISCORD_GRID: usize = 64;
/// Coordinate-descent step at which the discord search stops.
pub const DISCORD_MIN_STEP: f64 = 1e-5;
/// Outcomes less likely than this contribute nothing to conditional entropy.
const MIN_OUTCOME_PROBABILITY: f64 = 1e-14;

/// Every correlation measure at one time point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationPoint {
    pub t: f64,
    pub negativity_ppt: f64,
    pub negativity_paper: f64,
    pub discord_closed: Option<f64>,
    pub discord_oracle: f64,
    pub mutual_info: f64,
    pub classical_corr: f64,
}

/// Bloch angles of the rank-1 projector `|n⟩⟨n|` with
/// `|n⟩ = cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`; the complementary projector
/// completes the measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementAngles {
    pub theta: f64,
    pub phi: f64,
}

impl MeasurementAngles {
    /// Clamps θ into `[0, π]` and wraps φ into `[0, 2π)`.
    pub fn new(theta: f64, phi: f64) -> Self {
        Self { theta: theta.clamp(0.0, PI), phi: num_traits::Euclid::rem_euclid(&phi, &(2.0 * PI)) }
    }

    /// The two orthogonal projectors of the measurement.
    pub fn projectors(&self) -> [ComplexMatrix; 2] {
        let (s, c) = (0.5 * self.theta).sin_cos();
        let e = Complex64::from_polar(1.0, self.phi);
        let up = [Complex64::new(c, 0.0), e * s];
        let down = [Complex64::new(s, 0.0), -e * c];
        [
            ComplexMatrix::projector(&up).expect("2x2"),
            ComplexMatrix::projector(&down).expect("2x2"),
        ]
    }
}

fn require_two_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::UnsupportedDimension(rho.dim()));
    }
    Ok(())
}

/// `N = (‖ρ^{T_A}‖₁ − 1) / 2`, clamped at zero within round-off.
pub fn negativity_ppt(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubits(rho)?;
    let n = 0.5 * (trace_norm(&partial_transpose(rho.matrix(), 0)?)? - 1.0);
    Ok(if (-1e-10..0.0).contains(&n) { 0.0 } else { n })
}

/// Closed-form negativity in the `‖·‖₁ − 1` convention,
/// `2√(α(1−α)) √(cos²(2ζ) + sin²(2ζ) tanh²(βω₀)) e^{−γ_s}`.
pub fn negativity_closed(p: &BathParams, d: &DecoherenceState) -> f64 {
    let angle = 2.0 * d.zeta;
    let (s, c) = angle.sin_cos();
    let th = p.beta_omega0().tanh();
    2.0 * (p.alpha * (1.0 - p.alpha)).sqrt() * (c * c + s * s * th * th).sqrt() * (-d.gamma_s).exp()
}

/// `2√(α(1−α))|κ|`, the closed negativity for any coherence factor.
pub fn negativity_from_coherence(alpha: f64, kappa: Complex64) -> f64 {
    2.0 * (alpha * (1.0 - alpha)).sqrt() * kappa.norm()
}

/// Closed-form discord of the symmetric channel, `min(1, Q₂)` with
/// `Q₂ = ((1+|κ|)/2) log₂((1+|κ|)/2) + ((1−|κ|)/2) log₂((1−|κ|)/2) + 1`.
pub fn discord_closed(d: &DecoherenceState) -> f64 {
    discord_from_coherence(d.kappa.norm())
}

/// [`discord_closed`] as a function of `|κ|`.
pub fn discord_from_coherence(kappa_abs: f64) -> f64 {
    let k = kappa_abs.clamp(0.0, 1.0);
    let q2 = xlog2x(0.5 * (1.0 + k)) + xlog2x(0.5 * (1.0 - k)) + 1.0;
    q2.min(1.0)
}

/// `I(ρ) = S(ρ_A) + S(ρ_B) − S(ρ)`, clamped at zero within round-off.
pub fn mutual_information(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubits(rho)?;
    let sa = rho.reduce(&[2, 2], &[1])?.entropy()?;
    let sb = rho.reduce(&[2, 2], &[0])?.entropy()?;
    let i = sa + sb - rho.entropy()?;
    Ok(if (-1e-10..0.0).contains(&i) { 0.0 } else { i })
}

/// Average conditional entropy of A, `Σ_k p_k S(ρ_{A|k})`, after measuring B
/// with the given angles.
pub fn conditional_entropy(rho: &DensityMatrix, angles: MeasurementAngles) -> Result<f64> {
    require_two_qubits(rho)?;
    let id = qmatrix::identity2();
    let mut total = 0.0;
    for proj in angles.projectors() {
        let lift = kron(&id, &proj)?;
        let post = lift.matmul(rho.matrix())?.matmul(&lift)?;
        let pk = post.trace().re;
        if pk < MIN_OUTCOME_PROBABILITY {
            continue;
        }
        let cond_a = partial_trace(&post, &[2, 2], &[1])?.scale(Complex64::new(1.0 / pk, 0.0));
        let eig = qmatrix::hermitian_eigenvalues(&cond_a)?;
        let s: f64 = -eig.iter().map(|&l| xlog2x(l)).sum::<f64>();
        total += pk * s;
    }
    Ok(total)
}

/// Result of the brute-force discord search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscordSearch {
    pub discord: f64,
    pub mutual_info: f64,
    pub classical_corr: f64,
    pub best: MeasurementAngles,
}

/// Discord by explicit maximisation of the classical correlation over
/// rank-1 projective measurements on B: a `64 × 64` grid over (θ, φ)
/// followed by coordinate descent down to a step of 1e-5.
pub fn discord_oracle(rho: &DensityMatrix) -> Result<f64> {
    Ok(discord_search(rho)?.discord)
}

pub fn discord_search(rho: &DensityMatrix) -> Result<DiscordSearch> {
    require_two_qubits(rho)?;
    let mutual_info = mutual_information(rho)?;
    let s_a = rho.reduce(&[2, 2], &[1])?.entropy()?;

    let theta_step = PI / (DISCORD_GRID - 1) as f64;
    let phi_step = 2.0 * PI / DISCORD_GRID as f64;
    let mut best = MeasurementAngles::new(0.0, 0.0);
    let mut best_h = f64::INFINITY;
    for i in 0..DISCORD_GRID {
        for j in 0..DISCORD_GRID {
            let a = MeasurementAngles::new(theta_step * i as f64, phi_step * j as f64);
            let h = conditional_entropy(rho, a)?;
            if h < best_h {
                best_h = h;
                best = a;
            }
        }
    }

    let (mut dt, mut dp) = (theta_step, phi_step);
    while dt >= DISCORD_MIN_STEP || dp >= DISCORD_MIN_STEP {
        let mut improved = false;
        let candidates = [
            MeasurementAngles::new(best.theta + dt, best.phi),
            MeasurementAngles::new(best.theta - dt, best.phi),
            MeasurementAngles::new(best.theta, best.phi + dp),
            MeasurementAngles::new(best.theta, best.phi - dp),
        ];
        for a in candidates {
            let h = conditional_entropy(rho, a)?;
            if h < best_h {
                best_h = h;
                best = a;
                improved = true;
            }
        }
        if !improved {
            dt *= 0.5;
            dp *= 0.5;
        }
    }

    let classical_corr = (s_a - best_h).max(0.0);
    let discord = (mutual_info - classical_corr).max(0.0);
    Ok(DiscordSearch { discord, mutual_info, classical_corr, best })
}

/// Discord with the measurement on A instead of B.
pub fn discord_oracle_measuring_a(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubits(rho)?;
    discord_oracle(&DensityMatrix::new(qmatrix::swap_qubits(rho.matrix())?)?)
}

/// `√((1 + tanh²βω₀)/2)`, i.e. `(1/√2)√(cosh 2βω₀)/cosh βω₀`: the modulus
/// quoted for the configuration in which both γ and ζ vanish. Reported as a
/// diagnostic only; with γ = ζ = 0 the channel has |κ| = 1.
pub fn vanishing_exponent_modulus(beta_omega0: f64) -> f64 {
    let th = beta_omega0.tanh();
    (0.5 * (1.0 + th * th)).sqrt()
}

/// All correlation measures of a symmetric or general channel state.
/// `discord_closed` is only filled for α = 1/2.
pub fn correlation_point(t: f64, alpha: f64, kappa: Complex64, rho: &DensityMatrix) -> Result<CorrelationPoint> {
    let negativity_ppt = negativity_ppt(rho)?;
    let search = discord_search(rho)?;
    Ok(CorrelationPoint {
        t,
        negativity_ppt,
        negativity_paper: negativity_from_coherence(alpha, kappa),
        discord_closed: (alpha == 0.5).then(|| discord_from_coherence(kappa.norm())),
        discord_oracle: search.discord,
        mutual_info: search.mutual_info,
        classical_corr: search.classical_corr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bath::{decoherence_state, QuadratureSpec};
    use crate::binary_entropy;
    use crate::channel::{channel_state, x_state, ChannelVariant};
    use core::f64::consts::FRAC_1_SQRT_2;
    use proptest::prelude::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn bell() -> DensityMatrix {
        DensityMatrix::pure(&[c(FRAC_1_SQRT_2), c(0.0), c(0.0), c(FRAC_1_SQRT_2)]).unwrap()
    }

    fn product() -> DensityMatrix {
        let a = ComplexMatrix::from_real_diagonal(&[0.7, 0.3]).unwrap();
        let b = ComplexMatrix::from_real_diagonal(&[0.2, 0.8]).unwrap();
        DensityMatrix::new(kron(&a, &b).unwrap()).unwrap()
    }

    #[test]
    fn negativity_examples() {
        assert!((negativity_ppt(&bell()).unwrap() - 0.5).abs() < 1e-14);
        assert_eq!(negativity_ppt(&product()).unwrap(), 0.0);
        let rho = x_state(0.5, Complex64::from_polar(0.6, 0.8)).unwrap();
        assert!((negativity_ppt(&rho).unwrap() - 0.3).abs() < 1e-14);
    }

    #[test]
    fn negativity_closed_examples() {
        let q = QuadratureSpec::default();
        let p = BathParams::default();
        let d0 = decoherence_state(&p, &q, 0.0).unwrap();
        assert!((negativity_closed(&p, &d0) - 1.0).abs() < 1e-15);
        for alpha in [0.0, 1.0] {
            let pa = BathParams { alpha, ..p };
            let d = decoherence_state(&pa, &q, 3.0).unwrap();
            assert_eq!(negativity_closed(&pa, &d), 0.0);
        }
        for alpha in [0.1, 0.5, 0.8] {
            let pa = BathParams { alpha, ..p };
            for t in [0.7, 4.0, 15.0] {
                let d = decoherence_state(&pa, &q, t).unwrap();
                let st = channel_state(&pa, &q, ChannelVariant::Correlated, t).unwrap();
                let ppt = negativity_ppt(&st.rho).unwrap();
                if alpha == 0.5 {
                    assert!((negativity_closed(&pa, &d) - 2.0 * ppt).abs() < 1e-10);
                }
                assert!((negativity_from_coherence(alpha, st.kappa_eff) - 2.0 * ppt).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn discord_closed_examples() {
        assert_eq!(discord_from_coherence(1.0), 1.0);
        assert_eq!(discord_from_coherence(0.0), 0.0);
        // (3/4)log2(3/4) + (1/4)log2(1/4) + 1
        let want = 0.75 * 0.75f64.log2() + 0.25 * 0.25f64.log2() + 1.0;
        assert!((discord_from_coherence(0.5) - want).abs() < 1e-15);
        assert!((discord_from_coherence(0.5) - 0.188_722).abs() < 1e-6);
    }

    #[test]
    fn discord_oracle_examples() {
        assert!((discord_oracle(&bell()).unwrap() - 1.0).abs() < 1e-12);
        assert!(discord_oracle(&product()).unwrap().abs() < 1e-12);
        let rho = x_state(0.5, c(0.5)).unwrap();
        assert!((discord_oracle(&rho).unwrap() - discord_from_coherence(0.5)).abs() < 1e-9);
    }

    #[test]
    fn mutual_information_examples() {
        assert!(mutual_information(&product()).unwrap().abs() < 1e-12);
        assert!((mutual_information(&bell()).unwrap() - 2.0).abs() < 1e-12);
        // Marginals are maximally mixed, S(ρ) = H((1 + 1/2)/2) from the
        // eigenvalues {3/4, 1/4, 0, 0}.
        let rho = x_state(0.5, Complex64::from_polar(0.5, 2.0)).unwrap();
        let s = -(0.75 * 0.75f64.log2() + 0.25 * 0.25f64.log2());
        assert!((mutual_information(&rho).unwrap() - (2.0 - s)).abs() < 1e-12);
    }

    #[test]
    fn measurement_side_is_immaterial_for_symmetric_channel() {
        for k in [0.1, 0.45, 0.9] {
            let rho = x_state(0.5, Complex64::from_polar(k, 0.3)).unwrap();
            let b = discord_oracle(&rho).unwrap();
            let a = discord_oracle_measuring_a(&rho).unwrap();
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn discord_bounded_by_mutual_information() {
        for (alpha, k) in [(0.5, 0.3), (0.2, 0.9), (0.7, 0.05)] {
            let rho = x_state(alpha, Complex64::from_polar(k, 1.0)).unwrap();
            let s = discord_search(&rho).unwrap();
            assert!(s.discord >= 0.0);
            assert!(s.discord <= s.mutual_info + 1e-9);
        }
        let diag = x_state(0.5, c(0.0)).unwrap();
        assert!(discord_oracle(&diag).unwrap().abs() < 1e-12);
    }

    #[test]
    fn vanishing_exponent_modulus_matches_hyperbolic_form() {
        for x in [0.1f64, 1.0, 3.0] {
            let direct = FRAC_1_SQRT_2 * (2.0 * x).cosh().sqrt() / x.cosh();
            assert!((vanishing_exponent_modulus(x) - direct).abs() < 1e-15);
        }
        assert!((vanishing_exponent_modulus(1000.0) - 1.0).abs() < 1e-15);
        // Kept separate from the closed discord, which at |κ| = 1 is exactly 1.
        assert_eq!(discord_from_coherence(1.0), 1.0);
    }

    #[test]
    fn z_basis_measurement_leaves_pure_conditional_states() {
        let rho = x_state(0.5, c(0.4)).unwrap();
        let h = conditional_entropy(&rho, MeasurementAngles::new(0.0, 0.0)).unwrap();
        assert!(h.abs() < 1e-12);
        let s = discord_search(&rho).unwrap();
        assert!(s.best.theta < 1e-5 || (PI - s.best.theta) < 1e-5);
    }

    #[test]
    fn closed_discord_is_one_minus_spectral_entropy() {
        for k in [0.0, 0.3, 0.77, 1.0] {
            let rho = x_state(0.5, c(k)).unwrap();
            let closed = discord_from_coherence(k);
            assert!((closed - (1.0 - rho.entropy().unwrap())).abs() < 1e-12);
            assert!((closed - (1.0 - binary_entropy(0.5 * (1.0 + k)))).abs() < 1e-15);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn closed_discord_strictly_increasing(a in 0.0001f64..0.9999, b in 0.0001f64..0.9999) {
            prop_assume!((a - b).abs() > 1e-9);
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            prop_assert!(discord_from_coherence(lo) < discord_from_coherence(hi));
        }

        #[test]
        fn ppt_trace_norm_at_least_one(alpha in 0.0f64..=1.0, k in 0.0f64..=1.0, phase in 0.0f64..6.3) {
            let rho = x_state(alpha, Complex64::from_polar(k, phase)).unwrap();
            let tn = trace_norm(&partial_transpose(rho.matrix(), 0).unwrap()).unwrap();
            prop_assert!(tn >= 1.0 - 1e-12);
        }
    }
}
