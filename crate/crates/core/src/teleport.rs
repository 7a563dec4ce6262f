//! Single-qubit teleportation through the noisy channel.
//!
//! The three-qubit state is ordered (input, Alice's channel qubit, Bob's
//! channel qubit). Alice projects the first two onto the Bell basis
//! `Φ⁺, Φ⁻, Ψ⁺, Ψ⁻`; Bob corrects with `I, σ^z, σ^x, σ^x σ^z` respectively.

use core::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
#[allow(unused_imports)] // needed without std; shadowed by inherent methods with it
use num_traits::Float;

use crate::bath::{self, normalized_weights, BathParams, DecoherenceState, QuadratureSpec};
use crate::channel::{x_state, ChannelState};
use crate::qmatrix::{self, kron, partial_trace, ComplexMatrix, DensityMatrix};
use crate::quadrature::GaussLegendre;
use crate::{Error, Result};

/// Outcomes less likely than this have no conditional state.
pub const MIN_OUTCOME_PROBABILITY: f64 = 1e-14;
/// Smallest sphere-grid order accepted by the averaging oracles.
pub const MIN_SPHERE_ORDER: usize = 16;
/// Agreement required between successive sphere-grid doublings.
pub const SPHERE_TOL: f64 = 1e-10;
const MAX_SPHERE_ORDER: usize = 512;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Pure input `cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InputQubit {
    pub theta: f64,
    pub phi: f64,
}

impl InputQubit {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::InvalidParameter("theta must lie in [0, pi]"));
        }
        if !(0.0..2.0 * PI).contains(&phi) {
            return Err(Error::InvalidParameter("phi must lie in [0, 2pi)"));
        }
        Ok(Self { theta, phi })
    }

    pub fn ket(&self) -> [Complex64; 2] {
        let (s, c) = (0.5 * self.theta).sin_cos();
        [Complex64::new(c, 0.0), Complex64::from_polar(s, self.phi)]
    }

    pub fn density(&self) -> ComplexMatrix {
        ComplexMatrix::projector(&self.ket()).expect("2x2")
    }
}

/// Where the bath acts in the teleportation setup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoisePlacement {
    ChannelDecoheres,
    AliceQubitsDecohere,
    InputQubitDecoheres,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TeleportResult {
    /// Bob's corrected state per Bell outcome; `None` for outcomes that
    /// cannot occur.
    pub outcome_states: [Option<DensityMatrix>; 4],
    pub probabilities: [f64; 4],
    /// `⟨ψ|ρ_out,i|ψ⟩`, recorded as 0 for impossible outcomes.
    pub conditional_fidelities: [f64; 4],
    /// `Σ_i Q_i F_i`.
    pub weighted_fidelity: f64,
}

/// Bell kets in the order Φ⁺, Φ⁻, Ψ⁺, Ψ⁻.
pub fn bell_states() -> [[Complex64; 4]; 4] {
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    [[h, ZERO, ZERO, h], [h, ZERO, ZERO, -h], [ZERO, h, h, ZERO], [ZERO, h, -h, ZERO]]
}

pub fn bell_projectors() -> [ComplexMatrix; 4] {
    bell_states().map(|k| ComplexMatrix::projector(&k).expect("4x4"))
}

/// Bob's corrections, indexed like [`bell_projectors`].
pub fn corrections() -> [ComplexMatrix; 4] {
    let xz = qmatrix::pauli_x().matmul(&qmatrix::pauli_z()).expect("2x2");
    [qmatrix::identity2(), qmatrix::pauli_z(), qmatrix::pauli_x(), xz]
}

/// Runs the protocol for a pure input through the channel `channel`.
pub fn run_protocol(input: &InputQubit, channel: &ChannelState) -> Result<TeleportResult> {
    teleport(&input.density(), &input.ket(), channel.rho.matrix())
}

/// Teleports a (possibly mixed) input `rho_in` and scores each outcome
/// against the pure reference `target`.
pub fn teleport(rho_in: &ComplexMatrix, target: &[Complex64; 2], channel: &ComplexMatrix) -> Result<TeleportResult> {
    if rho_in.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: rho_in.dim() });
    }
    if channel.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: channel.dim() });
    }
    let total = kron(rho_in, channel)?;
    let id = qmatrix::identity2();
    let fixes = corrections();

    let mut outcome_states: [Option<DensityMatrix>; 4] = [None, None, None, None];
    let mut probabilities = [0.0; 4];
    let mut conditional_fidelities = [0.0; 4];
    for (i, proj) in bell_projectors().iter().enumerate() {
        let lift = kron(proj, &id)?;
        let post = lift.matmul(&total)?.matmul(&lift)?;
        let q = post.trace().re;
        probabilities[i] = q.max(0.0);
        if q < MIN_OUTCOME_PROBABILITY {
            continue;
        }
        let bob = partial_trace(&post, &[2, 2, 2], &[0, 1])?;
        let out = bob.conjugated_by(&fixes[i])?.scale(Complex64::new(1.0 / q, 0.0));
        conditional_fidelities[i] = expectation(&out, target);
        outcome_states[i] = Some(DensityMatrix::new(out)?);
    }
    let weighted_fidelity = probabilities.iter().zip(&conditional_fidelities).map(|(q, f)| q * f).sum();
    Ok(TeleportResult { outcome_states, probabilities, conditional_fidelities, weighted_fidelity })
}

/// `⟨ψ|M|ψ⟩` (real part) for a 2×2 `M`.
fn expectation(m: &ComplexMatrix, psi: &[Complex64; 2]) -> f64 {
    let mut acc = ZERO;
    for i in 0..2 {
        for j in 0..2 {
            acc += psi[i].conj() * m[(i, j)] * psi[j];
        }
    }
    acc.re
}

/// Product rule on the unit sphere: Gauss–Legendre in `cos θ` times the
/// trapezoid rule in φ. Weights are normalised to sum to one.
#[derive(Debug, Clone)]
pub struct SphereGrid {
    order: usize,
    rule: GaussLegendre,
}

impl SphereGrid {
    pub fn new(order: usize) -> Self {
        Self { order, rule: GaussLegendre::new(order) }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `(input, weight)` for every node: `order` polar × `2·order`
    /// azimuthal points.
    pub fn nodes(&self) -> impl Iterator<Item = (InputQubit, f64)> + '_ {
        let n_phi = 2 * self.order;
        self.rule.nodes().iter().zip(self.rule.weights()).flat_map(move |(&x, &w)| {
            let theta = x.clamp(-1.0, 1.0).acos();
            (0..n_phi).map(move |j| {
                let phi = 2.0 * PI * j as f64 / n_phi as f64;
                (InputQubit { theta, phi }, 0.5 * w / n_phi as f64)
            })
        })
    }

    pub fn average<F: FnMut(&InputQubit) -> Result<f64>>(&self, mut f: F) -> Result<f64> {
        let mut acc = 0.0;
        for (input, w) in self.nodes() {
            acc += w * f(&input)?;
        }
        Ok(acc)
    }
}

/// A sphere average together with its refinement evidence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereAverage {
    pub value: f64,
    /// Order of the grid that produced `value`.
    pub order: usize,
    /// Change from the previous (half-order) grid.
    pub delta: f64,
}

/// Averages `f` over the sphere, doubling the grid order from `order` until
/// successive values differ by less than [`SPHERE_TOL`].
pub fn converged_sphere_average<F: FnMut(&InputQubit) -> Result<f64>>(order: usize, mut f: F) -> Result<SphereAverage> {
    if order < MIN_SPHERE_ORDER {
        return Err(Error::InvalidParameter("sphere grid order must be at least 16"));
    }
    let mut n = order;
    let mut prev = SphereGrid::new(n).average(&mut f)?;
    let mut delta = f64::INFINITY;
    while n < MAX_SPHERE_ORDER {
        n *= 2;
        let next = SphereGrid::new(n).average(&mut f)?;
        delta = (next - prev).abs();
        if delta < SPHERE_TOL {
            return Ok(SphereAverage { value: next, order: n, delta });
        }
        prev = next;
    }
    Err(Error::SphereNonConvergence { order: n, delta })
}

/// Bloch-sphere average of the protocol's weighted fidelity.
pub fn average_fidelity_oracle(channel: &ChannelState, order: usize) -> Result<SphereAverage> {
    converged_sphere_average(order, |input| Ok(run_protocol(input, channel)?.weighted_fidelity))
}

/// Closed-form average fidelity for each noise placement.
///
/// Channel and Alice placements give `2/3 + cos(2ζ) e^{−γ_s} / 3` (stated
/// for α = 1/2). Input-qubit noise gives
/// `2/3 + (βω₀/2 − 1) cos(ζ₀) e^{−γ₁} / (6 sinh(βω₀/2))`.
pub fn fav_closed(placement: NoisePlacement, p: &BathParams, d: &DecoherenceState) -> Result<f64> {
    match placement {
        NoisePlacement::ChannelDecoheres | NoisePlacement::AliceQubitsDecohere => {
            if !p.is_symmetric() {
                return Err(Error::Unsupported("channel-noise fidelity closed form requires alpha = 1/2"));
            }
            Ok(2.0 / 3.0 + (2.0 * d.zeta).cos() * (-d.gamma_s).exp() / 3.0)
        }
        NoisePlacement::InputQubitDecoheres => {
            Ok(2.0 / 3.0 + input_noise_prefactor(p.beta_omega0()) * d.zeta0.cos() * (-d.gamma1).exp())
        }
    }
}

/// `(x − 1) / (6 sinh x)` with `x = βω₀/2`, including its `−1/(3βω₀)`
/// behaviour for vanishing βω₀.
pub fn input_noise_prefactor(beta_omega0: f64) -> f64 {
    if beta_omega0 < 1e-8 {
        return -1.0 / (3.0 * beta_omega0);
    }
    let x = 0.5 * beta_omega0;
    let sinh = if x < 1e-3 {
        let x2 = x * x;
        x * (1.0 + x2 / 6.0 + x2 * x2 / 120.0)
    } else {
        x.sinh()
    };
    if sinh.is_infinite() {
        return 0.0;
    }
    (x - 1.0) / (6.0 * sinh)
}

/// Sphere-averaged fidelity of an X-shaped channel with weight α and
/// coherence factor κ: `2/3 + 2√(α(1−α)) Re κ / 3`.
pub fn fav_from_coherence(alpha: f64, kappa: Complex64) -> f64 {
    2.0 / 3.0 + 2.0 * (alpha * (1.0 - alpha)).sqrt() * kappa.re / 3.0
}

/// Coherence factor of a single input qubit dephasing from a correlated
/// bath prepared by measuring it in state `(θ, φ)`:
/// `[cos²(θ/2) e^{−βω₀/2} e^{iζ₀} + sin²(θ/2) e^{βω₀/2} e^{−iζ₀}] /
/// [cos²(θ/2) e^{−βω₀/2} + sin²(θ/2) e^{βω₀/2}] · e^{−γ₁}`.
pub fn input_coherence_factor(beta_omega0: f64, theta: f64, zeta0: f64, gamma1: f64) -> Complex64 {
    let (s, c) = (0.5 * theta).sin_cos();
    let x = 0.5 * beta_omega0;
    let (wc, ws) = normalized_weights((c * c).ln() - x, (s * s).ln() + x);
    let phase = Complex64::from_polar(1.0, zeta0);
    (phase * wc + phase.conj() * ws) * (-gamma1).exp()
}

/// Sphere average of the fidelity when only the input qubit dephases in a
/// state-dependent bath and the channel is a perfect Φ⁺.
pub fn input_dephasing_oracle(p: &BathParams, q: &QuadratureSpec, t: f64, order: usize) -> Result<SphereAverage> {
    p.validate()?;
    let zeta0 = bath::zeta0(p, q, t)?;
    let gamma1 = bath::gamma1(p, q, t)?;
    let perfect = x_state(0.5, Complex64::new(1.0, 0.0))?;
    let bw = p.beta_omega0();
    converged_sphere_average(order, |input| {
        let k1 = input_coherence_factor(bw, input.theta, zeta0, gamma1);
        let mut rho_in = input.density();
        rho_in[(0, 1)] *= k1;
        rho_in[(1, 0)] *= k1.conj();
        Ok(teleport(&rho_in, &input.ket(), perfect.matrix())?.weighted_fidelity)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bath::decoherence_state;
    use crate::channel::{channel_state, ChannelVariant};
    use proptest::prelude::*;
    use core::f64::consts::TAU;

    fn channel(alpha: f64, kappa: Complex64) -> ChannelState {
        ChannelState { t: 0.0, rho: x_state(alpha, kappa).unwrap(), kappa_eff: kappa }
    }

    /// Per-outcome algebra of the protocol on the X channel, written out by
    /// hand: with |ψ⟩ = a|0⟩ + b|1⟩ and c = √(α(1−α)), Bob's unnormalised
    /// corrected states are
    ///   Φ±: ½[α|a|² |0⟩⟨0| + c a b̄ κ |0⟩⟨1| + h.c. + (1−α)|b|² |1⟩⟨1|]
    ///   Ψ±: ½[(1−α)|a|² |0⟩⟨0| + c a b̄ κ |0⟩⟨1| + h.c. + α|b|² |1⟩⟨1|]
    /// Returns (Q_i, F_i).
    fn analytic_outcomes(input: &InputQubit, alpha: f64, kappa: Complex64) -> [(f64, f64); 4] {
        let [a, b] = input.ket();
        let (pa, pb) = (a.norm_sqr(), b.norm_sqr());
        let c = (alpha * (1.0 - alpha)).sqrt();
        let cross = pa * pb * c * kappa.re;
        let phi_q = 0.5 * (alpha * pa + (1.0 - alpha) * pb);
        let psi_q = 0.5 * ((1.0 - alpha) * pa + alpha * pb);
        let phi_f = 0.5 * (alpha * pa * pa + (1.0 - alpha) * pb * pb + 2.0 * cross) / phi_q;
        let psi_f = 0.5 * ((1.0 - alpha) * pa * pa + alpha * pb * pb + 2.0 * cross) / psi_q;
        [(phi_q, phi_f), (phi_q, phi_f), (psi_q, psi_f), (psi_q, psi_f)]
    }

    #[test]
    fn bell_projectors_are_complete_orthogonal_rank_one() {
        let ps = bell_projectors();
        let mut sum = ComplexMatrix::zeros(4).unwrap();
        for (i, pi) in ps.iter().enumerate() {
            sum = sum.add(pi).unwrap();
            assert!((pi.trace().re - 1.0).abs() < 1e-15);
            for (j, pj) in ps.iter().enumerate() {
                let prod = pi.matmul(pj).unwrap();
                let want = if i == j { pi.clone() } else { ComplexMatrix::zeros(4).unwrap() };
                assert!(prod.max_abs_diff(&want) < 1e-15);
            }
        }
        assert!(sum.max_abs_diff(&ComplexMatrix::identity(4).unwrap()) < 1e-15);
    }

    #[test]
    fn perfect_channel_teleports_exactly() {
        let ch = channel(0.5, Complex64::new(1.0, 0.0));
        for (theta, phi) in [(0.0, 0.0), (1.1, 0.4), (PI, 5.0), (2.0, 3.3)] {
            let r = run_protocol(&InputQubit::new(theta, phi).unwrap(), &ch).unwrap();
            for i in 0..4 {
                assert!((r.probabilities[i] - 0.25).abs() < 1e-15);
                assert!((r.conditional_fidelities[i] - 1.0).abs() < 1e-14);
            }
            assert!((r.weighted_fidelity - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn north_pole_survives_full_dephasing() {
        let ch = channel(0.5, Complex64::new(0.0, 0.0));
        let r = run_protocol(&InputQubit::new(0.0, 0.0).unwrap(), &ch).unwrap();
        assert!((r.weighted_fidelity - 1.0).abs() < 1e-15);
    }

    #[test]
    fn protocol_matches_hand_expansion() {
        for alpha in [0.5, 0.3, 0.9] {
            for kappa in [Complex64::new(0.4, -0.3), Complex64::from_polar(0.9, 2.2), Complex64::new(0.0, 0.0)] {
                let ch = channel(alpha, kappa);
                for (theta, phi) in [(0.3, 0.1), (1.5, 2.0), (2.9, 6.0)] {
                    let input = InputQubit::new(theta, phi).unwrap();
                    let r = run_protocol(&input, &ch).unwrap();
                    let want = analytic_outcomes(&input, alpha, kappa);
                    let mut weighted = 0.0;
                    for i in 0..4 {
                        assert!((r.probabilities[i] - want[i].0).abs() < 1e-12);
                        assert!((r.conditional_fidelities[i] - want[i].1).abs() < 1e-12);
                        weighted += want[i].0 * want[i].1;
                    }
                    assert!((r.weighted_fidelity - weighted).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn impossible_outcomes_have_no_state() {
        // α = 1 and the input |0⟩: only Φ± can fire.
        let ch = channel(1.0, Complex64::new(1.0, 0.0));
        let r = run_protocol(&InputQubit::new(0.0, 0.0).unwrap(), &ch).unwrap();
        assert!(r.outcome_states[2].is_none() && r.outcome_states[3].is_none());
        assert_eq!(r.conditional_fidelities[2], 0.0);
        assert!((r.probabilities.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert!((r.weighted_fidelity - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sphere_weights_sum_to_one() {
        for n in [16, 32] {
            let g = SphereGrid::new(n);
            let total: f64 = g.nodes().map(|(_, w)| w).sum();
            assert!((total - 1.0).abs() < 1e-14);
            // ⟨cos²θ⟩ = 1/3
            let m2 = g.average(|i| Ok(i.theta.cos().powi(2))).unwrap();
            assert!((m2 - 1.0 / 3.0).abs() < 1e-14);
        }
    }

    #[test]
    fn average_fidelity_examples() {
        let perfect = channel(0.5, Complex64::new(1.0, 0.0));
        assert!((average_fidelity_oracle(&perfect, 16).unwrap().value - 1.0).abs() < 1e-12);
        for c in [0.0, 0.25, 0.8, -0.4] {
            let ch = channel(0.5, Complex64::new(c, 0.0));
            let got = average_fidelity_oracle(&ch, 16).unwrap().value;
            assert!((got - (2.0 / 3.0 + c / 3.0)).abs() < 1e-12, "c = {c}");
        }
        assert!(average_fidelity_oracle(&perfect, 8).is_err());
    }

    #[test]
    fn channel_closed_form_examples() {
        let q = QuadratureSpec::default();
        let p = BathParams::default();
        let d0 = decoherence_state(&p, &q, 0.0).unwrap();
        assert!((fav_closed(NoisePlacement::ChannelDecoheres, &p, &d0).unwrap() - 1.0).abs() < 1e-15);
        for t in [0.5, 2.0, 9.0, 40.0] {
            let d = decoherence_state(&p, &q, t).unwrap();
            let ch = fav_closed(NoisePlacement::ChannelDecoheres, &p, &d).unwrap();
            let alice = fav_closed(NoisePlacement::AliceQubitsDecohere, &p, &d).unwrap();
            assert_eq!(ch, alice);
            assert!((ch - (2.0 / 3.0 + d.kappa.re / 3.0)).abs() < 1e-14);
            assert!((ch - fav_from_coherence(0.5, d.kappa)).abs() < 1e-14);
        }
        let asym = BathParams { alpha: 0.2, ..p };
        assert!(fav_closed(NoisePlacement::ChannelDecoheres, &asym, &d0).is_err());
    }

    #[test]
    fn oracle_matches_channel_closed_form() {
        let q = QuadratureSpec::default();
        for beta in [0.05, 1.0] {
            let p = BathParams { beta, ..BathParams::default() };
            for t in [0.0, 1.3, 6.0] {
                let d = decoherence_state(&p, &q, t).unwrap();
                let st = channel_state(&p, &q, ChannelVariant::Correlated, t).unwrap();
                let oracle = average_fidelity_oracle(&st, 16).unwrap();
                let closed = fav_closed(NoisePlacement::ChannelDecoheres, &p, &d).unwrap();
                assert!((oracle.value - closed).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn input_noise_closed_form_examples() {
        let q = QuadratureSpec::default();
        // βω₀ = 2 makes the prefactor vanish.
        let p = BathParams { beta: 2.0, ..BathParams::default() };
        for t in [0.0, 1.0, 5.0] {
            let d = decoherence_state(&p, &q, t).unwrap();
            let f = fav_closed(NoisePlacement::InputQubitDecoheres, &p, &d).unwrap();
            assert!((f - 2.0 / 3.0).abs() < 1e-15);
        }
        let hot = BathParams { beta: 0.01, ..BathParams::default() };
        let d = decoherence_state(&hot, &q, 0.5).unwrap();
        assert!(d.zeta0.cos() * (-d.gamma1).exp() > 0.0);
        assert!(fav_closed(NoisePlacement::InputQubitDecoheres, &hot, &d).unwrap() < 2.0 / 3.0);
    }

    #[test]
    fn input_prefactor_branches_are_continuous() {
        let limit = |bw: f64| -1.0 / (3.0 * bw);
        for bw in [1e-9, 5e-9] {
            assert_eq!(input_noise_prefactor(bw), limit(bw));
        }
        // Just above the limit branch the full form agrees with the limit to
        // O(1) absolute terms (the next order is +1/6 + O(bw)).
        let bw = 2e-8;
        assert!((input_noise_prefactor(bw) - limit(bw) - 1.0 / 6.0).abs() < 1e-6);
        // series vs libm sinh across the switch at x = 1e-3
        for bw in [1.9e-3, 2.1e-3] {
            let x = bw / 2.0;
            let direct = (x - 1.0) / (6.0 * x.sinh());
            assert!(((input_noise_prefactor(bw) - direct) / direct).abs() < 1e-14);
        }
        assert_eq!(input_noise_prefactor(2.0), 0.0);
        assert_eq!(input_noise_prefactor(5000.0), 0.0);
        assert!(input_noise_prefactor(6.0) > 0.0);
    }

    #[test]
    fn input_dephasing_oracle_trivial_limits() {
        let q = QuadratureSpec::default();
        let p = BathParams::default();
        assert!((input_dephasing_oracle(&p, &q, 0.0, 16).unwrap().value - 1.0).abs() < 1e-12);
        let free = BathParams { coupling: 0.0, ..p };
        for t in [1.0, 10.0] {
            assert!((input_dephasing_oracle(&free, &q, t, 16).unwrap().value - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn input_coherence_factor_real_part_is_state_independent() {
        for theta in [0.0, 0.7, 1.9, PI] {
            let k = input_coherence_factor(1.3, theta, 0.4, 0.2);
            assert!((k.re - 0.4f64.cos() * (-0.2f64).exp()).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_out_of_range_inputs() {
        assert!(InputQubit::new(-0.1, 0.0).is_err());
        assert!(InputQubit::new(0.1, 2.0 * PI).is_err());
    }

    proptest! {
        #[test]
        fn probabilities_sum_to_one(
            theta in 0.0f64..=PI, phi in 0.0f64..TAU,
            alpha in 0.0f64..=1.0, k in 0.0f64..=1.0, arg in 0.0f64..TAU,
        ) {
            let ch = channel(alpha, Complex64::from_polar(k, arg));
            let r = run_protocol(&InputQubit::new(theta, phi).unwrap(), &ch).unwrap();
            prop_assert!((r.probabilities.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            for i in 0..4 {
                prop_assert!(r.probabilities[i] >= 0.0);
                prop_assert!((-1e-12..=1.0 + 1e-12).contains(&r.conditional_fidelities[i]));
            }
        }
    }
}
