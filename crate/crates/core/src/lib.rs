//! Dephasing of a two-qubit channel in a common bosonic bath whose initial
//! state carries system–bath correlations created by a projective
//! measurement on a joint thermal state.
//!
//! The crate is `no_std` (it needs `alloc`) and holds only pure numerical
//! kernels:
//!
//! * [`qmatrix`]: dense complex matrices of dimension 2, 4 or 8, partial
//!   traces and transposes, a cyclic Jacobi eigensolver and entropies.
//! * [`quadrature`]: Gauss–Legendre rules and the period-locked composite
//!   integrator used for the bath integrals.
//! * [`bath`]: the decoherence functions γ_s, ζ, ζ₀, γ₁, γ_ic and the
//!   coherence factor κ(t).
//! * [`channel`]: the evolved channel state ρ_S(t) and its uncorrelated and
//!   Markovian baselines.
//! * [`correlations`]: negativity and discord, each by closed form and by a
//!   brute-force route.
//! * [`teleport`]: the Bell-measurement teleportation protocol, Bloch-sphere
//!   averaging and the closed-form average fidelities.
//!
//! IO, the CLI and file formats live in the `qdeph` crate.
#![no_std]
// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod bath;
pub mod channel;
pub mod correlations;
mod error;
pub mod qmatrix;
pub mod quadrature;
pub mod teleport;

pub use error::{Error, Result};

pub use num_complex::Complex64;

/// Binary entropy `H(p) = −p log₂ p − (1−p) log₂(1−p)` with `0·log 0 = 0`.
pub fn binary_entropy(p: f64) -> f64 {
    -(xlog2x(p) + xlog2x(1.0 - p))
}

/// `x log₂ x` with the convention `0 log 0 = 0` (also for tiny negative
/// round-off).
pub(crate) fn xlog2x(x: f64) -> f64 {
    #[allow(unused_imports)]
    use num_traits::Float;
    if x <= 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}
