//! Bath integrals against an independent reference: the trapezoid rule on a
//! grid ten times denser than the production panels. All four integrands
//! are even in ω, so the trapezoid rule on [0, ∞) converges spectrally.
//! Frozen values come from a 40-digit adaptive quadrature.

use qdeph_core::bath::{self, BathParams, QuadratureSpec};

const OMEGA_END: f64 = 9.0;

fn trapezoid(f: impl Fn(f64) -> f64, points: usize) -> f64 {
    let h = OMEGA_END / points as f64;
    let interior: f64 = (1..points).map(|k| f(h * k as f64)).sum();
    h * (0.5 * f(0.0) + interior + 0.5 * f(OMEGA_END))
}

fn omega_coth(beta: f64, w: f64) -> f64 {
    if w == 0.0 {
        2.0 / beta
    } else {
        w / (0.5 * beta * w).tanh()
    }
}

fn angular(w: f64, s: f64) -> f64 {
    let x = w * s;
    1.0 + if x == 0.0 { 1.0 } else { x.sin() / x }
}

/// Ten times the production node count for the same (t, s).
fn dense_points(q: &QuadratureSpec, t: f64, s: f64) -> usize {
    10 * 10 * q.panels_for(t, s)
}

fn ref_gamma_s(p: &BathParams, q: &QuadratureSpec, t: f64) -> f64 {
    let s = p.separation;
    p.coupling
        * trapezoid(
            |w| omega_coth(p.beta, w) * (-w * w).exp() * angular(w, s) * (0.5 * w * t).sin().powi(2),
            dense_points(q, t, s),
        )
}

fn ref_zeta(p: &BathParams, q: &QuadratureSpec, t: f64) -> f64 {
    let s = p.separation;
    0.5 * p.coupling * trapezoid(|w| w * (-w * w).exp() * angular(w, s) * (w * t).sin(), dense_points(q, t, s))
}

fn ref_zeta0(p: &BathParams, q: &QuadratureSpec, t: f64) -> f64 {
    0.25 * p.coupling * trapezoid(|w| w * (-w * w).exp() * (w * t).sin(), dense_points(q, t, 0.0))
}

fn ref_gamma1(p: &BathParams, q: &QuadratureSpec, t: f64) -> f64 {
    0.5 * p.coupling
        * trapezoid(|w| omega_coth(p.beta, w) * (-w * w).exp() * (0.5 * w * t).sin().powi(2), dense_points(q, t, 0.0))
}

fn params(beta: f64, separation: f64) -> BathParams {
    BathParams { coupling: 1.0, beta, separation, ..BathParams::default() }
}

#[test]
fn frozen_reference_values() {
    let q = QuadratureSpec::default();
    let p = params(1.0, 1.0);
    let cases = [
        ("gamma_s", bath::gamma_s(&p, &q, 1.0).unwrap(), ref_gamma_s(&p, &q, 1.0), 0.388_236_216_309_220_5),
        ("zeta", bath::zeta(&p, &q, 1.0).unwrap(), ref_zeta(&p, &q, 1.0), 0.312_599_120_721_920_9),
        ("zeta0", bath::zeta0(&p, &q, 2.0).unwrap(), ref_zeta0(&p, &q, 2.0), 0.081_506_166_521_661_52),
        ("gamma1", bath::gamma1(&p, &q, 1.0).unwrap(), ref_gamma1(&p, &q, 1.0), 0.108_888_246_185_752_4),
    ];
    for (name, got, reference, frozen) in cases {
        assert!((reference - frozen).abs() < 1e-12, "{name}: reference {reference} vs frozen {frozen}");
        assert!((got - frozen).abs() < 1e-10, "{name}: {got} vs {frozen}");
    }
}

#[test]
fn matches_dense_reference_across_regimes() {
    let q = QuadratureSpec::default();
    for beta in [0.05, 1.0, 10.0] {
        for separation in [0.0, 1.0, 5.0] {
            let p = params(beta, separation);
            for t in [0.1, 1.0, 3.7, 10.0, 33.0] {
                let pairs = [
                    (bath::gamma_s(&p, &q, t).unwrap(), ref_gamma_s(&p, &q, t)),
                    (bath::zeta(&p, &q, t).unwrap(), ref_zeta(&p, &q, t)),
                    (bath::zeta0(&p, &q, t).unwrap(), ref_zeta0(&p, &q, t)),
                    (bath::gamma1(&p, &q, t).unwrap(), ref_gamma1(&p, &q, t)),
                ];
                for (i, (got, want)) in pairs.into_iter().enumerate() {
                    assert!((got - want).abs() < 1e-10, "fn {i} beta {beta} s {separation} t {t}: {got} vs {want}");
                }
            }
        }
    }
}
