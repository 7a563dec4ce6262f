//! Gauss–Legendre rules and composite integration.

use alloc::vec::Vec;

#[allow(unused_imports)] // needed without std; shadowed by inherent methods with it
use num_traits::Float;

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds the `n`-point rule by Newton iteration on `P_n`.
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "Gauss-Legendre order must be positive");
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        let nf = n as f64;
        for i in 0..n {
            let mut x = (core::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            nodes.push(x);
            weights.push(2.0 / ((1.0 - x * x) * dp * dp));
        }
        Self { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Single-panel rule on `[a, b]`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        let sum: f64 = self.nodes.iter().zip(&self.weights).map(|(x, w)| w * f(mid + half * x)).sum();
        half * sum
    }

    /// The rule applied on `panels` equal sub-intervals of `[a, b]`.
    pub fn composite<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64, panels: usize) -> f64 {
        let width = (b - a) / panels as f64;
        (0..panels)
            .map(|k| {
                let lo = a + width * k as f64;
                self.integrate(&f, lo, lo + width)
            })
            .sum()
    }
}

/// `(P_n(x), P_n'(x))` from the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two_and_nodes_are_symmetric() {
        for n in [1, 2, 5, 10, 16, 64] {
            let gl = GaussLegendre::new(n);
            assert!((gl.weights().iter().sum::<f64>() - 2.0).abs() < 1e-13, "n = {n}");
            let mut xs = gl.nodes().to_vec();
            xs.sort_by(f64::total_cmp);
            for (a, b) in xs.iter().zip(xs.iter().rev()) {
                assert!((a + b).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn exact_for_polynomials_up_to_degree_2n_minus_1() {
        let gl = GaussLegendre::new(6);
        for deg in 0..12 {
            let got = gl.integrate(|x| x.powi(deg), 0.0, 1.0);
            let want = 1.0 / (deg as f64 + 1.0);
            assert!((got - want).abs() < 1e-14, "degree {deg}");
        }
    }

    #[test]
    fn composite_oscillatory_integral() {
        // ∫₀^π sin²(20x) dx = π/2
        let gl = GaussLegendre::new(10);
        let got = gl.composite(|x| (20.0 * x).sin().powi(2), 0.0, core::f64::consts::PI, 80);
        assert!((got - core::f64::consts::FRAC_PI_2).abs() < 1e-13);
    }
}
