//! Dense complex matrices of dimension 2, 4 or 8 and the handful of
//! operations the rest of the crate needs on them.
//!
//! Qubit ordering is big-endian: in a `[2, 2]` system the basis index is
//! `2·q0 + q1`, so `|01⟩` is index 1.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;
#[allow(unused_imports)] // needed without std; shadowed by inherent methods with it
use num_traits::Float;

use crate::{xlog2x, Error, Result};

/// Largest supported matrix dimension (three qubits).
pub const MAX_DIM: usize = 8;

/// Hermiticity tolerance for [`DensityMatrix`].
pub const STATE_HERMITIAN_TOL: f64 = 1e-12;
/// Trace tolerance for [`DensityMatrix`].
pub const STATE_TRACE_TOL: f64 = 1e-12;
/// Most negative eigenvalue still accepted as positive semidefinite.
pub const STATE_POSITIVITY_TOL: f64 = -1e-10;
/// Hermiticity tolerance accepted by the eigensolver.
pub const EIGEN_HERMITIAN_TOL: f64 = 1e-10;
/// Off-diagonal Frobenius norm at which Jacobi sweeps stop.
pub const EIGEN_OFF_TOL: f64 = 1e-14;

const MAX_SWEEPS: usize = 64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn check_dim(dim: usize) -> Result<()> {
    match dim {
        2 | 4 | 8 => Ok(()),
        d if d > MAX_DIM && d.is_power_of_two() => Err(Error::DimensionOverflow(d)),
        d => Err(Error::UnsupportedDimension(d)),
    }
}

/// Square complex matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self { dim, entries: vec![ZERO; dim * dim] })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        Ok(m)
    }

    /// Builds a matrix from `dim²` row-major entries.
    pub fn from_row_major(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        check_dim(dim)?;
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: entries.len() });
        }
        Ok(Self { dim, entries })
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Result<Self> {
        let mut m = Self::zeros(diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        Ok(m)
    }

    /// `|ψ⟩⟨ψ|` for an (unnormalised) ket.
    pub fn projector(ket: &[Complex64]) -> Result<Self> {
        let mut m = Self::zeros(ket.len())?;
        for (i, a) in ket.iter().enumerate() {
            for (j, b) in ket.iter().enumerate() {
                m[(i, j)] = a * b.conj();
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn dagger(&self) -> Self {
        let n = self.dim;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: rhs.dim });
        }
        let n = self.dim;
        let mut out = Self { dim: n, entries: vec![ZERO; n * n] };
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// `U M U†`.
    pub fn conjugated_by(&self, u: &Self) -> Result<Self> {
        u.matmul(self)?.matmul(&u.dagger())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: rhs.dim });
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Ok(Self { dim: self.dim, entries })
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self { dim: self.dim, entries: self.entries.iter().map(|a| a * factor).collect() }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// `max |M − M†|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Largest entrywise modulus of `self − other`; infinite on a dimension
    /// mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.dim != other.dim {
            return f64::INFINITY;
        }
        self.entries.iter().zip(&other.entries).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    fn off_diagonal_norm(&self) -> f64 {
        let n = self.dim;
        let mut sum = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    sum += self[(i, j)].norm_sqr();
                }
            }
        }
        sum.sqrt()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.entries[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[r * self.dim + c]
    }
}

pub fn identity2() -> ComplexMatrix {
    ComplexMatrix::identity(2).expect("dimension 2 is supported")
}

pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_row_major(2, vec![ZERO, ONE, ONE, ZERO]).expect("2x2")
}

pub fn pauli_y() -> ComplexMatrix {
    let i = Complex64::i();
    ComplexMatrix::from_row_major(2, vec![ZERO, -i, i, ZERO]).expect("2x2")
}

pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_real_diagonal(&[1.0, -1.0]).expect("2x2")
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let (na, nb) = (a.dim, b.dim);
    let n = na * nb;
    let mut out = ComplexMatrix::zeros(n)?;
    for i in 0..na {
        for j in 0..na {
            let aij = a[(i, j)];
            for k in 0..nb {
                for l in 0..nb {
                    out[(i * nb + k, j * nb + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    Ok(out)
}

/// Splits a flat index into per-subsystem digits (first subsystem most
/// significant).
fn digits(mut index: usize, dims: &[usize], out: &mut [usize]) {
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = index % d;
        index /= d;
    }
}

/// Traces out the subsystems listed in `traced` from a matrix over the
/// tensor product with local dimensions `dims`.
pub fn partial_trace(m: &ComplexMatrix, dims: &[usize], traced: &[usize]) -> Result<ComplexMatrix> {
    let total: usize = dims.iter().product();
    if total != m.dim || dims.contains(&0) {
        return Err(Error::DimensionMismatch { expected: m.dim, found: total });
    }
    if traced.is_empty() || traced.iter().any(|&i| i >= dims.len()) {
        return Err(Error::InvalidParameter("traced subsystem indices must be nonempty and in range"));
    }
    let keep: Vec<bool> = (0..dims.len()).map(|i| !traced.contains(&i)).collect();
    let kept_dim: usize = dims.iter().zip(&keep).filter(|(_, &k)| k).map(|(d, _)| d).product();
    let mut out = ComplexMatrix::zeros(kept_dim)?;

    let ns = dims.len();
    let mut ri = vec![0usize; ns];
    let mut ci = vec![0usize; ns];
    let kept_index = |digs: &[usize]| {
        digs.iter().zip(dims).zip(&keep).filter(|(_, &k)| k).fold(0, |acc, ((&x, &d), _)| acc * d + x)
    };
    for r in 0..m.dim {
        digits(r, dims, &mut ri);
        for c in 0..m.dim {
            digits(c, dims, &mut ci);
            let matches = (0..ns).all(|s| keep[s] || ri[s] == ci[s]);
            if matches {
                out[(kept_index(&ri), kept_index(&ci))] += m[(r, c)];
            }
        }
    }
    Ok(out)
}

/// Partial transpose of a two-qubit operator on qubit `subsystem` (0 or 1).
pub fn partial_transpose(m: &ComplexMatrix, subsystem: usize) -> Result<ComplexMatrix> {
    if m.dim != 4 {
        return Err(Error::UnsupportedDimension(m.dim));
    }
    if subsystem > 1 {
        return Err(Error::InvalidParameter("subsystem must be 0 or 1"));
    }
    let mut out = m.clone();
    for r in 0..4 {
        let (a, b) = (r / 2, r % 2);
        for c in 0..4 {
            let (a2, b2) = (c / 2, c % 2);
            let (nr, nc) = if subsystem == 0 {
                (2 * a2 + b, 2 * a + b2)
            } else {
                (2 * a + b2, 2 * a2 + b)
            };
            out[(nr, nc)] = m[(r, c)];
        }
    }
    Ok(out)
}

/// Exchanges the two qubits of a 4×4 operator.
pub fn swap_qubits(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    if m.dim != 4 {
        return Err(Error::UnsupportedDimension(m.dim));
    }
    let perm = [0, 2, 1, 3];
    let mut out = m.clone();
    for r in 0..4 {
        for c in 0..4 {
            out[(perm[r], perm[c])] = m[(r, c)];
        }
    }
    Ok(out)
}

/// Eigenvalues of a Hermitian matrix, ascending, by cyclic complex Jacobi
/// rotations.
///
/// Each rotation first removes the phase of the pivot `a_pq` with a diagonal
/// unitary and then applies the real symmetric Jacobi rotation that zeroes
/// it. Sweeps continue until the off-diagonal Frobenius norm is at most
/// [`EIGEN_OFF_TOL`] (scaled by the matrix norm when that exceeds 1).
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let defect = m.hermiticity_defect();
    if !(defect <= EIGEN_HERMITIAN_TOL) {
        return Err(Error::NotHermitian(defect));
    }
    let n = m.dim;
    let mut a = m.clone();
    // Symmetrise so the rotations see an exactly Hermitian matrix.
    for i in 0..n {
        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let h = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            a[(i, j)] = h;
            a[(j, i)] = h.conj();
        }
    }
    let scale = a.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(1.0);
    let tol = EIGEN_OFF_TOL * scale;

    let mut sweeps = 0;
    while a.off_diagonal_norm() > tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::EigenNonConvergence { off_norm: a.off_diagonal_norm() });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, p, q);
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    eig.sort_by(|x, y| x.total_cmp(y));
    Ok(eig)
}

fn rotate(a: &mut ComplexMatrix, p: usize, q: usize) {
    let h = a[(p, q)];
    let mag = h.norm();
    if mag < 1e-300 {
        return;
    }
    let phase = h / mag;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * mag);
    let t = if theta >= 0.0 {
        1.0 / (theta + (theta * theta + 1.0).sqrt())
    } else {
        -1.0 / (-theta + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // J = diag(1, e^{-iφ}) · [[c, s], [-s, c]] restricted to the (p, q) plane.
    let jpp = Complex64::new(c, 0.0);
    let jpq = Complex64::new(s, 0.0);
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    let n = a.dim;
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = Complex64::new(app - t * mag, 0.0);
    a[(q, q)] = Complex64::new(aqq + t * mag, 0.0);
}

/// `Tr|M|` for Hermitian `M`.
pub fn trace_norm(m: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eigenvalues(m)?.iter().map(|l| l.abs()).sum())
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let eig = hermitian_eigenvalues(rho.matrix())?;
    Ok(-eig.iter().map(|&l| xlog2x(l)).sum::<f64>())
}

/// A validated quantum state: Hermitian, unit trace and positive
/// semidefinite within the `STATE_*` tolerances.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(ComplexMatrix);

impl DensityMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        let defect = m.hermiticity_defect();
        if !(defect <= STATE_HERMITIAN_TOL) {
            return Err(Error::NotHermitian(defect));
        }
        let tr = m.trace();
        if !((tr.re - 1.0).abs() <= STATE_TRACE_TOL && tr.im.abs() <= STATE_TRACE_TOL) {
            return Err(Error::InvalidState("trace differs from 1"));
        }
        let eig = hermitian_eigenvalues(&m)?;
        if eig[0] < STATE_POSITIVITY_TOL {
            return Err(Error::InvalidState("negative eigenvalue"));
        }
        Ok(Self(m))
    }

    /// Normalised projector onto a ket.
    pub fn pure(ket: &[Complex64]) -> Result<Self> {
        let norm: f64 = ket.iter().map(|a| a.norm_sqr()).sum();
        if !(norm > 0.0) {
            return Err(Error::InvalidState("zero ket"));
        }
        Self::new(ComplexMatrix::projector(ket)?.scale(Complex64::new(1.0 / norm, 0.0)))
    }

    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        let m = ComplexMatrix::identity(dim)?;
        Self::new(m.scale(Complex64::new(1.0 / dim as f64, 0.0)))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.0)
    }

    pub fn entropy(&self) -> Result<f64> {
        von_neumann_entropy(self)
    }

    /// Reduced state after tracing out `traced` subsystems.
    pub fn reduce(&self, dims: &[usize], traced: &[usize]) -> Result<Self> {
        Self::new(partial_trace(&self.0, dims, traced)?)
    }
}
