use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Matrix or subsystem dimensions do not fit together.
    DimensionMismatch { expected: usize, found: usize },
    /// A Kronecker product would exceed the largest supported dimension.
    DimensionOverflow(usize),
    /// Dimension outside {2, 4, 8} or otherwise unsupported by an operation.
    UnsupportedDimension(usize),
    /// Largest entry of `M − M†` exceeded the Hermiticity tolerance.
    NotHermitian(f64),
    /// A density-matrix invariant (trace, positivity) failed.
    InvalidState(&'static str),
    /// Jacobi sweeps exhausted before the off-diagonal norm dropped.
    EigenNonConvergence { off_norm: f64 },
    /// Panel refinement exhausted before successive estimates agreed.
    QuadratureNonConvergence { t: f64, delta: f64 },
    /// Sphere-grid order doubling exhausted before successive averages agreed.
    SphereNonConvergence { order: usize, delta: f64 },
    /// A physical or numerical parameter is outside its domain.
    InvalidParameter(&'static str),
    /// A closed form was requested outside the regime it is stated for.
    Unsupported(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::DimensionOverflow(d) => write!(f, "dimension {d} exceeds the maximum of 8"),
            Error::UnsupportedDimension(d) => write!(f, "unsupported dimension {d}"),
            Error::NotHermitian(dev) => write!(f, "matrix is not Hermitian (max deviation {dev:e})"),
            Error::InvalidState(why) => write!(f, "invalid density matrix: {why}"),
            Error::EigenNonConvergence { off_norm } => {
                write!(f, "Jacobi eigensolver did not converge (off-diagonal norm {off_norm:e})")
            }
            Error::QuadratureNonConvergence { t, delta } => {
                write!(f, "quadrature did not converge at t = {t} (last change {delta:e})")
            }
            Error::SphereNonConvergence { order, delta } => {
                write!(f, "sphere average did not converge by order {order} (last change {delta:e})")
            }
            Error::InvalidParameter(why) => write!(f, "invalid parameter: {why}"),
            Error::Unsupported(why) => write!(f, "unsupported: {why}"),
        }
    }
}

impl core::error::Error for Error {}
