//! Fermionic Gaussian operators on small Fock spaces.
//!
//! The crate is generic over the real scalar `T` (`f32` or `f64`); every quantity is
//! `Complex<T>`. The aliases at the crate root fix `T = f64`, which is what the
//! verification and decomposition tolerances are tuned for.

pub mod decompose;
pub mod error;
pub mod fock;
pub mod gaussian;
pub mod identities;
pub mod linalg;
pub mod random;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Complex64 = num_complex::Complex<f64>;
pub type CMatrix = linalg::Matrix<f64>;
pub type CExtendedMatrix = linalg::ExtendedMatrix<f64>;
pub type Fock = fock::FockOperator<f64>;
pub type Polynomial = fock::NormalPolynomial<f64>;
pub type Gaussian = gaussian::GaussianParams<f64>;
pub type Density = decompose::DensityMatrix<f64>;
