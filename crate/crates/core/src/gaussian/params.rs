//! Gaussian parameters `λ = (Ω, n, m, m⁺)` and the covariance matrix
//! `σ = [[nᵀ - I, m], [m⁺, I - n]]`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::check_modes;
use crate::linalg::{Block, ExtendedMatrix, Matrix};
use crate::scalar::{cone, Real};

/// Parameters of a normalized Gaussian operator.
///
/// `n_ij` is the normal moment of `b_i† b_j`, `m_ij` that of `b_i b_j` and `m_plus_ij`
/// that of `b_i† b_j†`; `m` and `m_plus` are antisymmetric. For two modes the scalar
/// pair amplitudes are `m_12` and `m_plus_21`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaussianParams<T: Real> {
    pub omega: Complex<T>,
    pub n: Matrix<T>,
    pub m: Matrix<T>,
    pub m_plus: Matrix<T>,
}

impl<T: Real> GaussianParams<T> {
    pub fn new(omega: Complex<T>, n: Matrix<T>, m: Matrix<T>, m_plus: Matrix<T>) -> Result<Self> {
        let p = GaussianParams { omega, n, m, m_plus };
        p.validate()?;
        Ok(p)
    }

    /// Number-conserving Gaussian with unit weight.
    pub fn thermal(n: Matrix<T>) -> Result<Self> {
        let k = n.rows();
        Self::new(cone(), n, Matrix::zeros(k, k), Matrix::zeros(k, k))
    }

    /// Two-mode Gaussian from scalar pair amplitudes (`m = m_12`, `m_plus = m_plus_21`).
    pub fn two_mode(omega: Complex<T>, n: Matrix<T>, m: Complex<T>, m_plus: Complex<T>) -> Result<Self> {
        let mut mm = Matrix::zeros(2, 2);
        mm[(0, 1)] = m;
        mm[(1, 0)] = -m;
        let mut mp = Matrix::zeros(2, 2);
        mp[(1, 0)] = m_plus;
        mp[(0, 1)] = -m_plus;
        Self::new(omega, n, mm, mp)
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.n.rows();
        check_modes(k)?;
        for mat in [&self.n, &self.m, &self.m_plus] {
            if mat.rows() != k || mat.cols() != k {
                return Err(Error::DimensionMismatch { expected: k, found: mat.rows().max(mat.cols()) });
            }
            if !mat.is_finite() {
                return Err(Error::NonFinite("Gaussian parameters"));
            }
        }
        for mat in [&self.m, &self.m_plus] {
            let dev = mat.antisymmetry_deviation();
            if dev > T::structural_tol(1e-12) {
                return Err(Error::NotAntisymmetric { deviation: dev.to_f64_lossy() });
            }
        }
        Ok(())
    }

    pub fn modes(&self) -> usize {
        self.n.rows()
    }

    pub fn is_thermal(&self) -> bool {
        self.m.max_abs().is_zero() && self.m_plus.max_abs().is_zero()
    }

    pub fn covariance(&self) -> ExtendedMatrix<T> {
        let id = Matrix::identity(self.modes());
        ExtendedMatrix::from_blocks(&(&self.n.transpose() - &id), &self.m, &self.m_plus, &(&id - &self.n))
            .expect("validated block shapes")
    }

    /// Inverse of [`covariance`](Self::covariance); the lower-right block fixes `n`.
    pub fn from_covariance(omega: Complex<T>, sigma: &ExtendedMatrix<T>) -> Result<Self> {
        sigma.check_generalized_antisymmetric(1e-10)?;
        let id = Matrix::identity(sigma.modes());
        let n = &id - &sigma.block(Block::LowerRight);
        Self::new(omega, n, sigma.block(Block::UpperRight), sigma.block(Block::LowerLeft))
    }

    /// Parameters of the adjoint operator: `Λ(λ)† = Λ(λ†)`.
    pub fn adjoint(&self) -> Self {
        GaussianParams {
            omega: self.omega.conj(),
            n: self.n.adjoint(),
            m: self.m_plus.adjoint(),
            m_plus: self.m.adjoint(),
        }
    }

    /// Checks the conditions under which `Λ` is Hermitian with occupation eigenvalues in
    /// `[0, 1]`: real `Ω`, Hermitian `n` with spectrum in `[0, 1]`, and `m⁺ = m†`.
    pub fn check_physical(&self, tol: f64) -> Result<()> {
        let t = T::lit(tol);
        if self.omega.im.abs() > t {
            return Err(Error::NotPhysical("weight is not real".into()));
        }
        if self.n.hermiticity_deviation() > t {
            return Err(Error::NotPhysical("n is not Hermitian".into()));
        }
        if self.m_plus.max_abs_diff(&self.m.adjoint()) > t {
            return Err(Error::NotPhysical("m+ differs from the adjoint of m".into()));
        }
        let id = Matrix::identity(self.modes());
        if !self.n.is_positive_with_shift(t) || !(&id - &self.n).is_positive_with_shift(t) {
            return Err(Error::NotPhysical("n has eigenvalues outside [0, 1]".into()));
        }
        Ok(())
    }

    pub fn cast<U: Real>(&self) -> GaussianParams<U> {
        GaussianParams {
            omega: Complex::new(U::lit(self.omega.re.to_f64_lossy()), U::lit(self.omega.im.to_f64_lossy())),
            n: self.n.cast(),
            m: self.m.cast(),
            m_plus: self.m_plus.cast(),
        }
    }
}
