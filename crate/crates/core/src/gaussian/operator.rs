//! Normalized Gaussian operators as dense Fock matrices.

use num_complex::Complex;

use super::params::GaussianParams;
use crate::error::{Error, Result};
use crate::fock::{unnormalized_gaussian_poly, FockOperator, NormalPolynomial};
use crate::linalg::{pfaffian, signature_matrix, Block, ExtendedMatrix, Matrix};
use crate::scalar::{creal, parity_sign, Real};

fn singular_to_covariance(e: Error) -> Error {
    match e {
        Error::Singular { .. } => Error::SingularCovariance,
        other => other,
    }
}

/// `σ⁻¹` with singular input reported as [`Error::SingularCovariance`].
pub fn covariance_inverse<T: Real>(sigma: &ExtendedMatrix<T>) -> Result<ExtendedMatrix<T>> {
    sigma.inverse().map_err(singular_to_covariance)
}

/// Exponent matrix `μ̲ = σ⁻¹ - 2 diag(-I, I) = [[μ, ξ], [ξ⁺, -μᵀ]]`.
pub fn exponent_from_covariance<T: Real>(sigma: &ExtendedMatrix<T>) -> Result<ExtendedMatrix<T>> {
    let inv = covariance_inverse(sigma)?;
    let two = Complex::new(T::lit(2.0), T::zero());
    ExtendedMatrix::from_full(inv.full() - &signature_matrix(sigma.modes()).scale(two))
}

/// Covariance matching an exponent matrix: `σ = (μ̲ + 2 diag(-I, I))⁻¹`.
pub fn covariance_from_exponent<T: Real>(mu: &ExtendedMatrix<T>) -> Result<ExtendedMatrix<T>> {
    let two = Complex::new(T::lit(2.0), T::zero());
    let full = mu.full() + &signature_matrix(mu.modes()).scale(two);
    ExtendedMatrix::from_full(full)?.inverse().map_err(singular_to_covariance)
}

/// Trace of the unnormalized Gaussian with covariance `σ`: the Pfaffian of the inverse of
/// the interleaved covariance.
pub fn unnormalized_trace<T: Real>(sigma: &ExtendedMatrix<T>) -> Result<Complex<T>> {
    let a = sigma.antisymmetrize();
    let inv = a.inverse().map_err(singular_to_covariance)?;
    // the inverse of an antisymmetric matrix is antisymmetric up to rounding
    let half = T::lit(0.5);
    let cleaned = Matrix::from_fn(inv.rows(), inv.cols(), |i, j| (inv[(i, j)] - inv[(j, i)]) * half);
    pfaffian(&cleaned)
}

/// Normalization factor `(-1)^M Pf[σ_A]`, the reciprocal of [`unnormalized_trace`].
/// For number-conserving parameters it equals `det[I - n]`.
pub fn normalization_factor<T: Real>(sigma: &ExtendedMatrix<T>) -> Result<Complex<T>> {
    Ok(parity_sign::<T>(sigma.modes()) * sigma.pfaffian()?)
}

/// Normally ordered expansion of `Ω · N(σ) · :exp(-b̲† μ̲ b̲ / 2):`.
pub fn normalized_polynomial<T: Real>(omega: Complex<T>, sigma: &ExtendedMatrix<T>) -> Result<NormalPolynomial<T>> {
    let mu = exponent_from_covariance(sigma)?;
    // Pair blocks of a computed inverse are antisymmetric only up to rounding relative to
    // the whole exponent; a block that should vanish can be pure noise.
    let antisym = |b: Matrix<T>| (&b - &b.transpose()).scale(creal(T::lit(0.5)));
    let poly = unnormalized_gaussian_poly(
        &mu.block(Block::UpperLeft),
        &antisym(mu.block(Block::UpperRight)),
        &antisym(mu.block(Block::LowerLeft)),
    )?;
    Ok(poly.scale(omega * normalization_factor(sigma)?))
}

/// Dense normalized Gaussian for covariance `σ` (the covariance must be invertible).
pub fn materialize_covariance<T: Real>(omega: Complex<T>, sigma: &ExtendedMatrix<T>) -> Result<FockOperator<T>> {
    sigma.check_generalized_antisymmetric(1e-10)?;
    let dense = normalized_polynomial(omega, sigma)?.to_fock();
    if !dense.is_finite() {
        return Err(Error::NonFinite("normalized Gaussian"));
    }
    Ok(dense)
}

impl<T: Real> GaussianParams<T> {
    /// Dense `Λ(λ)` through the normally ordered exponential. Fails with
    /// [`Error::SingularCovariance`] at limit points such as number-state projectors; use
    /// [`materialize_via_moments`](Self::materialize_via_moments) there.
    pub fn materialize(&self) -> Result<FockOperator<T>> {
        materialize_covariance(self.omega, &self.covariance())
    }

    pub fn normalization_factor(&self) -> Result<Complex<T>> {
        normalization_factor(&self.covariance())
    }

    /// `Ω · N(σ) · Tr[Λ^(u)]`, which is `Ω` up to rounding.
    pub fn trace(&self) -> Result<Complex<T>> {
        let sigma = self.covariance();
        Ok(self.omega * normalization_factor(&sigma)? * unnormalized_trace(&sigma)?)
    }
}
