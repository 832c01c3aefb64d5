//! Normally ordered Gaussian exponentials `:exp[-b†μb - ½(bξ⁺b + b†ξb†)]:`.

use num_complex::Complex;

use super::basis::check_modes;
use super::operator::FockOperator;
use super::poly::{Monomial, NormalPolynomial};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Real;

fn check_shape<T: Real>(m: &Matrix<T>, modes: usize) -> Result<()> {
    if m.rows() != modes || m.cols() != modes {
        return Err(Error::DimensionMismatch { expected: modes, found: m.rows().max(m.cols()) });
    }
    Ok(())
}

fn check_antisymmetric<T: Real>(m: &Matrix<T>) -> Result<()> {
    let dev = m.antisymmetry_deviation();
    if dev > T::structural_tol(1e-12) {
        return Err(Error::NotAntisymmetric { deviation: dev.to_f64_lossy() });
    }
    Ok(())
}

/// Expansion of the unnormalized Gaussian as a finite normally ordered polynomial.
///
/// Inside the normal ordering the quadratic terms commute, so the exponential is the
/// normal product of `1 + x` over every quadratic term `x`.
pub fn unnormalized_gaussian_poly<T: Real>(
    mu: &Matrix<T>,
    xi: &Matrix<T>,
    xi_plus: &Matrix<T>,
) -> Result<NormalPolynomial<T>> {
    let modes = mu.rows();
    check_modes(modes)?;
    for m in [mu, xi, xi_plus] {
        check_shape(m, modes)?;
    }
    check_antisymmetric(xi)?;
    check_antisymmetric(xi_plus)?;
    let mut factors: Vec<(Monomial, Complex<T>)> = Vec::new();
    for i in 0..modes {
        for j in 0..modes {
            factors.push((Monomial { creators: 1 << i, annihilators: 1 << j }, -mu[(i, j)]));
        }
    }
    for i in 0..modes {
        for j in i + 1..modes {
            factors.push((Monomial { creators: (1 << i) | (1 << j), annihilators: 0 }, -xi[(i, j)]));
            factors.push((Monomial { creators: 0, annihilators: (1 << i) | (1 << j) }, -xi_plus[(i, j)]));
        }
    }
    NormalPolynomial::product_of_unit_factors(modes, &factors)
}

/// Dense matrix of the unnormalized Gaussian.
pub fn gaussian_unnormalized_dense<T: Real>(
    mu: &Matrix<T>,
    xi: &Matrix<T>,
    xi_plus: &Matrix<T>,
) -> Result<FockOperator<T>> {
    let p = unnormalized_gaussian_poly(mu, xi, xi_plus)?;
    let dense = p.to_fock();
    if !dense.is_finite() {
        return Err(Error::NonFinite("unnormalized Gaussian"));
    }
    Ok(dense)
}
