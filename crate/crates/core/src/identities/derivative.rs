//! Finite-difference derivatives of a Gaussian operator with respect to its covariance.
//!
//! Entry `(μ, ν)` of the derivative field is the derivative along the source entry
//! `σ_νμ` (note the transpose), moving its partner `σ_{X(μ)X(ν)}` in the opposite
//! direction so that the perturbed covariance keeps its symmetry.

use num_complex::Complex;

use super::grid::OperatorGrid;
use super::tables::normal_table;
use crate::error::{Error, Result};
use crate::fock::FockOperator;
use crate::gaussian::{covariance_inverse, materialize_covariance, pair_direction, GaussianParams};
use crate::linalg::{ExtendedMatrix, Matrix};

pub const DEFAULT_STEP: f64 = 1e-5;

#[derive(Debug, Clone)]
pub struct DerivativeField {
    /// Central differences (Richardson-improved when the plain step was not enough).
    pub numeric: OperatorGrid,
    /// `σ⁻¹ Λ - σ⁻¹ :b̲ b̲† Λ: σ⁻¹`.
    pub analytic: OperatorGrid,
    pub mismatch: f64,
    /// Disagreement between real and imaginary step directions.
    pub holomorphy_residual: f64,
    pub step: f64,
    pub richardson: bool,
}

fn central(omega: Complex<f64>, sigma: &ExtendedMatrix<f64>, dir: &Matrix<f64>, h: Complex<f64>) -> Result<FockOperator<f64>> {
    let plus = ExtendedMatrix::from_full(sigma.full() + &dir.scale(h))?;
    let minus = ExtendedMatrix::from_full(sigma.full() - &dir.scale(h))?;
    let d = &materialize_covariance(omega, &plus)? - &materialize_covariance(omega, &minus)?;
    Ok(d.scale(Complex::new(1.0, 0.0) / (h * 2.0)))
}

/// Central-difference derivative field with step `h` along real (or imaginary) directions.
pub fn numeric_field(omega: Complex<f64>, sigma: &ExtendedMatrix<f64>, h: f64, imaginary: bool) -> Result<OperatorGrid> {
    let m = sigma.modes();
    let step = if imaginary { Complex::new(0.0, h) } else { Complex::new(h, 0.0) };
    let mut entries = Vec::with_capacity(4 * m * m);
    for mu in 0..2 * m {
        for nu in 0..2 * m {
            let dir = pair_direction::<f64>(m, nu, mu);
            if dir.max_abs() == 0.0 {
                entries.push(FockOperator::zero(m));
            } else {
                entries.push(central(omega, sigma, &dir, step)?);
            }
        }
    }
    let mut it = entries.into_iter();
    Ok(OperatorGrid::from_fn(2 * m, m, |_, _| it.next().expect("grid size")))
}

/// Closed form `σ⁻¹ Λ - σ⁻¹ :b̲ b̲† Λ: σ⁻¹`.
pub fn analytic_field(omega: Complex<f64>, sigma: &ExtendedMatrix<f64>) -> Result<OperatorGrid> {
    let lam = materialize_covariance(omega, sigma)?;
    let inv = covariance_inverse(sigma)?;
    let normal = normal_table(&lam);
    Ok(OperatorGrid::scalar_times(inv.full(), &lam).sub(&OperatorGrid::sandwich(inv.full(), &normal, inv.full())))
}

/// Derivative field of `Λ(σ)`. Falls back to Richardson extrapolation when the plain
/// central difference disagrees with the closed form by more than `1e-6`, and fails
/// with [`Error::StepTooLarge`] above `1e-4`.
pub fn dlambda_dsigma(params: &GaussianParams<f64>, h: f64) -> Result<DerivativeField> {
    let sigma = params.covariance();
    let analytic = analytic_field(params.omega, &sigma)?;
    let mut numeric = numeric_field(params.omega, &sigma, h, false)?;
    let mut mismatch = numeric.max_abs_diff(&analytic);
    let mut richardson = false;
    if mismatch > 1e-6 {
        let half = numeric_field(params.omega, &sigma, h / 2.0, false)?;
        numeric = half.scale(Complex::new(4.0 / 3.0, 0.0)).sub(&numeric.scale(Complex::new(1.0 / 3.0, 0.0)));
        mismatch = numeric.max_abs_diff(&analytic);
        richardson = true;
    }
    if mismatch > 1e-4 {
        return Err(Error::StepTooLarge { mismatch });
    }
    let imag = numeric_field(params.omega, &sigma, h, true)?;
    let holomorphy_residual = imag.max_abs_diff(&numeric);
    Ok(DerivativeField { numeric, analytic, mismatch, holomorphy_residual, step: h, richardson })
}

/// Derivative field of a number-conserving `Λ(n)` with respect to `n`, entry `(i, j)`
/// being `∂Λ/∂n_ji`.
pub fn dlambda_dn(n: &Matrix<f64>, h: f64) -> Result<OperatorGrid> {
    dlambda_dn_of(n, h, &|x: &Matrix<f64>| GaussianParams::thermal(x.clone())?.materialize())
}

/// Same as [`dlambda_dn`] for an arbitrary operator-valued function of `n`.
pub fn dlambda_dn_of(
    n: &Matrix<f64>,
    h: f64,
    f: &dyn Fn(&Matrix<f64>) -> Result<FockOperator<f64>>,
) -> Result<OperatorGrid> {
    let m = n.rows();
    let mut entries = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let mut plus = n.clone();
            let mut minus = n.clone();
            plus[(j, i)] += Complex::new(h, 0.0);
            minus[(j, i)] -= Complex::new(h, 0.0);
            let d = &f(&plus)? - &f(&minus)?;
            entries.push(d.scale(Complex::new(0.5 / h, 0.0)));
        }
    }
    let mut it = entries.into_iter();
    Ok(OperatorGrid::from_fn(m, m, |_, _| it.next().expect("grid size")))
}

/// Directional derivative of `sqrt(det σ)` along the source entry `σ_νμ`, normalized by
/// `sqrt(det σ)`; the closed form is `(σ⁻¹)_μν`.
pub fn log_sqrt_det_derivative(sigma: &ExtendedMatrix<f64>, mu: usize, nu: usize, h: f64) -> Result<Complex<f64>> {
    let m = sigma.modes();
    let dir = pair_direction::<f64>(m, nu, mu);
    let d0 = sigma.full().det()?;
    let ratio = |s: f64| -> Result<Complex<f64>> {
        let shifted = sigma.full() + &dir.scale(Complex::new(s, 0.0));
        Ok((shifted.det()? / d0).sqrt())
    };
    Ok((ratio(h)? - ratio(-h)?) / (2.0 * h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_params, random_thermal};

    #[test]
    fn numeric_matches_closed_form() {
        let p = random_params(2, 6).unwrap();
        let f = dlambda_dsigma(&p, DEFAULT_STEP).unwrap();
        assert!(f.mismatch < 1e-8, "{}", f.mismatch);
        assert!(f.holomorphy_residual < 1e-8);
        assert!(f.numeric.max_abs_diff(&f.analytic) < 1e-8);
    }

    #[test]
    fn thermal_derivative_shape() {
        let t = random_thermal(2, 2).unwrap();
        let d = dlambda_dn(&t.n, DEFAULT_STEP).unwrap();
        assert_eq!((d.size(), d.modes()), (2, 2));
        assert!(d.max_abs() > 0.0);
    }
}
