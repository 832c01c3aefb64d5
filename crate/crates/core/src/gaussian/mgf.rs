//! Moment generating function `M(τ) = sqrt(det[I - στ])`, with the branch fixed by
//! continuity from `M(0) = 1`.

use num_complex::Complex;

use super::operator::covariance_inverse;
use super::params::GaussianParams;
use crate::error::{Error, Result};
use crate::linalg::{partner_index, pfaffian, ExtendedMatrix, Matrix};
use crate::scalar::{cone, Real};

/// Generalized-antisymmetric unit direction for the source entry `τ_{μν}`: it moves
/// `τ_{μν}` by `+1` and its partner `τ_{X(ν) X(μ)}` by `-1`. Zero when the entry is its
/// own partner.
pub fn pair_direction<T: Real>(modes: usize, mu: usize, nu: usize) -> Matrix<T> {
    let k = 2 * modes;
    let mut e = Matrix::zeros(k, k);
    let (pm, pn) = (partner_index(nu, modes), partner_index(mu, modes));
    if (pm, pn) == (mu, nu) {
        return e;
    }
    e[(mu, nu)] = cone();
    e[(pm, pn)] = -cone::<T>();
    e
}

fn check_source<T: Real>(p: &GaussianParams<T>, tau: &Matrix<T>) -> Result<ExtendedMatrix<T>> {
    let k = 2 * p.modes();
    if tau.rows() != k || tau.cols() != k {
        return Err(Error::DimensionMismatch { expected: k, found: tau.rows().max(tau.cols()) });
    }
    let t = ExtendedMatrix::from_full(tau.clone())?;
    t.check_generalized_antisymmetric(1e-10)?;
    Ok(t)
}

/// `M(τ)` normalized to `M(0) = 1`. The square root is continued along `t τ`,
/// `t ∈ [0, 1]`, with adaptive steps; a zero of the determinant on the path or a step
/// that cannot separate the two roots gives [`Error::BranchAmbiguity`].
pub fn mgf<T: Real>(p: &GaussianParams<T>, tau: &Matrix<T>) -> Result<Complex<T>> {
    check_source(p, tau)?;
    let k = 2 * p.modes();
    let st = p.covariance().full().matmul(tau);
    let det_at = |t: T| -> Result<Complex<T>> {
        let a = Matrix::from_fn(k, k, |i, j| {
            let id = if i == j { cone() } else { Complex::new(T::zero(), T::zero()) };
            id - st[(i, j)] * t
        });
        a.det()
    };
    let mut s = cone::<T>();
    let mut t = T::zero();
    let max_step = T::lit(0.25);
    let mut dt = T::lit(0.0625);
    let tiny = T::lit(1e-13);
    while t < T::one() {
        let step = dt.min(T::one() - t);
        let d = det_at(t + step)?;
        if d.norm() < tiny {
            return Err(Error::BranchAmbiguity { t: (t + step).to_f64_lossy() });
        }
        let r = d.sqrt();
        let cand = if (r - s).norm() <= (-r - s).norm() { r } else { -r };
        if (cand - s).norm() > T::lit(0.5) * r.norm() {
            dt = dt * T::lit(0.5);
            if dt < T::lit(1e-10) {
                return Err(Error::BranchAmbiguity { t: t.to_f64_lossy() });
            }
            continue;
        }
        s = cand;
        t = t + step;
        dt = (dt * T::lit(2.0)).min(max_step);
    }
    Ok(s)
}

/// `M(τ)` as the Pfaffian ratio `Pf[(σ⁻¹ - τ)_A] / Pf[(σ⁻¹)_A]`: a polynomial in `τ`
/// with no branch choice. Needs an invertible covariance.
pub fn mgf_pfaffian<T: Real>(p: &GaussianParams<T>, tau: &Matrix<T>) -> Result<Complex<T>> {
    let t = check_source(p, tau)?;
    let inv = covariance_inverse(&p.covariance())?;
    let shifted = ExtendedMatrix::from_full(inv.full() - t.full())?;
    let num = pfaffian(&antisymmetric_part(&shifted.antisymmetrize()))?;
    let den = pfaffian(&antisymmetric_part(&inv.antisymmetrize()))?;
    Ok(num / den)
}

fn antisymmetric_part<T: Real>(a: &Matrix<T>) -> Matrix<T> {
    let half = T::lit(0.5);
    Matrix::from_fn(a.rows(), a.cols(), |i, j| (a[(i, j)] - a[(j, i)]) * half)
}
