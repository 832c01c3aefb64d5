//! Seeded sampling of test inputs. All draws use `ChaCha8Rng::seed_from_u64`, so a seed
//! fixes the output on every platform.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::fock::check_modes;
use crate::gaussian::GaussianParams;
use crate::linalg::Matrix;
use crate::scalar::{c, cone};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform draw from the square `[-scale/2, scale/2)²` in the complex plane.
pub fn complex_in_square(rng: &mut SeededRng, scale: f64) -> Complex<f64> {
    Complex::new(scale * (rng.gen::<f64>() - 0.5), scale * (rng.gen::<f64>() - 0.5))
}

fn random_matrix(rng: &mut SeededRng, k: usize, scale: f64) -> Matrix<f64> {
    Matrix::from_fn(k, k, |_, _| complex_in_square(rng, scale))
}

fn random_antisymmetric(rng: &mut SeededRng, k: usize, scale: f64) -> Matrix<f64> {
    let a = random_matrix(rng, k, scale);
    (&a - &a.transpose()).scale(c(0.5, 0.0))
}

/// Accepts parameters whose covariance is comfortably invertible.
fn well_conditioned(p: &GaussianParams<f64>) -> bool {
    let sigma = p.covariance();
    match sigma.full().inverse() {
        Ok(inv) => inv.max_abs() < 50.0 && p.normalization_factor().is_ok_and(|z| z.norm() > 1e-3),
        Err(_) => false,
    }
}

/// Generic, non-Hermitian parameters with `Ω = 1`: `n = I/2 + 0.4 U` with `U` uniform in
/// the unit complex square, and antisymmetrized draws of the same scale for `m`, `m⁺`.
pub fn random_params(modes: usize, seed: u64) -> Result<GaussianParams<f64>> {
    check_modes(modes)?;
    let mut r = rng(seed);
    loop {
        let n = &Matrix::identity(modes).scale(c(0.5, 0.0)) + &random_matrix(&mut r, modes, 0.4);
        let m = random_antisymmetric(&mut r, modes, 0.4);
        let mp = random_antisymmetric(&mut r, modes, 0.4);
        let p = GaussianParams::new(cone(), n, m, mp)?;
        if well_conditioned(&p) {
            return Ok(p);
        }
    }
}

/// Number-conserving version of [`random_params`].
pub fn random_thermal(modes: usize, seed: u64) -> Result<GaussianParams<f64>> {
    let mut p = random_params(modes, seed)?;
    p.m = Matrix::zeros(modes, modes);
    p.m_plus = Matrix::zeros(modes, modes);
    Ok(p)
}

/// Random unitary from Gram-Schmidt on a complex Gaussian-ish matrix.
pub fn random_unitary(rng: &mut SeededRng, k: usize) -> Matrix<f64> {
    let mut cols: Vec<Vec<Complex<f64>>> = Vec::with_capacity(k);
    while cols.len() < k {
        let mut v: Vec<Complex<f64>> = (0..k).map(|_| complex_in_square(rng, 2.0)).collect();
        for u in &cols {
            let dot: Complex<f64> = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (x, y) in v.iter_mut().zip(u) {
                *x -= dot * y;
            }
        }
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-3 {
            cols.push(v.into_iter().map(|x| x / norm).collect());
        }
    }
    Matrix::from_fn(k, k, |i, j| cols[j][i])
}

/// Hermitian parameters with `m⁺ = m†` and occupation spectrum inside `[0.15, 0.85]`.
pub fn random_physical(modes: usize, seed: u64) -> Result<GaussianParams<f64>> {
    check_modes(modes)?;
    let mut r = rng(seed);
    loop {
        let u = random_unitary(&mut r, modes);
        let occ: Vec<Complex<f64>> = (0..modes).map(|_| c(0.15 + 0.7 * r.gen::<f64>(), 0.0)).collect();
        let n = u.matmul(&Matrix::diagonal(&occ)).matmul(&u.adjoint());
        let n = (&n + &n.adjoint()).scale(c(0.5, 0.0));
        let m = random_antisymmetric(&mut r, modes, 0.1);
        let p = GaussianParams::new(cone(), n, m.clone(), m.adjoint())?;
        if well_conditioned(&p) {
            return Ok(p);
        }
    }
}

fn random_psd(rng: &mut SeededRng, k: usize) -> Matrix<f64> {
    let g = Matrix::from_fn(k, k, |_, _| complex_in_square(rng, 2.0));
    g.matmul(&g.adjoint())
}

/// Random two-mode density matrix that respects parity superselection: independent
/// positive blocks on the even sector `{|00>, |11>}` and the odd sector `{|01>, |10>}`.
pub fn random_two_mode_density(seed: u64) -> Matrix<f64> {
    let mut r = rng(seed);
    let even = random_psd(&mut r, 2);
    let odd = random_psd(&mut r, 2);
    let (ev, od) = ([0usize, 3], [1usize, 2]);
    let mut rho = Matrix::zeros(4, 4);
    for a in 0..2 {
        for b in 0..2 {
            rho[(ev[a], ev[b])] = even[(a, b)];
            rho[(od[a], od[b])] = odd[(a, b)];
        }
    }
    let tr = rho.trace();
    rho.scale(cone::<f64>() / tr)
}

/// Normalized amplitudes `(α, β)` with `|α|² + |β|² = 1`.
pub fn random_amplitudes(rng: &mut SeededRng) -> (Complex<f64>, Complex<f64>) {
    let theta = std::f64::consts::FRAC_PI_2 * rng.gen::<f64>();
    let pa = std::f64::consts::TAU * rng.gen::<f64>();
    let pb = std::f64::consts::TAU * rng.gen::<f64>();
    (Complex::from_polar(theta.cos(), pa), Complex::from_polar(theta.sin(), pb))
}

/// Random diagonal density matrix on `modes` modes.
pub fn random_diagonal_density(modes: usize, seed: u64) -> Result<Matrix<f64>> {
    check_modes(modes)?;
    let mut r = rng(seed);
    let d = 1usize << modes;
    let w: Vec<f64> = (0..d).map(|_| r.gen::<f64>()).collect();
    let total: f64 = w.iter().sum();
    Ok(Matrix::diagonal(&w.iter().map(|x| c(x / total, 0.0)).collect::<Vec<_>>()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_reproduce() {
        assert_eq!(random_params(3, 42).unwrap(), random_params(3, 42).unwrap());
        assert_ne!(random_params(3, 42).unwrap(), random_params(3, 43).unwrap());
        assert_eq!(random_two_mode_density(8), random_two_mode_density(8));
    }

    #[test]
    fn draws_have_requested_structure() {
        let t = random_thermal(3, 1).unwrap();
        assert!(t.is_thermal());
        let p = random_physical(3, 1).unwrap();
        assert!(p.check_physical(1e-10).is_ok());
        let u = random_unitary(&mut rng(0), 4);
        assert!(u.matmul(&u.adjoint()).max_abs_diff(&Matrix::identity(4)) < 1e-12);
        let rho = random_two_mode_density(2);
        assert!((rho.trace() - cone::<f64>()).norm() < 1e-15);
        assert!(rho.is_positive_with_shift(1e-12));
        let (a, b) = random_amplitudes(&mut rng(3));
        assert!((a.norm_sqr() + b.norm_sqr() - 1.0).abs() < 1e-15);
    }
}
