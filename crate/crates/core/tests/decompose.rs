use num_complex::Complex;
use rand::Rng;

use fermigauss::decompose::{
    decompose_diagonal, decompose_general, decompose_two_mode, limit_gaussian_squeezed, limit_gaussian_thermal, reconstruct,
    Decomposition, DensityMatrix, LimitFamily, LimitKind, DEFAULT_SCHEDULE,
};
use fermigauss::fock::{dimension, FockOperator};
use fermigauss::linalg::Matrix;
use fermigauss::random::{complex_in_square, rng};
use fermigauss::{Error, Gaussian};

fn c(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

/// Random density matrix with independent positive blocks on the even and odd parity sectors.
fn random_density(modes: usize, seed: u64) -> Matrix<f64> {
    let mut r = rng(seed);
    let d = dimension(modes);
    let g = Matrix::from_fn(d, d, |i, j| {
        if (i.count_ones() + j.count_ones()) % 2 == 0 {
            complex_in_square(&mut r, 2.0)
        } else {
            c(0.0, 0.0)
        }
    });
    let rho = g.matmul(&g.adjoint());
    let tr = rho.trace();
    rho.scale(c(1.0, 0.0) / tr)
}

#[test]
fn single_mode_mixture() {
    let n = 0.3;
    let rho = DensityMatrix::new(1, Matrix::diagonal(&[c(1.0 - n, 0.0), c(n, 0.0)])).unwrap();
    let d = decompose_diagonal(&rho).unwrap();
    let w: Vec<f64> = d.terms.iter().map(|t| t.weight).collect();
    assert_eq!(w, vec![1.0 - n, n]);
    assert_eq!(d.terms[1].params.n[(0, 0)], c(1.0, 0.0));
}

#[test]
fn vacuum_plus_full_is_two_terms() {
    let rho = DensityMatrix::new(2, Matrix::diagonal(&[c(0.7, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.3, 0.0)])).unwrap();
    let d = decompose_diagonal(&rho).unwrap();
    assert_eq!(d.terms.len(), 2);
    assert_eq!(d.terms[1].params.n, Matrix::identity(2));
    assert!(d.residual.unwrap() < 1e-12);
}

#[test]
fn bell_state_two_mode_and_compact_agree() {
    let half = c(0.5, 0.0);
    let mut m = Matrix::zeros(4, 4);
    for (i, j) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
        m[(i, j)] = half;
    }
    let rho = DensityMatrix::new(2, m).unwrap();
    let d = decompose_two_mode(&rho).unwrap();
    assert!(d.residual.unwrap() < 1e-12);
    let compact = Gaussian::two_mode(c(1.0, 0.0), Matrix::identity(2).scale(half), -half, -half).unwrap();
    assert!(compact.materialize_via_moments().unwrap().matrix().max_abs_diff(rho.matrix()) < 1e-12);
}

#[test]
fn superposition_two_mode_and_compact_agree() {
    let mut r = rng(17);
    for _ in 0..5 {
        let (a, b) = fermigauss::random::random_amplitudes(&mut r);
        let mut phi = FockOperator::zero(2);
        for (x, ox) in [(a, [1u8, 0]), (b, [0, 1])] {
            for (y, oy) in [(a, [1u8, 0]), (b, [0, 1])] {
                phi = &phi + &FockOperator::outer(&ox, &oy).unwrap().scale(x * y.conj());
            }
        }
        let rho = DensityMatrix::new(2, phi.matrix().clone()).unwrap();
        let d = decompose_two_mode(&rho).unwrap();
        assert_eq!(d.terms.len(), 8);
        assert!(d.residual.unwrap() < 1e-12);
        let n = Matrix::from_rows(vec![vec![c(a.norm_sqr(), 0.0), a.conj() * b], vec![a * b.conj(), c(b.norm_sqr(), 0.0)]]).unwrap();
        let compact = Gaussian::thermal(n).unwrap().materialize_via_moments().unwrap();
        assert!(compact.max_abs_diff(&phi) < 1e-12);
    }
}

#[test]
fn two_mode_rejects_odd_coherence_and_wrong_size() {
    let mut m = Matrix::diagonal(&[c(0.25, 0.0); 4]);
    m[(0, 1)] = c(0.1, 0.0);
    m[(1, 0)] = c(0.1, 0.0);
    let rho = DensityMatrix::new(2, m).unwrap();
    assert!(matches!(decompose_two_mode(&rho), Err(Error::SuperselectionViolated { .. })));
    let rho3 = DensityMatrix::new(3, random_density(3, 0)).unwrap();
    assert!(matches!(decompose_two_mode(&rho3), Err(Error::ModeMismatch { .. })));
}

#[test]
fn density_validation_rejects_negative_spectrum() {
    // Hermitian, unit trace, but one negative eigenvalue.
    let mut m = Matrix::diagonal(&[c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.5, 0.0)]);
    m[(0, 3)] = c(0.8, 0.0);
    m[(3, 0)] = c(0.8, 0.0);
    assert_eq!(DensityMatrix::new(2, m).unwrap_err(), Error::NotPositive);
}

#[test]
fn general_decomposition_three_modes() {
    for seed in 0..3 {
        let rho = DensityMatrix::new(3, random_density(3, seed)).unwrap();
        let d = decompose_general(&rho, &DEFAULT_SCHEDULE).unwrap();
        assert!(d.terms.iter().all(|t| t.weight >= 0.0));
        assert!(!d.families.is_empty());
        assert!(d.residual.unwrap() < 1e-6, "seed {seed}: {:e}", d.residual.unwrap());
        assert!(d.families.iter().any(|f| f.kind == LimitKind::Squeezed));
    }
}

#[test]
fn decomposition_json_round_trip() {
    let rho = DensityMatrix::new(2, random_density(2, 4)).unwrap();
    let d = decompose_general(&rho, &DEFAULT_SCHEDULE).unwrap();
    let text = serde_json::to_string(&d).unwrap();
    let back: Decomposition<f64> = serde_json::from_str(&text).unwrap();
    assert_eq!(back, d);
    assert!(reconstruct(&back).unwrap().matrix().max_abs_diff(rho.matrix()) < 1e-6);
}

#[test]
fn two_pair_family_scales_as_eps_squared() {
    let f = LimitFamily::<f64>::new(&[1, 1, 0, 0], &[0, 0, 1, 1], c(0.2, 0.1), &DEFAULT_SCHEDULE).unwrap();
    assert_eq!(f.exponent, 2);
    let member = f.member(1e-2).unwrap();
    assert!((member.weight - c(1e-4, 0.0)).norm() < 1e-18);
    let (r1, r2) = (f.residual(1e-2).unwrap(), f.residual(5e-3).unwrap());
    assert!((r1 / r2 - 2.0).abs() < 0.4, "ratio {}", r1 / r2);
    assert!(f.extrapolate().unwrap().max_abs_diff(&f.target().unwrap()) < 1e-6);
}

#[test]
fn random_limit_targets_converge() {
    let mut r = rng(3);
    for _ in 0..20 {
        let modes = r.gen_range(2..=4);
        let row: Vec<u8> = (0..modes).map(|_| r.gen_range(0..=1)).collect();
        let mut col: Vec<u8> = (0..modes).map(|_| r.gen_range(0..=1)).collect();
        if (row.iter().sum::<u8>() + col.iter().sum::<u8>()) % 2 == 1 {
            col[0] ^= 1;
        }
        let z = complex_in_square(&mut r, 2.0);
        let f = LimitFamily::<f64>::new(&row, &col, z, &DEFAULT_SCHEDULE).unwrap();
        let err = f.extrapolate().unwrap().max_abs_diff(&f.target().unwrap());
        assert!(err < 1e-6, "{row:?} {col:?}: {err:e}");
    }
}

#[test]
fn squeezed_with_zero_difference_delegates() {
    let z = c(0.4, -0.3);
    let a = limit_gaussian_squeezed(&[1, 0, 1], &[0, 1, 1], z, 0.1).unwrap();
    let b = limit_gaussian_thermal(&[1, 0, 1], &[0, 1, 1], z, 0.1).unwrap();
    assert_eq!(a, b);
}

#[test]
fn two_pair_squeezing() {
    let f = LimitFamily::<f64>::new(&[1, 1, 1, 1], &[0, 0, 0, 0], c(1.0, 0.0), &DEFAULT_SCHEDULE).unwrap();
    assert_eq!((f.kind, f.exponent), (LimitKind::Squeezed, 2));
    assert!(f.extrapolate().unwrap().max_abs_diff(&f.target().unwrap()) < 1e-6);
}
