use num_complex::Complex;

use fermigauss::fock::{FockOperator, Ladder, Monomial, NormalPolynomial};
use fermigauss::gaussian::{
    covariance_from_exponent, dense_inside_moment, exponent_from_covariance, mgf, mgf_pfaffian, pair_direction,
};
use fermigauss::linalg::{Block, Matrix};
use fermigauss::random::{complex_in_square, random_params, rng};
use fermigauss::{Error, Gaussian};

fn c(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

fn bell() -> Gaussian {
    let half = c(0.5, 0.0);
    Gaussian::two_mode(c(1.0, 0.0), Matrix::identity(2).scale(half), -half, -half).unwrap()
}

#[test]
fn vacuum_covariance_and_exponent() {
    let vac = Gaussian::thermal(Matrix::zeros(1, 1)).unwrap();
    let sigma = vac.covariance();
    assert_eq!(sigma.full(), &Matrix::from_real_rows(&[&[-1.0, 0.0], &[0.0, 1.0]]));
    let mu = exponent_from_covariance(&sigma).unwrap();
    assert!((mu.block(Block::UpperLeft)[(0, 0)] - c(1.0, 0.0)).norm() < 1e-15);
    let lam = vac.materialize().unwrap();
    assert_eq!(lam, FockOperator::outer(&[0], &[0]).unwrap());
}

#[test]
fn single_mode_exponent_and_operator() {
    for n in [0.1, 0.35, 0.8] {
        let p = Gaussian::thermal(Matrix::diagonal(&[c(n, 0.0)])).unwrap();
        let mu = exponent_from_covariance(&p.covariance()).unwrap();
        assert!((mu.block(Block::UpperLeft)[(0, 0)] - c(2.0 + 1.0 / (n - 1.0), 0.0)).norm() < 1e-14);
        let expected = Matrix::diagonal(&[c(1.0 - n, 0.0), c(n, 0.0)]);
        assert!(p.materialize().unwrap().matrix().max_abs_diff(&expected) < 1e-15);
    }
}

#[test]
fn exponent_round_trip() {
    let p = random_params(3, 2).unwrap();
    let sigma = p.covariance();
    let back = covariance_from_exponent(&exponent_from_covariance(&sigma).unwrap()).unwrap();
    assert!(back.full().max_abs_diff(sigma.full()) < 1e-13);
}

#[test]
fn bell_covariance_operator_and_moments() {
    let p = bell();
    let sigma = p.covariance();
    assert_eq!(sigma.block(Block::UpperRight)[(0, 1)], c(-0.5, 0.0));
    let lam = p.materialize_via_moments().unwrap();
    if let Ok(direct) = p.materialize() {
        assert!(direct.matrix().max_abs_diff(lam.matrix()) < 1e-12);
    }
    let half = c(0.5, 0.0);
    for (x, y) in [([0u8, 0], [0u8, 0]), ([0, 0], [1, 1]), ([1, 1], [0, 0]), ([1, 1], [1, 1])] {
        assert_eq!(lam.element(&x, &y).unwrap(), half);
    }
    let b1b2 = p.normal_moment(&[Ladder::annihilate(0), Ladder::annihilate(1)]).unwrap();
    let b2d_b1d = p.normal_moment(&[Ladder::create(1), Ladder::create(0)]).unwrap();
    assert_eq!((b1b2, b2d_b1d), (-half, -half));
    assert!((p.number_number(0, 1).unwrap() - half).norm() < 1e-15);
}

#[test]
fn singular_covariance_is_reported() {
    // eigenvalue 1 of n with m = 0 makes I - n singular
    let p = Gaussian::thermal(Matrix::from_real_rows(&[&[1.0, 0.0], &[0.0, 0.3]])).unwrap();
    assert!(matches!(p.materialize(), Err(Error::SingularCovariance)));
    assert!(p.normalization_factor().unwrap().norm() < 1e-15);
    let lam = p.materialize_via_moments().unwrap();
    assert!((lam.trace() - c(1.0, 0.0)).norm() < 1e-15);
}

#[test]
fn weight_scales_trace() {
    let mut p = random_params(2, 8).unwrap();
    p.omega = c(2.5, 0.0);
    assert!((p.materialize().unwrap().trace() - c(2.5, 0.0)).norm() < 1e-12);
}

#[test]
fn vacuum_moments_vanish() {
    let vac = Gaussian::thermal(Matrix::zeros(2, 2)).unwrap();
    for w in [
        vec![Ladder::create(0), Ladder::annihilate(0)],
        vec![Ladder::annihilate(0), Ladder::annihilate(1)],
        vec![Ladder::create(0), Ladder::create(1)],
    ] {
        assert_eq!(vac.normal_moment(&w).unwrap(), c(0.0, 0.0));
    }
}

#[test]
fn number_variance_examples() {
    for (occ, var) in [(0.0, 0.0), (1.0, 0.0), (0.5, 0.25)] {
        let p = Gaussian::thermal(Matrix::diagonal(&[c(occ, 0.0)])).unwrap();
        assert_eq!(p.number_variance(0).unwrap(), var);
    }
}

#[test]
fn mgf_at_zero_is_one() {
    let p = random_params(3, 0).unwrap();
    assert_eq!(mgf(&p, &Matrix::zeros(6, 6)).unwrap(), c(1.0, 0.0));
    assert!(mgf(&p, &Matrix::identity(6)).is_err());
}

/// `Tr[:exp(b̲† τ b̲ / 2) Λ:] / Ω` expanded in the polynomial algebra: inside the normal
/// ordering the quadratic terms commute, so the exponential is a finite product.
fn mgf_by_expansion(p: &Gaussian, tau: &Matrix<f64>) -> Complex<f64> {
    let m = p.modes();
    let single = |l: Ladder| NormalPolynomial::<f64>::from_word(m, &[l], c(1.0, 0.0)).unwrap();
    let mut q = NormalPolynomial::zero(m).unwrap();
    for mu in 0..2 * m {
        for nu in 0..2 * m {
            let t = tau[(mu, nu)];
            if t != c(0.0, 0.0) {
                let pair = single(Ladder::extended_adjoint(mu, m)).normal_product(&single(Ladder::extended(nu, m)));
                q = q.add(&pair.scale(t * 0.5));
            }
        }
    }
    let factors: Vec<(Monomial, Complex<f64>)> = q.iter().collect();
    let expo = NormalPolynomial::product_of_unit_factors(m, &factors).unwrap();
    let lam = p.materialize().unwrap();
    let total: Complex<f64> = expo.iter().map(|(mono, coeff)| coeff * dense_inside_moment(&mono.word(), &lam)).sum();
    total / p.omega
}

#[test]
fn mgf_matches_polynomial_expansion() {
    let mut r = rng(31);
    for seed in 0..6 {
        let p = random_params(2, seed).unwrap();
        let mut tau = Matrix::zeros(4, 4);
        for mu in 0..4 {
            for nu in 0..4 {
                tau = &tau + &pair_direction::<f64>(2, mu, nu).scale(complex_in_square(&mut r, 0.3));
            }
        }
        let oracle = mgf_by_expansion(&p, &tau);
        assert!((mgf(&p, &tau).unwrap() - oracle).norm() < 1e-12, "seed {seed}");
        assert!((mgf_pfaffian(&p, &tau).unwrap() - oracle).norm() < 1e-12);
    }
}

#[test]
fn first_moments_are_weighted_covariance() {
    let p = random_params(2, 3).unwrap();
    let lam = p.materialize().unwrap();
    for mu in 0..4 {
        for nu in 0..4 {
            let w = [Ladder::extended(mu, 2), Ladder::extended_adjoint(nu, 2)];
            let oracle = dense_inside_moment(&w, &lam);
            assert!((p.first_moments()[(mu, nu)] - oracle).norm() < 1e-14);
        }
    }
}
