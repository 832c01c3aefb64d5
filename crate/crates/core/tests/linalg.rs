use num_complex::Complex;

use fermigauss::linalg::{pfaffian, pfaffian::pfaffian_expansion, signature_matrix, ExtendedMatrix, Matrix};
use fermigauss::random::{complex_in_square, random_params, rng};
use fermigauss::{Error, Gaussian};

fn c(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

fn random_antisymmetric(k: usize, seed: u64) -> Matrix<f64> {
    let mut r = rng(seed);
    let a = Matrix::from_fn(k, k, |_, _| complex_in_square(&mut r, 2.0));
    &a - &a.transpose()
}

#[test]
fn two_by_two_pfaffian_is_upper_entry() {
    let a = c(0.7, -1.2);
    let m = Matrix::from_rows(vec![vec![c(0.0, 0.0), a], vec![-a, c(0.0, 0.0)]]).unwrap();
    assert_eq!(pfaffian(&m).unwrap(), a);
}

#[test]
fn four_by_four_closed_form() {
    let m = random_antisymmetric(4, 2);
    let (a, b, cc, d, e, f) = (m[(0, 1)], m[(0, 2)], m[(0, 3)], m[(1, 2)], m[(1, 3)], m[(2, 3)]);
    let expected = a * f - b * e + cc * d;
    assert!((pfaffian(&m).unwrap() - expected).norm() < 1e-14);
}

#[test]
fn pfaffian_agrees_with_expansion_and_determinant() {
    for (k, seed) in [(6, 0), (6, 1), (8, 2), (10, 3), (12, 4)] {
        let m = random_antisymmetric(k, seed);
        let pf = pfaffian(&m).unwrap();
        let det = m.det().unwrap();
        assert!((pf * pf - det).norm() < 1e-10 * det.norm().max(1.0), "k={k}");
        if k <= 8 {
            assert!((pf - pfaffian_expansion(&m)).norm() < 1e-11 * pf.norm().max(1.0));
        }
    }
}

#[test]
fn pfaffian_errors() {
    let odd = random_antisymmetric(3, 0);
    assert!(matches!(pfaffian(&odd), Err(Error::OddDimension(3))));
    let not_square: Matrix<f64> = Matrix::zeros(2, 3);
    assert!(matches!(pfaffian(&not_square), Err(Error::NotSquare { .. })));
    let sym = Matrix::<f64>::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
    assert!(matches!(pfaffian(&sym), Err(Error::NotAntisymmetric { .. })));
}

#[test]
fn single_mode_interleaving() {
    let (s, m, mp) = (c(0.3, 0.1), c(0.0, 0.0), c(0.0, 0.0));
    let sigma = ExtendedMatrix::from_blocks(
        &Matrix::diagonal(&[s]),
        &Matrix::diagonal(&[m]),
        &Matrix::diagonal(&[mp]),
        &Matrix::diagonal(&[-s]),
    )
    .unwrap();
    let a = sigma.antisymmetrize();
    let expected = Matrix::from_rows(vec![vec![m, s], vec![-s, mp]]).unwrap();
    assert_eq!(a, expected);
}

#[test]
fn thermal_interleaving_has_zero_diagonal() {
    let t = fermigauss::random::random_thermal(2, 5).unwrap();
    let sigma = t.covariance();
    let a = sigma.antisymmetrize();
    for i in 0..4 {
        assert_eq!(a[(i, i)], c(0.0, 0.0));
    }
    let pf = pfaffian(&a).unwrap();
    let det = sigma.full().det().unwrap();
    assert!((pf.norm_sqr() - det.norm()).abs() < 1e-12);
}

#[test]
fn generalized_antisymmetry_checks() {
    let p = random_params(3, 1).unwrap();
    assert!(p.covariance().check_generalized_antisymmetric(1e-12).is_ok());
    let mut bad = p.covariance().into_full();
    bad[(0, 4)] += c(1.0, 0.0);
    let bad = ExtendedMatrix::from_full(bad).unwrap();
    assert!(matches!(bad.check_generalized_antisymmetric(1e-12), Err(Error::NotGeneralizedAntisymmetric { .. })));
    let zero = ExtendedMatrix::from_full(Matrix::<f64>::zeros(4, 4)).unwrap();
    assert!(zero.check_generalized_antisymmetric(1e-12).is_ok());
    let id = ExtendedMatrix::from_full(Matrix::<f64>::identity(4)).unwrap();
    assert!(id.check_generalized_antisymmetric(1e-12).is_err());
}

#[test]
fn determinant_and_inverse() {
    let id: Matrix<f64> = Matrix::identity(3);
    assert_eq!(id.det().unwrap(), c(1.0, 0.0));
    assert_eq!(id.inverse().unwrap(), id);
    let d: Matrix<f64> = Matrix::diagonal(&[c(2.0, 0.0), c(3.0, 0.0)]);
    assert!((d.det().unwrap() - c(6.0, 0.0)).norm() < 1e-15);
    let mut r = rng(8);
    let a = Matrix::from_fn(4, 4, |_, _| complex_in_square(&mut r, 2.0));
    let inv = a.inverse().unwrap();
    assert!(a.matmul(&inv).max_abs_diff(&Matrix::identity(4)) < 1e-12);
    let singular = Matrix::<f64>::from_real_rows(&[&[1.0, 2.0], &[2.0, 4.0]]);
    assert!(matches!(singular.inverse(), Err(Error::Singular { .. })));
}

#[test]
fn vacuum_covariance_and_signature() {
    let vac = Gaussian::thermal(Matrix::zeros(1, 1)).unwrap();
    assert_eq!(vac.covariance().into_full(), signature_matrix(1));
    let s: Matrix<f64> = signature_matrix(2);
    assert_eq!(s, Matrix::diagonal(&[c(-1.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]));
}
