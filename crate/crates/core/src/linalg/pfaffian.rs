//! Pfaffians of complex antisymmetric matrices.

use num_complex::Complex;

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{cone, czero, Real};

/// Pfaffian by Parlett-Reid tridiagonalization with partial pivoting.
///
/// Rejects odd dimensions and matrices whose antisymmetry deviation exceeds `1e-12`
/// relative to the largest entry.
pub fn pfaffian<T: Real>(a: &Matrix<T>) -> Result<Complex<T>> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let dev = a.antisymmetry_deviation();
    if dev > T::structural_tol(1e-12) {
        return Err(Error::NotAntisymmetric { deviation: dev.to_f64_lossy() });
    }
    Ok(pfaffian_unchecked(a))
}

/// Parlett-Reid elimination without validation. Only the strictly upper triangle is
/// trusted, the lower triangle is rebuilt from it.
pub(crate) fn pfaffian_unchecked<T: Real>(a: &Matrix<T>) -> Complex<T> {
    let n = a.rows();
    if n == 0 {
        return cone();
    }
    if n % 2 == 1 {
        return czero();
    }
    let mut a = Matrix::from_fn(n, n, |i, j| {
        if i < j {
            a[(i, j)]
        } else if i > j {
            -a[(j, i)]
        } else {
            czero()
        }
    });
    let mut pf = cone::<T>();
    for k in (0..n - 1).step_by(2) {
        let kp = (k + 1..n)
            .max_by(|&x, &y| a[(x, k)].norm().partial_cmp(&a[(y, k)].norm()).unwrap_or(std::cmp::Ordering::Equal))
            .unwrap_or(k + 1);
        if kp != k + 1 {
            a.swap_rows(k + 1, kp);
            a.swap_cols(k + 1, kp);
            pf = -pf;
        }
        let pivot = a[(k, k + 1)];
        if pivot.norm().is_zero() {
            return czero();
        }
        pf = pf * pivot;
        if k + 2 < n {
            let tau: Vec<Complex<T>> = (k + 2..n).map(|j| a[(k, j)] / pivot).collect();
            let col: Vec<Complex<T>> = (k + 2..n).map(|i| a[(i, k + 1)]).collect();
            for (ii, i) in (k + 2..n).enumerate() {
                for (jj, j) in (k + 2..n).enumerate() {
                    a[(i, j)] = a[(i, j)] + tau[ii] * col[jj] - col[ii] * tau[jj];
                }
            }
        }
    }
    pf
}

/// Pfaffian by expansion along the first row. Exponential cost; used as a reference
/// for small matrices.
pub fn pfaffian_expansion<T: Real>(a: &Matrix<T>) -> Complex<T> {
    fn rec<T: Real>(a: &Matrix<T>, idx: &[usize]) -> Complex<T> {
        if idx.is_empty() {
            return cone();
        }
        if idx.len() % 2 == 1 {
            return czero();
        }
        let first = idx[0];
        let mut total = czero();
        for k in 1..idx.len() {
            let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[k]).collect();
            let term = a[(first, idx[k])] * rec(a, &rest);
            // removing idx[0] and idx[k] brings the sign (-1)^(k+1)
            total = if k % 2 == 1 { total + term } else { total - term };
        }
        total
    }
    let idx: Vec<usize> = (0..a.rows()).collect();
    rec(a, &idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    #[test]
    fn two_by_two() {
        let a: Matrix<f64> = Matrix::from_rows(vec![vec![czero(), c(2.0, 1.0)], vec![c(-2.0, -1.0), czero()]]).unwrap();
        assert!((pfaffian(&a).unwrap() - c(2.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn four_by_four_matches_closed_form() {
        let v = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        let mut a: Matrix<f64> = Matrix::zeros(4, 4);
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            a[(i, j)] = c(v[k], 0.0);
            a[(j, i)] = c(-v[k], 0.0);
        }
        // a01 a23 - a02 a13 + a03 a12
        let expect = 1.0 * 6.0 - 2.0 * 5.0 + 3.0 * 4.0;
        assert!((pfaffian(&a).unwrap() - c(expect, 0.0)).norm() < 1e-13);
        assert!((pfaffian_expansion(&a) - c(expect, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn rejects_bad_input() {
        let odd: Matrix<f64> = Matrix::zeros(3, 3);
        assert_eq!(pfaffian(&odd), Err(Error::OddDimension(3)));
        let sym: Matrix<f64> = Matrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert!(matches!(pfaffian(&sym), Err(Error::NotAntisymmetric { .. })));
        assert_eq!(pfaffian(&Matrix::<f64>::zeros(0, 0)).unwrap(), cone());
    }

    #[test]
    fn zero_column_gives_zero() {
        let mut a: Matrix<f64> = Matrix::zeros(4, 4);
        a[(1, 2)] = c(1.0, 0.0);
        a[(2, 1)] = c(-1.0, 0.0);
        assert_eq!(pfaffian(&a).unwrap(), czero());
    }

    #[test]
    fn single_precision_works() {
        let a: Matrix<f32> = Matrix::from_real_rows(&[&[0.0, 1.5], &[-1.5, 0.0]]);
        assert!((pfaffian(&a).unwrap().re - 1.5).abs() < 1e-6);
    }
}
