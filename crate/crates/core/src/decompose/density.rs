//! Density matrices on the Fock space.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{check_modes, dimension};
use crate::linalg::Matrix;
use crate::scalar::Real;

/// Hermitian, positive semidefinite, unit-trace matrix on `2^M` basis states.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityMatrix<T: Real> {
    modes: usize,
    matrix: Matrix<T>,
}

pub const DENSITY_TOL: f64 = 1e-10;

impl<T: Real> DensityMatrix<T> {
    pub fn new(modes: usize, matrix: Matrix<T>) -> Result<Self> {
        check_modes(modes)?;
        let d = dimension(modes);
        if matrix.rows() != d || matrix.cols() != d {
            return Err(Error::DimensionMismatch { expected: d, found: matrix.rows().max(matrix.cols()) });
        }
        let tol = T::lit(DENSITY_TOL);
        let herm = matrix.hermiticity_deviation();
        if herm > tol {
            return Err(Error::NotHermitian(herm.to_f64_lossy()));
        }
        let tr = matrix.trace();
        if (tr - Complex::new(T::one(), T::zero())).norm() > tol {
            return Err(Error::NotNormalized(tr.re.to_f64_lossy()));
        }
        if !matrix.is_positive_with_shift(tol) {
            return Err(Error::NotPositive);
        }
        Ok(DensityMatrix { modes, matrix })
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.matrix[(row, col)]
    }

    /// Largest coupling between basis states of different number parity.
    pub fn parity_violation(&self) -> T {
        let d = self.matrix.rows();
        let mut worst = T::zero();
        for i in 0..d {
            for j in 0..d {
                if (i.count_ones() + j.count_ones()) % 2 == 1 {
                    worst = worst.max(self.matrix[(i, j)].norm());
                }
            }
        }
        worst
    }

    pub fn check_superselection(&self) -> Result<()> {
        let v = self.parity_violation();
        if v > T::lit(DENSITY_TOL) {
            Err(Error::SuperselectionViolated { magnitude: v.to_f64_lossy() })
        } else {
            Ok(())
        }
    }

    pub fn max_off_diagonal(&self) -> T {
        let d = self.matrix.rows();
        let mut worst = T::zero();
        for i in 0..d {
            for j in 0..d {
                if i != j {
                    worst = worst.max(self.matrix[(i, j)].norm());
                }
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    #[test]
    fn validation() {
        let ok: Matrix<f64> = Matrix::diagonal(&[c(0.25, 0.0); 4]);
        assert!(DensityMatrix::new(2, ok).is_ok());
        let neg: Matrix<f64> = Matrix::diagonal(&[c(1.5, 0.0), c(-0.5, 0.0)]);
        assert_eq!(DensityMatrix::new(1, neg).unwrap_err(), Error::NotPositive);
        let unnorm: Matrix<f64> = Matrix::diagonal(&[c(0.5, 0.0), c(0.1, 0.0)]);
        assert!(matches!(DensityMatrix::new(1, unnorm), Err(Error::NotNormalized(_))));
        let mut odd: Matrix<f64> = Matrix::diagonal(&[c(0.5, 0.0), c(0.5, 0.0)]);
        odd[(0, 1)] = c(0.1, 0.0);
        odd[(1, 0)] = c(0.1, 0.0);
        let rho = DensityMatrix::new(1, odd).unwrap();
        assert!(matches!(rho.check_superselection(), Err(Error::SuperselectionViolated { .. })));
    }
}
