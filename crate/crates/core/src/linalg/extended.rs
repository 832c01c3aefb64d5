//! `2M x 2M` matrices in the extended ladder basis `(b_1..b_M, b_1†..b_M†)`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::pfaffian::pfaffian;
use crate::error::{Error, Result};
use crate::scalar::{cone, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    UpperLeft,
    UpperRight,
    LowerLeft,
    LowerRight,
}

/// A `2M x 2M` matrix split into four `M x M` blocks `[[a, b], [c, d]]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtendedMatrix<T: Real> {
    modes: usize,
    full: Matrix<T>,
}

impl<T: Real> ExtendedMatrix<T> {
    pub fn from_full(full: Matrix<T>) -> Result<Self> {
        if !full.is_square() {
            return Err(Error::NotSquare { rows: full.rows(), cols: full.cols() });
        }
        if full.rows() % 2 == 1 {
            return Err(Error::OddDimension(full.rows()));
        }
        Ok(ExtendedMatrix { modes: full.rows() / 2, full })
    }

    pub fn from_blocks(a: &Matrix<T>, b: &Matrix<T>, c: &Matrix<T>, d: &Matrix<T>) -> Result<Self> {
        let m = a.rows();
        for blk in [a, b, c, d] {
            if blk.rows() != m || blk.cols() != m {
                return Err(Error::DimensionMismatch { expected: m, found: blk.rows().max(blk.cols()) });
            }
        }
        let full = Matrix::from_fn(2 * m, 2 * m, |i, j| {
            let src = match (i < m, j < m) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            src[(i % m, j % m)]
        });
        Ok(ExtendedMatrix { modes: m, full })
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn full(&self) -> &Matrix<T> {
        &self.full
    }

    pub fn into_full(self) -> Matrix<T> {
        self.full
    }

    pub fn block(&self, which: Block) -> Matrix<T> {
        let m = self.modes;
        let (r0, c0) = match which {
            Block::UpperLeft => (0, 0),
            Block::UpperRight => (0, m),
            Block::LowerLeft => (m, 0),
            Block::LowerRight => (m, m),
        };
        Matrix::from_fn(m, m, |i, j| self.full[(r0 + i, c0 + j)])
    }

    /// Largest relative deviation from `A = -X Aᵀ X`, where `X` swaps the two halves.
    pub fn generalized_antisymmetry_deviation(&self) -> T {
        let scale = self.full.max_abs();
        if scale.is_zero() {
            return T::zero();
        }
        let n = 2 * self.modes;
        let mut dev = T::zero();
        for i in 0..n {
            for j in 0..n {
                let partner = self.full[(partner_index(j, self.modes), partner_index(i, self.modes))];
                dev = dev.max((self.full[(i, j)] + partner).norm());
            }
        }
        dev / scale
    }

    pub fn check_generalized_antisymmetric(&self, tol: f64) -> Result<()> {
        let dev = self.generalized_antisymmetry_deviation();
        if dev > T::structural_tol(tol) {
            Err(Error::NotGeneralizedAntisymmetric { deviation: dev.to_f64_lossy() })
        } else {
            Ok(())
        }
    }

    /// Interleaved antisymmetric form: row `2i` is upper row `i` and row `2i+1` is lower
    /// row `i`; column `2j` is right column `j` and column `2j+1` is left column `j`.
    pub fn antisymmetrize(&self) -> Matrix<T> {
        let m = self.modes;
        Matrix::from_fn(2 * m, 2 * m, |r, c| {
            let row = if r % 2 == 0 { r / 2 } else { m + r / 2 };
            let col = if c % 2 == 0 { m + c / 2 } else { c / 2 };
            self.full[(row, col)]
        })
    }

    /// Pfaffian of the interleaved form. Its square is `(-1)^M det`.
    pub fn pfaffian(&self) -> Result<Complex<T>> {
        pfaffian(&self.antisymmetrize())
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(ExtendedMatrix { modes: self.modes, full: self.full.inverse()? })
    }

    pub fn mul(&self, other: &Self) -> Self {
        ExtendedMatrix { modes: self.modes, full: self.full.matmul(&other.full) }
    }

    /// `σX`: right multiplication by the half-swap.
    pub fn times_swap(&self) -> Matrix<T> {
        let n = 2 * self.modes;
        Matrix::from_fn(n, n, |i, j| self.full[(i, partner_index(j, self.modes))])
    }

    /// `Xσ`: left multiplication by the half-swap.
    pub fn swap_times(&self) -> Matrix<T> {
        let n = 2 * self.modes;
        Matrix::from_fn(n, n, |i, j| self.full[(partner_index(i, self.modes), j)])
    }
}

/// Index of the Hermitian partner in the extended basis: `b_i <-> b_i†`.
pub fn partner_index(i: usize, modes: usize) -> usize {
    if i < modes {
        i + modes
    } else {
        i - modes
    }
}

/// The half-swap permutation `X = [[0, I], [I, 0]]`.
pub fn swap_matrix<T: Real>(modes: usize) -> Matrix<T> {
    let n = 2 * modes;
    let mut x = Matrix::zeros(n, n);
    for i in 0..n {
        x[(i, partner_index(i, modes))] = cone();
    }
    x
}

/// The signature matrix `diag(-I, I)`.
pub fn signature_matrix<T: Real>(modes: usize) -> Matrix<T> {
    let mut s = Matrix::identity(2 * modes);
    for i in 0..modes {
        s[(i, i)] = -cone::<T>();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{c, czero};

    #[test]
    fn single_mode_interleaving() {
        let s = c::<f64>(0.3, 0.1);
        let m = c::<f64>(0.0, 0.0);
        let sigma = ExtendedMatrix::from_full(Matrix::from_rows(vec![vec![s, m], vec![m, -s]]).unwrap()).unwrap();
        let a = sigma.antisymmetrize();
        assert_eq!(a[(0, 0)], m);
        assert_eq!(a[(0, 1)], s);
        assert_eq!(a[(1, 0)], -s);
        assert!((sigma.pfaffian().unwrap() - s).norm() < 1e-15);
    }

    #[test]
    fn pfaffian_square_tracks_determinant() {
        // thermal two-mode σ = diag(nᵀ - I, I - n)
        let n: Matrix<f64> = Matrix::from_rows(vec![vec![c(0.3, 0.0), c(0.1, 0.05)], vec![c(0.2, -0.1), c(0.6, 0.0)]]).unwrap();
        let id = Matrix::identity(2);
        let zero = Matrix::zeros(2, 2);
        let sigma = ExtendedMatrix::from_blocks(&(&n.transpose() - &id), &zero, &zero, &(&id - &n)).unwrap();
        assert!(sigma.generalized_antisymmetry_deviation() < 1e-15);
        let pf = sigma.pfaffian().unwrap();
        let det = sigma.full().det().unwrap();
        assert!((pf * pf - det).norm() < 1e-14);
        assert_eq!(sigma.antisymmetrize()[(0, 0)], czero());
    }

    #[test]
    fn swap_products() {
        let a: Matrix<f64> = Matrix::from_fn(4, 4, |i, j| c((i * 4 + j) as f64, 0.0));
        let e = ExtendedMatrix::from_full(a.clone()).unwrap();
        let x = swap_matrix::<f64>(2);
        assert_eq!(e.times_swap(), &a * &x);
        assert_eq!(e.swap_times(), &x * &a);
    }
}
