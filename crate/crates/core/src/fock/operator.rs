//! Dense operators on the `2^M`-dimensional Fock space.

use std::ops::{Add, Deref, Mul, Neg, Sub};

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::basis::{apply_word, check_modes, dimension, state_index, Ladder};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{cone, Real};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FockOperator<T: Real> {
    modes: usize,
    matrix: Matrix<T>,
}

impl<T: Real> FockOperator<T> {
    pub fn from_matrix(modes: usize, matrix: Matrix<T>) -> Result<Self> {
        check_modes(modes)?;
        let d = dimension(modes);
        if matrix.rows() != d || matrix.cols() != d {
            return Err(Error::DimensionMismatch { expected: d, found: matrix.rows().max(matrix.cols()) });
        }
        Ok(FockOperator { modes, matrix })
    }

    pub(crate) fn wrap(modes: usize, matrix: Matrix<T>) -> Self {
        debug_assert_eq!(matrix.rows(), dimension(modes));
        FockOperator { modes, matrix }
    }

    pub fn zero(modes: usize) -> Self {
        let d = dimension(modes);
        FockOperator { modes, matrix: Matrix::zeros(d, d) }
    }

    pub fn identity(modes: usize) -> Self {
        FockOperator { modes, matrix: Matrix::identity(dimension(modes)) }
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.matrix
    }

    /// Dense matrix of a single ladder operator.
    pub fn ladder(op: Ladder, modes: usize) -> Self {
        let d = dimension(modes);
        let mut m = Matrix::zeros(d, d);
        for s in 0..d {
            if let Some(img) = op.apply(s, modes) {
                m[(img.state, s)] = if img.negative { -cone::<T>() } else { cone() };
            }
        }
        FockOperator { modes, matrix: m }
    }

    pub fn annihilator(mode: usize, modes: usize) -> Self {
        Self::ladder(Ladder::annihilate(mode), modes)
    }

    pub fn creator(mode: usize, modes: usize) -> Self {
        Self::ladder(Ladder::create(mode), modes)
    }

    /// Product of ladder operators computed by dense matrix multiplication.
    pub fn word_product(word: &[Ladder], modes: usize) -> Self {
        word.iter().fold(Self::identity(modes), |acc, &op| &acc * &Self::ladder(op, modes))
    }

    /// Product of ladder operators computed by acting on basis states.
    pub fn word_action(word: &[Ladder], modes: usize) -> Self {
        let d = dimension(modes);
        let mut m = Matrix::zeros(d, d);
        for s in 0..d {
            if let Some(img) = apply_word(word, s, modes) {
                m[(img.state, s)] = if img.negative { -cone::<T>() } else { cone() };
            }
        }
        FockOperator { modes, matrix: m }
    }

    /// `|row><col|` for occupation vectors.
    pub fn outer(row: &[u8], col: &[u8]) -> Result<Self> {
        if row.len() != col.len() {
            return Err(Error::ModeMismatch { left: row.len(), right: col.len() });
        }
        let modes = row.len();
        check_modes(modes)?;
        let mut op = Self::zero(modes);
        op.matrix[(state_index(row)?, state_index(col)?)] = cone();
        Ok(op)
    }

    pub fn trace(&self) -> Complex<T> {
        self.matrix.trace()
    }

    pub fn adjoint(&self) -> Self {
        FockOperator { modes: self.modes, matrix: self.matrix.adjoint() }
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        FockOperator { modes: self.modes, matrix: self.matrix.scale(s) }
    }

    pub fn element(&self, row: &[u8], col: &[u8]) -> Result<Complex<T>> {
        Ok(self.matrix[(state_index(row)?, state_index(col)?)])
    }

    /// Anticommutator `AB + BA`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.matrix.max_abs_diff(&other.matrix)
    }
}

impl<T: Real> Deref for FockOperator<T> {
    type Target = Matrix<T>;
    fn deref(&self) -> &Matrix<T> {
        &self.matrix
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident) => {
        impl<'a, T: Real> $tr<&'a FockOperator<T>> for &'a FockOperator<T> {
            type Output = FockOperator<T>;
            fn $f(self, rhs: &'a FockOperator<T>) -> FockOperator<T> {
                assert_eq!(self.modes, rhs.modes, "mode mismatch");
                FockOperator { modes: self.modes, matrix: (&self.matrix).$f(&rhs.matrix) }
            }
        }
        impl<T: Real> $tr<FockOperator<T>> for FockOperator<T> {
            type Output = FockOperator<T>;
            fn $f(self, rhs: FockOperator<T>) -> FockOperator<T> {
                (&self).$f(&rhs)
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl<T: Real> Neg for FockOperator<T> {
    type Output = FockOperator<T>;
    fn neg(self) -> FockOperator<T> {
        FockOperator { modes: self.modes, matrix: -self.matrix }
    }
}

/// Annihilators then creators, indexed by mode.
pub type LadderSet<T> = (Vec<FockOperator<T>>, Vec<FockOperator<T>>);

/// All annihilators `b_1..b_M` and creators `b_1†..b_M†` as dense matrices.
pub fn ladder_matrices<T: Real>(modes: usize) -> Result<LadderSet<T>> {
    check_modes(modes)?;
    let ann = (0..modes).map(|j| FockOperator::annihilator(j, modes)).collect();
    let cre = (0..modes).map(|j| FockOperator::creator(j, modes)).collect();
    Ok((ann, cre))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{c, czero};

    #[test]
    fn single_mode_annihilator() {
        let b: FockOperator<f64> = FockOperator::annihilator(0, 1);
        let expect = Matrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert_eq!(b.matrix(), &expect);
    }

    #[test]
    fn pair_operators_have_expected_signs() {
        let (a, cr) = ladder_matrices::<f64>(2).unwrap();
        // b1 b2 = -|00><11|, b2† b1† = -|11><00|
        let p = &a[0] * &a[1];
        assert_eq!(p.element(&[0, 0], &[1, 1]).unwrap(), c(-1.0, 0.0));
        let q = &cr[1] * &cr[0];
        assert_eq!(q.element(&[1, 1], &[0, 0]).unwrap(), c(-1.0, 0.0));
        assert_eq!(q.trace(), czero());
    }

    #[test]
    fn word_routes_agree() {
        let w = [Ladder::create(2), Ladder::annihilate(0), Ladder::create(1), Ladder::annihilate(2)];
        let x: FockOperator<f64> = FockOperator::word_product(&w, 3);
        let y = FockOperator::word_action(&w, 3);
        assert_eq!(x, y);
    }
}
