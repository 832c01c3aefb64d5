//! Square grids of Fock operators, e.g. the matrix of operators `:b̲ b̲† Λ:`.

use num_complex::Complex;

use crate::fock::FockOperator;
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq)]
pub struct OperatorGrid {
    size: usize,
    modes: usize,
    entries: Vec<FockOperator<f64>>,
}

impl OperatorGrid {
    pub fn from_fn(size: usize, modes: usize, mut f: impl FnMut(usize, usize) -> FockOperator<f64>) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        OperatorGrid { size, modes, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn get(&self, i: usize, j: usize) -> &FockOperator<f64> {
        &self.entries[i * self.size + j]
    }

    /// `A ⊗ op`: entry `(i, j)` is `A_ij op`.
    pub fn scalar_times(a: &Matrix<f64>, op: &FockOperator<f64>) -> Self {
        Self::from_fn(a.rows(), op.modes(), |i, j| op.scale(a[(i, j)]))
    }

    /// `A G B` with scalar matrices `A`, `B`.
    pub fn sandwich(a: &Matrix<f64>, g: &OperatorGrid, b: &Matrix<f64>) -> Self {
        g.left_mul(a).right_mul(b)
    }

    pub fn left_mul(&self, a: &Matrix<f64>) -> Self {
        Self::from_fn(self.size, self.modes, |i, j| {
            (0..self.size).fold(FockOperator::zero(self.modes), |acc, k| {
                let c = a[(i, k)];
                if c.norm() == 0.0 {
                    acc
                } else {
                    &acc + &self.get(k, j).scale(c)
                }
            })
        })
    }

    pub fn right_mul(&self, b: &Matrix<f64>) -> Self {
        Self::from_fn(self.size, self.modes, |i, j| {
            (0..self.size).fold(FockOperator::zero(self.modes), |acc, k| {
                let c = b[(k, j)];
                if c.norm() == 0.0 {
                    acc
                } else {
                    &acc + &self.get(i, k).scale(c)
                }
            })
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.size, self.modes, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.size, self.modes, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn scale(&self, s: Complex<f64>) -> Self {
        Self::from_fn(self.size, self.modes, |i, j| self.get(i, j).scale(s))
    }

    /// Largest matrix-entry modulus over all operators of the grid.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|e| e.max_abs()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.sub(other).max_abs()
    }

    /// Matrix of traces.
    pub fn traces(&self) -> Matrix<f64> {
        Matrix::from_fn(self.size, self.size, |i, j| self.get(i, j).trace())
    }
}
