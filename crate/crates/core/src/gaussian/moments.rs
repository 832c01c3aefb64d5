//! Moments of Gaussian operators.
//!
//! Two orderings appear. `Tr[:w: Λ]` normal-orders the word on its own; `Tr[:w Λ:]`
//! places creators left of `Λ` and annihilators right of it. Both obey Wick's theorem
//! with their own pair contractions; the second one contracts `b̲_μ` with `b̲†_ν` to
//! `σ_μν`.

use num_complex::Complex;

use super::params::GaussianParams;
use crate::error::{Error, Result};
use crate::fock::{dimension, occupations, FockOperator, Ladder};
use crate::linalg::{ExtendedMatrix, Matrix};
use crate::scalar::{czero, Real};

fn ext_index(op: Ladder, modes: usize) -> usize {
    if op.dagger {
        modes + op.mode
    } else {
        op.mode
    }
}

fn adjoint_ext_index(op: Ladder, modes: usize) -> usize {
    if op.dagger {
        op.mode
    } else {
        modes + op.mode
    }
}

/// Pair contraction `Tr[:x y: Λ] / Ω`.
pub fn contraction_outside<T: Real>(p: &GaussianParams<T>, x: Ladder, y: Ladder) -> Complex<T> {
    let (i, j) = (x.mode, y.mode);
    match (x.dagger, y.dagger) {
        (true, false) => p.n[(i, j)],
        (false, true) => -p.n[(j, i)],
        (false, false) => p.m[(i, j)],
        (true, true) => p.m_plus[(i, j)],
    }
}

/// Pair contraction `Tr[:x y Λ:] / Ω`, read off the covariance.
pub fn contraction_inside<T: Real>(sigma: &ExtendedMatrix<T>, x: Ladder, y: Ladder) -> Complex<T> {
    let m = sigma.modes();
    sigma.full()[(ext_index(x, m), adjoint_ext_index(y, m))]
}

fn wick<T: Real>(word: &[Ladder], pair: impl Fn(Ladder, Ladder) -> Complex<T>) -> Complex<T> {
    let k = word.len();
    if k % 2 == 1 {
        return czero();
    }
    let mut g = Matrix::zeros(k, k);
    for a in 0..k {
        for b in a + 1..k {
            let v = pair(word[a], word[b]);
            g[(a, b)] = v;
            g[(b, a)] = -v;
        }
    }
    crate::linalg::pfaffian::pfaffian_unchecked(&g)
}

fn check_word(word: &[Ladder], modes: usize) -> Result<()> {
    for op in word {
        if op.mode >= modes {
            return Err(Error::IndexOutOfRange { index: op.mode, bound: modes });
        }
    }
    Ok(())
}

impl<T: Real> GaussianParams<T> {
    /// `Ω σ`: the matrix of first moments `Tr[:b̲ b̲† Λ:]`.
    pub fn first_moments(&self) -> Matrix<T> {
        self.covariance().full().scale(self.omega)
    }

    /// `Tr[:w: Λ]` by Wick's theorem. Polynomial in the parameters, so it stays finite
    /// where the covariance is singular.
    pub fn normal_moment(&self, word: &[Ladder]) -> Result<Complex<T>> {
        check_word(word, self.modes())?;
        Ok(self.omega * wick(word, |x, y| contraction_outside(self, x, y)))
    }

    /// `Tr[:w Λ:]` by Wick's theorem with covariance contractions.
    pub fn inside_moment(&self, word: &[Ladder]) -> Result<Complex<T>> {
        check_word(word, self.modes())?;
        let sigma = self.covariance();
        Ok(self.omega * wick(word, |x, y| contraction_inside(&sigma, x, y)))
    }

    /// `Tr[:b̲_μ1 b̲†_μ2 b̲_μ3 b̲†_μ4 Λ:]` from the closed form
    /// `σ12 σ34 - σ14 σ32 + (σX)13 (Xσ)42`. Indices run over the extended basis.
    pub fn second_moment(&self, mu: [usize; 4]) -> Result<Complex<T>> {
        let k = 2 * self.modes();
        for &x in &mu {
            if x >= k {
                return Err(Error::IndexOutOfRange { index: x, bound: k });
            }
        }
        let sigma = self.covariance();
        let (s, sx, xs) = (sigma.full(), sigma.times_swap(), sigma.swap_times());
        let [a, b, c, d] = mu;
        Ok(self.omega * (s[(a, b)] * s[(c, d)] - s[(a, d)] * s[(c, b)] + sx[(a, c)] * xs[(d, b)]))
    }

    /// `Tr[:b̲_μ1 b̲†_μ2 b̲_μ3 b̲†_μ4 b̲_μ5 b̲†_μ6 Λ:]` from the 15-term closed form. The
    /// signs follow Wick's theorem for this operator order: the three-pair products carry
    /// the opposite overall sign to the widely quoted form, which belongs to the order
    /// `b̲†_μ2 b̲_μ1 b̲†_μ4 b̲_μ3 b̲†_μ6 b̲_μ5`.
    pub fn third_moment(&self, mu: [usize; 6]) -> Result<Complex<T>> {
        let k = 2 * self.modes();
        for &x in &mu {
            if x >= k {
                return Err(Error::IndexOutOfRange { index: x, bound: k });
            }
        }
        let sigma = self.covariance();
        let (s, sx, xs) = (sigma.full(), sigma.times_swap(), sigma.swap_times());
        let [m1, m2, m3, m4, m5, m6] = mu;
        let s_ = |a: usize, b: usize| s[(a, b)];
        let sx_ = |a: usize, b: usize| sx[(a, b)];
        let xs_ = |a: usize, b: usize| xs[(a, b)];
        let quoted = s_(m1, m2) * s_(m3, m6) * s_(m5, m4) + s_(m1, m4) * s_(m3, m2) * s_(m5, m6)
            + s_(m1, m6) * s_(m3, m4) * s_(m5, m2)
            - s_(m1, m2) * s_(m3, m4) * s_(m5, m6)
            - s_(m1, m4) * s_(m3, m6) * s_(m5, m2)
            - s_(m1, m6) * s_(m3, m2) * s_(m5, m4)
            - s_(m1, m2) * sx_(m3, m5) * xs_(m6, m4)
            - s_(m3, m4) * sx_(m1, m5) * xs_(m6, m2)
            - s_(m5, m6) * sx_(m1, m3) * xs_(m4, m2)
            + s_(m1, m4) * sx_(m3, m5) * xs_(m6, m2)
            - s_(m1, m6) * sx_(m3, m5) * xs_(m4, m2)
            + s_(m3, m2) * sx_(m1, m5) * xs_(m6, m4)
            + s_(m3, m6) * sx_(m1, m5) * xs_(m4, m2)
            - s_(m5, m2) * sx_(m1, m3) * xs_(m6, m4)
            + s_(m5, m4) * sx_(m1, m3) * xs_(m6, m2);
        Ok(-self.omega * quoted)
    }

    /// `Tr[:n̂_i n̂_j: Λ] = Ω (n_ii n_jj - n_ij n_ji - m_ij m⁺_ij)`.
    pub fn number_number(&self, i: usize, j: usize) -> Result<Complex<T>> {
        let k = self.modes();
        for x in [i, j] {
            if x >= k {
                return Err(Error::IndexOutOfRange { index: x, bound: k });
            }
        }
        let (n, m, mp) = (&self.n, &self.m, &self.m_plus);
        Ok(self.omega * (n[(i, i)] * n[(j, j)] - n[(i, j)] * n[(j, i)] - m[(i, j)] * mp[(i, j)]))
    }

    /// `Tr[:n̂_i n̂_j n̂_k: Λ]` in closed form.
    pub fn triple_number(&self, i: usize, j: usize, k: usize) -> Result<Complex<T>> {
        let modes = self.modes();
        for x in [i, j, k] {
            if x >= modes {
                return Err(Error::IndexOutOfRange { index: x, bound: modes });
            }
        }
        let n = |a: usize, b: usize| self.n[(a, b)];
        let m = |a: usize, b: usize| self.m[(a, b)];
        let p = |a: usize, b: usize| self.m_plus[(a, b)];
        let v = n(i, i) * n(j, j) * n(k, k) - n(i, i) * (n(j, k) * n(k, j) + m(j, k) * p(j, k))
            + n(i, j) * n(j, k) * n(k, i)
            - n(j, j) * (n(i, k) * n(k, i) + m(i, k) * p(i, k))
            + n(j, i) * n(k, j) * n(i, k)
            - n(k, k) * (n(i, j) * n(j, i) + m(i, j) * p(i, j))
            + n(i, j) * m(i, k) * p(j, k)
            + n(j, i) * m(j, k) * p(i, k)
            + n(j, k) * m(j, i) * p(k, i)
            + n(k, j) * m(k, i) * p(j, i)
            + n(k, i) * m(k, j) * p(i, j)
            + n(i, k) * m(i, j) * p(k, j);
        Ok(self.omega * v)
    }

    /// Occupation variance `⟨n̂_i⟩(1 - ⟨n̂_i⟩)` of a physical Gaussian.
    pub fn number_variance(&self, i: usize) -> Result<T> {
        if i >= self.modes() {
            return Err(Error::IndexOutOfRange { index: i, bound: self.modes() });
        }
        self.check_physical(1e-10)?;
        let occ = self.n[(i, i)].re;
        Ok(occ * (T::one() - occ))
    }

    /// Dense `Λ(λ)` assembled from normal moments:
    /// `<a|Λ|c> = Tr[|c><a| Λ]` with `|c><a| = :B_c† Π_k (1 - n̂_k) B_a:`.
    /// Valid for every parameter set, including singular covariances.
    pub fn materialize_via_moments(&self) -> Result<FockOperator<T>> {
        let modes = self.modes();
        let d = dimension(modes);
        let mut out = Matrix::zeros(d, d);
        for row in 0..d {
            for col in 0..d {
                if (row.count_ones() + col.count_ones()) % 2 == 1 {
                    continue;
                }
                out[(row, col)] = self.element_via_moments(row, col);
            }
        }
        FockOperator::from_matrix(modes, out)
    }

    /// `<row|Λ|col>` for occupation vectors, from normal moments.
    pub fn matrix_element(&self, row: &[u8], col: &[u8]) -> Result<Complex<T>> {
        let m = self.modes();
        if row.len() != m || col.len() != m {
            return Err(Error::ModeMismatch { left: m, right: row.len().max(col.len()) });
        }
        Ok(self.element_via_moments(crate::fock::state_index(row)?, crate::fock::state_index(col)?))
    }

    fn element_via_moments(&self, row: usize, col: usize) -> Complex<T> {
        let modes = self.modes();
        let (a, c) = (occupations(row, modes), occupations(col, modes));
        let mut head: Vec<Ladder> = (0..modes).filter(|&j| c[j] == 1).map(Ladder::create).collect();
        let tail: Vec<Ladder> = (0..modes).rev().filter(|&j| a[j] == 1).map(Ladder::annihilate).collect();
        let free: Vec<usize> = (0..modes).filter(|&j| a[j] == 0 && c[j] == 0).collect();
        let base = head.len();
        let mut total = czero();
        for subset in 0u32..(1 << free.len()) {
            head.truncate(base);
            for (t, &j) in free.iter().enumerate() {
                if subset & (1 << t) != 0 {
                    head.push(Ladder::create(j));
                    head.push(Ladder::annihilate(j));
                }
            }
            head.extend(&tail);
            let v = wick(&head, |x, y| contraction_outside(self, x, y));
            total = if subset.count_ones() % 2 == 0 { total + v } else { total - v };
        }
        self.omega * total
    }
}

/// `Tr[:w Λ:]` for an arbitrary dense operator, evaluated on the Fock space.
pub fn dense_inside_moment<T: Real>(word: &[Ladder], lambda: &FockOperator<T>) -> Complex<T> {
    crate::fock::ordering::normal_around(word, lambda).trace()
}

/// `Tr[:w: Λ]` for an arbitrary dense operator.
pub fn dense_normal_moment<T: Real>(word: &[Ladder], lambda: &FockOperator<T>) -> Complex<T> {
    let id = FockOperator::identity(lambda.modes());
    (&crate::fock::ordering::normal_around(word, &id) * lambda).trace()
}
