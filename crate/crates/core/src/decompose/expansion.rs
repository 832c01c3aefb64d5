//! Exact and limit-family expansions of density matrices.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::density::DensityMatrix;
use super::limits::{check_schedule, LimitFamily};
use crate::error::{Error, Result};
use crate::fock::{dimension, occupations, FockOperator};
use crate::gaussian::GaussianParams;
use crate::linalg::Matrix;
use crate::scalar::{cone, creal, czero, Real};

/// `weight · Λ(params)` with `Ω = 1` and `weight ≥ 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term<T: Real> {
    pub weight: T,
    pub params: GaussianParams<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Decomposition<T: Real> {
    pub modes: usize,
    pub terms: Vec<Term<T>>,
    pub families: Vec<LimitFamily<T>>,
    /// Max-entry distance between the reconstruction and the input, when known.
    pub residual: Option<T>,
}

impl<T: Real> Decomposition<T> {
    pub fn empty(modes: usize) -> Self {
        Decomposition { modes, terms: Vec::new(), families: Vec::new(), residual: None }
    }

    pub fn min_weight(&self) -> Option<T> {
        self.terms.iter().map(|t| t.weight).reduce(T::min)
    }

    fn with_residual(mut self, rho: &DensityMatrix<T>) -> Result<Self> {
        let rec = reconstruct(&self)?;
        self.residual = Some(rec.matrix().max_abs_diff(rho.matrix()));
        Ok(self)
    }
}

fn projector_params<T: Real>(occ: &[u8]) -> Result<GaussianParams<T>> {
    let diag: Vec<Complex<T>> = occ.iter().map(|&x| if x == 1 { cone() } else { czero() }).collect();
    GaussianParams::thermal(Matrix::diagonal(&diag))
}

/// One projector Gaussian per basis state with weight `ρ_nn`. Zero weights are dropped.
pub fn decompose_diagonal<T: Real>(rho: &DensityMatrix<T>) -> Result<Decomposition<T>> {
    let off = rho.max_off_diagonal();
    if off > T::lit(1e-12) {
        return Err(Error::NotDiagonal { max_off_diagonal: off.to_f64_lossy() });
    }
    let modes = rho.modes();
    let mut d = Decomposition::empty(modes);
    for k in 0..dimension(modes) {
        let w = rho.get(k, k).re;
        if w > T::zero() {
            d.terms.push(Term { weight: w, params: projector_params(&occupations(k, modes))? });
        }
    }
    d.with_residual(rho)
}

/// Two-mode expansion with eight terms of weight `ρ_nn / 2`. For each basis state `n`
/// one term carries `n_12 = 2ρ_(01),(10)` and `m = -2ρ_(11),(00)`, the other carries
/// `n_21 = 2ρ_(10),(01)` and `m⁺ = -2ρ_(00),(11)`, on top of the occupations of `n`.
pub fn decompose_two_mode<T: Real>(rho: &DensityMatrix<T>) -> Result<Decomposition<T>> {
    if rho.modes() != 2 {
        return Err(Error::ModeMismatch { left: 2, right: rho.modes() });
    }
    rho.check_superselection()?;
    let two = creal(T::lit(2.0));
    let (s00, s01, s10, s11) = (0usize, 1usize, 2usize, 3usize);
    let hop_up = two * rho.get(s01, s10);
    let hop_down = two * rho.get(s10, s01);
    let pair = -two * rho.get(s11, s00);
    let pair_plus = -two * rho.get(s00, s11);
    let half = T::lit(0.5);
    let mut d = Decomposition::empty(2);
    for k in 0..4 {
        let w = rho.get(k, k).re;
        if w < T::zero() {
            return Err(Error::NotPositive);
        }
        let occ = occupations(k, 2);
        let base = projector_params::<T>(&occ)?.n;
        let mut upper = base.clone();
        upper[(0, 1)] = hop_up;
        let mut lower = base;
        lower[(1, 0)] = hop_down;
        d.terms.push(Term { weight: w * half, params: GaussianParams::two_mode(cone(), upper, pair, czero())? });
        d.terms.push(Term { weight: w * half, params: GaussianParams::two_mode(cone(), lower, czero(), pair_plus)? });
    }
    d.with_residual(rho)
}

/// Any mode count: exact projector terms for the diagonal plus one limit family per
/// nonzero off-diagonal element.
pub fn decompose_general<T: Real>(rho: &DensityMatrix<T>, schedule: &[f64]) -> Result<Decomposition<T>> {
    check_schedule(schedule)?;
    rho.check_superselection()?;
    let modes = rho.modes();
    let dim = dimension(modes);
    let mut d = Decomposition::empty(modes);
    let cutoff = T::lit(1e-14);
    for a in 0..dim {
        let w = rho.get(a, a).re;
        if w > T::zero() {
            d.terms.push(Term { weight: w, params: projector_params(&occupations(a, modes))? });
        }
        for c in 0..dim {
            let z = rho.get(a, c);
            if a != c && z.norm() > cutoff {
                d.families.push(LimitFamily::new(&occupations(a, modes), &occupations(c, modes), z, schedule)?);
            }
        }
    }
    d.with_residual(rho)
}

/// `Σ weight·Λ` over the exact terms plus the extrapolated limit of every family.
pub fn reconstruct<T: Real>(d: &Decomposition<T>) -> Result<FockOperator<T>> {
    let mut acc = FockOperator::zero(d.modes);
    for t in &d.terms {
        if t.params.modes() != d.modes {
            return Err(Error::ModeMismatch { left: d.modes, right: t.params.modes() });
        }
        acc = &acc + &t.params.materialize_via_moments()?.scale(creal(t.weight));
    }
    for f in &d.families {
        if f.modes() != d.modes {
            return Err(Error::ModeMismatch { left: d.modes, right: f.modes() });
        }
        acc = &acc + &f.extrapolate()?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_diagonal_density, random_two_mode_density};
    use crate::scalar::c;

    #[test]
    fn maximally_mixed_two_modes() {
        let rho = DensityMatrix::new(2, Matrix::diagonal(&[c::<f64>(0.25, 0.0); 4])).unwrap();
        let d = decompose_diagonal(&rho).unwrap();
        assert_eq!(d.terms.len(), 4);
        assert!(d.terms.iter().all(|t| t.weight == 0.25));
        assert!(d.residual.unwrap() < 1e-12);
    }

    #[test]
    fn diagonal_rejects_coherences() {
        let mut m = Matrix::diagonal(&[c::<f64>(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.5, 0.0)]);
        m[(0, 3)] = c(0.5, 0.0);
        m[(3, 0)] = c(0.5, 0.0);
        let rho = DensityMatrix::new(2, m).unwrap();
        assert!(matches!(decompose_diagonal(&rho), Err(Error::NotDiagonal { .. })));
    }

    #[test]
    fn two_mode_random() {
        for seed in 0..10 {
            let rho = DensityMatrix::new(2, random_two_mode_density(seed)).unwrap();
            let d = decompose_two_mode(&rho).unwrap();
            assert_eq!(d.terms.len(), 8);
            assert!(d.min_weight().unwrap() >= 0.0);
            assert!(d.residual.unwrap() < 1e-10, "seed {seed}: {:e}", d.residual.unwrap());
        }
    }

    #[test]
    fn general_matches_two_mode_input() {
        let rho = DensityMatrix::new(2, random_two_mode_density(3)).unwrap();
        let d = decompose_general(&rho, &super::super::DEFAULT_SCHEDULE).unwrap();
        assert!(d.residual.unwrap() < 1e-6, "{:e}", d.residual.unwrap());
    }

    #[test]
    fn diagonal_four_modes() {
        let rho = DensityMatrix::new(4, random_diagonal_density(4, 1).unwrap()).unwrap();
        assert!(decompose_diagonal(&rho).unwrap().residual.unwrap() < 1e-12);
    }

    #[test]
    fn empty_reconstructs_to_zero() {
        let d = Decomposition::<f64>::empty(3);
        assert_eq!(reconstruct(&d).unwrap().max_abs(), 0.0);
    }
}
