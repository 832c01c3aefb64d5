//! Limit families: Gaussians whose weighted sum tends to a single off-diagonal projector
//! `c |row><col|` as the scale `ε → 0`.
//!
//! Modes that are occupied in `row` but empty in `col` are "raised"; the opposite are
//! "lowered". Raised and lowered modes are paired in ascending order and each pair gets a
//! number amplitude `n[lowered][raised] = a/ε` on top of the diagonal projector Gaussian
//! with occupations `min(row, col)`. When `row` holds `2S` more particles than `col`, the
//! first `2S` raised modes are instead paired among themselves with pair amplitudes
//! `m[r1][r2] = a/ε`. The family is `ε^K Λ(ε)` with `K = S + (number of n-pairs)`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{check_modes, FockOperator};
use crate::gaussian::GaussianParams;
use crate::linalg::Matrix;
use crate::scalar::{cone, creal, czero, Real};

/// Default scale schedule for limit families.
pub const DEFAULT_SCHEDULE: [f64; 3] = [1e-1, 1e-2, 1e-3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LimitKind {
    Thermal,
    Squeezed,
}

/// One member `weight · Λ(params)` of a limit family at a fixed `ε`.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitGaussian<T: Real> {
    pub params: GaussianParams<T>,
    /// `ε^exponent`, or the target coefficient itself when the exponent is zero.
    pub weight: Complex<T>,
    pub exponent: u32,
}

impl<T: Real> LimitGaussian<T> {
    pub fn materialize(&self) -> Result<FockOperator<T>> {
        Ok(self.params.materialize_via_moments()?.scale(self.weight))
    }
}

#[derive(Debug, Clone)]
struct Layout {
    diag: Vec<u8>,
    /// `(lowered, raised)` positions of number amplitudes.
    number_pairs: Vec<(usize, usize)>,
    /// `(r1, r2)` positions of pair amplitudes, `r1 < r2`.
    squeeze_pairs: Vec<(usize, usize)>,
}

impl Layout {
    fn count(&self) -> usize {
        self.number_pairs.len() + self.squeeze_pairs.len()
    }

    fn params<T: Real>(&self, values: &[Complex<T>]) -> Result<GaussianParams<T>> {
        let k = self.diag.len();
        let mut n = Matrix::diagonal(&self.diag.iter().map(|&x| creal(T::from_u8(x).unwrap())).collect::<Vec<_>>());
        let mut m = Matrix::zeros(k, k);
        let mut vals = values.iter();
        for &(lo, hi) in &self.number_pairs {
            n[(lo, hi)] = *vals.next().unwrap();
        }
        for &(r1, r2) in &self.squeeze_pairs {
            let w = *vals.next().unwrap();
            m[(r1, r2)] = w;
            m[(r2, r1)] = -w;
        }
        GaussianParams::new(cone(), n, m, Matrix::zeros(k, k))
    }

    /// Coefficient of `Π values` in `<row|Λ|col>`. The element is multilinear in the
    /// amplitudes, so inclusion-exclusion over 0/1 assignments isolates the top term.
    fn leading_coefficient<T: Real>(&self, row: &[u8], col: &[u8]) -> Result<Complex<T>> {
        let k = self.count();
        let mut total = czero();
        for subset in 0u32..(1 << k) {
            let vals: Vec<Complex<T>> =
                (0..k).map(|t| if subset & (1 << t) != 0 { cone() } else { czero() }).collect();
            let e = self.params(&vals)?.matrix_element(row, col)?;
            if (k as u32 - subset.count_ones()).is_multiple_of(2) {
                total = total + e;
            } else {
                total = total - e;
            }
        }
        Ok(total)
    }
}

fn check_pair(row: &[u8], col: &[u8]) -> Result<usize> {
    let m = row.len();
    check_modes(m)?;
    if col.len() != m {
        return Err(Error::ModeMismatch { left: m, right: col.len() });
    }
    if row.iter().chain(col).any(|&x| x > 1) {
        return Err(Error::InvalidOccupation);
    }
    Ok(m)
}

fn total(v: &[u8]) -> usize {
    v.iter().map(|&x| x as usize).sum()
}

fn layout(row: &[u8], col: &[u8], squeeze: usize) -> Layout {
    let m = row.len();
    let diag: Vec<u8> = (0..m).map(|i| row[i].min(col[i])).collect();
    let mut raised: Vec<usize> = (0..m).filter(|&i| row[i] == 1 && col[i] == 0).collect();
    let lowered: Vec<usize> = (0..m).filter(|&i| row[i] == 0 && col[i] == 1).collect();
    let removed: Vec<usize> = raised.drain(..2 * squeeze).collect();
    Layout {
        diag,
        number_pairs: lowered.into_iter().zip(raised).collect(),
        squeeze_pairs: removed.chunks(2).map(|p| (p[0], p[1])).collect(),
    }
}

fn check_scale<T: Real>(eps: T) -> Result<()> {
    if !(eps > T::zero() && eps <= T::one()) {
        return Err(Error::InvalidSchedule);
    }
    Ok(())
}

fn build<T: Real>(lay: &Layout, row: &[u8], col: &[u8], coeff: Complex<T>, eps: T) -> Result<LimitGaussian<T>> {
    check_scale(eps)?;
    let k = lay.count();
    if k == 0 {
        return Ok(LimitGaussian { params: lay.params(&[])?, weight: coeff, exponent: 0 });
    }
    let lead = lay.leading_coefficient::<T>(row, col)?;
    // Principal K-th root of coeff/lead; its phase rides on the first amplitude.
    let ratio = coeff / lead;
    let kk = T::from_usize(k).unwrap();
    let mag = ratio.norm().powf(T::one() / kk);
    let mut vals = vec![creal(mag / eps); k];
    vals[0] = Complex::from_polar(mag / eps, ratio.arg());
    Ok(LimitGaussian { params: lay.params(&vals)?, weight: creal(eps.powi(k as i32)), exponent: k as u32 })
}

/// Number-conserving limit family for `coeff |row><col|` at scale `ε`.
pub fn limit_gaussian_thermal<T: Real>(row: &[u8], col: &[u8], coeff: Complex<T>, eps: T) -> Result<LimitGaussian<T>> {
    check_pair(row, col)?;
    let (a, b) = (total(row), total(col));
    if a != b {
        return Err(Error::TotalNumberMismatch { row: a, col: b });
    }
    build(&layout(row, col, 0), row, col, coeff, eps)
}

/// Limit family for `coeff |row><col|` when the totals differ by an even number. A deficit
/// in `row` is handled through the adjoint of the swapped target.
pub fn limit_gaussian_squeezed<T: Real>(row: &[u8], col: &[u8], coeff: Complex<T>, eps: T) -> Result<LimitGaussian<T>> {
    check_pair(row, col)?;
    let (a, b) = (total(row), total(col));
    if (a + b) % 2 == 1 {
        return Err(Error::OddNumberDifference { row: a, col: b });
    }
    if a == b {
        return limit_gaussian_thermal(row, col, coeff, eps);
    }
    if a < b {
        let mut g = limit_gaussian_squeezed(col, row, coeff.conj(), eps)?;
        g.params = g.params.adjoint();
        g.weight = g.weight.conj();
        return Ok(g);
    }
    build(&layout(row, col, (a - b) / 2), row, col, coeff, eps)
}

/// Picks the thermal or squeezed construction from the particle numbers.
pub fn limit_gaussian<T: Real>(row: &[u8], col: &[u8], coeff: Complex<T>, eps: T) -> Result<LimitGaussian<T>> {
    limit_gaussian_squeezed(row, col, coeff, eps)
}

/// Serializable description of a limit family targeting `coefficient |row><col|`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitFamily<T: Real> {
    pub row: Vec<u8>,
    pub col: Vec<u8>,
    pub coefficient: Complex<T>,
    pub kind: LimitKind,
    pub exponent: u32,
    pub schedule: Vec<f64>,
}

impl<T: Real> LimitFamily<T> {
    pub fn new(row: &[u8], col: &[u8], coefficient: Complex<T>, schedule: &[f64]) -> Result<Self> {
        check_schedule(schedule)?;
        let probe = limit_gaussian(row, col, coefficient, T::one())?;
        let kind = if total(row) == total(col) { LimitKind::Thermal } else { LimitKind::Squeezed };
        Ok(LimitFamily {
            row: row.to_vec(),
            col: col.to_vec(),
            coefficient,
            kind,
            exponent: probe.exponent,
            schedule: schedule.to_vec(),
        })
    }

    pub fn modes(&self) -> usize {
        self.row.len()
    }

    pub fn member(&self, eps: T) -> Result<LimitGaussian<T>> {
        limit_gaussian(&self.row, &self.col, self.coefficient, eps)
    }

    pub fn evaluate(&self, eps: T) -> Result<FockOperator<T>> {
        self.member(eps)?.materialize()
    }

    pub fn target(&self) -> Result<FockOperator<T>> {
        Ok(FockOperator::outer(&self.row, &self.col)?.scale(self.coefficient))
    }

    /// Max-entry distance between the member at `ε` and the target.
    pub fn residual(&self, eps: T) -> Result<T> {
        Ok(self.evaluate(eps)?.max_abs_diff(&self.target()?))
    }

    /// Polynomial (Lagrange) extrapolation of the members on the schedule to `ε = 0`.
    pub fn extrapolate(&self) -> Result<FockOperator<T>> {
        let eps: Vec<T> = self.schedule.iter().map(|&e| T::lit(e)).collect();
        let mut acc = FockOperator::zero(self.modes());
        for (i, &ei) in eps.iter().enumerate() {
            let mut w = T::one();
            for (j, &ej) in eps.iter().enumerate() {
                if i != j {
                    w = w * ej / (ej - ei);
                }
            }
            acc = &acc + &self.evaluate(ei)?.scale(creal(w));
        }
        Ok(acc)
    }
}

/// Scales must be distinct and lie in `(0, 1]`.
pub fn check_schedule(schedule: &[f64]) -> Result<()> {
    if schedule.is_empty() || schedule.iter().any(|&e| !(e > 0.0 && e <= 1.0)) {
        return Err(Error::InvalidSchedule);
    }
    for (i, a) in schedule.iter().enumerate() {
        if schedule[..i].iter().any(|b| b == a) {
            return Err(Error::InvalidSchedule);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    fn family(row: &[u8], col: &[u8]) -> LimitFamily<f64> {
        LimitFamily::new(row, col, c(0.3, -0.2), &DEFAULT_SCHEDULE).unwrap()
    }

    #[test]
    fn diagonal_target_is_exact() {
        let g = limit_gaussian_thermal(&[1, 0, 1], &[1, 0, 1], c::<f64>(0.7, 0.0), 0.5).unwrap();
        assert_eq!(g.exponent, 0);
        let target = FockOperator::outer(&[1, 0, 1], &[1, 0, 1]).unwrap().scale(c(0.7, 0.0));
        assert!(g.materialize().unwrap().max_abs_diff(&target) < 1e-14);
    }

    #[test]
    fn hopping_target_converges_linearly() {
        let f = family(&[1, 0], &[0, 1]);
        assert_eq!((f.exponent, f.kind), (1, LimitKind::Thermal));
        let (r1, r2) = (f.residual(1e-2).unwrap(), f.residual(5e-3).unwrap());
        assert!((r1 / r2 - 2.0).abs() < 0.4, "ratio {}", r1 / r2);
        assert!(f.extrapolate().unwrap().max_abs_diff(&f.target().unwrap()) < 1e-6);
    }

    #[test]
    fn pair_targets_converge() {
        for (row, col) in [(&[1u8, 1][..], &[0u8, 0][..]), (&[0, 0], &[1, 1])] {
            let f = family(row, col);
            assert_eq!((f.exponent, f.kind), (1, LimitKind::Squeezed));
            assert!(f.extrapolate().unwrap().max_abs_diff(&f.target().unwrap()) < 1e-6);
        }
    }

    #[test]
    fn larger_targets_converge() {
        let cases: [(&[u8], &[u8], u32); 4] = [
            (&[1, 1, 0, 0], &[0, 0, 1, 1], 2),
            (&[1, 0, 1, 0], &[0, 1, 1, 0], 1),
            (&[1, 1, 1, 1], &[0, 0, 1, 1], 1),
            (&[1, 1, 1, 0], &[0, 0, 0, 1], 2),
        ];
        for (row, col, k) in cases {
            let f = family(row, col);
            assert_eq!(f.exponent, k);
            let err = f.extrapolate().unwrap().max_abs_diff(&f.target().unwrap());
            assert!(err < 1e-6, "{row:?} {col:?}: {err:e}");
        }
    }

    #[test]
    fn error_paths() {
        let z = c::<f64>(1.0, 0.0);
        assert!(matches!(limit_gaussian_thermal(&[1, 1], &[0, 0], z, 0.1), Err(Error::TotalNumberMismatch { .. })));
        assert!(matches!(limit_gaussian_squeezed(&[1, 0], &[0, 0], z, 0.1), Err(Error::OddNumberDifference { .. })));
        assert_eq!(limit_gaussian_thermal(&[1, 0], &[0, 1], z, 0.0).unwrap_err(), Error::InvalidSchedule);
        assert!(check_schedule(&[0.1, 0.1]).is_err());
    }
}
