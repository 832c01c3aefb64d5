//! Residual checks of the moment theorems and differential identities on seeded random
//! Gaussians.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::derivative::{dlambda_dn, dlambda_dn_of, dlambda_dsigma, log_sqrt_det_derivative, DEFAULT_STEP};
use super::grid::OperatorGrid;
use super::tables::{antinormal_table, mixed_table, normal_table, thermal_tables};
use crate::error::{Error, Result};
use crate::fock::{check_modes, FockOperator, Ladder};
use crate::gaussian::{mgf, pair_direction, GaussianParams};
use crate::linalg::{signature_matrix, Matrix};
use crate::random::{random_params, random_thermal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// Dense trace equals `Ω`.
    Normalization,
    /// First moments equal `Ω σ`.
    FirstMoments,
    /// Finite-difference derivatives of the generating function give first moments.
    GeneratingFunction,
    /// `:b̲ b̲† Λ: = σΛ - σ (∂Λ/∂σ) σ`.
    Normal,
    /// `{b̲ :b̲† Λ:} = -σΛ + (σ - I̲)(∂Λ/∂σ) σ`.
    Mixed,
    /// `{b̲ b̲† Λ} = (σ - I̲)Λ - (σ - I̲)(∂Λ/∂σ)(σ - I̲)`.
    Antinormal,
    /// The four number-conserving identities in `n`.
    Thermal,
    /// Two applications of the first number-conserving identity against a dense
    /// two-body product.
    ThermalComposed,
    /// `d sqrt(det σ)/dσ = sqrt(det σ) σ⁻¹`.
    DeterminantDerivative,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::Normalization,
        Theorem::FirstMoments,
        Theorem::GeneratingFunction,
        Theorem::Normal,
        Theorem::Mixed,
        Theorem::Antinormal,
        Theorem::Thermal,
        Theorem::ThermalComposed,
        Theorem::DeterminantDerivative,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Normalization => "1",
            Theorem::FirstMoments => "2",
            Theorem::GeneratingFunction => "3",
            Theorem::Normal => "4",
            Theorem::Mixed => "5",
            Theorem::Antinormal => "6",
            Theorem::Thermal => "thermal",
            Theorem::ThermalComposed => "thermal-composed",
            Theorem::DeterminantDerivative => "det-derivative",
        }
    }

    pub fn tolerance(self) -> f64 {
        match self {
            Theorem::Normalization | Theorem::FirstMoments => 1e-9,
            Theorem::ThermalComposed => 1e-5,
            _ => 1e-6,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| format!("unknown theorem '{s}' (expected one of 1, 2, 3, 4, 5, 6, thermal, thermal-composed, det-derivative)"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub theorem: String,
    pub modes: usize,
    pub seed: u64,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub step: Option<f64>,
}

/// Runs one check on the Gaussian drawn from `seed` and reports the residual.
pub fn verify(theorem: Theorem, modes: usize, seed: u64) -> Result<IdentityReport> {
    check_modes(modes)?;
    let (residual, step) = match theorem {
        Theorem::Normalization => (normalization_residual(&random_params(modes, seed)?)?, None),
        Theorem::FirstMoments => (first_moment_residual(&random_params(modes, seed)?)?, None),
        Theorem::GeneratingFunction => (generating_function_residual(&random_params(modes, seed)?, DEFAULT_STEP)?, Some(DEFAULT_STEP)),
        Theorem::Normal => (verify_normal_identity(&random_params(modes, seed)?)?, Some(DEFAULT_STEP)),
        Theorem::Mixed => (verify_mixed_identity(&random_params(modes, seed)?)?, Some(DEFAULT_STEP)),
        Theorem::Antinormal => (verify_antinormal_identity(&random_params(modes, seed)?)?, Some(DEFAULT_STEP)),
        Theorem::Thermal => (verify_thermal_identities(&random_thermal(modes, seed)?.n)?, Some(DEFAULT_STEP)),
        Theorem::ThermalComposed => (verify_thermal_composed(&random_thermal(modes, seed)?.n, 1e-4)?, Some(1e-4)),
        Theorem::DeterminantDerivative => (determinant_derivative_residual(&random_params(modes, seed)?)?, Some(DEFAULT_STEP)),
    };
    let tolerance = theorem.tolerance();
    Ok(IdentityReport {
        theorem: theorem.id().to_string(),
        modes,
        seed,
        residual,
        tolerance,
        pass: residual.is_finite() && residual <= tolerance,
        step,
    })
}

pub fn normalization_residual(p: &GaussianParams<f64>) -> Result<f64> {
    Ok((p.materialize()?.trace() - p.omega).norm())
}

/// Largest deviation of the dense first moments, arranged as `Tr[:b̲ b̲† Λ:]`, from `Ω σ`.
pub fn first_moment_residual(p: &GaussianParams<f64>) -> Result<f64> {
    let lam = p.materialize()?;
    Ok(normal_table(&lam).traces().max_abs_diff(&p.first_moments()))
}

/// Central differences of `M(τ)` along every source direction against the dense
/// moments `Tr[:b̲†_μ b̲_ν Λ:]`.
pub fn generating_function_residual(p: &GaussianParams<f64>, h: f64) -> Result<f64> {
    let m = p.modes();
    let lam = p.materialize()?;
    let mut worst: f64 = 0.0;
    for mu in 0..2 * m {
        for nu in 0..2 * m {
            let dir = pair_direction::<f64>(m, mu, nu);
            if dir.max_abs() == 0.0 {
                continue;
            }
            let d = (mgf(p, &dir.scale(Complex::new(h, 0.0)))? - mgf(p, &dir.scale(Complex::new(-h, 0.0)))?) / (2.0 * h);
            let word = [Ladder::extended_adjoint(mu, m), Ladder::extended(nu, m)];
            let dense = crate::gaussian::dense_inside_moment(&word, &lam);
            worst = worst.max((p.omega * d - dense).norm());
        }
    }
    Ok(worst)
}

fn shifted_sigma(p: &GaussianParams<f64>) -> (Matrix<f64>, Matrix<f64>) {
    let sigma = p.covariance().into_full();
    let shifted = &sigma - &signature_matrix(p.modes());
    (sigma, shifted)
}

pub fn verify_normal_identity(p: &GaussianParams<f64>) -> Result<f64> {
    let lam = p.materialize()?;
    let d = dlambda_dsigma(p, DEFAULT_STEP)?.numeric;
    let (s, _) = shifted_sigma(p);
    let rhs = OperatorGrid::scalar_times(&s, &lam).sub(&OperatorGrid::sandwich(&s, &d, &s));
    Ok(normal_table(&lam).max_abs_diff(&rhs))
}

pub fn verify_mixed_identity(p: &GaussianParams<f64>) -> Result<f64> {
    let lam = p.materialize()?;
    let d = dlambda_dsigma(p, DEFAULT_STEP)?.numeric;
    let (s, sm) = shifted_sigma(p);
    let rhs = OperatorGrid::scalar_times(&s, &lam).scale(Complex::new(-1.0, 0.0)).add(&OperatorGrid::sandwich(&sm, &d, &s));
    Ok(mixed_table(&lam).max_abs_diff(&rhs))
}

pub fn verify_antinormal_identity(p: &GaussianParams<f64>) -> Result<f64> {
    let lam = p.materialize()?;
    let d = dlambda_dsigma(p, DEFAULT_STEP)?.numeric;
    let (_, sm) = shifted_sigma(p);
    let rhs = OperatorGrid::scalar_times(&sm, &lam).sub(&OperatorGrid::sandwich(&sm, &d, &sm));
    Ok(antinormal_table(&lam).max_abs_diff(&rhs))
}

/// Right-hand sides of the four number-conserving identities, given `Λ` and `∂Λ/∂n`.
pub fn thermal_right_sides(n: &Matrix<f64>, lam: &FockOperator<f64>, d: &OperatorGrid) -> [OperatorGrid; 4] {
    let id = Matrix::identity(n.rows());
    let hole = &id - n;
    [
        OperatorGrid::scalar_times(n, lam).add(&OperatorGrid::sandwich(&hole, d, n)),
        OperatorGrid::scalar_times(n, lam).add(&OperatorGrid::sandwich(n, d, &hole)),
        OperatorGrid::scalar_times(&hole, lam).add(&OperatorGrid::sandwich(&hole, d, &hole)),
        OperatorGrid::scalar_times(n, lam).sub(&OperatorGrid::sandwich(n, d, n)),
    ]
}

pub fn verify_thermal_identities(n: &Matrix<f64>) -> Result<f64> {
    let p = GaussianParams::thermal(n.clone())?;
    if !p.is_thermal() {
        return Err(Error::NotThermal);
    }
    let lam = p.materialize()?;
    let d = dlambda_dn(n, DEFAULT_STEP)?;
    let lhs = thermal_tables(&lam);
    let rhs = thermal_right_sides(n, &lam, &d);
    Ok(lhs.iter().zip(&rhs).map(|(a, b)| a.max_abs_diff(b)).fold(0.0, f64::max))
}

/// `[n F + (I - n)(∂F/∂n) n]_ij` for an operator-valued function `F(n)`.
fn apply_first_identity(
    f: &dyn Fn(&Matrix<f64>) -> Result<FockOperator<f64>>,
    n: &Matrix<f64>,
    i: usize,
    j: usize,
    h: f64,
) -> Result<FockOperator<f64>> {
    let value = f(n)?;
    let d = dlambda_dn_of(n, h, f)?;
    let hole = &Matrix::identity(n.rows()) - n;
    let corr = OperatorGrid::sandwich(&hole, &d, n);
    Ok(&value.scale(n[(i, j)]) + corr.get(i, j))
}

/// Compares `b_i† b_j b_k† b_l Λ` with the first number-conserving identity applied
/// twice, over all index quadruples. `b_i† b_j` passes through the scalar coefficients of
/// the `(k, l)` identity, so the `(i, j)` identity is applied first and the `(k, l)` form
/// acts on its result; both derivatives are numerical.
pub fn verify_thermal_composed(n: &Matrix<f64>, h: f64) -> Result<f64> {
    let m = n.rows();
    let lam_of = |x: &Matrix<f64>| GaussianParams::thermal(x.clone())?.materialize();
    let lam = lam_of(n)?;
    let b: Vec<FockOperator<f64>> = (0..m).map(|j| FockOperator::annihilator(j, m)).collect();
    let bd: Vec<FockOperator<f64>> = (0..m).map(|j| FockOperator::creator(j, m)).collect();
    let mut worst: f64 = 0.0;
    for i in 0..m {
        for j in 0..m {
            let inner = |x: &Matrix<f64>| apply_first_identity(&lam_of, x, i, j, h);
            for k in 0..m {
                for l in 0..m {
                    let composed = apply_first_identity(&inner, n, k, l, h)?;
                    let dense = &(&(&(&bd[i] * &b[j]) * &bd[k]) * &b[l]) * &lam;
                    worst = worst.max(composed.max_abs_diff(&dense));
                }
            }
        }
    }
    Ok(worst)
}

pub fn determinant_derivative_residual(p: &GaussianParams<f64>) -> Result<f64> {
    let sigma = p.covariance();
    let inv = crate::gaussian::covariance_inverse(&sigma)?;
    let k = 2 * p.modes();
    let mut worst: f64 = 0.0;
    for mu in 0..k {
        for nu in 0..k {
            if pair_direction::<f64>(p.modes(), nu, mu).max_abs() == 0.0 {
                continue;
            }
            let d = log_sqrt_det_derivative(&sigma, mu, nu, DEFAULT_STEP)?;
            worst = worst.max((d - inv.full()[(mu, nu)]).norm());
        }
    }
    Ok(worst)
}
