//! One function per subcommand. Each returns a report; the caller decides the exit code.

use std::path::Path;

use num_complex::Complex;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use fermigauss::decompose::{
    decompose_diagonal, decompose_general, decompose_two_mode, Decomposition, DensityMatrix,
};
use fermigauss::fock::{FockOperator, Ladder};
use fermigauss::gaussian::dense_normal_moment;
use fermigauss::identities::{normal_table, verify, Theorem};
use fermigauss::linalg::{pfaffian, Matrix};
use fermigauss::random::random_params;
use fermigauss::{Error, Gaussian};

use crate::report::{Check, CliError, Report};

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

/// Parameters from a JSON file, or a seeded random draw.
pub fn load_params(input: Option<&Path>, modes: usize, seed: u64) -> CliResult<Gaussian> {
    match input {
        Some(p) => {
            let g: Gaussian = read_json(p)?;
            g.validate()?;
            Ok(g)
        }
        None => Ok(random_params(modes, seed)?),
    }
}

pub fn pfaffian_cmd(config: Value, input: &Path, tolerance: f64) -> CliResult<Report> {
    let a: Matrix<f64> = read_json(input)?;
    let pf = pfaffian(&a)?;
    let det = a.det()?;
    let scale = det.norm().max(1.0);
    let checks = vec![Check::new("pfaffian-squared-equals-determinant", (pf * pf - det).norm() / scale, tolerance)];
    Ok(Report::new("pfaffian", config, json!({ "pfaffian": pf, "determinant": det }), checks))
}

pub fn trace_cmd(config: Value, p: &Gaussian, tolerance: f64) -> CliResult<Report> {
    let lam = p.materialize()?;
    let tr = lam.trace();
    let result = json!({
        "params": p,
        "trace": tr,
        "omega": p.omega,
        "normalization_factor": p.normalization_factor()?,
    });
    let checks = vec![Check::new("trace-equals-omega", (tr - p.omega).norm(), tolerance)];
    Ok(Report::new("trace", config, result, checks))
}

pub fn moments_cmd(config: Value, p: &Gaussian, tolerance: f64) -> CliResult<Report> {
    let lam = p.materialize_via_moments()?;
    let k = p.modes();
    let measured = |f: &dyn Fn(usize, usize) -> Vec<Ladder>| {
        Matrix::from_fn(k, k, |i, j| dense_normal_moment(&f(i, j), &lam))
    };
    let n = measured(&|i, j| vec![Ladder::create(i), Ladder::annihilate(j)]);
    let m = measured(&|i, j| vec![Ladder::annihilate(i), Ladder::annihilate(j)]);
    let mp = measured(&|i, j| vec![Ladder::create(i), Ladder::create(j)]);
    let scale = |x: &Matrix<f64>| x.scale(p.omega);
    let first = n.max_abs_diff(&scale(&p.n)).max(m.max_abs_diff(&scale(&p.m))).max(mp.max_abs_diff(&scale(&p.m_plus)));
    let nn_formula = Matrix::from_fn(k, k, |i, j| p.number_number(i, j).expect("indices in range"));
    let nn_dense = measured(&|i, j| vec![Ladder::create(i), Ladder::annihilate(i), Ladder::create(j), Ladder::annihilate(j)]);
    let result = json!({
        "params": p,
        "n": n,
        "m": m,
        "m_plus": mp,
        "number_number": nn_formula,
    });
    let checks = vec![
        Check::new("first-moments", first, tolerance),
        Check::new("number-number", nn_formula.max_abs_diff(&nn_dense), tolerance),
    ];
    Ok(Report::new("moments", config, result, checks))
}

pub fn materialize_cmd(config: Value, p: &Gaussian, tolerance: f64) -> CliResult<Report> {
    let by_moments = p.materialize_via_moments()?;
    let (dense, route) = match p.materialize() {
        Ok(d) => (d, "exponential"),
        Err(Error::SingularCovariance) => (by_moments.clone(), "moments"),
        Err(e) => return Err(e.into()),
    };
    let checks = vec![Check::new("routes-agree", dense.max_abs_diff(&by_moments), tolerance)];
    let result = json!({ "params": p, "route": route, "operator": dense.matrix() });
    Ok(Report::new("materialize", config, result, checks))
}

pub fn verify_cmd(config: Value, theorems: &[Theorem], modes: usize, seed: u64, tolerance: Option<f64>) -> CliResult<Report> {
    let mut reports = Vec::new();
    let mut checks = Vec::new();
    for &t in theorems {
        let mut r = verify(t, modes, seed)?;
        if let Some(tol) = tolerance {
            r.tolerance = tol;
            r.pass = r.residual.is_finite() && r.residual <= tol;
        }
        checks.push(Check::new(format!("theorem-{}", r.theorem), r.residual, r.tolerance));
        reports.push(r);
    }
    Ok(Report::new("verify", config, json!({ "reports": reports }), checks))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    /// Diagonal input: exact projector terms.
    Diagonal,
    /// Two modes: eight exact terms.
    TwoMode,
    /// Any mode count: projector terms plus limit families.
    General,
    /// Diagonal if possible, else two-mode at M = 2, else general.
    Auto,
}

#[derive(Deserialize)]
struct DensityInput {
    modes: usize,
    matrix: Matrix<f64>,
}

pub fn load_density(path: &Path) -> CliResult<DensityMatrix<f64>> {
    let d: DensityInput = read_json(path)?;
    Ok(DensityMatrix::new(d.modes, d.matrix)?)
}

pub fn decompose_cmd(config: Value, rho: &DensityMatrix<f64>, method: Method, schedule: &[f64], tolerance: Option<f64>) -> CliResult<Report> {
    let method = match method {
        Method::Auto if rho.max_off_diagonal() <= 1e-12 => Method::Diagonal,
        Method::Auto if rho.modes() == 2 => Method::TwoMode,
        Method::Auto => Method::General,
        m => m,
    };
    let (d, default_tol, name): (Decomposition<f64>, f64, &str) = match method {
        Method::Diagonal => (decompose_diagonal(rho)?, 1e-12, "diagonal"),
        Method::TwoMode => (decompose_two_mode(rho)?, 1e-10, "two-mode"),
        _ => (decompose_general(rho, schedule)?, 1e-6, "general"),
    };
    let tol = tolerance.unwrap_or(default_tol);
    let min_weight = d.min_weight().unwrap_or(0.0);
    let checks = vec![
        Check::new("reconstruction", d.residual.unwrap_or(f64::NAN), tol),
        Check::new("nonnegative-weights", (-min_weight).max(0.0), 0.0),
    ];
    let result = json!({ "method": name, "decomposition": d });
    Ok(Report::new("decompose", config, result, checks))
}

pub fn bell_params() -> CliResult<Gaussian> {
    let half = Complex::new(0.5, 0.0);
    Ok(Gaussian::two_mode(Complex::new(1.0, 0.0), Matrix::identity(2).scale(half), -half, -half)?)
}

pub fn demo_bell_cmd(config: Value, tolerance: f64) -> CliResult<Report> {
    let p = bell_params()?;
    let lam = p.materialize_via_moments()?;
    let bell = {
        let a = FockOperator::<f64>::outer(&[0, 0], &[0, 0])?;
        let b = FockOperator::outer(&[0, 0], &[1, 1])?;
        let c = FockOperator::outer(&[1, 1], &[0, 0])?;
        let d = FockOperator::outer(&[1, 1], &[1, 1])?;
        (&(&(&a + &b) + &c) + &d).scale(Complex::new(0.5, 0.0))
    };
    let normal = normal_table(&lam).traces();
    let checks = vec![
        Check::new("equals-bell-projector", lam.max_abs_diff(&bell), tolerance),
        Check::new("first-moments", normal.max_abs_diff(&p.first_moments()), tolerance),
    ];
    let result = json!({ "params": p, "operator": lam.matrix(), "bell_projector": bell.matrix() });
    Ok(Report::new("demo-bell", config, result, checks))
}

pub fn to_config<T: serde::Serialize>(x: &T) -> Value {
    to_value(x)
}
