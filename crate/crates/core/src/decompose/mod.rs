//! Positive decompositions of density matrices into Gaussian operators.

mod density;
mod expansion;
mod limits;

pub use density::{DensityMatrix, DENSITY_TOL};
pub use expansion::{
    decompose_diagonal, decompose_general, decompose_two_mode, reconstruct, Decomposition, Term,
};
pub use limits::{
    check_schedule, limit_gaussian, limit_gaussian_squeezed, limit_gaussian_thermal, LimitFamily,
    LimitGaussian, LimitKind, DEFAULT_SCHEDULE,
};
