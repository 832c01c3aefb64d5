//! Numerical verification of the moment theorems and differential identities.

pub mod derivative;
pub mod grid;
pub mod tables;
pub mod verify;

pub use derivative::{analytic_field, dlambda_dn, dlambda_dsigma, numeric_field, DerivativeField, DEFAULT_STEP};
pub use grid::OperatorGrid;
pub use tables::{antinormal_table, mixed_table, normal_table, thermal_tables};
pub use verify::{verify, IdentityReport, Theorem};
