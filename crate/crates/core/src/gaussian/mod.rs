//! Gaussian operators: parameters, covariance, dense materialization, moments and the
//! moment generating function.

pub mod mgf;
pub mod moments;
pub mod operator;
pub mod params;

pub use mgf::{mgf, mgf_pfaffian, pair_direction};
pub use moments::{contraction_inside, contraction_outside, dense_inside_moment, dense_normal_moment};
pub use operator::{
    covariance_from_exponent, covariance_inverse, exponent_from_covariance, materialize_covariance,
    normalization_factor, normalized_polynomial, unnormalized_trace,
};
pub use params::GaussianParams;
