//! Dense Fock-space oracle: basis conventions, ladder operators, dense operators and the
//! normally ordered polynomial algebra.

pub mod basis;
pub mod exponential;
pub mod operator;
pub mod ordering;
pub mod poly;

pub use exponential::{gaussian_unnormalized_dense, unnormalized_gaussian_poly};
pub use basis::{apply_word, check_modes, dimension, occupations, state_index, Ladder, MAX_MODES};
pub use operator::{ladder_matrices, FockOperator};
pub use poly::{Monomial, NormalPolynomial};
