//! Dense complex linear algebra: matrices, determinants, inverses, Pfaffians and the
//! extended `2M x 2M` block layout.

pub mod extended;
pub mod matrix;
pub mod pfaffian;

pub use extended::{partner_index, signature_matrix, swap_matrix, Block, ExtendedMatrix};
pub use matrix::Matrix;
pub use pfaffian::{pfaffian, pfaffian_expansion};
