//! Block tables of the three orderings of `b̲ b̲†` around a Gaussian operator, written
//! out from ladder matrices entry by entry.

use super::grid::OperatorGrid;
use crate::fock::FockOperator;


struct Ladders {
    b: Vec<FockOperator<f64>>,
    bd: Vec<FockOperator<f64>>,
}

fn ladders(modes: usize) -> Ladders {
    Ladders {
        b: (0..modes).map(|j| FockOperator::annihilator(j, modes)).collect(),
        bd: (0..modes).map(|j| FockOperator::creator(j, modes)).collect(),
    }
}

fn blocks(
    lam: &FockOperator<f64>,
    f: impl Fn(&Ladders, bool, bool, usize, usize) -> FockOperator<f64>,
) -> OperatorGrid {
    let m = lam.modes();
    let l = ladders(m);
    OperatorGrid::from_fn(2 * m, m, |r, c| f(&l, r < m, c < m, r % m, c % m))
}

/// `:b̲ b̲† Λ:` = `[[-(b†ᵀ Λ bᵀ)ᵀ, Λ b bᵀ], [b†ᵀ b† Λ, b†ᵀ Λ bᵀ]]`.
pub fn normal_table(lam: &FockOperator<f64>) -> OperatorGrid {
    blocks(lam, |l, top, left, i, j| match (top, left) {
        (true, true) => -(&(&l.bd[j] * lam) * &l.b[i]),
        (true, false) => &(lam * &l.b[i]) * &l.b[j],
        (false, true) => &(&l.bd[i] * &l.bd[j]) * lam,
        (false, false) => &(&l.bd[i] * lam) * &l.b[j],
    })
}

/// `{b̲ :b̲† Λ:}` = `[[b b† Λ, b Λ bᵀ], [-(b†ᵀ Λ b†)ᵀ, -(Λ b b†)ᵀ]]`.
pub fn mixed_table(lam: &FockOperator<f64>) -> OperatorGrid {
    blocks(lam, |l, top, left, i, j| match (top, left) {
        (true, true) => &(&l.b[i] * &l.bd[j]) * lam,
        (true, false) => &(&l.b[i] * lam) * &l.b[j],
        (false, true) => -(&(&l.bd[j] * lam) * &l.bd[i]),
        (false, false) => -(&(lam * &l.b[j]) * &l.bd[i]),
    })
}

/// `{b̲ b̲† Λ}` = `[[b Λ b†, b bᵀ Λ], [Λ b†ᵀ b†, -(b Λ b†)ᵀ]]`.
pub fn antinormal_table(lam: &FockOperator<f64>) -> OperatorGrid {
    blocks(lam, |l, top, left, i, j| match (top, left) {
        (true, true) => &(&l.b[i] * lam) * &l.bd[j],
        (true, false) => &(&l.b[i] * &l.b[j]) * lam,
        (false, true) => &(lam * &l.bd[i]) * &l.bd[j],
        (false, false) => -(&(&l.b[j] * lam) * &l.bd[i]),
    })
}

/// `M x M` tables used by the number-conserving identities.
pub fn thermal_tables(lam: &FockOperator<f64>) -> [OperatorGrid; 4] {
    let m = lam.modes();
    let l = ladders(m);
    [
        OperatorGrid::from_fn(m, m, |i, j| &(&l.bd[i] * &l.b[j]) * lam),
        OperatorGrid::from_fn(m, m, |i, j| &(lam * &l.bd[i]) * &l.b[j]),
        OperatorGrid::from_fn(m, m, |i, j| &(&l.bd[i] * lam) * &l.b[j]),
        OperatorGrid::from_fn(m, m, |i, j| &(&l.b[j] * lam) * &l.bd[i]),
    ]
}

