//! Occupation-number basis. Index `k` encodes `(n_1, ..., n_M)` in binary with `n_1`
//! as the most significant bit. Modes are 0-based in code.

use crate::error::{Error, Result};

pub const MAX_MODES: usize = 6;

pub fn check_modes(modes: usize) -> Result<()> {
    if (1..=MAX_MODES).contains(&modes) {
        Ok(())
    } else {
        Err(Error::ModeCountOutOfRange(modes))
    }
}

pub fn dimension(modes: usize) -> usize {
    1 << modes
}

/// Bit of basis index `k` that holds the occupation of `mode`.
#[inline]
pub fn mode_bit(mode: usize, modes: usize) -> usize {
    1 << (modes - 1 - mode)
}

pub fn is_occupied(state: usize, mode: usize, modes: usize) -> bool {
    state & mode_bit(mode, modes) != 0
}

/// Number of occupied modes with index below `mode`: the Jordan-Wigner string length.
#[inline]
pub fn occupied_before(state: usize, mode: usize, modes: usize) -> u32 {
    let above = !((mode_bit(mode, modes) << 1) - 1);
    (state & above & (dimension(modes) - 1)).count_ones()
}

pub fn state_index(occupations: &[u8]) -> Result<usize> {
    let modes = occupations.len();
    let mut k = 0;
    for (j, &n) in occupations.iter().enumerate() {
        match n {
            0 => {}
            1 => k |= mode_bit(j, modes),
            _ => return Err(Error::InvalidOccupation),
        }
    }
    Ok(k)
}

pub fn occupations(state: usize, modes: usize) -> Vec<u8> {
    (0..modes).map(|j| u8::from(is_occupied(state, j, modes))).collect()
}

/// Outcome of a ladder operator acting on a basis state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Image {
    pub state: usize,
    pub negative: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ladder {
    pub mode: usize,
    pub dagger: bool,
}

impl Ladder {
    pub fn annihilate(mode: usize) -> Self {
        Ladder { mode, dagger: false }
    }

    pub fn create(mode: usize) -> Self {
        Ladder { mode, dagger: true }
    }

    pub fn adjoint(self) -> Self {
        Ladder { mode: self.mode, dagger: !self.dagger }
    }

    /// Entry `mu` of the extended vector `(b_1..b_M, b_1†..b_M†)`.
    pub fn extended(mu: usize, modes: usize) -> Self {
        if mu < modes {
            Ladder::annihilate(mu)
        } else {
            Ladder::create(mu - modes)
        }
    }

    /// Entry `mu` of the adjoint extended vector `(b_1†..b_M†, b_1..b_M)`.
    pub fn extended_adjoint(mu: usize, modes: usize) -> Self {
        Ladder::extended(mu, modes).adjoint()
    }

    pub fn apply(self, state: usize, modes: usize) -> Option<Image> {
        let bit = mode_bit(self.mode, modes);
        let occupied = state & bit != 0;
        if occupied == self.dagger {
            return None;
        }
        let negative = occupied_before(state, self.mode, modes) % 2 == 1;
        Some(Image { state: state ^ bit, negative })
    }
}

/// Applies a product of ladder operators (rightmost acts first) to a basis state.
pub fn apply_word(word: &[Ladder], state: usize, modes: usize) -> Option<Image> {
    let mut img = Image { state, negative: false };
    for op in word.iter().rev() {
        let next = op.apply(img.state, modes)?;
        img = Image { state: next.state, negative: img.negative ^ next.negative };
    }
    Some(img)
}
