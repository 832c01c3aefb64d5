//! Orderings of ladder operators around a fixed inner operator.
//!
//! Inside `:w Λ:` every creator of `w` is moved to the left of `Λ` and every annihilator
//! to its right, keeping relative order within each group and `Λ` in place; the sign is
//! the parity of that rearrangement. The antinormal ordering `{w Λ}` does the reverse.

use super::basis::Ladder;
use super::operator::FockOperator;
use crate::scalar::Real;

fn split(word: &[Ladder], creators_first: bool) -> (Vec<Ladder>, Vec<Ladder>, bool) {
    let mut front = Vec::new();
    let mut back = Vec::new();
    let mut odd = false;
    for &op in word {
        if op.dagger == creators_first {
            // moves past everything already sent to the back
            odd ^= back.len() % 2 == 1;
            front.push(op);
        } else {
            back.push(op);
        }
    }
    (front, back, odd)
}

/// `:w Λ:`: creators left of `inner`, annihilators right of it.
pub fn normal_around<T: Real>(word: &[Ladder], inner: &FockOperator<T>) -> FockOperator<T> {
    let (cre, ann, odd) = split(word, true);
    sandwich(&cre, inner, &ann, odd)
}

/// `{w Λ}`: annihilators left of `inner`, creators right of it.
pub fn antinormal_around<T: Real>(word: &[Ladder], inner: &FockOperator<T>) -> FockOperator<T> {
    let (ann, cre, odd) = split(word, false);
    sandwich(&ann, inner, &cre, odd)
}

/// `{x :y Λ:}`: the inner normal ordering is done first, then `x` is placed
/// antinormally around the result without reordering it. The inner operator is even,
/// so only the ladder operator `y` contributes to the sign.
pub fn mixed_around<T: Real>(x: Ladder, y: Ladder, inner: &FockOperator<T>) -> FockOperator<T> {
    let inner_normal = normal_around(&[y], inner);
    if x.dagger {
        -(&inner_normal * &FockOperator::ladder(x, inner.modes()))
    } else {
        &FockOperator::ladder(x, inner.modes()) * &inner_normal
    }
}

fn sandwich<T: Real>(left: &[Ladder], inner: &FockOperator<T>, right: &[Ladder], odd: bool) -> FockOperator<T> {
    let m = inner.modes();
    let l = FockOperator::word_action(left, m);
    let r = FockOperator::word_action(right, m);
    let out = &(&l * inner) * &r;
    if odd {
        -out
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cone;

    #[test]
    fn normal_around_identity_is_normal_order() {
        // :b b† 1: = -b† b
        let id = FockOperator::<f64>::identity(1);
        let w = [Ladder::annihilate(0), Ladder::create(0)];
        let lhs = normal_around(&w, &id);
        let n = FockOperator::<f64>::word_action(&[Ladder::create(0), Ladder::annihilate(0)], 1);
        assert_eq!(lhs, -n.clone());
        // {b† b} = -b b†
        let a = antinormal_around(&[Ladder::create(0), Ladder::annihilate(0)], &id);
        let bb = FockOperator::<f64>::word_action(&w, 1);
        assert_eq!(a, -bb.clone());
        // :b b†: - {b b†} = -1 for this element of the extended vector
        assert_eq!(&lhs - &antinormal_around(&w, &id), -FockOperator::identity(1).scale(cone()));
    }
}
