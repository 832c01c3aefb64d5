//! Normally ordered polynomials in the ladder operators.
//!
//! A monomial is `b†_{c_1} .. b†_{c_k} b_{a_1} .. b_{a_l}` with both index lists strictly
//! ascending; it is stored as a pair of bitmasks (bit `j` = mode `j`).

use std::collections::BTreeMap;

use num_complex::Complex;

use super::basis::{check_modes, dimension, Ladder};
use super::operator::FockOperator;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{cone, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub creators: u32,
    pub annihilators: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { creators: 0, annihilators: 0 };

    pub fn degree(self) -> u32 {
        self.creators.count_ones() + self.annihilators.count_ones()
    }

    pub fn creator_list(self) -> Vec<usize> {
        bits(self.creators)
    }

    pub fn annihilator_list(self) -> Vec<usize> {
        bits(self.annihilators)
    }

    pub fn word(self) -> Vec<Ladder> {
        let mut w: Vec<Ladder> = bits(self.creators).into_iter().map(Ladder::create).collect();
        w.extend(bits(self.annihilators).into_iter().map(Ladder::annihilate));
        w
    }
}

fn bits(mask: u32) -> Vec<usize> {
    (0..32).filter(|&j| mask & (1 << j) != 0).collect()
}

/// Number of pairs `(x in a, y in b)` with `x > y`.
fn crossing_count(a: u32, b: u32) -> u32 {
    bits(b).into_iter().map(|y| (a & !((2u32 << y) - 1)).count_ones()).sum()
}

/// Sorts a list of distinct indices, returning the mask and the permutation parity,
/// or `None` when an index repeats.
fn sort_signed(list: &[usize]) -> Option<(u32, bool)> {
    let mut mask = 0u32;
    let mut odd = false;
    for (k, &x) in list.iter().enumerate() {
        if mask & (1 << x) != 0 {
            return None;
        }
        mask |= 1 << x;
        odd ^= list[..k].iter().filter(|&&y| y > x).count() % 2 == 1;
    }
    Some((mask, odd))
}

/// `:m1 m2:` for canonical monomials; `None` when an operator repeats.
fn normal_product_monomials(m1: Monomial, m2: Monomial) -> Option<(Monomial, bool)> {
    if m1.creators & m2.creators != 0 || m1.annihilators & m2.annihilators != 0 {
        return None;
    }
    let swap = m1.annihilators.count_ones() * m2.creators.count_ones();
    let odd = (swap + crossing_count(m1.creators, m2.creators) + crossing_count(m1.annihilators, m2.annihilators)) % 2 == 1;
    Some((Monomial { creators: m1.creators | m2.creators, annihilators: m1.annihilators | m2.annihilators }, odd))
}

/// Normal-orders an arbitrary word using `b_i b_j† = δ_ij - b_j† b_i`. Returns canonical
/// monomials with integer coefficients.
pub fn normal_order_word(word: &[Ladder]) -> Vec<(Monomial, i64)> {
    let mut out: BTreeMap<Monomial, i64> = BTreeMap::new();
    let mut stack: Vec<(i64, Vec<Ladder>)> = vec![(1, word.to_vec())];
    while let Some((sign, w)) = stack.pop() {
        match w.windows(2).position(|p| !p[0].dagger && p[1].dagger) {
            Some(k) => {
                let (a, b) = (w[k], w[k + 1]);
                let mut swapped = w.clone();
                swapped.swap(k, k + 1);
                stack.push((-sign, swapped));
                if a.mode == b.mode {
                    let mut contracted = w;
                    contracted.drain(k..k + 2);
                    stack.push((sign, contracted));
                }
            }
            None => {
                let cre: Vec<usize> = w.iter().filter(|l| l.dagger).map(|l| l.mode).collect();
                let ann: Vec<usize> = w.iter().filter(|l| !l.dagger).map(|l| l.mode).collect();
                if let (Some((cm, co)), Some((am, ao))) = (sort_signed(&cre), sort_signed(&ann)) {
                    let s = if co ^ ao { -sign } else { sign };
                    *out.entry(Monomial { creators: cm, annihilators: am }).or_insert(0) += s;
                }
            }
        }
    }
    out.into_iter().filter(|&(_, k)| k != 0).collect()
}

fn times_int<T: Real>(c: Complex<T>, k: i64) -> Complex<T> {
    c * T::from_i64(k).expect("small integer")
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormalPolynomial<T: Real> {
    modes: usize,
    terms: BTreeMap<Monomial, Complex<T>>,
}

impl<T: Real> NormalPolynomial<T> {
    pub fn zero(modes: usize) -> Result<Self> {
        check_modes(modes)?;
        Ok(NormalPolynomial { modes, terms: BTreeMap::new() })
    }

    pub fn constant(modes: usize, value: Complex<T>) -> Result<Self> {
        let mut p = Self::zero(modes)?;
        p.add_term(Monomial::ONE, value);
        Ok(p)
    }

    /// Single monomial from creator and annihilator lists in any order; the lists are
    /// read as the product `b†_{c_1} .. b†_{c_k} b_{a_1} .. b_{a_l}`.
    pub fn monomial(modes: usize, creators: &[usize], annihilators: &[usize], coeff: Complex<T>) -> Result<Self> {
        let mut p = Self::zero(modes)?;
        for &j in creators.iter().chain(annihilators) {
            if j >= modes {
                return Err(Error::IndexOutOfRange { index: j, bound: modes });
            }
        }
        if let (Some((cm, co)), Some((am, ao))) = (sort_signed(creators), sort_signed(annihilators)) {
            p.add_term(Monomial { creators: cm, annihilators: am }, if co ^ ao { -coeff } else { coeff });
        }
        Ok(p)
    }

    /// Normal-ordered form of an arbitrary product of ladder operators.
    pub fn from_word(modes: usize, word: &[Ladder], coeff: Complex<T>) -> Result<Self> {
        let mut p = Self::zero(modes)?;
        for l in word {
            if l.mode >= modes {
                return Err(Error::IndexOutOfRange { index: l.mode, bound: modes });
            }
        }
        for (m, k) in normal_order_word(word) {
            p.add_term(m, times_int(coeff, k));
        }
        Ok(p)
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: Monomial) -> Complex<T> {
        self.terms.get(&m).copied().unwrap_or_else(|| Complex::new(T::zero(), T::zero()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (Monomial, Complex<T>)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    /// Terms as `(creator indices, annihilator indices, coefficient)`, both lists ascending.
    pub fn terms(&self) -> Vec<(Vec<usize>, Vec<usize>, Complex<T>)> {
        self.iter().map(|(m, c)| (m.creator_list(), m.annihilator_list(), c)).collect()
    }

    pub fn add_term(&mut self, m: Monomial, coeff: Complex<T>) {
        let e = self.terms.entry(m).or_insert_with(|| Complex::new(T::zero(), T::zero()));
        *e = *e + coeff;
        if e.re.is_zero() && e.im.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.modes, other.modes, "mode mismatch");
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(m, c);
        }
        out
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        NormalPolynomial { modes: self.modes, terms: self.terms.iter().map(|(&m, &c)| (m, c * s)).collect() }
    }

    /// Normal-ordered product `:p q:` (no contractions).
    pub fn normal_product(&self, other: &Self) -> Self {
        assert_eq!(self.modes, other.modes, "mode mismatch");
        let mut out = NormalPolynomial { modes: self.modes, terms: BTreeMap::new() };
        for (m1, c1) in self.iter() {
            for (m2, c2) in other.iter() {
                if let Some((m, odd)) = normal_product_monomials(m1, m2) {
                    let c = c1 * c2;
                    out.add_term(m, if odd { -c } else { c });
                }
            }
        }
        out
    }

    /// Operator product `p q`, normal-ordered with all contractions.
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.modes, other.modes, "mode mismatch");
        let mut out = NormalPolynomial { modes: self.modes, terms: BTreeMap::new() };
        for (m1, c1) in self.iter() {
            for (m2, c2) in other.iter() {
                let mut word = m1.word();
                word.extend(m2.word());
                let c = c1 * c2;
                for (m, k) in normal_order_word(&word) {
                    out.add_term(m, times_int(c, k));
                }
            }
        }
        out
    }

    /// Dense matrix, built by acting with each monomial on basis states.
    pub fn to_fock(&self) -> FockOperator<T> {
        let d = dimension(self.modes);
        let mut mat = Matrix::zeros(d, d);
        for (m, c) in self.iter() {
            let word = m.word();
            for s in 0..d {
                if let Some(img) = super::basis::apply_word(&word, s, self.modes) {
                    let v = if img.negative { -c } else { c };
                    mat[(img.state, s)] = mat[(img.state, s)] + v;
                }
            }
        }
        FockOperator::wrap(self.modes, mat)
    }

    /// Dense matrix, built from products of dense ladder matrices.
    pub fn to_fock_via_ladders(&self) -> FockOperator<T> {
        let mut acc = FockOperator::zero(self.modes);
        for (m, c) in self.iter() {
            acc = &acc + &FockOperator::word_product(&m.word(), self.modes).scale(c);
        }
        acc
    }
}

impl<T: Real> NormalPolynomial<T> {
    /// `:prod_a (1 + x_a):` for a list of even monomials.
    pub fn product_of_unit_factors(modes: usize, factors: &[(Monomial, Complex<T>)]) -> Result<Self> {
        let mut acc = Self::constant(modes, cone())?;
        for &(m, c) in factors {
            if c.re.is_zero() && c.im.is_zero() {
                continue;
            }
            let single = NormalPolynomial { modes, terms: BTreeMap::from([(m, c)]) };
            acc = acc.add(&acc.normal_product(&single));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    #[test]
    fn hopping_product_canonical_form() {
        // (b1† b2)(b2† b1) = b1† b1 - b1† b2† b2 b1 = b1† b1 + b1† b2† b1 b2
        let p = NormalPolynomial::<f64>::monomial(2, &[0], &[1], cone()).unwrap();
        let q = NormalPolynomial::<f64>::monomial(2, &[1], &[0], cone()).unwrap();
        let r = p.multiply(&q);
        assert_eq!(r.len(), 2);
        assert_eq!(r.coefficient(Monomial { creators: 1, annihilators: 1 }), c(1.0, 0.0));
        assert_eq!(r.coefficient(Monomial { creators: 3, annihilators: 3 }), c(1.0, 0.0));
        let dense = p.to_fock().matrix().matmul(q.to_fock().matrix());
        assert!(r.to_fock().matrix().max_abs_diff(&dense) < 1e-15);
    }

    #[test]
    fn repeated_operator_vanishes() {
        let p = NormalPolynomial::<f64>::monomial(2, &[0, 0], &[], cone()).unwrap();
        assert!(p.is_empty());
        let q = NormalPolynomial::<f64>::monomial(2, &[1, 0], &[], cone()).unwrap();
        assert_eq!(q.coefficient(Monomial { creators: 3, annihilators: 0 }), c(-1.0, 0.0));
    }

    #[test]
    fn crossing() {
        assert_eq!(crossing_count(0b100, 0b011), 2);
        assert_eq!(crossing_count(0b001, 0b110), 0);
    }

    #[test]
    fn anticommutator_from_words() {
        let w1 = [Ladder::annihilate(1), Ladder::create(1)];
        let w2 = [Ladder::create(1), Ladder::annihilate(1)];
        let s = NormalPolynomial::<f64>::from_word(2, &w1, cone()).unwrap().add(&NormalPolynomial::from_word(2, &w2, cone()).unwrap());
        assert_eq!(s.terms(), vec![(vec![], vec![], cone())]);
    }
}
