//! Integer combinations of words over a two-letter alphabet.
//!
//! Letter `0` plays `a` (or `c`), letter `1` plays `b` (or `d`); the names are
//! only chosen when rendering.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::int_poly::IntPoly;

pub type Word = Vec<u8>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NCPoly {
    terms: BTreeMap<Word, BigInt>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The empty word with coefficient 1.
    pub fn one() -> Self {
        Self::word(Vec::new())
    }

    pub fn letter(l: u8) -> Self {
        Self::word(vec![l])
    }

    pub fn word(w: Word) -> Self {
        let mut out = Self::zero();
        out.add_word(w, BigInt::one());
        out
    }

    pub fn add_word(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[u8]) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (w, a) in &self.terms {
            out.add_word(w.clone(), a * c);
        }
        out
    }

    /// Weighted length of every word, with letter `l` weighing `weights[l]`.
    /// `None` if the words disagree (or the polynomial is zero).
    pub fn homogeneous_weight(&self, weights: [usize; 2]) -> Option<usize> {
        let mut it = self
            .terms
            .keys()
            .map(|w| w.iter().map(|&l| weights[l as usize]).sum::<usize>());
        let first = it.next()?;
        it.all(|x| x == first).then_some(first)
    }

    /// Replaces letter `l` by `images[l]` in every word, expanding products in order.
    pub fn substitute(&self, images: &[NCPoly; 2]) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let expanded = w
                .iter()
                .fold(NCPoly::one(), |acc, &l| &acc * &images[l as usize]);
            out += &expanded.scale(c);
        }
        out
    }

    /// Evaluates with commuting polynomial values for the two letters.
    pub fn eval_commutative(&self, values: [&IntPoly; 2]) -> IntPoly {
        self.terms
            .iter()
            .map(|(w, c)| {
                let zeros = w.iter().filter(|&&l| l == 0).count() as u32;
                let ones = w.len() as u32 - zeros;
                (&values[0].pow(zeros) * &values[1].pow(ones)).scale(c)
            })
            .sum()
    }

    pub fn display(&self, letters: [char; 2]) -> NCPolyDisplay<'_> {
        NCPolyDisplay {
            poly: self,
            letters,
        }
    }
}

impl AddAssign<&NCPoly> for NCPoly {
    fn add_assign(&mut self, rhs: &NCPoly) {
        for (w, c) in &rhs.terms {
            let entry = self.terms.entry(w.clone()).or_insert_with(BigInt::zero);
            *entry += c;
        }
        self.terms.retain(|_, c| !c.is_zero());
    }
}

impl<'a> Add<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;

    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Mul<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;

    /// Concatenation product.
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let mut terms: BTreeMap<Word, BigInt> = BTreeMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                *terms.entry(w).or_insert_with(BigInt::zero) += a * b;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        NCPoly { terms }
    }
}

pub struct NCPolyDisplay<'a> {
    poly: &'a NCPoly,
    letters: [char; 2],
}

impl fmt::Display for NCPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.poly.terms.iter().enumerate() {
            let word: String = w.iter().map(|&l| self.letters[l as usize]).collect();
            let neg = c < &BigInt::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            let body = match (word.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => word,
                (false, false) => format!("{mag}{word}"),
            };
            match (i == 0, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a_plus_b() -> NCPoly {
        &NCPoly::letter(0) + &NCPoly::letter(1)
    }

    #[test]
    fn multiplication_is_not_commutative() {
        let ab = &NCPoly::letter(0) * &NCPoly::letter(1);
        let ba = &NCPoly::letter(1) * &NCPoly::letter(0);
        assert_ne!(ab, ba);
        assert_eq!((&ab + &ba).len(), 2);
    }

    #[test]
    fn cd_to_ab_substitution() {
        // c^2 + d  with c = a+b, d = ab+ba  gives  aa + 2ab + 2ba + bb
        let c = NCPoly::letter(0);
        let d = NCPoly::letter(1);
        let phi = &(&c * &c) + &d;
        let ab_ba =
            &(&NCPoly::letter(0) * &NCPoly::letter(1)) + &(&NCPoly::letter(1) * &NCPoly::letter(0));
        let psi = phi.substitute(&[a_plus_b(), ab_ba]);
        assert_eq!(psi.coeff(&[0, 1]), BigInt::from(2));
        assert_eq!(psi.coeff(&[1, 0]), BigInt::from(2));
        assert_eq!(psi.coeff(&[0, 0]), BigInt::from(1));
        assert_eq!(psi.coeff(&[1, 1]), BigInt::from(1));
        assert_eq!(psi.display(['a', 'b']).to_string(), "aa + 2ab + 2ba + bb");
    }

    #[test]
    fn weighted_length() {
        let c = NCPoly::letter(0);
        let d = NCPoly::letter(1);
        let phi = &(&c * &c) + &d;
        assert_eq!(phi.homogeneous_weight([1, 2]), Some(2));
        assert_eq!(phi.homogeneous_weight([1, 1]), None);
    }

    #[test]
    fn commutative_evaluation() {
        // 2cc - d at c = 1 + t, d = 2t is 2 + 2t + 2t^2
        let c = NCPoly::letter(0);
        let d = NCPoly::letter(1);
        let phi_hat = &(&c * &c).scale(&BigInt::from(2)) + &d.scale(&BigInt::from(-1));
        let v =
            phi_hat.eval_commutative([&IntPoly::from_i64s(&[1, 1]), &IntPoly::from_i64s(&[0, 2])]);
        assert_eq!(v, IntPoly::from_i64s(&[2, 2, 2]));
    }
}
