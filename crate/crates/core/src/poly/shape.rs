//! Palindromicity, unimodality and log-concavity of coefficient sequences.

use std::fmt;

use num_bigint::BigInt;

use super::int_poly::IntPoly;

/// A non-negative multiple of one half, stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(pub usize);

impl HalfInt {
    pub fn from_twice(twice: usize) -> Self {
        Self(twice)
    }

    pub fn twice(self) -> usize {
        self.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    pub palindromic_center: Option<HalfInt>,
    pub unimodal: bool,
    pub log_concave: bool,
}

/// Shape of a nonzero polynomial over its index range `0..=degree`.
pub fn shape_predicates(f: &IntPoly) -> Shape {
    let h = f.coeffs();
    let deg = h.len().saturating_sub(1);
    Shape {
        palindromic_center: is_palindromic(h).then_some(HalfInt(deg)),
        unimodal: is_unimodal(h),
        log_concave: is_log_concave(h),
    }
}

pub fn is_palindromic(h: &[BigInt]) -> bool {
    h.iter().eq(h.iter().rev())
}

/// Weakly increasing up to some peak, weakly decreasing after it.
pub fn is_unimodal(h: &[BigInt]) -> bool {
    let mut i = 1;
    while i < h.len() && h[i - 1] <= h[i] {
        i += 1;
    }
    while i < h.len() && h[i - 1] >= h[i] {
        i += 1;
    }
    i >= h.len()
}

/// `h_i^2 >= h_{i-1} h_{i+1}` at every interior index.
pub fn is_log_concave(h: &[BigInt]) -> bool {
    h.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alt_eulerian_four() {
        let s = shape_predicates(&IntPoly::from_i64s(&[5, 7, 7, 5]));
        assert_eq!(s.palindromic_center, Some(HalfInt(3)));
        assert_eq!(s.palindromic_center.unwrap().to_string(), "3/2");
        assert!(s.unimodal);
        assert!(s.log_concave);
    }

    #[test]
    fn constant() {
        let s = shape_predicates(&IntPoly::one());
        assert_eq!(s.palindromic_center.unwrap().to_string(), "0");
        assert!(s.unimodal && s.log_concave);
    }

    #[test]
    fn dip_is_not_unimodal() {
        let s = shape_predicates(&IntPoly::from_i64s(&[1, 3, 2, 3]));
        assert!(!s.unimodal);
        assert!(s.palindromic_center.is_none());
        assert!(!s.log_concave);
    }

    #[test]
    fn internal_zero_counts_as_zero() {
        let s = shape_predicates(&IntPoly::from_i64s(&[1, 0, 1]));
        assert!(!s.unimodal);
        assert!(!s.log_concave);
        assert!(s.palindromic_center.is_some());
    }
}
