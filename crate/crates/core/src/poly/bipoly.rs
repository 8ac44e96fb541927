//! Sparse bivariate polynomials in `(t, q)`.
//!
//! The same type carries `Ã_n(s, t)`; there the first slot holds `s` and the
//! second `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::int_poly::{write_terms, IntPoly};

/// Map `(t-exponent, q-exponent) -> coefficient`; zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiPolyTQ {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BiPolyTQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, t_exp: usize, q_exp: usize) -> Self {
        let mut out = Self::zero();
        out.add_term(t_exp, q_exp, c.into());
        out
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), BigInt)>,
    {
        let mut out = Self::zero();
        for ((k, j), c) in terms {
            out.add_term(k, j, c);
        }
        out
    }

    /// Builds from a dense count table `counts[t_exp][q_exp]`.
    pub fn from_count_table(counts: &[Vec<u64>]) -> Self {
        Self::from_terms(counts.iter().enumerate().flat_map(|(k, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(move |(j, c)| ((k, j), BigInt::from(*c)))
        }))
    }

    /// `t^t_exp * p(q)`
    pub fn from_q_poly(p: &IntPoly, t_exp: usize) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(m, c)| ((t_exp, m), c.clone())),
        )
    }

    /// `p(t) * q^q_exp`
    pub fn from_t_poly(p: &IntPoly, q_exp: usize) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| ((k, q_exp), c.clone())),
        )
    }

    /// The lexicographically largest term.
    pub fn leading_term(&self) -> Option<((usize, usize), &BigInt)> {
        self.terms.last_key_value().map(|(&e, c)| (e, c))
    }

    pub fn add_term(&mut self, t_exp: usize, q_exp: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((t_exp, q_exp))
            .or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(t_exp, q_exp));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t_exp: usize, q_exp: usize) -> BigInt {
        self.terms.get(&(t_exp, q_exp)).cloned().unwrap_or_default()
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.terms.keys().map(|(k, _)| *k).max()
    }

    pub fn q_degree(&self) -> Option<usize> {
        self.terms.keys().map(|(_, j)| *j).max()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    /// Substitutes `t -> t q^j`: entry `(k, m)` moves to `(k, m + k j)`.
    pub fn substitute_tq(&self, j: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(k, m), c)| ((k, m + k * j), c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `t^a q^b`.
    pub fn shift(&self, a: usize, b: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(k, m), c)| ((k + a, m + b), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `t^k` as a polynomial in `q`.
    pub fn t_coeff(&self, k: usize) -> IntPoly {
        let mut coeffs = Vec::new();
        for (&(_, m), c) in self.terms.range((k, 0)..=(k, usize::MAX)) {
            if coeffs.len() <= m {
                coeffs.resize(m + 1, BigInt::zero());
            }
            coeffs[m] = c.clone();
        }
        IntPoly::new(coeffs)
    }

    /// Sets `q = 1`, leaving a polynomial in `t`.
    pub fn at_q_one(&self) -> IntPoly {
        self.collapse(|k, _| k)
    }

    /// Sets `t = 1`, leaving a polynomial in `q`.
    pub fn at_t_one(&self) -> IntPoly {
        self.collapse(|_, m| m)
    }

    /// Sets `t = q^j`, leaving a polynomial in `q`.
    pub fn at_t_power(&self, j: usize) -> IntPoly {
        self.collapse(|k, m| m + k * j)
    }

    fn collapse(&self, exp: impl Fn(usize, usize) -> usize) -> IntPoly {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (&(k, m), c) in &self.terms {
            let e = exp(k, m);
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += c;
        }
        IntPoly::new(coeffs)
    }

    /// Exchanges the two slots.
    pub fn swap_slots(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }

    /// Divides every coefficient by 2; `Err((t_exp, q_exp))` names the first odd entry.
    pub fn halve(&self) -> Result<Self, (usize, usize)> {
        let two = BigInt::from(2);
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            if !(c % &two).is_zero() {
                return Err(e);
            }
            terms.insert(e, c / &two);
        }
        Ok(Self { terms })
    }

    pub fn display(&self, vars: (char, char)) -> BiPolyDisplay<'_> {
        BiPolyDisplay { poly: self, vars }
    }
}

impl AddAssign<&BiPolyTQ> for BiPolyTQ {
    fn add_assign(&mut self, rhs: &BiPolyTQ) {
        for (&(k, m), c) in &rhs.terms {
            self.add_term(k, m, c.clone());
        }
    }
}

impl<'a> Add<&'a BiPolyTQ> for &'a BiPolyTQ {
    type Output = BiPolyTQ;

    fn add(self, rhs: &BiPolyTQ) -> BiPolyTQ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl SubAssign<&BiPolyTQ> for BiPolyTQ {
    fn sub_assign(&mut self, rhs: &BiPolyTQ) {
        for (&(k, m), c) in &rhs.terms {
            self.add_term(k, m, -c);
        }
    }
}

impl<'a> Sub<&'a BiPolyTQ> for &'a BiPolyTQ {
    type Output = BiPolyTQ;

    fn sub(self, rhs: &BiPolyTQ) -> BiPolyTQ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for BiPolyTQ {
    type Output = BiPolyTQ;

    fn neg(mut self) -> BiPolyTQ {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

impl<'a> Mul<&'a BiPolyTQ> for &'a BiPolyTQ {
    type Output = BiPolyTQ;

    fn mul(self, rhs: &BiPolyTQ) -> BiPolyTQ {
        let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (&(k1, m1), a) in &self.terms {
            for (&(k2, m2), b) in &rhs.terms {
                *acc.entry((k1 + k2, m1 + m2)).or_insert_with(BigInt::zero) += a * b;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        BiPolyTQ { terms: acc }
    }
}

pub struct BiPolyDisplay<'a> {
    poly: &'a BiPolyTQ,
    vars: (char, char),
}

impl fmt::Display for BiPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.vars;
        write_terms(
            f,
            self.poly
                .terms
                .iter()
                .map(|(&(k, m), c)| (c.clone(), vec![(a, k), (b, m)])),
        )
    }
}

impl fmt::Display for BiPolyTQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(('t', 'q')).fmt(f)
    }
}

/// `1 + t^a q^b` as a bivariate polynomial.
pub fn one_plus_tq(a: usize, b: usize) -> BiPolyTQ {
    let mut out = BiPolyTQ::one();
    out.add_term(a, b, BigInt::one());
    out
}
