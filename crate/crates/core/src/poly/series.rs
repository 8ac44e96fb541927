//! Truncated power series in `z` whose coefficients are polynomials in `t`
//! with rational coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::int_poly::IntPoly;
use crate::error::{Error, Result};

/// `num / den` with `den > 0` and `gcd(content(num), den) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    num: IntPoly,
    den: BigInt,
}

impl RatPoly {
    pub fn new(num: IntPoly, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num, den)
        };
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.content().gcd(&den);
        if g.is_one() {
            Self { num, den }
        } else {
            Self {
                num: num.div_scalar(&g).expect("gcd divides the content"),
                den: den / g,
            }
        }
    }

    pub fn zero() -> Self {
        Self {
            num: IntPoly::zero(),
            den: BigInt::one(),
        }
    }

    pub fn from_poly(num: IntPoly) -> Self {
        Self::new(num, BigInt::one())
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value as a nonzero constant, if it is one.
    fn as_nonzero_constant(&self) -> Option<(BigInt, BigInt)> {
        (self.num.degree() == Some(0)).then(|| (self.num.coeff(0), self.den.clone()))
    }

    /// Exact division of the numerator by a polynomial.
    pub fn exact_div_poly(&self, g: &IntPoly) -> Result<Self> {
        Ok(Self::new(self.num.exact_div(g)?, self.den.clone()))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let num = &self.num.scale(&rhs.den) + &rhs.num.scale(&self.den);
        RatPoly::new(num, &self.den * &rhs.den)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let num = &self.num.scale(&rhs.den) - &rhs.num.scale(&self.den);
        RatPoly::new(num, &self.den * &rhs.den)
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        RatPoly {
            num: -self.num,
            den: self.den,
        }
    }
}

/// `sum_{n <= order} c_n(t) z^n`; every operation truncates at `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<RatPoly>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![RatPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = RatPoly::from_poly(IntPoly::one());
        s
    }

    /// Coefficients past `order` are dropped, missing ones are zero.
    pub fn from_coeffs(order: usize, coeffs: Vec<RatPoly>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> &RatPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    /// Multiplies every coefficient by the same polynomial in `t`.
    pub fn scale_poly(&self, p: &IntPoly) -> Self {
        let p = RatPoly::from_poly(p.clone());
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * &p).collect(),
        }
    }

    /// Divides every coefficient exactly by a polynomial in `t`.
    pub fn exact_div_poly(&self, g: &IntPoly) -> Result<Self> {
        Ok(Self {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.exact_div_poly(g))
                .collect::<Result<_>>()?,
        })
    }

    /// Multiplicative inverse; the constant term must be a nonzero rational constant.
    pub fn recip(&self) -> Result<Self> {
        let (c0n, c0d) = self.coeffs[0].as_nonzero_constant().ok_or_else(|| {
            Error::NotDivisible("series constant term is not an invertible constant".into())
        })?;
        let inv0 = RatPoly::new(IntPoly::constant(c0d), c0n);
        let mut out = Self::zero(self.order);
        out.coeffs[0] = inv0.clone();
        for n in 1..=self.order {
            let mut acc = RatPoly::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !out.coeffs[n - k].is_zero() {
                    acc = &acc + &(&self.coeffs[k] * &out.coeffs[n - k]);
                }
            }
            out.coeffs[n] = -(&acc * &inv0);
        }
        Ok(out)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        TruncSeries {
            order,
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        TruncSeries {
            order,
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        let mut out = TruncSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !rhs.coeffs[j].is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
                }
            }
        }
        out
    }
}
