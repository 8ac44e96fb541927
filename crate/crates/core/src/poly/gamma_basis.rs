//! Expansion of palindromic polynomials in the sign-alternating basis
//! `(-2t)^k (1+t)^{n-1-2k}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::int_poly::IntPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector {
    pub n: usize,
    /// `a(n, k)` for `k = 0..=(n-1)/2`.
    pub gammas: Vec<BigInt>,
}

impl GammaVector {
    /// `sum_k a(n,k) (-2t)^k (1+t)^{n-1-2k}`
    pub fn reconstruct(&self) -> IntPoly {
        let one_plus_t = IntPoly::from_i64s(&[1, 1]);
        let minus_two_t = IntPoly::from_i64s(&[0, -2]);
        let top = self.n.saturating_sub(1);
        self.gammas
            .iter()
            .enumerate()
            .map(|(k, a)| {
                (&minus_two_t.pow(k as u32) * &one_plus_t.pow((top - 2 * k) as u32)).scale(a)
            })
            .sum()
    }

    /// `a_n(x) = sum_k a(n,k) x^k`
    pub fn as_poly(&self) -> IntPoly {
        IntPoly::new(self.gammas.clone())
    }
}

/// Peels `f` by ascending `t`-degree against `t^k (1+t)^{n-1-2k}`, then
/// divides the k-th coefficient by `(-2)^k`.
pub fn gamma_expand(f: &IntPoly, n: usize) -> Result<GammaVector> {
    let not_palindromic = || Error::NotPalindromic {
        center: format!("{}/2", n.saturating_sub(1)),
    };
    if n == 0 {
        return Err(Error::InvalidArgument("gamma_expand needs n >= 1".into()));
    }
    let top = n - 1;
    if f.degree().is_some_and(|d| d > top) {
        return Err(not_palindromic());
    }
    let one_plus_t = IntPoly::from_i64s(&[1, 1]);
    let mut residual = f.clone();
    let mut primed = Vec::new();
    for k in 0..=top / 2 {
        let g = residual.coeff(k);
        if !g.is_zero() {
            let basis = one_plus_t.pow((top - 2 * k) as u32).shift(k);
            residual -= &basis.scale(&g);
        }
        primed.push(g);
    }
    if !residual.is_zero() {
        return Err(not_palindromic());
    }
    let mut gammas = Vec::with_capacity(primed.len());
    let mut pow = BigInt::from(1);
    for (k, g) in primed.into_iter().enumerate() {
        let (q, r) = g.div_rem(&pow);
        if !r.is_zero() {
            return Err(Error::NonIntegralGamma { k });
        }
        gammas.push(q);
        pow *= -2;
    }
    Ok(GammaVector { n, gammas })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn alt_eulerian_four_and_five() {
        let g4 = gamma_expand(&IntPoly::from_i64s(&[5, 7, 7, 5]), 4).unwrap();
        assert_eq!(g4.gammas, ints(&[5, 4]));
        let g5 = gamma_expand(&IntPoly::from_i64s(&[16, 26, 36, 26, 16]), 5).unwrap();
        assert_eq!(g5.gammas, ints(&[16, 19, 4]));
        assert_eq!(g5.reconstruct(), IntPoly::from_i64s(&[16, 26, 36, 26, 16]));
    }

    #[test]
    fn trivial_case() {
        assert_eq!(gamma_expand(&IntPoly::one(), 1).unwrap().gammas, ints(&[1]));
    }

    #[test]
    fn rejects_non_palindromic() {
        assert!(matches!(
            gamma_expand(&IntPoly::from_i64s(&[1, 2, 3]), 3),
            Err(Error::NotPalindromic { .. })
        ));
        assert!(gamma_expand(&IntPoly::from_i64s(&[1, 1, 1, 1]), 3).is_err());
    }

    #[test]
    fn rejects_odd_gamma() {
        // 1 + 3t + t^2 = (1+t)^2 + t : gamma'_1 = 1 is not divisible by -2
        assert_eq!(
            gamma_expand(&IntPoly::from_i64s(&[1, 3, 1]), 3),
            Err(Error::NonIntegralGamma { k: 1 })
        );
    }
}
