//! The three gamma expansions of the alternating Eulerian family, the Simsun
//! relation and the cd-index transform.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::check::{ensure, Check, Witness};
use crate::divisibility::order_of_factor;
use crate::error::{Error, Result};
use crate::oracle::{CdIndex, Oracle};
use crate::perm::{is_down_up, is_simsun};
use crate::poly::{one_plus_tq, BiPolyTQ, IntPoly, NCPoly};
use crate::recurrences::{gamma_rec, simsun_rec, SimsunMethod};

/// `a_n(x) = R_{n-1}(x + 1)`.
pub fn simsun_relation_check(n: usize) -> Result<Check> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "simsun_relation_check needs n >= 1".into(),
        ));
    }
    let a = gamma_rec(n);
    let shifted = simsun_rec(n - 1, SimsunMethod::Derivative).taylor_shift(1);
    Ok(ensure(a == shifted, || {
        format!(
            "n = {n}: a_n = {a} but R_(n-1)(x+1) = {shifted}",
            a = a.display('x'),
            shifted = shifted.display('x')
        )
    }))
}

fn c() -> NCPoly {
    NCPoly::letter(0)
}

fn d() -> NCPoly {
    NCPoly::letter(1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdTransform {
    /// `Φ̂ = Φ(c, c² - d)`
    pub phi_hat: NCPoly,
    /// `Φ̂(1 + t, 2t)`
    pub alt_poly: IntPoly,
}

pub fn cd_transform(phi: &NCPoly) -> CdTransform {
    let phi_hat = phi.substitute(&[c(), &(&c() * &c()) + &d().scale(&-BigInt::one())]);
    let alt_poly =
        phi_hat.eval_commutative([&IntPoly::from_i64s(&[1, 1]), &IntPoly::from_i64s(&[0, 2])]);
    CdTransform { phi_hat, alt_poly }
}

/// `Φ(a + b, ab + ba)`, a polynomial in the letters a = 0, b = 1.
pub fn ab_substitute(phi: &NCPoly) -> NCPoly {
    let a = NCPoly::letter(0);
    let b = NCPoly::letter(1);
    phi.substitute(&[&a + &b, &(&a * &b) + &(&b * &a)])
}

/// `Φ(1, 1 + x)`, whose coefficients are `a(n, k)`.
pub fn gamma_from_cd(phi: &NCPoly) -> IntPoly {
    phi.eval_commutative([&IntPoly::one(), &IntPoly::from_i64s(&[1, 1])])
}

/// `Φ̂(1, -x)`, the same polynomial read off the transformed index.
pub fn gamma_from_cd_hat(phi_hat: &NCPoly) -> IntPoly {
    phi_hat.eval_commutative([&IntPoly::one(), &IntPoly::from_i64s(&[0, -1])])
}

/// Checks the three ab-index identities and the two specializations of `Φ̂_n`
/// against an enumerated cd-index.
pub fn cd_index_check(n: usize, cd: &CdIndex, alt: &IntPoly) -> Check {
    let transform = cd_transform(&cd.phi);
    ensure(ab_substitute(&cd.phi) == cd.psi, || {
        format!("n = {n}: Ψ_n != Φ_n(a+b, ab+ba)")
    })?;
    ensure(ab_substitute(&transform.phi_hat) == cd.psi_hat, || {
        format!("n = {n}: Ψ̂_n != Φ̂_n(a+b, ab+ba)")
    })?;
    ensure(&transform.alt_poly == alt, || {
        format!(
            "n = {n}: Φ̂_n(1+t, 2t) = {} != Â_n(t)",
            transform.alt_poly.display('t')
        )
    })?;
    let gammas = gamma_rec(n);
    ensure(gamma_from_cd(&cd.phi) == gammas, || {
        format!("n = {n}: Φ_n(1, 1+x) != a_n(x)")
    })?;
    ensure(gamma_from_cd_hat(&transform.phi_hat) == gammas, || {
        format!("n = {n}: Φ̂_n(1, -x) != a_n(x)")
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QGammaVerdict {
    pub nonnegative: bool,
    /// `None` for the zero polynomial.
    pub one_plus_q_order: Option<usize>,
}

impl QGammaVerdict {
    pub fn divisible(&self, k: usize) -> bool {
        self.one_plus_q_order.is_none_or(|r| r >= k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QGammaVector {
    pub n: usize,
    pub gammas: Vec<IntPoly>,
    pub verdicts: Vec<QGammaVerdict>,
}

fn triangular(k: usize) -> usize {
    k * (k + 1) / 2
}

/// `q^{C(k+1,2)} (-t)^k prod_{i=k+1}^{n-1-k} (1 + t q^i)`
fn q_basis(n: usize, k: usize) -> BiPolyTQ {
    let mut out = BiPolyTQ::monomial(if k % 2 == 0 { 1 } else { -1 }, k, triangular(k));
    for i in k + 1..n - k {
        out = &out * &one_plus_tq(1, i);
    }
    out
}

impl QGammaVector {
    pub fn reconstruct(&self) -> BiPolyTQ {
        let mut out = BiPolyTQ::zero();
        for (k, g) in self.gammas.iter().enumerate() {
            out += &(&BiPolyTQ::from_q_poly(g, 0) * &q_basis(self.n, k));
        }
        out
    }

    /// Every `γ̂_{n,k}` has nonnegative coefficients and `(1+q)^k` as a divisor.
    pub fn verdict(&self) -> Check {
        for (k, v) in self.verdicts.iter().enumerate() {
            ensure(v.nonnegative, || {
                format!(
                    "n = {}: γ̂_{k} = {} has a negative coefficient",
                    self.n,
                    self.gammas[k].display('q')
                )
            })?;
            ensure(v.divisible(k), || {
                format!(
                    "n = {}: γ̂_{k} has (1+q)-order {:?} < {k}",
                    self.n, v.one_plus_q_order
                )
            })?;
        }
        Ok(())
    }
}

/// Expands `P = Â_n(t, q)` as `sum_k γ̂_{n,k}(q) q^{C(k+1,2)} (-t)^k prod_{i=k+1}^{n-1-k} (1 + t q^i)`
/// by peeling the lowest `t`-degree.
pub fn q_gamma_extract(p: &BiPolyTQ, n: usize) -> Result<QGammaVector> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "q_gamma_extract needs n >= 1".into(),
        ));
    }
    let mut residual = p.clone();
    let mut gammas = Vec::new();
    for k in 0..=(n - 1) / 2 {
        if let Some(((low, _), _)) = residual.terms().next().map(|(e, c)| (*e, c)) {
            if low < k {
                return Err(Error::ExpansionFailed(format!(
                    "n = {n}: t^{low} survives into step {k}"
                )));
            }
        }
        let lowest = residual.t_coeff(k);
        let shift = triangular(k);
        if lowest.low_degree().is_some_and(|d| d < shift) {
            return Err(Error::ExpansionFailed(format!(
                "n = {n}, k = {k}: t^{k} part is not divisible by q^{shift}"
            )));
        }
        let mut g = IntPoly::new(lowest.coeffs().iter().skip(shift).cloned().collect());
        if k % 2 == 1 {
            g = -g;
        }
        residual -= &(&BiPolyTQ::from_q_poly(&g, 0) * &q_basis(n, k));
        gammas.push(g);
    }
    if !residual.is_empty() {
        return Err(Error::ExpansionFailed(format!(
            "n = {n}: residual {residual} after the last step"
        )));
    }
    let verdicts = gammas
        .iter()
        .map(|g| QGammaVerdict {
            nonnegative: g.is_nonnegative(),
            one_plus_q_order: (!g.is_zero()).then(|| order_of_factor(g, 1)),
        })
        .collect();
    Ok(QGammaVector {
        n,
        gammas,
        verdicts,
    })
}

/// `Ã_n(s, t) = sum γ̂_{n,i,j} (-st)^i (1 + st)^j (s + t)^{n-1-j-2i}`;
/// zero entries are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSidedGamma {
    pub n: usize,
    pub entries: BTreeMap<(usize, usize), BigInt>,
}

/// `(-st)^i (1 + st)^j (s + t)^r` with `s` in the first slot.
fn two_sided_basis(i: usize, j: usize, r: usize) -> BiPolyTQ {
    let sign = if i % 2 == 0 { 1 } else { -1 };
    let mut out = BiPolyTQ::monomial(sign, i, i);
    for _ in 0..j {
        out = &out * &one_plus_tq(1, 1);
    }
    let s_plus_t = &BiPolyTQ::monomial(1, 1, 0) + &BiPolyTQ::monomial(1, 0, 1);
    for _ in 0..r {
        out = &out * &s_plus_t;
    }
    out
}

impl TwoSidedGamma {
    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn reconstruct(&self) -> BiPolyTQ {
        let mut out = BiPolyTQ::zero();
        for (&(i, j), g) in &self.entries {
            let r = self.n - 1 - j - 2 * i;
            out += &two_sided_basis(i, j, r).scale(g);
        }
        out
    }

    pub fn verdict(&self) -> Check {
        match self.entries.iter().find(|(_, g)| g.is_negative()) {
            None => Ok(()),
            Some((&(i, j), g)) => Err(Witness(format!("n = {}: γ̂_({i},{j}) = {g}", self.n))),
        }
    }
}

/// Rewrites a symmetric `A(s, t)` as `sum c_{r,b} p^r e^b` with `p = s + t`,
/// `e = st`, keyed by `(r, b)`.
fn symmetric_reduce(a: &BiPolyTQ) -> Result<BTreeMap<(usize, usize), BigInt>> {
    let mut residual = a.clone();
    let mut out = BTreeMap::new();
    while let Some(((hi, lo), c)) = residual.leading_term().map(|(e, c)| (e, c.clone())) {
        if hi < lo {
            return Err(Error::ExpansionFailed(format!(
                "non-symmetric remainder with leading term s^{hi} t^{lo}"
            )));
        }
        residual -= &two_sided_basis(0, 0, hi - lo).shift(lo, lo).scale(&c);
        out.insert((hi - lo, lo), c);
    }
    Ok(out)
}

pub fn two_sided_extract(a: &BiPolyTQ, n: usize) -> Result<TwoSidedGamma> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "two_sided_extract needs n >= 1".into(),
        ));
    }
    if a != &a.swap_slots() {
        return Err(Error::ExpansionFailed(format!(
            "n = {n}: input is not symmetric"
        )));
    }
    let pe = symmetric_reduce(a)?;
    let mut by_p: BTreeMap<usize, Vec<BigInt>> = BTreeMap::new();
    for (&(r, b), c) in &pe {
        let row = by_p.entry(r).or_default();
        if row.len() <= b {
            row.resize(b + 1, BigInt::zero());
        }
        row[b] = c.clone();
    }
    let mut entries = BTreeMap::new();
    for (r, coeffs) in by_p {
        if r > n - 1 {
            return Err(Error::ExpansionFailed(format!(
                "n = {n}: (s+t)^{r} exceeds degree {}",
                n - 1
            )));
        }
        let m = n - 1 - r;
        let mut residual = IntPoly::new(coeffs);
        for i in 0..=m / 2 {
            let low = residual.coeff(i);
            if low.is_zero() {
                continue;
            }
            residual -= &IntPoly::from_i64s(&[1, 1])
                .pow((m - 2 * i) as u32)
                .shift(i)
                .scale(&low);
            entries.insert((i, m - 2 * i), if i % 2 == 0 { low } else { -low });
        }
        if !residual.is_zero() {
            return Err(Error::ExpansionFailed(format!(
                "n = {n}: residual {} in the (s+t)^{r} part",
                residual.display('e')
            )));
        }
    }
    Ok(TwoSidedGamma { n, entries })
}

/// Down-up Simsun permutations of length `n2`.
pub fn down_up_simsun_count(n2: usize, oracle: &Oracle) -> Result<u64> {
    if n2 % 2 == 1 {
        return Err(Error::InvalidArgument(format!("length {n2} is odd")));
    }
    oracle.count_where(n2, |w| is_down_up(w) && is_simsun(w))
}
