//! Fast exact computation of the alternating Eulerian family by recurrence,
//! plus two generating-function cross-checks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::check::{ensure, Check, Witness};
use crate::error::{Error, Result};
use crate::poly::{binomial, one_plus_tq, q_pochhammer, BiPolyTQ, IntPoly, RatPoly, TruncSeries};

/// Zigzag numbers `E_0..=E_n` (`sec z + tan z = sum E_m z^m / m!`), by the
/// Seidel–Entringer boustrophedon.
pub fn euler_numbers(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            next[k] = &next[k - 1] + &row[m - k];
        }
        out.push(next[m].clone());
        row = next;
    }
    out
}

/// `Â_0 ..= Â_max_n` by the five-term recurrence, with `Â_0 = 1`.
pub fn five_term_table(max_n: usize) -> Result<Vec<IntPoly>> {
    let mut table = vec![IntPoly::one()];
    if max_n == 0 {
        return Ok(table);
    }
    table.push(IntPoly::one());
    let two = BigInt::from(2);
    for n in 1..max_n {
        let a = &table[n];
        let at = |k: isize| -> BigInt {
            if k < 0 {
                BigInt::zero()
            } else {
                a.coeff(k as usize)
            }
        };
        let mut next = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let ki = k as isize;
            let doubled = BigInt::from(k + 1) * (at(ki + 1) + at(ki - 1))
                + BigInt::from(n - k + 1) * (at(ki) + at(ki - 2));
            if !(&doubled % &two).is_zero() {
                return Err(Error::ParityViolation { n: n + 1, k });
            }
            next.push(doubled / &two);
        }
        table.push(IntPoly::new(next));
    }
    Ok(table)
}

/// `Â_n(t)`.
pub fn five_term(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("five_term needs n >= 1".into()));
    }
    Ok(five_term_table(n)?.pop().expect("table is nonempty"))
}

/// Checks the convolution identity
/// `sum_i sum_j C(n,i) Â_{i,j} Â_{n-i,k-j} = (n+1-k) Â_{n,k} + (k+1) Â_{n,k+1}`
/// for every `0 <= k <= n-1`, with `Â_0 = 1` and out-of-range entries zero.
pub fn chebikin_check_with(table: &[IntPoly], n: usize) -> Check {
    for k in 0..n {
        let mut lhs = BigInt::zero();
        for i in 0..=n {
            let c = binomial(n as u64, i as u64);
            for j in 0..=k {
                let a = table[i].coeff(j);
                if a.is_zero() {
                    continue;
                }
                lhs += &c * a * table[n - i].coeff(k - j);
            }
        }
        let rhs = BigInt::from(n + 1 - k) * table[n].coeff(k)
            + BigInt::from(k + 1) * table[n].coeff(k + 1);
        ensure(lhs == rhs, || {
            format!("n = {n}, k = {k}: lhs {lhs} != rhs {rhs}")
        })?;
    }
    Ok(())
}

pub fn chebikin_check(n: usize) -> Result<Check> {
    let table = five_term_table(n)?;
    Ok(chebikin_check_with(&table, n))
}

/// `Â_1(t,q) ..= Â_max_n(t,q)` by the quadratic recursion; index 0 holds 1.
pub fn quadratic_tq_table(max_n: usize) -> Result<Vec<BiPolyTQ>> {
    let mut table = vec![BiPolyTQ::one()];
    if max_n == 0 {
        return Ok(table);
    }
    table.push(BiPolyTQ::one());
    for n in 1..max_n {
        let a_n = &table[n];
        let mut doubled =
            &(&one_plus_tq(1, 1) * &a_n.substitute_tq(1)) + &(&one_plus_tq(1, n) * a_n);
        let convolution = (1..n)
            .into_par_iter()
            .map(|i| {
                let right = table[n - i].substitute_tq(i + 1);
                let prod = &table[i] * &right;
                (&one_plus_tq(2, 2 * i + 1) * &prod).scale(&binomial(n as u64, i as u64))
            })
            .reduce(BiPolyTQ::zero, |a, b| &a + &b);
        doubled += &convolution;
        let next = doubled
            .halve()
            .map_err(|(k, _)| Error::ParityViolation { n: n + 1, k })?;
        table.push(next);
    }
    Ok(table)
}

/// `Â_n(t, q)`.
pub fn quadratic_tq(n: usize) -> Result<BiPolyTQ> {
    if n == 0 {
        return Err(Error::InvalidArgument("quadratic_tq needs n >= 1".into()));
    }
    Ok(quadratic_tq_table(n)?.pop().expect("table is nonempty"))
}

/// `Â_n(q^j, q)` for `1 <= n <= max_n`, `0 <= j <= max_j`, computed by the
/// quadratic recursion specialized at `t = q^j`. `out[n][j]`; row 0 is empty.
pub fn alt_at_q_powers(max_n: usize, max_j: usize) -> Result<Vec<Vec<IntPoly>>> {
    // U(n+1, j) needs U(n, j+1) and U(n-i, i+j+1): the sum n + j never grows,
    // so row n needs j up to max_j + max_n - n.
    let width = |n: usize| max_j + max_n - n;
    let mut rows: Vec<Vec<IntPoly>> = vec![Vec::new()];
    if max_n == 0 {
        return Ok(rows);
    }
    rows.push(vec![IntPoly::one(); width(1) + 1]);
    let two = BigInt::from(2);
    for n in 1..max_n {
        let mut next = Vec::with_capacity(width(n + 1) + 1);
        for j in 0..=width(n + 1) {
            let mut acc = &IntPoly::one_plus(1, j + 1) * &rows[n][j + 1];
            acc += &(&IntPoly::one_plus(1, n + j) * &rows[n][j]);
            for i in 1..n {
                let term = &(&rows[i][j] * &rows[n - i][i + j + 1])
                    * &IntPoly::one_plus(1, 2 * (i + j) + 1);
                acc += &term.scale(&binomial(n as u64, i as u64));
            }
            let halved = acc
                .div_scalar(&two)
                .map_err(|_| Error::ParityViolation { n: n + 1, k: j })?;
            next.push(halved);
        }
        rows.push(next);
    }
    for (n, row) in rows.iter_mut().enumerate().skip(1) {
        row.truncate(max_j + 1);
        debug_assert_eq!(row.len(), max_j + 1, "row {n}");
    }
    Ok(rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimsunMethod {
    /// `R_n = ((n-1)x + 1) R_{n-1} + x(1-2x) R'_{n-1}`
    Derivative,
    /// `R_{n+1} = R_n + x sum_{i=1}^n C(n,i) R_{i-1} R_{n-i}`
    Quadratic,
}

/// `R_0 ..= R_max_n`.
pub fn simsun_table(max_n: usize, method: SimsunMethod) -> Vec<IntPoly> {
    let mut table = vec![IntPoly::one()];
    let x = IntPoly::monomial(1, 1);
    for n in 1..=max_n {
        let next = match method {
            SimsunMethod::Derivative => {
                let prev = &table[n - 1];
                let lin = IntPoly::from_i64s(&[1, n as i64 - 1]);
                let quad = IntPoly::from_i64s(&[0, 1, -2]);
                &(&lin * prev) + &(&quad * &prev.derivative())
            }
            SimsunMethod::Quadratic => {
                let m = n - 1;
                let conv: IntPoly = (1..=m)
                    .map(|i| (&table[i - 1] * &table[m - i]).scale(&binomial(m as u64, i as u64)))
                    .sum();
                &table[m] + &(&x * &conv)
            }
        };
        table.push(next);
    }
    table
}

/// `R_n(x)`, the descent polynomial of Simsun permutations of length `n`.
pub fn simsun_rec(n: usize, method: SimsunMethod) -> IntPoly {
    simsun_table(n, method).pop().expect("table is nonempty")
}

/// `a_1 ..= a_max_n` via `a_{n+1} = (n + (n-1)x) a_n - (1+x)(1+2x) a_n'`; index 0 holds 1.
pub fn gamma_rec_table(max_n: usize) -> Vec<IntPoly> {
    let mut table = vec![IntPoly::one()];
    if max_n == 0 {
        return table;
    }
    table.push(IntPoly::one());
    let damp = IntPoly::from_i64s(&[1, 3, 2]);
    for n in 1..max_n {
        let a = &table[n];
        let lin = IntPoly::from_i64s(&[n as i64, n as i64 - 1]);
        let next = &(&lin * a) - &(&damp * &a.derivative());
        table.push(next);
    }
    table
}

/// `a_n(x) = sum_k a(n,k) x^k`.
pub fn gamma_rec(n: usize) -> IntPoly {
    gamma_rec_table(n).pop().expect("table is nonempty")
}

/// Compares `1 + sum_{n>=1} t Â_n(t) z^n/n!` against
/// `(1-t) / (1 - t(sec((1-t)z) + tan((1-t)z)))` through `z^order`.
pub fn egf_check(order: usize) -> Result<Check> {
    let euler = euler_numbers(order);
    let alt = five_term_table(order)?;
    let one_minus_t = IntPoly::from_i64s(&[1, -1]);
    let t = IntPoly::monomial(1, 1);

    let mut factorial = BigInt::one();
    let mut sec_tan = Vec::with_capacity(order + 1);
    for (m, e) in euler.iter().enumerate() {
        if m > 0 {
            factorial *= m;
        }
        sec_tan.push(RatPoly::new(
            one_minus_t.pow(m as u32).scale(e),
            factorial.clone(),
        ));
    }
    let sec_tan = TruncSeries::from_coeffs(order, sec_tan);
    let denominator = &TruncSeries::one(order) - &sec_tan.scale_poly(&t);
    // every coefficient of 1 - tS((1-t)z) carries the factor 1 - t
    let reduced = denominator.exact_div_poly(&one_minus_t)?;
    let rhs = reduced.recip()?;

    let mut factorial = BigInt::one();
    for n in 0..=order {
        let lhs = if n == 0 {
            RatPoly::from_poly(IntPoly::one())
        } else {
            factorial *= n;
            RatPoly::new(&t * &alt[n], factorial.clone())
        };
        if &lhs != rhs.coeff(n) {
            return Ok(Err(Witness(format!(
                "z^{n}: lhs ({})/{} != rhs ({})/{}",
                lhs.numerator().display('t'),
                lhs.denominator(),
                rhs.coeff(n).numerator().display('t'),
                rhs.coeff(n).denominator()
            ))));
        }
    }
    Ok(Ok(()))
}

/// `numerator / prod_k (1 - q^k)^{mult_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFnQ {
    numerator: IntPoly,
    denominator: BTreeMap<usize, u32>,
}

impl RationalFnQ {
    pub fn from_poly(p: IntPoly) -> Self {
        Self {
            numerator: p,
            denominator: BTreeMap::new(),
        }
    }

    /// `c / (1 - q^k)`
    pub fn over_one_minus(c: BigInt, k: usize) -> Self {
        let mut out = Self::from_poly(IntPoly::constant(c));
        if !out.numerator.is_zero() {
            out.denominator.insert(k, 1);
        }
        out
    }

    pub fn zero() -> Self {
        Self::from_poly(IntPoly::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator_exponents(&self) -> &BTreeMap<usize, u32> {
        &self.denominator
    }

    fn factor_poly(mults: &BTreeMap<usize, u32>) -> IntPoly {
        mults
            .iter()
            .map(|(&k, &e)| IntPoly::one_plus(-1, k).pow(e))
            .product()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut denominator = self.denominator.clone();
        for (&k, &e) in &rhs.denominator {
            *denominator.entry(k).or_insert(0) += e;
        }
        Self {
            numerator: &self.numerator * &rhs.numerator,
            denominator,
        }
        .reduced()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let mut common = self.denominator.clone();
        for (&k, &e) in &rhs.denominator {
            let slot = common.entry(k).or_insert(0);
            *slot = (*slot).max(e);
        }
        let lift = |f: &Self| {
            let missing: BTreeMap<usize, u32> = common
                .iter()
                .map(|(&k, &e)| (k, e - f.denominator.get(&k).copied().unwrap_or(0)))
                .filter(|&(_, e)| e > 0)
                .collect();
            &f.numerator * &Self::factor_poly(&missing)
        };
        Self {
            numerator: &lift(self) + &lift(rhs),
            denominator: common,
        }
        .reduced()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            numerator: self.numerator.scale(c),
            denominator: if c.is_zero() {
                BTreeMap::new()
            } else {
                self.denominator.clone()
            },
        }
    }

    /// Cancels whole factors `1 - q^k` that divide the numerator.
    fn reduced(mut self) -> Self {
        if self.numerator.is_zero() {
            self.denominator.clear();
            return self;
        }
        let keys: Vec<usize> = self.denominator.keys().rev().copied().collect();
        for k in keys {
            let factor = IntPoly::one_plus(-1, k);
            while let Some(e) = self.denominator.get_mut(&k) {
                match self.numerator.exact_div(&factor) {
                    Ok(q) => {
                        self.numerator = q;
                        *e -= 1;
                        if *e == 0 {
                            self.denominator.remove(&k);
                        }
                    }
                    Err(_) => break,
                }
            }
        }
        self
    }

    /// `self * p`, which must be a polynomial.
    pub fn times_poly(&self, p: &IntPoly) -> Option<IntPoly> {
        (&self.numerator * p)
            .exact_div(&Self::factor_poly(&self.denominator))
            .ok()
    }
}

/// `F^{(0)}(0) ..= F^{(n)}(0)` for `F(z) = prod_{j>=0} (sec(zq^j) + tan(zq^j))`,
/// from `F' = F·L` with `L^{(r)}(0) = sec^{(r)}(0) / (1 - q^{r+1})`.
pub fn faa_di_bruno_derivatives(n: usize) -> Vec<RationalFnQ> {
    let euler = euler_numbers(n);
    // sec has only even derivatives at 0, and they are the even zigzag numbers
    let log_derivs: Vec<RationalFnQ> = (0..n)
        .map(|r| {
            if r % 2 == 1 {
                RationalFnQ::zero()
            } else {
                RationalFnQ::over_one_minus(euler[r].clone(), r + 1)
            }
        })
        .collect();
    let mut f = vec![RationalFnQ::from_poly(IntPoly::one())];
    for m in 0..n {
        let mut next = RationalFnQ::zero();
        for k in 0..=m {
            let h = &log_derivs[m - k];
            if h.is_zero() || f[k].is_zero() {
                continue;
            }
            next = next.add(&f[k].mul(h).scale(&binomial(m as u64, k as u64)));
        }
        f.push(next);
    }
    f
}

/// `Â_n(1, q) = F^{(n)}(0) (q;q)_n`, independent of any permutation count.
pub fn faa_di_bruno_altmaj(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "faa_di_bruno_altmaj needs n >= 1".into(),
        ));
    }
    let derivs = faa_di_bruno_derivatives(n);
    derivs[n]
        .times_poly(&q_pochhammer(n))
        .ok_or(Error::DenominatorNotCleared { n })
}
