//! Cyclotomic factors of `Â_n(1, q)`: the products `G_n` and `Ev_k`,
//! orders of `1 + q^m`, and the combinatorial divisibility criterion.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::check::{ensure, Check, Witness};
use crate::error::{Error, Result};
use crate::oracle::{Oracle, Stat, StatMultiset};
use crate::perm::{altdes_altmaj, Permutation};
use crate::poly::{binomial, is_palindromic, q_pochhammer, BiPolyTQ, IntPoly};
use crate::recurrences::{alt_at_q_powers, euler_numbers, faa_di_bruno_altmaj, quadratic_tq};

/// `Φ_k(q) = (q^k - 1) / prod_{d | k, d < k} Φ_d(q)`, memoized.
pub fn cyclotomic(k: usize) -> IntPoly {
    assert!(k >= 1, "cyclotomic index must be positive");
    static CACHE: OnceLock<Mutex<BTreeMap<usize, IntPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(p) = cache.lock().expect("cyclotomic cache poisoned").get(&k) {
        return p.clone();
    }
    let proper: IntPoly = (1..k).filter(|d| k % d == 0).map(cyclotomic).product();
    let mut x_k_minus_one = IntPoly::monomial(1, k);
    x_k_minus_one -= &IntPoly::one();
    let p = x_k_minus_one
        .exact_div(&proper)
        .expect("x^k - 1 is the product of its cyclotomic factors");
    cache
        .lock()
        .expect("cyclotomic cache poisoned")
        .insert(k, p.clone());
    p
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    /// Products of binomials `1 + q^i`.
    Product,
    /// Products of cyclotomic polynomials `Φ_{2m}`.
    Cyclotomic,
}

/// `G_n = prod_{k >= 1} prod_{i=1}^{⌊n/2^k⌋} (1 + q^i) = prod_m Φ_{2m}^{⌊n/2m⌋}`.
pub fn build_gn(n: usize, how: Construction) -> IntPoly {
    match how {
        Construction::Product => {
            let mut out = IntPoly::one();
            let mut top = n / 2;
            while top >= 1 {
                for i in 1..=top {
                    out = &out * &IntPoly::one_plus(1, i);
                }
                top /= 2;
            }
            out
        }
        Construction::Cyclotomic => (1..=n / 2)
            .map(|m| cyclotomic(2 * m).pow((n / (2 * m)) as u32))
            .product(),
    }
}

/// `Ev_k = prod_{j=0}^{l} (1 + q^{2^j m})` for `k = 2^l m` with `m` odd,
/// or `prod_{d | k} Φ_{2d}`.
pub fn build_ev(k: usize, how: Construction) -> IntPoly {
    assert!(k >= 1, "Ev index must be positive");
    match how {
        Construction::Product => {
            let l = k.trailing_zeros();
            let m = k >> l;
            (0..=l).map(|j| IntPoly::one_plus(1, m << j)).product()
        }
        Construction::Cyclotomic => (1..=k)
            .filter(|d| k % d == 0)
            .map(|d| cyclotomic(2 * d))
            .product(),
    }
}

/// Whether `1 + q^m` divides `1 + q^n`, decided by polynomial division.
pub fn one_plus_divides(m: usize, n: usize) -> bool {
    IntPoly::one_plus(1, m).divides(&IntPoly::one_plus(1, n))
}

/// The arithmetic side of the same question: `n / m` is an odd integer.
pub fn odd_quotient(m: usize, n: usize) -> bool {
    m > 0 && n % m == 0 && (n / m) % 2 == 1
}

/// Largest `r` with `(1 + q^m)^r` dividing `f`.
pub fn order_of_factor(f: &IntPoly, m: usize) -> usize {
    assert!(!f.is_zero(), "order of a factor in the zero polynomial");
    let factor = IntPoly::one_plus(1, m);
    let mut rest = f.clone();
    let mut r = 0;
    while let Ok(q) = rest.exact_div(&factor) {
        rest = q;
        r += 1;
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AltSource {
    FaaDiBruno,
    Quadratic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorVerdicts {
    pub e_hat_palindromic: bool,
    pub constant_term_is_euler: bool,
}

/// `Â_n(1, q) = G_n(q) Ê_n(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub n: usize,
    pub g_n: IntPoly,
    pub e_hat: IntPoly,
    pub verdicts: FactorVerdicts,
}

pub fn alt_at_t_one(n: usize, source: AltSource) -> Result<IntPoly> {
    match source {
        AltSource::FaaDiBruno => faa_di_bruno_altmaj(n),
        AltSource::Quadratic => Ok(quadratic_tq(n)?.at_t_one()),
    }
}

pub fn extract_ehat(n: usize, source: AltSource) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::InvalidArgument("extract_ehat needs n >= 2".into()));
    }
    factor_alt(n, &alt_at_t_one(n, source)?)
}

/// Divides a given `Â_n(1, q)` by `G_n`.
pub fn factor_alt(n: usize, alt: &IntPoly) -> Result<Factorization> {
    let g_n = build_gn(n, Construction::Product);
    let e_hat = alt
        .exact_div(&g_n)
        .map_err(|_| Error::NotDivisible(format!("G_{n} does not divide Â_{n}(1, q)")))?;
    let euler = euler_numbers(n);
    let verdicts = FactorVerdicts {
        e_hat_palindromic: is_palindromic(e_hat.coeffs()),
        constant_term_is_euler: e_hat.coeff(0) == euler[n],
    };
    Ok(Factorization {
        n,
        g_n,
        e_hat,
        verdicts,
    })
}

/// `(1 + q^m)^{⌊n/2m⌋}` divides `alt = Â_n(1, q)` for every `1 <= m <= ⌊n/2⌋`.
pub fn check_thm42_on(n: usize, alt: &IntPoly) -> Check {
    for m in 1..=n / 2 {
        let order = order_of_factor(alt, m);
        let need = n / (2 * m);
        ensure(order >= need, || {
            format!("n = {n}, m = {m}: order of 1+q^{m} is {order} < {need}")
        })?;
    }
    Ok(())
}

pub fn check_thm42(n: usize) -> Result<Check> {
    Ok(check_thm42_on(n, &faa_di_bruno_altmaj(n)?))
}

/// `order_of_factor((q;q)_n, m) = ⌊n/2m⌋` for `1 <= m <= n`.
pub fn check_pochhammer_orders(n: usize) -> Check {
    let poch = q_pochhammer(n);
    for m in 1..=n.max(1) {
        let order = order_of_factor(&poch, m);
        let expect = n / (2 * m);
        ensure(order == expect, || {
            format!("(q;q)_{n}, m = {m}: order {order} != {expect}")
        })?;
    }
    Ok(())
}

/// Both constructions of `G_n` agree, and `G_{2k} = G_{2k+1} = prod_{i<=k} Ev_i`.
pub fn check_gn_ev(n: usize) -> Check {
    let g = build_gn(n, Construction::Product);
    ensure(g == build_gn(n, Construction::Cyclotomic), || {
        format!("G_{n}: product and cyclotomic forms differ")
    })?;
    if n >= 1 {
        ensure(
            build_ev(n, Construction::Product) == build_ev(n, Construction::Cyclotomic),
            || format!("Ev_{n}: product and cyclotomic forms differ"),
        )?;
    }
    let evs: IntPoly = (1..=n / 2)
        .map(|k| build_ev(k, Construction::Product))
        .product();
    ensure(g == evs, || {
        format!("G_{n} != prod_{{k <= {}}} Ev_k", n / 2)
    })
}

/// The (1+q)-order that `Â_n(q^j, q)` must reach.
pub fn q_power_order_bound(n: usize, j: usize) -> usize {
    if n % 2 == 0 && j % 2 == 1 {
        (n - 1) / 2
    } else {
        n / 2
    }
}

fn q_power_rows_check(rows: &[Vec<IntPoly>], max_n: usize, max_j: usize) -> Check {
    for (n, row) in rows.iter().enumerate().take(max_n + 1).skip(1) {
        for (j, f) in row.iter().enumerate().take(max_j + 1) {
            let need = q_power_order_bound(n, j);
            let order = order_of_factor(f, 1);
            ensure(order >= need, || {
                format!("Â_{n}(q^{j}, q): (1+q)-order {order} < {need}")
            })?;
        }
    }
    Ok(())
}

/// The `(1+q)`-divisibility of `Â_n(q^j, q)`, specializing the bivariate table.
pub fn check_q_power_divisibility(table: &[BiPolyTQ], max_n: usize, max_j: usize) -> Check {
    let rows: Vec<Vec<IntPoly>> = table
        .iter()
        .map(|a| (0..=max_j).map(|j| a.at_t_power(j)).collect())
        .collect();
    q_power_rows_check(&rows, max_n, max_j)
}

/// The same table from the recursion specialized at `t = q^j`, which must
/// also agree with the bivariate table.
pub fn check_q_power_recursion(table: &[BiPolyTQ], max_n: usize, max_j: usize) -> Result<Check> {
    let rows = alt_at_q_powers(max_n, max_j)?;
    for n in 1..=max_n {
        for j in 0..=max_j {
            if rows[n][j] != table[n].at_t_power(j) {
                return Ok(Err(Witness(format!(
                    "Â_{n}(q^{j}, q): specialized recursion disagrees with substitution"
                ))));
            }
        }
    }
    Ok(q_power_rows_check(&rows, max_n, max_j))
}

/// For every `l` mod `m` and `0 <= j < r`, the sums of `C(st(x), j)` over
/// `st(x) ≡ l` and `st(x) ≡ l + m (mod 2m)` agree.
pub fn binomial_criterion(ms: &StatMultiset, m: usize, r: usize) -> Check {
    for l in 0..m {
        for j in 0..r {
            let mut sums = [BigInt::zero(), BigInt::zero()];
            for (&v, &count) in &ms.values {
                let class = v % (2 * m);
                let side = if class == l {
                    0
                } else if class == l + m {
                    1
                } else {
                    continue;
                };
                sums[side] += binomial(v as u64, j as u64) * count;
            }
            ensure(sums[0] == sums[1], || {
                format!("m = {m}, l = {l}, j = {j}: {} != {}", sums[0], sums[1])
            })?;
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionRow {
    pub m: usize,
    pub r: usize,
    /// `Err` carries the first unbalanced `(l, j)`.
    pub criterion: Check,
    pub order: usize,
}

impl CriterionRow {
    /// The criterion holding forces `(1 + q^m)^r` to divide.
    pub fn sound(&self) -> bool {
        self.criterion.is_err() || self.order >= self.r
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub n: usize,
    pub rows: Vec<CriterionRow>,
}

impl CriterionReport {
    pub fn outcome(&self) -> Check {
        for row in &self.rows {
            row.criterion
                .clone()
                .map_err(|w| Witness(format!("n = {}: {w}", self.n)))?;
            ensure(row.sound(), || {
                format!(
                    "n = {}, m = {}: criterion holds but order {} < {}",
                    self.n, row.m, row.order, row.r
                )
            })?;
        }
        Ok(())
    }
}

/// Runs the binomial criterion with `r = ⌊n/2m⌋` on the altmaj multiset of
/// `S_n` for every `1 <= m <= ⌊n/2⌋`.
pub fn verify_conj410(n: usize, oracle: &Oracle) -> Result<CriterionReport> {
    let ms = oracle.stat_multiset(n, Stat::AltMaj)?;
    let f = ms.generating_poly();
    let rows = (1..=n / 2)
        .into_par_iter()
        .map(|m| {
            let r = n / (2 * m);
            CriterionRow {
                m,
                r,
                criterion: binomial_criterion(&ms, m, r),
                order: order_of_factor(&f, m),
            }
        })
        .collect();
    Ok(CriterionReport { n, rows })
}

/// Reversing the first `2m` letters is an involution on `S_n` that shifts
/// altmaj by `m` modulo `2m`.
pub fn thm411_bijection_check(n: usize, m: usize, oracle: &Oracle) -> Result<Check> {
    if m == 0 || 2 * m > n {
        return Err(Error::PrefixTooLong { m, n });
    }
    let bad = oracle.find_violation(n, |w| {
        let pi = Permutation::new(w.to_vec()).expect("enumerated words are permutations");
        let image = pi.reverse_prefix(m).expect("2m <= n");
        let before = altdes_altmaj(w).1;
        let after = altdes_altmaj(image.word()).1;
        let back = image.reverse_prefix(m).expect("2m <= n");
        back == pi && (after + 2 * m - before % (2 * m)) % (2 * m) == m
    })?;
    Ok(match bad {
        None => Ok(()),
        Some(w) => Err(Witness(format!(
            "n = {n}, m = {m}: reversing the prefix of {} breaks the shift",
            Permutation::new(w).map_or_else(|_| "?".into(), |p| p.to_string())
        ))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(&cyclotomic(2) * &cyclotomic(6), p(&[1, 0, 0, 1]));
    }

    #[test]
    fn gn_examples() {
        assert!(build_gn(1, Construction::Product).is_one());
        let g4 = &p(&[1, 1]).pow(2) * &p(&[1, 0, 1]);
        assert_eq!(build_gn(4, Construction::Product), g4);
        assert_eq!(build_gn(4, Construction::Cyclotomic), g4);
        let g8 = [
            p(&[1, 1]).pow(3),
            p(&[1, 0, 1]).pow(2),
            IntPoly::one_plus(1, 3),
            IntPoly::one_plus(1, 4),
        ]
        .into_iter()
        .product::<IntPoly>();
        assert_eq!(build_gn(8, Construction::Cyclotomic), g8);
        for n in 1..=8 {
            assert_eq!(
                build_gn(2 * n, Construction::Product),
                build_gn(2 * n + 1, Construction::Product)
            );
        }
    }

    #[test]
    fn ev_examples() {
        assert_eq!(build_ev(1, Construction::Product), p(&[1, 1]));
        assert_eq!(
            build_ev(2, Construction::Cyclotomic),
            &p(&[1, 1]) * &p(&[1, 0, 1])
        );
        assert_eq!(build_ev(3, Construction::Cyclotomic), p(&[1, 0, 0, 1]));
        for n in 0..=12 {
            assert_eq!(check_gn_ev(n), Ok(()));
        }
    }

    #[test]
    fn orders() {
        assert_eq!(order_of_factor(&q_pochhammer(4), 1), 2);
        assert_eq!(order_of_factor(&q_pochhammer(9), 2), 2);
        assert_eq!(order_of_factor(&IntPoly::one(), 5), 0);
    }

    #[test]
    fn divisibility_of_binomials() {
        for m in 1..=12 {
            for n in 1..=12 {
                assert_eq!(
                    one_plus_divides(m, n),
                    odd_quotient(m, n),
                    "m = {m}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn ehat_examples() {
        let f3 = extract_ehat(3, AltSource::FaaDiBruno).unwrap();
        assert_eq!(f3.e_hat, p(&[2, -1, 2]));
        let f6 = extract_ehat(6, AltSource::Quadratic).unwrap();
        assert_eq!(f6.e_hat, p(&[61, -87, 66, -82, 129, -82, 66, -87, 61]));
        let f8 = extract_ehat(8, AltSource::FaaDiBruno).unwrap();
        assert_eq!(f8.e_hat.coeff(0), BigInt::from(1385));
        assert!(f8.verdicts.e_hat_palindromic && f8.verdicts.constant_term_is_euler);
    }

    #[test]
    fn thm42_small() {
        for n in 2..=8 {
            assert_eq!(check_thm42(n).unwrap(), Ok(()));
        }
        assert_eq!(order_of_factor(&faa_di_bruno_altmaj(2).unwrap(), 1), 1);
    }

    #[test]
    fn criterion_examples() {
        let oracle = Oracle::default();
        let s4 = oracle.stat_multiset(4, Stat::AltMaj).unwrap();
        assert_eq!(binomial_criterion(&s4, 1, 2), Ok(()));
        let s2 = oracle.stat_multiset(2, Stat::AltMaj).unwrap();
        assert_eq!(binomial_criterion(&s2, 1, 1), Ok(()));
        let lopsided = StatMultiset::from_counts(1, &[2]);
        assert!(binomial_criterion(&lopsided, 1, 1).is_err());
    }

    #[test]
    fn conj410_small() {
        let oracle = Oracle::default();
        for n in 2..=7 {
            let report = verify_conj410(n, &oracle).unwrap();
            assert_eq!(report.outcome(), Ok(()), "n = {n}");
        }
    }

    #[test]
    fn bijection_small() {
        let oracle = Oracle::default();
        assert_eq!(thm411_bijection_check(2, 1, &oracle).unwrap(), Ok(()));
        for m in 1..=3 {
            assert_eq!(thm411_bijection_check(7, m, &oracle).unwrap(), Ok(()));
        }
        assert!(thm411_bijection_check(3, 2, &oracle).is_err());
    }

    #[test]
    fn q_power_small() {
        let table = crate::recurrences::quadratic_tq_table(8).unwrap();
        assert_eq!(check_q_power_divisibility(&table, 8, 4), Ok(()));
        assert_eq!(check_q_power_recursion(&table, 8, 4).unwrap(), Ok(()));
    }
}
