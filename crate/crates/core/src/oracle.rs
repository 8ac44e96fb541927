//! Brute-force generating functions over `S_n`.
//!
//! `S_n` is split by its first two letters; each block is walked in
//! lexicographic order by an in-place successor and blocks run on the rayon
//! pool. Partial results are merged by addition, so the outcome does not
//! depend on scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::check::{Check, Witness};
use crate::error::{Error, Result};
use crate::perm::{
    ab_word_of_mask, alt_descent_mask, altdes_altmaj, cd_word_of_mask, des3, descent_mask,
    inverse_word, is_simsun, mask_sum, next_permutation, CdLetter, InsertKind, Permutation,
};
use crate::poly::{BiPolyTQ, IntPoly, NCPoly};

pub const DEFAULT_BRUTE_MAX: usize = 11;

/// Visits every permutation of `1..=n` that starts with one of `prefixes`,
/// folding into per-block accumulators that are then merged.
pub fn fold_with_prefixes<A, I, V, M>(
    n: usize,
    prefixes: Vec<Vec<u32>>,
    identity: I,
    visit: V,
    merge: M,
) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &[u32]) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    prefixes
        .into_par_iter()
        .map(|prefix| {
            let mut acc = identity();
            let mut word = prefix.clone();
            word.extend((1..=n as u32).filter(|x| !prefix.contains(x)));
            let k = prefix.len();
            loop {
                visit(&mut acc, &word);
                if !next_permutation(&mut word[k..]) {
                    break;
                }
            }
            acc
        })
        .reduce(&identity, &merge)
}

/// Folds over all of `S_n`.
pub fn fold_sn<A, I, V, M>(n: usize, identity: I, visit: V, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &[u32]) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let prefixes: Vec<Vec<u32>> = if n >= 3 {
        (1..=n as u32)
            .flat_map(|a| {
                (1..=n as u32)
                    .filter(move |&b| b != a)
                    .map(move |b| vec![a, b])
            })
            .collect()
    } else {
        vec![Vec::new()]
    };
    fold_with_prefixes(n, prefixes, identity, visit, merge)
}

fn add_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn add_tables(mut a: Vec<Vec<u64>>, b: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    for (x, y) in a.iter_mut().zip(b) {
        for (u, v) in x.iter_mut().zip(y) {
            *u += v;
        }
    }
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stat {
    AltMaj,
    AltDes,
    Maj,
    Des,
    Des3,
}

impl Stat {
    pub fn eval(self, w: &[u32]) -> usize {
        match self {
            Stat::AltMaj => altdes_altmaj(w).1,
            Stat::AltDes => altdes_altmaj(w).0,
            Stat::Maj => mask_sum(descent_mask(w)),
            Stat::Des => descent_mask(w).count_ones() as usize,
            Stat::Des3 => des3(w),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Stat::AltMaj => "altmaj",
            Stat::AltDes => "altdes",
            Stat::Maj => "maj",
            Stat::Des => "des",
            Stat::Des3 => "des3",
        }
    }

    /// Upper bound on the statistic over `S_n`.
    fn bound(self, n: usize) -> usize {
        match self {
            Stat::AltMaj | Stat::Maj => n * n.saturating_sub(1) / 2,
            _ => n,
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "altmaj" => Ok(Stat::AltMaj),
            "altdes" => Ok(Stat::AltDes),
            "maj" => Ok(Stat::Maj),
            "des" => Ok(Stat::Des),
            "des3" => Ok(Stat::Des3),
            _ => Err(Error::InvalidArgument(format!("unknown statistic {s:?}"))),
        }
    }
}

/// Value -> number of permutations taking it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatMultiset {
    pub n: usize,
    pub values: BTreeMap<usize, u64>,
}

impl StatMultiset {
    pub fn from_counts(n: usize, counts: &[u64]) -> Self {
        Self {
            n,
            values: counts
                .iter()
                .enumerate()
                .filter(|(_, c)| **c > 0)
                .map(|(v, c)| (v, *c))
                .collect(),
        }
    }

    pub fn total(&self) -> u64 {
        self.values.values().sum()
    }

    /// `sum_x q^{st(x)}`
    pub fn generating_poly(&self) -> IntPoly {
        let top = self.values.keys().next_back().copied().unwrap_or(0);
        let mut counts = vec![0u64; top + 1];
        for (&v, &c) in &self.values {
            counts[v] = c;
        }
        IntPoly::from_counts(&counts)
    }
}

/// The ab-indices `Ψ_n`, `Ψ̂_n` (letters a = 0, b = 1) and the cd-index
/// `Φ_n` (letters c = 0, d = 1), all by enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdIndex {
    pub phi: NCPoly,
    pub psi: NCPoly,
    pub psi_hat: NCPoly,
}

#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    brute_max: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new(DEFAULT_BRUTE_MAX)
    }
}

impl Oracle {
    pub fn new(brute_max: usize) -> Self {
        Self { brute_max }
    }

    pub fn brute_max(&self) -> usize {
        self.brute_max
    }

    pub fn check_limit(&self, n: usize) -> Result<()> {
        if n > self.brute_max {
            Err(Error::LimitExceeded {
                n,
                max: self.brute_max,
            })
        } else {
            Ok(())
        }
    }

    /// `Â_n(t) = sum t^{altdes}`
    pub fn brute_alt_eulerian(&self, n: usize) -> Result<IntPoly> {
        Ok(self.stat_multiset(n, Stat::AltDes)?.generating_poly())
    }

    /// `Â_n(t, q) = sum t^{altdes} q^{altmaj}`
    pub fn brute_qalt(&self, n: usize) -> Result<BiPolyTQ> {
        self.check_limit(n)?;
        let width = n * n.saturating_sub(1) / 2 + 1;
        let rows = n.max(1);
        let table = fold_sn(
            n,
            || vec![vec![0u64; width]; rows],
            |acc, w| {
                let (d, m) = altdes_altmaj(w);
                acc[d][m] += 1;
            },
            add_tables,
        );
        Ok(BiPolyTQ::from_count_table(&table))
    }

    /// `Ã_n(s, t) = sum s^{altdes(π^{-1})} t^{altdes(π)}`, `s` in the first slot.
    pub fn brute_two_sided(&self, n: usize) -> Result<BiPolyTQ> {
        self.check_limit(n)?;
        let rows = n.max(1);
        let table = fold_sn(
            n,
            || vec![vec![0u64; rows]; rows],
            |acc, w| {
                let inv = inverse_word(w);
                acc[altdes_altmaj(&inv).0][altdes_altmaj(w).0] += 1;
            },
            add_tables,
        );
        Ok(BiPolyTQ::from_count_table(&table))
    }

    /// `R_n(x) = sum over Simsun π of x^{des}`
    pub fn brute_simsun(&self, n: usize) -> Result<IntPoly> {
        self.check_limit(n)?;
        let counts = fold_sn(
            n,
            || vec![0u64; n.max(1)],
            |acc, w| {
                if is_simsun(w) {
                    acc[descent_mask(w).count_ones() as usize] += 1;
                }
            },
            add_counts,
        );
        Ok(IntPoly::from_counts(&counts))
    }

    pub fn brute_cd_index(&self, n: usize) -> Result<CdIndex> {
        self.check_limit(n)?;
        let slots = 1usize << n.saturating_sub(1);
        // [descent mask counts, alt-descent mask counts, SS_n descent mask counts]
        let tables = fold_sn(
            n,
            || vec![vec![0u64; slots]; 3],
            |acc, w| {
                let d = (descent_mask(w) >> 1) as usize;
                acc[0][d] += 1;
                acc[1][(alt_descent_mask(w) >> 1) as usize] += 1;
                if w.last().is_none_or(|&x| x as usize == w.len()) && is_simsun(w) {
                    acc[2][d] += 1;
                }
            },
            add_tables,
        );
        let to_ab = |counts: &[u64]| {
            let mut p = NCPoly::zero();
            for (m, &c) in counts.iter().enumerate() {
                if c > 0 {
                    p.add_word(ab_word_of_mask((m as u64) << 1, n), BigInt::from(c));
                }
            }
            p
        };
        let mut phi = NCPoly::zero();
        for (m, &c) in tables[2].iter().enumerate() {
            if c == 0 {
                continue;
            }
            let cd = cd_word_of_mask((m as u64) << 1, n).ok_or_else(|| {
                Error::ExpansionFailed(format!("Simsun descent mask {m:#b} has no cd word"))
            })?;
            let word = cd
                .iter()
                .map(|l| match l {
                    CdLetter::C => 0,
                    CdLetter::D => 1,
                })
                .collect();
            phi.add_word(word, BigInt::from(c));
        }
        Ok(CdIndex {
            phi,
            psi: to_ab(&tables[0]),
            psi_hat: to_ab(&tables[1]),
        })
    }

    pub fn stat_multiset(&self, n: usize, stat: Stat) -> Result<StatMultiset> {
        self.check_limit(n)?;
        let counts = fold_sn(
            n,
            || vec![0u64; stat.bound(n) + 1],
            |acc, w| acc[stat.eval(w)] += 1,
            add_counts,
        );
        Ok(StatMultiset::from_counts(n, &counts))
    }

    /// Distribution of `stat` over `{π ∈ S_n : π_1 = first}`.
    pub fn stat_multiset_with_first(
        &self,
        n: usize,
        first: u32,
        stat: Stat,
    ) -> Result<StatMultiset> {
        self.check_limit(n)?;
        if first == 0 || first as usize > n {
            return Err(Error::InvalidArgument(format!(
                "first letter {first} not in 1..={n}"
            )));
        }
        let prefixes = (1..=n as u32)
            .filter(|&b| b != first)
            .map(|b| vec![first, b])
            .collect::<Vec<_>>();
        let prefixes = if prefixes.is_empty() {
            vec![vec![first]]
        } else {
            prefixes
        };
        let counts = fold_with_prefixes(
            n,
            prefixes,
            || vec![0u64; stat.bound(n) + 1],
            |acc, w| acc[stat.eval(w)] += 1,
            add_counts,
        );
        Ok(StatMultiset::from_counts(n, &counts))
    }

    /// Number of permutations in `S_n` satisfying `pred`.
    pub fn count_where<P>(&self, n: usize, pred: P) -> Result<u64>
    where
        P: Fn(&[u32]) -> bool + Sync + Send,
    {
        self.check_limit(n)?;
        Ok(fold_sn(
            n,
            || 0u64,
            |acc, w| {
                if pred(w) {
                    *acc += 1;
                }
            },
            |a, b| a + b,
        ))
    }

    /// First permutation (in block order) violating `pred`, if any.
    pub fn find_violation<P>(&self, n: usize, pred: P) -> Result<Option<Vec<u32>>>
    where
        P: Fn(&[u32]) -> bool + Sync + Send,
    {
        self.check_limit(n)?;
        Ok(fold_sn(
            n,
            || None,
            |acc: &mut Option<Vec<u32>>, w| {
                if acc.is_none() && !pred(w) {
                    *acc = Some(w.to_vec());
                }
            },
            |a, b| match (a, b) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (a, b) => a.or(b),
            },
        ))
    }
}

/// Position of `w` in the lexicographic order of `S_n`.
fn lex_rank(w: &[u32]) -> usize {
    let n = w.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller_after = w[i + 1..].iter().filter(|&&x| x < w[i]).count();
        rank = rank * (n - i) + smaller_after;
    }
    rank
}

impl Oracle {
    /// `Θ` is an involution with `altdes ↦ n-1-altdes` and
    /// `altmaj ↦ C(n,2) - n·altdes + altmaj`.
    pub fn theta_check(&self, n: usize) -> Result<Check> {
        let bad = self.find_violation(n, |w| {
            let pi = Permutation::new(w.to_vec()).expect("enumerated words are permutations");
            let image = pi.theta();
            let (d, m) = altdes_altmaj(w);
            let (d2, m2) = altdes_altmaj(image.word());
            image.theta() == pi && d + d2 + 1 == n && m2 + n * d == n * (n - 1) / 2 + m
        })?;
        Ok(witness_for(bad, "Θ breaks the statistics identity at"))
    }

    /// Min- and max-insertion over every space of every `π ∈ S_n` hits each
    /// element of `S_{n+1}` exactly twice, and moves altdes by -1, 0, +1, +2
    /// in `a`, `n+1-a`, `a+2`, `n-1-a` ways when `altdes(π) = a`.
    pub fn double_count_check(&self, n: usize) -> Result<Check> {
        self.check_limit(n + 1)?;
        let slots: usize = (1..=n + 1).product();
        let (hits, bad) = fold_sn(
            n,
            || (vec![0u32; slots], None::<Vec<u32>>),
            |(hits, bad), w| {
                let pi = Permutation::new(w.to_vec()).expect("enumerated words are permutations");
                let a = altdes_altmaj(w).0 as isize;
                let mut moves = [0usize; 4];
                for j in 0..=n {
                    for kind in [InsertKind::Min, InsertKind::Max] {
                        let image = pi.insert(j, kind);
                        hits[lex_rank(image.word())] += 1;
                        let delta = altdes_altmaj(image.word()).0 as isize - a;
                        match delta {
                            -1..=2 => moves[(delta + 1) as usize] += 1,
                            _ => {
                                bad.get_or_insert_with(|| w.to_vec());
                            }
                        }
                    }
                }
                let (a, n) = (a as usize, n);
                let want = [a, n + 1 - a, a + 2, (n + 1).saturating_sub(a + 2)];
                if n > 0 && moves != want {
                    bad.get_or_insert_with(|| w.to_vec());
                }
            },
            |(mut h1, b1), (h2, b2)| {
                for (x, y) in h1.iter_mut().zip(h2) {
                    *x += y;
                }
                (h1, b1.or(b2))
            },
        );
        if let Some(w) = bad {
            return Ok(witness_for(Some(w), "insertion moves altdes wrongly from"));
        }
        Ok(match hits.iter().position(|&h| h != 2) {
            None => Ok(()),
            Some(r) => Err(Witness(format!(
                "n = {n}: the permutation of rank {r} in S_{} is built {} times",
                n + 1,
                hits[r]
            ))),
        })
    }

    /// altdes over `S_n` is distributed like des3 over `{π ∈ S_{n+1} : π_1 = 1}`.
    pub fn equidistribution_check(&self, n: usize) -> Result<Check> {
        let alt = self.stat_multiset(n, Stat::AltDes)?;
        let d3 = self.stat_multiset_with_first(n + 1, 1, Stat::Des3)?;
        Ok(if alt.values == d3.values {
            Ok(())
        } else {
            Err(Witness(format!(
                "n = {n}: altdes {:?} vs des3 {:?}",
                alt.values, d3.values
            )))
        })
    }
}

fn witness_for(bad: Option<Vec<u32>>, what: &str) -> Check {
    match bad {
        None => Ok(()),
        Some(w) => Err(Witness(format!(
            "{what} {}",
            Permutation::new(w).map_or_else(|e| e.to_string(), |p| p.to_string())
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn alt_eulerian_small() {
        let o = Oracle::default();
        assert_eq!(o.brute_alt_eulerian(1).unwrap(), p(&[1]));
        assert_eq!(o.brute_alt_eulerian(3).unwrap(), p(&[2, 2, 2]));
        assert_eq!(o.brute_alt_eulerian(5).unwrap(), p(&[16, 26, 36, 26, 16]));
    }

    #[test]
    fn qalt_small() {
        let o = Oracle::default();
        let a2 = o.brute_qalt(2).unwrap();
        assert_eq!(a2, crate::poly::one_plus_tq(1, 1));
        assert_eq!(a2.at_q_one(), p(&[1, 1]));
        // (1+q)(2-q+2q^2)
        assert_eq!(
            o.brute_qalt(3).unwrap().at_t_one(),
            &p(&[1, 1]) * &p(&[2, -1, 2])
        );
    }

    #[test]
    fn two_sided_small() {
        let o = Oracle::default();
        let a2 = o.brute_two_sided(2).unwrap();
        assert_eq!(a2, crate::poly::one_plus_tq(1, 1));
        let a3 = o.brute_two_sided(3).unwrap();
        let expected = BiPolyTQ::from_terms([
            ((0, 0), 1.into()),
            ((2, 0), 1.into()),
            ((0, 2), 1.into()),
            ((1, 1), 2.into()),
            ((2, 2), 1.into()),
        ]);
        assert_eq!(a3, expected);
        let a6 = o.brute_two_sided(6).unwrap();
        assert_eq!(a6.swap_slots(), a6);
    }

    #[test]
    fn simsun_small() {
        let o = Oracle::default();
        assert_eq!(o.brute_simsun(2).unwrap(), p(&[1, 1]));
        assert_eq!(o.brute_simsun(3).unwrap(), p(&[1, 4]));
        assert_eq!(o.brute_simsun(3).unwrap().total(), BigInt::from(5));
    }

    #[test]
    fn cd_index_small() {
        let o = Oracle::default();
        let cd2 = o.brute_cd_index(2).unwrap();
        assert_eq!(cd2.phi, NCPoly::letter(0));
        assert_eq!(cd2.psi, &NCPoly::letter(0) + &NCPoly::letter(1));
        let cd3 = o.brute_cd_index(3).unwrap();
        let c = NCPoly::letter(0);
        assert_eq!(cd3.phi, &(&c * &c) + &NCPoly::letter(1));
    }

    #[test]
    fn multisets() {
        let o = Oracle::default();
        let m = o.stat_multiset(2, Stat::AltMaj).unwrap();
        assert_eq!(m.values, BTreeMap::from([(0, 1), (1, 1)]));
        let m = o.stat_multiset(3, Stat::AltDes).unwrap();
        assert_eq!(m.values, BTreeMap::from([(0, 2), (1, 2), (2, 2)]));
        let m = o.stat_multiset(1, Stat::AltMaj).unwrap();
        assert_eq!(m.values, BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn mahonian_sanity() {
        let o = Oracle::default();
        assert_eq!(
            o.stat_multiset(3, Stat::Maj).unwrap().generating_poly(),
            &p(&[1, 1]) * &p(&[1, 1, 1])
        );
        for n in 1..=7 {
            assert_eq!(
                o.stat_multiset(n, Stat::Maj).unwrap().generating_poly(),
                crate::poly::q_factorial(n)
            );
        }
    }

    #[test]
    fn lex_ranks() {
        assert_eq!(lex_rank(&[1, 2, 3]), 0);
        assert_eq!(lex_rank(&[1, 3, 2]), 1);
        assert_eq!(lex_rank(&[3, 2, 1]), 5);
    }

    #[test]
    fn proof_checks_small() {
        let o = Oracle::default();
        for n in 1..=6 {
            assert_eq!(o.theta_check(n).unwrap(), Ok(()), "theta n = {n}");
            assert_eq!(
                o.double_count_check(n).unwrap(),
                Ok(()),
                "double count n = {n}"
            );
            assert_eq!(
                o.equidistribution_check(n).unwrap(),
                Ok(()),
                "equidist n = {n}"
            );
        }
    }

    #[test]
    fn limit_is_enforced() {
        let o = Oracle::new(6);
        assert_eq!(
            o.brute_alt_eulerian(7),
            Err(Error::LimitExceeded { n: 7, max: 6 })
        );
        assert!(o.count_where(7, |_| true).is_err());
    }

    #[test]
    fn totals_are_factorials() {
        let o = Oracle::default();
        let mut fact = 1u64;
        for n in 1..=8 {
            fact *= n as u64;
            assert_eq!(o.stat_multiset(n, Stat::AltMaj).unwrap().total(), fact);
            assert_eq!(
                o.brute_qalt(n).unwrap().at_t_one().total(),
                BigInt::from(fact)
            );
        }
    }
}
