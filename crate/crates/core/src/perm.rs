//! Permutations of `[n]` and the statistics built on them.
//!
//! Positions are 1-based throughout: position `i` of a word `w` is `w[i - 1]`,
//! and the parity of `i` decides which comparison counts as an alternating
//! descent. Descent sets are returned as bitmasks with bit `i` standing for
//! position `i`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A word `π_1 ... π_n` using each of `1..=n` exactly once. `n = 0` is allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u32>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltStats {
    pub alt_descent_set: Vec<usize>,
    pub altdes: usize,
    pub altmaj: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicStats {
    pub des: usize,
    pub maj: usize,
    pub des3: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InsertKind {
    /// Insert a new smallest letter.
    Min,
    /// Insert a new largest letter.
    Max,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CdLetter {
    C,
    D,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimsunInfo {
    pub is_simsun: bool,
    pub is_down_up: bool,
    pub cd_word: Option<Vec<CdLetter>>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &x in &word {
            let idx = (x as usize).wrapping_sub(1);
            if idx >= n || seen[idx] {
                return Err(Error::InvalidPermutation(format!(
                    "{word:?} is not a permutation of 1..={n}"
                )));
            }
            seen[idx] = true;
        }
        Ok(Self(word))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.0
    }

    /// Letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn alt_stats(&self) -> AltStats {
        let mask = alt_descent_mask(&self.0);
        let set = mask_positions(mask);
        AltStats {
            altdes: set.len(),
            altmaj: set.iter().sum(),
            alt_descent_set: set,
        }
    }

    pub fn classic_stats(&self) -> ClassicStats {
        let mask = descent_mask(&self.0);
        ClassicStats {
            des: mask.count_ones() as usize,
            maj: mask_sum(mask),
            des3: des3(&self.0),
        }
    }

    pub fn descent_set(&self) -> Vec<usize> {
        mask_positions(descent_mask(&self.0))
    }

    pub fn complement(&self) -> Self {
        Self(complement_word(&self.0))
    }

    pub fn reversal(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn inverse(&self) -> Self {
        Self(inverse_word(&self.0))
    }

    /// `R` for even length, `C∘R` for odd length: the involution sending
    /// altdes to `n-1-altdes` and altmaj to `C(n,2) - n altdes + altmaj`.
    pub fn theta(&self) -> Self {
        if self.len() % 2 == 0 {
            self.reversal()
        } else {
            self.reversal().complement()
        }
    }

    /// Reverses positions `1..=2m`, fixing the rest.
    pub fn reverse_prefix(&self, m: usize) -> Result<Self> {
        if 2 * m > self.len() {
            return Err(Error::PrefixTooLong { m, n: self.len() });
        }
        let mut w = self.0.clone();
        w[..2 * m].reverse();
        Ok(Self(w))
    }

    /// Min- or max-insertion into the `j`-th space (`0 <= j <= n`): the
    /// suffix after the space is complemented and the new letter placed in
    /// the space. The result lies in `S_{n+1}`.
    pub fn insert(&self, j: usize, kind: InsertKind) -> Self {
        assert!(
            j <= self.len(),
            "space {j} out of range for length {}",
            self.len()
        );
        let n = self.len() as u32;
        let (prefix, suffix) = self.0.split_at(j);
        let mut w = Vec::with_capacity(self.len() + 1);
        w.extend_from_slice(prefix);
        match kind {
            InsertKind::Min => w.push(0),
            InsertKind::Max => w.push(n + 1),
        }
        w.extend(complement_word(suffix));
        if kind == InsertKind::Min {
            // normalizing a word on {0..n} just shifts every letter up by one
            w.iter_mut().for_each(|x| *x += 1);
        }
        Self(w)
    }

    pub fn simsun(&self) -> SimsunInfo {
        let is_simsun = is_simsun(&self.0);
        let in_ss = is_simsun && self.0.last().is_none_or(|&x| x as usize == self.len());
        SimsunInfo {
            is_simsun,
            is_down_up: is_down_up(&self.0),
            cd_word: if in_ss {
                cd_word_of_mask(descent_mask(&self.0), self.len())
            } else {
                None
            },
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
        } else {
            for (i, x) in self.0.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Accepts `942357861` (one digit per letter) or `10,2,1,...`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(format!("cannot parse {s:?}"));
        let word: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|tok| tok.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|ch| ch.to_digit(10).filter(|&d| d > 0).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

/// Bit `i` is set iff position `i` is an alternating descent: `π_i > π_{i+1}`
/// at odd `i`, `π_i < π_{i+1}` at even `i`.
pub fn alt_descent_mask(w: &[u32]) -> u64 {
    let mut mask = 0u64;
    for i in 1..w.len() {
        let (a, b) = (w[i - 1], w[i]);
        if (i % 2 == 1) == (a > b) {
            mask |= 1 << i;
        }
    }
    mask
}

pub fn descent_mask(w: &[u32]) -> u64 {
    let mut mask = 0u64;
    for i in 1..w.len() {
        if w[i - 1] > w[i] {
            mask |= 1 << i;
        }
    }
    mask
}

/// `(altdes, altmaj)` without building the set.
pub fn altdes_altmaj(w: &[u32]) -> (usize, usize) {
    let mut des = 0;
    let mut maj = 0;
    for i in 1..w.len() {
        if (i % 2 == 1) == (w[i - 1] > w[i]) {
            des += 1;
            maj += i;
        }
    }
    (des, maj)
}

pub fn mask_positions(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

pub fn mask_sum(mask: u64) -> usize {
    (0..64).filter(|i| mask >> i & 1 == 1).sum()
}

/// Number of windows `π_i π_{i+1} π_{i+2}` in the patterns 132, 213 or 321.
pub fn des3(w: &[u32]) -> usize {
    w.windows(3)
        .filter(|t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            // 132: a < c < b, 213: b < a < c, 321: a > b > c
            (a < c && c < b) || (b < a && a < c) || (a > b && b > c)
        })
        .count()
}

/// Maps the `l`-th largest letter to the `l`-th smallest, for any word of
/// distinct letters.
pub fn complement_word(w: &[u32]) -> Vec<u32> {
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    let k = sorted.len();
    w.iter()
        .map(|x| {
            let rank = sorted.binary_search(x).expect("letter present");
            sorted[k - 1 - rank]
        })
        .collect()
}

/// Replaces the `i`-th smallest letter by `i`.
pub fn normalize(w: &[u32]) -> Permutation {
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    Permutation(
        w.iter()
            .map(|x| sorted.binary_search(x).expect("letter present") as u32 + 1)
            .collect(),
    )
}

pub fn inverse_word(w: &[u32]) -> Vec<u32> {
    let mut inv = vec![0; w.len()];
    for (i, &x) in w.iter().enumerate() {
        inv[x as usize - 1] = i as u32 + 1;
    }
    inv
}

/// `π_1 > π_2 < π_3 > ...`
pub fn is_down_up(w: &[u32]) -> bool {
    (1..w.len()).all(|i| (i % 2 == 1) == (w[i - 1] > w[i]))
}

/// No double descent in the word restricted to letters `<= k`, for every `k`.
pub fn is_simsun(w: &[u32]) -> bool {
    (1..=w.len() as u32).rev().all(|k| {
        let mut prev: Option<u32> = None;
        let mut falling = false;
        for &x in w.iter().filter(|&&x| x <= k) {
            if let Some(p) = prev {
                if p > x {
                    if falling {
                        return false;
                    }
                    falling = true;
                } else {
                    falling = false;
                }
            }
            prev = Some(x);
        }
        true
    })
}

/// `u_S` as a word over {a = 0, b = 1} of length `n - 1`.
pub fn ab_word_of_mask(mask: u64, n: usize) -> Vec<u8> {
    (1..n).map(|i| (mask >> i & 1) as u8).collect()
}

/// Rewrites `u_S` by `ba -> d`, then `a -> c`. `None` if a `b` is not
/// followed by an `a`.
pub fn cd_word_of_mask(mask: u64, n: usize) -> Option<Vec<CdLetter>> {
    let ab = ab_word_of_mask(mask, n);
    let mut out = Vec::new();
    let mut i = 0;
    while i < ab.len() {
        match (ab[i], ab.get(i + 1)) {
            (0, _) => {
                out.push(CdLetter::C);
                i += 1;
            }
            (1, Some(0)) => {
                out.push(CdLetter::D);
                i += 2;
            }
            _ => return None,
        }
    }
    Some(out)
}

pub fn cd_word_string(w: &[CdLetter]) -> String {
    w.iter()
        .map(|l| match l {
            CdLetter::C => 'c',
            CdLetter::D => 'd',
        })
        .collect()
}

/// Advances to the lexicographic successor in place; `false` (and the slice
/// reset to ascending order) after the last arrangement.
pub fn next_permutation(w: &mut [u32]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        w.reverse();
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut cur = Some((1..=n as u32).collect::<Vec<_>>());
    std::iter::from_fn(move || {
        let w = cur.take()?;
        let mut next = w.clone();
        if next_permutation(&mut next) {
            cur = Some(next);
        }
        Some(Permutation(w))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn alt_stats_examples() {
        let s = perm("942357861").alt_stats();
        assert_eq!(s.alt_descent_set, vec![1, 4, 6, 7]);
        assert_eq!((s.altdes, s.altmaj), (4, 18));
        let s = perm("753249861").alt_stats();
        assert_eq!(s.alt_descent_set, vec![1, 3, 4, 7]);
        assert_eq!((s.altdes, s.altmaj), (4, 15));
        let s = perm("12").alt_stats();
        assert!(s.alt_descent_set.is_empty());
        assert_eq!(altdes_altmaj(&[9, 4, 2, 3, 5, 7, 8, 6, 1]), (4, 18));
    }

    #[test]
    fn classic_stats_examples() {
        assert_eq!(
            perm("321").classic_stats(),
            ClassicStats {
                des: 2,
                maj: 3,
                des3: 1
            }
        );
        assert_eq!(
            perm("132").classic_stats(),
            ClassicStats {
                des: 1,
                maj: 2,
                des3: 1
            }
        );
        assert_eq!(des3(&[2, 1, 3]), 1);
        assert_eq!(des3(&[1, 2, 3]), 0);
        assert_eq!(des3(&[2, 3, 1]), 0);
        assert_eq!(des3(&[3, 1, 2]), 0);
    }

    #[test]
    fn complement_and_normalize_on_words() {
        assert_eq!(complement_word(&[3, 6, 7, 5, 2]), vec![6, 3, 2, 5, 7]);
        assert_eq!(normalize(&[3, 6, 7, 5, 2]), perm("24531"));
    }

    #[test]
    fn reverse_prefix_example() {
        assert_eq!(
            perm("942357861").reverse_prefix(3).unwrap(),
            perm("753249861")
        );
        assert_eq!(
            perm("123").reverse_prefix(2),
            Err(Error::PrefixTooLong { m: 2, n: 3 })
        );
    }

    #[test]
    fn insertion_examples() {
        let p = perm("24315");
        assert_eq!(p.insert(2, InsertKind::Min), perm("351462"));
        assert_eq!(p.insert(2, InsertKind::Max), perm("246351"));
        assert_eq!(p.insert(5, InsertKind::Max), perm("243156"));
    }

    #[test]
    fn simsun_examples() {
        let info = perm("423516").simsun();
        assert!(info.is_simsun);
        assert_eq!(cd_word_string(&info.cd_word.unwrap()), "dcd");
        let info = perm("321").simsun();
        assert!(!info.is_simsun);
        assert!(info.cd_word.is_none());
        assert!(perm("213").simsun().is_down_up);
        // 312 has no double descent, but removing 3 leaves 12 which is fine;
        // 4312 is not simsun because 431 is a double descent.
        assert!(is_simsun(&[3, 1, 2]));
        assert!(!is_simsun(&[4, 3, 1, 2]));
        // 3412: removing 4 leaves 312 (fine); 2413 -> remove 4 -> 213 fine;
        // 2431 -> 431 double descent.
        assert!(!is_simsun(&[2, 4, 3, 1]));
        // simsun but not ending in n: no cd word
        assert!(perm("132").simsun().cd_word.is_none());
    }

    #[test]
    fn empty_permutation() {
        let e = Permutation::identity(0);
        assert_eq!(e.alt_stats().altdes, 0);
        assert_eq!(e.classic_stats().des, 0);
        assert!(e.simsun().is_simsun);
        assert_eq!(e.simsun().cd_word, Some(vec![]));
    }

    #[test]
    fn parsing() {
        assert_eq!(perm("10,2,3,4,5,6,7,8,9,1").len(), 10);
        assert_eq!(
            perm("10,2,3,4,5,6,7,8,9,1").to_string(),
            "10,2,3,4,5,6,7,8,9,1"
        );
        assert!("122".parse::<Permutation>().is_err());
        assert!("102".parse::<Permutation>().is_err());
        assert!("1,3".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().unwrap().is_empty());
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<String> = all_permutations(3).map(|p| p.to_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(all_permutations(0).count(), 1);
        assert_eq!(all_permutations(5).count(), 120);
    }
}
