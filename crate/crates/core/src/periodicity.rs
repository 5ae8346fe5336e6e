//! Primitivity, least rotations (necklaces) and runs.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::word::{Letter, Word};

/// Length of the shortest period of `s` (KMP failure function).
pub(crate) fn smallest_period(s: &[Letter]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    n - fail[n - 1]
}

pub(crate) fn primitive_root_len(s: &[Letter]) -> usize {
    let p = smallest_period(s);
    if s.len().is_multiple_of(p) {
        p
    } else {
        s.len()
    }
}

/// The primitive word `v` and exponent `l` with `u = v^l`.
pub fn primitive_root(u: &Word) -> Result<(Word, usize)> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    let p = primitive_root_len(u.letters());
    Ok((u.prefix(p), u.len() / p))
}

pub fn is_primitive(u: &Word) -> Result<bool> {
    Ok(primitive_root(u)?.1 == 1)
}

/// Start index (0-based) of the lexicographically least rotation, by
/// Booth's algorithm.
pub(crate) fn least_rotation_start(s: &[Letter]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: isize| s[i as usize % n];
    let mut fail: Vec<isize> = vec![-1; 2 * n];
    let mut k: isize = 0;
    for j in 1..2 * n as isize {
        let sj = at(j);
        let mut i = fail[(j - k - 1) as usize];
        while i != -1 && sj != at(k + i + 1) {
            if sj < at(k + i + 1) {
                k = j - i - 1;
            }
            i = fail[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            fail[(j - k) as usize] = -1;
        } else {
            fail[(j - k) as usize] = i + 1;
        }
    }
    k as usize % n
}

pub(crate) fn least_rotation(s: &[Letter]) -> Vec<Letter> {
    let mut v = s.to_vec();
    v.rotate_left(least_rotation_start(s));
    v
}

/// An equivalence class of words under rotation, stored as its
/// lexicographically least representative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace {
    representative: Word,
}

impl Necklace {
    pub fn representative(&self) -> &Word {
        &self.representative
    }

    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representative.is_empty()
    }

    /// Wraps a word already known to be a least rotation.
    pub(crate) fn from_canonical(representative: Word) -> Self {
        Necklace { representative }
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.representative)
    }
}

impl fmt::Debug for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Necklace({})", self.representative)
    }
}

/// The necklace `u°`, represented by the least rotation of `u`.
pub fn min_rotation(u: &Word) -> Result<Necklace> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(Necklace {
        representative: u.with_letters(least_rotation(u.letters())),
    })
}

/// A maximal repetition `r^q` (`q >= 2`, `r` primitive) of a host word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Run {
    pub root: Word,
    pub exponent: Rational,
    /// 1-based start position in the host.
    pub start: usize,
}

impl Run {
    pub fn len(&self) -> usize {
        self.exponent
            .times(self.root.len())
            .expect("run length is integral")
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 1-based position just past the run.
    pub fn end(&self) -> usize {
        self.start + self.len()
    }
}

/// Maximal runs of `s` as `(start, end, period)`, 0-based half-open,
/// ordered by start then period. Quadratic scan over all periods.
pub(crate) fn runs_raw(s: &[Letter]) -> Vec<(usize, usize, usize)> {
    let n = s.len();
    let mut out = Vec::new();
    for p in 1..=n / 2 {
        let mut i = 0;
        while i + p < n {
            if s[i] != s[i + p] {
                i += 1;
                continue;
            }
            let begin = i;
            while i + p < n && s[i] == s[i + p] {
                i += 1;
            }
            // s[begin .. i+p) has period p
            let end = i + p;
            if end - begin >= 2 * p && primitive_root_len(&s[begin..begin + p]) == p {
                out.push((begin, end, p));
            }
        }
    }
    out.sort_unstable_by_key(|&(b, _, p)| (b, p));
    out
}

/// All runs of `u`, ordered by start position then root length.
pub fn runs(u: &Word) -> Vec<Run> {
    runs_raw(u.letters())
        .into_iter()
        .map(|(b, e, p)| Run {
            root: u.slice(b + 1, b + 1 + p),
            exponent: Rational::new((e - b) as u64, p as u64).expect("period is positive"),
            start: b + 1,
        })
        .collect()
}
