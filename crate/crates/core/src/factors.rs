//! Factor counting, `Ψ_k` vectors, k-abelian equivalence, circular
//! factors and fractional powers.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::word::{Alphabet, Letter, Word};

/// Number of (possibly overlapping) occurrences of `x` in `u`. By
/// convention the empty word occurs `|u|+1` times.
pub fn factor_count(u: &Word, x: &Word) -> Result<usize> {
    u.same_alphabet(x)?;
    Ok(count_occurrences(u.letters(), x.letters()))
}

pub(crate) fn count_occurrences(hay: &[Letter], needle: &[Letter]) -> usize {
    if needle.is_empty() {
        return hay.len() + 1;
    }
    if needle.len() > hay.len() {
        return 0;
    }
    hay.windows(needle.len()).filter(|w| *w == needle).count()
}

/// `Ψ_k(u)`: occurrence counts of every length-`k` factor. Absent keys
/// count zero.
#[derive(Clone, PartialEq, Eq)]
pub struct FactorVector {
    alphabet: Alphabet,
    k: usize,
    counts: BTreeMap<Vec<Letter>, u64>,
}

impl FactorVector {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn get(&self, x: &Word) -> u64 {
        if x.len() != self.k {
            return 0;
        }
        self.counts.get(x.letters()).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Non-zero entries in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (Word, u64)> + '_ {
        self.counts
            .iter()
            .map(|(l, &c)| (Word::from_letters_unchecked(&self.alphabet, l.clone()), c))
    }

    /// Every word of `Σ^k` with its count, zero entries included.
    pub fn dense(&self, limit: u128) -> Result<Vec<(Word, u64)>> {
        self.alphabet.check_scan(self.k, limit)?;
        Ok(self
            .alphabet
            .words(self.k)
            .map(|w| {
                let c = self.counts.get(w.letters()).copied().unwrap_or(0);
                (w, c)
            })
            .collect())
    }

    /// JSON object `factor -> count` with keys in lexicographic order. With
    /// `dense`, zero entries of `Σ^k` are included.
    pub fn to_json(&self, dense: bool, limit: u128) -> Result<Value> {
        let entries = if dense {
            self.dense(limit)?
        } else {
            self.iter().collect()
        };
        let mut map = Map::new();
        for (w, c) in entries {
            map.insert(w.to_string(), Value::from(c));
        }
        Ok(Value::Object(map))
    }
}

impl std::fmt::Debug for FactorVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map()
            .entries(self.iter().map(|(w, c)| (w.to_string(), c)))
            .finish()
    }
}

pub fn psi(u: &Word, k: usize) -> Result<FactorVector> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let mut counts = BTreeMap::new();
    if u.len() >= k {
        for w in u.letters().windows(k) {
            *counts.entry(w.to_vec()).or_insert(0) += 1;
        }
    }
    Ok(FactorVector {
        alphabet: u.alphabet().clone(),
        k,
        counts,
    })
}

/// Equality of the length-`k` factor multisets of two letter strings.
pub(crate) fn same_factor_multiset(u: &[Letter], v: &[Letter], k: usize) -> bool {
    if u.len() != v.len() {
        return false;
    }
    if u.len() < k {
        return true;
    }
    let mut a: Vec<&[Letter]> = u.windows(k).collect();
    let mut b: Vec<&[Letter]> = v.windows(k).collect();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

pub(crate) fn equivalent_letters(u: &[Letter], v: &[Letter], k: usize) -> bool {
    if u.len() != v.len() {
        return false;
    }
    if u.len() + 1 >= k {
        let p = k - 1;
        u[..p] == v[..p] && u[u.len() - p..] == v[v.len() - p..] && same_factor_multiset(u, v, k)
    } else {
        (1..=k).all(|m| same_factor_multiset(u, v, m))
    }
}

/// `u ~_k v`. Words of length at least `k-1` are compared by `Ψ_k` plus the
/// `(k-1)`-prefix and suffix; shorter words by `Ψ_m` for every `m <= k`.
pub fn k_abelian_equivalent(u: &Word, v: &Word, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    u.same_alphabet(v)?;
    Ok(equivalent_letters(u.letters(), v.letters(), k))
}

/// The window `w^ω[1, |w|+n)` whose length-`n` factors are `F_n(w°)`.
pub(crate) fn circular_window(w: &[Letter], n: usize) -> Vec<Letter> {
    let len = w.len() + n.saturating_sub(1);
    w.iter().copied().cycle().take(len).collect()
}

/// `F_n(u°)`: the length-`n` factors of the infinite repetition `u^ω`.
pub fn circular_factors(u: &Word, n: usize) -> Result<BTreeSet<Word>> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    if n == 0 {
        return Ok(BTreeSet::from([Word::empty(u.alphabet())]));
    }
    let window = circular_window(u.letters(), n);
    Ok(window
        .windows(n)
        .map(|f| u.with_letters(f.to_vec()))
        .collect())
}

pub(crate) fn circular_factor_count(w: &[Letter], n: usize) -> usize {
    if n == 0 {
        return 1;
    }
    let window = circular_window(w, n);
    let set: BTreeSet<&[Letter]> = window.windows(n).collect();
    set.len()
}

/// `w` is k-full when `|F_{k-1}(w°)| = |w|`.
pub fn is_k_full(w: &Word, k: usize) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if k == 0 {
        return Err(Error::ZeroK);
    }
    Ok(circular_factor_count(w.letters(), k - 1) == w.len())
}

/// `w^q`, the word of length `q|w|` with period `|w|` starting with `w`.
pub fn fractional_power(w: &Word, q: Rational) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let len = q.times(w.len()).ok_or_else(|| Error::NonIntegralLength {
        exponent: q.to_string(),
        root_len: w.len(),
    })?;
    Ok(w.with_letters(w.letters().iter().copied().cycle().take(len).collect()))
}
