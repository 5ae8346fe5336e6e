//! k-abelian singletons: words alone in their class.
//!
//! A word is a k-abelian singleton exactly when, for every pair `x, y` of
//! its factors of length `k-1`, there is at most one return from `x` to
//! `y`. Singletons factor into k-full runs glued by short joints; see
//! [`factorize_singleton`].

mod factorization;

use std::collections::{BTreeSet, HashMap};

pub use factorization::{
    enumerate_types, expand_factorization, factorize_singleton, parse_factorization, type_of,
    Block, Joint, JointKind, SingletonFactorization, SingletonType,
};

use crate::error::{Error, Result};
use crate::scan::{scan_count, scan_filter};
use crate::word::{Alphabet, Letter, Word};

/// A return `v` from `x` to `y`, with every 1-based start of `vy` in the
/// host at which this same `v` is a return.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReturnWord {
    pub x: Word,
    pub y: Word,
    pub v: Word,
    pub positions: Vec<usize>,
}

fn occurrences(s: &[Letter], pattern: &[Letter]) -> Vec<usize> {
    if pattern.len() > s.len() {
        return Vec::new();
    }
    (0..=s.len() - pattern.len())
        .filter(|&p| &s[p..p + pattern.len()] == pattern)
        .collect()
}

/// All distinct returns from `x` to `y` in `u`, ordered by first position.
///
/// For an occurrence `p` of `x`, the only candidate is `u[p, q)` with `q`
/// the next occurrence of `y` after `p`, and it is a return when `x` does
/// not occur strictly between `p` and `q`.
pub fn returns(u: &Word, x: &Word, y: &Word) -> Result<Vec<ReturnWord>> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    if x.is_empty() {
        return Err(Error::EmptyWord);
    }
    u.same_alphabet(x)?;
    u.same_alphabet(y)?;
    let s = u.letters();
    let xs = occurrences(s, x.letters());
    let ys = occurrences(s, y.letters());
    let mut out: Vec<ReturnWord> = Vec::new();
    for (idx, &p) in xs.iter().enumerate() {
        let Some(&q) = ys.iter().find(|&&q| q > p) else {
            continue;
        };
        if xs.get(idx + 1).is_some_and(|&next| next < q) {
            continue;
        }
        let v = &s[p..q];
        match out.iter_mut().find(|r| r.v.letters() == v) {
            Some(r) => r.positions.push(p + 1),
            None => out.push(ReturnWord {
                x: x.clone(),
                y: y.clone(),
                v: u.with_letters(v.to_vec()),
                positions: vec![p + 1],
            }),
        }
    }
    Ok(out)
}

/// The singleton predicate on raw letters.
pub(crate) fn is_singleton_letters(s: &[Letter], k: usize) -> bool {
    if k == 1 {
        return s.windows(2).all(|w| w[0] == w[1]);
    }
    let h = k - 1;
    if s.len() <= h {
        return true;
    }
    let count = s.len() - h + 1;
    let mut ids = HashMap::new();
    let id: Vec<usize> = (0..count)
        .map(|p| {
            let fresh = ids.len();
            *ids.entry(&s[p..p + h]).or_insert(fresh)
        })
        .collect();
    let distinct = ids.len();
    let mut next_same = vec![count; count];
    let mut last = vec![count; distinct];
    for p in (0..count).rev() {
        next_same[p] = last[id[p]];
        last[id[p]] = p;
    }
    // (x, y) -> the return u[p, q) seen first
    let mut known: Vec<Option<(usize, usize)>> = vec![None; distinct * distinct];
    let mut stamp = vec![usize::MAX; distinct];
    for p in 0..count {
        let stop = next_same[p].min(count - 1);
        for q in p + 1..=stop {
            let y = id[q];
            if stamp[y] == p {
                continue;
            }
            stamp[y] = p;
            let slot = &mut known[id[p] * distinct + y];
            match *slot {
                None => *slot = Some((p, q)),
                Some((p0, q0)) => {
                    if q0 - p0 != q - p || s[p0..q0] != s[p..q] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Whether `[u]_k = {u}`.
pub fn is_singleton(u: &Word, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    Ok(is_singleton_letters(u.letters(), k))
}

/// All k-abelian singletons of length `n`, in lexicographic order.
pub fn singleton_list(n: usize, k: usize, alphabet: &Alphabet, guard: u128) -> Result<Vec<Word>> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let found = scan_filter(alphabet, n, guard, |s| {
        is_singleton_letters(s, k).then(|| s.to_vec())
    })?;
    Ok(found
        .into_iter()
        .map(|l| Word::from_letters_unchecked(alphabet, l))
        .collect())
}

/// Number of k-abelian singletons of length `n`, by exhaustive scan.
pub fn singleton_count_scan(n: usize, k: usize, alphabet: &Alphabet, guard: u128) -> Result<u128> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    scan_count(alphabet, n, guard, |s| is_singleton_letters(s, k))
}

/// Number of k-abelian singletons of length `n`. Binary `k = 2` with
/// `n >= 4` uses the closed family of [`two_abelian_binary_family`];
/// everything else scans.
pub fn singleton_count(n: usize, k: usize, alphabet: &Alphabet, guard: u128) -> Result<u128> {
    if k == 2 && alphabet.size() == 2 && n >= 4 {
        return Ok(2 * n as u128 + 4);
    }
    singleton_count_scan(n, k, alphabet, guard)
}

/// The words `a⁺b* ∪ ab*a ∪ (ab)*{ε,a}` of length `n` and their images
/// under exchanging the two letters, sorted. For `n >= 4` these are
/// exactly the 2-abelian singletons, `2n + 4` of them.
pub fn two_abelian_binary_family(alphabet: &Alphabet, n: usize) -> Result<Vec<Word>> {
    if alphabet.size() != 2 {
        return Err(Error::NotBinary);
    }
    let mut set: BTreeSet<Vec<Letter>> = BTreeSet::new();
    for (a, b) in [(0, 1), (1, 0)] {
        for i in 1..=n {
            let mut w = vec![a; i];
            w.resize(n, b);
            set.insert(w);
        }
        if n >= 2 {
            let mut w = vec![b; n];
            w[0] = a;
            w[n - 1] = a;
            set.insert(w);
        }
        set.insert((0..n).map(|i| if i % 2 == 0 { a } else { b }).collect());
    }
    if n == 0 {
        set.insert(Vec::new());
    }
    Ok(set
        .into_iter()
        .map(|l| Word::from_letters_unchecked(alphabet, l))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cardinality::class_size;

    fn w(s: &str) -> Word {
        Alphabet::latin(3).unwrap().parse(s).unwrap()
    }

    fn vs(rs: &[ReturnWord]) -> Vec<(String, Vec<usize>)> {
        rs.iter().map(|r| (r.v.to_string(), r.positions.clone())).collect()
    }

    #[test]
    fn return_examples() {
        let u = w("acbaccb");
        assert_eq!(
            vs(&returns(&u, &w("a"), &w("b")).unwrap()),
            [("ac".to_string(), vec![1]), ("acc".to_string(), vec![4])]
        );
        assert_eq!(
            vs(&returns(&w("ababab"), &w("ab"), &w("ab")).unwrap()),
            [("ab".to_string(), vec![1, 3])]
        );
        assert_eq!(
            vs(&returns(&w("aaaaa"), &w("a"), &w("a")).unwrap()),
            [("a".to_string(), vec![1, 2, 3, 4])]
        );
        assert_eq!(returns(&u, &w("a"), &w("bc")), Err(Error::LengthMismatch(1, 2)));
    }

    #[test]
    fn overlapping_returns() {
        // x = y = aa in aaa: v = a
        assert_eq!(
            vs(&returns(&w("aaa"), &w("aa"), &w("aa")).unwrap()),
            [("a".to_string(), vec![1])]
        );
    }

    #[test]
    fn predicate_examples() {
        assert!(is_singleton(&w("ababab"), 2).unwrap());
        assert!(!is_singleton(&w("aababb"), 2).unwrap());
        assert!(is_singleton(&w("aaaa"), 1).unwrap());
        assert!(!is_singleton(&w("aab"), 1).unwrap());
        assert!(is_singleton(&w("ab"), 4).unwrap());
    }

    #[test]
    fn predicate_matches_returns_and_class_size() {
        let alphabet = Alphabet::latin(3).unwrap();
        for n in 0..=7 {
            for u in alphabet.words(n) {
                for k in 1..=3 {
                    let fast = is_singleton(&u, k).unwrap();
                    let size = class_size(&u, k).unwrap();
                    assert_eq!(fast, size == 1u32.into(), "{u} k={k}");
                    if k >= 2 && u.len() >= k - 1 {
                        let factors: BTreeSet<Word> =
                            (1..=u.len() + 2 - k).map(|p| u.slice(p, p + k - 1)).collect();
                        let slow = factors.iter().all(|x| {
                            factors.iter().all(|y| returns(&u, x, y).unwrap().len() <= 1)
                        });
                        assert_eq!(fast, slow, "{u} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn binary_two_abelian_counts() {
        let alphabet = Alphabet::binary();
        for n in 4..=10 {
            let scanned = singleton_list(n, 2, &alphabet, 1 << 20).unwrap();
            assert_eq!(scanned.len(), 2 * n + 4);
            assert_eq!(scanned, two_abelian_binary_family(&alphabet, n).unwrap());
            assert_eq!(singleton_count(n, 2, &alphabet, 1 << 20).unwrap(), 2 * n as u128 + 4);
        }
    }

    #[test]
    fn unary_alphabet_has_one_singleton() {
        let alphabet = Alphabet::new(['a']).unwrap();
        for n in 0..6 {
            assert_eq!(singleton_count(n, 1, &alphabet, 100).unwrap(), 1);
        }
    }
}
