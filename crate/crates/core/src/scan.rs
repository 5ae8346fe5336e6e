//! Exhaustive scans over all words of a given length.

use rayon::prelude::*;

use crate::error::Result;
use crate::word::{Alphabet, Letter};

/// Default limit on the number of words a scan may visit.
pub const DEFAULT_GUARD: u128 = 1 << 24;

const CHUNK: u64 = 1 << 12;

fn decode(mut index: u64, m: u64, out: &mut [Letter]) {
    for slot in out.iter_mut().rev() {
        *slot = (index % m) as Letter;
        index /= m;
    }
}

fn increment(letters: &mut [Letter], m: Letter) {
    for slot in letters.iter_mut().rev() {
        *slot += 1;
        if *slot < m {
            return;
        }
        *slot = 0;
    }
}

/// Applies `f` to every word of length `n` in lexicographic order, in
/// parallel, keeping the `Some` results in that order.
pub fn scan_filter<T, F>(alphabet: &Alphabet, n: usize, guard: u128, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&[Letter]) -> Option<T> + Sync,
{
    alphabet.check_scan(n, guard)?;
    let total = alphabet.word_count(n) as u64;
    let m = alphabet.size() as u64;
    let chunks = total.div_ceil(CHUNK);
    let parts: Vec<Vec<T>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let end = (start + CHUNK).min(total);
            let mut letters = vec![0; n];
            decode(start, m, &mut letters);
            let mut found = Vec::new();
            for _ in start..end {
                if let Some(t) = f(&letters) {
                    found.push(t);
                }
                increment(&mut letters, m as Letter);
            }
            found
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

/// Number of words of length `n` satisfying `pred`.
pub fn scan_count<F>(alphabet: &Alphabet, n: usize, guard: u128, pred: F) -> Result<u128>
where
    F: Fn(&[Letter]) -> bool + Sync,
{
    alphabet.check_scan(n, guard)?;
    let total = alphabet.word_count(n) as u64;
    let m = alphabet.size() as u64;
    let chunks = total.div_ceil(CHUNK);
    Ok((0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let end = (start + CHUNK).min(total);
            let mut letters = vec![0; n];
            decode(start, m, &mut letters);
            let mut count = 0u128;
            for _ in start..end {
                count += pred(&letters) as u128;
                increment(&mut letters, m as Letter);
            }
            count
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn scan_visits_words_in_order() {
        let alphabet = Alphabet::latin(3).unwrap();
        let all = scan_filter(&alphabet, 9, DEFAULT_GUARD, |s| Some(s.to_vec())).unwrap();
        let expected: Vec<Vec<Letter>> = alphabet.words(9).map(|w| w.letters().to_vec()).collect();
        assert_eq!(all, expected);
        assert_eq!(scan_count(&alphabet, 9, DEFAULT_GUARD, |s| s[0] == 0).unwrap(), 6561);
    }

    #[test]
    fn empty_length_has_one_word() {
        let alphabet = Alphabet::binary();
        assert_eq!(scan_count(&alphabet, 0, 10, |_| true).unwrap(), 1);
    }

    #[test]
    fn guard_is_enforced() {
        let alphabet = Alphabet::binary();
        assert!(matches!(
            scan_count(&alphabet, 10, 1000, |_| true),
            Err(Error::GuardExceeded { needed: 1024, limit: 1000 })
        ));
    }
}
