//! Alphabets and finite words.
//!
//! Public slicing follows the 1-based, half-open convention: `u[i,j)` is
//! the run of symbols `i..j-1`, empty when `i >= j`, and `u[i..]` is the
//! suffix starting at position `i`. Internally a word is a vector of
//! letter indices into its alphabet, so comparing letter vectors gives
//! the lexicographic order induced by the declared symbol order.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Letter index into an [`Alphabet`].
pub type Letter = u8;

/// An ordered set of distinct symbols. Cheap to clone.
#[derive(Clone)]
pub struct Alphabet {
    symbols: Arc<[char]>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if symbols.len() > 255 {
            return Err(Error::AlphabetTooLarge);
        }
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(Error::DuplicateSymbol(*c));
            }
        }
        Ok(Alphabet {
            symbols: symbols.into(),
        })
    }

    /// The alphabet `{0, 1}`.
    pub fn binary() -> Self {
        Alphabet::new(['0', '1']).unwrap()
    }

    /// Symbols `a`, `b`, `c`, ... of the given size (at most 26).
    pub fn latin(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if size > 26 {
            return Err(Error::AlphabetTooLarge);
        }
        Alphabet::new((0..size as u8).map(|i| (b'a' + i) as char))
    }

    /// The distinct symbols occurring in `texts`, in `char` order.
    pub fn inferred<'a, I: IntoIterator<Item = &'a str>>(texts: I) -> Result<Self> {
        let mut symbols: Vec<char> = texts.into_iter().flat_map(str::chars).collect();
        symbols.sort_unstable();
        symbols.dedup();
        Alphabet::new(symbols)
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, letter: Letter) -> char {
        self.symbols[letter as usize]
    }

    pub fn letter(&self, symbol: char) -> Option<Letter> {
        self.symbols
            .iter()
            .position(|&c| c == symbol)
            .map(|i| i as Letter)
    }

    /// Parses a plain symbol string into a word over this alphabet.
    pub fn parse(&self, text: &str) -> Result<Word> {
        let letters = text
            .chars()
            .map(|c| {
                self.letter(c).ok_or_else(|| Error::UnknownSymbol {
                    symbol: c,
                    alphabet: self.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word {
            alphabet: self.clone(),
            letters,
        })
    }

    /// Number of words of length `n`, saturating at `u128::MAX`.
    pub fn word_count(&self, n: usize) -> u128 {
        let mut total: u128 = 1;
        for _ in 0..n {
            total = total.saturating_mul(self.size() as u128);
        }
        total
    }

    /// Fails with [`Error::GuardExceeded`] when there are more than `limit`
    /// words of length `n`.
    pub fn check_scan(&self, n: usize, limit: u128) -> Result<()> {
        let needed = self.word_count(n);
        if needed > limit {
            Err(Error::GuardExceeded { needed, limit })
        } else {
            Ok(())
        }
    }

    /// The `index`-th word of length `n` in lexicographic order.
    pub fn nth_word(&self, n: usize, mut index: u128) -> Word {
        let m = self.size() as u128;
        let mut letters = vec![0; n];
        for slot in letters.iter_mut().rev() {
            *slot = (index % m) as Letter;
            index /= m;
        }
        Word {
            alphabet: self.clone(),
            letters,
        }
    }

    /// All words of length `n` in lexicographic order.
    pub fn words(&self, n: usize) -> Words {
        Words {
            alphabet: self.clone(),
            next: Some(vec![0; n]),
        }
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.symbols, &other.symbols) || self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.symbols.iter() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({self})")
    }
}

/// Odometer over all words of a fixed length.
pub struct Words {
    alphabet: Alphabet,
    next: Option<Vec<Letter>>,
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let top = (self.alphabet.size() - 1) as Letter;
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            if succ[pos] < top {
                succ[pos] += 1;
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(Word {
            alphabet: self.alphabet.clone(),
            letters: current,
        })
    }
}

/// A finite word over an [`Alphabet`].
#[derive(Clone)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty(alphabet: &Alphabet) -> Self {
        Word {
            alphabet: alphabet.clone(),
            letters: Vec::new(),
        }
    }

    pub fn from_letters(alphabet: &Alphabet, letters: Vec<Letter>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l as usize >= alphabet.size()) {
            return Err(Error::Parse(format!(
                "letter index {bad} outside alphabet of size {}",
                alphabet.size()
            )));
        }
        Ok(Word {
            alphabet: alphabet.clone(),
            letters,
        })
    }

    pub(crate) fn from_letters_unchecked(alphabet: &Alphabet, letters: Vec<Letter>) -> Self {
        Word {
            alphabet: alphabet.clone(),
            letters,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The symbol at 1-based position `i`.
    pub fn at(&self, i: usize) -> char {
        self.alphabet.symbol(self.letters[i - 1])
    }

    /// `u[i,j)` with 1-based positions; empty when `i >= j`. Positions past
    /// the end are clamped to `|u|+1`.
    pub fn slice(&self, i: usize, j: usize) -> Word {
        let end = j.min(self.len() + 1);
        let start = i.max(1);
        let letters = if start >= end {
            Vec::new()
        } else {
            self.letters[start - 1..end - 1].to_vec()
        };
        self.with_letters(letters)
    }

    /// `u[i..]`, the suffix starting at 1-based position `i`.
    pub fn suffix_from(&self, i: usize) -> Word {
        self.slice(i, self.len() + 1)
    }

    /// `pref_n(u)`; the whole word when `n >= |u|`.
    pub fn prefix(&self, n: usize) -> Word {
        self.with_letters(self.letters[..n.min(self.len())].to_vec())
    }

    /// `suff_n(u)`; the whole word when `n >= |u|`.
    pub fn suffix(&self, n: usize) -> Word {
        let n = n.min(self.len());
        self.with_letters(self.letters[self.len() - n..].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.same_alphabet(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(self.with_letters(letters))
    }

    /// The conjugate `u[r+1..] u[1,r+1)`, `r` taken modulo `|u|`.
    pub fn rotate(&self, r: usize) -> Word {
        if self.is_empty() {
            return self.clone();
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(r % self.len());
        self.with_letters(letters)
    }

    /// `u` repeated `times` times.
    pub fn repeat(&self, times: usize) -> Word {
        self.with_letters(self.letters.repeat(times))
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.starts_with(&self.letters)
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.letters.ends_with(&self.letters)
    }

    /// Word with the same alphabet but letters replaced.
    pub(crate) fn with_letters(&self, letters: Vec<Letter>) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            letters,
        }
    }

    pub(crate) fn same_alphabet(&self, other: &Word) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && self.alphabet == other.alphabet
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .cmp(&other.letters)
            .then_with(|| self.alphabet.symbols.cmp(&other.alphabet.symbols))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{}", self.alphabet.symbol(l))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self:?})", self = self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slicing_is_one_based_half_open() {
        let ab = Alphabet::latin(3).unwrap();
        let u = ab.parse("abcab").unwrap();
        assert_eq!(u.slice(2, 4).to_string(), "bc");
        assert_eq!(u.slice(4, 2).to_string(), "");
        assert_eq!(u.slice(3, 3).to_string(), "");
        assert_eq!(u.suffix_from(4).to_string(), "ab");
        assert_eq!(u.suffix_from(6).to_string(), "");
        assert_eq!(u.prefix(2).to_string(), "ab");
        assert_eq!(u.suffix(2).to_string(), "ab");
        assert_eq!(u.at(3), 'c');
    }

    #[test]
    fn alphabet_rejects_duplicates_and_unknown_symbols() {
        assert_eq!(Alphabet::new(['a', 'b', 'a']), Err(Error::DuplicateSymbol('a')));
        assert_eq!(Alphabet::new([]), Err(Error::EmptyAlphabet));
        let bin = Alphabet::binary();
        assert!(matches!(bin.parse("012"), Err(Error::UnknownSymbol { symbol: '2', .. })));
    }

    #[test]
    fn declared_order_defines_lexicographic_order() {
        let ba = Alphabet::new(['b', 'a']).unwrap();
        assert!(ba.parse("b").unwrap() < ba.parse("a").unwrap());
        let words: Vec<String> = ba.words(2).map(|w| w.to_string()).collect();
        assert_eq!(words, ["bb", "ba", "ab", "aa"]);
    }

    #[test]
    fn word_enumeration_matches_nth_word() {
        let ab = Alphabet::latin(3).unwrap();
        for (i, w) in ab.words(3).enumerate() {
            assert_eq!(ab.nth_word(3, i as u128), w);
        }
        assert_eq!(ab.words(3).count(), 27);
        assert_eq!(ab.words(0).count(), 1);
    }

    #[test]
    fn mismatched_alphabets_do_not_concatenate() {
        let u = Alphabet::binary().parse("01").unwrap();
        let v = Alphabet::latin(2).unwrap().parse("ab").unwrap();
        assert_eq!(u.concat(&v), Err(Error::AlphabetMismatch));
    }
}
