//! Gray codes for binary necklaces, written as strings of hexadecimal
//! flip positions.
//!
//! Decoding starts at `0^n`; each digit `a` complements the `a`-th letter
//! (1-based) of the least representative of the current necklace.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::necklace::quotient::necklace_graph;
use crate::necklace::search::{hamiltonian_path, longest_path, PathSearch, SearchOptions};
use crate::necklace::{bpl, necklace_count};
use crate::periodicity::{min_rotation, Necklace};
use crate::scan::DEFAULT_GUARD;
use crate::word::{Alphabet, Word};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrayCode {
    pub n: usize,
    /// 1-based flip positions.
    pub digits: Vec<u8>,
}

impl GrayCode {
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let digits = text
            .trim()
            .chars()
            .map(|c| match c.to_digit(16) {
                Some(d) if d >= 1 && d as usize <= n => Ok(d as u8),
                _ => Err(Error::InvalidGrayCode(format!("digit {c:?} is not a position in 1..={n}"))),
            })
            .collect::<Result<_>>()?;
        Ok(GrayCode { n, digits })
    }
}

impl fmt::Display for GrayCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            write!(f, "{}", char::from_digit(d as u32, 16).expect("digit below 16"))?;
        }
        Ok(())
    }
}

fn flip(w: &Word, position: usize) -> Word {
    let mut letters = w.letters().to_vec();
    letters[position - 1] ^= 1;
    Word::from_letters_unchecked(w.alphabet(), letters)
}

/// The smallest 1-based position whose complement in the least
/// representative of `a` gives a word of necklace `b`.
pub fn one_flip_apart(a: &Necklace, b: &Necklace) -> Option<usize> {
    let rep = a.representative();
    if rep.alphabet().size() != 2 || a.len() != b.len() || a == b {
        return None;
    }
    (1..=rep.len()).find(|&i| &min_rotation(&flip(rep, i)).expect("non-empty") == b)
}

pub fn gray_decode(code: &GrayCode) -> Result<Vec<Necklace>> {
    if code.n == 0 {
        return Err(Error::InvalidArgument("necklace length must be positive".into()));
    }
    let alphabet = Alphabet::binary();
    let mut current = min_rotation(&Word::from_letters(&alphabet, vec![0; code.n])?)?;
    let mut seen = BTreeSet::from([current.clone()]);
    let mut out = vec![current.clone()];
    for (i, &d) in code.digits.iter().enumerate() {
        let d = d as usize;
        if d == 0 || d > code.n {
            return Err(Error::InvalidGrayCode(format!("digit {d} at step {} is out of range", i + 1)));
        }
        let next = min_rotation(&flip(current.representative(), d))?;
        if next == current {
            return Err(Error::InvalidGrayCode(format!("flip {d} at step {} leaves {current} unchanged", i + 1)));
        }
        if !seen.insert(next.clone()) {
            return Err(Error::DuplicateNecklace(next.to_string()));
        }
        out.push(next.clone());
        current = next;
    }
    Ok(out)
}

/// Writes each step as the smallest flip position that realizes it.
pub fn gray_encode(ordering: &[Necklace]) -> Result<GrayCode> {
    let n = ordering.first().map_or(0, Necklace::len);
    let mut digits = Vec::with_capacity(ordering.len().saturating_sub(1));
    for pair in ordering.windows(2) {
        let position = one_flip_apart(&pair[0], &pair[1]).ok_or_else(|| {
            Error::InvalidGrayCode(format!("{} and {} are not one flip apart", pair[0], pair[1]))
        })?;
        if position > 15 {
            return Err(Error::InvalidGrayCode(format!("position {position} has no hex digit")));
        }
        digits.push(position as u8);
    }
    Ok(GrayCode { n, digits })
}

/// Distinct necklaces of one length, consecutive ones a single flip apart.
pub fn gray_verify_path(ordering: &[Necklace]) -> bool {
    let Some(first) = ordering.first() else {
        return true;
    };
    let distinct: BTreeSet<&Necklace> = ordering.iter().collect();
    distinct.len() == ordering.len()
        && ordering.iter().all(|x| x.len() == first.len())
        && ordering.windows(2).all(|p| one_flip_apart(&p[0], &p[1]).is_some())
}

/// A Gray code: a single-flip path through all `N_2(n)` necklaces.
pub fn gray_verify(ordering: &[Necklace]) -> bool {
    let Some(first) = ordering.first() else {
        return false;
    };
    BigUint::from(ordering.len()) == necklace_count(2, first.len()) && gray_verify_path(ordering)
}

/// Searches the necklace graph for a code starting at `0^n`: a Gray code
/// for odd `n`, a path of `BPL(n)` necklaces for even `n`.
pub fn gray_search(n: usize, budget: u64) -> Result<GrayCode> {
    let g = necklace_graph(&Alphabet::binary(), n, DEFAULT_GUARD)?;
    let options = SearchOptions {
        budget,
        start: Some(0),
    };
    let path = if n % 2 == 1 {
        match hamiltonian_path(&g, options) {
            PathSearch::Found(p) => p,
            PathSearch::Absent => {
                return Err(Error::InvalidGrayCode(format!("no Gray code from 0^{n}")));
            }
            PathSearch::BudgetExceeded => return Err(Error::BudgetExceeded(budget)),
        }
    } else {
        let found = longest_path(&g, options);
        let target: usize = bpl(n)?.try_into().unwrap_or(usize::MAX);
        if found.path.len() < target && !found.complete {
            return Err(Error::BudgetExceeded(budget));
        }
        found.path
    };
    let ordering: Vec<Necklace> = path
        .iter()
        .map(|&b| min_rotation(&g.members(b)[0]))
        .collect::<Result<_>>()?;
    gray_encode(&ordering)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(xs: &[Necklace]) -> Vec<String> {
        xs.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn decodes_length_five_example() {
        let code = GrayCode::parse("1114111", 5).unwrap();
        let order = gray_decode(&code).unwrap();
        assert_eq!(
            names(&order),
            ["00000", "00001", "00011", "00111", "00101", "01011", "01111", "11111"]
        );
        assert!(gray_verify(&order));
        assert_eq!(gray_encode(&order).unwrap(), code);
    }

    #[test]
    fn trivial_code() {
        let order = gray_decode(&GrayCode::parse("1", 1).unwrap()).unwrap();
        assert_eq!(names(&order), ["0", "1"]);
        assert!(gray_verify(&order));
    }

    #[test]
    fn rejects_bad_codes() {
        assert!(GrayCode::parse("16", 5).is_err());
        assert!(GrayCode::parse("10", 5).is_err());
        // 00000 -> 00001 -> 00000
        assert!(matches!(
            gray_decode(&GrayCode::parse("15", 5).unwrap()),
            Err(Error::DuplicateNecklace(_))
        ));
        let partial = gray_decode(&GrayCode::parse("111", 5).unwrap()).unwrap();
        assert!(gray_verify_path(&partial));
        assert!(!gray_verify(&partial));
    }

    #[test]
    fn hex_digits_round_trip() {
        let code = GrayCode {
            n: 15,
            digits: vec![1, 10, 15],
        };
        assert_eq!(code.to_string(), "1af");
        assert_eq!(GrayCode::parse("1af", 15).unwrap(), code);
    }

    #[test]
    fn searches_small_orders() {
        for n in [3, 5, 7] {
            let code = gray_search(n, 1_000_000).unwrap();
            assert!(gray_verify(&gray_decode(&code).unwrap()));
        }
        let code = gray_search(6, 1_000_000).unwrap();
        assert_eq!(gray_decode(&code).unwrap().len(), 13);
    }
}
