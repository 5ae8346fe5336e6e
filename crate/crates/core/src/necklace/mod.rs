//! Necklaces, de Bruijn graphs and their cycle decompositions.

mod debruijn;
mod gray;
mod quotient;
mod search;

use num_bigint::BigUint;
use num_traits::One;

pub use debruijn::{
    cycle_of_word, necklace_decomposition, parse_cycle_label, validate_decomposition, Cycle,
    CycleDecomposition, DeBruijn,
};
pub use gray::{
    gray_decode, gray_encode, gray_search, gray_verify, gray_verify_path, one_flip_apart,
    GrayCode,
};
pub use quotient::{bipartition, necklace_graph, quotient, quotient_of_graph, QuotientGraph};
pub use search::{
    hamiltonian_path, longest_path, LongestPath, PathSearch, SearchOptions, DEFAULT_BUDGET,
};

use crate::error::{Error, Result};
use crate::periodicity::Necklace;
use crate::word::{Alphabet, Letter, Word};

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub(crate) fn totient(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `N_m(l) = (1/l) Σ_{d | l} φ(d) m^{l/d}`, with `N_m(0) = 1`.
pub fn necklace_count(m: usize, l: usize) -> BigUint {
    if l == 0 {
        return BigUint::one();
    }
    let base = BigUint::from(m);
    let sum: BigUint = divisors(l)
        .into_iter()
        .map(|d| BigUint::from(totient(d)) * base.pow((l / d) as u32))
        .sum();
    sum / BigUint::from(l)
}

/// `BPL(n) = (1/n) Σ_{d | n, d odd} φ(d) 2^{n/d} + 1`: an upper bound on
/// the number of vertices of a path in the binary necklace graph of even
/// order `n`.
pub fn bpl(n: usize) -> Result<BigUint> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    let two = BigUint::from(2u32);
    let sum: BigUint = divisors(n)
        .into_iter()
        .filter(|d| d % 2 == 1)
        .map(|d| BigUint::from(totient(d)) * two.pow((n / d) as u32))
        .sum();
    Ok(sum / BigUint::from(n) + BigUint::one())
}

/// All necklaces of length `l` in lexicographic order of their least
/// representatives (FKM generation).
pub fn enumerate_necklaces(alphabet: &Alphabet, l: usize, guard: u128) -> Result<Vec<Necklace>> {
    alphabet.check_scan(l, guard)?;
    let mut out = Vec::new();
    if l == 0 {
        out.push(Necklace::from_canonical(Word::empty(alphabet)));
        return Ok(out);
    }
    let mut a: Vec<Letter> = vec![0; l + 1];
    fkm(1, 1, l, alphabet.size() as Letter, &mut a, &mut |s| {
        out.push(Necklace::from_canonical(Word::from_letters_unchecked(alphabet, s.to_vec())));
    });
    Ok(out)
}

fn fkm(t: usize, p: usize, n: usize, m: Letter, a: &mut [Letter], visit: &mut impl FnMut(&[Letter])) {
    if t > n {
        if n.is_multiple_of(p) {
            visit(&a[1..=n]);
        }
        return;
    }
    a[t] = a[t - p];
    fkm(t + 1, p, n, m, a, visit);
    for j in a[t - p] + 1..m {
        a[t] = j;
        fkm(t + 1, t, n, m, a, visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::periodicity::min_rotation;

    #[test]
    fn counts() {
        let seq: Vec<u64> = (0..=8).map(|l| necklace_count(2, l).try_into().unwrap()).collect();
        assert_eq!(seq, [1, 2, 3, 4, 6, 8, 14, 20, 36]);
        assert_eq!(necklace_count(2, 18), BigUint::from(14602u32));
        assert_eq!(necklace_count(5, 1), BigUint::from(5u32));
        assert_eq!(necklace_count(3, 4), BigUint::from(24u32));
    }

    #[test]
    fn bpl_values() {
        let seq: Vec<u64> = (1..=5).map(|n| bpl(2 * n).unwrap().try_into().unwrap()).collect();
        assert_eq!(seq, [3, 5, 13, 33, 105]);
        assert_eq!(bpl(5), Err(Error::OddOrder(5)));
    }

    #[test]
    fn enumeration() {
        let names: Vec<String> = enumerate_necklaces(&Alphabet::binary(), 4, 1 << 20)
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(names, ["0000", "0001", "0011", "0101", "0111", "1111"]);
        assert_eq!(enumerate_necklaces(&Alphabet::binary(), 1, 10).unwrap().len(), 2);
        assert_eq!(enumerate_necklaces(&Alphabet::binary(), 0, 10).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_matches_count_and_rotation() {
        for m in 1..=3 {
            let alphabet = Alphabet::latin(m).unwrap();
            for l in 1..=7 {
                let list = enumerate_necklaces(&alphabet, l, 1 << 20).unwrap();
                assert_eq!(BigUint::from(list.len()), necklace_count(m, l));
                for x in &list {
                    assert_eq!(&min_rotation(x.representative()).unwrap(), x);
                }
                assert!(list.windows(2).all(|p| p[0] < p[1]));
            }
        }
    }
}
