//! Properties of factor vectors, periodicity and switchings, checked
//! against direct definitions.

use std::collections::{BTreeMap, BTreeSet};

use kabelian::factors::{fractional_power, is_k_full, k_abelian_equivalent, psi};
use kabelian::periodicity::{is_primitive, min_rotation, runs};
use kabelian::switching::{apply_switching, enumerate_switchings, switching_class};
use kabelian::{Alphabet, Rational, Word};
use proptest::prelude::*;

fn word(alphabet: &Alphabet, letters: Vec<u8>) -> Word {
    Word::from_letters(alphabet, letters).unwrap()
}

fn binary_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..2, 0..=max_len).prop_map(|l| word(&Alphabet::binary(), l))
}

fn ternary_word(max_len: usize) -> impl Strategy<Value = Word> {
    let a = Alphabet::new(['a', 'b', 'c']).unwrap();
    prop::collection::vec(0u8..3, 0..=max_len).prop_map(move |l| word(&a, l))
}

fn same_length_pair(max_len: usize) -> impl Strategy<Value = (Word, Word)> {
    (0..=max_len).prop_flat_map(|n| {
        let side = prop::collection::vec(0u8..2, n).prop_map(|l| word(&Alphabet::binary(), l));
        (side.clone(), side)
    })
}

/// Counts of every factor of length at most `k`, by sliding windows.
fn factor_table(u: &Word, k: usize) -> BTreeMap<Vec<u8>, usize> {
    let s = u.letters();
    let mut table = BTreeMap::new();
    for len in 1..=k {
        for w in s.windows(len) {
            *table.entry(w.to_vec()).or_insert(0) += 1;
        }
    }
    table
}

fn naive_equivalent(u: &Word, v: &Word, k: usize) -> bool {
    u.len() == v.len() && factor_table(u, k) == factor_table(v, k)
}

/// `{v : |v| = |u|, v ~_k u}` by testing every word of the same length.
fn scan_class(u: &Word, k: usize) -> BTreeSet<Word> {
    u.alphabet()
        .words(u.len())
        .filter(|v| naive_equivalent(u, v, k))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn psi_total_counts_windows(u in ternary_word(14), k in 1usize..5) {
        let f = psi(&u, k).unwrap();
        prop_assert_eq!(f.total() as usize, (u.len() + 1).saturating_sub(k));
    }

    #[test]
    fn equivalence_matches_definition((u, v) in same_length_pair(9), k in 1usize..4) {
        prop_assert_eq!(k_abelian_equivalent(&u, &v, k).unwrap(), naive_equivalent(&u, &v, k));
    }

    #[test]
    fn equivalence_is_monotone_in_k(u in binary_word(10), k in 1usize..5, pick in 0usize..1000) {
        let class: Vec<Word> = switching_class(&u, k).unwrap().into_iter().collect();
        let v = &class[pick % class.len()];
        for m in 1..=k {
            prop_assert!(k_abelian_equivalent(&u, v, m).unwrap());
        }
    }

    #[test]
    fn equivalence_is_an_equivalence(
        u in binary_word(8),
        k in 1usize..4,
        picks in (0usize..1000, 0usize..1000),
        w in binary_word(8),
    ) {
        let class: Vec<Word> = switching_class(&u, k).unwrap().into_iter().collect();
        let v = &class[picks.0 % class.len()];
        let x = &class[picks.1 % class.len()];
        prop_assert!(k_abelian_equivalent(&u, &u, k).unwrap());
        let uw = k_abelian_equivalent(&u, &w, k).unwrap();
        let wu = k_abelian_equivalent(&w, &u, k).unwrap();
        prop_assert_eq!(uw, wu);
        prop_assert!(k_abelian_equivalent(v, x, k).unwrap());
        prop_assert_eq!(k_abelian_equivalent(v, &w, k).unwrap(), uw);
    }

    #[test]
    fn integer_powers_repeat(u in ternary_word(5), p in 0u64..6) {
        prop_assume!(!u.is_empty());
        let got = fractional_power(&u, Rational::integer(p)).unwrap();
        prop_assert_eq!(got, u.repeat(p as usize));
    }

    #[test]
    fn least_rotation_is_canonical(u in ternary_word(12), r in 0usize..12) {
        prop_assume!(!u.is_empty());
        let x = min_rotation(&u).unwrap();
        prop_assert_eq!(&min_rotation(x.representative()).unwrap(), &x);
        prop_assert_eq!(&min_rotation(&u.rotate(r % u.len())).unwrap(), &x);
        let least = (0..u.len()).map(|i| u.rotate(i)).min().unwrap();
        prop_assert_eq!(x.representative(), &least);
    }

    #[test]
    fn runs_cannot_be_extended(u in binary_word(24)) {
        let s = u.letters();
        for r in runs(&u) {
            let p = r.root.len();
            let (b, e) = (r.start - 1, r.end() - 1);
            prop_assert!(e - b >= 2 * p);
            prop_assert!((b..e - p).all(|i| s[i] == s[i + p]));
            prop_assert!(is_primitive(&r.root).unwrap());
            prop_assert!(b == 0 || s[b - 1] != s[b - 1 + p]);
            prop_assert!(e == s.len() || s[e] != s[e - p]);
        }
    }

    #[test]
    fn full_words_are_primitive(u in binary_word(8), k in 1usize..6) {
        prop_assume!(!u.is_empty());
        if is_k_full(&u, k).unwrap() {
            prop_assert!(is_primitive(&u).unwrap());
        }
    }

    #[test]
    fn switchings_preserve_equivalence_and_can_be_undone(u in ternary_word(10), k in 1usize..4) {
        for s in enumerate_switchings(&u, k).unwrap() {
            let v = apply_switching(&u, &s).unwrap();
            prop_assert!(naive_equivalent(&u, &v, k));
            let back = enumerate_switchings(&v, k)
                .unwrap()
                .iter()
                .any(|t| apply_switching(&v, t).unwrap() == u);
            prop_assert!(back, "no switching maps {} back to {}", v, u);
        }
    }

    #[test]
    fn switching_class_is_the_scanned_class(u in binary_word(10), k in 1usize..5) {
        let class = switching_class(&u, k).unwrap();
        prop_assert_eq!(&class, &scan_class(&u, k));
        for v in &class {
            prop_assert_eq!(&switching_class(v, k).unwrap(), &class);
        }
    }
}
