//! Structure of singletons: returns, run factorizations and types.

use std::collections::BTreeSet;

use kabelian::cardinality::class_size;
use kabelian::factors::is_k_full;
use kabelian::periodicity::runs;
use kabelian::singletons::{
    expand_factorization, factorize_singleton, is_singleton, parse_factorization, returns, singleton_list,
    type_of, JointKind, SingletonType,
};
use kabelian::switching::switching_class;
use kabelian::{Alphabet, Word};
use num_bigint::BigUint;
use proptest::prelude::*;

fn bin() -> Alphabet {
    Alphabet::binary()
}

fn factors(u: &Word, len: usize) -> BTreeSet<Word> {
    if len > u.len() {
        return BTreeSet::new();
    }
    (1..=u.len() + 1 - len).map(|i| u.slice(i, i + len)).collect()
}

/// 1-based starts of `x` in `u`.
fn starts(u: &Word, x: &Word) -> Vec<usize> {
    if x.len() > u.len() {
        return Vec::new();
    }
    (1..=u.len() + 1 - x.len()).filter(|&i| &u.slice(i, i + x.len()) == x).collect()
}

/// A singleton of binary length `n` picked by index.
fn singleton() -> impl Strategy<Value = (Word, usize)> {
    (4usize..=14, 2usize..=4, any::<prop::sample::Index>()).prop_map(|(n, k, pick)| {
        let list = singleton_list(n, k, &bin(), 1 << 16).unwrap();
        (pick.get(&list).clone(), k)
    })
}

fn binary_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..2, 0..=max_len).prop_map(|l| Word::from_letters(&bin(), l).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn predicate_matches_class_size(u in binary_word(12), k in 1usize..5) {
        let single = is_singleton(&u, k).unwrap();
        prop_assert_eq!(single, class_size(&u, k).unwrap() == BigUint::from(1u32));
        prop_assert_eq!(single, switching_class(&u, k).unwrap().len() == 1);
    }

    #[test]
    fn singletons_have_unique_returns((u, k) in singleton()) {
        let fs = factors(&u, k - 1);
        for x in &fs {
            for y in &fs {
                prop_assert!(returns(&u, x, y).unwrap().len() <= 1, "{} {} {}", u, x, y);
            }
        }
    }

    #[test]
    fn factorization_round_trips((u, k) in singleton()) {
        let f = factorize_singleton(&u, k).unwrap();
        prop_assert_eq!(&expand_factorization(&f).unwrap(), &u);
        f.validate(k).unwrap();
        let reparsed = parse_factorization(&f.to_string(), &bin()).unwrap();
        prop_assert_eq!(&factorize_singleton(&reparsed.expand().unwrap(), k).unwrap(), &f);
    }

    #[test]
    fn frequent_factors_live_in_one_block((u, k) in singleton()) {
        let f = factorize_singleton(&u, k).unwrap();
        let spans = f.block_spans().unwrap();
        for x in factors(&u, k - 1) {
            let at = starts(&u, &x);
            if at.len() < 3 {
                continue;
            }
            let home = spans.iter().filter(|&&(b, e)| at.iter().all(|&p| b <= p && p + x.len() <= e)).count();
            prop_assert_eq!(home, 1, "{} in {}", x, u);
        }
    }

    #[test]
    fn joints_and_roots_are_short((u, k) in singleton()) {
        let f = factorize_singleton(&u, k).unwrap();
        let bound = 2usize.pow(k as u32 - 1);
        for j in &f.joints {
            prop_assert!(j.word.len() <= 2 * bound);
            if j.kind == JointKind::Overlap {
                prop_assert!(j.word.len() <= k - 2);
            }
        }
        if !f.blocks.is_empty() {
            prop_assert!(f.prefix.len() <= 2 * bound && f.suffix.len() <= 2 * bound);
        }
        let t = type_of(&u, k).unwrap();
        prop_assert!(t.root_length() <= bound);
        if let SingletonType::Structured { roots, .. } = &t {
            prop_assert_eq!(roots.len(), f.blocks.len());
        }
    }

    #[test]
    fn long_repetitions_are_full((u, k) in singleton()) {
        for r in runs(&u) {
            let p = r.root.len();
            // q >= (k-1)/p + 2, i.e. q*p >= k - 1 + 2p
            if r.len() >= k - 1 + 2 * p {
                prop_assert!(is_k_full(&r.root, k).unwrap(), "{} in {}", r.root, u);
            }
        }
    }
}
