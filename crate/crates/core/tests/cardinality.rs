//! Class sizes against three independent counts, and the tree-count
//! factor on random balanced graphs.

use num_bigint::BigUint;
use num_integer::binomial;
use kabelian::cardinality::{build_graph, class_size, count_eulerian_paths_bruteforce, laplacian, MultiGraph};
use kabelian::factors::psi;
use kabelian::singletons::is_singleton;
use kabelian::switching::switching_class;
use kabelian::{Alphabet, Word};
use proptest::prelude::*;

fn word(alphabet: &Alphabet, letters: Vec<u8>) -> Word {
    Word::from_letters(alphabet, letters).unwrap()
}

fn binary_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..2, 0..=max_len).prop_map(|l| word(&Alphabet::binary(), l))
}

/// Counts words of the same length with the same factors of length at
/// most `k`, comparing sorted window lists.
fn scan_count(u: &Word, k: usize) -> usize {
    let profile = |w: &Word| {
        let mut all: Vec<Vec<u8>> = (1..=k).flat_map(|len| w.letters().windows(len).map(<[u8]>::to_vec)).collect();
        all.sort();
        all
    };
    let target = profile(u);
    u.alphabet().words(u.len()).filter(|v| profile(v) == target).count()
}

fn brute_force(u: &Word, k: usize) -> BigUint {
    if u.len() < k {
        return BigUint::from(1u32);
    }
    let g = build_graph(&psi(u, k).unwrap());
    let start = u.prefix(k - 1);
    let end = u.suffix(k - 1);
    count_eulerian_paths_bruteforce(&g, &start, &end, 64).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn four_way_agreement(u in binary_word(10), k in 1usize..4) {
        let size = class_size(&u, k).unwrap();
        prop_assert_eq!(&size, &BigUint::from(switching_class(&u, k).unwrap().len()));
        prop_assert_eq!(&size, &BigUint::from(scan_count(&u, k)));
        prop_assert_eq!(&size, &brute_force(&u, k));
    }

    #[test]
    fn class_size_is_constant_on_the_class(u in binary_word(10), k in 1usize..4) {
        let size = class_size(&u, k).unwrap();
        for v in switching_class(&u, k).unwrap() {
            prop_assert_eq!(&class_size(&v, k).unwrap(), &size);
        }
    }

    #[test]
    fn class_size_one_means_singleton(u in binary_word(12), k in 1usize..5) {
        let size = class_size(&u, k).unwrap();
        prop_assert!(size >= BigUint::from(1u32));
        prop_assert_eq!(size == BigUint::from(1u32), is_singleton(&u, k).unwrap());
    }

    #[test]
    fn tree_count_ignores_the_removed_vertex(walk in prop::collection::vec(0u8..5, 2..14)) {
        // A closed walk gives a balanced connected multigraph.
        let a = Alphabet::latin(5).unwrap();
        let v = |x: u8| word(&a, vec![x]);
        let mut edges = Vec::new();
        for i in 0..walk.len() {
            edges.push((v(walk[i]), v(walk[(i + 1) % walk.len()]), 1));
        }
        let g = MultiGraph::from_edges(&a, &edges);
        let lap = laplacian(&g);
        let first = lap.minor_determinant_at(0).unwrap();
        prop_assert!(first > 0.into());
        for i in 1..g.vertex_count() {
            prop_assert_eq!(&lap.minor_determinant_at(i).unwrap(), &first);
        }
    }
}

#[test]
fn one_changed_letter_family() {
    let a = Alphabet::new(['a', 'b', 'c']).unwrap();
    for n in 3..=12 {
        for m in 1..=n - 2 {
            let text = format!("{}cb{}", "a".repeat(n - m - 2), "c".repeat(m));
            let u = a.parse(&text).unwrap();
            assert_eq!(class_size(&u, 2).unwrap(), BigUint::from(m), "{text}");
        }
    }
}

#[test]
fn alternating_prefix_family() {
    let a = Alphabet::new(['a', 'b']).unwrap();
    for n in 2..=14usize {
        for p in 0..=4usize.min((n - 1) / 2) {
            let text = format!("{}{}", "ab".repeat(p), "a".repeat(n - 2 * p));
            let u = a.parse(&text).unwrap();
            let want: BigUint = binomial(BigUint::from(n - p - 1), BigUint::from(p));
            assert_eq!(class_size(&u, 2).unwrap(), want, "{text}");
        }
    }
}
