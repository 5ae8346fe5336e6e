//! Reference cases with known answers, replayed by `kabelian selftest`
//! and by the acceptance tests.

use num_bigint::BigUint;

use crate::cardinality::{
    build_graph, class_size, count_eulerian_paths_bruteforce, eulerian_path_feasible, laplacian,
};
use crate::factors::{circular_factors, factor_count, fractional_power, is_k_full, k_abelian_equivalent, psi};
use crate::necklace::{
    bipartition, bpl, cycle_of_word, enumerate_necklaces, gray_decode, gray_encode, gray_verify,
    hamiltonian_path, longest_path, necklace_count, necklace_graph, parse_cycle_label, quotient,
    quotient_of_graph, validate_decomposition, GrayCode, PathSearch, QuotientGraph, SearchOptions,
};
use crate::periodicity::{min_rotation, runs};
use crate::singletons::{factorize_singleton, is_singleton, parse_factorization, singleton_count};
use crate::switching::{apply_switching, enumerate_switchings, switching_class, Switching};
use crate::word::{Alphabet, Word};
use crate::Rational;

/// Gray codes for odd orders 5, 7 and 9.
pub const GRAY_CODES_ODD: [(usize, &str); 3] = [
    (5, "1114111"),
    (7, "1116165614521341111"),
    (9, "11181878167876781576876567861878678185951575415813754113211"),
];

/// Longest necklace paths for even orders 6 and 8.
pub const GRAY_CODES_EVEN: [(usize, &str); 2] = [(6, "111521651511"), (8, "11171767156725671472674521615611")];

/// A maximal cycle decomposition of the binary `dB(6)`.
pub const DB6_CYCLES: &str = "0, 0^5101, 0^31, 0^411, 0^31^3, 001^4, 001011, 001, 001101, 011, 01, 0101^3, 01^5, 1";

/// A maximal cycle decomposition of the binary `dB(8)`.
pub const DB8_CYCLES: &str = "0, 0^71, 0^611, 0^51^3, 0^5101, 0^41101, 0^41001, 0^41011, 0^41^4, \
0^31^5, 0^31^301, 0^311001, 0^31, 0^310101, 01, 010101^5, 00110101, 0^310011, 0^311011, 011, \
0101101^4011, 00101101, 00100101, 001^3001, 001^401, 0^21^6, 001101^3, 0011, 001^3011, 00101011, \
00101^4, 0^3101^3, 0101^3, 01^3, 01^7, 1";

/// Ternary word whose order-4 factor graph carries three disjoint cycles.
pub const QUOTIENT_EXAMPLE: &str = "2(01)^3[2](0110)^{15/4}[11]^{(-1)}1^6";

pub struct Fixture {
    pub name: &'static str,
    pub check: fn() -> Result<(), String>,
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn ensure(what: &str, ok: bool) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(format!("{what} does not hold"))
    }
}

fn ab(s: &str) -> Word {
    Alphabet::new(['a', 'b']).unwrap().parse(s).unwrap()
}

fn bin(s: &str) -> Word {
    Alphabet::binary().parse(s).unwrap()
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

/// Parses a comma-separated list of cycle labels.
pub fn cycle_labels(text: &str, alphabet: &Alphabet) -> crate::Result<Vec<Word>> {
    text.split(',').map(|t| parse_cycle_label(t.trim(), alphabet)).collect()
}

/// The quotient of the order-4 factor graph of [`QUOTIENT_EXAMPLE`] by
/// the cycles through `010`, `011` and `111`.
pub fn quotient_example() -> crate::Result<QuotientGraph> {
    let ternary = Alphabet::new(['0', '1', '2'])?;
    let u = parse_factorization(QUOTIENT_EXAMPLE, &ternary)?.expand()?;
    let g = build_graph(&psi(&u, 4)?);
    let cycle = |label: &str, members: &[&str]| -> crate::Result<(String, Vec<Word>)> {
        Ok((label.to_string(), members.iter().map(|m| ternary.parse(m)).collect::<crate::Result<_>>()?))
    };
    let cycles = [
        cycle("V1", &["010", "101"])?,
        cycle("V2", &["011", "110", "100", "001"])?,
        cycle("V3", &["111"])?,
    ];
    quotient_of_graph(&g, &cycles, false)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "factor counts",
            check: || {
                expect("|ababab|_ab", factor_count(&ab("ababab"), &ab("ab")).map_err(err)?, 3)?;
                let abc = Alphabet::new(['a', 'b', 'c']).unwrap();
                expect("|abc|_ε", factor_count(&abc.parse("abc").unwrap(), &Word::empty(&abc)).map_err(err)?, 4)
            },
        },
        Fixture {
            name: "factor vector of ababaaaa",
            check: || {
                let f = psi(&ab("ababaaaa"), 2).map_err(err)?;
                let got: Vec<u64> = ["aa", "ab", "ba", "bb"].iter().map(|x| f.get(&ab(x))).collect();
                expect("counts", got, vec![3, 2, 2, 0])
            },
        },
        Fixture {
            name: "2-abelian equivalence",
            check: || {
                expect("aababb ~ aabbab", k_abelian_equivalent(&ab("aababb"), &ab("aabbab"), 2).map_err(err)?, true)?;
                expect("ababab ~ aababb", k_abelian_equivalent(&ab("ababab"), &ab("aababb"), 2).map_err(err)?, false)
            },
        },
        Fixture {
            name: "circular factors",
            check: || {
                expect("01", strings(circular_factors(&bin("01"), 4).map_err(err)?), strings(["0101", "1010"]))?;
                expect(
                    "0011",
                    strings(circular_factors(&bin("0011"), 4).map_err(err)?),
                    strings(["0011", "0110", "1001", "1100"]),
                )?;
                expect("0011 is 5-full", is_k_full(&bin("0011"), 5).map_err(err)?, true)
            },
        },
        Fixture {
            name: "fractional powers",
            check: || {
                let p = fractional_power(&bin("01"), Rational::new(9, 2).unwrap()).map_err(err)?;
                expect("(01)^9/2", p.to_string(), "010101010".into())?;
                let p = fractional_power(&bin("0011"), Rational::new(7, 2).unwrap()).map_err(err)?;
                expect("(0011)^7/2", p.to_string(), "00110011001100".into())
            },
        },
        Fixture {
            name: "least rotation",
            check: || expect("00101", min_rotation(&bin("00101")).map_err(err)?.to_string(), "00101".into()),
        },
        Fixture {
            name: "runs",
            check: || {
                let rs = runs(&bin("0010101010001111"));
                ensure(
                    "(01)^9/2 at position 2",
                    rs.iter().any(|r| r.root == bin("01") && r.exponent == Rational::new(9, 2).unwrap() && r.start == 2),
                )?;
                let rs = runs(&bin("0110110110010010010"));
                ensure("(011)^10/3", rs.iter().any(|r| r.root == bin("011") && r.exponent.to_string() == "10/3"))?;
                ensure("(100)^11/3", rs.iter().any(|r| r.root == bin("100") && r.exponent.to_string() == "11/3"))
            },
        },
        Fixture {
            name: "switching example",
            check: || {
                let u = ab("aabababaaabab");
                let v = apply_switching(&u, &Switching::new(4, 2, 3, 4, 11)).map_err(err)?;
                expect("result", v.to_string(), "aababaaababab".into())?;
                expect("4-abelian equivalent", k_abelian_equivalent(&u, &v, 4).map_err(err)?, true)
            },
        },
        Fixture {
            name: "switchings and classes",
            check: || {
                let u = ab("ababab");
                for s in enumerate_switchings(&u, 2).map_err(err)? {
                    expect("switching of ababab", apply_switching(&u, &s).map_err(err)?, u.clone())?;
                }
                let v = ab("aababb");
                let moved = enumerate_switchings(&v, 2)
                    .map_err(err)?
                    .iter()
                    .any(|s| apply_switching(&v, s).map(|x| x != v).unwrap_or(false));
                ensure("some switching moves aababb", moved)?;
                expect(
                    "class of aababb",
                    strings(switching_class(&v, 2).map_err(err)?),
                    strings(["aababb", "aabbab", "abaabb", "abbaab"]),
                )?;
                expect("class of ababab", strings(switching_class(&u, 2).map_err(err)?), strings(["ababab"]))?;
                expect("class of ababaaaa", switching_class(&ab("ababaaaa"), 2).map_err(err)?.len(), 10)
            },
        },
        Fixture {
            name: "factor graph and Laplacian of ababaaaa",
            check: || {
                let g = build_graph(&psi(&ab("ababaaaa"), 2).map_err(err)?);
                expect("vertices", strings(g.vertices()), strings(["a", "b"]))?;
                let mult: Vec<u64> = [(0, 0), (0, 1), (1, 0), (1, 1)].iter().map(|&(x, y)| g.multiplicity(x, y)).collect();
                expect("multiplicities", mult, vec![3, 2, 2, 0])?;
                let lap = laplacian(&g);
                expect("Laplacian", lap.to_i64(), vec![vec![2, -2], vec![-2, 2]])?;
                expect("minor at a", lap.minor_determinant(&ab("a")).map_err(err)?.to_string(), "2".into())?;
                expect("Eulerian a to a", eulerian_path_feasible(&g, &ab("a"), &ab("a")).map_err(err)?, true)?;
                let count = count_eulerian_paths_bruteforce(&g, &ab("a"), &ab("a"), 24).map_err(err)?;
                expect("Eulerian paths", count, BigUint::from(10u32))?;
                let g = build_graph(&psi(&ab("aababb"), 2).map_err(err)?);
                let count = count_eulerian_paths_bruteforce(&g, &ab("a"), &ab("b"), 24).map_err(err)?;
                expect("Eulerian paths of aababb", count, BigUint::from(4u32))
            },
        },
        Fixture {
            name: "class sizes",
            check: || {
                expect("ababaaaa", class_size(&ab("ababaaaa"), 2).map_err(err)?, BigUint::from(10u32))?;
                expect("(ab)^3 a^4", class_size(&ab("abababaaaa"), 2).map_err(err)?, BigUint::from(20u32))
            },
        },
        Fixture {
            name: "singletons",
            check: || {
                expect("ababab", is_singleton(&ab("ababab"), 2).map_err(err)?, true)?;
                expect("aababb", is_singleton(&ab("aababb"), 2).map_err(err)?, false)?;
                let u = parse_factorization("0^10 [00]^-1 (0011)^7/2 [] (01)^13/2", &Alphabet::binary())
                    .and_then(|f| f.expand())
                    .map_err(err)?;
                expect("5-abelian example", is_singleton(&u, 5).map_err(err)?, true)?;
                expect(
                    "binary 2-abelian count at n = 10",
                    singleton_count(10, 2, &Alphabet::binary(), 1 << 24).map_err(err)?,
                    24,
                )
            },
        },
        Fixture {
            name: "singleton factorizations",
            check: || {
                let f = factorize_singleton(&bin("0110110110010010010"), 4).map_err(err)?;
                expect("k = 4", f.to_string(), "(011)^10/3 [10]^-1 (100)^11/3".into())?;
                expect("joint sign", f.joints[0].kind.sign(), -1)?;
                let f = factorize_singleton(&bin("0010101010001111"), 4).map_err(err)?;
                expect("run extension", f.to_string(), "0 (01)^9/2 001111".into())?;
                let text = "0^10 [00]^-1 (0011)^7/2 [] (01)^13/2";
                let u = parse_factorization(text, &Alphabet::binary()).and_then(|f| f.expand()).map_err(err)?;
                expect("k = 5", factorize_singleton(&u, 5).map_err(err)?.to_string(), text.into())
            },
        },
        Fixture {
            name: "necklace counts",
            check: || {
                expect("N_2(6)", necklace_count(2, 6), BigUint::from(14u32))?;
                expect("N_2(18)", necklace_count(2, 18), BigUint::from(14602u32))?;
                let list = enumerate_necklaces(&Alphabet::binary(), 4, 1 << 24).map_err(err)?;
                expect("length 4", strings(&list), strings(["0000", "0001", "0011", "0101", "0111", "1111"]))?;
                expect("length 5", enumerate_necklaces(&Alphabet::binary(), 5, 1 << 24).map_err(err)?.len(), 8)
            },
        },
        Fixture {
            name: "necklace cycle",
            check: || {
                let c = cycle_of_word(&bin("0011"), 4).map_err(err)?;
                expect("vertices", strings(&c.vertices), strings(["0011", "0110", "1100", "1001"]))
            },
        },
        Fixture {
            name: "maximal decompositions",
            check: || {
                let b = Alphabet::binary();
                for (n, text, count) in [(6, DB6_CYCLES, 14), (8, DB8_CYCLES, 36)] {
                    let labels = cycle_labels(text, &b).map_err(err)?;
                    expect("cycle count", labels.len(), count)?;
                    let d = validate_decomposition(&b, &labels, n, 1 << 24).map_err(err)?;
                    ensure("maximal", d.is_maximal())?;
                    expect("leftover", d.leftover().len(), 0)?;
                }
                Ok(())
            },
        },
        Fixture {
            name: "quotient example",
            check: || {
                let q = quotient_example().map_err(err)?;
                expect("blocks", q.names().to_vec(), strings(["V1", "V2", "V3", "012", "120", "201"]))?;
                let edges: Vec<(String, String)> = q
                    .arcs()
                    .iter()
                    .map(|&(a, b)| (q.name(a).to_string(), q.name(b).to_string()))
                    .collect();
                let want = [("V2", "V3"), ("012", "120"), ("120", "201"), ("201", "V1"), ("201", "V2"), ("V1", "012")];
                let mut want: Vec<(String, String)> = want.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
                let mut got = edges;
                want.sort();
                got.sort();
                expect("edges", got, want)
            },
        },
        Fixture {
            name: "necklace graphs of order 4 and 5",
            check: || {
                let b = Alphabet::binary();
                let g = necklace_graph(&b, 4, 1 << 24).map_err(err)?;
                let edges: Vec<(String, String)> =
                    g.edges().iter().map(|&(x, y)| (g.name(x).to_string(), g.name(y).to_string())).collect();
                let want = [
                    ("0000", "0001"),
                    ("0001", "0011"),
                    ("0001", "0101"),
                    ("0011", "0111"),
                    ("0101", "0111"),
                    ("0111", "1111"),
                ];
                let want: Vec<(String, String)> = want.iter().map(|(x, y)| (x.to_string(), y.to_string())).collect();
                expect("NG(4) edges", edges, want)?;
                expect("NG(4) Hamiltonian", hamiltonian_path(&g, SearchOptions::default()), PathSearch::Absent)?;
                expect("NG(4) longest", longest_path(&g, SearchOptions::default()).path.len(), 5)?;
                let g = necklace_graph(&b, 5, 1 << 24).map_err(err)?;
                expect("NG(5) size", (g.len(), g.edges().len()), (8, 10))?;
                ensure(
                    "NG(5) Hamiltonian",
                    matches!(hamiltonian_path(&g, SearchOptions::default()), PathSearch::Found(_)),
                )
            },
        },
        Fixture {
            name: "Gray code decoding",
            check: || {
                let order = gray_decode(&GrayCode::parse("1114111", 5).map_err(err)?).map_err(err)?;
                expect(
                    "order 5",
                    strings(&order),
                    strings(["00000", "00001", "00011", "00111", "00101", "01011", "01111", "11111"]),
                )?;
                for (n, code) in GRAY_CODES_ODD {
                    let parsed = GrayCode::parse(code, n).map_err(err)?;
                    let order = gray_decode(&parsed).map_err(err)?;
                    ensure(&format!("code for order {n} is a Gray code"), gray_verify(&order))?;
                    expect("round trip", gray_encode(&order).map_err(err)?, parsed)?;
                }
                Ok(())
            },
        },
        Fixture {
            name: "path bounds",
            check: || {
                expect("BPL(2)", bpl(2).map_err(err)?, BigUint::from(3u32))?;
                expect("BPL(4)", bpl(4).map_err(err)?, BigUint::from(5u32))?;
                expect("BPL(8)", bpl(8).map_err(err)?, BigUint::from(33u32))?;
                let g = necklace_graph(&Alphabet::binary(), 6, 1 << 24).map_err(err)?;
                let (even, odd) = bipartition(&g, 6).map_err(err)?;
                expect("smaller part of NG(6)", even.len().min(odd.len()), 6)
            },
        },
        Fixture {
            name: "necklace decomposition quotient",
            check: || {
                let b = Alphabet::binary();
                let d = crate::necklace::necklace_decomposition(&b, 4, 1 << 24).map_err(err)?;
                let q = quotient(&d);
                let g = necklace_graph(&b, 4, 1 << 24).map_err(err)?;
                expect("edges", q.edges(), g.edges())
            },
        },
    ]
}
