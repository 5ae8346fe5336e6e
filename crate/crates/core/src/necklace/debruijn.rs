use std::fmt::Write as _;

use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::factors::circular_window;
use crate::necklace::{enumerate_necklaces, necklace_count};
use crate::periodicity::{primitive_root, primitive_root_len};
use crate::word::{Alphabet, Letter, Word};

/// The de Bruijn graph of order `n`: vertices are the words of length `n`,
/// with an edge `ax -> xb` for every word `axb`. Vertices are coded as
/// base-`m` integers and adjacency is computed on demand.
#[derive(Clone, Debug)]
pub struct DeBruijn {
    alphabet: Alphabet,
    order: usize,
    size: u64,
}

impl DeBruijn {
    pub fn new(alphabet: &Alphabet, order: usize, guard: u128) -> Result<Self> {
        alphabet.check_scan(order, guard.min(u64::MAX as u128))?;
        Ok(DeBruijn {
            alphabet: alphabet.clone(),
            order,
            size: alphabet.word_count(order) as u64,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertex_count(&self) -> u64 {
        self.size
    }

    fn m(&self) -> u64 {
        self.alphabet.size() as u64
    }

    pub(crate) fn code_of(&self, letters: &[Letter]) -> u64 {
        letters.iter().fold(0, |acc, &a| acc * self.m() + a as u64)
    }

    pub fn code(&self, w: &Word) -> Result<u64> {
        if w.len() != self.order {
            return Err(Error::NotAVertex(w.to_string()));
        }
        if w.alphabet() != &self.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(self.code_of(w.letters()))
    }

    pub fn word(&self, mut code: u64) -> Word {
        let mut letters = vec![0; self.order];
        for slot in letters.iter_mut().rev() {
            *slot = (code % self.m()) as Letter;
            code /= self.m();
        }
        Word::from_letters_unchecked(&self.alphabet, letters)
    }

    pub fn successors(&self, v: u64) -> impl Iterator<Item = u64> + '_ {
        let shifted = (v * self.m()) % self.size;
        (0..self.m()).map(move |b| shifted + b)
    }

    pub fn predecessors(&self, v: u64) -> impl Iterator<Item = u64> + '_ {
        let high = self.size / self.m();
        (0..self.m()).map(move |a| a * high + v / self.m())
    }

    pub fn is_edge(&self, from: u64, to: u64) -> bool {
        from < self.size && to < self.size && to / self.m() == from % (self.size / self.m())
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for v in 0..self.size {
            for w in self.successors(v) {
                let _ = writeln!(out, "  \"{}\" -> \"{}\";", self.word(v), self.word(w));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// A cycle of a de Bruijn graph, named by a word whose circular factors
/// are its vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cycle {
    pub label: Word,
    /// Vertices in the order they are visited, starting with the prefix
    /// of `label^ω`.
    pub vertices: Vec<Word>,
}

/// The cycle of `dB(n)` through the length-`n` circular factors of `w`,
/// in order of occurrence in `w^ω`. Needs `w` primitive with `|w|`
/// distinct circular factors.
pub fn cycle_of_word(w: &Word, n: usize) -> Result<Cycle> {
    let invalid = |reason: &str| Error::InvalidCycle {
        label: w.to_string(),
        reason: reason.to_string(),
    };
    if w.is_empty() {
        return Err(invalid("empty label"));
    }
    if primitive_root_len(w.letters()) != w.len() {
        return Err(invalid("not primitive"));
    }
    let window = circular_window(w.letters(), n.max(1));
    let mut vertices: Vec<Word> = (0..w.len())
        .map(|i| w.with_letters(window[i..i + n].to_vec()))
        .collect();
    let mut sorted = vertices.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != vertices.len() {
        return Err(invalid(&format!("repeated circular factor of length {n}")));
    }
    vertices.shrink_to_fit();
    Ok(Cycle {
        label: w.clone(),
        vertices,
    })
}

/// Expands the exponent shorthand of cycle labels: `c^d` repeats the
/// symbol `c`, with `d` a single digit or a braced number, so
/// `0^5101 = 00000101` and `0^{12}1` is twelve zeros then `1`.
pub fn parse_cycle_label(text: &str, alphabet: &Alphabet) -> Result<Word> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = String::new();
    let mut i = 0;
    while i < chars.len() {
        if chars[i] != '^' {
            out.push(chars[i]);
            i += 1;
            continue;
        }
        let Some(symbol) = out.pop() else {
            return Err(Error::Parse(format!("{text:?}: '^' without a symbol")));
        };
        i += 1;
        let count: usize = match chars.get(i) {
            Some('{') => {
                let close = chars[i..]
                    .iter()
                    .position(|&c| c == '}')
                    .ok_or_else(|| Error::Parse(format!("{text:?}: missing '}}'")))?;
                let digits: String = chars[i + 1..i + close].iter().collect();
                i += close + 1;
                digits.parse().map_err(|_| Error::Parse(format!("{text:?}: bad exponent")))?
            }
            Some(c) if c.is_ascii_digit() => {
                i += 1;
                c.to_digit(10).unwrap() as usize
            }
            _ => return Err(Error::Parse(format!("{text:?}: bad exponent"))),
        };
        out.extend(std::iter::repeat_n(symbol, count));
    }
    alphabet.parse(&out)
}

/// Vertex-disjoint cycles of `dB(n)` with the vertices they leave out.
#[derive(Clone, Debug)]
pub struct CycleDecomposition {
    graph: DeBruijn,
    cycles: Vec<Cycle>,
    leftover: Vec<Word>,
    // vertex code -> cycle index, or None for leftover vertices
    owner: Vec<Option<u32>>,
    maximal: bool,
}

impl CycleDecomposition {
    pub fn graph(&self) -> &DeBruijn {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn leftover(&self) -> &[Word] {
        &self.leftover
    }

    /// Whether the decomposition has the maximum possible number of
    /// cycles, `N_m(n)`.
    pub fn is_maximal(&self) -> bool {
        self.maximal
    }

    pub(crate) fn owner(&self, code: u64) -> Option<usize> {
        self.owner[code as usize].map(|c| c as usize)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "cycles": self.cycles.iter().map(|c| c.label.to_string()).collect::<Vec<_>>(),
            "leftover": self.leftover.iter().map(Word::to_string).collect::<Vec<_>>(),
        })
    }
}

/// Checks that the labelled cycles of `dB(n)` are valid and pairwise
/// vertex-disjoint, that there are at most `N_m(n)` of them, and that a
/// maximal set covers every vertex.
pub fn validate_decomposition(
    alphabet: &Alphabet,
    labels: &[Word],
    n: usize,
    guard: u128,
) -> Result<CycleDecomposition> {
    let graph = DeBruijn::new(alphabet, n, guard)?;
    let mut owner: Vec<Option<u32>> = vec![None; graph.vertex_count() as usize];
    let mut cycles = Vec::with_capacity(labels.len());
    for (idx, label) in labels.iter().enumerate() {
        if label.alphabet() != alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let cycle = cycle_of_word(label, n)?;
        for v in &cycle.vertices {
            let slot = &mut owner[graph.code(v)? as usize];
            if let Some(other) = *slot {
                return Err(Error::OverlappingCycles {
                    first: labels[other as usize].to_string(),
                    second: label.to_string(),
                    vertex: v.to_string(),
                });
            }
            *slot = Some(idx as u32);
        }
        cycles.push(cycle);
    }
    let max = necklace_count(alphabet.size(), n);
    if BigUint::from(cycles.len()) > max {
        return Err(Error::TooManyCycles {
            found: cycles.len(),
            max: max.to_string(),
            order: n,
        });
    }
    let leftover: Vec<Word> = owner
        .iter()
        .enumerate()
        .filter(|(_, o)| o.is_none())
        .map(|(v, _)| graph.word(v as u64))
        .collect();
    let maximal = BigUint::from(cycles.len()) == max;
    if maximal && !leftover.is_empty() {
        return Err(Error::UncoveredVertices(leftover.len()));
    }
    Ok(CycleDecomposition {
        graph,
        cycles,
        leftover,
        owner,
        maximal,
    })
}

/// The decomposition of `dB(n)` into the cycles induced by necklaces,
/// each labelled by the primitive root of its least representative.
pub fn necklace_decomposition(alphabet: &Alphabet, n: usize, guard: u128) -> Result<CycleDecomposition> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    let labels: Vec<Word> = enumerate_necklaces(alphabet, n, guard)?
        .iter()
        .map(|x| primitive_root(x.representative()).map(|(r, _)| r))
        .collect::<Result<_>>()?;
    validate_decomposition(alphabet, &labels, n, guard)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin(s: &str) -> Word {
        Alphabet::binary().parse(s).unwrap()
    }

    fn names(ws: &[Word]) -> Vec<String> {
        ws.iter().map(Word::to_string).collect()
    }

    #[test]
    fn adjacency_follows_shifts() {
        let g = DeBruijn::new(&Alphabet::binary(), 3, 1 << 10).unwrap();
        let v = g.code(&bin("011")).unwrap();
        let succ: Vec<String> = g.successors(v).map(|w| g.word(w).to_string()).collect();
        assert_eq!(succ, ["110", "111"]);
        let pred: Vec<String> = g.predecessors(v).map(|w| g.word(w).to_string()).collect();
        assert_eq!(pred, ["001", "101"]);
        assert!(g.is_edge(v, g.code(&bin("111")).unwrap()));
        assert!(!g.is_edge(v, g.code(&bin("011")).unwrap()));
    }

    #[test]
    fn cycles_from_words() {
        assert_eq!(names(&cycle_of_word(&bin("0"), 6).unwrap().vertices), ["000000"]);
        let c = cycle_of_word(&bin("00000101"), 6).unwrap();
        assert_eq!(c.vertices.len(), 8);
        let g = DeBruijn::new(&Alphabet::binary(), 6, 1 << 10).unwrap();
        for i in 0..8 {
            let a = g.code(&c.vertices[i]).unwrap();
            let b = g.code(&c.vertices[(i + 1) % 8]).unwrap();
            assert!(g.is_edge(a, b));
        }
        assert_eq!(
            names(&cycle_of_word(&bin("0011"), 4).unwrap().vertices),
            ["0011", "0110", "1100", "1001"]
        );
        assert!(cycle_of_word(&bin("0101"), 3).is_err());
        assert!(cycle_of_word(&bin("0001"), 2).is_err());
    }

    #[test]
    fn label_shorthand() {
        let b = Alphabet::binary();
        assert_eq!(parse_cycle_label("0^5101", &b).unwrap(), bin("00000101"));
        assert_eq!(parse_cycle_label("0101101^4011", &b).unwrap(), bin("0101101111011"));
        assert_eq!(parse_cycle_label("0^{10}1", &b).unwrap().len(), 11);
        assert!(parse_cycle_label("^3", &b).is_err());
    }

    #[test]
    fn necklace_cycles_are_maximal() {
        for n in 1..=8 {
            let d = necklace_decomposition(&Alphabet::binary(), n, 1 << 20).unwrap();
            assert!(d.is_maximal());
            assert!(d.leftover().is_empty());
        }
    }

    #[test]
    fn overlapping_and_partial_decompositions() {
        let b = Alphabet::binary();
        let err = validate_decomposition(&b, &[bin("0011"), bin("0110")], 4, 1 << 10).unwrap_err();
        assert!(matches!(err, Error::OverlappingCycles { .. }));
        let d = validate_decomposition(&b, &[bin("0"), bin("01")], 2, 1 << 10).unwrap();
        assert!(!d.is_maximal());
        assert_eq!(names(d.leftover()), ["11"]);
        assert_eq!(
            d.to_json().to_string(),
            r#"{"cycles":["0","01"],"leftover":["11"]}"#
        );
    }
}
