use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::cardinality::MultiGraph;
use crate::error::{Error, Result};
use crate::necklace::debruijn::{necklace_decomposition, CycleDecomposition};
use crate::word::Word;

/// A graph whose vertices are blocks of a partition of another graph's
/// vertices: one block per cycle and one per leftover vertex. Two blocks
/// are joined when some edge leads from one to the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    names: Vec<String>,
    members: Vec<Vec<Word>>,
    arcs: BTreeSet<(usize, usize)>,
    undirected: bool,
}

impl QuotientGraph {
    /// Builds a quotient from named blocks and directed arcs between
    /// block indices. Self-arcs are dropped.
    pub fn new(
        names: Vec<String>,
        members: Vec<Vec<Word>>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
        undirected: bool,
    ) -> Self {
        assert_eq!(names.len(), members.len());
        let arcs = arcs.into_iter().filter(|(a, b)| a != b).collect();
        QuotientGraph {
            names,
            members,
            arcs,
            undirected,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, block: usize) -> &str {
        &self.names[block]
    }

    pub fn members(&self, block: usize) -> &[Word] {
        &self.members[block]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Whether edges are read without direction, as for maximal
    /// decompositions.
    pub fn is_undirected(&self) -> bool {
        self.undirected
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    /// The edges as unordered pairs `(a, b)` with `a < b`.
    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        self.arcs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.arcs.contains(&(a, b)) || (self.undirected && self.arcs.contains(&(b, a)))
    }

    /// Blocks reachable in one step from `block`.
    pub fn neighbors(&self, block: usize) -> Vec<usize> {
        let mut out: BTreeSet<usize> = self
            .arcs
            .range((block, 0)..=(block, usize::MAX))
            .map(|&(_, b)| b)
            .collect();
        if self.undirected {
            out.extend(self.arcs.iter().filter(|&&(_, b)| b == block).map(|&(a, _)| a));
        }
        out.into_iter().collect()
    }

    /// Whether `order` lists distinct blocks with consecutive ones joined.
    pub fn is_path(&self, order: &[usize]) -> bool {
        let distinct: BTreeSet<usize> = order.iter().copied().collect();
        distinct.len() == order.len()
            && order.iter().all(|&b| b < self.len())
            && order.windows(2).all(|p| self.has_edge(p[0], p[1]))
    }

    pub fn is_hamiltonian_path(&self, order: &[usize]) -> bool {
        order.len() == self.len() && self.is_path(order)
    }

    pub fn to_dot(&self) -> String {
        let (kind, arrow) = if self.undirected { ("graph", "--") } else { ("digraph", "->") };
        let mut out = format!("{kind} G {{\n");
        for name in &self.names {
            let _ = writeln!(out, "  \"{name}\";");
        }
        let pairs: Vec<(usize, usize)> = if self.undirected {
            self.edges().into_iter().collect()
        } else {
            self.arcs.iter().copied().collect()
        };
        for (a, b) in pairs {
            let _ = writeln!(out, "  \"{}\" {arrow} \"{}\";", self.names[a], self.names[b]);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        let pairs: Vec<(usize, usize)> = if self.undirected {
            self.edges().into_iter().collect()
        } else {
            self.arcs.iter().copied().collect()
        };
        json!({
            "directed": !self.undirected,
            "blocks": self.names.iter().zip(&self.members).map(|(n, m)| json!({
                "name": n,
                "members": m.iter().map(Word::to_string).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "edges": pairs.iter().map(|&(a, b)| json!([self.names[a], self.names[b]])).collect::<Vec<_>>(),
        })
    }
}

/// `dB(n)/C`: cycle blocks in the order given, then leftover vertices in
/// lexicographic order. Undirected when the decomposition is maximal.
pub fn quotient(decomp: &CycleDecomposition) -> QuotientGraph {
    let g = decomp.graph();
    let cycles = decomp.cycles().len();
    let mut names: Vec<String> = decomp.cycles().iter().map(|c| c.label.to_string()).collect();
    let mut members: Vec<Vec<Word>> = decomp.cycles().iter().map(|c| c.vertices.clone()).collect();
    let mut leftover_block = BTreeMap::new();
    for (i, v) in decomp.leftover().iter().enumerate() {
        names.push(v.to_string());
        members.push(vec![v.clone()]);
        leftover_block.insert(g.code(v).expect("vertex of the graph"), cycles + i);
    }
    let block_of = |code: u64| decomp.owner(code).unwrap_or_else(|| leftover_block[&code]);
    let mut arcs = BTreeSet::new();
    for v in 0..g.vertex_count() {
        let a = block_of(v);
        for w in g.successors(v) {
            arcs.insert((a, block_of(w)));
        }
    }
    QuotientGraph::new(names, members, arcs, decomp.is_maximal())
}

/// The quotient of an arbitrary multigraph by named vertex-disjoint
/// cycles, given as vertex sets. Leftover vertices follow in order.
pub fn quotient_of_graph(g: &MultiGraph, cycles: &[(String, Vec<Word>)], undirected: bool) -> Result<QuotientGraph> {
    let mut block = vec![usize::MAX; g.vertex_count()];
    let mut names = Vec::new();
    let mut members = Vec::new();
    for (i, (name, vertices)) in cycles.iter().enumerate() {
        for v in vertices {
            let idx = g.index_of(v).ok_or_else(|| Error::NotAVertex(v.to_string()))?;
            if block[idx] != usize::MAX {
                return Err(Error::OverlappingCycles {
                    first: cycles[block[idx]].0.clone(),
                    second: name.clone(),
                    vertex: v.to_string(),
                });
            }
            block[idx] = i;
        }
        names.push(name.clone());
        members.push(vertices.clone());
    }
    for (idx, v) in g.vertices().iter().enumerate() {
        if block[idx] == usize::MAX {
            block[idx] = names.len();
            names.push(v.to_string());
            members.push(vec![v.clone()]);
        }
    }
    let arcs: Vec<(usize, usize)> = g.edges().map(|(a, b, _)| (block[a], block[b])).collect();
    Ok(QuotientGraph::new(names, members, arcs, undirected))
}

/// `NG(n)`: `dB(n)` modulo the necklace cycles, blocks named by least
/// representatives in lexicographic order.
pub fn necklace_graph(alphabet: &crate::word::Alphabet, n: usize, guard: u128) -> Result<QuotientGraph> {
    let decomp = necklace_decomposition(alphabet, n, guard)?;
    let mut q = quotient(&decomp);
    for (name, members) in q.names.iter_mut().zip(&q.members) {
        *name = members.iter().min().expect("non-empty cycle").to_string();
    }
    Ok(q)
}

/// Splits the blocks of a binary necklace graph of even order by the
/// parity of the number of `1`s: `(even, odd)`. Fails if an edge joins two
/// blocks of the same parity.
pub fn bipartition(g: &QuotientGraph, n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    let mut parity = Vec::with_capacity(g.len());
    for b in 0..g.len() {
        let rep = &g.members(b)[0];
        if rep.alphabet().size() != 2 {
            return Err(Error::NotBinary);
        }
        parity.push(rep.letters().iter().filter(|&&a| a == 1).count() % 2);
    }
    for &(a, b) in g.arcs() {
        if parity[a] == parity[b] {
            return Err(Error::NotBipartite(g.name(a).to_string(), g.name(b).to_string()));
        }
    }
    let even = (0..g.len()).filter(|&b| parity[b] == 0).collect();
    let odd = (0..g.len()).filter(|&b| parity[b] == 1).collect();
    Ok((even, odd))
}
