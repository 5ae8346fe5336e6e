use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::factors::FactorVector;
use crate::word::{Alphabet, Letter, Word};

/// Directed multigraph on words of a fixed length, with loops.
///
/// Vertices are kept in lexicographic order; edges map an ordered pair of
/// vertex indices to a positive multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    alphabet: Alphabet,
    vertices: Vec<Word>,
    edges: BTreeMap<(usize, usize), u64>,
    // k = 1: loops at ε keep their letters apart
    letter_loops: Option<Vec<u64>>,
}

impl MultiGraph {
    /// Builds a graph from `(from, to, multiplicity)` triples; zero
    /// multiplicities are dropped, repeated pairs accumulate.
    pub fn from_edges(alphabet: &Alphabet, edges: &[(Word, Word, u64)]) -> Self {
        let mut vertices: Vec<Word> = edges
            .iter()
            .filter(|e| e.2 > 0)
            .flat_map(|(a, b, _)| [a.clone(), b.clone()])
            .collect();
        vertices.sort();
        vertices.dedup();
        let index = |w: &Word| vertices.binary_search(w).expect("vertex collected");
        let mut map = BTreeMap::new();
        for (a, b, m) in edges.iter().filter(|e| e.2 > 0) {
            *map.entry((index(a), index(b))).or_insert(0) += m;
        }
        MultiGraph {
            alphabet: alphabet.clone(),
            vertices,
            edges: map,
            letter_loops: None,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: &Word) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub(crate) fn require(&self, v: &Word) -> Result<usize> {
        self.index_of(v).ok_or_else(|| Error::NotAVertex(v.to_string()))
    }

    /// `m(u, v)` by vertex index.
    pub fn multiplicity(&self, from: usize, to: usize) -> u64 {
        self.edges.get(&(from, to)).copied().unwrap_or(0)
    }

    /// `(from, to, multiplicity)` in lexicographic order of index pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.edges.iter().map(|(&(a, b), &m)| (a, b, m))
    }

    /// `(from, to, letter, multiplicity)`: each edge with the letter it
    /// appends to a word read along the path.
    pub(crate) fn labelled_edges(&self) -> Vec<(usize, usize, Letter, u64)> {
        if let Some(loops) = &self.letter_loops {
            return loops
                .iter()
                .enumerate()
                .filter(|&(_, &m)| m > 0)
                .map(|(a, &m)| (0, 0, a as Letter, m))
                .collect();
        }
        self.edges()
            .map(|(a, b, m)| (a, b, *self.vertices[b].letters().last().expect("k >= 2"), m))
            .collect()
    }

    pub fn edge_total(&self) -> u64 {
        self.edges.values().sum()
    }

    pub fn out_degree(&self, v: usize) -> u64 {
        self.edges.range((v, 0)..=(v, usize::MAX)).map(|(_, &m)| m).sum()
    }

    pub fn in_degree(&self, v: usize) -> u64 {
        self.edges
            .iter()
            .filter(|(&(_, b), _)| b == v)
            .map(|(_, &m)| m)
            .sum()
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in self.edges.keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices.iter().map(Word::to_string).collect::<Vec<_>>(),
            "edges": self.edges().map(|(a, b, m)| json!({
                "from": self.vertices[a].to_string(),
                "to": self.vertices[b].to_string(),
                "mult": m,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for (a, b, m) in self.edges() {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"×{m}\"];",
                self.vertices[a], self.vertices[b]
            );
        }
        out.push_str("}\n");
        out
    }
}

/// `G_f`: one edge `pref_{k-1}(z) -> suff_{k-1}(z)` of multiplicity `f[z]`
/// for each factor `z` with `f[z] > 0`.
pub fn build_graph(f: &FactorVector) -> MultiGraph {
    let k = f.k();
    let edges: Vec<(Word, Word, u64)> = f
        .iter()
        .map(|(z, c)| (z.prefix(k - 1), z.suffix(k - 1), c))
        .collect();
    let mut g = MultiGraph::from_edges(f.alphabet(), &edges);
    if k == 1 {
        let mut loops = vec![0; f.alphabet().size()];
        for (z, c) in f.iter() {
            loops[z.letters()[0] as usize] += c;
        }
        g.letter_loops = Some(loops);
    }
    g
}

/// Whether `g` admits an Eulerian path from `u` to `v`: the underlying graph
/// is connected and every vertex is balanced, except that for `u != v`
/// the start has one surplus out-edge and the end one surplus in-edge.
pub fn eulerian_path_feasible(g: &MultiGraph, u: &Word, v: &Word) -> Result<bool> {
    if g.is_empty() {
        return Ok(u == v);
    }
    let ui = g.require(u)?;
    let vi = g.require(v)?;
    if !g.is_connected() {
        return Ok(false);
    }
    for x in 0..g.vertex_count() {
        let out = g.out_degree(x) as i128;
        let inn = g.in_degree(x) as i128;
        let expected = if ui == vi {
            0
        } else if x == ui {
            1
        } else if x == vi {
            -1
        } else {
            0
        };
        if out - inn != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::psi;

    fn ab() -> Alphabet {
        Alphabet::latin(2).unwrap()
    }

    fn w(s: &str) -> Word {
        ab().parse(s).unwrap()
    }

    #[test]
    fn graph_of_ababaaaa() {
        let g = build_graph(&psi(&w("ababaaaa"), 2).unwrap());
        assert_eq!(g.vertices(), [w("a"), w("b")]);
        assert_eq!(g.multiplicity(0, 0), 3);
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.multiplicity(1, 0), 2);
        assert_eq!(g.multiplicity(1, 1), 0);
        assert!(eulerian_path_feasible(&g, &w("a"), &w("a")).unwrap());
        assert!(!eulerian_path_feasible(&g, &w("a"), &w("b")).unwrap());
    }

    #[test]
    fn small_graphs() {
        let g = build_graph(&psi(&w("aa"), 2).unwrap());
        assert_eq!(g.vertices(), [w("a")]);
        assert_eq!(g.multiplicity(0, 0), 1);
        assert!(eulerian_path_feasible(&g, &w("a"), &w("a")).unwrap());

        let g = build_graph(&psi(&w("aabab"), 3).unwrap());
        assert_eq!(g.vertices(), [w("aa"), w("ab"), w("ba")]);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, [(0, 1, 1), (1, 2, 1), (2, 1, 1)]);
        assert!(eulerian_path_feasible(&g, &w("aa"), &w("ab")).unwrap());
    }

    #[test]
    fn disconnected_loops_are_infeasible() {
        let g = MultiGraph::from_edges(&ab(), &[(w("a"), w("a"), 1), (w("b"), w("b"), 1)]);
        assert!(!g.is_connected());
        assert!(!eulerian_path_feasible(&g, &w("a"), &w("a")).unwrap());
        assert!(matches!(
            eulerian_path_feasible(&g, &w("ab"), &w("a")),
            Err(Error::NotAVertex(_))
        ));
    }

    #[test]
    fn exports() {
        let g = build_graph(&psi(&w("aab"), 2).unwrap());
        assert_eq!(
            g.to_json().to_string(),
            r#"{"vertices":["a","b"],"edges":[{"from":"a","to":"a","mult":1},{"from":"a","to":"b","mult":1}]}"#
        );
        assert!(g.to_dot().contains("\"a\" -> \"b\" [label=\"×1\"];"));
    }
}
