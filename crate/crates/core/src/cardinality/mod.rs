//! Exact sizes of k-abelian classes.
//!
//! The words of `[w]_k` are in bijection with the Eulerian paths of the
//! factor graph `G_{Ψ_k(w)}` from `pref_{k-1}(w)` to `suff_{k-1}(w)`.
//! Counting those paths with the BEST theorem gives
//!
//! ```text
//! |[w]_k| = det(Δ(v)) · Π_{x ∈ F_{k-1}(w)} (|w|_x - 1)! / Π_{a ∈ Σ} |w|_{xa}!
//! ```
//!
//! with `v = suff_{k-1}(w)` and `Δ` the Laplacian of the graph.

mod graph;
mod matrix;

use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub use graph::{build_graph, eulerian_path_feasible, MultiGraph};
pub use matrix::{bareiss_determinant, laplacian, IntMatrix};

use crate::error::{Error, Result};
use crate::factors::{count_occurrences, psi};
use crate::word::{Letter, Word};

/// Default edge limit for the brute-force path counter.
pub const DEFAULT_BRUTE_FORCE_EDGES: u64 = 24;

fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `|[w]_k|`, exactly.
pub fn class_size(w: &Word, k: usize) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    // a word no longer than k-1 is determined by Ψ_{|w|}
    if w.len() < k {
        return Ok(BigUint::one());
    }
    let f = psi(w, k)?;
    let g = build_graph(&f);
    let end = w.suffix(k - 1);
    let det = laplacian(&g)
        .minor_determinant(&end)?
        .to_biguint()
        .expect("Laplacian minors count arborescences");

    let letters = w.letters();
    let mut numerator = det;
    for x in g.vertices() {
        let occurrences = count_occurrences(letters, x.letters()) as u64;
        numerator *= factorial(occurrences - 1);
    }
    let denominator = f
        .iter()
        .fold(BigUint::one(), |acc, (_, c)| acc * factorial(c));
    let (q, r) = numerator.div_rem(&denominator);
    debug_assert!(r.is_zero(), "BEST count divisible by edge orderings");
    Ok(q)
}

/// Counts the Eulerian paths of `g` from `u` to `v` that differ in their
/// vertex sequence, by exhaustive recursion over the edge multiset.
/// Independent of the determinant formula; used as its oracle.
pub fn count_eulerian_paths_bruteforce(
    g: &MultiGraph,
    u: &Word,
    v: &Word,
    max_edges: u64,
) -> Result<BigUint> {
    let total = g.edge_total();
    if total > max_edges {
        return Err(Error::GuardExceeded {
            needed: total as u128,
            limit: max_edges as u128,
        });
    }
    if g.is_empty() {
        return Ok(if u == v { BigUint::one() } else { BigUint::zero() });
    }
    let start = g.require(u)?;
    let end = g.require(v)?;
    let edges = g.labelled_edges();
    let remaining: Vec<u64> = edges.iter().map(|e| e.3).collect();
    let mut memo = HashMap::new();
    Ok(count_from(start, end, &edges, remaining, total, &mut memo))
}

fn count_from(
    at: usize,
    end: usize,
    edges: &[(usize, usize, Letter, u64)],
    remaining: Vec<u64>,
    left: u64,
    memo: &mut HashMap<(usize, Vec<u64>), BigUint>,
) -> BigUint {
    if left == 0 {
        return if at == end { BigUint::one() } else { BigUint::zero() };
    }
    let key = (at, remaining);
    if let Some(c) = memo.get(&key) {
        return c.clone();
    }
    let (_, remaining) = &key;
    let mut total = BigUint::zero();
    for (e, &(a, _, _, _)) in edges.iter().enumerate() {
        if a == at && remaining[e] > 0 {
            let mut next = remaining.clone();
            next[e] -= 1;
            total += count_from(edges[e].1, end, edges, next, left - 1, memo);
        }
    }
    memo.insert(key, total.clone());
    total
}

/// The members of `[w]_k` in lexicographic order, by walking the Eulerian
/// paths of `G_{Ψ_k(w)}`. Fails when the class is larger than `limit`.
pub fn class_members(w: &Word, k: usize, limit: u128) -> Result<Vec<Word>> {
    let size = class_size(w, k)?;
    if size > BigUint::from(limit) {
        return Err(Error::GuardExceeded {
            needed: size.to_u128().unwrap_or(u128::MAX),
            limit,
        });
    }
    if w.len() < k {
        return Ok(vec![w.clone()]);
    }
    let g = build_graph(&psi(w, k)?);
    let start = g.require(&w.prefix(k - 1))?;
    let end = g.require(&w.suffix(k - 1))?;
    let edges = g.labelled_edges();
    let mut remaining: Vec<u64> = edges.iter().map(|e| e.3).collect();
    let mut current: Vec<Letter> = w.prefix(k - 1).letters().to_vec();
    let mut out = Vec::new();
    walk(start, end, &edges, &mut remaining, &mut current, w, &mut out);
    Ok(out)
}

fn walk(
    at: usize,
    end: usize,
    edges: &[(usize, usize, Letter, u64)],
    remaining: &mut [u64],
    current: &mut Vec<Letter>,
    template: &Word,
    out: &mut Vec<Word>,
) {
    if current.len() == template.len() {
        if at == end {
            out.push(template.with_letters(current.clone()));
        }
        return;
    }
    for (e, &(a, b, letter, _)) in edges.iter().enumerate() {
        if a != at || remaining[e] == 0 {
            continue;
        }
        remaining[e] -= 1;
        current.push(letter);
        walk(b, end, edges, remaining, current, template, out);
        current.pop();
        remaining[e] += 1;
    }
}
