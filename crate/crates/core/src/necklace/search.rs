//! Backtracking search for Hamiltonian and longest paths in quotient
//! graphs.
//!
//! The search extends a path one block at a time, trying the neighbours
//! with the fewest free neighbours first. A branch is cut when the
//! unvisited blocks cannot all be reached, when a free block has too few
//! free links to sit on the rest of the path, or, in bipartite graphs,
//! when the part sizes make the required alternation impossible.

use crate::necklace::quotient::QuotientGraph;

/// Default node budget.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of search nodes before giving up.
    pub budget: u64,
    /// Block every path must start from.
    pub start: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            start: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathSearch {
    Found(Vec<usize>),
    /// The search was exhaustive and no Hamiltonian path exists.
    Absent,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongestPath {
    pub path: Vec<usize>,
    /// Search nodes visited.
    pub nodes: u64,
    /// Whether `path` is proven longest: either the search finished or
    /// the path reached `upper_bound`.
    pub complete: bool,
    /// Upper bound on the number of vertices of any path.
    pub upper_bound: usize,
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Bits::new(n);
        for i in 0..n {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_count(&self, other: &Bits) -> usize {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            })
        })
    }
}

struct Searcher {
    n: usize,
    out: Vec<Bits>,
    und: Vec<Bits>,
    undirected: bool,
    color: Option<Vec<bool>>,
    budget: u64,
    nodes: u64,
}

enum Step {
    Found,
    Fail,
    Budget,
}

impl Searcher {
    fn new(g: &QuotientGraph, budget: u64) -> Self {
        let n = g.len();
        let mut out = vec![Bits::new(n); n];
        let mut und = vec![Bits::new(n); n];
        for &(a, b) in g.arcs() {
            out[a].set(b);
            und[a].set(b);
            und[b].set(a);
            if g.is_undirected() {
                out[b].set(a);
            }
        }
        let color = two_coloring(&und);
        Searcher {
            n,
            out,
            und,
            undirected: g.is_undirected(),
            color: if g.is_undirected() { color } else { None },
            budget,
            nodes: 0,
        }
    }

    /// Blocks of `free` reachable from `seeds` through `free`.
    fn reach(&self, seeds: &Bits, free: &Bits) -> Bits {
        let mut seen = seeds.and(free);
        let mut frontier: Vec<usize> = seen.iter().collect();
        while let Some(v) = frontier.pop() {
            for w in self.und[v].and(free).iter() {
                if !seen.get(w) {
                    seen.set(w);
                    frontier.push(w);
                }
            }
        }
        seen
    }

    fn connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seed = Bits::new(self.n);
        seed.set(0);
        self.reach(&seed, &Bits::full(self.n)).count() == self.n
    }

    /// Most vertices a path alternating between the parts can take from
    /// `region`, with its first vertex opposite `cur`.
    fn alternation_bound(&self, cur: usize, region: &Bits) -> usize {
        let Some(color) = &self.color else {
            return region.count();
        };
        let same = region.iter().filter(|&v| color[v] == color[cur]).count();
        let opposite = region.count() - same;
        if opposite > same {
            2 * same + 1
        } else {
            2 * opposite
        }
    }

    fn whole_graph_bound(&self) -> usize {
        match &self.color {
            Some(color) if self.n > 0 => {
                let a = color.iter().filter(|&&c| c).count();
                let b = self.n - a;
                if a == b {
                    self.n
                } else {
                    2 * a.min(b) + 1
                }
            }
            _ => self.n,
        }
    }

    fn ordered_candidates(&self, cur: usize, free: &Bits) -> Vec<usize> {
        let mut cand: Vec<(usize, usize)> = self.out[cur]
            .and(free)
            .iter()
            .map(|w| (self.out[w].and_count(free), w))
            .collect();
        cand.sort_unstable();
        cand.into_iter().map(|(_, w)| w).collect()
    }

    fn hamiltonian(&mut self, cur: usize, free: &mut Bits, path: &mut Vec<usize>) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::Budget;
        }
        let remaining = free.count();
        if remaining == 0 {
            return Step::Found;
        }
        let next = self.out[cur].and(free);
        if next.is_empty() || self.reach(&next, free).count() != remaining {
            return Step::Fail;
        }
        if self.undirected {
            let mut ends = 0;
            for v in free.iter() {
                let links = self.out[v].and_count(free) + self.out[v].get(cur) as usize;
                if links == 0 {
                    return Step::Fail;
                }
                if links == 1 {
                    ends += 1;
                }
            }
            if remaining >= 2 && ends > 1 {
                return Step::Fail;
            }
            if self.alternation_bound(cur, free) < remaining {
                return Step::Fail;
            }
        }
        for w in self.ordered_candidates(cur, free) {
            free.clear(w);
            path.push(w);
            match self.hamiltonian(w, free, path) {
                Step::Found => return Step::Found,
                Step::Budget => return Step::Budget,
                Step::Fail => {}
            }
            path.pop();
            free.set(w);
        }
        Step::Fail
    }

    fn longest(&mut self, cur: usize, free: &mut Bits, path: &mut Vec<usize>, best: &mut Vec<usize>, cap: usize) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        if path.len() > best.len() {
            best.clone_from(path);
            if best.len() >= cap {
                return true;
            }
        }
        let next = self.out[cur].and(free);
        if next.is_empty() {
            return true;
        }
        let region = self.reach(&next, free);
        if path.len() + self.alternation_bound(cur, &region) <= best.len() {
            return true;
        }
        for w in self.ordered_candidates(cur, free) {
            free.clear(w);
            path.push(w);
            let keep_going = self.longest(w, free, path, best, cap);
            path.pop();
            free.set(w);
            if !keep_going || best.len() >= cap {
                return keep_going;
            }
        }
        true
    }

    fn starts(&self, given: Option<usize>) -> Vec<usize> {
        if let Some(s) = given {
            return vec![s];
        }
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (self.und[v].count(), v));
        order
    }
}

fn two_coloring(und: &[Bits]) -> Option<Vec<bool>> {
    let n = und.len();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let c = color[v].unwrap();
            for w in und[v].iter() {
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        stack.push(w);
                    }
                    Some(d) if d == c => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

/// Searches for a path through every block. For undirected graphs the
/// answer [`PathSearch::Absent`] is a proof of non-existence.
pub fn hamiltonian_path(g: &QuotientGraph, options: SearchOptions) -> PathSearch {
    let mut s = Searcher::new(g, options.budget);
    if s.n == 0 {
        return PathSearch::Found(Vec::new());
    }
    if !s.connected() || s.whole_graph_bound() < s.n {
        return PathSearch::Absent;
    }
    let mut starts = s.starts(options.start);
    if options.start.is_none() && s.undirected {
        let leaves: Vec<usize> = (0..s.n).filter(|&v| s.und[v].count() == 1).collect();
        if leaves.len() > 2 {
            return PathSearch::Absent;
        }
        // a leaf must end the path; by symmetry start there
        if let Some(&leaf) = leaves.first() {
            starts = vec![leaf];
        }
    }
    for start in starts {
        let mut free = Bits::full(s.n);
        free.clear(start);
        let mut path = vec![start];
        match s.hamiltonian(start, &mut free, &mut path) {
            Step::Found => return PathSearch::Found(path),
            Step::Budget => return PathSearch::BudgetExceeded,
            Step::Fail => {}
        }
    }
    PathSearch::Absent
}

/// Finds a path with the most blocks, stopping early once it meets the
/// upper bound (the block count, or the part-size bound for bipartite
/// undirected graphs).
pub fn longest_path(g: &QuotientGraph, options: SearchOptions) -> LongestPath {
    let mut s = Searcher::new(g, options.budget);
    let cap = s.whole_graph_bound();
    let mut best = Vec::new();
    let mut finished = true;
    for start in s.starts(options.start) {
        let mut free = Bits::full(s.n);
        free.clear(start);
        let mut path = vec![start];
        if !s.longest(start, &mut free, &mut path, &mut best, cap) {
            finished = false;
            break;
        }
        if best.len() >= cap {
            break;
        }
    }
    LongestPath {
        complete: finished || best.len() >= cap,
        path: best,
        nodes: s.nodes.min(s.budget),
        upper_bound: cap,
    }
}
