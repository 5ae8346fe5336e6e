//! k-switchings: exchanging two blocks of a word delimited by matching
//! factors of length `k-1`, and the closure they generate.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// `S_{u,k}(i,j,l,m)` with 1-based indices `i < j <= l < m <= |u|-k+2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Switching {
    pub k: usize,
    pub i: usize,
    pub j: usize,
    pub l: usize,
    pub m: usize,
}

impl Switching {
    pub fn new(k: usize, i: usize, j: usize, l: usize, m: usize) -> Self {
        Switching { k, i, j, l, m }
    }

    /// Checks index bounds and the factor equalities
    /// `u[i,i+k-1) = u[l,l+k-1)` and `u[j,j+k-1) = u[m,m+k-1)`.
    pub fn validate(&self, u: &Word) -> Result<()> {
        let Switching { k, i, j, l, m } = *self;
        if k == 0 {
            return Err(Error::ZeroK);
        }
        let limit = (u.len() + 2).checked_sub(k);
        let in_bounds = 1 <= i && i < j && j <= l && l < m && limit.is_some_and(|lim| m <= lim);
        if !in_bounds {
            return Err(Error::InvalidSwitching(format!(
                "indices ({i},{j},{l},{m}) violate i < j <= l < m <= {} for |u| = {}, k = {k}",
                limit.map_or("-".to_string(), |x| x.to_string()),
                u.len()
            )));
        }
        let s = u.letters();
        let f = |p: usize| &s[p - 1..p - 1 + k - 1];
        if f(i) != f(l) {
            return Err(Error::InvalidSwitching(format!(
                "x mismatch: u[{i},{}) = {} but u[{l},{}) = {}",
                i + k - 1,
                u.slice(i, i + k - 1),
                l + k - 1,
                u.slice(l, l + k - 1)
            )));
        }
        if f(j) != f(m) {
            return Err(Error::InvalidSwitching(format!(
                "y mismatch: u[{j},{}) = {} but u[{m},{}) = {}",
                j + k - 1,
                u.slice(j, j + k - 1),
                m + k - 1,
                u.slice(m, m + k - 1)
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Switching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.i, self.j, self.l, self.m)
    }
}

/// Parses `"i,j,l,m"`; `k` is supplied separately.
pub fn parse_indices(text: &str, k: usize) -> Result<Switching> {
    let parts = text
        .split(',')
        .map(|p| usize::from_str(p.trim()).map_err(|_| Error::Parse(format!("bad switching {text:?}"))))
        .collect::<Result<Vec<_>>>()?;
    match parts[..] {
        [i, j, l, m] => Ok(Switching::new(k, i, j, l, m)),
        _ => Err(Error::Parse(format!("expected i,j,l,m, got {text:?}"))),
    }
}

fn rearrange(s: &[Letter], i: usize, j: usize, l: usize, m: usize) -> Vec<Letter> {
    let (i, j, l, m) = (i - 1, j - 1, l - 1, m - 1);
    let mut out = Vec::with_capacity(s.len());
    out.extend_from_slice(&s[..i]);
    out.extend_from_slice(&s[l..m]);
    out.extend_from_slice(&s[j..l]);
    out.extend_from_slice(&s[i..j]);
    out.extend_from_slice(&s[m..]);
    out
}

/// `u[1,i) · u[l,m) · u[j,l) · u[i,j) · u[m..]`.
pub fn apply_switching(u: &Word, s: &Switching) -> Result<Word> {
    s.validate(u)?;
    Ok(u.with_letters(rearrange(u.letters(), s.i, s.j, s.l, s.m)))
}

/// Valid `(i,j,l,m)` over letter slices, lexicographic order.
fn switching_indices(s: &[Letter], k: usize) -> Vec<(usize, usize, usize, usize)> {
    let n = s.len();
    let Some(limit) = (n + 2).checked_sub(k) else {
        return Vec::new();
    };
    // position p (1-based) carries factor s[p-1 .. p-1+k-1] for p <= limit
    let f = |p: usize| &s[p - 1..p - 1 + k - 1];
    let mut out = Vec::new();
    for i in 1..=limit {
        for j in i + 1..=limit {
            for l in j..=limit {
                if f(i) != f(l) {
                    continue;
                }
                for m in l + 1..=limit {
                    if f(j) == f(m) {
                        out.push((i, j, l, m));
                    }
                }
            }
        }
    }
    out
}

/// All valid k-switchings on `u`, in lexicographic `(i,j,l,m)` order.
pub fn enumerate_switchings(u: &Word, k: usize) -> Result<Vec<Switching>> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    Ok(switching_indices(u.letters(), k)
        .into_iter()
        .map(|(i, j, l, m)| Switching::new(k, i, j, l, m))
        .collect())
}

/// Breadth-first closure of `{u}` under k-switchings; equals `[u]_k`.
pub fn switching_class(u: &Word, k: usize) -> Result<BTreeSet<Word>> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let mut seen: HashSet<Vec<Letter>> = HashSet::from([u.letters().to_vec()]);
    let mut queue = VecDeque::from([u.letters().to_vec()]);
    while let Some(w) = queue.pop_front() {
        for (i, j, l, m) in switching_indices(&w, k) {
            let next = rearrange(&w, i, j, l, m);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().map(|l| u.with_letters(l)).collect())
}
