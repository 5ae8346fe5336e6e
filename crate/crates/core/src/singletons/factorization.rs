use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::factors::{circular_factors, fractional_power, is_k_full};
use crate::periodicity::primitive_root_len;
use crate::rational::Rational;
use crate::scan::scan_filter;
use crate::singletons::is_singleton_letters;
use crate::word::{Alphabet, Letter, Word};

/// A block `r^q` of a factorization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Block {
    pub root: Word,
    pub exponent: Rational,
}

impl Block {
    pub fn expand(&self) -> Result<Word> {
        fractional_power(&self.root, self.exponent)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum JointKind {
    /// `[t]`: the word `t` sits between two blocks.
    Gap,
    /// `[t]^-1`: the blocks share `t`.
    Overlap,
}

impl JointKind {
    pub fn sign(self) -> i8 {
        match self {
            JointKind::Gap => 1,
            JointKind::Overlap => -1,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Joint {
    pub word: Word,
    pub kind: JointKind,
}

/// `t_0 · r_1^{q_1} · [t_1]^{σ_1} · r_2^{q_2} ⋯ r_s^{q_s} · t_s`.
///
/// With no blocks the whole word is the prefix, and the suffix and
/// joints are empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SingletonFactorization {
    pub prefix: Word,
    pub blocks: Vec<Block>,
    pub joints: Vec<Joint>,
    pub suffix: Word,
}

impl SingletonFactorization {
    /// Reassembles the word.
    pub fn expand(&self) -> Result<Word> {
        if self.blocks.is_empty() {
            if !self.joints.is_empty() {
                return Err(Error::InvalidFactorization("joints without blocks".into()));
            }
            return self.prefix.concat(&self.suffix);
        }
        if self.joints.len() + 1 != self.blocks.len() {
            return Err(Error::InvalidFactorization(format!(
                "{} blocks need {} joints, got {}",
                self.blocks.len(),
                self.blocks.len() - 1,
                self.joints.len()
            )));
        }
        let mut out = self.prefix.letters().to_vec();
        let mut previous = self.blocks[0].expand()?;
        out.extend_from_slice(previous.letters());
        for (joint, block) in self.joints.iter().zip(&self.blocks[1..]) {
            let next = block.expand()?;
            match joint.kind {
                JointKind::Gap => {
                    out.extend_from_slice(joint.word.letters());
                    out.extend_from_slice(next.letters());
                }
                JointKind::Overlap => {
                    let t = &joint.word;
                    if !t.is_suffix_of(&previous) || !t.is_prefix_of(&next) {
                        return Err(Error::InvalidFactorization(format!(
                            "overlap {t} does not end {previous} and start {next}"
                        )));
                    }
                    out.extend_from_slice(&next.letters()[t.len()..]);
                }
            }
            previous = next;
        }
        out.extend_from_slice(self.suffix.letters());
        Ok(self.prefix.with_letters(out))
    }

    /// 1-based `(start, end)` of each block's expansion in the reassembled
    /// word, `end` exclusive.
    pub fn block_spans(&self) -> Result<Vec<(usize, usize)>> {
        let mut spans = Vec::with_capacity(self.blocks.len());
        let mut at = self.prefix.len() + 1;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                let joint = &self.joints[i - 1];
                match joint.kind {
                    JointKind::Gap => at += joint.word.len(),
                    JointKind::Overlap => at -= joint.word.len(),
                }
            }
            let len = block.expand()?.len();
            spans.push((at, at + len));
            at += len;
        }
        Ok(spans)
    }

    /// Checks the structural conditions of a k-abelian singleton
    /// factorization: k-full roots, `q ≥ 2 + (k-1)/|r|`, pairwise disjoint
    /// circular factor sets, overlaps of length at most `k-2`, and that the
    /// pieces fit together.
    pub fn validate(&self, k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        let bad = |msg: String| Err(Error::InvalidFactorization(msg));
        let mut seen: Vec<BTreeSet<Word>> = Vec::new();
        for block in &self.blocks {
            let r = &block.root;
            if !is_k_full(r, k)? {
                return bad(format!("root {r} is not {k}-full"));
            }
            let len = block.exponent.times(r.len()).ok_or_else(|| Error::NonIntegralLength {
                exponent: block.exponent.to_string(),
                root_len: r.len(),
            })?;
            if len < 2 * r.len() + k - 1 {
                return bad(format!("exponent {} of {r} is below 2 + {}/{}", block.exponent, k - 1, r.len()));
            }
            let factors = circular_factors(r, k - 1)?;
            if let Some(other) = seen.iter().position(|s| !s.is_disjoint(&factors)) {
                return bad(format!("root {r} shares a factor with root {}", self.blocks[other].root));
            }
            seen.push(factors);
        }
        for joint in &self.joints {
            if joint.kind == JointKind::Overlap && joint.word.len() + 2 > k {
                return bad(format!("overlap {} is longer than k-2 = {}", joint.word, k as isize - 2));
            }
        }
        self.expand().map(|_| ())
    }

    /// The type: roots, fractional parts, joint words `t_0 … t_s` and the
    /// signs of the inner joints.
    pub fn singleton_type(&self) -> SingletonType {
        if self.blocks.is_empty() {
            return SingletonType::Trivial;
        }
        let mut joints = vec![self.prefix.clone()];
        joints.extend(self.joints.iter().map(|j| j.word.clone()));
        joints.push(self.suffix.clone());
        SingletonType::Structured {
            roots: self.blocks.iter().map(|b| b.root.clone()).collect(),
            fractions: self.blocks.iter().map(|b| b.exponent.fract()).collect(),
            joints,
            signs: self.joints.iter().map(|j| j.kind.sign()).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "prefix": self.prefix.to_string(),
            "blocks": self.blocks.iter().map(|b| json!({
                "root": b.root.to_string(),
                "exponent": b.exponent.to_string(),
            })).collect::<Vec<_>>(),
            "joints": self.joints.iter().map(|j| json!({
                "word": j.word.to_string(),
                "sign": j.kind.sign(),
            })).collect::<Vec<_>>(),
            "suffix": self.suffix.to_string(),
        })
    }
}

fn write_block(f: &mut fmt::Formatter<'_>, root: &Word, exponent: &str) -> fmt::Result {
    if root.len() == 1 {
        write!(f, "{root}^{exponent}")
    } else {
        write!(f, "({root})^{exponent}")
    }
}

fn write_joint(f: &mut fmt::Formatter<'_>, word: &Word, kind: JointKind) -> fmt::Result {
    match kind {
        JointKind::Gap => write!(f, " [{word}] "),
        JointKind::Overlap => write!(f, " [{word}]^-1 "),
    }
}

/// Bracket notation, e.g. `0^10 [00]^-1 (0011)^7/2 [] (01)^13/2`.
impl fmt::Display for SingletonFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "{}{}", self.prefix, self.suffix);
        }
        if !self.prefix.is_empty() {
            write!(f, "{} ", self.prefix)?;
        }
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                let joint = &self.joints[i - 1];
                write_joint(f, &joint.word, joint.kind)?;
            }
            write_block(f, &block.root, &block.exponent.to_string())?;
        }
        if !self.suffix.is_empty() {
            write!(f, " {}", self.suffix)?;
        }
        Ok(())
    }
}

/// The shape of a singleton once integer parts of exponents are dropped.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum SingletonType {
    /// Singletons without any factor of length `k-1` occurring three times.
    Trivial,
    Structured {
        roots: Vec<Word>,
        fractions: Vec<Rational>,
        /// `t_0, t_1, …, t_s`.
        joints: Vec<Word>,
        /// `σ_1, …, σ_{s-1}`.
        signs: Vec<i8>,
    },
}

impl SingletonType {
    /// Total length of the roots.
    pub fn root_length(&self) -> usize {
        match self {
            SingletonType::Trivial => 0,
            SingletonType::Structured { roots, .. } => roots.iter().map(Word::len).sum(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            SingletonType::Trivial => json!("trivial"),
            SingletonType::Structured {
                roots,
                fractions,
                joints,
                signs,
            } => json!({
                "roots": roots.iter().map(Word::to_string).collect::<Vec<_>>(),
                "fractions": fractions.iter().map(Rational::to_string).collect::<Vec<_>>(),
                "joints": joints.iter().map(Word::to_string).collect::<Vec<_>>(),
                "signs": signs,
            }),
        }
    }
}

/// Like the bracket notation, with `n` standing for the integer part of
/// each exponent: `0 (01)^n+1/2 001111`.
impl fmt::Display for SingletonType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let SingletonType::Structured {
            roots,
            fractions,
            joints,
            signs,
        } = self
        else {
            return write!(f, "trivial");
        };
        let s = roots.len();
        if !joints[0].is_empty() {
            write!(f, "{} ", joints[0])?;
        }
        for i in 0..s {
            if i > 0 {
                let kind = if signs[i - 1] < 0 { JointKind::Overlap } else { JointKind::Gap };
                write_joint(f, &joints[i], kind)?;
            }
            let exponent = if fractions[i].is_integer() {
                "n".to_string()
            } else {
                format!("n+{}", fractions[i])
            };
            write_block(f, &roots[i], &exponent)?;
        }
        if !joints[s].is_empty() {
            write!(f, " {}", joints[s])?;
        }
        Ok(())
    }
}

/// Maximal runs, as 0-based `(start, end, period)`, hosting the factors of
/// length `k-1` that occur at least three times.
fn block_runs(s: &[Letter], k: usize) -> Result<Vec<(usize, usize, usize)>> {
    let n = s.len();
    if k == 1 {
        // ε occurs n+1 times
        return Ok(if n >= 2 { vec![(0, n, 1)] } else { Vec::new() });
    }
    let h = k - 1;
    if n < h {
        return Ok(Vec::new());
    }
    let mut positions: HashMap<&[Letter], Vec<usize>> = HashMap::new();
    for p in 0..=n - h {
        positions.entry(&s[p..p + h]).or_default().push(p);
    }
    let mut runs = Vec::new();
    for ps in positions.values().filter(|ps| ps.len() >= 3) {
        let period = ps[1] - ps[0];
        let mut begin = ps[0];
        let mut end = ps[ps.len() - 1] + h;
        while begin > 0 && s[begin - 1] == s[begin - 1 + period] {
            begin -= 1;
        }
        while end < n && s[end] == s[end - period] {
            end += 1;
        }
        if primitive_root_len(&s[begin..begin + period]) != period {
            return Err(Error::InvalidFactorization(format!(
                "return of length {period} is not primitive"
            )));
        }
        runs.push((begin, end, period));
    }
    runs.sort_unstable();
    runs.dedup();
    Ok(runs)
}

/// The factorization of a singleton into its k-full runs.
///
/// Blocks are the maximal runs containing the factors of length `k-1`
/// that occur at least three times, ordered by position; between two
/// blocks there is either a gap word or an overlap of length at most
/// `k-2`.
pub fn factorize_singleton(u: &Word, k: usize) -> Result<SingletonFactorization> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let s = u.letters();
    if !is_singleton_letters(s, k) {
        return Err(Error::NotSingleton(u.to_string()));
    }
    let runs = block_runs(s, k)?;
    let Some(&(first, _, _)) = runs.first() else {
        return Ok(SingletonFactorization {
            prefix: u.clone(),
            blocks: Vec::new(),
            joints: Vec::new(),
            suffix: Word::empty(u.alphabet()),
        });
    };
    let mut blocks = Vec::with_capacity(runs.len());
    let mut joints = Vec::with_capacity(runs.len() - 1);
    for (i, &(begin, end, period)) in runs.iter().enumerate() {
        if i > 0 {
            let (prev_begin, prev_end, _) = runs[i - 1];
            if begin <= prev_begin || end <= prev_end {
                return Err(Error::InvalidFactorization(format!(
                    "runs at {}..{} and {}..{} are nested",
                    prev_begin + 1,
                    prev_end + 1,
                    begin + 1,
                    end + 1
                )));
            }
            let joint = if prev_end <= begin {
                Joint {
                    word: u.with_letters(s[prev_end..begin].to_vec()),
                    kind: JointKind::Gap,
                }
            } else {
                if prev_end - begin + 2 > k {
                    return Err(Error::InvalidFactorization(format!(
                        "runs overlap by {} letters",
                        prev_end - begin
                    )));
                }
                Joint {
                    word: u.with_letters(s[begin..prev_end].to_vec()),
                    kind: JointKind::Overlap,
                }
            };
            joints.push(joint);
        }
        blocks.push(Block {
            root: u.with_letters(s[begin..begin + period].to_vec()),
            exponent: Rational::new((end - begin) as u64, period as u64)?,
        });
    }
    let last_end = runs[runs.len() - 1].1;
    Ok(SingletonFactorization {
        prefix: u.with_letters(s[..first].to_vec()),
        blocks,
        joints,
        suffix: u.with_letters(s[last_end..].to_vec()),
    })
}

pub fn expand_factorization(f: &SingletonFactorization) -> Result<Word> {
    f.expand()
}

pub fn type_of(u: &Word, k: usize) -> Result<SingletonType> {
    Ok(factorize_singleton(u, k)?.singleton_type())
}

/// The distinct types among singletons of length `n`.
pub fn enumerate_types(n: usize, k: usize, alphabet: &Alphabet, guard: u128) -> Result<BTreeSet<SingletonType>> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let types = scan_filter(alphabet, n, guard, |s| {
        if !is_singleton_letters(s, k) {
            return None;
        }
        let u = Word::from_letters_unchecked(alphabet, s.to_vec());
        Some(factorize_singleton(&u, k).map(|f| f.singleton_type()))
    })?;
    types.into_iter().collect()
}

enum Token {
    Bare(String),
    Block(String, String),
    Joint(String, JointKind),
}

fn read_group(chars: &[char], at: &mut usize, close: char) -> Result<String> {
    let start = *at;
    while *at < chars.len() && chars[*at] != close {
        *at += 1;
    }
    if *at == chars.len() {
        return Err(Error::Parse(format!("missing {close:?}")));
    }
    let inner: String = chars[start..*at].iter().collect();
    *at += 1;
    Ok(inner)
}

fn read_exponent(chars: &[char], at: &mut usize) -> Result<String> {
    if chars.get(*at) != Some(&'^') {
        return Err(Error::Parse("expected '^' after a block".into()));
    }
    *at += 1;
    match chars.get(*at) {
        Some('{') => {
            *at += 1;
            read_group(chars, at, '}')
        }
        Some('(') => {
            *at += 1;
            read_group(chars, at, ')')
        }
        _ => {
            let start = *at;
            while *at < chars.len() && (chars[*at].is_ascii_digit() || chars[*at] == '/' || chars[*at] == '-') {
                *at += 1;
            }
            Ok(chars[start..*at].iter().collect())
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut at = 0;
    while at < chars.len() {
        match chars[at] {
            c if c.is_whitespace() => at += 1,
            '[' => {
                at += 1;
                let word = read_group(&chars, &mut at, ']')?;
                let kind = if chars.get(at) == Some(&'^') {
                    match read_exponent(&chars, &mut at)?.trim_matches(|c| c == '(' || c == ')') {
                        "-1" => JointKind::Overlap,
                        "1" => JointKind::Gap,
                        other => return Err(Error::Parse(format!("joint exponent {other:?}"))),
                    }
                } else {
                    JointKind::Gap
                };
                tokens.push(Token::Joint(word, kind));
            }
            '(' => {
                at += 1;
                let root = read_group(&chars, &mut at, ')')?;
                let exponent = read_exponent(&chars, &mut at)?;
                tokens.push(Token::Block(root, exponent));
            }
            _ => {
                let start = at;
                while at < chars.len() && !"[(^".contains(chars[at]) && !chars[at].is_whitespace() {
                    at += 1;
                }
                let mut word: String = chars[start..at].iter().collect();
                if chars.get(at) == Some(&'^') {
                    // a single-letter root: the last symbol before '^'
                    let root = word.pop().expect("non-empty bare run").to_string();
                    if !word.is_empty() {
                        tokens.push(Token::Bare(word));
                    }
                    let exponent = read_exponent(&chars, &mut at)?;
                    tokens.push(Token::Block(root, exponent));
                } else {
                    tokens.push(Token::Bare(word));
                }
            }
        }
    }
    Ok(tokens)
}

fn parse_word(alphabet: &Alphabet, text: &str) -> Result<Word> {
    if text == "ε" {
        Ok(Word::empty(alphabet))
    } else {
        alphabet.parse(text)
    }
}

/// Parses the bracket notation of [`SingletonFactorization`]'s `Display`.
/// Adjacent blocks without a joint get the empty gap; exponents are read
/// greedily, so `0^5 101` needs the space (or braces, `0^{5}101`).
pub fn parse_factorization(text: &str, alphabet: &Alphabet) -> Result<SingletonFactorization> {
    let mut prefix = Vec::new();
    let mut suffix = Vec::new();
    let mut blocks = Vec::new();
    let mut joints = Vec::new();
    let mut pending: Option<Joint> = None;
    for token in tokenize(text)? {
        match token {
            Token::Bare(w) => {
                let w = parse_word(alphabet, &w)?;
                if pending.is_some() {
                    return Err(Error::Parse(format!("word {w} follows a joint")));
                }
                if blocks.is_empty() {
                    prefix.extend_from_slice(w.letters());
                } else {
                    suffix.extend_from_slice(w.letters());
                }
            }
            Token::Joint(w, kind) => {
                if blocks.is_empty() || pending.is_some() || !suffix.is_empty() {
                    return Err(Error::Parse(format!("misplaced joint [{w}]")));
                }
                pending = Some(Joint {
                    word: parse_word(alphabet, &w)?,
                    kind,
                });
            }
            Token::Block(root, exponent) => {
                if !suffix.is_empty() {
                    return Err(Error::Parse(format!("block ({root}) follows a bare word")));
                }
                let block = Block {
                    root: parse_word(alphabet, &root)?,
                    exponent: exponent.parse()?,
                };
                if !blocks.is_empty() {
                    joints.push(pending.take().unwrap_or_else(|| Joint {
                        word: Word::empty(alphabet),
                        kind: JointKind::Gap,
                    }));
                }
                blocks.push(block);
            }
        }
    }
    if pending.is_some() {
        return Err(Error::Parse("trailing joint".into()));
    }
    Ok(SingletonFactorization {
        prefix: Word::from_letters(alphabet, prefix)?,
        blocks,
        joints,
        suffix: Word::from_letters(alphabet, suffix)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin() -> Alphabet {
        Alphabet::binary()
    }

    fn w(s: &str) -> Word {
        bin().parse(s).unwrap()
    }

    #[test]
    fn worked_factorizations() {
        let f = factorize_singleton(&w("0110110110010010010"), 4).unwrap();
        assert_eq!(f.to_string(), "(011)^10/3 [10]^-1 (100)^11/3");
        let f = factorize_singleton(&w("0010101010001111"), 4).unwrap();
        assert_eq!(f.to_string(), "0 (01)^9/2 001111");
        f.validate(4).unwrap();
    }

    #[test]
    fn five_abelian_example() {
        let f = parse_factorization("0^10 [00]^-1 (0011)^7/2 [] (01)^13/2", &bin()).unwrap();
        let u = f.expand().unwrap();
        assert_eq!(u.len(), 35);
        assert!(is_singleton_letters(u.letters(), 5));
        let g = factorize_singleton(&u, 5).unwrap();
        assert_eq!(g, f);
        assert_eq!(g.to_string(), "0^10 [00]^-1 (0011)^7/2 [] (01)^13/2");
        g.validate(5).unwrap();
        assert_eq!(g.block_spans().unwrap(), [(1, 11), (9, 23), (23, 36)]);
    }

    #[test]
    fn powers_of_a_letter() {
        let f = factorize_singleton(&w("00000"), 3).unwrap();
        assert_eq!(f.to_string(), "0^5");
        assert!(f.prefix.is_empty() && f.suffix.is_empty());
        assert_eq!(type_of(&w("0000"), 2).unwrap(), type_of(&w("00000"), 2).unwrap());
    }

    #[test]
    fn short_singletons_are_trivial() {
        let f = factorize_singleton(&w("01"), 3).unwrap();
        assert!(f.blocks.is_empty());
        assert_eq!(f.prefix, w("01"));
        assert_eq!(f.singleton_type(), SingletonType::Trivial);
        assert!(matches!(factorize_singleton(&w("001011"), 2), Err(Error::NotSingleton(_))));
    }

    #[test]
    fn parses_braced_exponents() {
        let ternary = Alphabet::new(['0', '1', '2']).unwrap();
        let f = parse_factorization("2(01)^3[2](0110)^{15/4}[11]^{(-1)}1^6", &ternary).unwrap();
        assert_eq!(f.prefix.to_string(), "2");
        assert_eq!(f.blocks.len(), 3);
        assert_eq!(f.joints[1].kind, JointKind::Overlap);
        assert_eq!(f.expand().unwrap().to_string(), "201010120110011001100111111");
        let f = parse_factorization("0 (01)^9/2 001111", &bin()).unwrap();
        assert_eq!(f.expand().unwrap(), w("0010101010001111"));
        assert!(parse_factorization("(01)^2 [0]^-1 (10)^2", &bin()).unwrap().expand().is_err());
        assert!(parse_factorization("(01)^5/3", &bin()).unwrap().expand().is_err());
        assert!(parse_factorization("[0] (01)^2", &bin()).is_err());
    }

    #[test]
    fn json_shape() {
        let f = factorize_singleton(&w("0110110110010010010"), 4).unwrap();
        assert_eq!(
            f.to_json().to_string(),
            r#"{"prefix":"","blocks":[{"root":"011","exponent":"10/3"},{"root":"100","exponent":"11/3"}],"joints":[{"word":"10","sign":-1}],"suffix":""}"#
        );
    }

    #[test]
    fn type_display() {
        let t = type_of(&w("0010101010001111"), 4).unwrap();
        assert_eq!(t.to_string(), "0 (01)^n+1/2 001111");
        assert_eq!(t.root_length(), 2);
    }
}
