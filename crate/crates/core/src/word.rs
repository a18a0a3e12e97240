//! Words over positive-integer alphabets, morphisms from unknowns to words,
//! primitive roots and combinatorial rank.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unknown `x_{i+1}`, stored by its zero-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Var(pub usize);

impl Var {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0 + 1)
    }
}

/// A finite word whose letters are positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Word of `len` copies of `letter`.
    pub fn repeat_letter(letter: u32, len: usize) -> Result<Self> {
        Word::new(vec![letter; len])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of occurrences of `letter`.
    pub fn count(&self, letter: u32) -> usize {
        self.0.iter().filter(|&&a| a == letter).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn push_word(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    /// Factor `[start, end)`.
    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Letter at position `i` of the infinite power `self^ω`.
    pub(crate) fn omega_letter(&self, i: usize) -> u32 {
        self.0[i % self.0.len()]
    }

    /// Whether `self` has period `p` (`w[i] = w[i + p]` wherever defined).
    fn has_period(&self, p: usize) -> bool {
        self.0.iter().zip(&self.0[p..]).all(|(a, b)| a == b)
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_empty() && primitive_root(self).map(|r| r.len() == self.len()).unwrap_or(false)
    }
}

impl From<Word> for Vec<u32> {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl TryFrom<Vec<u32>> for Word {
    type Error = Error;

    fn try_from(letters: Vec<u32>) -> Result<Self> {
        Word::new(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("eps");
        }
        if self.0.iter().all(|&a| a <= 9) {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            f.write_str("[")?;
            for (i, a) in self.0.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str("]")
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts a string of digits `1`-`9` (`"1212"`), a bracketed list of
    /// positive integers (`"[10,2,3]"`), or `eps` / `ε` / `[]` for the empty
    /// word.
    fn from_str(s: &str) -> Result<Self> {
        parse_word_at(s, 1, 1)
    }
}

/// Parses a word, reporting errors relative to the given line and column.
pub(crate) fn parse_word_at(s: &str, line: usize, column: usize) -> Result<Word> {
    let t = s.trim();
    let column = column + (s.len() - s.trim_start().len());
    if t == "eps" || t == "ε" || t == "[]" {
        return Ok(Word::empty());
    }
    if let Some(inner) = t.strip_prefix('[') {
        let Some(inner) = inner.strip_suffix(']') else {
            return Err(Error::parse(line, column, "unterminated '[' in word"));
        };
        let mut letters = Vec::new();
        let mut offset = column + 1;
        for part in inner.split(',') {
            let p = part.trim();
            let value: u32 = p.parse().map_err(|_| {
                Error::parse(line, offset, format!("invalid letter {p:?}"))
            })?;
            if value == 0 {
                return Err(Error::parse(line, offset, "letter 0 is not allowed"));
            }
            letters.push(value);
            offset += part.len() + 1;
        }
        return Ok(Word(letters));
    }
    if t.is_empty() {
        return Err(Error::parse(line, column, "expected a word"));
    }
    let mut letters = Vec::with_capacity(t.len());
    for (i, c) in t.chars().enumerate() {
        match c.to_digit(10) {
            Some(0) => return Err(Error::parse(line, column + i, "letter 0 is not allowed")),
            Some(d) => letters.push(d),
            None => return Err(Error::parse(line, column + i, format!("unexpected character {c:?} in word"))),
        }
    }
    Ok(Word(letters))
}

/// The vector of image lengths of a morphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LengthType(pub Vec<usize>);

impl LengthType {
    pub fn new(lengths: Vec<usize>) -> Self {
        LengthType(lengths)
    }

    pub fn zeros(n: usize) -> Self {
        LengthType(vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, var: Var) -> usize {
        self.0[var.0]
    }

    /// The length morphism: `Σ_i |w|_{x_i} · L_i`.
    pub fn eval(&self, w: &[Var]) -> usize {
        w.iter().map(|v| self.0[v.0]).sum()
    }

    pub fn zero_count(&self) -> usize {
        self.0.iter().filter(|&&l| l == 0).count()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for LengthType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for LengthType {
    type Err = Error;

    /// Comma-separated nonnegative integers, optionally parenthesized:
    /// `1,1,2` or `(1,1,2)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t);
        if t.trim().is_empty() {
            return Ok(LengthType(Vec::new()));
        }
        let mut lengths = Vec::new();
        for (i, part) in t.split(',').enumerate() {
            let p = part.trim();
            match p.parse::<i64>() {
                Ok(v) if v < 0 => return Err(Error::NegativeLength { index: i, value: v }),
                Ok(v) => lengths.push(v as usize),
                Err(_) => {
                    return Err(Error::parse(1, 1, format!("invalid length {p:?} in length type")))
                }
            }
        }
        Ok(LengthType(lengths))
    }
}

/// A morphism from the unknowns `x_1..x_n` to words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Morphism {
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(images: Vec<Word>) -> Self {
        Morphism { images }
    }

    /// Builds a morphism from text images such as `["1", "2", "12"]`.
    pub fn from_strs(images: &[&str]) -> Result<Self> {
        images.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>().map(Morphism::new)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, var: Var) -> &Word {
        &self.images[var.0]
    }

    pub fn apply(&self, w: &[Var]) -> Word {
        let mut out = Word::empty();
        for v in w {
            out.push_word(&self.images[v.0]);
        }
        out
    }

    pub fn is_nonerasing(&self) -> bool {
        self.images.iter().all(|w| !w.is_empty())
    }

    pub fn total_length(&self) -> usize {
        self.images.iter().map(Word::len).sum()
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}={}", Var(i), w)?;
        }
        Ok(())
    }
}

/// The shortest `u` with `w = u^k`.
pub fn primitive_root(w: &Word) -> Result<Word> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let d = (1..=n)
        .find(|&d| n % d == 0 && w.has_period(d))
        .expect("n is always a period of w");
    Ok(w.factor(0, d))
}

/// Whether two nonempty words have the same primitive root.
pub fn commute_check(u: &Word, v: &Word) -> Result<bool> {
    Ok(primitive_root(u)? == primitive_root(v)?)
}

/// The length type `(|h(x_1)|, ..., |h(x_n)|)`.
pub fn length_type_of(h: &Morphism) -> LengthType {
    LengthType(h.images.iter().map(Word::len).collect())
}

/// True iff all nonempty images share one primitive root.
pub fn is_periodic(h: &Morphism) -> bool {
    let mut root: Option<Word> = None;
    for w in h.images.iter().filter(|w| !w.is_empty()) {
        let r = primitive_root(w).expect("nonempty");
        match &root {
            None => root = Some(r),
            Some(r0) if *r0 == r => {}
            Some(_) => return false,
        }
    }
    true
}

/// The least `r <= cap` such that every image lies in `A*` for some set `A`
/// of `r` nonempty words, or `None` when no such `r` exists.
///
/// Candidate sets are grown by depth-first search while factorizing the
/// images left to right; every new element of `A` is a factor of an image.
pub fn combinatorial_rank(h: &Morphism, cap: usize) -> Option<usize> {
    let mut images: Vec<&[u32]> = h
        .images
        .iter()
        .filter(|w| !w.is_empty())
        .map(|w| w.letters())
        .collect();
    if images.is_empty() {
        return Some(0);
    }
    if is_periodic(h) {
        return (cap >= 1).then_some(1);
    }
    images.sort_unstable();
    images.dedup();
    // Longer images constrain the search first.
    images.sort_by_key(|w| std::cmp::Reverse(w.len()));
    let upper = images.len();
    for r in 2..upper {
        if r > cap {
            return None;
        }
        let mut set = Vec::with_capacity(r);
        if factor_search(&images, 0, 0, &mut set, r) {
            return Some(r);
        }
    }
    (upper <= cap).then_some(upper)
}

fn factor_search<'a>(
    images: &[&'a [u32]],
    img: usize,
    pos: usize,
    set: &mut Vec<&'a [u32]>,
    r: usize,
) -> bool {
    let Some(&w) = images.get(img) else {
        return true;
    };
    if pos == w.len() {
        return factor_search(images, img + 1, 0, set, r);
    }
    let rest = &w[pos..];
    for k in 0..set.len() {
        let a = set[k];
        if rest.starts_with(a) && factor_search(images, img, pos + a.len(), set, r) {
            return true;
        }
    }
    if set.len() < r {
        for end in pos + 1..=w.len() {
            let f = &w[pos..end];
            if set.contains(&f) {
                continue;
            }
            set.push(f);
            if factor_search(images, img, end, set, r) {
                return true;
            }
            set.pop();
        }
    }
    false
}
