//! The monoid ring `Z[X; LHP]`: integer combinations of `X^p` where `p` is a
//! linear form `a_1 X_1 + ... + a_n X_n` with nonnegative integer
//! coefficients. Substituting a length type for `(X_1, ..., X_n)` turns a
//! generalized polynomial into an ordinary one.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::equation::Equation;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::word::{LengthType, Var};

/// `a_1 X_1 + ... + a_n X_n` with `a_i >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LinForm(pub Vec<u32>);

impl LinForm {
    pub fn zero(n: usize) -> Self {
        LinForm(vec![0; n])
    }

    /// The form `X_{v}`.
    pub fn var(n: usize, v: Var) -> Self {
        let mut f = LinForm::zero(n);
        f.0[v.0] = 1;
        f
    }

    /// `Σ_{v in w} X_v`.
    pub fn of_word(n: usize, w: &[Var]) -> Self {
        let mut f = LinForm::zero(n);
        for v in w {
            f.0[v.0] += 1;
        }
        f
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn eval(&self, l: &LengthType) -> usize {
        self.0.iter().zip(l.lengths()).map(|(&a, &b)| a as usize * b).sum()
    }

    pub fn eval_i64(&self, l: &[i64]) -> i64 {
        self.0.iter().zip(l).map(|(&a, &b)| a as i64 * b).sum()
    }

    /// The componentwise order: `p ⪯ q` iff `a_i <= b_i` for every `i`.
    pub fn precedes_eq(&self, other: &LinForm) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self - other` as a signed integer vector.
    pub fn difference(&self, other: &LinForm) -> Vec<i64> {
        self.0.iter().zip(&other.0).map(|(&a, &b)| a as i64 - b as i64).collect()
    }
}

impl Add<&LinForm> for &LinForm {
    type Output = LinForm;
    fn add(self, rhs: &LinForm) -> LinForm {
        LinForm(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for LinForm {
    /// `2X1+X2`, or `0` for the zero form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if a != 1 {
                write!(f, "{a}")?;
            }
            write!(f, "X{}", i + 1)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// An element of `Z[X; LHP]` on `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenPoly {
    n: usize,
    terms: BTreeMap<LinForm, BigInt>,
}

impl GenPoly {
    pub fn zero(n: usize) -> Self {
        GenPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        GenPoly::monomial(LinForm::zero(n), BigInt::one())
    }

    /// `c·X^p`.
    pub fn monomial(p: LinForm, c: BigInt) -> Self {
        let mut g = GenPoly::zero(p.n());
        g.add_term(p, c);
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (lexicographic) exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&LinForm, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, p: &LinForm) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, p: LinForm, c: BigInt) {
        assert_eq!(p.n(), self.n, "exponent form has the wrong number of variables");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Exponents with positive (resp. negative) coefficients.
    pub fn split_signs(&self) -> (Vec<&LinForm>, Vec<&LinForm>) {
        let pos = self.terms.iter().filter(|(_, c)| c.is_positive()).map(|(p, _)| p).collect();
        let neg = self.terms.iter().filter(|(_, c)| c.is_negative()).map(|(p, _)| p).collect();
        (pos, neg)
    }

    /// `g(L)`: each term `c·X^p` becomes `c·X^{p(L)}`.
    pub fn substitute(&self, l: &LengthType) -> Result<IntPolynomial> {
        if l.n() != self.n {
            return Err(Error::MismatchedUnknowns { expected: self.n, found: l.n() });
        }
        let mut out = IntPolynomial::zero();
        for (p, c) in &self.terms {
            out.add_term(p.eval(l), c.clone());
        }
        Ok(out)
    }

    /// Substitution at an integer point; negative components are rejected.
    pub fn substitute_signed(&self, point: &[i64]) -> Result<IntPolynomial> {
        if let Some((index, &value)) = point.iter().enumerate().find(|(_, &v)| v < 0) {
            return Err(Error::NegativeLength { index, value });
        }
        self.substitute(&LengthType(point.iter().map(|&v| v as usize).collect()))
    }

    /// Parses the rendering produced by `Display`, e.g.
    /// `1 - X^{X3}` or `X^{2X1+X2} - 3X^{X1+X3}`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).map(|c| if c == '−' { '-' } else { c }).collect();
        let err = |msg: &str| Error::parse(1, 1, format!("{msg} in generalized polynomial {s:?}"));
        if text.is_empty() {
            return Err(err("empty input"));
        }
        if text == "0" {
            return Ok(GenPoly::zero(n));
        }
        let bytes = text.as_bytes();
        let mut g = GenPoly::zero(n);
        let mut k = 0;
        while k < bytes.len() {
            let mut sign = BigInt::one();
            if k > 0 || matches!(bytes[k], b'+' | b'-') {
                match bytes[k] {
                    b'+' => {}
                    b'-' => sign = -sign,
                    _ => return Err(err("expected '+' or '-'")),
                }
                k += 1;
            }
            let start = k;
            while k < bytes.len() && bytes[k].is_ascii_digit() {
                k += 1;
            }
            let coeff: BigInt = if k > start { text[start..k].parse().unwrap() } else { BigInt::one() };
            if k < bytes.len() && bytes[k] == b'*' {
                k += 1;
            }
            let form = if text[k..].starts_with("X^{") {
                let close = text[k..].find('}').ok_or_else(|| err("unterminated '{'"))? + k;
                let f = parse_linform(n, &text[k + 3..close]).ok_or_else(|| err("malformed exponent"))?;
                k = close + 1;
                f
            } else if k == start {
                return Err(err("expected a term"));
            } else {
                LinForm::zero(n)
            };
            g.add_term(form, sign * coeff);
        }
        Ok(g)
    }
}

fn parse_linform(n: usize, s: &str) -> Option<LinForm> {
    let mut f = LinForm::zero(n);
    if s == "0" {
        return Some(f);
    }
    for part in s.split('+') {
        let (coef, var) = part.split_once('X')?;
        let a: u32 = if coef.is_empty() { 1 } else { coef.parse().ok()? };
        let idx: usize = var.strip_prefix('_').unwrap_or(var).parse().ok()?;
        if idx == 0 || idx > n {
            return None;
        }
        f.0[idx - 1] += a;
    }
    Some(f)
}

impl Serialize for GenPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Display for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if p.is_zero() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}")?;
                }
                write!(f, "X^{{{p}}}")?;
            }
        }
        Ok(())
    }
}

impl Add<&GenPoly> for &GenPoly {
    type Output = GenPoly;
    fn add(self, rhs: &GenPoly) -> GenPoly {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Sub<&GenPoly> for &GenPoly {
    type Output = GenPoly;
    fn sub(self, rhs: &GenPoly) -> GenPoly {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), -c);
        }
        out
    }
}

impl Neg for &GenPoly {
    type Output = GenPoly;
    fn neg(self) -> GenPoly {
        GenPoly {
            n: self.n,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl Mul<&GenPoly> for &GenPoly {
    type Output = GenPoly;
    fn mul(self, rhs: &GenPoly) -> GenPoly {
        let mut out = GenPoly::zero(self.n);
        for (p, a) in &self.terms {
            for (q, b) in &rhs.terms {
                out.add_term(p + q, a * b);
            }
        }
        out
    }
}

/// `S_{E,x}`: the signed sum of `X^{Σ prefix unknowns}` over occurrences of
/// `x`. Substituting `L` gives `Q_{E,x,L}`.
pub fn s_polynomial(e: &Equation, x: Var) -> GenPoly {
    let n = e.n();
    let mut g = GenPoly::zero(n);
    for (side, sign) in [(e.lhs(), 1), (e.rhs(), -1)] {
        let mut prefix = LinForm::zero(n);
        for &v in side {
            if v == x {
                g.add_term(prefix.clone(), BigInt::from(sign));
            }
            prefix.0[v.0] += 1;
        }
    }
    g
}

/// Exponent forms of the occurrences of `x` on one side, in order of
/// occurrence; consecutive forms increase in the `⪯` order.
pub fn occurrence_forms(n: usize, side: &[Var], x: Var) -> Vec<LinForm> {
    let mut out = Vec::new();
    let mut prefix = LinForm::zero(n);
    for &v in side {
        if v == x {
            out.push(prefix.clone());
        }
        prefix.0[v.0] += 1;
    }
    out
}

/// The 2×2 minor `t_kl = S_{E1,x_k} S_{E2,x_l} - S_{E1,x_l} S_{E2,x_k}`.
pub fn minor_t(e1: &Equation, e2: &Equation, k: Var, l: Var) -> Result<GenPoly> {
    if e1.n() != e2.n() {
        return Err(Error::MismatchedUnknowns { expected: e1.n(), found: e2.n() });
    }
    let a = &s_polynomial(e1, k) * &s_polynomial(e2, l);
    let b = &s_polynomial(e1, l) * &s_polynomial(e2, k);
    Ok(&a - &b)
}

/// A polynomial in `Y_1..Y_n`, keyed by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        MultiPoly { n, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for (e1, a) in &self.terms {
            for (e2, b) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.add_term(e, a * b);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    /// `1 - Y3`, `Y1*Y2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| if k == 1 { format!("Y{}", j + 1) } else { format!("Y{}^{k}", j + 1) })
                .collect();
            if vars.is_empty() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                f.write_str(&vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// The ring isomorphism `Z[X; LHP] → Z[Y_1..Y_n]`, `X^{X_i} ↦ Y_i`.
pub fn iso_multivariate(g: &GenPoly) -> MultiPoly {
    MultiPoly {
        n: g.n,
        terms: g.terms.iter().map(|(p, c)| (p.0.clone(), c.clone())).collect(),
    }
}
