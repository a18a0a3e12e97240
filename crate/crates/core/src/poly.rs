//! Sparse univariate integer polynomials, reduced rational functions, and the
//! word encodings `P(w)` and `R(w) = P(w) / (X^|w| - 1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{primitive_root, Word};

/// A polynomial in `X` with arbitrary-precision integer coefficients.
///
/// Stored sparsely by degree; zero coefficients are never kept, so the zero
/// polynomial is the empty map and equality is structural.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    terms: BTreeMap<usize, BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPolynomial::monomial(c, 0)
    }

    /// `c·X^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(degree, c);
        }
        IntPolynomial { terms }
    }

    /// `X^k`.
    pub fn x_pow(k: usize) -> Self {
        IntPolynomial::monomial(1, k)
    }

    /// `X^k - 1`.
    pub fn x_pow_minus_one(k: usize) -> Self {
        IntPolynomial::x_pow(k) - IntPolynomial::one()
    }

    /// Dense constructor: `coeffs[i]` is the coefficient of `X^i`.
    pub fn from_coeffs<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        let mut p = IntPolynomial::zero();
        for (d, c) in coeffs.iter().enumerate() {
            p.add_term(d, c.clone().into());
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut p = IntPolynomial::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn lowest_degree(&self) -> Option<usize> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.terms.get(&degree).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &BigInt)> + '_ {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Adds `c·X^degree` in place.
    pub fn add_term(&mut self, degree: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(degree) {
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

    /// Adds `c·X^shift·other` in place.
    pub fn add_scaled_shifted(&mut self, other: &IntPolynomial, c: &BigInt, shift: usize) {
        if c.is_zero() {
            return;
        }
        for (d, a) in &other.terms {
            self.add_term(d + shift, a * c);
        }
    }

    /// Multiplication by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        IntPolynomial {
            terms: self.terms.iter().map(|(d, c)| (d + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial {
            terms: self.terms.iter().map(|(&d, a)| (d, a * c)).collect(),
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        // Horner over the sparse representation, highest degree first.
        let mut acc = BigInt::zero();
        let mut prev: Option<usize> = None;
        for (&d, c) in self.terms.iter().rev() {
            if let Some(p) = prev {
                acc *= num_traits::pow(x.clone(), p - d);
            }
            acc += c;
            prev = Some(d);
        }
        if let Some(p) = prev {
            acc *= num_traits::pow(x.clone(), p);
        }
        acc
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        IntPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&d, a)| {
                    debug_assert!((a % c).is_zero());
                    (d, a / c)
                })
                .collect(),
        }
    }

    /// The primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_some_and(|lc| lc.is_negative()) {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Exact quotient `self / divisor` in `Z[X]`, or `None` when the division
    /// leaves a remainder or needs non-integer coefficients.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        let (dd, dlc) = match (divisor.degree(), divisor.leading_coeff()) {
            (Some(d), Some(lc)) => (d, lc.clone()),
            _ => return None,
        };
        let mut rem = self.clone();
        let mut quot = IntPolynomial::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return None;
            }
            let rlc = rem.leading_coeff().unwrap();
            let (q, r) = rlc.div_rem(&dlc);
            if !r.is_zero() {
                return None;
            }
            let shift = rd - dd;
            rem.add_scaled_shifted(divisor, &-&q, shift);
            quot.add_term(shift, q);
        }
        Some(quot)
    }

    pub fn divides(&self, other: &IntPolynomial) -> bool {
        other.div_exact(self).is_some()
    }

    /// Pseudo-remainder of `self` by `divisor`: the remainder of
    /// `lc(divisor)^k · self` with `k` large enough to avoid fractions.
    fn pseudo_rem(&self, divisor: &IntPolynomial) -> IntPolynomial {
        let dd = divisor.degree().expect("nonzero divisor");
        let dlc = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let rlc = rem.leading_coeff().unwrap().clone();
            rem = rem.scale(&dlc);
            rem.add_scaled_shifted(divisor, &-rlc, rd - dd);
        }
        rem
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        for (&d, c) in &rhs.terms {
            self.add_term(d, c.clone());
        }
    }
}

impl SubAssign<&IntPolynomial> for IntPolynomial {
    fn sub_assign(&mut self, rhs: &IntPolynomial) {
        for (&d, c) in &rhs.terms {
            self.add_term(d, -c);
        }
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self += &rhs;
        self
    }
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self -= &rhs;
        self
    }
}

impl Sub<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(mut self) -> IntPolynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -self.clone()
    }
}

impl Mul<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (&d, c) in &self.terms {
            out.add_scaled_shifted(rhs, c, d);
        }
        out
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for IntPolynomial {
    /// Increasing degree: `1 + 2X + X^2 + 2X^3`, `-1 + X`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&d, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if d == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            if d == 1 {
                f.write_str("X")?;
            } else {
                write!(f, "X^{d}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    /// Parses the rendering produced by `Display`; also tolerates `*`
    /// between coefficient and `X`, arbitrary whitespace and any term order.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<(usize, char)> = s
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i, if c == '−' { '-' } else { c }))
            .collect();
        let col = |k: usize| chars.get(k).map(|(i, _)| s[..*i].chars().count() + 1).unwrap_or(s.chars().count() + 1);
        if chars.is_empty() {
            return Err(Error::parse(1, 1, "empty polynomial"));
        }
        let mut p = IntPolynomial::zero();
        let mut k = 0;
        while k < chars.len() {
            let mut sign = BigInt::one();
            if k > 0 || matches!(chars[k].1, '+' | '-') {
                match chars[k].1 {
                    '+' => {}
                    '-' => sign = -sign,
                    _ => return Err(Error::parse(1, col(k), "expected '+' or '-'")),
                }
                k += 1;
            }
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let coeff: BigInt = if k > start {
                chars[start..k].iter().map(|c| c.1).collect::<String>().parse().unwrap()
            } else {
                BigInt::one()
            };
            if k < chars.len() && chars[k].1 == '*' {
                k += 1;
            }
            let mut degree = 0;
            if k < chars.len() && chars[k].1 == 'X' {
                k += 1;
                degree = 1;
                if k < chars.len() && chars[k].1 == '^' {
                    k += 1;
                    let ds = k;
                    while k < chars.len() && chars[k].1.is_ascii_digit() {
                        k += 1;
                    }
                    if k == ds {
                        return Err(Error::parse(1, col(k), "expected exponent after '^'"));
                    }
                    degree = chars[ds..k].iter().map(|c| c.1).collect::<String>().parse().map_err(|_| Error::parse(1, col(ds), "exponent too large"))?;
                }
            } else if k == start {
                return Err(Error::parse(1, col(k), "expected a term"));
            }
            p.add_term(degree, sign * coeff);
        }
        Ok(p)
    }
}

/// A greatest common divisor over the rationals, scaled to a primitive
/// integer polynomial with positive leading coefficient. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let mut a = a.primitive_part();
    let mut b = b.primitive_part();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b).primitive_part();
        a = b;
        b = r;
    }
    a
}

/// A reduced fraction of integer polynomials.
///
/// The numerator and denominator are coprime, their joint integer content is
/// one and the denominator's leading coefficient is positive, so two equal
/// rational functions have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(RationalFunction::from_poly(IntPolynomial::zero()));
        }
        let g = poly_gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        if den.leading_coeff().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero")
    }

    pub fn div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        if other.is_zero() {
            return Err(Error::InvalidArgument("division by the zero rational function".into()));
        }
        RationalFunction::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        RationalFunction::new(num, &self.den * &other.den).expect("nonzero")
    }

    pub fn sub(&self, other: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &other.den) - &(&other.num * &self.den);
        RationalFunction::new(num, &self.den * &other.den).expect("nonzero")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl FromStr for RationalFunction {
    type Err = Error;

    /// `(num)/(den)` or a bare polynomial.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            let Some(close) = rest.find(')') else {
                return Err(Error::parse(1, 1, "unbalanced parenthesis"));
            };
            let num: IntPolynomial = rest[..close].parse()?;
            let tail = rest[close + 1..].trim();
            let Some(den) = tail.strip_prefix('/') else {
                return Err(Error::parse(1, close + 2, "expected '/'"));
            };
            let den = den.trim();
            let den = den.strip_prefix('(').and_then(|d| d.strip_suffix(')')).unwrap_or(den);
            return RationalFunction::new(num, den.parse()?);
        }
        Ok(RationalFunction::from_poly(t.parse()?))
    }
}

/// `P(w) = Σ_k a_k X^k` for `w = a_0 ... a_{n-1}`.
pub fn encode_poly(w: &Word) -> IntPolynomial {
    let mut p = IntPolynomial::zero();
    for (k, &a) in w.letters().iter().enumerate() {
        p.add_term(k, BigInt::from(a));
    }
    p
}

/// `R(w) = P(w) / (X^|w| - 1)` in reduced form.
pub fn encode_ratfun(w: &Word) -> Result<RationalFunction> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    RationalFunction::new(encode_poly(w), IntPolynomial::x_pow_minus_one(w.len()))
}

/// Encodes a concatenation through the shifted sum
/// `P(w_1) + P(w_2) X^|w_1| + ...` and checks it against the direct encoding.
pub fn poly_concat_identity(ws: &[Word]) -> Result<IntPolynomial> {
    let mut sum = IntPolynomial::zero();
    let mut offset = 0;
    let mut whole = Word::empty();
    for w in ws {
        sum.add_scaled_shifted(&encode_poly(w), &BigInt::one(), offset);
        offset += w.len();
        whole.push_word(w);
    }
    let direct = encode_poly(&whole);
    if sum != direct {
        return Err(Error::CheckFailed(format!(
            "concatenation identity: shifted sum {sum} differs from P(w) = {direct}"
        )));
    }
    Ok(sum)
}

/// `(X^n - 1) / (X^d - 1) = 1 + X^d + ... + X^{n-d}` for `d | n`.
pub fn cyclotomic_quotient(n: usize, d: usize) -> IntPolynomial {
    assert!(d > 0 && n % d == 0, "d must be a positive divisor of n");
    IntPolynomial::from_terms((0..n / d).map(|k| (k * d, BigInt::one())))
}

/// True iff no `(X^|w| - 1)/(X^d - 1)` with `d` a proper divisor of `|w|`
/// divides `P(w)`.
///
/// A `false` answer is only consistent with `w` being a proper power; an
/// inconsistency is reported as [`Error::CheckFailed`].
pub fn primdiv_check(w: &Word) -> Result<bool> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let p = encode_poly(w);
    let divisible = (1..n)
        .filter(|d| n % d == 0)
        .any(|d| cyclotomic_quotient(n, d).divides(&p));
    let primitive = primitive_root(w)?.len() == n;
    if divisible && primitive {
        return Err(Error::CheckFailed(format!(
            "primitive word {w} has P(w) divisible by a cyclotomic quotient"
        )));
    }
    Ok(!divisible)
}

/// Outcome of comparing prefixes of `u^ω` and `v^ω`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FineWilfVerdict {
    /// `|u| + |v| - gcd(|u|, |v|)`.
    pub bound: usize,
    /// Whether `u^ω` and `v^ω` agree on the first `prefix_len` letters.
    pub agree: bool,
    /// `agree && prefix_len >= bound`.
    pub premise_holds: bool,
    pub roots_equal: bool,
}

/// Length of the longest common prefix of `u^ω` and `v^ω`, or `None` when
/// the two infinite words are equal.
pub fn omega_common_prefix(u: &Word, v: &Word) -> Result<Option<usize>> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    // Both sequences are periodic with period lcm(|u|, |v|).
    let period = u.len().lcm(&v.len());
    Ok((0..period).find(|&i| u.omega_letter(i) != v.omega_letter(i)))
}

/// Checks the periodicity lemma instance for `(u, v)` at `prefix_len`.
pub fn fine_wilf_check(u: &Word, v: &Word, prefix_len: usize) -> Result<FineWilfVerdict> {
    let common = omega_common_prefix(u, v)?;
    let agree = common.is_none_or(|c| c >= prefix_len);
    let bound = u.len() + v.len() - u.len().gcd(&v.len());
    let premise_holds = agree && prefix_len >= bound;
    let roots_equal = primitive_root(u)? == primitive_root(v)?;
    if premise_holds && !roots_equal {
        return Err(Error::CheckFailed(format!(
            "{u} and {v} agree on {prefix_len} >= {bound} letters but have different roots"
        )));
    }
    Ok(FineWilfVerdict {
        bound,
        agree,
        premise_holds,
        roots_equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode_poly(&w("1212")).to_string(), "1 + 2X + X^2 + 2X^3");
        assert!(encode_poly(&Word::empty()).is_zero());
        assert_eq!(encode_poly(&w("[3]")), IntPolynomial::constant(3));
    }

    #[test]
    fn ratfun_examples() {
        assert_eq!(encode_ratfun(&w("1212")).unwrap().to_string(), "(1 + 2X)/(-1 + X^2)");
        assert_eq!(encode_ratfun(&w("11")).unwrap().to_string(), "(1)/(-1 + X)");
        assert_eq!(encode_ratfun(&w("12")).unwrap().to_string(), "(1 + 2X)/(-1 + X^2)");
        assert_eq!(encode_ratfun(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn concat_identity_examples() {
        assert_eq!(poly_concat_identity(&[w("12"), w("12")]).unwrap(), p("1 + 2X + X^2 + 2X^3"));
        assert!(poly_concat_identity(&[Word::empty(), Word::empty()]).unwrap().is_zero());
        assert_eq!(poly_concat_identity(&[w("1"), w("2"), w("1")]).unwrap(), p("1 + 2X + X^2"));
    }

    #[test]
    fn primdiv_examples() {
        assert!(primdiv_check(&w("12")).unwrap());
        assert!(!primdiv_check(&w("1212")).unwrap());
        assert!(!primdiv_check(&w("111")).unwrap());
        assert!(primdiv_check(&w("1")).unwrap());
        assert_eq!(primdiv_check(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn fine_wilf_examples() {
        let v = fine_wilf_check(&w("12"), &w("1212"), 4).unwrap();
        assert!(v.premise_holds && v.roots_equal);
        let v = fine_wilf_check(&w("12"), &w("121"), 3).unwrap();
        assert_eq!(v.bound, 4);
        assert!(v.agree && !v.premise_holds && !v.roots_equal);
        let v = fine_wilf_check(&w("1"), &w("2"), 0).unwrap();
        assert!(!v.premise_holds && !v.roots_equal);
        // A prefix far beyond any single power is still handled lazily.
        let v = fine_wilf_check(&w("12"), &w("1212"), 1 << 40).unwrap();
        assert!(v.premise_holds);
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(poly_gcd(&p("X^2 - 1"), &p("X^3 - 1")), p("-1 + X"));
        assert_eq!(poly_gcd(&IntPolynomial::zero(), &p("-2 - 4X")), p("1 + 2X"));
        assert_eq!(poly_gcd(&p("1 + X^2"), &p("1 + X^2")), p("1 + X^2"));
        assert!(poly_gcd(&IntPolynomial::zero(), &IntPolynomial::zero()).is_zero());
        assert_eq!(poly_gcd(&p("X^6 - 1"), &p("X^4 - 1")), p("X^2 - 1"));
    }

    #[test]
    fn render_and_parse() {
        for s in ["0", "1 + 2X + X^2 + 2X^3", "-1 + X", "-X - 3X^7", "12X^100"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("X^2 − 1"), p("-1 + X^2"));
        assert_eq!(p("2*X^3 + 1"), p("1 + 2X^3"));
        assert_eq!(p("X + X"), p("2X"));
        assert!(matches!("1 + + X".parse::<IntPolynomial>(), Err(Error::Parse { .. })));
        assert!(matches!("X^".parse::<IntPolynomial>(), Err(Error::Parse { .. })));
        let r: RationalFunction = "(1 + 2X)/(-1 + X^2)".parse().unwrap();
        assert_eq!(r, encode_ratfun(&w("1212")).unwrap());
    }

    #[test]
    fn division_and_eval() {
        let a = p("1 + 2X + X^2 + 2X^3");
        assert_eq!(a.div_exact(&p("1 + X^2")), Some(p("1 + 2X")));
        assert_eq!(a.div_exact(&p("1 + X")), None);
        assert_eq!(p("2 + 4X").div_exact(&p("2")), Some(p("1 + 2X")));
        assert_eq!(p("1 + X").div_exact(&p("2")), None);
        assert_eq!(a.eval(&BigInt::from(2)), BigInt::from(1 + 4 + 4 + 16));
        assert_eq!(p("X^5").eval(&BigInt::from(3)), BigInt::from(243));
    }

    #[test]
    fn ratfun_normalization() {
        let r = RationalFunction::new(p("-2 - 2X"), p("-4 + 4X^2")).unwrap();
        assert_eq!(r.to_string(), "(-1)/(-2 + 2X)");
        let zero = RationalFunction::new(IntPolynomial::zero(), p("X")).unwrap();
        assert_eq!(zero.to_string(), "(0)/(1)");
        assert!(RationalFunction::new(p("1"), IntPolynomial::zero()).is_err());
    }
}
