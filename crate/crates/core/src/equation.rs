//! Word equations over unknowns, their coefficient polynomials for a fixed
//! length type, and exact rank of polynomial matrices.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::word::{combinatorial_rank, length_type_of, parse_word_at, LengthType, Morphism};

pub use crate::word::Var;

/// Ordered names of the unknowns of an analysis context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Unknowns {
    names: Vec<String>,
}

impl Unknowns {
    /// `x1, ..., xn`.
    pub fn canonical(n: usize) -> Self {
        Unknowns {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn new(names: Vec<String>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for name in &names {
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::InvalidArgument(format!("invalid unknown name {name:?}")));
            }
            if !seen.insert(name) {
                return Err(Error::InvalidArgument(format!("duplicate unknown name {name:?}")));
            }
        }
        Ok(Unknowns { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: Var) -> &str {
        &self.names[v.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn lookup(&self, name: &str) -> Option<Var> {
        if let Some(i) = self.names.iter().position(|n| n == name) {
            return Some(Var(i));
        }
        // `x_3` is accepted for the third unknown.
        let idx: usize = name.strip_prefix("x_")?.parse().ok()?;
        (1..=self.len()).contains(&idx).then(|| Var(idx - 1))
    }

    /// Splits one whitespace-free token into unknowns, longest name first.
    fn split_token(&self, token: &str, line: usize, column: usize) -> Result<Vec<Var>> {
        if let Some(v) = self.lookup(token) {
            return Ok(vec![v]);
        }
        let mut by_len: Vec<(usize, &str)> = self.names.iter().enumerate().map(|(i, n)| (i, n.as_str())).collect();
        by_len.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));
        let mut out = Vec::new();
        let mut rest = token;
        while !rest.is_empty() {
            let Some(&(i, name)) = by_len.iter().find(|(_, n)| rest.starts_with(n)) else {
                let offset = token.len() - rest.len();
                return Err(Error::parse(line, column + offset, format!("unknown name at {rest:?}")));
            };
            out.push(Var(i));
            rest = &rest[name.len()..];
        }
        Ok(out)
    }

    fn parse_side(&self, text: &str, line: usize, column: usize) -> Result<Vec<Var>> {
        let t = text.trim();
        if t == "eps" || t == "ε" {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut offset = 0;
        for token in text.split_whitespace() {
            let at = text[offset..].find(token).unwrap() + offset;
            out.extend(self.split_token(token, line, column + at)?);
            offset = at + token.len();
        }
        Ok(out)
    }

    /// Parses `lhs = rhs` with sides written in these unknowns.
    pub fn parse_equation(&self, text: &str) -> Result<Equation> {
        self.parse_equation_at(text, 1)
    }

    fn parse_equation_at(&self, text: &str, line: usize) -> Result<Equation> {
        let mut parts = text.splitn(3, '=');
        let lhs = parts.next().unwrap_or("");
        let Some(rhs) = parts.next() else {
            return Err(Error::parse(line, 1, "expected '=' in equation"));
        };
        if parts.next().is_some() {
            let col = lhs.len() + rhs.len() + 2;
            return Err(Error::parse(line, col, "more than one '=' in equation"));
        }
        let lhs_vars = self.parse_side(lhs, line, 1)?;
        let rhs_vars = self.parse_side(rhs, line, lhs.len() + 2)?;
        Equation::new(self.len(), lhs_vars, rhs_vars)
    }

    /// Parses morphism lines `name = word` (or `name = eps`).
    pub fn parse_morphism(&self, text: &str) -> Result<Morphism> {
        let mut images: Vec<Option<crate::word::Word>> = vec![None; self.len()];
        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let content = strip_comment(raw);
            if content.trim().is_empty() {
                continue;
            }
            let Some((name, word)) = content.split_once('=') else {
                return Err(Error::parse(line, 1, "expected 'name = word'"));
            };
            let name_col = name.len() - name.trim_start().len() + 1;
            let Some(var) = self.lookup(name.trim()) else {
                return Err(Error::parse(line, name_col, format!("unknown name {:?}", name.trim())));
            };
            if images[var.0].is_some() {
                return Err(Error::parse(line, name_col, format!("{} assigned twice", name.trim())));
            }
            images[var.0] = Some(parse_word_at(word, line, name.len() + 2)?);
        }
        let mut out = Vec::with_capacity(images.len());
        for (i, img) in images.into_iter().enumerate() {
            match img {
                Some(w) => out.push(w),
                None => {
                    return Err(Error::parse(
                        text.lines().count().max(1),
                        1,
                        format!("missing image for {}", self.names[i]),
                    ))
                }
            }
        }
        Ok(Morphism::new(out))
    }

    pub fn render_side(&self, side: &[Var]) -> String {
        if side.is_empty() {
            return "eps".into();
        }
        let compact = self.names.iter().all(|n| n.chars().count() == 1);
        let parts: Vec<&str> = side.iter().map(|&v| self.name(v)).collect();
        if compact {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }

    pub fn render_equation(&self, e: &Equation) -> String {
        format!("{} = {}", self.render_side(&e.lhs), self.render_side(&e.rhs))
    }

    pub fn render_morphism(&self, h: &Morphism) -> String {
        h.images()
            .iter()
            .enumerate()
            .map(|(i, w)| format!("{} = {}", self.names[i], w))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// Parses a system file: an optional `unknowns:` header followed by one
/// equation per line. `#` starts a comment.
///
/// The header lists names (`unknowns: x y z`) or a count (`unknowns: 4`,
/// meaning `x1..x4`). Without it, unknowns must be written `x1`, `x2`, ...
/// and `n` is the largest index used.
pub fn parse_system(text: &str) -> Result<(Unknowns, System)> {
    let mut unknowns: Option<Unknowns> = None;
    let mut lines = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let content = strip_comment(raw);
        if content.trim().is_empty() {
            continue;
        }
        if let Some(rest) = content.trim_start().strip_prefix("unknowns:") {
            if unknowns.is_some() || !lines.is_empty() {
                return Err(Error::parse(ln + 1, 1, "'unknowns:' must be the first line"));
            }
            let rest = rest.trim();
            unknowns = Some(match rest.parse::<usize>() {
                Ok(n) => Unknowns::canonical(n),
                Err(_) => Unknowns::new(rest.split_whitespace().map(String::from).collect())
                    .map_err(|e| Error::parse(ln + 1, 1, e.to_string()))?,
            });
            continue;
        }
        lines.push((ln + 1, content));
    }
    let unknowns = match unknowns {
        Some(u) => u,
        None => Unknowns::canonical(infer_canonical_count(&lines)?),
    };
    let mut equations = Vec::with_capacity(lines.len());
    for (line, content) in lines {
        equations.push(unknowns.parse_equation_at(content, line)?);
    }
    let system = System::new(unknowns.len(), equations)?;
    Ok((unknowns, system))
}

fn infer_canonical_count(lines: &[(usize, &str)]) -> Result<usize> {
    let mut n = 0;
    for &(line, content) in lines {
        let bytes = content.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            if c == 'x' {
                let mut j = i + 1;
                if j < bytes.len() && bytes[j] == b'_' {
                    j += 1;
                }
                let start = j;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let idx: usize = content[start..j]
                    .parse()
                    .map_err(|_| Error::parse(line, i + 1, "expected an index after 'x'"))?;
                if idx == 0 {
                    return Err(Error::parse(line, i + 1, "unknowns are numbered from x1"));
                }
                n = n.max(idx);
                i = j;
            } else if c.is_whitespace() || c == '=' {
                i += 1;
            } else if content[i..].starts_with("eps") {
                i += 3;
            } else if content[i..].starts_with('ε') {
                i += 'ε'.len_utf8();
            } else {
                return Err(Error::parse(
                    line,
                    i + 1,
                    "unexpected character; declare names with an 'unknowns:' header",
                ));
            }
        }
    }
    Ok(n)
}

/// A constant-free word equation `lhs = rhs` on `n` unknowns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Equation {
    n: usize,
    lhs: Vec<Var>,
    rhs: Vec<Var>,
}

impl Equation {
    pub fn new(n: usize, lhs: Vec<Var>, rhs: Vec<Var>) -> Result<Self> {
        if let Some(v) = lhs.iter().chain(&rhs).find(|v| v.0 >= n) {
            return Err(Error::UnknownOutOfRange { index: v.0 + 1, n });
        }
        Ok(Equation { n, lhs, rhs })
    }

    /// Builds an equation from zero-based unknown indices.
    pub fn from_indices(n: usize, lhs: &[usize], rhs: &[usize]) -> Result<Self> {
        Equation::new(n, lhs.iter().map(|&i| Var(i)).collect(), rhs.iter().map(|&i| Var(i)).collect())
    }

    /// Parses an equation in canonical names `x1..xn`.
    pub fn parse_canonical(n: usize, text: &str) -> Result<Self> {
        Unknowns::canonical(n).parse_equation(text)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lhs(&self) -> &[Var] {
        &self.lhs
    }

    pub fn rhs(&self) -> &[Var] {
        &self.rhs
    }

    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }

    /// `|E| = |lhs| + |rhs|`.
    pub fn len(&self) -> usize {
        self.lhs.len() + self.rhs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `|E|_x`.
    pub fn occurrences(&self, x: Var) -> usize {
        self.lhs_count(x) + self.rhs_count(x)
    }

    pub fn lhs_count(&self, x: Var) -> usize {
        self.lhs.iter().filter(|&&v| v == x).count()
    }

    pub fn rhs_count(&self, x: Var) -> usize {
        self.rhs.iter().filter(|&&v| v == x).count()
    }

    pub fn swapped(&self) -> Equation {
        Equation {
            n: self.n,
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
        }
    }

    pub fn is_solved_by(&self, h: &Morphism) -> bool {
        debug_assert_eq!(h.n(), self.n);
        let l = h.apply(&self.lhs);
        let r = h.apply(&self.rhs);
        l == r
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> {
        (0..self.n).map(Var)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Unknowns::canonical(self.n).render_equation(self))
    }
}

/// A finite system of equations on a common set of unknowns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct System {
    n: usize,
    equations: Vec<Equation>,
}

impl System {
    pub fn new(n: usize, equations: Vec<Equation>) -> Result<Self> {
        if let Some(e) = equations.iter().find(|e| e.n != n) {
            return Err(Error::MismatchedUnknowns { expected: n, found: e.n });
        }
        Ok(System { n, equations })
    }

    pub fn single(e: Equation) -> Self {
        System {
            n: e.n,
            equations: vec![e],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn is_solved_by(&self, h: &Morphism) -> bool {
        self.equations.iter().all(|e| e.is_solved_by(h))
    }

    /// The system with equation `i` removed.
    pub fn without(&self, i: usize) -> System {
        let mut equations = self.equations.clone();
        equations.remove(i);
        System { n: self.n, equations }
    }

    pub fn prefix(&self, len: usize) -> System {
        System {
            n: self.n,
            equations: self.equations[..len].to_vec(),
        }
    }
}

/// `Q_{E,x,L}`: the signed sum of `X^{ℓ_L(prefix)}` over occurrences of `x`.
pub fn q_polynomial(e: &Equation, x: Var, l: &LengthType) -> IntPolynomial {
    let mut q = IntPolynomial::zero();
    for (side, sign) in [(&e.lhs, 1), (&e.rhs, -1)] {
        let mut offset = 0;
        for &v in side.iter() {
            if v == x {
                q.add_term(offset, BigInt::from(sign));
            }
            offset += l.get(v);
        }
    }
    q
}

/// All `Q_{E,x_j,L}` for `j = 1..n` in one pass over the equation.
pub fn q_row(e: &Equation, l: &LengthType) -> Vec<IntPolynomial> {
    let mut row = vec![IntPolynomial::zero(); e.n];
    for (side, sign) in [(&e.lhs, 1), (&e.rhs, -1)] {
        let mut offset = 0;
        for &v in side.iter() {
            row[v.0].add_term(offset, BigInt::from(sign));
            offset += l.get(v);
        }
    }
    row
}

/// `Σ_x Q_{E,x,L} · P(h(x))` with `L` the length type of `h`; zero exactly
/// when `h` solves `E`.
pub fn residual(e: &Equation, h: &Morphism) -> IntPolynomial {
    residual_with_row(&q_row(e, &length_type_of(h)), h)
}

/// Residual from a precomputed coefficient row; the row must belong to the
/// length type of `h`.
pub fn residual_with_row(row: &[IntPolynomial], h: &Morphism) -> IntPolynomial {
    let mut sum = IntPolynomial::zero();
    for (q, w) in row.iter().zip(h.images()) {
        if q.is_zero() || w.is_empty() {
            continue;
        }
        for (d, c) in q.terms() {
            for (k, &a) in w.letters().iter().enumerate() {
                sum.add_term(d + k, c * BigInt::from(a));
            }
        }
    }
    sum
}

/// A dense matrix of integer polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<IntPolynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![IntPolynomial::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, IntPolynomial::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<IntPolynomial>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        Ok(PolyMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &IntPolynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: IntPolynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[IntPolynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument("matrix dimensions do not match".into()));
        }
        let mut out = PolyMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = IntPolynomial::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc += &(a * other.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[IntPolynomial]) -> Vec<IntPolynomial> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = IntPolynomial::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Entrywise evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|p| p.eval(x)).collect()).collect()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// The `m × n` matrix `(Q_{E_i, x_j, L})`.
pub fn coefficient_matrix(system: &System, l: &LengthType) -> Result<PolyMatrix> {
    if l.n() != system.n {
        return Err(Error::MismatchedUnknowns { expected: system.n, found: l.n() });
    }
    PolyMatrix::from_rows(system.equations.iter().map(|e| q_row(e, l)).collect()).map(|mut m| {
        m.cols = system.n;
        m
    })
}

fn pivot_key(p: &IntPolynomial) -> (usize, u64) {
    let size = p.terms().map(|(_, c)| c.bits()).max().unwrap_or(0);
    (p.degree().unwrap_or(0), size)
}

/// Exact rank over the field of rational functions.
///
/// Fraction-free (Bareiss) elimination: every intermediate entry is a minor
/// of the input, so each division by the previous pivot is exact in `Z[X]`.
/// Row contents are stripped once up front; pivots are chosen by least
/// degree, then least coefficient size.
pub fn rank_polymatrix(m: &PolyMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<IntPolynomial>> = (0..rows)
        .map(|i| {
            let row = m.row(i);
            let c = row.iter().fold(BigInt::zero(), |g, p| num_integer::Integer::gcd(&g, &p.content()));
            if c.is_zero() || c.is_one() {
                row.to_vec()
            } else {
                row.iter().map(|p| p.div_scalar_exact(&c)).collect()
            }
        })
        .collect();
    let mut prev = IntPolynomial::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| (pivot_key(&a[i][c]), i))
        else {
            continue;
        };
        a.swap(rank, p);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let mut v = &pivot_row[c] * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v -= &(&factor * &pivot_row[j]);
                }
                row[j] = if prev.is_one() {
                    v
                } else {
                    v.div_exact(&prev).expect("Bareiss division is exact")
                };
            }
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Status of the second claim of the rank bound: equal solution sets of a
/// fixed length type when the coefficient matrix has rank one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum ClaimStatus {
    NotApplicable(String),
    Holds,
    Fails(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTheoremReport {
    pub n: usize,
    pub matrix_rank: usize,
    pub solutions_checked: usize,
    /// Largest combinatorial rank among the supplied solutions.
    pub max_solution_rank: Option<usize>,
    /// Solutions whose rank `r` violates `matrix_rank <= n - r`.
    pub violations: Vec<Morphism>,
    pub equal_solution_sets: ClaimStatus,
}

impl RankTheoremReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && !matches!(self.equal_solution_sets, ClaimStatus::Fails(_))
    }
}

/// Checks the rank bound for a system at length type `L`.
///
/// `solutions` are solutions of the whole system with length type `L`;
/// `per_equation[i]` is the full set of solutions of equation `i` alone with
/// length type `L` (pass an empty slice to skip the second claim).
pub fn rank_theorem_check(
    system: &System,
    l: &LengthType,
    solutions: &[Morphism],
    per_equation: &[Vec<Morphism>],
) -> Result<RankTheoremReport> {
    let n = system.n;
    let matrix_rank = rank_polymatrix(&coefficient_matrix(system, l)?);
    let mut violations = Vec::new();
    let mut max_solution_rank = None;
    for h in solutions {
        if length_type_of(h) != *l || !system.is_solved_by(h) {
            return Err(Error::InvalidArgument(format!(
                "{h} is not a solution of length type {l}"
            )));
        }
        let r = combinatorial_rank(h, n).expect("rank never exceeds the number of unknowns");
        max_solution_rank = max_solution_rank.max(Some(r));
        if matrix_rank + r > n {
            violations.push(h.clone());
        }
    }
    let equal_solution_sets = if matrix_rank != 1 {
        ClaimStatus::NotApplicable(format!("matrix rank is {matrix_rank}"))
    } else if l.zero_count() > 1 {
        ClaimStatus::NotApplicable("more than one zero component in the length type".into())
    } else if system.equations.iter().any(Equation::is_trivial) {
        ClaimStatus::NotApplicable("system contains a trivial equation".into())
    } else if per_equation.is_empty() {
        ClaimStatus::NotApplicable("per-equation solution sets not supplied".into())
    } else if per_equation.len() != system.len() {
        return Err(Error::InvalidArgument("one solution set per equation is required".into()));
    } else {
        let sets: Vec<BTreeSet<&Morphism>> = per_equation.iter().map(|s| s.iter().collect()).collect();
        match sets.iter().position(|s| *s != sets[0]) {
            None => ClaimStatus::Holds,
            Some(i) => ClaimStatus::Fails(format!(
                "solutions of {} differ from those of {}",
                system.equations[i], system.equations[0]
            )),
        }
    };
    Ok(RankTheoremReport {
        n,
        matrix_rank,
        solutions_checked: solutions.len(),
        max_solution_rank,
        violations,
        equal_solution_sets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn xyz() -> Unknowns {
        Unknowns::new(vec!["x".into(), "y".into(), "z".into()]).unwrap()
    }

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn q_examples() {
        let e = xyz().parse_equation("xyz=zxy").unwrap();
        let l = LengthType(vec![1, 1, 2]);
        assert_eq!(q_polynomial(&e, Var(0), &l), p("1 - X^2"));
        assert_eq!(q_polynomial(&e, Var(1), &l), p("X - X^3"));
        assert_eq!(q_polynomial(&e, Var(2), &l), p("X^2 - 1"));
        let t = xyz().parse_equation("xy = xy").unwrap();
        for v in t.vars() {
            assert!(q_polynomial(&t, v, &l).is_zero());
        }
    }

    #[test]
    fn residual_examples() {
        let e = xyz().parse_equation("xyz=zxy").unwrap();
        let h = Morphism::from_strs(&["1", "2", "12"]).unwrap();
        assert!(residual(&e, &h).is_zero());
        let c = Equation::parse_canonical(2, "x1 x2 = x2 x1").unwrap();
        let h = Morphism::from_strs(&["1", "2"]).unwrap();
        assert_eq!(residual(&c, &h), p("-1 + X"));
        let t = Equation::parse_canonical(2, "x1 = x1").unwrap();
        assert!(residual(&t, &h).is_zero());
    }

    #[test]
    fn coefficient_matrix_examples() {
        let (_, sys) = parse_system("unknowns: x y z\nxyz=zxy\n").unwrap();
        let m = coefficient_matrix(&sys, &LengthType(vec![1, 1, 2])).unwrap();
        assert_eq!(m.row(0), &[p("1 - X^2"), p("X - X^3"), p("X^2 - 1")]);
        assert_eq!(rank_polymatrix(&m), 1);

        let (_, sys) = parse_system("x1 x2 = x2 x1\nx1x2=x2x1").unwrap();
        let m = coefficient_matrix(&sys, &LengthType(vec![1, 1])).unwrap();
        assert_eq!(m.row(0), &[p("1 - X"), p("X - 1")]);
        assert_eq!(m.row(0), m.row(1));

        let (_, sys) = parse_system("x1 x2 = x1 x2").unwrap();
        let m = coefficient_matrix(&sys, &LengthType(vec![3, 4])).unwrap();
        assert!(m.row(0).iter().all(IntPolynomial::is_zero));
        assert!(coefficient_matrix(&sys, &LengthType(vec![1])).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_polymatrix(&PolyMatrix::identity(3)), 3);
        let m = PolyMatrix::from_rows(vec![
            vec![p("1 - X"), p("X - 1")],
            vec![p("X - X^2"), p("X^2 - X")],
        ])
        .unwrap();
        assert_eq!(rank_polymatrix(&m), 1);
        assert_eq!(rank_polymatrix(&PolyMatrix::zeros(3, 4)), 0);
        let m = PolyMatrix::from_rows(vec![
            vec![p("0"), p("X"), p("1")],
            vec![p("0"), p("X^2"), p("X")],
            vec![p("1"), p("0"), p("2 + X")],
        ])
        .unwrap();
        assert_eq!(rank_polymatrix(&m), 2);
    }

    #[test]
    fn parsing_errors_carry_positions() {
        let err = xyz().parse_equation("xyw = zxy").unwrap_err();
        assert_eq!(err, Error::parse(1, 3, "unknown name at \"w\""));
        assert!(matches!(parse_system("x1 x2 x1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_system("x1 = x2\nx1 = y"), Err(Error::Parse { line: 2, column: 6, .. })));
        assert!(matches!(xyz().parse_equation("x = y = z"), Err(Error::Parse { .. })));
        assert_eq!(Equation::from_indices(2, &[0], &[2]), Err(Error::UnknownOutOfRange { index: 3, n: 2 }));
    }

    #[test]
    fn system_file_forms() {
        let (u, sys) = parse_system("# comment\nunknowns: 4\nx1 x2 = x2 x1  # trailing\n").unwrap();
        assert_eq!(u.len(), 4);
        assert_eq!(sys.n(), 4);
        let (u, sys) = parse_system("x1x2x3 = x3 x_1 x2\nx1 = eps").unwrap();
        assert_eq!(u.len(), 3);
        assert_eq!(sys.equations()[0].rhs(), &[Var(2), Var(0), Var(1)]);
        assert!(sys.equations()[1].rhs().is_empty());
    }

    #[test]
    fn morphism_file() {
        let h = xyz().parse_morphism("x = 1\ny = [10,2]\nz = eps\n").unwrap();
        assert_eq!(h.images(), &[Word::new(vec![1]).unwrap(), Word::new(vec![10, 2]).unwrap(), Word::empty()]);
        assert!(matches!(xyz().parse_morphism("x = 1\ny = 2"), Err(Error::Parse { .. })));
        assert!(matches!(xyz().parse_morphism("x = 1\nx = 2\nz=1"), Err(Error::Parse { line: 2, .. })));
        let again = xyz().parse_morphism(&xyz().render_morphism(&h)).unwrap();
        assert_eq!(again, h);
    }

    #[test]
    fn rank_theorem_on_known_solution() {
        let (_, sys) = parse_system("unknowns: x y z\nxyz=zxy").unwrap();
        let l = LengthType(vec![1, 1, 2]);
        let h = Morphism::from_strs(&["1", "2", "12"]).unwrap();
        let report = rank_theorem_check(&sys, &l, std::slice::from_ref(&h), &[]).unwrap();
        assert_eq!(report.matrix_rank, 1);
        assert_eq!(report.max_solution_rank, Some(2));
        assert!(report.passed());
        let bad = Morphism::from_strs(&["1", "2", "21"]).unwrap();
        assert!(rank_theorem_check(&sys, &l, &[bad], &[]).is_err());
    }

    #[test]
    fn trivial_equation_claim_not_applicable() {
        let (_, sys) = parse_system("x1 x2 = x1 x2").unwrap();
        let l = LengthType(vec![1, 1]);
        let r = rank_theorem_check(&sys, &l, &[], &[vec![]]).unwrap();
        assert!(matches!(r.equal_solution_sets, ClaimStatus::NotApplicable(_)));
        assert!(r.passed());
    }
}
