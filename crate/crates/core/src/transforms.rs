//! Elementary transformations, the factorization `h = θ ∘ φ_m ∘ ... ∘ φ_1 ∘ α`
//! of a solution, and the occurrence and position matrices that describe how
//! length types and encodings transform under endomorphisms of unknowns.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::equation::{rank_polymatrix, Equation, PolyMatrix};
use crate::error::{Error, Result};
use crate::poly::{encode_poly, IntPolynomial};
use crate::word::{length_type_of, parse_word_at, LengthType, Morphism, Var, Word};

/// An endomorphism of the free monoid on the unknowns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VarMorphism {
    images: Vec<Vec<Var>>,
}

impl VarMorphism {
    pub fn new(images: Vec<Vec<Var>>) -> Result<Self> {
        let n = images.len();
        if let Some(v) = images.iter().flatten().find(|v| v.0 >= n) {
            return Err(Error::UnknownOutOfRange { index: v.0 + 1, n });
        }
        Ok(VarMorphism { images })
    }

    pub fn identity(n: usize) -> Self {
        VarMorphism {
            images: (0..n).map(|i| vec![Var(i)]).collect(),
        }
    }

    /// `α` with `α(x_i) = ε` where `erased[i]`, `α(x_i) = x_i` otherwise.
    pub fn erasing(erased: &[bool]) -> Self {
        VarMorphism {
            images: erased
                .iter()
                .enumerate()
                .map(|(i, &e)| if e { Vec::new() } else { vec![Var(i)] })
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, v: Var) -> &[Var] {
        &self.images[v.0]
    }

    pub fn apply(&self, w: &[Var]) -> Vec<Var> {
        w.iter().flat_map(|v| self.images[v.0].iter().copied()).collect()
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn after(&self, inner: &VarMorphism) -> VarMorphism {
        VarMorphism {
            images: inner.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    /// The morphism into words `g ∘ self`.
    pub fn then_morphism(&self, g: &Morphism) -> Morphism {
        Morphism::new(self.images.iter().map(|w| g.apply(w)).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransformKind {
    /// `y ↦ x y`
    Regular,
    /// `y ↦ x`
    Singular,
}

/// Maps `target` to `source · target` (regular) or to `source` (singular)
/// and fixes every other unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElementaryTransformation {
    pub target: Var,
    pub source: Var,
    pub kind: TransformKind,
}

impl ElementaryTransformation {
    pub fn new(target: Var, source: Var, kind: TransformKind) -> Result<Self> {
        if target == source {
            return Err(Error::InvalidArgument(format!(
                "elementary transformation needs distinct unknowns, got {target} twice"
            )));
        }
        Ok(ElementaryTransformation { target, source, kind })
    }

    pub fn regular(target: Var, source: Var) -> Result<Self> {
        Self::new(target, source, TransformKind::Regular)
    }

    pub fn singular(target: Var, source: Var) -> Result<Self> {
        Self::new(target, source, TransformKind::Singular)
    }

    pub fn to_morphism(&self, n: usize) -> VarMorphism {
        let mut m = VarMorphism::identity(n);
        m.images[self.target.0] = match self.kind {
            TransformKind::Regular => vec![self.source, self.target],
            TransformKind::Singular => vec![self.source],
        };
        m
    }

    fn substitute(&self, side: &mut Vec<Var>) {
        let mut out = Vec::with_capacity(side.len() + 4);
        for &v in side.iter() {
            if v == self.target {
                out.push(self.source);
                if self.kind == TransformKind::Regular {
                    out.push(self.target);
                }
            } else {
                out.push(v);
            }
        }
        *side = out;
    }
}

impl fmt::Display for ElementaryTransformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            TransformKind::Regular => write!(f, "regular {}<-{} {}", self.target, self.source, self.target),
            TransformKind::Singular => write!(f, "singular {}<-{}", self.target, self.source),
        }
    }
}

/// `h = θ ∘ φ_m ∘ ... ∘ φ_1 ∘ α` with `θ` nonerasing and `φ ∘ α` a solution
/// of the equation over unknowns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionFactorization {
    pub erased: Vec<bool>,
    /// `φ_1` first.
    pub steps: Vec<ElementaryTransformation>,
    pub theta: Morphism,
}

impl SolutionFactorization {
    pub fn n(&self) -> usize {
        self.erased.len()
    }

    /// Number of erased unknowns.
    pub fn s(&self) -> usize {
        self.erased.iter().filter(|&&e| e).count()
    }

    /// Number of singular steps.
    pub fn t(&self) -> usize {
        self.steps.iter().filter(|p| p.kind == TransformKind::Singular).count()
    }

    /// `n - s - t`, the rank of `φ ∘ α`.
    pub fn rank_bound(&self) -> usize {
        self.n() - self.s() - self.t()
    }

    pub fn alpha(&self) -> VarMorphism {
        VarMorphism::erasing(&self.erased)
    }

    /// `φ = φ_m ∘ ... ∘ φ_1`.
    pub fn phi(&self) -> VarMorphism {
        let n = self.n();
        self.steps
            .iter()
            .fold(VarMorphism::identity(n), |acc, step| step.to_morphism(n).after(&acc))
    }

    /// `f = φ ∘ α`.
    pub fn principal(&self) -> VarMorphism {
        self.phi().after(&self.alpha())
    }

    pub fn recompose(&self) -> Morphism {
        self.principal().then_morphism(&self.theta)
    }

    /// Renders `erase x3; regular x2<-x1 x2; singular x3<-x1; theta: x1=1, ...`.
    pub fn to_script(&self) -> String {
        let mut parts: Vec<String> = self
            .erased
            .iter()
            .enumerate()
            .filter(|(_, &e)| e)
            .map(|(i, _)| format!("erase {}", Var(i)))
            .collect();
        parts.extend(self.steps.iter().map(ToString::to_string));
        let theta: Vec<String> = self
            .theta
            .images()
            .iter()
            .enumerate()
            .map(|(i, w)| format!("{}={}", Var(i), w))
            .collect();
        parts.push(format!("theta: {}", theta.join(", ")));
        parts.join("; ")
    }

    pub fn parse_script(n: usize, script: &str) -> Result<Self> {
        let var = |tok: &str, col: usize| -> Result<Var> {
            let idx: usize = tok
                .strip_prefix('x')
                .and_then(|d| d.parse().ok())
                .filter(|&i| (1..=n).contains(&i))
                .ok_or_else(|| Error::parse(1, col, format!("invalid unknown {tok:?}")))?;
            Ok(Var(idx - 1))
        };
        let mut erased = vec![false; n];
        let mut steps = Vec::new();
        let mut theta = None;
        let mut col = 1;
        for part in script.split(';') {
            let item = part.trim();
            let here = col + (part.len() - part.trim_start().len());
            col += part.len() + 1;
            if let Some(v) = item.strip_prefix("erase ") {
                erased[var(v.trim(), here)?.0] = true;
            } else if let Some(rest) = item.strip_prefix("regular ") {
                let (t, s) = rest
                    .split_once("<-")
                    .ok_or_else(|| Error::parse(1, here, "expected '<-'"))?;
                let target = var(t.trim(), here)?;
                let mut toks = s.split_whitespace();
                let source = var(toks.next().unwrap_or(""), here)?;
                if toks.next().map(|t| var(t, here)).transpose()? != Some(target) || toks.next().is_some() {
                    return Err(Error::parse(1, here, "regular step must read 'y<-x y'"));
                }
                steps.push(ElementaryTransformation::regular(target, source)?);
            } else if let Some(rest) = item.strip_prefix("singular ") {
                let (t, s) = rest
                    .split_once("<-")
                    .ok_or_else(|| Error::parse(1, here, "expected '<-'"))?;
                steps.push(ElementaryTransformation::singular(var(t.trim(), here)?, var(s.trim(), here)?)?);
            } else if let Some(rest) = item.strip_prefix("theta:") {
                let mut images = vec![None; n];
                for assignment in rest.split(',') {
                    let (name, w) = assignment
                        .split_once('=')
                        .ok_or_else(|| Error::parse(1, here, "expected 'x=word' in theta"))?;
                    let v = var(name.trim(), here)?;
                    images[v.0] = Some(parse_word_at(w, 1, here)?);
                }
                let images: Option<Vec<Word>> = images.into_iter().collect();
                theta = Some(Morphism::new(
                    images.ok_or_else(|| Error::parse(1, here, "theta must assign every unknown"))?,
                ));
            } else {
                return Err(Error::parse(1, here, format!("unrecognized step {item:?}")));
            }
        }
        let theta = theta.ok_or_else(|| Error::parse(1, col, "missing theta"))?;
        Ok(SolutionFactorization { erased, steps, theta })
    }
}

/// Factorizes a solution by erasing empty images and then running the Levi
/// reduction on the leading unknowns of both sides.
///
/// Equal leading unknowns cancel. Distinct leading unknowns with equal
/// images give a singular step sending the higher-indexed one to the lower;
/// otherwise the longer image loses the shorter one as a prefix through a
/// regular step. Values of `θ` that the equation leaves unconstrained are
/// the word `1`.
pub fn factorize_solution(e: &Equation, h: &Morphism) -> Result<SolutionFactorization> {
    if h.n() != e.n() {
        return Err(Error::MismatchedUnknowns { expected: e.n(), found: h.n() });
    }
    if !e.is_solved_by(h) {
        return Err(Error::NotASolution);
    }
    let n = e.n();
    let erased: Vec<bool> = h.images().iter().map(Word::is_empty).collect();
    let mut g: Vec<Word> = h.images().to_vec();
    let mut free = erased.clone();
    let mut lhs: Vec<Var> = e.lhs().iter().copied().filter(|v| !erased[v.0]).collect();
    let mut rhs: Vec<Var> = e.rhs().iter().copied().filter(|v| !erased[v.0]).collect();
    let mut steps = Vec::new();
    loop {
        let common = lhs.iter().zip(&rhs).take_while(|(a, b)| a == b).count();
        lhs.drain(..common);
        rhs.drain(..common);
        let (Some(&x), Some(&y)) = (lhs.first(), rhs.first()) else {
            debug_assert!(lhs.is_empty() && rhs.is_empty());
            break;
        };
        let step = if g[x.0].len() == g[y.0].len() {
            debug_assert_eq!(g[x.0], g[y.0]);
            let (lo, hi) = if x < y { (x, y) } else { (y, x) };
            free[hi.0] = true;
            ElementaryTransformation::singular(hi, lo)?
        } else {
            let (short, long) = if g[x.0].len() < g[y.0].len() { (x, y) } else { (y, x) };
            let cut = g[short.0].len();
            debug_assert_eq!(&g[long.0].letters()[..cut], g[short.0].letters());
            g[long.0] = g[long.0].factor(cut, g[long.0].len());
            ElementaryTransformation::regular(long, short)?
        };
        step.substitute(&mut lhs);
        step.substitute(&mut rhs);
        steps.push(step);
    }
    let one = Word::new(vec![1]).expect("1 is a valid letter");
    let theta = Morphism::new(
        (0..n)
            .map(|i| if free[i] { one.clone() } else { g[i].clone() })
            .collect(),
    );
    Ok(SolutionFactorization { erased, steps, theta })
}

/// `(|F(x_i)|_{x_j})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianMatrix {
    pub entries: Vec<Vec<u64>>,
}

impl AbelianMatrix {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// `A · L`.
    pub fn apply(&self, l: &LengthType) -> LengthType {
        LengthType(
            self.entries
                .iter()
                .map(|row| row.iter().zip(l.lengths()).map(|(&a, &b)| a as usize * b).sum())
                .collect(),
        )
    }

    pub fn mul(&self, other: &AbelianMatrix) -> AbelianMatrix {
        let n = self.n();
        AbelianMatrix {
            entries: (0..n)
                .map(|i| (0..n).map(|j| (0..n).map(|k| self.entries[i][k] * other.entries[k][j]).sum()).collect())
                .collect(),
        }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&a| IntPolynomial::constant(a)).collect())
            .collect();
        rank_polymatrix(&PolyMatrix::from_rows(rows).expect("square"))
    }
}

pub fn abelian_matrix(f: &VarMorphism) -> AbelianMatrix {
    let n = f.n();
    AbelianMatrix {
        entries: f
            .images
            .iter()
            .map(|w| {
                let mut row = vec![0u64; n];
                for v in w {
                    row[v.0] += 1;
                }
                row
            })
            .collect(),
    }
}

/// `B_{F,L}` with `b_ij = Σ_{u x_j ≤ F(x_i)} X^{ℓ_L(u)}`.
pub fn position_matrix(f: &VarMorphism, l: &LengthType) -> Result<PolyMatrix> {
    let n = f.n();
    if l.n() != n {
        return Err(Error::MismatchedUnknowns { expected: n, found: l.n() });
    }
    let mut m = PolyMatrix::zeros(n, n);
    for (i, w) in f.images.iter().enumerate() {
        let mut row = vec![IntPolynomial::zero(); n];
        let mut offset = 0;
        for v in w {
            row[v.0].add_term(offset, BigInt::one());
            offset += l.get(*v);
        }
        for (j, p) in row.into_iter().enumerate() {
            m.set(i, j, p);
        }
    }
    Ok(m)
}

/// `(P(G(x_1)), ..., P(G(x_n)))`.
pub fn encode_vector(g: &Morphism) -> Vec<IntPolynomial> {
    g.images().iter().map(encode_poly).collect()
}

/// Checks `L_{G∘F} = A_F L_G` and `P(G∘F) = B_{F,L} P(G)` with `L = L_G`.
pub fn verify_composition_identities(f: &VarMorphism, g: &Morphism) -> Result<()> {
    if f.n() != g.n() {
        return Err(Error::MismatchedUnknowns { expected: f.n(), found: g.n() });
    }
    let composed = f.then_morphism(g);
    let lg = length_type_of(g);
    let lhs = length_type_of(&composed);
    let rhs = abelian_matrix(f).apply(&lg);
    if lhs != rhs {
        return Err(Error::CheckFailed(format!("length identity: L_(G∘F) = {lhs} but A_F·L_G = {rhs}")));
    }
    let direct = encode_vector(&composed);
    let via_matrix = position_matrix(f, &lg)?.apply(&encode_vector(g));
    if direct != via_matrix {
        return Err(Error::CheckFailed("encoding identity P(G∘F) = B_(F,L)·P(G) fails".into()));
    }
    Ok(())
}

/// `B_{F_1,L_1} ··· B_{F_m,L_m}` where `L_k` is the length type of
/// `G ∘ F_m ∘ ... ∘ F_{k+1}`; `chain[0]` is `F_1`, applied first.
pub fn chain_position_matrix(chain: &[VarMorphism], g: &Morphism) -> Result<PolyMatrix> {
    let n = g.n();
    let mut product = PolyMatrix::identity(n);
    // Walk from F_m down to F_1, extending G on the right.
    let mut downstream = g.clone();
    let mut factors = Vec::with_capacity(chain.len());
    for f in chain.iter().rev() {
        factors.push(position_matrix(f, &length_type_of(&downstream))?);
        downstream = f.then_morphism(&downstream);
    }
    for b in factors.iter().rev() {
        product = product.mul(b)?;
    }
    Ok(product)
}

/// `A_{F_1} ··· A_{F_m}`.
pub fn chain_abelian_matrix(chain: &[VarMorphism], n: usize) -> AbelianMatrix {
    chain.iter().fold(abelian_matrix(&VarMorphism::identity(n)), |acc, f| acc.mul(&abelian_matrix(f)))
}

/// `G ∘ F_m ∘ ... ∘ F_1`.
pub fn compose_chain(chain: &[VarMorphism], g: &Morphism) -> Morphism {
    chain.iter().rev().fold(g.clone(), |acc, f| f.then_morphism(&acc))
}
