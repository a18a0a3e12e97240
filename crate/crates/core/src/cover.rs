//! Hyperplane covers for length types of rank `n - 1` solutions of a pair of
//! equations, and the results built on them: the balance theorem, the graph
//! lemma, the pair-form theorem and chain bounds.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::equation::{Equation, System};
use crate::error::{Error, Result};
use crate::genpoly::{minor_t, occurrence_forms, s_polynomial, LinForm};
use crate::oracle::{enumerate_solutions, CheckOutcome, EnumerationBudget};
use crate::word::{combinatorial_rank, commute_check, length_type_of, LengthType, Morphism, Var};

/// The hyperplane `p(L) = q(L)` through the origin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyperplane {
    pub p: LinForm,
    pub q: LinForm,
    /// `p - q` divided by its content, first nonzero component positive.
    pub normal: Vec<i64>,
    /// The normal rendered as `positive part = negative part`.
    pub relation: String,
}

impl Hyperplane {
    pub fn new(p: LinForm, q: LinForm) -> Result<Self> {
        if p.n() != q.n() {
            return Err(Error::MismatchedUnknowns { expected: p.n(), found: q.n() });
        }
        let normal = normalize(&p.difference(&q)).ok_or_else(|| Error::InvalidArgument("p and q coincide".into()))?;
        let relation = render_relation(&normal);
        Ok(Hyperplane { p, q, normal, relation })
    }

    pub fn contains(&self, l: &LengthType) -> bool {
        self.p.eval(l) == self.q.eval(l)
    }

    pub fn contains_point(&self, point: &[i64]) -> bool {
        self.normal.iter().zip(point).map(|(a, b)| a * b).sum::<i64>() == 0
    }
}

fn normalize(v: &[i64]) -> Option<Vec<i64>> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        return None;
    }
    let first = *v.iter().find(|&&x| x != 0)?;
    let g = if first < 0 { -g } else { g };
    Some(v.iter().map(|x| x / g).collect())
}

fn render_side(terms: &[(usize, i64)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|&(i, c)| if c == 1 { format!("X{}", i + 1) } else { format!("{c}X{}", i + 1) })
        .collect::<Vec<_>>()
        .join("+")
}

fn render_relation(normal: &[i64]) -> String {
    let pos: Vec<(usize, i64)> = normal.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, &c)| (i, c)).collect();
    let neg: Vec<(usize, i64)> = normal.iter().enumerate().filter(|(_, &c)| c < 0).map(|(i, &c)| (i, -c)).collect();
    format!("{} = {}", render_side(&pos), render_side(&neg))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverMode {
    /// Pair only the retained minimal exponents.
    Minimal,
    /// Pair every positive exponent with every negative one.
    FullPairing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneCover {
    pub n: usize,
    /// Zero-based indices of the chosen unknowns `x_k`, `x_l`.
    pub k: usize,
    pub l: usize,
    pub mode: CoverMode,
    /// `(|E1|_{x_k} + |E1|_{x_l})^2`.
    pub bound: u64,
    /// Terms of the expanded minor before and after cancellation.
    pub minor_terms_before: usize,
    pub minor_terms_after: usize,
    pub p_minimal: Vec<LinForm>,
    pub q_minimal: Vec<LinForm>,
    pub planes: Vec<Hyperplane>,
}

impl HyperplaneCover {
    pub fn covers(&self, l: &LengthType) -> bool {
        self.planes.iter().any(|h| h.contains(l))
    }

    pub fn relations(&self) -> Vec<&str> {
        self.planes.iter().map(|h| h.relation.as_str()).collect()
    }
}

/// `|E1|_{x_k} + |E1|_{x_l}`, squared.
fn pair_weight(e1: &Equation, k: Var, l: Var) -> u64 {
    let s = (e1.occurrences(k) + e1.occurrences(l)) as u64;
    s * s
}

/// Chooses `(k, l)`, `k < l`, with a nonzero minor and least bound, ties
/// broken lexicographically.
pub fn choose_pair(e1: &Equation, e2: &Equation) -> Result<(Var, Var)> {
    if e1.n() != e2.n() {
        return Err(Error::MismatchedUnknowns { expected: e1.n(), found: e2.n() });
    }
    if e1.is_trivial() || e2.is_trivial() {
        return Err(Error::TrivialEquation);
    }
    let n = e1.n();
    let mut best: Option<(u64, Var, Var)> = None;
    for k in 0..n {
        for l in k + 1..n {
            let (k, l) = (Var(k), Var(l));
            let w = pair_weight(e1, k, l);
            if best.is_some_and(|(bw, _, _)| bw <= w) {
                continue;
            }
            if !minor_t(e1, e2, k, l)?.is_zero() {
                best = Some((w, k, l));
            }
        }
    }
    best.map(|(_, k, l)| (k, l)).ok_or(Error::IndistinguishableByMinors)
}

/// For each `x_i`, the least `y_j` with `x_i + y_j` in `target`.
fn retain_least(xs: &[LinForm], ys: &[LinForm], target: &BTreeSet<&LinForm>, out: &mut Vec<LinForm>) {
    for x in xs {
        if let Some(s) = ys.iter().map(|y| x + y).find(|s| target.contains(s)) {
            out.push(s);
        }
    }
}

fn minimal_antichain(mut forms: Vec<LinForm>) -> Vec<LinForm> {
    forms.sort();
    forms.dedup();
    forms
        .iter()
        .filter(|f| !forms.iter().any(|g| g != *f && g.precedes_eq(f)))
        .cloned()
        .collect()
}

/// A cover of the length types of the common rank `n - 1` solutions of `e1`
/// and `e2` by hyperplanes `p = q`, where `p` and `q` are exponents of the
/// positive and negative terms of the minor `t_kl`.
pub fn cover_pair(e1: &Equation, e2: &Equation, mode: CoverMode) -> Result<HyperplaneCover> {
    let (k, l) = choose_pair(e1, e2)?;
    cover_pair_at(e1, e2, k, l, mode)
}

/// [`cover_pair`] with the unknowns `x_k`, `x_l` fixed by the caller.
pub fn cover_pair_at(e1: &Equation, e2: &Equation, k: Var, l: Var, mode: CoverMode) -> Result<HyperplaneCover> {
    if e1.is_trivial() || e2.is_trivial() {
        return Err(Error::TrivialEquation);
    }
    let n = e1.n();
    if k == l || k.0 >= n || l.0 >= n {
        return Err(Error::InvalidArgument(format!("invalid pair of unknowns ({}, {})", k.0 + 1, l.0 + 1)));
    }
    let t = minor_t(e1, e2, k, l)?;
    if t.is_zero() {
        return Err(Error::IndistinguishableByMinors);
    }
    let (pos, neg) = t.split_signs();
    let pos: BTreeSet<&LinForm> = pos.into_iter().collect();
    let neg: BTreeSet<&LinForm> = neg.into_iter().collect();

    let before = s_polynomial(e1, k).term_count() * s_polynomial(e2, l).term_count()
        + s_polynomial(e1, l).term_count() * s_polynomial(e2, k).term_count();

    let (p_minimal, q_minimal) = match mode {
        CoverMode::FullPairing => (pos.iter().map(|&f| f.clone()).collect(), neg.iter().map(|&f| f.clone()).collect()),
        CoverMode::Minimal => {
            let a = occurrence_forms(n, e1.lhs(), k);
            let a2 = occurrence_forms(n, e1.rhs(), k);
            let b = occurrence_forms(n, e2.lhs(), l);
            let b2 = occurrence_forms(n, e2.rhs(), l);
            let c = occurrence_forms(n, e1.lhs(), l);
            let c2 = occurrence_forms(n, e1.rhs(), l);
            let d = occurrence_forms(n, e2.lhs(), k);
            let d2 = occurrence_forms(n, e2.rhs(), k);
            let mut ps = Vec::new();
            retain_least(&a, &b, &pos, &mut ps);
            retain_least(&a2, &b2, &pos, &mut ps);
            retain_least(&c, &d2, &pos, &mut ps);
            retain_least(&c2, &d, &pos, &mut ps);
            let mut qs = Vec::new();
            retain_least(&a, &b2, &neg, &mut qs);
            retain_least(&a2, &b, &neg, &mut qs);
            retain_least(&c, &d, &neg, &mut qs);
            retain_least(&c2, &d2, &neg, &mut qs);
            (minimal_antichain(ps), minimal_antichain(qs))
        }
    };

    let mut planes: Vec<Hyperplane> = Vec::new();
    for p in &p_minimal {
        for q in &q_minimal {
            let h = Hyperplane::new(p.clone(), q.clone())?;
            if !planes.iter().any(|g| g.normal == h.normal) {
                planes.push(h);
            }
        }
    }
    Ok(HyperplaneCover {
        n,
        k: k.0,
        l: l.0,
        mode,
        bound: pair_weight(e1, k, l),
        minor_terms_before: before,
        minor_terms_after: t.term_count(),
        p_minimal,
        q_minimal,
        planes,
    })
}

fn exact_rank(h: &Morphism) -> usize {
    combinatorial_rank(h, h.n()).expect("rank never exceeds the number of unknowns")
}

/// Every given common solution of rank `n - 1` must have its length type on
/// some plane of the cover.
pub fn cover_soundness_check(
    e1: &Equation,
    e2: &Equation,
    cover: &HyperplaneCover,
    solutions: &[Morphism],
) -> Result<CheckOutcome> {
    for h in solutions {
        if !e1.is_solved_by(h) || !e2.is_solved_by(h) {
            return Err(Error::NotASolution);
        }
        if h.n() == 0 || exact_rank(h) != h.n() - 1 {
            return Err(Error::InvalidArgument(format!("solution {h} does not have rank n-1")));
        }
    }
    match solutions.iter().find(|h| !cover.covers(&length_type_of(h))) {
        Some(h) => Ok(CheckOutcome::Failed(format!("length type {} of {h} lies on no plane", length_type_of(h)))),
        None => Ok(CheckOutcome::Passed(format!("{} solutions covered", solutions.len()))),
    }
}

/// Enumerated common solutions of rank `n - 1`.
pub fn common_top_rank_solutions(e1: &Equation, e2: &Equation, budget: &EnumerationBudget) -> Result<Vec<Morphism>> {
    let system = System::new(e1.n(), vec![e1.clone(), e2.clone()])?;
    Ok(top_rank(&system, budget))
}

fn top_rank(system: &System, budget: &EnumerationBudget) -> Vec<Morphism> {
    let n = system.n();
    if n == 0 {
        return Vec::new();
    }
    enumerate_solutions(system, budget)
        .entries
        .into_iter()
        .map(|e| e.morphism)
        .filter(|h| exact_rank(h) == n - 1)
        .collect()
}

/// `|lhs|_{x_i} - |rhs|_{x_i}` for each unknown.
pub fn balance_profile(e: &Equation) -> Vec<i64> {
    (0..e.n())
        .map(|i| e.lhs_count(Var(i)) as i64 - e.rhs_count(Var(i)) as i64)
        .collect()
}

pub fn is_balanced(e: &Equation) -> bool {
    balance_profile(e).iter().all(|&c| c == 0)
}

/// If `e1` is unbalanced and the pair has a rank `n - 1` solution, every
/// rank `n - 1` solution of `e1` must solve `e2`.
pub fn balance_theorem_check(e1: &Equation, e2: &Equation, budget: &EnumerationBudget) -> Result<CheckOutcome> {
    if e1.n() != e2.n() {
        return Err(Error::MismatchedUnknowns { expected: e1.n(), found: e2.n() });
    }
    if is_balanced(e1) {
        return Ok(CheckOutcome::Skipped("E1 is balanced".into()));
    }
    let sol1 = top_rank(&System::single(e1.clone()), budget);
    let common = sol1.iter().filter(|h| e2.is_solved_by(h)).count();
    if common == 0 {
        return Ok(CheckOutcome::Skipped("no common solution of rank n-1 within budget".into()));
    }
    match sol1.iter().find(|h| !e2.is_solved_by(h)) {
        Some(h) => Ok(CheckOutcome::Failed(format!("{h} solves E1 with rank n-1 but not E2"))),
        None => Ok(CheckOutcome::Passed(format!("{} rank n-1 solutions of E1 all solve E2", sol1.len()))),
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Connected components of the graph joining the first unknowns of the two
/// sides of each equation.
pub fn graph_components(system: &System) -> Result<usize> {
    let n = system.n();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut components = n;
    for e in system.equations() {
        let (Some(a), Some(b)) = (e.lhs().first(), e.rhs().first()) else {
            return Err(Error::EmptySide);
        };
        let (ra, rb) = (find(&mut parent, a.0), find(&mut parent, b.0));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    Ok(components)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphLemmaReport {
    pub components: usize,
    pub nonerasing_solutions: usize,
    pub max_rank: usize,
    pub outcome: CheckOutcome,
}

/// Every enumerated nonerasing solution must have rank at most the number of
/// graph components.
pub fn graph_lemma_check(system: &System, budget: &EnumerationBudget) -> Result<GraphLemmaReport> {
    let components = graph_components(system)?;
    let sols: Vec<Morphism> = enumerate_solutions(system, budget)
        .entries
        .into_iter()
        .map(|e| e.morphism)
        .filter(Morphism::is_nonerasing)
        .collect();
    let mut max_rank = 0;
    let mut violation = None;
    for h in &sols {
        let r = exact_rank(h);
        max_rank = max_rank.max(r);
        if r > components && violation.is_none() {
            violation = Some(format!("{h} has rank {r} > {components}"));
        }
    }
    let outcome = match violation {
        Some(v) => CheckOutcome::Failed(v),
        None => CheckOutcome::Passed(format!("{} nonerasing solutions, max rank {max_rank}", sols.len())),
    };
    Ok(GraphLemmaReport {
        components,
        nonerasing_solutions: sols.len(),
        max_rank,
        outcome,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum PairFormOutcome {
    NotApplicable { reason: String },
    /// Both equations have one side starting with `a` and the other with
    /// `b^k c`, for distinct unknowns `a`, `b`, `c`.
    Confirmed { a: usize, b: usize, c: usize, k: usize },
    Failed { reason: String },
}

/// The exponent `k` if one side of `e` starts with `a` and the other with
/// exactly `k` copies of `b` followed by `c`.
fn shape_exponent(e: &Equation, a: Var, b: Var, c: Var) -> Vec<usize> {
    let mut out = Vec::new();
    for (s, t) in [(e.lhs(), e.rhs()), (e.rhs(), e.lhs())] {
        if s.first() != Some(&a) {
            continue;
        }
        let k = t.iter().take_while(|&&v| v == b).count();
        if k >= 1 && t.get(k) == Some(&c) {
            out.push(k);
        }
    }
    out
}

/// Searches a renaming under which both equations read
/// `x1... = x2^k x3...` for a common `k >= 1`.
pub fn pair_form_shape(e1: &Equation, e2: &Equation) -> Option<(Var, Var, Var, usize)> {
    let n = e1.n();
    for a in (0..n).map(Var) {
        for b in (0..n).map(Var).filter(|&b| b != a) {
            for c in (0..n).map(Var).filter(|&c| c != a && c != b) {
                let k1 = shape_exponent(e1, a, b, c);
                let k2 = shape_exponent(e2, a, b, c);
                if let Some(&k) = k1.iter().find(|k| k2.contains(k)) {
                    return Some((a, b, c, k));
                }
            }
        }
    }
    None
}

pub fn pair_form_check(e1: &Equation, e2: &Equation, h: &Morphism) -> Result<PairFormOutcome> {
    if e1.n() != e2.n() || e1.n() != h.n() {
        return Err(Error::MismatchedUnknowns { expected: e1.n(), found: e2.n().max(h.n()) });
    }
    let na = |reason: &str| Ok(PairFormOutcome::NotApplicable { reason: reason.into() });
    if e1.is_trivial() || e2.is_trivial() {
        return na("trivial equation");
    }
    if !e1.is_solved_by(h) || !e2.is_solved_by(h) {
        return na("h does not solve both equations");
    }
    let n = h.n();
    if n == 0 || exact_rank(h) != n - 1 {
        return na("h does not have rank n-1");
    }
    if !h.is_nonerasing() {
        return na("an empty image commutes with every word");
    }
    for i in 0..n {
        for j in i + 1..n {
            if commute_check(h.image(Var(i)), h.image(Var(j)))? {
                return na(&format!("images of x{} and x{} commute", i + 1, j + 1));
            }
        }
    }
    Ok(match pair_form_shape(e1, e2) {
        Some((a, b, c, k)) => PairFormOutcome::Confirmed { a: a.0, b: b.0, c: c.0, k },
        None => PairFormOutcome::Failed {
            reason: "no renaming gives the form x1... = x2^k x3...".into(),
        },
    })
}

/// `(|E1|_{x_k} + |E1|_{x_l})^2 + 1`.
pub fn chain_bound(e1: &Equation, k: Var, l: Var) -> u64 {
    pair_weight(e1, k, l) + 1
}

/// `N + 1` for a cover with `N` planes.
pub fn chain_bound_from_cover(cover: &HyperplaneCover) -> u64 {
    cover.planes.len() as u64 + 1
}

/// `(|E1|_{x_k} + |E1|_{x_l})^2 + 5`, for chains on three unknowns.
pub fn chain_corollary_bound(e1: &Equation, k: Var, l: Var) -> u64 {
    pair_weight(e1, k, l) + 5
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    /// `|Sol^{n-1}(E_1, ..., E_i)|` within budget, for each prefix.
    pub prefix_sizes: Vec<usize>,
    /// First (1-based) step where the descent is not strict.
    pub descent_fails_at: Option<usize>,
    /// Length of the longest strictly descending prefix.
    pub chain_length: usize,
    pub bound: Option<u64>,
    pub cover_bound: Option<u64>,
    pub outcome: CheckOutcome,
}

/// Checks strict descent of the rank `n - 1` solution sets of the prefixes
/// and compares the realized length with the chain bounds.
pub fn chain_check(system: &System, budget: &EnumerationBudget) -> Result<ChainReport> {
    if system.is_empty() {
        return Err(Error::InvalidArgument("chain needs at least one equation".into()));
    }
    if system.equations().iter().any(Equation::is_trivial) {
        return Err(Error::TrivialEquation);
    }
    let first = top_rank(&System::single(system.equations()[0].clone()), budget);
    let mut current = first;
    let mut prefix_sizes = vec![current.len()];
    for e in &system.equations()[1..] {
        current.retain(|h| e.is_solved_by(h));
        prefix_sizes.push(current.len());
    }
    let descent_fails_at = prefix_sizes.windows(2).position(|w| w[1] >= w[0]).map(|i| i + 2);
    let chain_length = descent_fails_at.map_or(prefix_sizes.len(), |s| s - 1);
    let last_nonempty = prefix_sizes[chain_length - 1] > 0;

    let (bound, cover_bound) = if system.len() >= 2 {
        let e = system.equations();
        match cover_pair(&e[0], &e[1], CoverMode::Minimal) {
            Ok(cover) => (Some(cover.bound + 1), Some(chain_bound_from_cover(&cover))),
            Err(Error::IndistinguishableByMinors) => (None, None),
            Err(err) => return Err(err),
        }
    } else {
        (None, None)
    };

    let outcome = if !last_nonempty {
        CheckOutcome::Skipped("last solution set of the descending prefix is empty within budget".into())
    } else if let Some(b) = bound.into_iter().chain(cover_bound).find(|&b| chain_length as u64 > b) {
        CheckOutcome::Failed(format!("chain of length {chain_length} exceeds bound {b}"))
    } else {
        CheckOutcome::Passed(format!("chain length {chain_length}"))
    };
    Ok(ChainReport {
        prefix_sizes,
        descent_fails_at,
        chain_length,
        bound,
        cover_bound,
        outcome,
    })
}
