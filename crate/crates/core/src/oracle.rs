//! Brute-force ground truth: exhaustive enumeration of solutions within a
//! budget, independence testing, entire-system sampling and the
//! power-identity check.
//!
//! Every verdict produced here is relative to its [`EnumerationBudget`].

use std::collections::BTreeSet;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::cover::is_balanced;
use crate::equation::{rank_theorem_check, Equation, RankTheoremReport, System};
use crate::error::{Error, Result};
use crate::word::{combinatorial_rank, length_type_of, LengthType, Morphism, Var, Word};

/// Which morphisms an enumeration visits: all images over `alphabet` whose
/// lengths sum to at most `max_total_length`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationBudget {
    pub alphabet: Vec<u32>,
    pub max_total_length: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            alphabet: vec![1, 2],
            max_total_length: 10,
        }
    }
}

impl EnumerationBudget {
    pub fn new(alphabet: Vec<u32>, max_total_length: usize) -> Result<Self> {
        if alphabet.is_empty() {
            return Err(Error::InvalidArgument("alphabet must be nonempty".into()));
        }
        if alphabet.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        let mut alphabet = alphabet;
        alphabet.sort_unstable();
        alphabet.dedup();
        Ok(EnumerationBudget {
            alphabet,
            max_total_length,
        })
    }

    pub fn binary(max_total_length: usize) -> Self {
        EnumerationBudget {
            alphabet: vec![1, 2],
            max_total_length,
        }
    }

    /// `Σ_{t <= B} C(t + n - 1, n - 1) · |Σ|^t`, the number of morphisms on
    /// `n` unknowns within the budget.
    pub fn candidate_count(&self, n: usize) -> u128 {
        let k = self.alphabet.len() as u128;
        (0..=self.max_total_length)
            .map(|t| compositions_count(t, n) * k.pow(t as u32))
            .sum()
    }
}

fn compositions_count(total: usize, parts: usize) -> u128 {
    if parts == 0 {
        return u128::from(total == 0);
    }
    // C(total + parts - 1, parts - 1)
    let (a, b) = (total + parts - 1, parts - 1);
    let mut c: u128 = 1;
    for i in 0..b {
        c = c * (a - i) as u128 / (i + 1) as u128;
    }
    c
}

/// All length types on `n` unknowns with total at most `max_total`, in
/// lexicographic order.
pub fn length_types(n: usize, max_total: usize) -> Vec<LengthType> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn rec(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<LengthType>) {
        if i == cur.len() {
            out.push(LengthType(cur.clone()));
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, max_total, &mut cur, &mut out);
    out
}

/// All words of length `len` over `alphabet`, in lexicographic order.
pub fn words_of_length(alphabet: &[u32], len: usize) -> Vec<Word> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u32>| {
                alphabet.iter().map(move |&a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(|w| Word::new(w).expect("alphabet letters are positive")).collect()
}

/// All words of length at most `max_len` over `alphabet`.
pub fn words_up_to(alphabet: &[u32], max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|l| words_of_length(alphabet, l)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum RankAnnotation {
    Exact(usize),
    ExceedsCap,
}

impl RankAnnotation {
    pub fn exact(self) -> Option<usize> {
        match self {
            RankAnnotation::Exact(r) => Some(r),
            RankAnnotation::ExceedsCap => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionEntry {
    pub morphism: Morphism,
    pub length_type: LengthType,
    pub rank: Option<RankAnnotation>,
}

impl SolutionEntry {
    fn new(morphism: Morphism) -> Self {
        SolutionEntry {
            length_type: length_type_of(&morphism),
            morphism,
            rank: None,
        }
    }
}

/// The solutions of a system found within a budget, sorted by length type
/// and then by images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionSet {
    pub n: usize,
    pub budget: EnumerationBudget,
    /// Morphisms within the budget; equals [`EnumerationBudget::candidate_count`].
    pub candidates: u128,
    pub entries: Vec<SolutionEntry>,
}

impl SolutionSet {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn morphisms(&self) -> impl Iterator<Item = &Morphism> {
        self.entries.iter().map(|e| &e.morphism)
    }

    pub fn contains(&self, h: &Morphism) -> bool {
        let key = (length_type_of(h), h);
        self.entries
            .binary_search_by(|e| (&e.length_type, &e.morphism).cmp(&(&key.0, key.1)))
            .is_ok()
    }

    fn filtered(&self, keep: impl Fn(&SolutionEntry) -> bool) -> SolutionSet {
        SolutionSet {
            n: self.n,
            budget: self.budget.clone(),
            candidates: self.candidates,
            entries: self.entries.iter().filter(|e| keep(e)).cloned().collect(),
        }
    }

    /// `Sol^r`: requires rank annotations (see [`rank_annotate`]).
    pub fn with_rank(&self, r: usize) -> SolutionSet {
        self.filtered(|e| {
            let rank = e.rank.unwrap_or_else(|| RankAnnotation::Exact(exact_rank(&e.morphism)));
            rank == RankAnnotation::Exact(r)
        })
    }

    /// `Sol_L`.
    pub fn with_length_type(&self, l: &LengthType) -> SolutionSet {
        self.filtered(|e| e.length_type == *l)
    }

    pub fn nonerasing(&self) -> SolutionSet {
        self.filtered(|e| e.morphism.is_nonerasing())
    }

    /// One JSON object per line: images, length type, rank annotation.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let line = ExportLine {
                images: e.morphism.images().iter().map(ToString::to_string).collect(),
                length_type: e.length_type.0.clone(),
                rank: e.rank,
            };
            out.push_str(&serde_json::to_string(&line).expect("serializable"));
            out.push('\n');
        }
        out
    }

    /// Parses [`SolutionSet::to_json_lines`] output back into entries.
    pub fn entries_from_json_lines(text: &str) -> Result<Vec<SolutionEntry>> {
        let mut out = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let parsed: ExportLine = serde_json::from_str(line)
                .map_err(|e| Error::parse(ln + 1, e.column(), e.to_string()))?;
            let images = parsed
                .images
                .iter()
                .map(|s| s.parse::<Word>())
                .collect::<Result<Vec<_>>>()?;
            let morphism = Morphism::new(images);
            if length_type_of(&morphism).0 != parsed.length_type {
                return Err(Error::parse(ln + 1, 1, "length type does not match images"));
            }
            out.push(SolutionEntry {
                morphism,
                length_type: LengthType(parsed.length_type),
                rank: parsed.rank,
            });
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct ExportLine {
    images: Vec<String>,
    length_type: Vec<usize>,
    rank: Option<RankAnnotation>,
}

fn exact_rank(h: &Morphism) -> usize {
    combinatorial_rank(h, h.n()).expect("rank never exceeds the number of unknowns")
}

/// Whether some morphism of length type `l` can solve every equation: both
/// sides of each must have equal length.
fn lengths_compatible(system: &System, l: &LengthType) -> bool {
    system.equations().iter().all(|e| l.eval(e.lhs()) == l.eval(e.rhs()))
}

struct FlatLayout {
    offsets: Vec<usize>,
    lengths: Vec<usize>,
}

impl FlatLayout {
    fn new(l: &LengthType) -> Self {
        let mut offsets = Vec::with_capacity(l.n());
        let mut acc = 0;
        for &len in l.lengths() {
            offsets.push(acc);
            acc += len;
        }
        FlatLayout {
            offsets,
            lengths: l.0.clone(),
        }
    }

    fn side<'a>(&'a self, side: &'a [Var], flat: &'a [u32]) -> impl Iterator<Item = u32> + 'a {
        side.iter().flat_map(move |v| flat[self.offsets[v.0]..self.offsets[v.0] + self.lengths[v.0]].iter().copied())
    }

    fn solves(&self, e: &Equation, flat: &[u32]) -> bool {
        self.side(e.lhs(), flat).eq(self.side(e.rhs(), flat))
    }

    fn morphism(&self, flat: &[u32]) -> Morphism {
        Morphism::new(
            self.offsets
                .iter()
                .zip(&self.lengths)
                .map(|(&o, &len)| Word::new(flat[o..o + len].to_vec()).expect("positive letters"))
                .collect(),
        )
    }
}

/// `Sol_L` over an alphabet: every solution of the system with length type `l`.
pub fn enumerate_length_type(system: &System, l: &LengthType, alphabet: &[u32]) -> Vec<Morphism> {
    let mut out = Vec::new();
    if !lengths_compatible(system, l) || alphabet.is_empty() {
        return out;
    }
    let layout = FlatLayout::new(l);
    let total = l.total();
    let mut digits = vec![0usize; total];
    let mut flat: Vec<u32> = vec![alphabet[0]; total];
    loop {
        if system.equations().iter().all(|e| layout.solves(e, &flat)) {
            out.push(layout.morphism(&flat));
        }
        // Odometer, last position fastest.
        let mut i = total;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < alphabet.len() {
                flat[i] = alphabet[digits[i]];
                break;
            }
            digits[i] = 0;
            flat[i] = alphabet[0];
        }
    }
}

/// All solutions of `system` within `budget`.
pub fn enumerate_solutions(system: &System, budget: &EnumerationBudget) -> SolutionSet {
    enumerate_solutions_parallel(system, budget, 1)
}

/// [`enumerate_solutions`] partitioned by length type across `workers`
/// threads; the result does not depend on `workers`.
pub fn enumerate_solutions_parallel(system: &System, budget: &EnumerationBudget, workers: usize) -> SolutionSet {
    let n = system.n();
    let types = length_types(n, budget.max_total_length);
    let workers = workers.max(1).min(types.len().max(1));
    let mut entries: Vec<SolutionEntry> = if workers == 1 {
        types
            .iter()
            .flat_map(|l| enumerate_length_type(system, l, &budget.alphabet))
            .map(SolutionEntry::new)
            .collect()
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let types = &types;
                    scope.spawn(move || {
                        types
                            .iter()
                            .skip(w)
                            .step_by(workers)
                            .flat_map(|l| enumerate_length_type(system, l, &budget.alphabet))
                            .map(SolutionEntry::new)
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    entries.sort_by(|a, b| (&a.length_type, &a.morphism).cmp(&(&b.length_type, &b.morphism)));
    entries.dedup_by(|a, b| a.morphism == b.morphism);
    SolutionSet {
        n,
        budget: budget.clone(),
        candidates: budget.candidate_count(n),
        entries,
    }
}

/// Annotates every solution with its combinatorial rank, searching sets of
/// at most `cap` words.
pub fn rank_annotate(mut set: SolutionSet, cap: usize) -> SolutionSet {
    for e in &mut set.entries {
        e.rank = Some(match combinatorial_rank(&e.morphism, cap) {
            Some(r) => RankAnnotation::Exact(r),
            None => RankAnnotation::ExceedsCap,
        });
    }
    set
}

/// Every morphism on `n` unknowns within the budget, in enumeration order.
pub fn all_morphisms(n: usize, budget: &EnumerationBudget) -> Vec<Morphism> {
    enumerate_solutions(&System::new(n, Vec::new()).expect("empty system"), budget)
        .entries
        .into_iter()
        .map(|e| e.morphism)
        .collect()
}

/// Runs the rank bound check at length type `l` with exhaustively
/// enumerated solution sets.
pub fn check_rank_theorem(system: &System, l: &LengthType, alphabet: &[u32]) -> Result<RankTheoremReport> {
    let solutions = enumerate_length_type(system, l, alphabet);
    let per_equation: Vec<Vec<Morphism>> = system
        .equations()
        .iter()
        .map(|e| enumerate_length_type(&System::single(e.clone()), l, alphabet))
        .collect();
    rank_theorem_check(system, l, &solutions, &per_equation)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsystemWitness {
    /// Index of the equation left out.
    pub dropped: usize,
    /// A morphism solving the other equations but not the dropped one.
    pub witness: Option<Morphism>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndependenceVerdict {
    IndependentWithinBudget,
    NotSeparableWithinBudget,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceReport {
    pub budget: EnumerationBudget,
    pub subsystems: Vec<SubsystemWitness>,
    pub verdict: IndependenceVerdict,
}

/// Searches, for each proper subsystem, a morphism that solves it but not
/// the whole system.
///
/// Only the maximal proper subsystems (one equation dropped) are searched: a
/// witness for one of them also separates every smaller subsystem it
/// contains, so the verdict covers all proper subsystems.
pub fn independence_check(system: &System, budget: &EnumerationBudget) -> IndependenceReport {
    let subsystems: Vec<SubsystemWitness> = (0..system.len())
        .map(|i| {
            let rest = system.without(i);
            let dropped = &system.equations()[i];
            let witness = enumerate_solutions(&rest, budget)
                .entries
                .into_iter()
                .map(|e| e.morphism)
                .find(|h| !dropped.is_solved_by(h));
            SubsystemWitness { dropped: i, witness }
        })
        .collect();
    let verdict = if subsystems.iter().all(|s| s.witness.is_some()) {
        IndependenceVerdict::IndependentWithinBudget
    } else {
        IndependenceVerdict::NotSeparableWithinBudget
    };
    IndependenceReport {
        budget: budget.clone(),
        subsystems,
        verdict,
    }
}

/// All words over the unknowns of length at most `max_len`, shortest first.
pub fn var_words_up_to(n: usize, max_len: usize) -> Vec<Vec<Var>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .into_iter()
            .flat_map(|w: Vec<Var>| {
                (0..n).map(move |i| {
                    let mut w = w.clone();
                    w.push(Var(i));
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Every equation `u = v` with `|u| + |v| <= max_len` on `n` unknowns.
/// Each unordered pair of sides appears once, with `u <= v`.
pub fn all_equations(n: usize, max_len: usize) -> Vec<Equation> {
    let words = var_words_up_to(n, max_len);
    let mut out = Vec::new();
    for u in &words {
        for v in &words {
            if u.len() + v.len() <= max_len && u <= v {
                out.push(Equation::new(n, u.clone(), v.clone()).expect("in range"));
            }
        }
    }
    out
}

/// The equations of length at most `max_eq_length` satisfied by `h`,
/// trivial ones included, deduplicated up to swapping sides.
pub fn entire_system_sample(h: &Morphism, max_eq_length: usize) -> Vec<Equation> {
    all_equations(h.n(), max_eq_length)
        .into_iter()
        .filter(|e| e.is_solved_by(h))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "detail")]
pub enum CheckOutcome {
    Passed(String),
    Skipped(String),
    Failed(String),
}

impl CheckOutcome {
    pub fn is_failure(&self) -> bool {
        matches!(self, CheckOutcome::Failed(_))
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, CheckOutcome::Passed(_))
    }
}

/// For two morphisms of rank `n - 1` with different sampled entire systems,
/// every sampled equation satisfied by both must be balanced.
pub fn entire_system_corollary_check(g: &Morphism, h: &Morphism, max_eq_length: usize) -> Result<CheckOutcome> {
    if g.n() != h.n() {
        return Err(Error::MismatchedUnknowns { expected: g.n(), found: h.n() });
    }
    let n = g.n();
    if n == 0 || exact_rank(g) != n - 1 || exact_rank(h) != n - 1 {
        return Ok(CheckOutcome::Skipped("both morphisms must have rank n-1".into()));
    }
    let kg: BTreeSet<Equation> = entire_system_sample(g, max_eq_length).into_iter().collect();
    let kh: BTreeSet<Equation> = entire_system_sample(h, max_eq_length).into_iter().collect();
    if kg == kh {
        return Ok(CheckOutcome::Skipped("sampled entire systems coincide".into()));
    }
    let common: Vec<&Equation> = kg.intersection(&kh).collect();
    match common.iter().find(|e| !is_balanced(e)) {
        Some(e) => Ok(CheckOutcome::Failed(format!("common equation {e} is not balanced"))),
        None => Ok(CheckOutcome::Passed(format!("{} common equations, all balanced", common.len()))),
    }
}

/// `s_0 u_1^i s_1 ... u_m^i s_m`.
pub fn power_word(s: &[Word], u: &[Word], i: usize) -> Word {
    let mut out = s[0].clone();
    for (uj, sj) in u.iter().zip(&s[1..]) {
        out.push_word(&uj.pow(i));
        out.push_word(sj);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum PowerIdentityOutcome {
    /// Premise held on every index; the identity was checked for all
    /// `i <= verified_up_to`.
    Certified { verified_up_to: usize },
    PremiseFails { index: usize },
    /// The identity failed outside the premise indices.
    Contradicted { index: usize },
}

/// Checks `U_i = V_i` on the indices `indices`; when all hold, spot-verifies
/// the identity for every `i` in `0..=max(indices) + extra`.
pub fn power_identity_check(
    s: &[Word],
    t: &[Word],
    u: &[Word],
    v: &[Word],
    indices: &BTreeSet<usize>,
    extra: usize,
) -> Result<PowerIdentityOutcome> {
    let (m, n) = (u.len(), v.len());
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("u and v need at least one word each".into()));
    }
    if s.len() != m + 1 || t.len() != n + 1 {
        return Err(Error::InvalidArgument(format!(
            "expected {} s-words and {} t-words, got {} and {}",
            m + 1,
            n + 1,
            s.len(),
            t.len()
        )));
    }
    if u.iter().chain(v).any(Word::is_empty) {
        return Err(Error::EmptyWord);
    }
    if indices.len() < m + n {
        return Err(Error::InvalidArgument(format!("need at least {} indices, got {}", m + n, indices.len())));
    }
    for &i in indices {
        if power_word(s, u, i) != power_word(t, v, i) {
            return Ok(PowerIdentityOutcome::PremiseFails { index: i });
        }
    }
    let top = indices.iter().next_back().copied().unwrap_or(0) + extra;
    for i in 0..=top {
        if power_word(s, u, i) != power_word(t, v, i) {
            return Ok(PowerIdentityOutcome::Contradicted { index: i });
        }
    }
    Ok(PowerIdentityOutcome::Certified { verified_up_to: top })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equation::parse_system;

    fn sys(text: &str) -> System {
        parse_system(text).unwrap().1
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn unary_commutation() {
        let set = enumerate_solutions(&sys("x1 x2 = x2 x1"), &EnumerationBudget::new(vec![1], 2).unwrap());
        let types: Vec<Vec<usize>> = set.entries.iter().map(|e| e.length_type.0.clone()).collect();
        assert_eq!(types, vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 0], vec![1, 1], vec![2, 0]]);
        assert_eq!(set.candidates, 6);
    }

    #[test]
    fn contains_rank_two_solution() {
        let set = enumerate_solutions(&sys("unknowns: x y z\nxyz = zxy"), &EnumerationBudget::binary(4));
        assert!(set.contains(&Morphism::from_strs(&["1", "2", "12"]).unwrap()));
        assert!(!set.contains(&Morphism::from_strs(&["1", "2", "21"]).unwrap()));
    }

    #[test]
    fn square_equation() {
        let set = enumerate_solutions(&sys("x1 x1 = x2"), &EnumerationBudget::binary(3));
        let got: Vec<String> = set.morphisms().map(ToString::to_string).collect();
        assert_eq!(got, vec!["x1=eps, x2=eps", "x1=1, x2=11", "x1=2, x2=22"]);
    }

    #[test]
    fn candidate_closed_form() {
        let b = EnumerationBudget::binary(3);
        assert_eq!(b.candidate_count(2), 1 + 2 * 2 + 3 * 4 + 4 * 8);
        assert_eq!(all_morphisms(2, &b).len() as u128, b.candidate_count(2));
        assert_eq!(compositions_count(0, 0), 1);
    }

    #[test]
    fn parallel_matches_serial() {
        let s = sys("x1x2x3 = x3x1x2");
        let b = EnumerationBudget::binary(6);
        assert_eq!(enumerate_solutions(&s, &b), enumerate_solutions_parallel(&s, &b, 3));
    }

    #[test]
    fn rank_annotation() {
        let set = rank_annotate(enumerate_solutions(&sys("x1x2x3 = x3x1x2"), &EnumerationBudget::binary(4)), 3);
        let h = Morphism::from_strs(&["1", "2", "12"]).unwrap();
        let entry = set.entries.iter().find(|e| e.morphism == h).unwrap();
        assert_eq!(entry.rank, Some(RankAnnotation::Exact(2)));
        assert_eq!(set.entries[0].rank, Some(RankAnnotation::Exact(0)));
        assert!(set.with_rank(2).contains(&h));
        assert!(set.with_rank(1).morphisms().all(crate::word::is_periodic));
    }

    #[test]
    fn json_lines_round_trip() {
        let set = rank_annotate(enumerate_solutions(&sys("x1 x2 = x2 x1"), &EnumerationBudget::binary(3)), 2);
        let text = set.to_json_lines();
        assert!(text.lines().next().unwrap().starts_with("{\"images\":[\"eps\",\"eps\"]"));
        assert_eq!(SolutionSet::entries_from_json_lines(&text).unwrap(), set.entries);
    }

    #[test]
    fn independence_examples() {
        let b = EnumerationBudget::binary(4);
        let r = independence_check(&sys("x1 x2 = x2 x1"), &b);
        assert_eq!(r.verdict, IndependenceVerdict::IndependentWithinBudget);
        assert!(!sys("x1 x2 = x2 x1").is_solved_by(r.subsystems[0].witness.as_ref().unwrap()));
        let r = independence_check(&sys("x1 x2 = x2 x1\nx1 x2 = x2 x1"), &b);
        assert_eq!(r.verdict, IndependenceVerdict::NotSeparableWithinBudget);
    }

    #[test]
    fn entire_system_examples() {
        let eq = |s: &str| Equation::parse_canonical(2, s).unwrap();
        let k = entire_system_sample(&Morphism::from_strs(&["1", "1"]).unwrap(), 4);
        assert!(k.contains(&eq("x1 x2 = x2 x1")));
        assert!(k.contains(&eq("x1 = x2")));
        let k = entire_system_sample(&Morphism::from_strs(&["1", "2"]).unwrap(), 4);
        assert!(k.iter().all(Equation::is_trivial));
        assert!(k.contains(&eq("x1 x2 = x1 x2")));
    }

    #[test]
    fn power_identity_examples() {
        let idx = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        let out = power_identity_check(&[w("1"), w("eps")], &[w("eps"), w("1")], &[w("21")], &[w("12")], &idx(&[1, 2]), 5).unwrap();
        assert_eq!(out, PowerIdentityOutcome::Certified { verified_up_to: 7 });
        let out = power_identity_check(&[w("1"), w("2")], &[w("1"), w("2")], &[w("12")], &[w("12")], &idx(&[3, 9]), 5).unwrap();
        assert!(matches!(out, PowerIdentityOutcome::Certified { .. }));
        let out = power_identity_check(&[w("eps"), w("2")], &[w("eps"), w("eps")], &[w("1")], &[w("12")], &idx(&[1, 2]), 5).unwrap();
        assert_eq!(out, PowerIdentityOutcome::PremiseFails { index: 2 });
        assert!(power_identity_check(&[w("1")], &[w("1"), w("2")], &[w("1")], &[w("1")], &idx(&[1, 2]), 5).is_err());
        assert!(power_identity_check(&[w("1"), w("1")], &[w("1"), w("1")], &[w("1")], &[w("1")], &idx(&[1]), 5).is_err());
    }
}
