use std::collections::BTreeSet;
use std::path::Path;

use serde_json::{json, Value};
use wordpoly::cover::{
    balance_profile, balance_theorem_check, chain_bound, chain_check, chain_corollary_bound, common_top_rank_solutions,
    cover_pair, cover_pair_at, cover_soundness_check, graph_lemma_check, is_balanced, pair_form_check,
    pair_form_shape, CoverMode, PairFormOutcome,
};
use wordpoly::equation::{coefficient_matrix, parse_system, q_row, rank_polymatrix, residual, ClaimStatus};
use wordpoly::genpoly::{minor_t, s_polynomial};
use wordpoly::oracle::{
    check_rank_theorem, enumerate_solutions_parallel, independence_check, power_identity_check, rank_annotate,
    IndependenceVerdict, PowerIdentityOutcome, RankAnnotation, SolutionSet,
};
use wordpoly::poly::{encode_poly, encode_ratfun, fine_wilf_check, omega_common_prefix, primdiv_check};
use wordpoly::transforms::{factorize_solution, verify_composition_identities};
use wordpoly::word::{combinatorial_rank, commute_check, primitive_root};
use wordpoly::{EnumerationBudget, Equation, LengthType, Morphism, System, Unknowns, Var, Word};

use crate::report::{AnalysisReport, Verdict};
use crate::{BudgetArgs, ChainCommand, CliError, Command, EqCommand, PairCommand, SystemCommand};

type CliResult<T> = Result<T, CliError>;

pub(crate) fn dispatch(command: &Command, argv: Vec<String>, workers: usize) -> CliResult<AnalysisReport> {
    match command {
        Command::Encode { word } => encode(argv, word),
        Command::Ratfun { word } => ratfun(argv, word),
        Command::Primroot { word } => primroot(argv, word),
        Command::Commute { u, v } => commute(argv, u, v),
        Command::Finewilf { u, v, len } => finewilf(argv, u, v, *len),
        Command::Eq(EqCommand::Coeffs { eqfile, lengths }) => eq_coeffs(argv, eqfile, lengths),
        Command::Eq(EqCommand::Rank { systemfile, lengths, alphabet }) => eq_rank(argv, systemfile, lengths, alphabet),
        Command::Eq(EqCommand::Verify { eqfile, morphismfile }) => eq_verify(argv, eqfile, morphismfile),
        Command::Pair(PairCommand::Minor { pairfile, k, l }) => pair_minor(argv, pairfile, *k, *l),
        Command::Pair(PairCommand::Cover { pairfile, full_pairing, k, l, budget }) => {
            pair_cover(argv, pairfile, *full_pairing, k.zip(*l), budget)
        }
        Command::Pair(PairCommand::Balance { pairfile, budget }) => pair_balance(argv, pairfile, budget),
        Command::Pair(PairCommand::Form { pairfile, budget }) => pair_form(argv, pairfile, budget),
        Command::System(SystemCommand::Graph { systemfile, budget }) => system_graph(argv, systemfile, budget),
        Command::System(SystemCommand::Enumerate { systemfile, budget, rank, lengths, export }) => {
            system_enumerate(argv, systemfile, budget, *rank, lengths.as_deref(), export.as_deref(), workers)
        }
        Command::System(SystemCommand::Independent { systemfile, budget }) => {
            system_independent(argv, systemfile, budget)
        }
        Command::Chain(ChainCommand::Bound { eqfile, k, l }) => chain_bounds(argv, eqfile, *k, *l),
        Command::Chain(ChainCommand::Check { systemfile, budget }) => chain_descent(argv, systemfile, budget),
        Command::Powerid { specfile, indices, extra } => powerid(argv, specfile, indices, *extra),
        Command::Factorize { eqfile, morphismfile } => factorize(argv, eqfile, morphismfile),
    }
}

fn in_file(path: &Path, e: wordpoly::Error) -> CliError {
    match e {
        wordpoly::Error::Parse { .. } => CliError::Input(format!("{}:{e}", path.display())),
        wordpoly::Error::CheckFailed(m) => CliError::CheckFailed(m),
        other => CliError::Input(format!("{}: {other}", path.display())),
    }
}

fn in_arg(name: &str, e: wordpoly::Error) -> CliError {
    CliError::Input(format!("argument <{name}>: {e}"))
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_system(path: &Path) -> CliResult<(Unknowns, System)> {
    parse_system(&read(path)?).map_err(|e| in_file(path, e))
}

fn load_exactly(path: &Path, count: usize) -> CliResult<(Unknowns, System)> {
    let (u, s) = load_system(path)?;
    if s.len() != count {
        return Err(CliError::Input(format!(
            "{}: expected {count} equation(s), found {}",
            path.display(),
            s.len()
        )));
    }
    Ok((u, s))
}

fn load_morphism(path: &Path, unknowns: &Unknowns) -> CliResult<Morphism> {
    unknowns.parse_morphism(&read(path)?).map_err(|e| in_file(path, e))
}

fn parse_word(name: &str, s: &str) -> CliResult<Word> {
    s.parse().map_err(|e| in_arg(name, e))
}

fn parse_lengths(s: &str, n: usize) -> CliResult<LengthType> {
    let l: LengthType = s.parse().map_err(|e| in_arg("lengths", e))?;
    if l.n() != n {
        return Err(CliError::Input(format!("--lengths has {} components for {n} unknowns", l.n())));
    }
    Ok(l)
}

fn parse_list<T: std::str::FromStr>(name: &str, s: &str) -> CliResult<Vec<T>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| CliError::Input(format!("--{name}: invalid entry {:?}", p.trim())))
        })
        .collect()
}

fn parse_alphabet(s: &str) -> CliResult<Vec<u32>> {
    let letters: Vec<u32> = parse_list("alphabet", s)?;
    let b = EnumerationBudget::new(letters, 0).map_err(|e| in_arg("alphabet", e))?;
    Ok(b.alphabet)
}

fn budget(args: &BudgetArgs) -> CliResult<EnumerationBudget> {
    EnumerationBudget::new(parse_alphabet(&args.alphabet)?, args.max_total).map_err(|e| in_arg("alphabet", e))
}

fn var(flag: &str, index: usize, n: usize) -> CliResult<Var> {
    if index == 0 || index > n {
        return Err(CliError::Input(format!("-{flag} {index} is not in 1..={n}")));
    }
    Ok(Var(index - 1))
}

fn images(h: &Morphism) -> Value {
    json!(h.images().iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn assignments(u: &Unknowns, h: &Morphism) -> Value {
    json!(h.images().iter().enumerate().map(|(i, w)| format!("{} = {w}", u.name(Var(i)))).collect::<Vec<_>>())
}

fn equations(u: &Unknowns, s: &System) -> Value {
    json!(s.equations().iter().map(|e| u.render_equation(e)).collect::<Vec<_>>())
}

fn count(c: u128) -> Value {
    u64::try_from(c).map_or_else(|_| json!(c.to_string()), |c| json!(c))
}

fn system_report(name: &str, argv: Vec<String>, u: &Unknowns, s: &System) -> AnalysisReport {
    let mut r = AnalysisReport::new(name, argv);
    r.input("unknowns", json!(u.names()));
    r.input("equations", equations(u, s));
    r
}

fn encode(argv: Vec<String>, word: &str) -> CliResult<AnalysisReport> {
    let w = parse_word("word", word)?;
    let p = encode_poly(&w);
    let mut r = AnalysisReport::new("encode", argv);
    r.input("word", w.to_string());
    r.results = json!({
        "length": w.len(),
        "polynomial": p.to_string(),
        "terms": p.term_count(),
    });
    Ok(r)
}

fn ratfun(argv: Vec<String>, word: &str) -> CliResult<AnalysisReport> {
    let w = parse_word("word", word)?;
    let f = encode_ratfun(&w).map_err(|e| in_arg("word", e))?;
    let mut r = AnalysisReport::new("ratfun", argv);
    r.input("word", w.to_string());
    r.results = json!({
        "ratfun": f.to_string(),
        "numerator": f.numerator().to_string(),
        "denominator": f.denominator().to_string(),
    });
    Ok(r)
}

fn primroot(argv: Vec<String>, word: &str) -> CliResult<AnalysisReport> {
    let w = parse_word("word", word)?;
    let root = primitive_root(&w).map_err(|e| in_arg("word", e))?;
    let primitive = root.len() == w.len();
    let mut r = AnalysisReport::new("primroot", argv);
    r.input("word", w.to_string());
    r.results = json!({
        "root": root.to_string(),
        "exponent": w.len() / root.len(),
        "primitive": primitive,
    });
    r.verdicts.push(match primdiv_check(&w) {
        Ok(b) => Verdict::expect(
            "cyclotomic divisibility",
            b == primitive,
            format!("no cyclotomic quotient divides P(w): {b}"),
        ),
        Err(wordpoly::Error::CheckFailed(m)) => Verdict::fail("cyclotomic divisibility", m),
        Err(e) => return Err(in_arg("word", e)),
    });
    Ok(r)
}

fn commute(argv: Vec<String>, u: &str, v: &str) -> CliResult<AnalysisReport> {
    let (wu, wv) = (parse_word("u", u)?, parse_word("v", v)?);
    let mut r = AnalysisReport::new("commute", argv);
    r.input("u", wu.to_string()).input("v", wv.to_string());
    if wu.is_empty() || wv.is_empty() {
        r.results = json!({ "commute": true });
        r.verdicts.push(Verdict::skipped("common root", "an empty word commutes with every word"));
        return Ok(r);
    }
    let c = commute_check(&wu, &wv)?;
    let (ru, rv) = (primitive_root(&wu)?, primitive_root(&wv)?);
    let (fu, fv) = (encode_ratfun(&wu)?, encode_ratfun(&wv)?);
    r.results = json!({
        "commute": c,
        "root_u": ru.to_string(),
        "root_v": rv.to_string(),
        "ratfun_u": fu.to_string(),
        "ratfun_v": fv.to_string(),
    });
    r.verdicts.push(Verdict::expect("common root", c == (ru == rv), format!("roots equal: {}", ru == rv)));
    r.verdicts.push(Verdict::expect(
        "rational function",
        c == (fu == fv),
        format!("R(u) = R(v): {}", fu == fv),
    ));
    Ok(r)
}

fn finewilf(argv: Vec<String>, u: &str, v: &str, len: usize) -> CliResult<AnalysisReport> {
    let (wu, wv) = (parse_word("u", u)?, parse_word("v", v)?);
    let mut r = AnalysisReport::new("finewilf", argv);
    r.input("u", wu.to_string()).input("v", wv.to_string()).input("len", len);
    let common = omega_common_prefix(&wu, &wv).map_err(|e| in_arg("u", e))?;
    match fine_wilf_check(&wu, &wv, len) {
        Ok(fw) => {
            r.results = json!({
                "bound": fw.bound,
                "common_prefix": common.map_or(json!("infinite"), |c| json!(c)),
                "agree": fw.agree,
                "premise_holds": fw.premise_holds,
                "roots_equal": fw.roots_equal,
            });
            r.verdicts.push(if fw.premise_holds {
                Verdict::pass("periodicity lemma", "premise holds and the roots are equal")
            } else {
                Verdict::skipped("periodicity lemma", format!("premise needs agreement on {} letters", fw.bound))
            });
        }
        Err(wordpoly::Error::CheckFailed(m)) => r.verdicts.push(Verdict::fail("periodicity lemma", m)),
        Err(e) => return Err(in_arg("u", e)),
    }
    Ok(r)
}

fn eq_coeffs(argv: Vec<String>, path: &Path, lengths: &str) -> CliResult<AnalysisReport> {
    let (u, s) = load_exactly(path, 1)?;
    let e = &s.equations()[0];
    let l = parse_lengths(lengths, s.n())?;
    let row = q_row(e, &l);
    let mut r = system_report("eq coeffs", argv, &u, &s);
    r.input("lengths", l.to_string());
    let mut coeffs = Vec::new();
    let mut mismatched = Vec::new();
    for (i, q) in row.iter().enumerate() {
        let x = Var(i);
        let sp = s_polynomial(e, x);
        if sp.substitute(&l)? != *q {
            mismatched.push(u.name(x).to_string());
        }
        coeffs.push(json!({
            "unknown": u.name(x),
            "q": q.to_string(),
            "s": sp.to_string(),
        }));
    }
    r.results = json!({ "coefficients": coeffs });
    r.verdicts.push(Verdict::expect(
        "generalized substitution",
        mismatched.is_empty(),
        if mismatched.is_empty() {
            "S(L) = Q for every unknown".to_string()
        } else {
            format!("S(L) differs from Q for {}", mismatched.join(", "))
        },
    ));
    Ok(r)
}

fn eq_rank(argv: Vec<String>, path: &Path, lengths: &str, alphabet: &str) -> CliResult<AnalysisReport> {
    let (u, s) = load_system(path)?;
    let l = parse_lengths(lengths, s.n())?;
    let letters = parse_alphabet(alphabet)?;
    let m = coefficient_matrix(&s, &l)?;
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect();
    let report = check_rank_theorem(&s, &l, &letters)?;
    let mut r = system_report("eq rank", argv, &u, &s);
    r.input("lengths", l.to_string()).input("alphabet", json!(letters));
    r.results = json!({
        "matrix": rows,
        "rank": rank_polymatrix(&m),
        "solutions_of_length_type": report.solutions_checked,
        "max_solution_rank": report.max_solution_rank,
    });
    r.verdicts.push(Verdict::expect(
        "rank bound",
        report.violations.is_empty(),
        match report.violations.first() {
            None => format!("every solution has rank at most n - {}", report.matrix_rank),
            Some(h) => format!("{h} exceeds n - {}", report.matrix_rank),
        },
    ));
    r.verdicts.push(match &report.equal_solution_sets {
        ClaimStatus::NotApplicable(d) => Verdict::skipped("equal solution sets", d.clone()),
        ClaimStatus::Holds => Verdict::pass("equal solution sets", "every equation has the same solutions"),
        ClaimStatus::Fails(d) => Verdict::fail("equal solution sets", d.clone()),
    });
    Ok(r)
}

fn eq_verify(argv: Vec<String>, path: &Path, mpath: &Path) -> CliResult<AnalysisReport> {
    let (u, s) = load_system(path)?;
    let h = load_morphism(mpath, &u)?;
    let mut r = system_report("eq verify", argv, &u, &s);
    r.input("morphism", assignments(&u, &h));
    let mut rows = Vec::new();
    let mut consistent = true;
    for e in s.equations() {
        let solved = e.is_solved_by(&h);
        let res = residual(e, &h);
        consistent &= solved == res.is_zero();
        rows.push(json!({
            "equation": u.render_equation(e),
            "lhs": h.apply(e.lhs()).to_string(),
            "rhs": h.apply(e.rhs()).to_string(),
            "solved": solved,
            "residual": res.to_string(),
        }));
    }
    r.results = json!({ "equations": rows, "solves_system": s.is_solved_by(&h) });
    r.verdicts.push(Verdict::expect(
        "residual criterion",
        consistent,
        if consistent { "residual is zero exactly for solved equations" } else { "residual disagrees with direct evaluation" },
    ));
    Ok(r)
}

fn pair(s: &System) -> (&Equation, &Equation) {
    (&s.equations()[0], &s.equations()[1])
}

fn pair_minor(argv: Vec<String>, path: &Path, k: usize, l: usize) -> CliResult<AnalysisReport> {
    let (u, s) = load_exactly(path, 2)?;
    let (e1, e2) = pair(&s);
    let (vk, vl) = (var("k", k, s.n())?, var("l", l, s.n())?);
    let t = minor_t(e1, e2, vk, vl)?;
    let mut r = system_report("pair minor", argv, &u, &s);
    r.input("k", k).input("l", l);
    r.results = json!({
        "s1k": s_polynomial(e1, vk).to_string(),
        "s1l": s_polynomial(e1, vl).to_string(),
        "s2k": s_polynomial(e2, vk).to_string(),
        "s2l": s_polynomial(e2, vl).to_string(),
        "minor": t.to_string(),
        "terms": t.term_count(),
    });
    Ok(r)
}

fn pair_cover(
    argv: Vec<String>,
    path: &Path,
    full: bool,
    kl: Option<(usize, usize)>,
    args: &BudgetArgs,
) -> CliResult<AnalysisReport> {
    let (u, s) = load_exactly(path, 2)?;
    let (e1, e2) = pair(&s);
    let b = budget(args)?;
    let mode = if full { CoverMode::FullPairing } else { CoverMode::Minimal };
    let cover = match kl {
        Some((k, l)) => cover_pair_at(e1, e2, var("k", k, s.n())?, var("l", l, s.n())?, mode)?,
        None => cover_pair(e1, e2, mode)?,
    };
    let mut r = system_report("pair cover", argv, &u, &s);
    r.input("mode", if full { "full_pairing" } else { "minimal" });
    if let Some((k, l)) = kl {
        r.input("k", k).input("l", l);
    }
    r.budget = Some(b.clone());
    let forms = |v: &[wordpoly::LinForm]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    r.results = json!({
        "k": cover.k + 1,
        "l": cover.l + 1,
        "bound": cover.bound,
        "minor_terms_before": cover.minor_terms_before,
        "minor_terms_after": cover.minor_terms_after,
        "p_minimal": forms(&cover.p_minimal),
        "q_minimal": forms(&cover.q_minimal),
        "relations": cover.relations(),
        "planes": cover.planes.len(),
    });
    r.verdicts.push(Verdict::expect(
        "plane count",
        cover.planes.len() as u64 <= cover.bound,
        format!("{} planes, bound {}", cover.planes.len(), cover.bound),
    ));
    let sols = common_top_rank_solutions(e1, e2, &b)?;
    r.verdicts.push(Verdict::from_outcome("cover soundness", &cover_soundness_check(e1, e2, &cover, &sols)?));
    Ok(r)
}

fn pair_balance(argv: Vec<String>, path: &Path, args: &BudgetArgs) -> CliResult<AnalysisReport> {
    let (u, s) = load_exactly(path, 2)?;
    let (e1, e2) = pair(&s);
    let b = budget(args)?;
    let mut r = system_report("pair balance", argv, &u, &s);
    r.budget = Some(b.clone());
    r.results = json!({
        "profile_1": balance_profile(e1),
        "profile_2": balance_profile(e2),
        "balanced_1": is_balanced(e1),
        "balanced_2": is_balanced(e2),
    });
    for (name, a, c) in [("unbalanced E1", e1, e2), ("unbalanced E2", e2, e1)] {
        r.verdicts.push(if is_balanced(a) {
            Verdict::skipped(name, "equation is balanced")
        } else {
            Verdict::from_outcome(name, &balance_theorem_check(a, c, &b)?)
        });
    }
    Ok(r)
}

fn pair_form(argv: Vec<String>, path: &Path, args: &BudgetArgs) -> CliResult<AnalysisReport> {
    let (u, s) = load_exactly(path, 2)?;
    let (e1, e2) = pair(&s);
    let b = budget(args)?;
    let mut r = system_report("pair form", argv, &u, &s);
    r.budget = Some(b.clone());
    let shape = pair_form_shape(e1, e2).map(|(a, bb, c, k)| {
        json!({ "a": u.name(a), "b": u.name(bb), "c": u.name(c), "k": k })
    });
    let mut confirmed = 0;
    let mut failure = None;
    for h in common_top_rank_solutions(e1, e2, &b)? {
        match pair_form_check(e1, e2, &h)? {
            PairFormOutcome::Confirmed { .. } => confirmed += 1,
            PairFormOutcome::Failed { reason } => {
                failure.get_or_insert(format!("{h}: {reason}"));
            }
            PairFormOutcome::NotApplicable { .. } => {}
        }
    }
    r.results = json!({ "shape": shape, "confirming_solutions": confirmed });
    r.verdicts.push(match failure {
        Some(f) => Verdict::fail("pair shape", f),
        None if confirmed == 0 => Verdict::skipped("pair shape", "no nonperiodic rank n-1 common solution within budget"),
        None => Verdict::pass("pair shape", format!("{confirmed} solutions, shape found")),
    });
    Ok(r)
}

fn system_graph(argv: Vec<String>, path: &Path, args: &BudgetArgs) -> CliResult<AnalysisReport> {
    let (u, s) = load_system(path)?;
    let b = budget(args)?;
    let g = graph_lemma_check(&s, &b).map_err(|e| in_file(path, e))?;
    let mut r = system_report("system graph", argv, &u, &s);
    r.budget = Some(b);
    r.results = json!({
        "components": g.components,
        "nonerasing_solutions": g.nonerasing_solutions,
        "max_rank": g.max_rank,
    });
    r.verdicts.push(Verdict::from_outcome("rank at most components", &g.outcome));
    Ok(r)
}

fn system_enumerate(
    argv: Vec<String>,
    path: &Path,
    args: &BudgetArgs,
    rank: Option<usize>,
    lengths: Option<&str>,
    export: Option<&Path>,
    workers: usize,
) -> CliResult<AnalysisReport> {
    let (u, s) = load_system(path)?;
    let b = budget(args)?;
    let mut set: SolutionSet = rank_annotate(enumerate_solutions_parallel(&s, &b, workers), s.n());
    let mut r = system_report("system enumerate", argv, &u, &s);
    if let Some(l) = lengths {
        let l = parse_lengths(l, s.n())?;
        r.input("lengths", l.to_string());
        set = set.with_length_type(&l);
    }
    if let Some(k) = rank {
        r.input("rank", k);
        set = set.with_rank(k);
    }
    if let Some(p) = export {
        std::fs::write(p, set.to_json_lines()).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
    }
    r.budget = Some(b);
    let sols: Vec<Value> = set
        .entries
        .iter()
        .map(|e| {
            json!({
                "images": images(&e.morphism),
                "length_type": e.length_type.lengths(),
                "rank": match e.rank {
                    Some(RankAnnotation::Exact(k)) => json!(k),
                    _ => json!(null),
                },
            })
        })
        .collect();
    r.results = json!({
        "candidates": count(set.candidates),
        "count": set.len(),
        "solutions": sols,
    });
    Ok(r)
}

fn system_independent(argv: Vec<String>, path: &Path, args: &BudgetArgs) -> CliResult<AnalysisReport> {
    let (u, s) = load_system(path)?;
    let b = budget(args)?;
    let rep = independence_check(&s, &b);
    let mut r = system_report("system independent", argv, &u, &s);
    r.budget = Some(b);
    let subs: Vec<Value> = rep
        .subsystems
        .iter()
        .map(|w| {
            json!({
                "dropped": u.render_equation(&s.equations()[w.dropped]),
                "witness": w.witness.as_ref().map(images),
            })
        })
        .collect();
    r.results = json!({
        "independent": rep.verdict == IndependenceVerdict::IndependentWithinBudget,
        "subsystems": subs,
    });
    Ok(r)
}

fn chain_bounds(argv: Vec<String>, path: &Path, k: usize, l: usize) -> CliResult<AnalysisReport> {
    let (u, s) = load_system(path)?;
    if s.is_empty() {
        return Err(CliError::Input(format!("{}: no equations", path.display())));
    }
    let (vk, vl) = (var("k", k, s.n())?, var("l", l, s.n())?);
    let e1 = &s.equations()[0];
    let cover_bound = if s.len() >= 2 {
        match cover_pair_at(e1, &s.equations()[1], vk, vl, CoverMode::Minimal) {
            Ok(c) => Some(c.planes.len() as u64 + 1),
            Err(wordpoly::Error::IndistinguishableByMinors) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    let mut r = system_report("chain bound", argv, &u, &s);
    r.input("k", k).input("l", l);
    r.results = json!({
        "bound": chain_bound(e1, vk, vl),
        "three_unknown_bound": (s.n() == 3).then(|| chain_corollary_bound(e1, vk, vl)),
        "cover_bound": cover_bound,
    });
    Ok(r)
}

fn chain_descent(argv: Vec<String>, path: &Path, args: &BudgetArgs) -> CliResult<AnalysisReport> {
    let (u, s) = load_system(path)?;
    let b = budget(args)?;
    let c = chain_check(&s, &b).map_err(|e| in_file(path, e))?;
    let mut r = system_report("chain check", argv, &u, &s);
    r.budget = Some(b);
    r.results = json!({
        "prefix_sizes": c.prefix_sizes,
        "descent_fails_at": c.descent_fails_at,
        "chain_length": c.chain_length,
        "bound": c.bound,
        "cover_bound": c.cover_bound,
    });
    r.verdicts.push(Verdict::from_outcome("chain bound", &c.outcome));
    Ok(r)
}

/// Word lists `s:`, `t:`, `u:`, `v:`, one per line, words separated by
/// whitespace.
fn parse_power_spec(text: &str) -> wordpoly::Result<[Vec<Word>; 4]> {
    let mut out: [Option<Vec<Word>>; 4] = Default::default();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let bad = |col: usize, m: String| wordpoly::Error::Parse { line, column: col, message: m };
        let Some((key, rest)) = content.split_once(':') else {
            return Err(bad(1, "expected 'key: words'".into()));
        };
        let slot = match key.trim() {
            "s" => 0,
            "t" => 1,
            "u" => 2,
            "v" => 3,
            other => return Err(bad(1, format!("unknown key {other:?}; expected s, t, u or v"))),
        };
        if out[slot].is_some() {
            return Err(bad(1, format!("{} given twice", key.trim())));
        }
        let base = key.len() + 2;
        let mut words = Vec::new();
        let mut offset = 0;
        for token in rest.split_whitespace() {
            let at = rest[offset..].find(token).unwrap() + offset;
            let w: Word = token.parse().map_err(|e| match e {
                wordpoly::Error::Parse { column, message, .. } => bad(base + at + column - 1, message),
                other => bad(base + at, other.to_string()),
            })?;
            words.push(w);
            offset = at + token.len();
        }
        out[slot] = Some(words);
    }
    let last = text.lines().count().max(1);
    let mut take = |i: usize, k: &str| {
        out[i].take().ok_or_else(|| wordpoly::Error::Parse { line: last, column: 1, message: format!("missing '{k}:' line") })
    };
    Ok([take(0, "s")?, take(1, "t")?, take(2, "u")?, take(3, "v")?])
}

fn powerid(argv: Vec<String>, path: &Path, indices: &str, extra: usize) -> CliResult<AnalysisReport> {
    let [s, t, u, v] = parse_power_spec(&read(path)?).map_err(|e| in_file(path, e))?;
    let idx: BTreeSet<usize> = parse_list::<usize>("indices", indices)?.into_iter().collect();
    let show = |ws: &[Word]| ws.iter().map(ToString::to_string).collect::<Vec<_>>();
    let mut r = AnalysisReport::new("powerid", argv);
    r.input("s", show(&s)).input("t", show(&t)).input("u", show(&u)).input("v", show(&v));
    r.input("indices", json!(idx)).input("extra", extra);
    let outcome = power_identity_check(&s, &t, &u, &v, &idx, extra).map_err(|e| in_file(path, e))?;
    r.results = serde_json::to_value(&outcome).expect("outcome is plain data");
    r.verdicts.push(match outcome {
        PowerIdentityOutcome::Certified { verified_up_to } => {
            Verdict::pass("power identity", format!("U_i = V_i for all i <= {verified_up_to}"))
        }
        PowerIdentityOutcome::PremiseFails { index } => {
            Verdict::skipped("power identity", format!("U_{index} != V_{index}, premise does not hold"))
        }
        PowerIdentityOutcome::Contradicted { index } => {
            Verdict::fail("power identity", format!("premise holds but U_{index} != V_{index}"))
        }
    });
    Ok(r)
}

fn factorize(argv: Vec<String>, path: &Path, mpath: &Path) -> CliResult<AnalysisReport> {
    let (u, s) = load_exactly(path, 1)?;
    let e = &s.equations()[0];
    let h = load_morphism(mpath, &u)?;
    let f = factorize_solution(e, &h).map_err(|err| in_file(mpath, err))?;
    let rank = combinatorial_rank(&h, s.n()).expect("rank never exceeds n");
    let mut r = system_report("factorize", argv, &u, &s);
    r.input("morphism", assignments(&u, &h));
    r.results = json!({
        "script": f.to_script(),
        "erased": f.s(),
        "singular_steps": f.t(),
        "steps": f.steps.len(),
        "rank_bound": f.rank_bound(),
        "rank": rank,
        "theta": images(&f.theta),
    });
    r.verdicts.push(Verdict::expect("recomposition", f.recompose() == h, "theta ∘ phi ∘ alpha = h"));
    r.verdicts.push(Verdict::expect("rank bound", rank <= f.rank_bound(), format!("rank {rank} <= n - s - t = {}", f.rank_bound())));
    r.verdicts.push(match verify_composition_identities(&f.principal(), &f.theta) {
        Ok(()) => Verdict::pass("composition identities", "L and P identities hold for f and theta"),
        Err(wordpoly::Error::CheckFailed(m)) => Verdict::fail("composition identities", m),
        Err(err) => return Err(err.into()),
    });
    Ok(r)
}
