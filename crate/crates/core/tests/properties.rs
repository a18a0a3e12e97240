mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::*;
use wordpoly::cover::{balance_profile, common_top_rank_solutions, cover_pair, cover_soundness_check, CoverMode};
use wordpoly::equation::{coefficient_matrix, q_polynomial, rank_polymatrix, residual};
use wordpoly::genpoly::{iso_multivariate, minor_t, s_polynomial};
use wordpoly::oracle::{
    enumerate_solutions, enumerate_solutions_parallel, rank_annotate, words_up_to, CheckOutcome, EnumerationBudget,
    SolutionSet,
};
use wordpoly::poly::{encode_poly, encode_ratfun, poly_concat_identity, poly_gcd};
use wordpoly::transforms::{factorize_solution, verify_composition_identities, SolutionFactorization};
use wordpoly::word::{combinatorial_rank, commute_check, is_periodic, length_type_of, primitive_root};
use wordpoly::{Equation, GenPoly, IntPolynomial, LengthType, LinForm, Morphism, PolyMatrix, RationalFunction, System, Var, VarMorphism, Word};

fn word_strategy(alphabet: Vec<u32>, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(alphabet), 0..=max_len).prop_map(|v| Word::new(v).unwrap())
}

fn nonempty_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(vec![1u32, 2]), 1..=max_len).prop_map(|v| Word::new(v).unwrap())
}

fn side(n: usize, max_len: usize) -> impl Strategy<Value = Vec<Var>> {
    prop::collection::vec((0..n).prop_map(Var), 0..=max_len)
}

fn equation(n: usize, max_side: usize) -> impl Strategy<Value = Equation> {
    (side(n, max_side), side(n, max_side)).prop_map(move |(l, r)| Equation::new(n, l, r).unwrap())
}

fn morphism(n: usize, max_len: usize) -> impl Strategy<Value = Morphism> {
    prop::collection::vec(word_strategy(vec![1, 2], max_len), n).prop_map(Morphism::new)
}

fn poly_strategy(max_degree: usize) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-4i64..=4, 0..=max_degree + 1).prop_map(|c| IntPolynomial::from_coeffs(&c))
}

fn linform(n: usize) -> impl Strategy<Value = LinForm> {
    prop::collection::vec(0u32..3, n).prop_map(LinForm)
}

fn genpoly(n: usize) -> impl Strategy<Value = GenPoly> {
    prop::collection::vec((linform(n), -3i64..=3), 0..5).prop_map(move |terms| {
        let mut g = GenPoly::zero(n);
        for (p, c) in terms {
            g.add_term(p, BigInt::from(c));
        }
        g
    })
}

fn var_morphism(n: usize) -> impl Strategy<Value = VarMorphism> {
    prop::collection::vec(side(n, 3), n).prop_map(|images| VarMorphism::new(images).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn primitive_root_idempotent(w in nonempty_word(10)) {
        let r = primitive_root(&w).unwrap();
        prop_assert_eq!(primitive_root(&r).unwrap(), r.clone());
        prop_assert!(r.is_primitive());
        prop_assert_eq!(r.pow(w.len() / r.len()), w);
    }

    #[test]
    fn commutation_three_ways(u in nonempty_word(6), v in nonempty_word(6)) {
        let c = commute_check(&u, &v).unwrap();
        prop_assert_eq!(c, u.concat(&v) == v.concat(&u));
        prop_assert_eq!(c, encode_ratfun(&u).unwrap() == encode_ratfun(&v).unwrap());
        prop_assert_eq!(c, u.pow(v.len()) == v.pow(u.len()));
    }

    #[test]
    fn rank_between_one_and_n(h in morphism(3, 4)) {
        let r = combinatorial_rank(&h, 3).unwrap();
        if h.images().iter().all(Word::is_empty) {
            prop_assert_eq!(r, 0);
        } else {
            prop_assert!((1..=3).contains(&r));
            prop_assert_eq!(r == 1, is_periodic(&h));
        }
        if h.is_nonerasing() {
            prop_assert!(r >= 1);
        }
    }

    #[test]
    fn length_morphism_additive(u in side(3, 6), v in side(3, 6), l in prop::collection::vec(0usize..5, 3)) {
        let l = LengthType(l);
        let uv: Vec<Var> = u.iter().chain(&v).copied().collect();
        prop_assert_eq!(l.eval(&uv), l.eval(&u) + l.eval(&v));
    }

    #[test]
    fn concat_identity(ws in prop::collection::vec(word_strategy(vec![1, 2, 3], 4), 0..5)) {
        let joined = ws.iter().fold(Word::empty(), |a, w| a.concat(w));
        prop_assert_eq!(poly_concat_identity(&ws).unwrap(), encode_poly(&joined));
    }

    #[test]
    fn ratfun_cancellation(a in poly_strategy(4), b in poly_strategy(4)) {
        prop_assume!(!b.is_zero());
        let ra = RationalFunction::from_poly(a.clone());
        let rb = RationalFunction::from_poly(b);
        prop_assert_eq!(ra.mul(&rb).div(&rb).unwrap(), ra);
    }

    #[test]
    fn gcd_divides(a in poly_strategy(5), b in poly_strategy(5), c in poly_strategy(3)) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = poly_gcd(&ac, &bc);
        if !ac.is_zero() || !bc.is_zero() {
            prop_assert!(g.divides(&ac) && g.divides(&bc));
            if !c.is_zero() {
                prop_assert!(c.primitive_part().divides(&g));
            }
        }
    }

    #[test]
    fn residual_zero_iff_solution(e in equation(3, 5), h in morphism(3, 3)) {
        prop_assert_eq!(residual(&e, &h).is_zero(), h.apply(e.lhs()) == h.apply(e.rhs()));
    }

    #[test]
    fn rank_transpose_and_oracle(seed in any::<u64>(), rows in 1usize..5, cols in 1usize..5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = random_matrix(&mut rng, rows, cols, 3, 0.4);
        let t = PolyMatrix::from_rows((0..cols).map(|j| (0..rows).map(|i| m.get(i, j).clone()).collect()).collect()).unwrap();
        let r = rank_polymatrix(&m);
        prop_assert_eq!(r, rank_polymatrix(&t));
        prop_assert!(r <= rows.min(cols));
        prop_assert_eq!(r, numeric_rank(&m, &mut rng, 3));
    }

    #[test]
    fn s_polynomial_substitutes_to_q(e in equation(3, 6), l in prop::collection::vec(0usize..4, 3)) {
        let l = LengthType(l);
        for x in 0..3 {
            prop_assert_eq!(s_polynomial(&e, Var(x)).substitute(&l).unwrap(), q_polynomial(&e, Var(x), &l));
        }
    }

    #[test]
    fn minor_substitutes_to_matrix_minor(e1 in equation(3, 5), e2 in equation(3, 5), l in prop::collection::vec(0usize..4, 3)) {
        let l = LengthType(l);
        let (k, j) = (Var(0), Var(2));
        let t = minor_t(&e1, &e2, k, j).unwrap().substitute(&l).unwrap();
        let direct = &(&q_polynomial(&e1, k, &l) * &q_polynomial(&e2, j, &l)) - &(&q_polynomial(&e1, j, &l) * &q_polynomial(&e2, k, &l));
        prop_assert_eq!(t, direct);
    }

    #[test]
    fn iso_is_multiplicative(a in genpoly(3), b in genpoly(3)) {
        prop_assert_eq!(iso_multivariate(&(&a * &b)), iso_multivariate(&a).mul(&iso_multivariate(&b)));
        prop_assert_eq!(iso_multivariate(&(&a + &b)), iso_multivariate(&a).add(&iso_multivariate(&b)));
    }

    #[test]
    fn genpoly_render_round_trip(a in genpoly(3)) {
        prop_assert_eq!(GenPoly::parse(3, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn composition_identities(f in var_morphism(3), g in morphism(3, 4)) {
        prop_assert!(verify_composition_identities(&f, &g).is_ok());
    }

    #[test]
    fn cover_plane_count_within_bound(e1 in equation(3, 5), e2 in equation(3, 6)) {
        prop_assume!(!e1.is_trivial() && !e2.is_trivial());
        if let Ok(cover) = cover_pair(&e1, &e2, CoverMode::Minimal) {
            prop_assert!(cover.planes.len() as u64 <= cover.bound);
            let t = minor_t(&e1, &e2, Var(cover.k), Var(cover.l)).unwrap();
            let (pos, neg) = t.split_signs();
            for h in &cover.planes {
                prop_assert!(pos.contains(&&h.p) && neg.contains(&&h.q));
                prop_assert!(cover.p_minimal.contains(&h.p) && cover.q_minimal.contains(&h.q));
            }
            let full = cover_pair(&e1, &e2, CoverMode::FullPairing).unwrap();
            for h in &cover.planes {
                prop_assert!(full.planes.iter().any(|g| g.normal == h.normal));
            }
        }
    }

    #[test]
    fn plane_equates_minima_where_minor_vanishes(e1 in equation(3, 4), e2 in equation(3, 4), l in prop::collection::vec(0usize..6, 3)) {
        prop_assume!(!e1.is_trivial() && !e2.is_trivial());
        let l = LengthType(l);
        if let Ok(cover) = cover_pair(&e1, &e2, CoverMode::Minimal) {
            let t = minor_t(&e1, &e2, Var(cover.k), Var(cover.l)).unwrap();
            if t.substitute(&l).unwrap().is_zero() {
                prop_assert!(cover.covers(&l), "L = {} with vanishing minor lies on no plane", l);
            }
        }
    }

    #[test]
    fn script_round_trip(e in equation(3, 4), h in morphism(3, 2)) {
        prop_assume!(e.is_solved_by(&h));
        let f = factorize_solution(&e, &h).unwrap();
        prop_assert_eq!(SolutionFactorization::parse_script(3, &f.to_script()).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cover_sound_on_enumerated_solutions(e1 in equation(3, 4), e2 in equation(3, 4)) {
        prop_assume!(!e1.is_trivial() && !e2.is_trivial());
        if let Ok(cover) = cover_pair(&e1, &e2, CoverMode::Minimal) {
            let sols = common_top_rank_solutions(&e1, &e2, &EnumerationBudget::binary(7)).unwrap();
            let out = cover_soundness_check(&e1, &e2, &cover, &sols).unwrap();
            prop_assert!(!out.is_failure(), "{:?}", out);
        }
    }

    #[test]
    fn enumeration_is_sound_and_deterministic(e1 in equation(3, 4), e2 in equation(3, 4), workers in 2usize..4) {
        let sys = System::new(3, vec![e1, e2]).unwrap();
        let b = EnumerationBudget::binary(6);
        let set = enumerate_solutions(&sys, &b);
        prop_assert!(set.morphisms().all(|h| sys.is_solved_by(h)));
        prop_assert_eq!(set.candidates, b.candidate_count(3));
        prop_assert_eq!(&enumerate_solutions_parallel(&sys, &b, workers), &set);
    }

    #[test]
    fn balance_profile_annihilates_length_types(e in equation(3, 4)) {
        let profile = balance_profile(&e);
        for h in enumerate_solutions(&System::single(e), &EnumerationBudget::binary(6)).morphisms() {
            let l = length_type_of(h);
            let dot: i64 = profile.iter().zip(&l.0).map(|(a, &b)| a * b as i64).sum();
            prop_assert_eq!(dot, 0);
        }
    }
}

#[test]
fn encoding_injective_up_to_eight() {
    let words = words_up_to(&[1, 2], 8);
    let polys: BTreeSet<String> = words.iter().map(|w| encode_poly(w).to_string()).collect();
    assert_eq!(polys.len(), words.len());
}

#[test]
fn power_encoding_identity() {
    for w in words_up_to(&[1, 2], 4).into_iter().filter(|w| !w.is_empty()) {
        for k in 0..=4 {
            let lhs = &encode_poly(&w.pow(k)) * &IntPolynomial::x_pow_minus_one(w.len());
            let rhs = &encode_poly(&w) * &IntPolynomial::x_pow_minus_one(k * w.len());
            assert_eq!(lhs, rhs, "w = {w}, k = {k}");
        }
    }
}

#[test]
fn enumeration_matches_brute_force() {
    let sys = system(2, &["x1x2 = x2x1"]);
    let b = EnumerationBudget::binary(6);
    let set = enumerate_solutions(&sys, &b);
    let words = words_up_to(&b.alphabet, 6);
    let mut brute = BTreeSet::new();
    let mut visited = 0u128;
    for u in &words {
        for v in words.iter().filter(|v| u.len() + v.len() <= 6) {
            visited += 1;
            if u.concat(v) == v.concat(u) {
                brute.insert(Morphism::new(vec![u.clone(), v.clone()]));
            }
        }
    }
    assert_eq!(visited, set.candidates);
    assert_eq!(set.morphisms().cloned().collect::<BTreeSet<_>>(), brute);
}

#[test]
fn residual_nonzero_on_sampled_non_solutions() {
    let (e1, _) = sample_pair();
    let all = enumerate_solutions(&System::new(3, vec![]).unwrap(), &EnumerationBudget::binary(5));
    let mut non = 0;
    for h in all.morphisms().filter(|h| !e1.is_solved_by(h)) {
        assert!(!residual(&e1, h).is_zero(), "{h}");
        non += 1;
    }
    assert!(non > 0);
}

#[test]
fn rank_annotations_and_export() {
    let (e1, _) = sample_pair();
    let set = rank_annotate(enumerate_solutions(&System::single(e1), &EnumerationBudget::binary(5)), 3);
    let text = set.to_json_lines();
    let back = SolutionSet::entries_from_json_lines(&text).unwrap();
    assert_eq!(back, set.entries);
    for w in set.entries.windows(2) {
        assert!((&w[0].length_type, &w[0].morphism) < (&w[1].length_type, &w[1].morphism));
    }
    let top = set.with_rank(2);
    assert!(top.morphisms().all(|h| !is_periodic(h)));
}

#[test]
fn balance_inclusion_skips() {
    let (e1, e2) = sample_pair();
    let out = wordpoly::cover::balance_theorem_check(&e1, &e2, &EnumerationBudget::binary(6)).unwrap();
    assert!(matches!(out, CheckOutcome::Skipped(_)));
    let out = wordpoly::cover::balance_theorem_check(&eq(3, "x1x2 = x3"), &eq(3, "x1 = x2"), &EnumerationBudget::binary(6)).unwrap();
    assert!(matches!(out, CheckOutcome::Skipped(_)));
}

#[test]
fn coefficient_matrix_rank_bound_on_random_solutions() {
    let (e1, e2) = sample_pair();
    let sys = System::new(3, vec![e1, e2]).unwrap();
    for h in enumerate_solutions(&sys, &EnumerationBudget::binary(8)).morphisms() {
        let r = combinatorial_rank(h, 3).unwrap();
        let m = coefficient_matrix(&sys, &length_type_of(h)).unwrap();
        assert!(rank_polymatrix(&m) + r <= 3, "{h}");
    }
}
