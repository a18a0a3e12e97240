#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use wordpoly::{Equation, IntPolynomial, PolyMatrix, System, Var, VarMorphism, Word};

pub fn eq(n: usize, s: &str) -> Equation {
    Equation::parse_canonical(n, s).unwrap()
}

pub fn system(n: usize, eqs: &[&str]) -> System {
    System::new(n, eqs.iter().map(|s| eq(n, s)).collect()).unwrap()
}

pub fn word(s: &str) -> Word {
    s.parse().unwrap()
}

pub fn sample_pair() -> (Equation, Equation) {
    (eq(3, "x1x2x3 = x3x1x2"), eq(3, "x1x2x1x3x2x3 = x3x1x3x2x1x2"))
}

/// Rank over Q by plain Gaussian elimination on rationals.
pub fn rational_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = &m[i][c] / &pivot;
                for j in c..cols {
                    let v = &m[rank][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Generic rank estimated as the largest rank over random integer
/// evaluation points. Never exceeds the true rank over Q(X).
pub fn numeric_rank(m: &PolyMatrix, rng: &mut impl Rng, points: usize) -> usize {
    (0..points)
        .map(|_| rational_rank(&m.eval(&BigInt::from(rng.gen_range(-1000i64..=1000)))))
        .max()
        .unwrap_or(0)
}

pub fn random_poly(rng: &mut impl Rng, max_degree: usize, density: f64) -> IntPolynomial {
    let mut p = IntPolynomial::zero();
    for d in 0..=max_degree {
        if rng.gen_bool(density) {
            p.add_term(d, BigInt::from(rng.gen_range(-5i64..=5)));
        }
    }
    p
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, max_degree: usize, density: f64) -> PolyMatrix {
    PolyMatrix::from_rows(
        (0..rows)
            .map(|_| (0..cols).map(|_| random_poly(rng, max_degree, density)).collect())
            .collect(),
    )
    .unwrap()
}

pub fn random_word(rng: &mut impl Rng, alphabet: &[u32], max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new((0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect()).unwrap()
}

pub fn random_nonempty_word(rng: &mut impl Rng, alphabet: &[u32], max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len.max(1));
    Word::new((0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect()).unwrap()
}

/// Applies `target -> source target` (regular) or `target -> source`
/// (singular) to a word over unknowns, letter by letter.
pub fn substitute_step(w: &[Var], target: Var, source: Var, regular: bool) -> Vec<Var> {
    let mut out = Vec::new();
    for &v in w {
        if v == target {
            out.push(source);
            if regular {
                out.push(target);
            }
        } else {
            out.push(v);
        }
    }
    out
}

/// The images under `F_m ∘ ... ∘ F_1` of each unknown, computed by
/// successive substitution with `F_1` innermost.
pub fn naive_chain_images(n: usize, steps: &[(Var, Var, bool)]) -> Vec<Vec<Var>> {
    (0..n)
        .map(|i| {
            // F_1 is applied to x_i first, so its output is rewritten by F_2, ...
            let mut w = vec![Var(i)];
            for &(t, s, r) in steps {
                w = substitute_step(&w, t, s, r);
            }
            w
        })
        .collect()
}

pub fn chain_to_morphisms(n: usize, steps: &[(Var, Var, bool)]) -> Vec<VarMorphism> {
    steps
        .iter()
        .map(|&(t, s, r)| {
            let step = if r {
                wordpoly::ElementaryTransformation::regular(t, s)
            } else {
                wordpoly::ElementaryTransformation::singular(t, s)
            };
            step.unwrap().to_morphism(n)
        })
        .collect()
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn one() -> BigInt {
    BigInt::one()
}
