//! Fixtures shared by the kernel benchmarks.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use wordpoly::equation::parse_system;
use wordpoly::{Equation, IntPolynomial, Morphism, PolyMatrix, System, Word};

pub fn system(text: &str) -> System {
    parse_system(text).expect("fixture systems are well formed").1
}

pub fn cover_pair() -> (Equation, Equation) {
    let s = system("x1x2x3 = x3x1x2\nx1x2x1x3x2x3 = x3x1x3x2x1x2");
    (s.equations()[0].clone(), s.equations()[1].clone())
}

pub fn three_cycle() -> System {
    system("x1x2x3 = x3x1x2")
}

/// A `rows × cols` matrix of sparse integer polynomials, fixed by `seed`.
pub fn random_matrix(seed: u64, rows: usize, cols: usize, max_degree: usize) -> PolyMatrix {
    let mut rng = StdRng::seed_from_u64(seed);
    let entries = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    let mut p = IntPolynomial::zero();
                    for d in 0..=max_degree {
                        if rng.gen_bool(0.5) {
                            p.add_term(d, rng.gen_range(-4i64..=4).into());
                        }
                    }
                    p
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(entries).expect("rows have equal length")
}

pub fn random_word(rng: &mut StdRng, len: usize) -> Word {
    Word::new((0..len).map(|_| rng.gen_range(1..=2)).collect()).expect("letters are positive")
}

/// `n` images of length `len` each; the first two are powers of a common
/// word so the rank is below `n`.
pub fn random_morphism(seed: u64, n: usize, len: usize) -> Morphism {
    let mut rng = StdRng::seed_from_u64(seed);
    let base = random_word(&mut rng, len);
    let mut images = vec![base.clone(), base.pow(2)];
    images.extend((2..n).map(|_| random_word(&mut rng, len)));
    images.truncate(n);
    Morphism::new(images)
}
