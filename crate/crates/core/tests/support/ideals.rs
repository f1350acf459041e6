//! Small random ideals for property checks on Gröbner bases.

#![allow(dead_code)]

use gitfan_core::exact::Rational;
use gitfan_core::groebner::Ideal;
use gitfan_core::poly::{Monomial, Polynomial, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One to three generators in `x, y, z`, each with one to three terms of
/// degree at most 2 per variable and coefficients in `-3..=3`.
pub fn random_ideal(seed: u64) -> Ideal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = Ring::new(["x", "y", "z"]).unwrap();
    let ngens = rng.gen_range(1..=3);
    let gens = (0..ngens)
        .map(|_| {
            let terms: Vec<_> = (0..rng.gen_range(1..=3))
                .map(|_| {
                    let e: Vec<u32> = (0..3).map(|_| rng.gen_range(0..=2)).collect();
                    let c = [-3i64, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
                    (Monomial::new(e), Rational::from_integer(c.into()))
                })
                .collect();
            Polynomial::from_terms(3, terms)
        })
        .filter(|g| !g.is_zero())
        .collect();
    Ideal::new(ring, gens).unwrap()
}

/// A product of one or two variables, used as the saturating element.
pub fn random_monomial(seed: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut e = vec![0u32; 3];
    for _ in 0..rng.gen_range(1..=2) {
        e[rng.gen_range(0..3)] += 1;
    }
    Polynomial::from_terms(3, vec![(Monomial::new(e), Rational::from_integer(1.into()))])
}
