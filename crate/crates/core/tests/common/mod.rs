#![allow(dead_code)]

use pi_core::perm::permutations;
use pi_core::{Algebra, Element, Poly, Rational, Scalar, Word};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

fn small(rng: &mut ChaCha8Rng, k: u32, bound: i64) -> Scalar {
    Scalar::in_field(k, Rational::from_integer(rng.gen_range(-bound..=bound)))
}

/// A random nonzero multilinear polynomial in x1..xm with at most `terms`
/// words and small integer coefficients.
pub fn multilinear(rng: &mut ChaCha8Rng, m: usize, terms: usize) -> Poly {
    let perms = permutations(m);
    loop {
        let picks: Vec<(Word, Scalar)> = perms
            .choose_multiple(rng, terms.min(perms.len()))
            .map(|p| Word(p.iter().map(|&i| i as u32 + 1).collect()))
            .collect::<Vec<_>>()
            .into_iter()
            .map(|w| (w, small(rng, 1, 3)))
            .collect();
        let f = Poly::from_terms(1, picks).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

/// Σ c_i b_i over the whole basis with small random integers c_i.
pub fn dense(alg: &Algebra, rng: &mut ChaCha8Rng) -> Element {
    Element::from_coords((0..alg.dim()).map(|i| (i, small(rng, alg.conductor(), 2))))
}

/// A random nonzero combination of the given polynomials.
pub fn combination(rng: &mut ChaCha8Rng, polys: &[Poly]) -> Option<Poly> {
    for _ in 0..16 {
        let mut acc: Option<Poly> = None;
        for p in polys {
            let t = p.scale(&small(rng, p.conductor(), 2)).unwrap();
            acc = Some(match acc {
                None => t,
                Some(a) => a.try_add(&t).unwrap(),
            });
        }
        if let Some(f) = acc.filter(|f| !f.is_zero()) {
            return Some(f);
        }
    }
    None
}
