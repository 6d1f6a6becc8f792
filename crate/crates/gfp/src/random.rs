//! Seeded generation of random valid families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::family::Family;
use crate::identities::Pair;
use crate::poly::Poly;

pub const MAX_DEGREE: usize = 3;
pub const COEFF_BOUND: i64 = 5;

fn random_poly<R: Rng>(rng: &mut R) -> Poly {
    let coeffs: Vec<i64> = (0..=MAX_DEGREE)
        .map(|_| rng.gen_range(-COEFF_BOUND..=COEFF_BOUND))
        .collect();
    Poly::from_i64s(&coeffs)
}

/// A valid Fibonacci-type family with `d`, `g` of degree at most 3 and
/// coefficients in `[-5, 5]`, drawn by rejection.
pub fn random_fibonacci_family<R: Rng>(rng: &mut R, name: &str) -> Family {
    loop {
        let family = Family::fibonacci_type(name, random_poly(rng), random_poly(rng));
        if family.is_valid() {
            return family;
        }
    }
}

/// `count` random equivalent pairs, reproducible from `seed`.
///
/// ```
/// let a = gfp::random::random_pairs(7, 3).unwrap();
/// let b = gfp::random::random_pairs(7, 3).unwrap();
/// assert_eq!(a[2].fib.family(), b[2].fib.family());
/// assert!(a.iter().all(|p| p.lucas.family().is_valid()));
/// ```
pub fn random_pairs(seed: u64, count: usize) -> Result<Vec<Pair>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let fib = random_fibonacci_family(&mut rng, &format!("random-{seed}-{i}"));
            let lucas = fib.equivalent_family()?;
            Pair::new(fib, lucas)
        })
        .collect()
}
