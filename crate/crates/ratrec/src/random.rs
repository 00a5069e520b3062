//! Seeded random holonomic equations in the style of small benchmark
//! inputs: every coefficient polynomial is a sum of `c·n^k` with `c` drawn
//! from a small set.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ratrec_core::{HolonomicEq, Rational, UniPoly};

/// Default coefficient set.
pub const UNIT_COEFFS: [i64; 3] = [-1, 0, 1];

/// Order is drawn from `1..=max_order`; the leading coefficient is never
/// zero. Deterministic in `seed`.
pub fn random_holonomic(seed: u64, max_order: usize, max_degree: usize, coeff_set: &[i64]) -> HolonomicEq {
    assert!(max_order >= 1, "max_order must be at least 1");
    assert!(coeff_set.iter().any(|&c| c != 0), "coefficient set needs a nonzero value");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = rng.gen_range(1..=max_order);
    let nonzero: Vec<i64> = coeff_set.iter().copied().filter(|&c| c != 0).collect();
    let draw_poly = |rng: &mut ChaCha8Rng, force_nonzero: bool| {
        let mut coeffs: Vec<i64> = (0..=max_degree).map(|_| *coeff_set.choose(rng).expect("nonempty")).collect();
        if force_nonzero && coeffs.iter().all(|&c| c == 0) {
            let k = rng.gen_range(0..=max_degree);
            coeffs[k] = *nonzero.choose(rng).expect("nonempty");
        }
        UniPoly::new(coeffs.into_iter().map(|c| Rational::from_integer(c.into())).collect())
    };
    let mut polys: Vec<UniPoly> = (0..order).map(|_| draw_poly(&mut rng, false)).collect();
    polys.push(draw_poly(&mut rng, true));
    HolonomicEq::homogeneous(polys).expect("leading coefficient is nonzero")
}
