//! Deterministic sampling: per-sample seeded generators, random gamma-numbers
//! and low-discrepancy points.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::{AlgebraContext, BladeMask, GammaNumber};
use crate::scalar::{Cx, Real};

/// Default seed for all sampled checks.
pub const DEFAULT_SEED: u64 = 0x5EED;

/// Generator for sample `index` of a run seeded with `seed`; independent of
/// evaluation order so parallel runs reproduce sequential ones.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform value in `[−1, 1]`.
pub fn uniform<T: Real>(rng: &mut impl Rng) -> T {
    T::lit(rng.gen_range(-1.0..=1.0))
}

/// Vector of `n` uniform values in `[−1, 1]`.
pub fn uniform_vec<T: Real>(rng: &mut impl Rng, n: usize) -> Vec<T> {
    (0..n).map(|_| uniform(rng)).collect()
}

/// Random gamma-number with coefficients uniform in `[−1, 1]` (real and, for
/// complex contexts, imaginary parts).
pub fn random_gamma<T: Real>(ctx: &AlgebraContext, rng: &mut impl Rng) -> GammaNumber<T> {
    let coeffs = (0..ctx.dim())
        .map(|_| {
            let re = uniform(rng);
            let im = if ctx.is_real() { T::zero() } else { uniform(rng) };
            Complex::new(re, im)
        })
        .collect();
    GammaNumber::from_coeffs(ctx, coeffs).expect("sized coefficient vector")
}

/// Random element supported on the blades selected by `keep`.
pub fn random_gamma_on<T: Real>(
    ctx: &AlgebraContext,
    rng: &mut impl Rng,
    keep: impl Fn(BladeMask) -> bool,
) -> GammaNumber<T> {
    random_gamma(ctx, rng).filter(keep)
}

/// Random element with real coefficients.
pub fn random_real_gamma<T: Real>(ctx: &AlgebraContext, rng: &mut impl Rng) -> GammaNumber<T> {
    let coeffs: Vec<Cx<T>> = (0..ctx.dim()).map(|_| Complex::new(uniform(rng), T::zero())).collect();
    GammaNumber::from_coeffs(ctx, coeffs).expect("sized coefficient vector")
}

fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    while i > 0 {
        f /= base as f64;
        r += f * (i % base) as f64;
        i /= base;
    }
    r
}

/// First `count` points of the Halton sequence (bases 2, 3, 5, 7) mapped to `[−1, 1]^4`.
pub fn halton_points<T: Real>(count: usize) -> Vec<[T; 4]> {
    (1..=count as u64)
        .map(|i| [2, 3, 5, 7].map(|b| T::lit(2.0 * radical_inverse(i, b) - 1.0)))
        .collect()
}

/// Default number of residual sample points.
pub const DEFAULT_POINTS: usize = 32;
