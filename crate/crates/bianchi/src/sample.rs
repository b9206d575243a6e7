//! Deterministic pseudo-random test-corpus generator: random invertible
//! basis changes applied to type representatives. Every emitted bracket is
//! classified back to the requested type before emission, and all entries
//! stay within a numerator/denominator magnitude bound.

use num::bigint::BigInt;
use num::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action::act_bracket;
use crate::classify::{classify, representative, BianchiType};
use crate::error::Result;
use crate::scalar::{FieldMode, Scalar};
use crate::tensor::{Bracket, GroupElement, Matrix3};

/// Maximum magnitude for numerators and denominators of emitted entries.
pub const DEFAULT_ENTRY_BOUND: i64 = 10_000;

/// One random small scalar: numerator in −3..=3, denominator 1 (or 2, one
/// time in four); complex mode draws a small Gaussian integer.
pub fn random_small_scalar<R: Rng>(rng: &mut R, mode: FieldMode) -> Scalar {
    match mode {
        FieldMode::Real => {
            let num = rng.gen_range(-3..=3i64);
            let den = if rng.gen_bool(0.25) { 2 } else { 1 };
            Scalar::ratio(num, den)
        }
        FieldMode::Complex => {
            let a = rng.gen_range(-2..=2i64);
            let b = rng.gen_range(-2..=2i64);
            Scalar::gaussian(a, 1, b, 1)
        }
    }
}

/// A random invertible matrix with small entries.
pub fn random_group_element<R: Rng>(rng: &mut R, mode: FieldMode) -> GroupElement {
    loop {
        let m = Matrix3::from_fn(|_, _| random_small_scalar(rng, mode));
        if let Ok(g) = GroupElement::new(m) {
            return g;
        }
    }
}

/// A random bracket with small rational structure constants (not necessarily
/// a Lie bracket); used by the identity test suites.
pub fn random_bracket<R: Rng>(rng: &mut R, mode: FieldMode) -> Bracket {
    let mut c = Bracket::zero();
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        for k in 0..3 {
            c.set_structure_constant(i, j, k, random_small_scalar(rng, mode));
        }
    }
    c
}

fn rat_within(r: &BigRational, bound: &BigInt) -> bool {
    r.numer().magnitude() <= bound.magnitude() && r.denom().magnitude() <= bound.magnitude()
}

/// Checks the entry-size bound on every structure constant.
pub fn within_entry_bound(c: &Bracket, bound: i64) -> bool {
    let bound = BigInt::from(bound);
    c.flatten()
        .iter()
        .all(|s| rat_within(s.re(), &bound) && rat_within(s.im(), &bound))
}

/// `count` deterministic pseudo-random brackets of the given type: random
/// small basis changes applied to the representative, self-checked (exact
/// reclassification to `ty`, entry bound) before emission. A fixed seed
/// yields a fixed sequence.
pub fn sample_brackets(
    ty: &BianchiType,
    mode: FieldMode,
    seed: u64,
    count: usize,
) -> Result<Vec<Bracket>> {
    ty.check_mode(mode)?;
    let rep = representative(ty, mode)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut attempts = 0;
        let chosen = loop {
            attempts += 1;
            if attempts > 10_000 {
                // The representative itself always satisfies both checks.
                break rep.clone();
            }
            let g = random_group_element(&mut rng, mode);
            let candidate = act_bracket(&g, &rep);
            if !within_entry_bound(&candidate, DEFAULT_ENTRY_BOUND) {
                continue;
            }
            match classify(&candidate, mode) {
                Ok(report) if report.ty == *ty => break candidate,
                _ => continue,
            }
        };
        out.push(chosen);
    }
    Ok(out)
}
