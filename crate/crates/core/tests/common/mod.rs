#![allow(dead_code)]

use isr1::Mat2;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Direct search for a nontrivial idempotent `E = [x y; z 1−x]` with
/// `Tr([a b; 0 0]·E) = a·x + b·z ∈ {±1}`, over `|x|, |z| ≤ a + b`.
///
/// Only the defining conditions are used: the linear trace condition and
/// `x(1−x) = y·z`. For each `z` in the box the trace condition fixes `x`.
pub fn brute_force_witness(a: i64, b: i64) -> Option<(i64, i64, i64, i64)> {
    let bound = a + b;
    for z in -bound..=bound {
        for sign in [1i64, -1] {
            let num = sign - b * z;
            if num % a != 0 {
                continue;
            }
            let x = num / a;
            if x.abs() > bound {
                continue;
            }
            let q = x * (1 - x);
            let y = if z == 0 {
                if q != 0 {
                    continue;
                }
                0
            } else if q % z == 0 {
                q / z
            } else {
                continue;
            };
            debug_assert_eq!(x * (1 - x), y * z);
            return Some((x, y, z, sign));
        }
    }
    None
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_mat(rng: &mut ChaCha8Rng, bound: i64) -> Mat2 {
    let mut e = || rng.gen_range(-bound..=bound);
    Mat2::new(e(), e(), e(), e())
}

pub fn random_unimodular(rng: &mut ChaCha8Rng, bound: i64) -> Mat2 {
    loop {
        let t = random_mat(rng, bound);
        if t.is_unimodular() {
            return t;
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

/// Random nonzero determinant-zero matrix `u·vᵀ` with primitive `u`, `v`.
pub fn random_content_one_singular(rng: &mut ChaCha8Rng, bound: i64) -> Mat2 {
    let primitive = |rng: &mut ChaCha8Rng| loop {
        let (p, q) = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if gcd(p, q) == 1 {
            return (p, q);
        }
    };
    let (u1, u2) = primitive(rng);
    let (v1, v2) = primitive(rng);
    Mat2::new(u1 * v1, u1 * v2, u2 * v1, u2 * v2)
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}
