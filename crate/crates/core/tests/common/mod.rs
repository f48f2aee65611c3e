#![allow(dead_code)]

use mrle::BitString;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const ALPHABETS: [usize; 5] = [1, 2, 4, 16, 256];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random bytes over `alphabet` symbols. Every other case is built from runs
/// (including some longer than one run byte) rather than i.i.d. symbols.
pub fn random_bytes(rng: &mut ChaCha8Rng, max_len: usize, alphabet: usize) -> Vec<u8> {
    let len = rng.random_range(0..=max_len);
    let mut out = Vec::with_capacity(len);
    if rng.random_bool(0.5) {
        while out.len() < len {
            out.push(rng.random_range(0..alphabet) as u8);
        }
    } else {
        while out.len() < len {
            let run = match rng.random_range(0..10) {
                0 => rng.random_range(200..1100),
                1..=3 => rng.random_range(3..40),
                _ => rng.random_range(1..4),
            };
            let v = rng.random_range(0..alphabet) as u8;
            let n = run.min(len - out.len());
            out.extend(std::iter::repeat_n(v, n));
        }
    }
    out
}

/// Random bit strings with geometric or heavy-tailed run lengths.
pub fn random_bits(rng: &mut ChaCha8Rng, max_len: usize) -> BitString {
    let len = rng.random_range(0..=max_len);
    let heavy = rng.random_bool(0.5);
    let p: f64 = rng.random_range(0.01..0.9);
    let mut out = BitString::new();
    let mut bit = rng.random_bool(0.5);
    while out.len() < len {
        let run = if heavy {
            // Pareto-like tail, alpha ~ 1.1
            let u: f64 = rng.random_range(1e-6..1.0);
            (u.powf(-1.0 / 1.1)) as usize
        } else {
            let mut n = 1;
            while !rng.random_bool(p) && n < 100_000 {
                n += 1;
            }
            n
        };
        let n = run.max(1).min(len - out.len());
        out.push_repeated(bit, n);
        bit = !bit;
    }
    out
}
