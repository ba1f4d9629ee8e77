//! Factorization of 64-bit integers: trial division by the primes below
//! 2^16, then Brent's variant of Pollard's rho on the cofactor, with every
//! reported prime certified by deterministic Miller–Rabin.

use std::sync::OnceLock;

use num_integer::Integer;

use super::modular::{mul_mod, pow_mod};
use super::{ArithError, Factorization, Result};

const TRIAL_LIMIT: u32 = 1 << 16;

/// Bases that make Miller–Rabin deterministic for every `n < 2^64`.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = TRIAL_LIMIT as usize;
        let mut composite = vec![false; limit + 1];
        let mut primes = Vec::new();
        for i in 2..=limit {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j <= limit {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

/// Deterministic primality test for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Canonical factorization of `n ≥ 1`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(ArithError::Zero);
    }
    let mut pairs: Vec<(u64, u32)> = Vec::new();
    let mut rest = n;
    for &p in small_primes() {
        let p = u64::from(p);
        if p * p > rest {
            break;
        }
        if rest % p == 0 {
            let mut a = 0;
            while rest % p == 0 {
                rest /= p;
                a += 1;
            }
            pairs.push((p, a));
        }
    }
    if rest > 1 {
        let mut large = Vec::new();
        split_into_primes(rest, &mut large);
        large.sort_unstable();
        for p in large {
            match pairs.last_mut() {
                Some((q, a)) if *q == p => *a += 1,
                _ => pairs.push((p, 1)),
            }
        }
    }
    Ok(Factorization::from_sorted_unchecked(pairs))
}

/// Pushes the prime factors (with repetition) of `n`, which has no prime
/// factor below 2^16.
fn split_into_primes(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    // No factor below 2^16 means anything under 2^32 is prime.
    if n < u64::from(TRIAL_LIMIT) * u64::from(TRIAL_LIMIT) || is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_into_primes(d, out);
    split_into_primes(n / d, out);
}

/// Returns a nontrivial factor of the odd composite `n`.
fn pollard_brent(n: u64) -> u64 {
    const BATCH: u64 = 128;
    let step = |x: u64, c: u64| (mul_mod(x, x, n) + c) % n;
    for c in 1..n {
        let mut y = 2u64;
        let mut x;
        let mut ys = y;
        let mut g = 1u64;
        let mut r = 1u64;
        let mut q = 1u64;
        loop {
            x = y;
            for _ in 0..r {
                y = step(y, c);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = step(y, c);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += BATCH;
            }
            r *= 2;
            if g != 1 {
                break;
            }
        }
        if g == n {
            // Batch overshot; retrace one step at a time.
            loop {
                ys = step(ys, c);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("pollard rho exhausted all increments for {n}")
}
