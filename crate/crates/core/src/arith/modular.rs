use num_integer::Integer;

use super::{factorize, is_prime, ArithError, Result};

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

/// `base^exp mod m`; `m = 1` yields 0.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    result
}

fn reduce(a: i64, m: u64) -> u64 {
    i128::from(a).rem_euclid(i128::from(m)) as u64
}

/// Legendre symbol `(a/p)` for an odd prime `p`, via Euler's criterion.
pub fn legendre_symbol(a: i64, p: u64) -> Result<i8> {
    if p == 2 || !is_prime(p) {
        return Err(ArithError::NotOddPrime(p));
    }
    let r = pow_mod(reduce(a, p), (p - 1) / 2, p);
    Ok(match r {
        0 => 0,
        1 => 1,
        _ => {
            debug_assert_eq!(r, p - 1);
            -1
        }
    })
}

/// Least `f ≥ 1` with `a^f ≡ 1 (mod n)`.
///
/// Starts from `φ(n)` and strips prime factors of the exponent while the
/// power stays at 1.
pub fn multiplicative_order(a: impl Into<i128>, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(ArithError::ModulusTooSmall(n));
    }
    let a: i128 = a.into();
    let a_mod = a.rem_euclid(i128::from(n)) as u64;
    if a_mod.gcd(&n) != 1 {
        return Err(ArithError::NotCoprime { a, n });
    }
    let phi = factorize(n)?.euler_phi();
    let mut order = phi;
    for &(q, k) in factorize(phi)?.pairs() {
        for _ in 0..k {
            if pow_mod(a_mod, order / q, n) == 1 {
                order /= q;
            } else {
                break;
            }
        }
    }
    Ok(order)
}
