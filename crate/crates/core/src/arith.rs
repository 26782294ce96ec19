//! Small integer helpers shared by the engines.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing order of the prime. `n` must be nonzero.
pub fn factorize(n: &BigUint) -> Result<Vec<(u64, u32)>> {
    if n.is_zero() {
        return Err(Error::invalid("cannot factor zero"));
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut d = 2u64;
    loop {
        let dd = BigUint::from(d) * BigUint::from(d);
        if dd > rest {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&BigUint::from(d));
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        let p = rest
            .to_u64()
            .ok_or_else(|| Error::invalid(format!("prime factor of {n} exceeds 64 bits")))?;
        out.push((p, 1));
    }
    Ok(out)
}

pub fn pow_u64(base: u64, exp: u32) -> u128 {
    (base as u128).pow(exp)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
