//! Trial division plus Miller-Rabin, enough to find the bad places of a
//! desk-sized surface.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{ChowError, Result};

pub const DEFAULT_TRIAL_DIVISION_BOUND: u64 = 1_000_000;
pub const TRIAL_DIVISION_BOUND_VAR: &str = "CHOW_TRIAL_DIVISION_BOUND";

/// Trial division bound, overridable through `CHOW_TRIAL_DIVISION_BOUND`.
pub fn trial_division_bound() -> u64 {
    std::env::var(TRIAL_DIVISION_BOUND_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&b: &u64| b >= 2)
        .unwrap_or(DEFAULT_TRIAL_DIVISION_BOUND)
}

const WITNESSES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic for every `u64`: the first twelve prime witnesses cover
/// all n < 3.3e24.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES[..12] {
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

/// Miller-Rabin with the fixed witness set. Deterministic below 3.3e24;
/// above that a composite passing all thirteen bases is astronomically rare.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for &a in &WITNESSES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization `n = prod p^e`, primes ascending.
///
/// Composite cofactors left after trial division are an error, and so are
/// prime factors that do not fit a machine word.
pub fn factorize(n: &BigUint, bound: u64) -> Result<Vec<(u64, u32)>> {
    if n.is_zero() {
        return Err(ChowError::Domain("cannot factor zero".into()));
    }
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut BigUint| {
        let pb = BigUint::from(p);
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            *n = q;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    let mut d = 3u64;
    while d <= bound {
        if BigUint::from(d) * BigUint::from(d) > n {
            break;
        }
        push(d, &mut n);
        d += 2;
    }
    if !n.is_one() {
        let fail = |reason: &str| ChowError::Factorization {
            value: n.to_string(),
            reason: reason.to_string(),
        };
        let exhausted = BigUint::from(d) * BigUint::from(d) > n;
        if !exhausted && !is_prime(&n) {
            return Err(fail(&format!("composite cofactor beyond the trial division bound {bound}")));
        }
        let p = n.to_u64().ok_or_else(|| fail("prime factor exceeds 64 bits"))?;
        out.push((p, 1));
    }
    Ok(out)
}

/// Primes dividing `n`.
pub fn prime_divisors(n: &BigUint, bound: u64) -> Result<Vec<u64>> {
    Ok(factorize(n, bound)?.into_iter().map(|(p, _)| p).collect())
}
