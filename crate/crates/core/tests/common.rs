#![allow(dead_code)]

use chatelet_core::Rational;
use num_bigint::BigInt;
use proptest::prelude::*;

pub const SMALL_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

pub fn r(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Nonzero rational `sign * p^v * num / den` with `num`, `den` prime to `p`.
pub fn with_valuation(p: u64, v: i32, num: i64, den: i64) -> Rational {
    let p = p as i64;
    let strip = |mut x: i64| {
        while x % p == 0 {
            x /= p;
        }
        x
    };
    let num = strip(num);
    let den = strip(den);
    let pv = BigInt::from(p).pow(v.unsigned_abs());
    let base = Rational::new(BigInt::from(num), BigInt::from(den));
    if v >= 0 {
        base * Rational::from_integer(pv)
    } else {
        base / Rational::from_integer(pv)
    }
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-500i64..-1, 1i64..500], 1i64..60).prop_map(|(n, d)| q(n, d))
}

/// `(a, b, p)` with `|v_p(a)|, |v_p(b)| <= 3`.
pub fn local_pair() -> impl Strategy<Value = (Rational, Rational, u64)> {
    (
        prop::sample::select(&SMALL_PRIMES[..]),
        -3i32..=3,
        -3i32..=3,
        prop_oneof![-97i64..-1, 1i64..97],
        1i64..40,
        prop_oneof![-97i64..-1, 1i64..97],
        1i64..40,
    )
        .prop_map(|(p, va, vb, an, ad, bn, bd)| (with_valuation(p, va, an, ad), with_valuation(p, vb, bn, bd), p))
}

/// Representatives of `Q_p^x / (Q_p^x)^2`.
pub fn square_classes(p: u64) -> Vec<Rational> {
    if p == 2 {
        [1, -1, 5, -5, 2, -2, 10, -10].into_iter().map(r).collect()
    } else {
        let pi = p as i64;
        let n = (2..pi).find(|a| (1..pi).all(|x| (x * x) % pi != *a)).unwrap();
        [1, n, pi, n * pi].into_iter().map(r).collect()
    }
}
