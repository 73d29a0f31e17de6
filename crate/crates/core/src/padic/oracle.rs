//! Brute-force decision of local solvability of `z^2 = a x^2 + b y^2`,
//! independent of the closed-form symbol formulas.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{mod_inverse, split_at, Rational, F2};
use crate::error::{ChowError, Result};

/// Default search precision for a pair: `2(|v(a)| + |v(b)|) + 6` at 2 and
/// `+ 3` at odd primes.
pub fn oracle_precision(a: &Rational, b: &Rational, p: u64) -> u32 {
    let va = super::val(a, p).unsigned_abs() as u32;
    let vb = super::val(b, p).unsigned_abs() as u32;
    2 * (va + vb) + if p == 2 { 6 } else { 3 }
}

/// Least precision at which a primitive zero of the square-class reduced
/// form is certified liftable: the gradient of a primitive zero has
/// valuation at most `e = v(2) + 1`, and Hensel needs `p^(2e+1)`.
fn required_precision(p: u64) -> u32 {
    if p == 2 {
        5
    } else {
        3
    }
}

/// Exhaustive search for a primitive zero of `z^2 - a x^2 - b y^2` modulo
/// `p^k`. Returns 0 if a Hensel-liftable zero exists, 1 otherwise.
///
/// `a` and `b` are first reduced modulo squares to valuation 0 or 1. The
/// search walks residues level by level: every zero mod `p^(j+1)` reduces to
/// a zero mod `p^j`, so extending only surviving triples is exhaustive.
pub fn hilbert_oracle(a: &Rational, b: &Rational, p: u64, k: u32) -> Result<F2> {
    if a.is_zero() || b.is_zero() {
        return Err(ChowError::Domain("oracle called with zero coefficient".into()));
    }
    let required = required_precision(p);
    if k < required {
        return Err(ChowError::Precision { given: k, required });
    }
    let modulus = (p as u128)
        .checked_pow(k)
        .filter(|m| *m <= u64::MAX as u128)
        .ok_or_else(|| ChowError::Domain(format!("{p}^{k} exceeds the oracle's word size")))?;

    let form = ReducedForm {
        p: p as u128,
        k,
        modulus,
        a: reduce(a, p, modulus)?,
        b: reduce(b, p, modulus)?,
    };
    let mut stack: Vec<(u32, [u128; 3])> = Vec::new();
    for z in 0..form.p {
        for x in 0..form.p {
            for y in 0..form.p {
                if z % form.p != 0 || x % form.p != 0 || y % form.p != 0 {
                    stack.push((1, [z, x, y]));
                }
            }
        }
    }
    while let Some((level, t)) = stack.pop() {
        let m = form.p.pow(level);
        if !form.eval(t).is_multiple_of(m) {
            continue;
        }
        if form.liftable(t, level) {
            return Ok(F2::ZERO);
        }
        if level == form.k {
            continue;
        }
        for dz in 0..form.p {
            for dx in 0..form.p {
                for dy in 0..form.p {
                    stack.push((level + 1, [t[0] + dz * m, t[1] + dx * m, t[2] + dy * m]));
                }
            }
        }
    }
    Ok(F2::ONE)
}

/// Coefficient as `(valuation in {0,1}, residue of p^valuation * unit mod p^k)`.
fn reduce(r: &Rational, p: u64, modulus: u128) -> Result<(u32, u128)> {
    let (v, num, den) = split_at(r, p);
    let m = BigInt::from(modulus);
    let inv = mod_inverse(&den, &m).ok_or_else(|| ChowError::Domain("non-invertible denominator".into()))?;
    let unit = (num * inv).mod_floor(&m);
    let shift = v.rem_euclid(2) as u32;
    let value = (unit * BigInt::from(p).pow(shift)).mod_floor(&m);
    Ok((shift, value.to_u128().expect("reduced below modulus")))
}

struct ReducedForm {
    p: u128,
    k: u32,
    modulus: u128,
    a: (u32, u128),
    b: (u32, u128),
}

impl ReducedForm {
    fn mul(&self, x: u128, y: u128) -> u128 {
        (x % self.modulus) * (y % self.modulus) % self.modulus
    }

    fn eval(&self, [z, x, y]: [u128; 3]) -> u128 {
        let zz = self.mul(z, z);
        let ax = self.mul(self.a.1, self.mul(x, x));
        let by = self.mul(self.b.1, self.mul(y, y));
        (zz + 2 * self.modulus - ax - by) % self.modulus
    }

    /// Valuation of `n` capped at `cap`.
    fn v(&self, n: u128, cap: u32) -> u32 {
        let mut n = n;
        let mut k = 0;
        while k < cap && n != 0 && n.is_multiple_of(self.p) {
            n /= self.p;
            k += 1;
        }
        if n == 0 {
            cap
        } else {
            k.min(cap)
        }
    }

    /// `F(t) = 0 mod p^level` and some partial derivative has valuation `e`
    /// with `2e + 1 <= level`.
    fn liftable(&self, [z, x, y]: [u128; 3], level: u32) -> bool {
        let two = if self.p == 2 { 1 } else { 0 };
        let grads = [
            two + self.v(z, level),
            two + self.a.0 + self.v(x, level),
            two + self.b.0 + self.v(y, level),
        ];
        let e = grads.into_iter().min().unwrap_or(level);
        e < level && 2 * e < level
    }
}
