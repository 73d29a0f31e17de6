//! Exact p-adic arithmetic on rationals: valuations, unit residues, local
//! squares and the Hilbert symbol at every place of Q.

mod oracle;
mod symbol;

pub use oracle::{hilbert_oracle, oracle_precision};
pub use symbol::hilbert_symbol;

use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{ChowError, Result};
use crate::factor::is_prime_u64;

/// Exact rational number. `BigRational` keeps numerator and denominator
/// coprime with a positive denominator, and zero as 0/1.
pub type Rational = BigRational;

/// Parses `"17"`, `"-3/20"` or `"−3/20"` (Unicode minus). Decimals are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || ChowError::Parse(s.to_string());
    let t = s.trim().replace('\u{2212}', "-");
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t.as_str(), "1"),
    };
    let is_int = |x: &str| {
        let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num) || !is_int(den) {
        return Err(bad());
    }
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = BigInt::from_str(den).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `n` or `n/d`, the same syntax [`parse_rational`] accepts.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A completion of Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Real,
    Prime(u64),
}

impl Place {
    pub fn prime(p: u64) -> Result<Place> {
        if is_prime_u64(p) {
            Ok(Place::Prime(p))
        } else {
            Err(ChowError::Domain(format!("{p} is not prime")))
        }
    }

    pub fn as_prime(self) -> Option<u64> {
        match self {
            Place::Prime(p) => Some(p),
            Place::Real => None,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => f.write_str("real"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Place {
    type Err = ChowError;

    fn from_str(s: &str) -> Result<Place> {
        match s.trim() {
            "real" | "inf" | "infinity" | "\u{221e}" => Ok(Place::Real),
            t => {
                let p = t
                    .parse::<u64>()
                    .map_err(|_| ChowError::Domain(format!("{t:?} is neither a prime nor \"real\"")))?;
                Place::prime(p)
            }
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// p-adic valuation; zero has the infinite valuation, ordered above every
/// finite one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

/// An element of Z/2Z. Throughout the crate 0 means "is a norm" and 1 "is not
/// a norm".
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2(bool);

impl F2 {
    pub const ZERO: F2 = F2(false);
    pub const ONE: F2 = F2(true);

    pub fn is_zero(self) -> bool {
        !self.0
    }

    pub fn bit(self) -> u8 {
        self.0 as u8
    }

    pub fn from_parity(n: i64) -> F2 {
        F2(n.rem_euclid(2) == 1)
    }
}

impl From<bool> for F2 {
    fn from(b: bool) -> F2 {
        F2(b)
    }
}

// addition in F2 is xor
impl Add for F2 {
    type Output = F2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

impl AddAssign for F2 {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: F2) {
        self.0 ^= rhs.0;
    }
}

impl std::iter::Sum for F2 {
    fn sum<I: Iterator<Item = F2>>(iter: I) -> F2 {
        iter.fold(F2::ZERO, Add::add)
    }
}

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

impl Serialize for F2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.bit())
    }
}

/// Strips every factor `p` from `n`, returning how many were removed.
pub(crate) fn remove_factor(n: &BigInt, p: u64) -> (i64, BigInt) {
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut k = 0;
    loop {
        let (q, rem) = n.div_rem(&p);
        if !rem.is_zero() {
            return (k, n);
        }
        n = q;
        k += 1;
    }
}

/// Splits a nonzero rational as `p^v * num / den` with `num`, `den` prime to `p`.
pub(crate) fn split_at(r: &Rational, p: u64) -> (i64, BigInt, BigInt) {
    debug_assert!(!r.is_zero());
    let (vn, num) = remove_factor(r.numer(), p);
    let (vd, den) = remove_factor(r.denom(), p);
    (vn - vd, num, den)
}

pub fn valuation(r: &Rational, p: u64) -> Valuation {
    if r.is_zero() {
        return Valuation::Infinite;
    }
    let (v, _, _) = split_at(r, p);
    Valuation::Finite(v)
}

/// Finite valuation of a nonzero rational.
pub(crate) fn val(r: &Rational, p: u64) -> i64 {
    valuation(r, p).finite().expect("valuation of zero")
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// `(r / p^{v_p(r)}) mod p^M`, always coprime to `p`.
pub fn unit_residue(r: &Rational, p: u64, m: u32) -> Result<BigUint> {
    if r.is_zero() {
        return Err(ChowError::Domain("unit residue of zero".into()));
    }
    if m == 0 {
        return Err(ChowError::Domain("modulus exponent must be positive".into()));
    }
    let (_, num, den) = split_at(r, p);
    let modulus = BigInt::from(p).pow(m);
    let inv = mod_inverse(&den, &modulus)
        .ok_or_else(|| ChowError::Domain(format!("denominator not invertible mod {p}^{m}")))?;
    let u = (num * inv).mod_floor(&modulus);
    Ok(u.to_biguint().expect("mod_floor is nonnegative"))
}

/// A nonzero rational seen at `p^(valuation + modulus_exponent)` precision.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PadicResidue {
    pub prime: u64,
    pub valuation: i64,
    pub unit_residue: BigUint,
    pub modulus_exponent: u32,
}

impl PadicResidue {
    pub fn of(r: &Rational, p: u64, m: u32) -> Result<PadicResidue> {
        Ok(PadicResidue {
            prime: p,
            valuation: val_checked(r, p)?,
            unit_residue: unit_residue(r, p, m)?,
            modulus_exponent: m,
        })
    }
}

fn val_checked(r: &Rational, p: u64) -> Result<i64> {
    valuation(r, p)
        .finite()
        .ok_or_else(|| ChowError::Domain("valuation of zero".into()))
}

/// Legendre symbol in additive form: 0 for quadratic residues, 1 otherwise.
/// Euler's criterion.
pub fn legendre(a: &BigInt, p: u64) -> Result<F2> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(ChowError::Domain(format!("legendre symbol needs an odd prime, got {p}")));
    }
    let pb = BigInt::from(p);
    let a = a.mod_floor(&pb);
    if a.is_zero() {
        return Err(ChowError::Domain(format!("{p} divides the argument")));
    }
    let e = BigInt::from((p - 1) / 2);
    let r = a.modpow(&e, &pb);
    Ok(F2::from(!r.is_one()))
}

/// Legendre symbol of a `p`-unit rational `num/den`.
pub(crate) fn legendre_of_unit(num: &BigInt, den: &BigInt, p: u64) -> F2 {
    let pb = BigInt::from(p);
    let a = (num * den).mod_floor(&pb);
    legendre(&a, p).expect("argument is a p-unit")
}

/// `num/den mod 8` for odd `num`, `den`.
pub(crate) fn mod8_of_unit(num: &BigInt, den: &BigInt) -> u8 {
    let eight = BigInt::from(8);
    // odd squares are 1 mod 8, so den^{-1} = den mod 8
    (num * den).mod_floor(&eight).to_u8().expect("residue below 8")
}

/// Whether `r` is a square in Q_p.
pub fn is_local_square(r: &Rational, p: u64) -> Result<bool> {
    if r.is_zero() {
        return Err(ChowError::Domain("zero has no square class".into()));
    }
    let (v, num, den) = split_at(r, p);
    if v % 2 != 0 {
        return Ok(false);
    }
    if p == 2 {
        Ok(mod8_of_unit(&num, &den) == 1)
    } else {
        Ok(legendre_of_unit(&num, &den, p).is_zero())
    }
}

/// Local square test at any place; at the real place this is positivity.
pub fn is_square_at(r: &Rational, place: Place) -> Result<bool> {
    match place {
        Place::Real => {
            if r.is_zero() {
                Err(ChowError::Domain("zero has no square class".into()))
            } else {
                Ok(r.is_positive())
            }
        }
        Place::Prime(p) => is_local_square(r, p),
    }
}

/// Whether a rational is a square in Q.
pub fn is_rational_square(r: &Rational) -> bool {
    if r.is_negative() {
        return false;
    }
    let is_sq = |n: &BigInt| {
        let m = n.magnitude();
        let s = m.sqrt();
        &s * &s == *m
    };
    is_sq(r.numer()) && is_sq(r.denom())
}

pub(crate) fn sign_is_negative(r: &Rational) -> bool {
    r.numer().sign() == Sign::Minus
}
