use num_traits::Zero;

use super::{legendre_of_unit, mod8_of_unit, sign_is_negative, split_at, Place, Rational, F2};
use crate::error::{ChowError, Result};

/// Hilbert symbol `(a, b)_v` in additive notation: 0 iff `z^2 = a x^2 + b y^2`
/// has a nonzero solution over the completion at `v`.
pub fn hilbert_symbol(a: &Rational, b: &Rational, place: Place) -> Result<F2> {
    if a.is_zero() || b.is_zero() {
        return Err(ChowError::Domain("Hilbert symbol of zero".into()));
    }
    Ok(match place {
        Place::Real => F2::from(sign_is_negative(a) && sign_is_negative(b)),
        Place::Prime(2) => dyadic(a, b),
        Place::Prime(p) => odd(a, b, p),
    })
}

fn odd(a: &Rational, b: &Rational, p: u64) -> F2 {
    let (alpha, an, ad) = split_at(a, p);
    let (beta, bn, bd) = split_at(b, p);
    // (-1)^{alpha beta eps(p)} (u/p)^beta (v/p)^alpha
    let eps = F2::from(p % 4 == 3);
    let mut s = F2::ZERO;
    if alpha % 2 != 0 && beta % 2 != 0 {
        s += eps;
    }
    if beta % 2 != 0 {
        s += legendre_of_unit(&an, &ad, p);
    }
    if alpha % 2 != 0 {
        s += legendre_of_unit(&bn, &bd, p);
    }
    s
}

fn dyadic(a: &Rational, b: &Rational) -> F2 {
    let (alpha, an, ad) = split_at(a, 2);
    let (beta, bn, bd) = split_at(b, 2);
    let u = mod8_of_unit(&an, &ad);
    let v = mod8_of_unit(&bn, &bd);
    // eps(u) = (u-1)/2 mod 2, omega(u) = (u^2-1)/8 mod 2
    let eps = |x: u8| F2::from(x % 4 == 3);
    let omega = |x: u8| F2::from(x == 3 || x == 5);
    let mut s = if eps(u) == F2::ONE && eps(v) == F2::ONE { F2::ONE } else { F2::ZERO };
    if alpha % 2 != 0 {
        s += omega(v);
    }
    if beta % 2 != 0 {
        s += omega(u);
    }
    s
}
