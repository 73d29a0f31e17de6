//! The norm character of a local quadratic extension `Q_v(sqrt d)` and the
//! conductor data that bounds how finely it sees units.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{ChowError, Result};
use crate::padic::{hilbert_symbol, is_square_at, rat, split_at, Place, Rational, F2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ExtKind {
    Split,
    Unramified,
    Ramified,
}

/// Local behaviour of `Q_v(sqrt d) | Q_v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuadExtClass {
    pub kind: ExtKind,
    /// Dyadic ramified only: least `n` with the character trivial on
    /// `1 + 2^(n+1) Z_2` but not on `1 + 2^n Z_2`. Zero elsewhere.
    pub conductor_n: u32,
    /// Least `m` with the character trivial on units `= 1 mod p^m`; 0 means
    /// trivial on every unit.
    pub stability_m: u32,
}

impl QuadExtClass {
    pub fn is_split(&self) -> bool {
        self.kind == ExtKind::Split
    }

    fn new(kind: ExtKind, conductor_n: u32, stability_m: u32) -> Self {
        QuadExtClass { kind, conductor_n, stability_m }
    }
}

/// Hard cap for the conductor search; over Q_2 the answer never exceeds 2.
const CONDUCTOR_SEARCH_CAP: u32 = 16;

pub fn classify_extension(d: &Rational, place: Place) -> Result<QuadExtClass> {
    if d.is_zero() {
        return Err(ChowError::Domain("d must be nonzero".into()));
    }
    if is_square_at(d, place)? {
        return Ok(QuadExtClass::new(ExtKind::Split, 0, 0));
    }
    match place {
        Place::Real => Ok(QuadExtClass::new(ExtKind::Ramified, 0, 0)),
        Place::Prime(2) => {
            let (v, num, den) = split_at(d, 2);
            let u = crate::padic::mod8_of_unit(&num, &den);
            if v % 2 == 0 && u == 5 {
                Ok(QuadExtClass::new(ExtKind::Unramified, 0, 0))
            } else {
                let n = search_conductor(d)?;
                Ok(QuadExtClass::new(ExtKind::Ramified, n, n + 1))
            }
        }
        Place::Prime(p) => {
            let (v, _, _) = split_at(d, p);
            if v % 2 == 0 {
                Ok(QuadExtClass::new(ExtKind::Unramified, 0, 0))
            } else {
                Ok(QuadExtClass::new(ExtKind::Ramified, 0, 1))
            }
        }
    }
}

/// Norm character `x -> (d, x)_v`: 0 iff `x` is a norm from `Q_v(sqrt d)`.
/// At the real place with `d < 0` this is the sign character.
pub fn chi(d: &Rational, x: &Rational, place: Place) -> Result<F2> {
    hilbert_symbol(d, x, place)
}

/// Whether `chi(d, .)` vanishes on `U_level = 1 + 2^level Z_2`, tested on
/// every residue `= 1 mod 2^level` modulo `2^(top)`.
fn trivial_on_dyadic_level(d: &Rational, level: u32, top: u32) -> bool {
    let step = 1i64 << level;
    let limit = 1i64 << top;
    (0..limit / step).all(|t| chi(d, &rat(1 + t * step), Place::Prime(2)).unwrap().is_zero())
}

fn search_conductor(d: &Rational) -> Result<u32> {
    for n in 1..=CONDUCTOR_SEARCH_CAP {
        let top = n + 2;
        if trivial_on_dyadic_level(d, n + 1, top) && !trivial_on_dyadic_level(d, n, top) {
            return Ok(n);
        }
    }
    Err(ChowError::Domain(format!(
        "conductor search exceeded 2^{CONDUCTOR_SEARCH_CAP}"
    )))
}

/// Dyadic conductor exponent of a ramified `Q_2(sqrt d)`.
pub fn conductor_n(d: &Rational) -> Result<u32> {
    let class = classify_extension(d, Place::Prime(2))?;
    if class.kind != ExtKind::Ramified {
        return Err(ChowError::Domain(format!("Q_2(sqrt {d}) is not ramified")));
    }
    Ok(class.conductor_n)
}

pub fn stability_modulus(class: &QuadExtClass) -> Result<u32> {
    match class.kind {
        ExtKind::Split => Err(ChowError::Domain("split extension has a trivial norm character".into())),
        _ => Ok(class.stability_m),
    }
}

/// A norm uniformizer `p * u` (u a unit below `p^(m+1)`), i.e. an element of
/// valuation one with trivial character.
pub fn norm_uniformizer(d: &Rational, p: u64, m: u32) -> Result<Rational> {
    let place = Place::Prime(p);
    let limit = (p as i64).pow(m + 1);
    for u in 1..limit {
        if u % p as i64 == 0 {
            continue;
        }
        let pi = rat(p as i64 * u);
        if chi(d, &pi, place)?.is_zero() {
            return Ok(pi);
        }
    }
    Err(ChowError::Domain(format!("no norm uniformizer for d = {d} at {p}")))
}
