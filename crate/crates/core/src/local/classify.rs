//! Closed-form prediction of the order of the local group, used as an
//! independent cross-check of the enumeration.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::enumerate::positive_intervals;
use super::normalize::NormalizedSurface;
use crate::error::{ChowError, Result};
use crate::norm::{chi, classify_extension, norm_uniformizer, ExtKind};
use crate::padic::{val, Place, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    SplitTrivial,
    Prop1I,
    Prop1Ii,
    Prop1Iii,
    Prop2I,
    Prop2Ii,
    Prop2Iii,
    Prop3I,
    Prop3Ii,
    Prop3Iii,
    RealDPositive,
    RealDNegative,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::SplitTrivial => "Split-trivial",
            CaseLabel::Prop1I => "Prop1-i",
            CaseLabel::Prop1Ii => "Prop1-ii",
            CaseLabel::Prop1Iii => "Prop1-iii",
            CaseLabel::Prop2I => "Prop2-i",
            CaseLabel::Prop2Ii => "Prop2-ii",
            CaseLabel::Prop2Iii => "Prop2-iii",
            CaseLabel::Prop3I => "Prop3-i",
            CaseLabel::Prop3Ii => "Prop3-ii",
            CaseLabel::Prop3Iii => "Prop3-iii",
            CaseLabel::RealDPositive => "Real-d-positive",
            CaseLabel::RealDNegative => "Real-d-negative",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// `v_p(ratio - 1) >= level`.
fn congruent_to_one(ratio: &Rational, p: u64, level: u32) -> bool {
    let diff = ratio - Rational::one();
    diff.is_zero() || val(&diff, p) >= level as i64
}

/// Case and predicted order of the local group for a non-split `d`.
///
/// Ramified cases first divide `e1`, `e2` by `pi^r` for a uniformizer `pi`
/// that is itself a norm, which brings both roots to units without changing
/// the surface up to isomorphism.
pub fn classify_case(d: &Rational, surface: &NormalizedSurface, place: Place) -> Result<(CaseLabel, u32)> {
    let ext = classify_extension(d, place)?;
    if ext.is_split() {
        return Err(ChowError::Domain(format!("d = {d} is a square at {place}")));
    }
    let (e1, e2) = (&surface.e1, &surface.e2);
    let p = match place {
        Place::Real => {
            let s = positive_intervals(e1, e2);
            return Ok((CaseLabel::RealDNegative, 1 << (s - 1)));
        }
        Place::Prime(p) => p,
    };
    let r = surface.r;
    if ext.kind == ExtKind::Unramified {
        let diff = val(&(e1 - e2), p);
        return Ok(if r % 2 != 0 {
            (CaseLabel::Prop1Iii, 4)
        } else if diff == r {
            (CaseLabel::Prop1I, 1)
        } else {
            (CaseLabel::Prop1Ii, 2)
        });
    }

    let pi = norm_uniformizer(d, p, ext.stability_m)?;
    let scale = pow(&pi, r);
    let eps1 = e1 / &scale;
    let eps2 = e2 / &scale;
    debug_assert_eq!(val(&eps1, p), 0);
    let (level, labels) = if p == 2 {
        (2 * ext.conductor_n + 1, [CaseLabel::Prop3I, CaseLabel::Prop3Ii, CaseLabel::Prop3Iii])
    } else {
        (1, [CaseLabel::Prop2I, CaseLabel::Prop2Ii, CaseLabel::Prop2Iii])
    };
    let close = congruent_to_one(&(&eps1 / &eps2), p, level);
    Ok(match (close, chi(d, &eps1, place)?.is_zero()) {
        (true, true) => (labels[0], 2),
        (true, false) => (labels[1], 4),
        (false, _) => (labels[2], 4),
    })
}

fn pow(x: &Rational, e: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::normalize::normalize_roots;
    use crate::padic::rat;

    fn case(d: i64, roots: [i64; 3], p: u64) -> (CaseLabel, u32) {
        let place = Place::Prime(p);
        let n = normalize_roots(&roots.map(rat), place).unwrap();
        classify_case(&rat(d), &n, place).unwrap()
    }

    #[test]
    fn documented_cases() {
        assert_eq!(case(2, [0, 1, 2], 5), (CaseLabel::Prop1I, 1));
        assert_eq!(case(5, [0, 1, 6], 5), (CaseLabel::Prop2I, 2));
        assert_eq!(case(-1, [0, 3, 27], 2), (CaseLabel::Prop3Ii, 4));
        assert_eq!(case(2, [0, 5, 10], 5), (CaseLabel::Prop1Iii, 4));
        assert_eq!(case(-1, [0, 1, 2], 2), (CaseLabel::Prop3Iii, 4));
    }

    #[test]
    fn rescaling_preserves_the_case() {
        // multiplying all roots by 5^2 keeps the odd ramified case
        assert_eq!(case(5, [0, 25, 150], 5), (CaseLabel::Prop2I, 2));
        assert_eq!(case(-1, [0, 12, 108], 2).0, CaseLabel::Prop3Ii);
    }

    #[test]
    fn real_place() {
        let n = normalize_roots(&[rat(0), rat(1), rat(2)], Place::Real).unwrap();
        assert_eq!(classify_case(&rat(-1), &n, Place::Real).unwrap(), (CaseLabel::RealDNegative, 2));
        assert!(classify_case(&rat(3), &n, Place::Real).is_err());
    }
}
