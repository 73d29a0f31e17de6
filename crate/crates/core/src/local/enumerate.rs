//! Enumeration of the image of the characteristic map
//! `x -> (chi(x), chi(x - e1), chi(x - e2))` over the fibres of the conic
//! bundle that carry local points.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::subgroup::{F2Triple, Subgroup3};
use crate::error::{ChowError, Result};
use crate::norm::{chi, classify_extension, stability_modulus, QuadExtClass};
use crate::padic::{rat, ratio, val, Place, Rational};

/// Images of the degenerate fibres over `infinity, 0, e1, e2`, in that order.
pub fn special_fiber_images(d: &Rational, e1: &Rational, e2: &Rational, place: Place) -> Result<[F2Triple; 4]> {
    let class = classify_extension(d, place)?;
    if class.is_split() {
        return Err(ChowError::Domain(format!("d = {d} is a square at {place}")));
    }
    let c = |x: Rational| chi(d, &x, place);
    let e12 = e1 - e2;
    let e21 = e2 - e1;
    Ok([
        F2Triple::ZERO,
        F2Triple::new(c(e1 * e2)?, c(-e1.clone())?, c(-e2.clone())?),
        F2Triple::new(c(e1.clone())?, c(e1 * &e12)?, c(e12)?),
        F2Triple::new(c(e2.clone())?, c(e21.clone())?, c(e2 * &e21)?),
    ])
}

/// Valuation window and residue precision of the sweep `x = p^w u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TruncationBounds {
    pub w_min: i64,
    pub w_max: i64,
    /// Unit parts are resolved modulo `p^modulus_exponent`.
    pub modulus_exponent: u32,
    /// Stability modulus of the character.
    pub m: u32,
    /// Common valuation of e1, e2.
    pub r: i64,
    /// Valuation of e1 - e2.
    pub diff_valuation: i64,
}

impl TruncationBounds {
    /// Widens the window by `buffer` on both sides and the modulus by `buffer`.
    pub fn inflated(self, buffer: u32) -> Self {
        TruncationBounds {
            w_min: self.w_min - buffer as i64,
            w_max: self.w_max + buffer as i64,
            modulus_exponent: self.modulus_exponent + buffer,
            ..self
        }
    }
}

/// Below `w_min` every surface point maps to `(0,0,0)`, above `w_max` to the
/// image of the fibre at 0, and in between the image of `p^w u` only
/// depends on `u mod p^M`.
pub fn truncation_bounds(ext: &QuadExtClass, e1: &Rational, e2: &Rational, p: u64) -> Result<TruncationBounds> {
    let m = stability_modulus(ext)?;
    let r = val(e1, p);
    if val(e2, p) != r {
        return Err(ChowError::Domain("e1 and e2 must share a valuation".into()));
    }
    let diff = val(&(e1 - e2), p);
    let w_min = r - m as i64;
    let w_max = r.max(diff) + m as i64;
    let modulus_exponent = (w_max - w_min) as u32 + m + 1;
    Ok(TruncationBounds { w_min, w_max, modulus_exponent, m, r, diff_valuation: diff })
}

/// Where an enumerated point came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// `x = p^w u` inside the valuation window.
    Window,
    /// `x = e_i + p^j u`, close to one of the roots (1 or 2).
    NearRoot(u8),
    /// Interior sample of a real interval.
    Interval,
}

/// A point of `P^1(Q_v)` over which the conic has a local point, together
/// with its image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfacePoint {
    pub x: Rational,
    pub image: F2Triple,
    pub regime: Regime,
}

/// Evaluates the three characters at `x` and keeps `x` iff the fibre over it
/// has a local point, i.e. `chi(x (x - e1)(x - e2)) = 0`.
fn image_if_on_surface(d: &Rational, e1: &Rational, e2: &Rational, x: &Rational, place: Place) -> Result<Option<F2Triple>> {
    let t = F2Triple::new(chi(d, x, place)?, chi(d, &(x - e1), place)?, chi(d, &(x - e2), place)?);
    Ok(t.sum().is_zero().then_some(t))
}

struct Sweep<'a> {
    d: &'a Rational,
    e1: &'a Rational,
    e2: &'a Rational,
    p: u64,
    place: Place,
    /// Precision a ratio must reach before the character is constant: `max(m, 1)`.
    stable: i64,
    cap: u32,
}

impl Sweep<'_> {
    /// Walks the unit classes `u mod p^k`, `k <= cap`, of the points
    /// `x = center + p^j u`. A class is evaluated once as soon as each of
    /// `x, x - e1, x - e2` is constant up to `U_max(m,1)` across the class; the
    /// classes still open at depth `cap` are evaluated on their
    /// representative.
    fn run(&self, center: &Rational, j: i64, regime: Regime, out: &mut Vec<SurfacePoint>) -> Result<()> {
        let p = BigInt::from(self.p);
        let scale = pow_rat(self.p, j);
        let zero = Rational::zero();
        let targets = [&zero, self.e1, self.e2];
        let mut stack: Vec<(BigInt, u32)> = (1..self.p).map(|u| (BigInt::from(u), 1)).collect();
        while let Some((u, depth)) = stack.pop() {
            let x = center + &scale * Rational::from_integer(u.clone());
            let determined = targets.iter().all(|&a| {
                let base = &x - a;
                !base.is_zero() && val(&base, self.p) + self.stable <= j + depth as i64
            });
            if determined || depth == self.cap {
                if targets.iter().any(|&a| *a == x) {
                    continue;
                }
                if let Some(image) = image_if_on_surface(self.d, self.e1, self.e2, &x, self.place)? {
                    out.push(SurfacePoint { x, image, regime });
                }
                continue;
            }
            let step = p.pow(depth);
            for t in 0..self.p {
                stack.push((&u + &step * BigInt::from(t), depth + 1));
            }
        }
        Ok(())
    }
}

fn pow_rat(p: u64, e: i64) -> Rational {
    let base = BigInt::from(p).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rational::from_integer(base)
    } else {
        Rational::new(BigInt::from(1), base)
    }
}

/// Every enumerated point whose fibre has a local point, excluding the four
/// degenerate fibres. `buffer` widens the window and the residue precision.
pub fn enumerate_points(d: &Rational, e1: &Rational, e2: &Rational, place: Place, buffer: u32) -> Result<Vec<SurfacePoint>> {
    if e1.is_zero() || e2.is_zero() || e1 == e2 {
        return Err(ChowError::Domain("e1, e2 must be distinct and nonzero".into()));
    }
    let ext = classify_extension(d, place)?;
    if ext.is_split() {
        return Err(ChowError::Domain(format!("d = {d} is a square at {place}")));
    }
    let mut out = Vec::new();
    let p = match place {
        Place::Real => return real_points(d, e1, e2, &mut out).map(|_| out),
        Place::Prime(p) => p,
    };
    let bounds = truncation_bounds(&ext, e1, e2, p)?.inflated(buffer);
    let sweep = Sweep {
        d,
        e1,
        e2,
        p,
        place,
        stable: bounds.m.max(1) as i64,
        cap: bounds.modulus_exponent,
    };
    let origin = Rational::zero();
    for w in bounds.w_min..=bounds.w_max {
        sweep.run(&origin, w, Regime::Window, &mut out)?;
    }
    let deepest = bounds.diff_valuation.max(bounds.r) + bounds.m as i64 + buffer as i64;
    for (i, root) in [(1u8, e1), (2u8, e2)] {
        for j in bounds.r + 1..=deepest {
            sweep.run(root, j, Regime::NearRoot(i), &mut out)?;
        }
    }
    Ok(out)
}

/// One sample per interval of `R \ {0, e1, e2}`; the character is the sign.
fn real_points(d: &Rational, e1: &Rational, e2: &Rational, out: &mut Vec<SurfacePoint>) -> Result<()> {
    for x in real_samples(e1, e2) {
        if let Some(image) = image_if_on_surface(d, e1, e2, &x, Place::Real)? {
            out.push(SurfacePoint { x, image, regime: Regime::Interval });
        }
    }
    Ok(())
}

fn real_samples(e1: &Rational, e2: &Rational) -> Vec<Rational> {
    let mut cuts = [Rational::zero(), e1.clone(), e2.clone()];
    cuts.sort();
    let mut samples = vec![&cuts[0] - rat(1)];
    for w in cuts.windows(2) {
        samples.push((&w[0] + &w[1]) * ratio(1, 2));
    }
    samples.push(&cuts[2] + rat(1));
    samples
}

/// Number of intervals of `R \ {0, e1, e2}` on which `x (x - e1)(x - e2) > 0`.
pub fn positive_intervals(e1: &Rational, e2: &Rational) -> u32 {
    real_samples(e1, e2)
        .iter()
        .filter(|x| (*x * (*x - e1) * (*x - e2)).is_positive())
        .count() as u32
}

/// Subgroup of `(Z/2Z)^3` generated by the images of all fibres with local
/// points, in local coordinates (fibre at 0, e1, e2).
pub fn characteristic_subgroup(d: &Rational, e1: &Rational, e2: &Rational, place: Place, buffer: u32) -> Result<Subgroup3> {
    let special = special_fiber_images(d, e1, e2, place)?;
    let points = enumerate_points(d, e1, e2, place, buffer)?;
    // the two regimes outside the window stabilize to [infinity] and [0]
    let stabilized = [F2Triple::ZERO, special[1]];
    Subgroup3::span(
        special
            .into_iter()
            .chain(stabilized)
            .chain(points.into_iter().map(|pt| pt.image)),
    )
}

/// `(chi(x), chi(x - e1), chi(x - e2))` without the surface membership test.
pub fn chi_triple(d: &Rational, e1: &Rational, e2: &Rational, x: &Rational, place: Place) -> Result<F2Triple> {
    Ok(F2Triple::new(chi(d, x, place)?, chi(d, &(x - e1), place)?, chi(d, &(x - e2), place)?))
}
