use serde::Serialize;

use crate::error::{ChowError, Result};
use crate::padic::{format_rational, val, Place, Rational};

/// Surface `y^2 - d z^2 = x (x - e1)(x - e2)` obtained by translating one
/// root to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NormalizedSurface {
    #[serde(serialize_with = "ser_rational")]
    pub e1: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub e2: Rational,
    /// Original index (1..=3) of the root moved to zero.
    pub base_root_index: u8,
    /// Original root index (1..=3) of the fibre at 0, at e1 and at e2.
    pub perm: [u8; 3],
    /// Common valuation of e1 and e2; 0 at the real place.
    pub r: i64,
}

pub(crate) fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

impl NormalizedSurface {
    /// 0-based target coordinate of each local slot.
    pub fn slots(&self) -> [usize; 3] {
        self.perm.map(|i| i as usize - 1)
    }
}

pub fn check_distinct(roots: &[Rational; 3]) -> Result<()> {
    let [a, b, c] = roots;
    if a == b || a == c || b == c {
        return Err(ChowError::DegenerateSurface(
            format_rational(a),
            format_rational(b),
            format_rational(c),
        ));
    }
    Ok(())
}

/// Translates a root to zero so that the other two differences share a
/// valuation. Finite places take the least-index root whose two incident
/// differences have equal valuation; the real place takes the smallest root.
/// `e1`, `e2` follow the original index order (ascending value at the real
/// place).
pub fn normalize_roots(roots: &[Rational; 3], place: Place) -> Result<NormalizedSurface> {
    check_distinct(roots)?;
    let others = |i: usize| -> [usize; 2] {
        match i {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        }
    };
    let (base, mut rest, r) = match place {
        Place::Real => {
            let base = (0..3).min_by(|&i, &j| roots[i].cmp(&roots[j])).unwrap();
            (base, others(base), 0)
        }
        Place::Prime(p) => {
            let diff_val = |i: usize, j: usize| val(&(&roots[i] - &roots[j]), p);
            let (base, r) = (0..3)
                .find_map(|i| {
                    let [j, k] = others(i);
                    let (vj, vk) = (diff_val(i, j), diff_val(i, k));
                    (vj == vk).then_some((i, vj))
                })
                .expect("ultrametric inequality: the two smallest difference valuations agree");
            (base, others(base), r)
        }
    };
    if place == Place::Real && roots[rest[0]] > roots[rest[1]] {
        rest.swap(0, 1);
    }
    let e1 = &roots[rest[0]] - &roots[base];
    let e2 = &roots[rest[1]] - &roots[base];
    Ok(NormalizedSurface {
        e1,
        e2,
        base_root_index: base as u8 + 1,
        perm: [base as u8 + 1, rest[0] as u8 + 1, rest[1] as u8 + 1],
        r,
    })
}
