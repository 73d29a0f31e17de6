use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{ChowError, Result};
use crate::padic::F2;

/// An element `(b1, b2, b3)` of `(Z/2Z)^3`, one coordinate per root.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Triple(pub [F2; 3]);

impl F2Triple {
    pub const ZERO: F2Triple = F2Triple([F2::ZERO; 3]);

    pub fn new(b1: F2, b2: F2, b3: F2) -> Self {
        F2Triple([b1, b2, b3])
    }

    /// The triple `(b1, b2, b1 + b2)`, completing a pair to the sum-zero plane.
    pub fn from_pair(b1: F2, b2: F2) -> Self {
        F2Triple([b1, b2, b1 + b2])
    }

    pub fn from_bits(bits: [u8; 3]) -> Self {
        F2Triple(bits.map(|b| F2::from(b & 1 == 1)))
    }

    pub fn bits(self) -> [u8; 3] {
        self.0.map(F2::bit)
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    pub fn sum(self) -> F2 {
        self.0.into_iter().sum()
    }

    fn mask(self) -> u8 {
        self.0.iter().enumerate().fold(0, |m, (i, b)| m | (b.bit() << i))
    }

    fn from_mask(m: u8) -> Self {
        F2Triple(std::array::from_fn(|i| F2::from((m >> i) & 1 == 1)))
    }

    /// Moves coordinate `i` to position `slots[i]`.
    pub fn scatter(self, slots: [usize; 3]) -> Self {
        let mut out = [F2::ZERO; 3];
        for (i, &s) in slots.iter().enumerate() {
            out[s] = self.0[i];
        }
        F2Triple(out)
    }
}

impl std::ops::Add for F2Triple {
    type Output = F2Triple;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F2Triple) -> F2Triple {
        F2Triple::from_mask(self.mask() ^ rhs.mask())
    }
}

impl fmt::Display for F2Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.bits();
        write!(f, "({a},{b},{c})")
    }
}

impl Serialize for F2Triple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.bits().serialize(serializer)
    }
}

/// A subgroup of `(Z/2Z)^3` inside the plane `b1 + b2 + b3 = 0`, stored as a
/// reduced echelon basis so that equal subgroups compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Subgroup3 {
    basis: Vec<F2Triple>,
}

impl Subgroup3 {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Subgroup spanned by `gens`. Every generator must lie in the sum-zero
    /// plane.
    pub fn span<I: IntoIterator<Item = F2Triple>>(gens: I) -> Result<Self> {
        let mut g = Self::trivial();
        for t in gens {
            g.insert(t)?;
        }
        Ok(g)
    }

    /// Builds a subgroup from a basis, rejecting dependent vectors.
    pub fn from_basis(basis: &[F2Triple]) -> Result<Self> {
        let g = Self::span(basis.iter().copied())?;
        if g.dim() != basis.len() {
            return Err(ChowError::Domain(format!(
                "basis vectors are F2-dependent: {}",
                basis.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
            )));
        }
        Ok(g)
    }

    pub fn insert(&mut self, t: F2Triple) -> Result<bool> {
        if !t.sum().is_zero() {
            return Err(ChowError::Domain(format!("{t} does not satisfy b1 + b2 + b3 = 0")));
        }
        if self.contains(t) {
            return Ok(false);
        }
        let mut masks: Vec<u8> = self.basis.iter().map(|b| b.mask()).collect();
        masks.push(t.mask());
        self.basis = reduce(masks);
        Ok(true)
    }

    pub fn contains(&self, t: F2Triple) -> bool {
        let mut m = t.mask();
        for b in &self.basis {
            let bm = b.mask();
            let pivot = 7 - bm.leading_zeros() as u8;
            if (m >> pivot) & 1 == 1 {
                m ^= bm;
            }
        }
        m == 0
    }

    pub fn basis(&self) -> &[F2Triple] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn order(&self) -> u32 {
        1 << self.basis.len()
    }

    /// All elements, sorted.
    pub fn elements(&self) -> Vec<F2Triple> {
        let mut out: Vec<F2Triple> = (0u32..self.order())
            .map(|sel| {
                self.basis
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| (sel >> i) & 1 == 1)
                    .fold(F2Triple::ZERO, |acc, (_, b)| acc + *b)
            })
            .collect();
        out.sort();
        out
    }

    /// Image under the coordinate relabelling `i -> slots[i]`.
    pub fn scatter(&self, slots: [usize; 3]) -> Self {
        Self::span(self.basis.iter().map(|b| b.scatter(slots))).expect("relabelling preserves the sum")
    }
}

/// Reduced row echelon form over F2 on 3-bit masks, pivots descending.
fn reduce(mut rows: Vec<u8>) -> Vec<F2Triple> {
    let mut out: Vec<u8> = Vec::new();
    for bit in (0..3).rev() {
        if let Some(pos) = rows.iter().position(|r| (r >> bit) & 1 == 1) {
            let pivot = rows.swap_remove(pos);
            for r in rows.iter_mut().chain(out.iter_mut()) {
                if (*r >> bit) & 1 == 1 {
                    *r ^= pivot;
                }
            }
            out.push(pivot);
        }
    }
    out.into_iter().map(F2Triple::from_mask).collect()
}

impl Serialize for Subgroup3 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.basis.serialize(serializer)
    }
}

/// Rank over F2 of a list of triples.
pub fn f2_rank<I: IntoIterator<Item = F2Triple>>(rows: I) -> usize {
    reduce(rows.into_iter().map(|t| t.mask()).collect()).len()
}
