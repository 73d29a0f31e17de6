//! The local Chow group `A_0(X_v)_0` of a Chatelet surface at one place.

mod classify;
mod enumerate;
mod normalize;
mod subgroup;

pub use classify::{classify_case, CaseLabel};
pub use enumerate::{
    characteristic_subgroup, chi_triple, enumerate_points, positive_intervals, special_fiber_images,
    truncation_bounds, Regime, SurfacePoint, TruncationBounds,
};
pub use normalize::{check_distinct, normalize_roots, NormalizedSurface};
pub(crate) use normalize::ser_rational as ser_rational_pub;
pub use subgroup::{f2_rank, F2Triple, Subgroup3};

use serde::Serialize;

use crate::error::{ChowError, Result};
use crate::norm::{classify_extension, QuadExtClass};
use crate::padic::{Place, Rational};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LocalOptions {
    /// Extra valuations on each side of the sweep window and extra residue
    /// digits.
    pub precision_buffer: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalReport {
    pub place: Place,
    pub ext_class: QuadExtClass,
    pub normalized: Option<NormalizedSurface>,
    pub case_label: CaseLabel,
    pub predicted_order: u32,
    /// Enumerated subgroup, coordinates indexed by the original roots.
    pub subgroup: Subgroup3,
    pub consistent: bool,
}

impl LocalReport {
    pub fn order(&self) -> u32 {
        self.subgroup.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.subgroup.dim() == 0
    }

    /// Group isomorphism type, `"(Z/2)^k"`.
    pub fn group(&self) -> String {
        format!("(Z/2)^{}", self.subgroup.dim())
    }
}

/// Builds the report without failing on a classifier/enumerator mismatch;
/// `consistent` records the verdict.
pub fn local_report(d: &Rational, roots: &[Rational; 3], place: Place, opts: LocalOptions) -> Result<LocalReport> {
    check_distinct(roots)?;
    let ext_class = classify_extension(d, place)?;
    if ext_class.is_split() {
        let case_label = match place {
            Place::Real => CaseLabel::RealDPositive,
            Place::Prime(_) => CaseLabel::SplitTrivial,
        };
        return Ok(LocalReport {
            place,
            ext_class,
            normalized: None,
            case_label,
            predicted_order: 1,
            subgroup: Subgroup3::trivial(),
            consistent: true,
        });
    }
    let normalized = normalize_roots(roots, place)?;
    let local = characteristic_subgroup(d, &normalized.e1, &normalized.e2, place, opts.precision_buffer)?;
    let (case_label, predicted_order) = classify_case(d, &normalized, place)?;
    let subgroup = local.scatter(normalized.slots());
    Ok(LocalReport {
        place,
        ext_class,
        consistent: subgroup.order() == predicted_order,
        normalized: Some(normalized),
        case_label,
        predicted_order,
        subgroup,
    })
}

/// Local Chow group at `place`, as a subgroup of `(Z/2Z)^3` indexed by the
/// roots in the given order. A disagreement between the enumerated subgroup
/// and the closed-form case prediction is an error.
pub fn local_chow(d: &Rational, roots: &[Rational; 3], place: Place, opts: LocalOptions) -> Result<LocalReport> {
    let report = local_report(d, roots, place, opts)?;
    if !report.consistent {
        return Err(ChowError::Contradiction {
            place: place.to_string(),
            case: report.case_label.to_string(),
            predicted: report.predicted_order,
            enumerated: report.order(),
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::rat;

    fn roots(a: i64, b: i64, c: i64) -> [Rational; 3] {
        [rat(a), rat(b), rat(c)]
    }

    #[test]
    fn square_d_is_trivial() {
        for place in [Place::Real, Place::Prime(2), Place::Prime(7)] {
            let r = local_chow(&rat(4), &roots(0, 1, 2), place, LocalOptions::default()).unwrap();
            assert_eq!(r.order(), 1);
            assert!(r.normalized.is_none());
        }
    }

    #[test]
    fn unramified_odd_r() {
        let r = local_chow(&rat(2), &roots(0, 5, 10), Place::Prime(5), LocalOptions::default()).unwrap();
        assert_eq!((r.case_label, r.order()), (CaseLabel::Prop1Iii, 4));
    }

    #[test]
    fn dyadic_full_plane() {
        let r = local_chow(&rat(-1), &roots(0, 1, 2), Place::Prime(2), LocalOptions::default()).unwrap();
        assert_eq!((r.case_label, r.order()), (CaseLabel::Prop3Iii, 4));
        assert_eq!(r.group(), "(Z/2)^2");
    }

    #[test]
    fn real_line_in_global_coordinates() {
        let r = local_chow(&rat(-1), &roots(2, 0, 1), Place::Real, LocalOptions::default()).unwrap();
        assert_eq!(r.subgroup, Subgroup3::span([F2Triple::from_bits([1, 0, 1])]).unwrap());
    }

    #[test]
    fn repeated_roots_rejected() {
        assert!(matches!(
            local_chow(&rat(-1), &roots(0, 0, 1), Place::Prime(3), LocalOptions::default()),
            Err(ChowError::DegenerateSurface(..))
        ));
    }
}
