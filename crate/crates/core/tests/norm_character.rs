mod common;

use chatelet_core::norm::{chi, classify_extension, conductor_n, ExtKind};
use chatelet_core::{Place, Rational, F2};
use common::*;
use proptest::prelude::*;

/// Non-square `d` at `p`, by square class, times a square.
fn nonsquare_d() -> impl Strategy<Value = (Rational, u64)> {
    (prop::sample::select(&SMALL_PRIMES[..]), 0usize..7, 1i64..6, 1i64..6).prop_map(|(p, idx, s, t)| {
        let classes = square_classes(p);
        let nontrivial = &classes[1..];
        let d = &nontrivial[idx % nontrivial.len()] * q(s * s, t * t);
        (d, p)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn homomorphism((d, p) in nonsquare_d(), x in nonzero_rational(), y in nonzero_rational()) {
        let v = Place::Prime(p);
        prop_assert_eq!(chi(&d, &(&x * &y), v).unwrap(), chi(&d, &x, v).unwrap() + chi(&d, &y, v).unwrap());
    }

    #[test]
    fn norms_are_in_the_kernel((d, p) in nonsquare_d(), s in -40i64..40, t in -40i64..40, den in 1i64..9) {
        prop_assume!(s != 0 || t != 0);
        let (s, t) = (q(s, den), q(t, den + 1));
        let norm = &s * &s - &d * &t * &t;
        prop_assert_eq!(chi(&d, &norm, Place::Prime(p)).unwrap(), F2::ZERO);
        prop_assert_eq!(chi(&d, &norm, Place::Real).unwrap_or(F2::ZERO), F2::ZERO);
    }

    #[test]
    fn conductor_ignores_squares(idx in 0usize..6, s in 1i64..30, t in 1i64..30) {
        let d = r([-1, 3, 2, -2, 10, -10][idx]) * q(s * s, t * t);
        prop_assert_eq!(conductor_n(&d).unwrap(), conductor_n(&r([-1, 3, 2, -2, 10, -10][idx])).unwrap());
    }
}

#[test]
fn unramified_kills_units() {
    for (d, p) in [(5i64, 2u64), (-3, 2), (2, 3), (2, 5), (3, 7), (2, 11)] {
        let d = r(d);
        let v = Place::Prime(p);
        assert_eq!(classify_extension(&d, v).unwrap().kind, ExtKind::Unramified);
        for u in 1..200i64 {
            if u % p as i64 != 0 {
                assert_eq!(chi(&d, &r(u), v).unwrap(), F2::ZERO);
                assert_eq!(chi(&d, &q(-u, 17 * 19 * 23), v).unwrap(), F2::ZERO);
            }
        }
        assert_eq!(chi(&d, &r(p as i64), v).unwrap(), F2::ONE);
    }
}

/// With stability modulus `m`, chi is constant on cosets of `U_m` and not on
/// cosets of `U_(m-1)`; checked on all units mod `p^(m+1)`.
#[test]
fn stability_modulus_is_sharp() {
    for (d, p) in [(-1i64, 2u64), (3, 2), (2, 2), (-2, 2), (10, 2), (3, 3), (5, 5), (10, 5), (7, 7)] {
        let d = r(d);
        let v = Place::Prime(p);
        let m = classify_extension(&d, v).unwrap().stability_m;
        assert!(m >= 1);
        let modulus = (p as i64).pow(m + 1);
        let units: Vec<i64> = (1..modulus).filter(|u| u % p as i64 != 0).collect();
        let step = (p as i64).pow(m);
        for &u in &units {
            // x' = x (1 + p^m t)
            for t in 0..p as i64 {
                let x = r(u);
                let x2 = r(u) * r(1 + step * t);
                assert_eq!(chi(&d, &x, v).unwrap(), chi(&d, &x2, v).unwrap(), "d={d} p={p} u={u}");
            }
        }
        let coarse = (p as i64).pow(m - 1);
        let differs = units.iter().any(|&u| {
            (0..modulus).any(|t| {
                let x2 = r(u) * r(1 + coarse * t);
                chi(&d, &r(u), v).unwrap() != chi(&d, &x2, v).unwrap()
            })
        });
        assert!(differs, "d={d} p={p}: chi already constant on U_{}", m - 1);
    }
}

#[test]
fn real_place_is_the_sign() {
    for x in [r(3), q(-1, 7), r(-12), q(5, 2)] {
        let negative = x < r(0);
        assert_eq!(chi(&r(-3), &x, Place::Real).unwrap(), F2::from(negative));
    }
}
