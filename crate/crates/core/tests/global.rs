mod common;

use chatelet_core::factor::is_prime_u64;
use chatelet_core::global::{candidate_places, global_chow, kernel_dimension, GlobalOptions};
use chatelet_core::local::{local_chow, F2Triple, LocalOptions};
use chatelet_core::{Place, Rational};
use common::*;
use proptest::prelude::*;

fn opts(seed: u64) -> GlobalOptions {
    GlobalOptions { sample_count: 20, seed, ..GlobalOptions::default() }
}

fn roots() -> impl Strategy<Value = [Rational; 3]> {
    (-30i64..30, -30i64..30, -30i64..30, 1i64..5)
        .prop_map(|(a, b, c, den)| [q(a, den), r(b), q(c, den + 1)])
        .prop_filter("distinct", |[a, b, c]| a != b && a != c && b != c)
}

fn d() -> impl Strategy<Value = Rational> {
    prop::sample::select(&[-1i64, -2, -3, 2, 3, 5, 6, -7, 10, -15, 17, 21][..]).prop_map(r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn kernel_within_bounds(d in d(), roots in roots(), seed in 0u64..1000) {
        let g = global_chow(&d, &roots, &opts(seed)).unwrap();
        let total: usize = g.places.iter().map(|l| l.subgroup.dim()).sum();
        prop_assert!(g.kernel_dim <= total);
        prop_assert!(g.kernel_dim + 2 >= total);
        prop_assert!(g.places.iter().all(|l| l.consistent));
    }

    #[test]
    fn square_multiples_of_d_agree(d in d(), roots in roots(), s in 1i64..12, t in 1i64..12) {
        let base = global_chow(&d, &roots, &opts(1)).unwrap();
        let scaled = global_chow(&(&d * q(s * s, t * t)), &roots, &opts(1)).unwrap();
        prop_assert_eq!(base.kernel_dim, scaled.kernel_dim);
    }

    #[test]
    fn trivial_places_do_not_move_the_kernel(d in d(), roots in roots()) {
        let g = global_chow(&d, &roots, &opts(2)).unwrap();
        let mut bases: Vec<Vec<F2Triple>> = g.places.iter().map(|l| l.subgroup.basis().to_vec()).collect();
        let before = kernel_dimension(&bases).unwrap();
        bases.push(vec![]);
        bases.insert(0, vec![]);
        prop_assert_eq!(before, kernel_dimension(&bases).unwrap());
        prop_assert_eq!(before, g.kernel_dim);
    }
}

/// Every odd prime below 150 outside the candidate set has a trivial local group.
#[test]
fn candidate_set_is_complete() {
    let surfaces = [(-1, [0, 1, 2]), (17, [0, 1, 2]), (3, [1, 4, 9]), (-6, [0, 5, 7]), (10, [-3, 2, 12])];
    for (d, rs) in surfaces {
        let d = r(d);
        let roots = rs.map(r);
        let candidates = candidate_places(&d, &roots, 1_000_000).unwrap();
        for p in (3u64..150).filter(|&p| is_prime_u64(p)) {
            if candidates.places.contains(&Place::Prime(p)) {
                continue;
            }
            let l = local_chow(&d, &roots, Place::Prime(p), LocalOptions::default()).unwrap();
            assert!(l.is_trivial(), "d={d} p={p}");
        }
    }
}

#[test]
fn square_d_collapses() {
    for d in [r(4), q(9, 25), r(1)] {
        let g = global_chow(&d, &[r(0), r(1), r(2)], &opts(0)).unwrap();
        assert!(g.global_square);
        assert_eq!(g.kernel_dim, 0);
        assert_eq!(g.group, "(Z/2)^0");
    }
}

#[test]
fn sampling_is_seeded() {
    let a = global_chow(&r(-1), &[r(0), r(1), r(2)], &opts(11)).unwrap();
    let b = global_chow(&r(-1), &[r(0), r(1), r(2)], &opts(11)).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.sampled_primes.len(), 20);
    assert!(a.sampled_primes.iter().all(|&p| p % 2 == 1 && is_prime_u64(p)));
}

#[test]
fn seventeen_is_a_candidate() {
    let g = global_chow(&r(17), &[r(0), r(1), r(2)], &opts(0)).unwrap();
    let places: Vec<Place> = g.checked.iter().map(|c| c.place).collect();
    assert_eq!(places, vec![Place::Real, Place::Prime(2), Place::Prime(17)]);
}
