//! Seeded fuzz suites cross-checking the symbol formulas, the enumerator and
//! the case classifier against each other.

use std::fmt;

use num_traits::Zero;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{ChowError, Result};
use crate::global::reciprocity_check;
use crate::local::{local_chow, local_report, LocalOptions, LocalReport};
use crate::padic::{format_rational, ratio, Place, Rational};

/// A sampled local problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surface {
    pub d: Rational,
    pub roots: [Rational; 3],
    pub place: Place,
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d={} roots=({}, {}, {}) place={}",
            format_rational(&self.d),
            format_rational(&self.roots[0]),
            format_rational(&self.roots[1]),
            format_rational(&self.roots[2]),
            self.place
        )
    }
}

/// The local case families the sampler cycles through.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    UnramifiedOdd,
    RamifiedOdd,
    UnramifiedDyadic,
    RamifiedDyadicUnit,
    RamifiedDyadicEven,
    RealNegative,
}

pub const FAMILIES: [Family; 6] = [
    Family::UnramifiedOdd,
    Family::RamifiedOdd,
    Family::UnramifiedDyadic,
    Family::RamifiedDyadicUnit,
    Family::RamifiedDyadicEven,
    Family::RealNegative,
];

const ODD_PRIMES: [u64; 4] = [3, 5, 7, 11];

fn nonresidue(p: u64) -> i64 {
    (2..p as i64).find(|&a| (1..p as i64).all(|x| (x * x) % p as i64 != a)).unwrap()
}

fn random_square(rng: &mut ChaCha8Rng) -> Rational {
    let s = ratio(rng.random_range(1..=6), rng.random_range(1..=4));
    &s * &s
}

/// Draws `d` in the square class that forces `family`, times a random square.
fn sample_d(family: Family, rng: &mut ChaCha8Rng) -> (Rational, Place) {
    let (core, place) = match family {
        Family::UnramifiedOdd => {
            let p = *ODD_PRIMES.choose(rng).unwrap();
            (nonresidue(p), Place::Prime(p))
        }
        Family::RamifiedOdd => {
            let p = *ODD_PRIMES.choose(rng).unwrap();
            let u = if rng.random_bool(0.5) { 1 } else { nonresidue(p) };
            (p as i64 * u, Place::Prime(p))
        }
        Family::UnramifiedDyadic => (*[5, -3, 13, -11].choose(rng).unwrap(), Place::Prime(2)),
        Family::RamifiedDyadicUnit => (*[-1, 3, 7, -5, 11, -13].choose(rng).unwrap(), Place::Prime(2)),
        Family::RamifiedDyadicEven => (*[2, -2, 6, 10, -6, -10, 14].choose(rng).unwrap(), Place::Prime(2)),
        Family::RealNegative => (-*[1, 2, 3, 5, 7].choose(rng).unwrap(), Place::Real),
    };
    (Rational::from_integer(core.into()) * random_square(rng), place)
}

fn sample_root(place: Place, rng: &mut ChaCha8Rng) -> Rational {
    let p = place.as_prime().unwrap_or(2) as i64;
    let dens = [1, 1, 1, 2, 3, p, p * p];
    let num = rng.random_range(-60..=60);
    let scale = if rng.random_bool(0.2) { p * p } else { 1 };
    ratio(num * scale, *dens.choose(rng).unwrap())
}

/// A random non-split surface of the given family.
pub fn sample_surface(family: Family, rng: &mut ChaCha8Rng) -> Surface {
    let (d, place) = sample_d(family, rng);
    loop {
        let roots = [sample_root(place, rng), sample_root(place, rng), sample_root(place, rng)];
        if roots[0] != roots[1] && roots[0] != roots[2] && roots[1] != roots[2] {
            return Surface { d, roots, place };
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub contradictions: usize,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult { name, ..Default::default() }
    }

    fn record(&mut self, outcome: Result<bool>, what: impl FnOnce() -> String) {
        match outcome {
            Ok(true) => self.passed += 1,
            Ok(false) => {
                self.failed += 1;
                self.first_failure.get_or_insert_with(what);
            }
            Err(e) => {
                if matches!(e, ChowError::Contradiction { .. }) {
                    self.contradictions += 1;
                }
                self.failed += 1;
                self.first_failure.get_or_insert_with(|| format!("{}: {e}", what()));
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

fn order_agreement(s: &Surface) -> Result<bool> {
    Ok(local_report(&s.d, &s.roots, s.place, LocalOptions::default())?.consistent)
}

fn truncation_stability(s: &Surface) -> Result<bool> {
    let base = local_chow(&s.d, &s.roots, s.place, LocalOptions::default())?;
    let wide = local_chow(&s.d, &s.roots, s.place, LocalOptions { precision_buffer: 2 })?;
    Ok(base.subgroup == wide.subgroup)
}

fn equivariance(s: &Surface, rng: &mut ChaCha8Rng) -> Result<bool> {
    let mut sigma = [0usize, 1, 2];
    sigma.shuffle(rng);
    let base = local_chow(&s.d, &s.roots, s.place, LocalOptions::default())?;
    // permuted[i] = roots[sigma[i]], so coordinate sigma[i] of the original
    // moves to slot i
    let permuted = sigma.map(|i| s.roots[i].clone());
    let moved = local_chow(&s.d, &permuted, s.place, LocalOptions::default())?;
    let mut inverse = [0usize; 3];
    for (i, &si) in sigma.iter().enumerate() {
        inverse[si] = i;
    }
    Ok(moved.subgroup == base.subgroup.scatter(inverse))
}

fn without_normal_form(r: &LocalReport) -> LocalReport {
    LocalReport { normalized: None, ..r.clone() }
}

fn square_scaling(s: &Surface, rng: &mut ChaCha8Rng) -> Result<bool> {
    let base = local_chow(&s.d, &s.roots, s.place, LocalOptions::default())?;
    let scaled = &s.d * random_square(rng);
    let other = local_chow(&scaled, &s.roots, s.place, LocalOptions::default())?;
    Ok(without_normal_form(&base) == without_normal_form(&other) && base.normalized == other.normalized)
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let n: i64 = rng.random_range(-400..=400);
        if n != 0 {
            return ratio(n, rng.random_range(1..=50));
        }
    }
}

/// Runs every suite on `count` samples per suite.
pub fn run_checks(count: usize, seed: u64) -> Vec<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut suites = vec![
        SuiteResult::new("order_agreement"),
        SuiteResult::new("reciprocity"),
        SuiteResult::new("truncation_stability"),
        SuiteResult::new("equivariance"),
        SuiteResult::new("square_scaling"),
    ];
    for i in 0..count {
        let family = FAMILIES[i % FAMILIES.len()];
        let s = sample_surface(family, &mut rng);
        suites[0].record(order_agreement(&s), || s.to_string());
        suites[2].record(truncation_stability(&s), || s.to_string());
        suites[3].record(equivariance(&s, &mut rng), || s.to_string());
        suites[4].record(square_scaling(&s, &mut rng), || s.to_string());

        let (a, b) = (random_nonzero(&mut rng), random_nonzero(&mut rng));
        debug_assert!(!a.is_zero() && !b.is_zero());
        suites[1].record(
            reciprocity_check(&a, &b, crate::factor::DEFAULT_TRIAL_DIVISION_BOUND).map(|r| r.holds),
            || format!("a={} b={}", format_rational(&a), format_rational(&b)),
        );
    }
    suites
}
