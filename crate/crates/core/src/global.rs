//! The global group over Q as the kernel of the sum of the local groups.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{ChowError, Result};
use crate::factor::{is_prime_u64, prime_divisors, trial_division_bound};
use crate::local::{check_distinct, f2_rank, local_chow, F2Triple, LocalOptions, LocalReport, Subgroup3};
use crate::padic::{format_rational, hilbert_symbol, is_rational_square, Place, Rational, F2};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalOptions {
    pub precision_buffer: u32,
    pub trial_division_bound: u64,
    /// How many odd primes outside the candidate set to spot-check.
    pub sample_count: usize,
    /// Spot-checked primes are drawn below this bound.
    pub sample_limit: u64,
    pub seed: u64,
}

impl Default for GlobalOptions {
    fn default() -> Self {
        GlobalOptions {
            precision_buffer: 0,
            trial_division_bound: trial_division_bound(),
            sample_count: 20,
            sample_limit: 2000,
            seed: 0,
        }
    }
}

/// Places at which the local group can be nontrivial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidates {
    pub places: Vec<Place>,
    /// `d` is a square in Q, so every local group vanishes.
    pub global_square: bool,
}

fn odd_prime_divisors(r: &Rational, bound: u64, into: &mut BTreeSet<u64>) -> Result<()> {
    for n in [r.numer(), r.denom()] {
        let m: BigUint = n.magnitude().clone();
        if m.is_zero() {
            continue;
        }
        into.extend(prime_divisors(&m, bound)?.into_iter().filter(|&p| p != 2));
    }
    Ok(())
}

/// `{infinity, 2}` plus the odd primes dividing `d` or a root difference.
/// At any other odd prime `d` is a unit and the roots stay distinct mod p,
/// which forces the trivial local group.
pub fn candidate_places(d: &Rational, roots: &[Rational; 3], bound: u64) -> Result<Candidates> {
    if d.is_zero() {
        return Err(ChowError::Domain("d must be nonzero".into()));
    }
    check_distinct(roots)?;
    if is_rational_square(d) {
        return Ok(Candidates { places: vec![], global_square: true });
    }
    let mut primes = BTreeSet::new();
    odd_prime_divisors(d, bound, &mut primes)?;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        odd_prime_divisors(&(&roots[i] - &roots[j]), bound, &mut primes)?;
    }
    let mut places = vec![Place::Real, Place::Prime(2)];
    places.extend(primes.into_iter().map(Place::Prime));
    Ok(Candidates { places, global_square: false })
}

/// `sum dim G_v - rank(union of bases)`: the dimension of the kernel of
/// `(g_v) -> sum g_v` from the direct sum of the local groups to `(Z/2Z)^3`.
pub fn kernel_dimension<B: AsRef<[F2Triple]>>(bases: &[B]) -> Result<usize> {
    let mut total = 0;
    for b in bases {
        total += Subgroup3::from_basis(b.as_ref())?.dim();
    }
    let rank = f2_rank(bases.iter().flat_map(|b| b.as_ref().iter().copied()));
    Ok(total - rank)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaceOrder {
    pub place: Place,
    pub order: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalReport {
    #[serde(serialize_with = "crate::local::ser_rational_pub")]
    pub d: Rational,
    pub roots: [String; 3],
    pub global_square: bool,
    /// Local reports at the places with a nontrivial local group.
    pub places: Vec<LocalReport>,
    /// Every candidate place with its local order.
    pub checked: Vec<PlaceOrder>,
    /// Odd primes outside the candidate set verified to have trivial local group.
    pub sampled_primes: Vec<u64>,
    pub kernel_dim: usize,
    pub group: String,
}

fn sample_primes(excluded: &[Place], opts: &GlobalOptions) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut picked = (3..opts.sample_limit)
        .filter(|&p| is_prime_u64(p) && !excluded.contains(&Place::Prime(p)))
        .choose_multiple(&mut rng, opts.sample_count);
    picked.sort_unstable();
    picked
}

fn run_locals(d: &Rational, roots: &[Rational; 3], places: &[Place], opts: LocalOptions) -> Result<Vec<LocalReport>> {
    std::thread::scope(|s| {
        let handles: Vec<_> = places
            .iter()
            .map(|&place| s.spawn(move || local_chow(d, roots, place, opts)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("local computation panicked"))
            .collect()
    })
}

pub fn global_chow(d: &Rational, roots: &[Rational; 3], opts: &GlobalOptions) -> Result<GlobalReport> {
    let candidates = candidate_places(d, roots, opts.trial_division_bound)?;
    let mut report = GlobalReport {
        d: d.clone(),
        roots: roots.clone().map(|r| format_rational(&r)),
        global_square: candidates.global_square,
        places: vec![],
        checked: vec![],
        sampled_primes: vec![],
        kernel_dim: 0,
        group: "(Z/2)^0".into(),
    };
    if candidates.global_square {
        return Ok(report);
    }
    let local_opts = LocalOptions { precision_buffer: opts.precision_buffer };

    let sampled = sample_primes(&candidates.places, opts);
    let sampled_places: Vec<Place> = sampled.iter().map(|&p| Place::Prime(p)).collect();
    for local in run_locals(d, roots, &sampled_places, local_opts)? {
        if !local.is_trivial() {
            return Err(ChowError::Contradiction {
                place: local.place.to_string(),
                case: "outside the candidate places".into(),
                predicted: 1,
                enumerated: local.order(),
            });
        }
    }
    report.sampled_primes = sampled;

    let locals = run_locals(d, roots, &candidates.places, local_opts)?;
    report.checked = locals
        .iter()
        .map(|l| PlaceOrder { place: l.place, order: l.order() })
        .collect();
    report.places = locals.into_iter().filter(|l| !l.is_trivial()).collect();
    let bases: Vec<&[F2Triple]> = report.places.iter().map(|l| l.subgroup.basis()).collect();
    report.kernel_dim = kernel_dimension(&bases)?;
    report.group = format!("(Z/2)^{}", report.kernel_dim);
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reciprocity {
    pub symbols: Vec<(Place, F2)>,
    pub sum: F2,
    pub holds: bool,
}

/// Sums `(a, b)_v` over the real place, 2, and the odd primes dividing `a`
/// or `b`; every other place contributes 0.
pub fn reciprocity_check(a: &Rational, b: &Rational, bound: u64) -> Result<Reciprocity> {
    if a.is_zero() || b.is_zero() {
        return Err(ChowError::Domain("reciprocity check needs nonzero arguments".into()));
    }
    let mut primes = BTreeSet::new();
    odd_prime_divisors(a, bound, &mut primes)?;
    odd_prime_divisors(b, bound, &mut primes)?;
    let places = [Place::Real, Place::Prime(2)]
        .into_iter()
        .chain(primes.into_iter().map(Place::Prime));
    let symbols = places
        .map(|v| Ok((v, hilbert_symbol(a, b, v)?)))
        .collect::<Result<Vec<_>>>()?;
    let sum: F2 = symbols.iter().map(|(_, s)| *s).sum();
    Ok(Reciprocity { symbols, sum, holds: sum.is_zero() })
}
