//! Brute-force upper bound sets and a checker for claimed ones.
//!
//! The oracle never looks at insertion order. Local upper bounds are the
//! maximal points of the closed interval that no generator strictly
//! dominates, and each of their coordinates is either `M` or a coordinate
//! of some generator. So it enumerates the grid
//! `∏_j ({z_j : z ∈ N} ∪ {M})`, keeps the candidates that no generator
//! strictly dominates, and returns those that stay maximal.
//!
//! Survivors form a down-closed subset of the grid, so a survivor is
//! maximal exactly when moving any single coordinate up to the next grid
//! value produces a non-survivor. That test replaces a pairwise comparison
//! of all survivors, whose count can be in the millions.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::point::{Point, Scalar};
use crate::sets::{StableSet, UpperBoundSet};

/// Default cap on the number of grid candidates.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "SEARCH_REGION_ORACLE_BUDGET";

/// The candidate budget, from [`BUDGET_ENV`] when set to a valid number.
pub fn budget_from_env() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// Sorted distinct values per coordinate, each list ending with `M`.
fn grid_axes(set: &StableSet) -> Vec<Vec<Scalar>> {
    let upper = set.interval().upper();
    (0..set.interval().dim())
        .map(|j| {
            let mut axis: Vec<Scalar> = set.iter().map(|z| z[j]).collect();
            axis.push(upper);
            axis.sort_unstable();
            axis.dedup();
            axis
        })
        .collect()
}

fn strictly_dominated(u: &[Scalar], set: &StableSet) -> bool {
    set.iter().any(|z| z.iter().zip(u).all(|(a, b)| a < b))
}

/// Computes `U(N)` by exhaustive grid enumeration.
pub fn oracle_upper_bounds(set: &StableSet, budget: u64) -> Result<UpperBoundSet> {
    let axes = grid_axes(set);
    let needed = axes.iter().map(|a| a.len() as u128).product::<u128>();
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }

    let p = axes.len();
    let mut idx = vec![0usize; p];
    let mut cand: Vec<Scalar> = axes.iter().map(|a| a[0]).collect();
    let mut out = Vec::new();
    loop {
        if !strictly_dominated(&cand, set) {
            let maximal = (0..p).all(|j| {
                let Some(&next) = axes[j].get(idx[j] + 1) else {
                    return true;
                };
                let saved = cand[j];
                cand[j] = next;
                let blocked = strictly_dominated(&cand, set);
                cand[j] = saved;
                blocked
            });
            if maximal {
                out.push(Point::new(cand.clone()));
            }
        }
        // odometer step
        let mut j = 0;
        loop {
            if j == p {
                out.sort_unstable();
                return UpperBoundSet::from_bounds(*set.interval(), out);
            }
            idx[j] += 1;
            if idx[j] < axes[j].len() {
                cand[j] = axes[j][idx[j]];
                break;
            }
            idx[j] = 0;
            cand[j] = axes[j][0];
            j += 1;
        }
    }
}

/// Why a claimed upper bound set was rejected.
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    /// A bound outside the closed interval or of the wrong dimension.
    OutOfRange { bound: Point },
    /// The same bound listed twice.
    Duplicate { bound: Point },
    /// `lower ≤ upper` for two bounds, so the zone of `lower` is redundant.
    Redundant { lower: Point, upper: Point },
    /// A generator lies strictly below a bound, so its zone leaves the
    /// search region.
    StrictlyDominated { bound: Point, generator: Point },
    /// A sampled point of the search region below no bound.
    Uncovered { witness: Vec<f64> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange { bound } => write!(f, "bound {bound} lies outside the interval"),
            Violation::Duplicate { bound } => write!(f, "bound {bound} is listed twice"),
            Violation::Redundant { lower, upper } => {
                write!(f, "bound {lower} is dominated by bound {upper}")
            }
            Violation::StrictlyDominated { bound, generator } => {
                write!(f, "generator {generator} strictly dominates bound {bound}")
            }
            Violation::Uncovered { witness } => {
                write!(f, "search-region point {witness:?} lies in no zone")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Pass,
    Fail(Violation),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(v) => write!(f, "fail: {v}"),
        }
    }
}

/// Checks that `bounds` is the upper bound set of `set`.
///
/// Pairwise non-redundancy and "no generator strictly below a bound" are
/// checked exhaustively. Coverage of the search region is checked on
/// `samples` random points: half drawn uniformly from `Z`, half placed just
/// below a random grid corner, which is where a missing zone shows up.
pub fn verify_upper_bound_set(bounds: &UpperBoundSet, set: &StableSet, samples: usize, seed: u64) -> Verdict {
    let iv = *set.interval();
    for u in bounds.iter() {
        if iv.check_bound(u).is_err() {
            return Verdict::Fail(Violation::OutOfRange { bound: u.clone() });
        }
    }
    let list = bounds.bounds();
    for (i, a) in list.iter().enumerate() {
        for (k, b) in list.iter().enumerate() {
            if i != k && a == b {
                return Verdict::Fail(Violation::Duplicate { bound: a.clone() });
            }
            if a.dominates(b) {
                return Verdict::Fail(Violation::Redundant {
                    lower: a.clone(),
                    upper: b.clone(),
                });
            }
        }
    }
    for u in list {
        if let Some(z) = set.iter().find(|z| z.strictly_dominates(u)) {
            return Verdict::Fail(Violation::StrictlyDominated {
                bound: u.clone(),
                generator: z.clone(),
            });
        }
    }

    let axes = grid_axes(set);
    let (lo, hi) = (iv.lower() as f64, iv.upper() as f64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = vec![0.0f64; iv.dim()];
    for s in 0..samples {
        for (j, xj) in x.iter_mut().enumerate() {
            *xj = if s % 2 == 0 {
                let v = rng.gen_range(lo..hi);
                if v <= lo { (lo + hi) / 2.0 } else { v }
            } else {
                let corner = axes[j][rng.gen_range(0..axes[j].len())] as f64;
                corner - rng.gen_range(0.001..0.999)
            };
        }
        let in_region = !set.iter().any(|z| z.iter().zip(&x).all(|(&a, &b)| a as f64 <= b));
        if !in_region {
            continue;
        }
        let covered = list.iter().any(|u| x.iter().zip(u.iter()).all(|(&a, &b)| a < b as f64));
        if !covered {
            return Verdict::Fail(Violation::Uncovered { witness: x });
        }
    }
    Verdict::Pass
}
