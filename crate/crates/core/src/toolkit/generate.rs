//! Random stable sets by rejection sampling.
//!
//! Points are drawn uniformly from `[1, K]^p` and a draw is rejected when it
//! weakly dominates or is weakly dominated by an accepted point. In general
//! position mode the values of each coordinate are drawn without
//! replacement: a value is consumed only when its point is accepted, so the
//! values of a rejected draw go back to the pool. Because acceptance depends
//! on earlier points, the accepted sequence is shuffled at the end.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::point::{Point, Scalar, SearchInterval};
use crate::sets::StableSet;

/// Consecutive rejections allowed per requested point.
pub const REJECTION_CAP_FACTOR: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenConfig {
    /// Number of objectives `p`.
    pub dim: usize,
    /// Number of points `n`.
    pub count: usize,
    /// Coordinates are drawn from `[1, K]`.
    pub range: Scalar,
    /// No two points share a value in any coordinate.
    pub general_position: bool,
    pub seed: u64,
}

impl GenConfig {
    /// The profile with many repeated coordinate values: `p = 6`,
    /// `n = 10000`, `K = 10`.
    pub fn pathological(seed: u64) -> Self {
        GenConfig {
            dim: 6,
            count: 10_000,
            range: 10,
            general_position: false,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim < 2 {
            return Err(Error::InvalidConfig(format!("p = {} must be at least 2", self.dim)));
        }
        if self.range < 1 {
            return Err(Error::InvalidConfig(format!("K = {} must be at least 1", self.range)));
        }
        if self.general_position && (self.range as u128) < self.count as u128 {
            return Err(Error::InvalidConfig(format!(
                "general position needs K >= n, got K = {} and n = {}",
                self.range, self.count
            )));
        }
        Ok(())
    }

    /// `(0, K + 1)^p`, which holds every generated point strictly inside.
    pub fn interval(&self) -> Result<SearchInterval> {
        SearchInterval::new(self.dim, 0, self.range + 1)
    }
}

pub fn generate_stable_set(cfg: &GenConfig) -> Result<StableSet> {
    cfg.validate()?;
    let interval = cfg.interval()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut accepted: Vec<Point> = Vec::with_capacity(cfg.count);
    let mut used: Vec<HashSet<Scalar>> = vec![HashSet::new(); cfg.dim];
    let cap = REJECTION_CAP_FACTOR * cfg.count.max(1) as u64;
    let mut rejections = 0u64;

    while accepted.len() < cfg.count {
        let coords: Vec<Scalar> = (0..cfg.dim)
            .map(|j| loop {
                let v = rng.gen_range(1..=cfg.range);
                if !cfg.general_position || !used[j].contains(&v) {
                    break v;
                }
            })
            .collect();
        let z = Point::new(coords);
        if accepted.iter().any(|a| a.weakly_dominates(&z) || z.weakly_dominates(a)) {
            rejections += 1;
            if rejections >= cap {
                return Err(Error::RejectionCap {
                    rejections,
                    accepted: accepted.len(),
                    target: cfg.count,
                });
            }
            continue;
        }
        rejections = 0;
        if cfg.general_position {
            for (j, &v) in z.iter().enumerate() {
                used[j].insert(v);
            }
        }
        accepted.push(z);
    }
    accepted.shuffle(&mut rng);

    let mut set = StableSet::new(interval);
    for z in accepted {
        set.push_unchecked(z);
    }
    Ok(set)
}
