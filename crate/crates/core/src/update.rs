//! What both update strategies have in common: per-insert statistics, the
//! insert delta, and a trait object over the two strategies.

use std::fmt;
use std::str::FromStr;

use crate::avoidance::RaState;
use crate::elimination::ReState;
use crate::error::Result;
use crate::point::{Point, SearchInterval};
use crate::sets::UpperBoundSet;

/// Counters recorded by a single insert.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq)]
pub struct InsertStats {
    /// `|A|`, the number of zones strictly containing the new point.
    pub containing: usize,
    /// `Σ_j |B_j|`, bounds whose zone boundary carries the new point.
    pub boundary: usize,
    /// Projections of the new point onto the bounds of `A`, i.e. `p·|A|`.
    pub candidates: usize,
    /// Projections that became local upper bounds.
    pub accepted: usize,
    /// Projections filtered out (elimination) or rejected by the `z^max`
    /// test (avoidance).
    pub discarded: usize,
    /// Accept/reject decisions taken on projections.
    pub decisions: usize,
    /// Dominance tests spent locating `A` and `B`.
    pub zone_tests: u64,
    /// Dominance tests spent filtering candidates against each other and
    /// against `B`. Always zero for avoidance.
    pub filter_tests: u64,
}

impl InsertStats {
    pub fn dominance_tests(&self) -> u64 {
        self.zone_tests + self.filter_tests
    }
}

/// Result of one insert: the counters and the bounds that left and entered
/// the set.
#[derive(Clone, Debug, Default)]
pub struct Update {
    pub stats: InsertStats,
    pub removed: Vec<Point>,
    pub added: Vec<Point>,
}

/// An upper bound set kept in sync with a growing stable set.
pub trait BoundMaintainer {
    fn interval(&self) -> &SearchInterval;

    /// Adds a point that is incomparable with every generator so far.
    fn insert(&mut self, z: Point) -> Result<Update>;

    fn upper_bounds(&self) -> UpperBoundSet;

    fn bound_count(&self) -> usize;

    /// The points inserted so far, in insertion order.
    fn generators(&self) -> &[Point];

    /// Largest defining-point set over all bounds and coordinates, for
    /// strategies that track them.
    fn max_definer_set(&self) -> Option<usize> {
        None
    }
}

/// Update procedure selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Redundancy elimination with per-coordinate filtering.
    Re,
    /// Redundancy avoidance, general case.
    Ra,
    /// Redundancy avoidance assuming no two points share a coordinate value.
    RaSa,
}

impl Strategy {
    pub fn maintainer(self, interval: SearchInterval) -> Box<dyn BoundMaintainer + Send> {
        match self {
            Strategy::Re => Box::new(ReState::new(interval)),
            Strategy::Ra => Box::new(RaState::new(interval)),
            Strategy::RaSa => Box::new(RaState::new_general_position(interval)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Re => "re",
            Strategy::Ra => "ra",
            Strategy::RaSa => "ra-sa",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "re" => Ok(Strategy::Re),
            "ra" => Ok(Strategy::Ra),
            "ra-sa" => Ok(Strategy::RaSa),
            other => Err(format!("unknown strategy {other:?} (expected re, ra or ra-sa)")),
        }
    }
}

/// Folds `points` into a fresh maintainer and returns the final bounds.
pub fn build(strategy: Strategy, interval: SearchInterval, points: &[Point]) -> Result<UpperBoundSet> {
    let mut m = strategy.maintainer(interval);
    for z in points {
        m.insert(z.clone())?;
    }
    Ok(m.upper_bounds())
}
