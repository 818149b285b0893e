//! Redundancy elimination: every zone containing the new point is split
//! into `p` candidate zones, then candidates whose apex is dominated by
//! another apex are filtered out.
//!
//! Two filtering scopes are provided. [`FilterScope::PerCoordinate`] is the
//! default: a candidate `(z_j, u_{-j})` is only ever compared with the other
//! candidates sharing coordinate `j` and with the bounds `u'` of `B_j`
//! (those with `z_j = u'_j` and `z_{-j} < u'_{-j}`), and each comparison
//! only looks at the `p - 1` coordinates other than `j`.
//! [`FilterScope::Full`] compares every candidate against all candidates and
//! all boundary bounds; it produces the same set and exists to check that.

use crate::error::Result;
use crate::point::{Point, SearchInterval};
use crate::sets::{require_incomparable, StableSet, UpperBoundSet};
use crate::update::{BoundMaintainer, InsertStats, Update};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FilterScope {
    #[default]
    PerCoordinate,
    Full,
}

/// Intermediate sets of one elimination step, as indices into the bound
/// list they were computed from.
#[derive(Clone, Debug)]
pub struct ReWorkspace {
    /// Bounds `u` with `z < u`.
    pub containing: Vec<usize>,
    /// `boundary[j]`: bounds `u` with `z_j = u_j` and `z_{-j} < u_{-j}`.
    pub boundary: Vec<Vec<usize>>,
    /// `projections[j]`: `(z_j, u_{-j})` for each `u` of `containing`, in
    /// the same order.
    pub projections: Vec<Vec<Point>>,
}

impl ReWorkspace {
    /// Scans `bounds` once to collect `A`, the `B_j` and the projections.
    pub fn build(bounds: &[Point], z: &Point, stats: &mut InsertStats) -> Self {
        let p = z.dim();
        let mut containing = Vec::new();
        let mut boundary = vec![Vec::new(); p];
        for (idx, u) in bounds.iter().enumerate() {
            stats.zone_tests += 1;
            if z.strictly_dominates(u) {
                containing.push(idx);
                continue;
            }
            for j in 0..p {
                if z[j] == u[j] {
                    stats.zone_tests += 1;
                    if z.strictly_below_except(u, j) {
                        boundary[j].push(idx);
                    }
                }
            }
        }
        let projections = (0..p)
            .map(|j| containing.iter().map(|&i| bounds[i].with_coord(j, z[j])).collect())
            .collect();
        stats.containing = containing.len();
        stats.boundary = boundary.iter().map(Vec::len).sum();
        stats.candidates = p * containing.len();
        ReWorkspace {
            containing,
            boundary,
            projections,
        }
    }

    /// Surviving projections, filtering each `P_j` against `P_j ∪ B_j` on
    /// the coordinates other than `j`.
    fn filter_per_coordinate(&self, bounds: &[Point], stats: &mut InsertStats) -> Vec<Point> {
        let mut kept = Vec::new();
        for (j, cands) in self.projections.iter().enumerate() {
            'cand: for (ci, c) in cands.iter().enumerate() {
                for (oi, other) in cands.iter().enumerate() {
                    if oi == ci {
                        continue;
                    }
                    stats.filter_tests += 1;
                    if c.weakly_below_except(other, j) && (c != other || oi < ci) {
                        continue 'cand;
                    }
                }
                for &bi in &self.boundary[j] {
                    stats.filter_tests += 1;
                    if c.weakly_below_except(&bounds[bi], j) {
                        continue 'cand;
                    }
                }
                kept.push(c.clone());
            }
        }
        kept
    }

    /// Surviving projections, filtering all of `P` against `P ∪ B` with
    /// full dominance tests.
    fn filter_full(&self, bounds: &[Point], z: &Point, stats: &mut InsertStats) -> Vec<Point> {
        let all: Vec<&Point> = self.projections.iter().flatten().collect();
        let in_a = |idx: usize| self.containing.binary_search(&idx).is_ok();
        let full_boundary: Vec<&Point> = bounds
            .iter()
            .enumerate()
            .filter(|&(idx, u)| !in_a(idx) && z.dominates(u))
            .map(|(_, u)| u)
            .collect();
        stats.zone_tests += bounds.len() as u64;
        let mut kept = Vec::new();
        'cand: for (ci, c) in all.iter().enumerate() {
            for (oi, other) in all.iter().enumerate() {
                if oi == ci {
                    continue;
                }
                stats.filter_tests += 1;
                if c.dominates(other) || (c == other && oi < ci) {
                    continue 'cand;
                }
            }
            for u in &full_boundary {
                stats.filter_tests += 1;
                if c.dominates(u) {
                    continue 'cand;
                }
            }
            kept.push((*c).clone());
        }
        kept
    }
}

/// Replaces the zones of `bounds` containing `z` by the non-redundant
/// projections of `z`.
///
/// The caller guarantees that `z` is incomparable with the stable set that
/// `bounds` describes; only membership in the search interval is checked.
pub fn re_insert(bounds: &mut UpperBoundSet, z: &Point) -> Result<Update> {
    re_insert_with(bounds, z, FilterScope::PerCoordinate)
}

pub fn re_insert_with(bounds: &mut UpperBoundSet, z: &Point, scope: FilterScope) -> Result<Update> {
    bounds.interval().check_point(z)?;
    let mut stats = InsertStats::default();
    let ws = ReWorkspace::build(bounds.bounds(), z, &mut stats);
    let kept = match scope {
        FilterScope::PerCoordinate => ws.filter_per_coordinate(bounds.bounds(), &mut stats),
        FilterScope::Full => ws.filter_full(bounds.bounds(), z, &mut stats),
    };
    stats.decisions = stats.candidates;
    stats.accepted = kept.len();
    stats.discarded = stats.candidates - kept.len();

    let list = bounds.bounds_mut();
    let mut removed = Vec::with_capacity(ws.containing.len());
    // descending so swap_remove does not disturb indices still to visit
    for &idx in ws.containing.iter().rev() {
        removed.push(list.swap_remove(idx));
    }
    list.extend(kept.iter().cloned());
    Ok(Update {
        stats,
        removed,
        added: kept,
    })
}

/// `U(N)` obtained by inserting the points of `set` one after another into
/// `{(M, ..., M)}`.
pub fn build_from_scratch_re(set: &StableSet) -> Result<UpperBoundSet> {
    let mut bounds = UpperBoundSet::initial(*set.interval());
    for z in set.iter() {
        re_insert(&mut bounds, z)?;
    }
    Ok(bounds)
}

/// Elimination-based maintainer that also tracks its generators, so it can
/// enforce the incomparability precondition.
#[derive(Clone, Debug)]
pub struct ReState {
    bounds: UpperBoundSet,
    generators: StableSet,
    scope: FilterScope,
}

impl ReState {
    pub fn new(interval: SearchInterval) -> Self {
        Self::with_scope(interval, FilterScope::PerCoordinate)
    }

    pub fn with_scope(interval: SearchInterval, scope: FilterScope) -> Self {
        ReState {
            bounds: UpperBoundSet::initial(interval),
            generators: StableSet::new(interval),
            scope,
        }
    }

    pub fn bounds(&self) -> &UpperBoundSet {
        &self.bounds
    }

    pub fn generator_set(&self) -> &StableSet {
        &self.generators
    }
}

impl BoundMaintainer for ReState {
    fn interval(&self) -> &SearchInterval {
        self.bounds.interval()
    }

    fn insert(&mut self, z: Point) -> Result<Update> {
        self.bounds.interval().check_point(&z)?;
        require_incomparable(&z, self.generators.iter())?;
        let update = re_insert_with(&mut self.bounds, &z, self.scope)?;
        self.generators.push_unchecked(z);
        Ok(update)
    }

    fn upper_bounds(&self) -> UpperBoundSet {
        self.bounds.clone()
    }

    fn bound_count(&self) -> usize {
        self.bounds.len()
    }

    fn generators(&self) -> &[Point] {
        self.generators.points()
    }
}
