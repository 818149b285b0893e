//! Redundancy avoidance: each local upper bound carries, for every
//! coordinate `j`, the set `Z^j(u)` of points of the extended set `N̂`
//! (generators plus the `p` dummy points) with `z_j = u_j` and
//! `z_{-j} < u_{-j}`. From these sets the threshold
//!
//! ```text
//! z^max_j(u) = max_{k != j} min { z_j : z ∈ Z^k(u) }
//! ```
//!
//! decides, without any comparison between candidates, whether the
//! projection `(z̄_j, u_{-j})` of a new point `z̄ < u` is a local upper bound
//! of the enlarged set: it is exactly when `z̄_j > z^max_j(u)`.
//!
//! Under general position (no shared coordinate values) every `Z^j(u)` is a
//! singleton and the boundary bookkeeping disappears; [`RaState::insert_sa`]
//! is that special case.

use std::collections::HashSet;
use std::sync::Arc;

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::point::{Point, Scalar, SearchInterval};
use crate::sets::{require_incomparable, StableSet, UpperBoundSet};
use crate::update::{BoundMaintainer, InsertStats, Update};

pub type DefinerSet = SmallVec<[Arc<Point>; 2]>;

/// A local upper bound with its defining points, one set per coordinate.
#[derive(Clone, Debug)]
pub struct BoundWithDefiners {
    bound: Point,
    definers: Vec<DefinerSet>,
}

impl BoundWithDefiners {
    pub fn new(bound: Point, definers: Vec<Vec<Arc<Point>>>) -> Result<Self> {
        if definers.len() != bound.dim() {
            return Err(Error::DimensionMismatch {
                expected: bound.dim(),
                found: definers.len(),
            });
        }
        for (j, set) in definers.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::EmptyDefiners { bound, coord: j });
            }
            if let Some(z) = set.iter().find(|z| z.dim() != bound.dim()) {
                return Err(Error::DimensionMismatch {
                    expected: bound.dim(),
                    found: z.dim(),
                });
            }
        }
        Ok(BoundWithDefiners {
            bound,
            definers: definers.into_iter().map(SmallVec::from_vec).collect(),
        })
    }

    pub fn bound(&self) -> &Point {
        &self.bound
    }

    /// `Z^j(u)`
    pub fn definers(&self, j: usize) -> &[Arc<Point>] {
        &self.definers[j]
    }

    /// `z^max_j(u)`.
    pub fn zmax(&self, j: usize) -> Result<Scalar> {
        zmax(self, j)
    }

    /// The whole vector `z^max(u)`.
    pub fn zmax_vector(&self) -> Result<Point> {
        (0..self.bound.dim()).map(|j| zmax(self, j)).collect::<Result<Vec<_>>>().map(Point::new)
    }

    #[inline]
    fn zmax_unchecked(&self, j: usize) -> Scalar {
        self.definers
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != j)
            .map(|(_, set)| set.iter().map(|z| z[j]).min().expect("definer set is never empty"))
            .max()
            .expect("dimension is at least two")
    }
}

/// `max_{k != j} min { z_j : z ∈ Z^k(u) }`.
pub fn zmax(b: &BoundWithDefiners, j: usize) -> Result<Scalar> {
    let p = b.bound.dim();
    if j >= p {
        return Err(Error::CoordinateOutOfRange { index: j, dim: p });
    }
    let mut best = None;
    for (k, set) in b.definers.iter().enumerate() {
        if k == j {
            continue;
        }
        let min = set.iter().map(|z| z[j]).min().ok_or_else(|| Error::EmptyDefiners {
            bound: b.bound.clone(),
            coord: k,
        })?;
        best = best.max(Some(min));
    }
    best.ok_or(Error::CoordinateOutOfRange { index: j, dim: p })
}

/// Avoidance-based maintainer.
#[derive(Clone, Debug)]
pub struct RaState {
    interval: SearchInterval,
    dummies: Vec<Arc<Point>>,
    bounds: Vec<BoundWithDefiners>,
    generators: Vec<Point>,
    /// Coordinate values already taken, per dimension.
    used: Vec<HashSet<Scalar>>,
    general_position: bool,
}

impl RaState {
    /// The state for `N = ∅`: the single bound `(M, ..., M)` defined by the
    /// dummy points. Inserts through [`BoundMaintainer::insert`] use the
    /// general procedure.
    pub fn new(interval: SearchInterval) -> Self {
        let dummies: Vec<Arc<Point>> = interval.dummies().into_iter().map(Arc::new).collect();
        let top = BoundWithDefiners {
            bound: interval.top(),
            definers: dummies.iter().map(|d| smallvec![d.clone()]).collect(),
        };
        RaState {
            interval,
            dummies,
            bounds: vec![top],
            generators: Vec::new(),
            used: vec![HashSet::new(); interval.dim()],
            general_position: false,
        }
    }

    /// Like [`new`](Self::new), but [`BoundMaintainer::insert`] dispatches to
    /// [`insert_sa`](Self::insert_sa).
    pub fn new_general_position(interval: SearchInterval) -> Self {
        RaState {
            general_position: true,
            ..Self::new(interval)
        }
    }

    pub fn interval(&self) -> &SearchInterval {
        &self.interval
    }

    pub fn bounds(&self) -> &[BoundWithDefiners] {
        &self.bounds
    }

    pub fn find(&self, u: &Point) -> Option<&BoundWithDefiners> {
        self.bounds.iter().find(|b| &b.bound == u)
    }

    pub fn dummies(&self) -> &[Arc<Point>] {
        &self.dummies
    }

    pub fn generator_set(&self) -> StableSet {
        let mut s = StableSet::new(self.interval);
        for z in &self.generators {
            s.push_unchecked(z.clone());
        }
        s
    }

    fn check_insert(&self, z: &Point) -> Result<()> {
        self.interval.check_point(z)?;
        require_incomparable(z, &self.generators)
    }

    fn record_generator(&mut self, z: Point) {
        for (j, &v) in z.iter().enumerate() {
            self.used[j].insert(v);
        }
        self.generators.push(z);
    }

    /// General-case insert.
    pub fn insert_general(&mut self, z: Point) -> Result<Update> {
        self.check_insert(&z)?;
        let zr = Arc::new(z.clone());
        let p = self.interval.dim();
        let mut stats = InsertStats::default();
        let mut containing = Vec::new();

        // Boundary phase first: z joins Z^j(u) of untouched bounds it lies on.
        for (idx, b) in self.bounds.iter_mut().enumerate() {
            stats.zone_tests += 1;
            if z.strictly_dominates(&b.bound) {
                containing.push(idx);
                continue;
            }
            for j in 0..p {
                if z[j] == b.bound[j] {
                    stats.zone_tests += 1;
                    if z.strictly_below_except(&b.bound, j) {
                        b.definers[j].push(zr.clone());
                        stats.boundary += 1;
                    }
                }
            }
        }

        let mut added = Vec::new();
        for &idx in &containing {
            let b = &self.bounds[idx];
            for j in 0..p {
                stats.decisions += 1;
                if z[j] > b.zmax_unchecked(j) {
                    let definers = (0..p)
                        .map(|k| {
                            if k == j {
                                smallvec![zr.clone()]
                            } else {
                                b.definers[k].iter().filter(|w| w[j] < z[j]).cloned().collect()
                            }
                        })
                        .collect();
                    added.push(BoundWithDefiners {
                        bound: b.bound.with_coord(j, z[j]),
                        definers,
                    });
                }
            }
        }
        Ok(self.finish(z, containing, added, stats))
    }

    /// Insert under general position: `z` shares no coordinate value with
    /// any generator, so every definer set stays a singleton and no bound
    /// has `z` on its boundary.
    pub fn insert_sa(&mut self, z: Point) -> Result<Update> {
        self.check_insert(&z)?;
        if let Some(coord) = (0..z.dim()).find(|&j| self.used[j].contains(&z[j])) {
            return Err(Error::GeneralPositionViolated { point: z, coord });
        }
        let zr = Arc::new(z.clone());
        let p = self.interval.dim();
        let mut stats = InsertStats::default();
        let mut containing = Vec::new();
        for (idx, b) in self.bounds.iter().enumerate() {
            stats.zone_tests += 1;
            if z.strictly_dominates(&b.bound) {
                containing.push(idx);
            }
        }

        let mut added = Vec::new();
        for &idx in &containing {
            let b = &self.bounds[idx];
            for j in 0..p {
                stats.decisions += 1;
                // singletons: z^max_j(u) = max_{k != j} z^k_j(u)
                if z[j] > b.zmax_unchecked(j) {
                    let mut definers = b.definers.clone();
                    definers[j] = smallvec![zr.clone()];
                    added.push(BoundWithDefiners {
                        bound: b.bound.with_coord(j, z[j]),
                        definers,
                    });
                }
            }
        }
        Ok(self.finish(z, containing, added, stats))
    }

    fn finish(
        &mut self,
        z: Point,
        containing: Vec<usize>,
        added: Vec<BoundWithDefiners>,
        mut stats: InsertStats,
    ) -> Update {
        stats.containing = containing.len();
        stats.candidates = self.interval.dim() * containing.len();
        stats.accepted = added.len();
        stats.discarded = stats.candidates - added.len();

        let mut removed = Vec::with_capacity(containing.len());
        for &idx in containing.iter().rev() {
            removed.push(self.bounds.swap_remove(idx).bound);
        }
        let added_points = added.iter().map(|b| b.bound.clone()).collect();
        self.bounds.extend(added);
        self.record_generator(z);
        Update {
            stats,
            removed,
            added: added_points,
        }
    }

    /// Recomputes every `Z^j(u)` from its definition over `N̂` and compares
    /// it with the stored set. Returns the first offending bound and
    /// coordinate.
    pub fn check_definers(&self) -> std::result::Result<(), (Point, usize)> {
        let extended: Vec<&Point> = self
            .dummies
            .iter()
            .map(|d| d.as_ref())
            .chain(self.generators.iter())
            .collect();
        for b in &self.bounds {
            for j in 0..self.interval.dim() {
                let mut expected: Vec<&Point> = extended
                    .iter()
                    .copied()
                    .filter(|z| z[j] == b.bound[j] && z.strictly_below_except(&b.bound, j))
                    .collect();
                let mut stored: Vec<&Point> = b.definers[j].iter().map(|z| z.as_ref()).collect();
                expected.sort();
                stored.sort();
                if expected.is_empty() || expected != stored {
                    return Err((b.bound.clone(), j));
                }
            }
        }
        Ok(())
    }
}

impl BoundMaintainer for RaState {
    fn interval(&self) -> &SearchInterval {
        &self.interval
    }

    fn insert(&mut self, z: Point) -> Result<Update> {
        if self.general_position {
            self.insert_sa(z)
        } else {
            self.insert_general(z)
        }
    }

    fn upper_bounds(&self) -> UpperBoundSet {
        UpperBoundSet::from_bounds_unchecked(self.interval, self.bounds.iter().map(|b| b.bound.clone()).collect())
    }

    fn bound_count(&self) -> usize {
        self.bounds.len()
    }

    fn generators(&self) -> &[Point] {
        &self.generators
    }

    fn max_definer_set(&self) -> Option<usize> {
        Some(
            self.bounds
                .iter()
                .flat_map(|b| b.definers.iter().map(|s| s.len()))
                .max()
                .unwrap_or(0),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const M: i64 = 10;
    #[allow(non_upper_case_globals)]
    const m: i64 = 0;

    fn interval() -> SearchInterval {
        SearchInterval::new(3, m, M).unwrap()
    }

    fn canon(s: &RaState) -> Vec<Point> {
        s.upper_bounds().canonical()
    }

    fn pts(v: &[[i64; 3]]) -> Vec<Point> {
        let mut out: Vec<Point> = v.iter().map(|&c| Point::from(c)).collect();
        out.sort();
        out
    }

    fn definer_points(b: &BoundWithDefiners, j: usize) -> Vec<Point> {
        let mut v: Vec<Point> = b.definers(j).iter().map(|z| (**z).clone()).collect();
        v.sort();
        v
    }

    #[test]
    fn initial_state_is_the_top_bound() {
        let s = RaState::new(interval());
        let top = &s.bounds()[0];
        assert_eq!(top.bound(), &Point::from([M, M, M]));
        assert_eq!(top.zmax_vector().unwrap(), Point::from([m, m, m]));
        s.check_definers().unwrap();
    }

    #[test]
    fn single_insert_assigns_defining_points() {
        for sa in [false, true] {
            let mut s = RaState::new(interval());
            let z1 = Point::from([3, 5, 7]);
            if sa {
                s.insert_sa(z1.clone()).unwrap();
            } else {
                s.insert_general(z1.clone()).unwrap();
            }
            assert_eq!(canon(&s), pts(&[[3, M, M], [M, 5, M], [M, M, 7]]));
            let u1 = s.find(&Point::from([3, M, M])).unwrap();
            assert_eq!(definer_points(u1, 0), vec![z1.clone()]);
            assert_eq!(definer_points(u1, 1), vec![interval().dummy(1)]);
            assert_eq!(definer_points(u1, 2), vec![interval().dummy(2)]);
            assert_eq!(u1.zmax_vector().unwrap(), Point::from([m, 5, 7]));
            let u2 = s.find(&Point::from([M, 5, M])).unwrap();
            assert_eq!(u2.zmax_vector().unwrap(), Point::from([3, m, 7]));
            let u3 = s.find(&Point::from([M, M, 7])).unwrap();
            assert_eq!(u3.zmax_vector().unwrap(), Point::from([3, 5, m]));
        }
    }

    #[test]
    fn second_and_third_inserts_follow_thresholds() {
        for sa in [false, true] {
            let mut s = if sa {
                RaState::new_general_position(interval())
            } else {
                RaState::new(interval())
            };
            s.insert(Point::from([3, 5, 7])).unwrap();
            let up = s.insert(Point::from([6, 2, 4])).unwrap();
            assert_eq!(up.stats.containing, 2);
            assert_eq!(up.stats.decisions, 6);
            assert_eq!(up.stats.accepted, 4);
            assert_eq!(up.stats.filter_tests, 0);
            assert_eq!(
                canon(&s),
                pts(&[[3, M, M], [6, 5, M], [M, 2, M], [6, M, 7], [M, M, 4]])
            );
            let u21 = s.find(&Point::from([6, 5, M])).unwrap();
            assert_eq!(u21.zmax_vector().unwrap(), Point::from([3, 2, 7]));

            s.insert(Point::from([4, 4, 2])).unwrap();
            let u212 = s.find(&Point::from([6, 4, M])).unwrap();
            assert_eq!(u212.zmax_vector().unwrap(), Point::from([4, 2, 4]));
            s.check_definers().unwrap();
        }
    }

    #[test]
    fn shared_coordinates_accumulate_definers() {
        let mut s = RaState::new(interval());
        let n = [[2, 7, 7], [5, 7, 5], [8, 7, 3]];
        for z in n {
            s.insert(Point::from(z)).unwrap();
        }
        s.check_definers().unwrap();
        let u = s.find(&Point::from([M, 7, M])).expect("(M,7,M) is a bound");
        assert_eq!(definer_points(u, 1), pts(&n));
        assert_eq!(u.zmax_vector().unwrap(), Point::from([2, m, 3]));

        s.insert(Point::from([4, 3, 7])).unwrap();
        s.check_definers().unwrap();
        let u2 = s.find(&Point::from([M, 7, 7])).expect("(M,7,7) is a bound");
        // only the generators below 7 on coordinate 3 still bound this facet
        assert_eq!(definer_points(u2, 1), pts(&[[5, 7, 5], [8, 7, 3]]));
    }

    #[test]
    fn zmax_from_explicit_definers() {
        let iv = interval();
        let d: Vec<Arc<Point>> = iv.dummies().into_iter().map(Arc::new).collect();
        let n: Vec<Arc<Point>> = [[2, 7, 7], [5, 7, 5], [8, 7, 3]].iter().map(|&c| Arc::new(Point::from(c))).collect();
        let b = BoundWithDefiners::new(Point::from([M, 7, M]), vec![vec![d[0].clone()], n, vec![d[2].clone()]]).unwrap();
        assert_eq!(b.zmax_vector().unwrap(), Point::from([2, m, 3]));

        let b = BoundWithDefiners::new(
            Point::from([6, 5, M]),
            vec![
                vec![Arc::new(Point::from([6, 2, 4]))],
                vec![Arc::new(Point::from([3, 5, 7]))],
                vec![d[2].clone()],
            ],
        )
        .unwrap();
        assert_eq!(b.zmax_vector().unwrap(), Point::from([3, 2, 7]));
        assert!(matches!(zmax(&b, 3), Err(Error::CoordinateOutOfRange { .. })));
    }

    #[test]
    fn empty_definer_set_is_rejected() {
        let err = BoundWithDefiners::new(Point::from([M, M, M]), vec![vec![], vec![], vec![]]);
        assert!(matches!(err, Err(Error::EmptyDefiners { coord: 0, .. })));
    }

    #[test]
    fn point_in_no_zone_only_grows_generators() {
        let mut s = RaState::new(interval());
        s.insert(Point::from([3, 5, 7])).unwrap();
        s.bounds.retain(|b| b.bound == Point::from([3, M, M]));
        let up = s.insert(Point::from([5, 5, 5])).unwrap();
        assert_eq!(up.stats.containing, 0);
        assert_eq!(canon(&s), pts(&[[3, M, M]]));
        assert_eq!(s.generators().len(), 2);
    }

    #[test]
    fn general_position_violation_is_reported() {
        let mut s = RaState::new(interval());
        s.insert_sa(Point::from([3, 5, 7])).unwrap();
        assert!(matches!(
            s.insert_sa(Point::from([6, 5, 4])),
            Err(Error::GeneralPositionViolated { coord: 1, .. })
        ));
        assert!(matches!(s.insert_sa(Point::from([3, 5, 7])), Err(Error::Dominated { .. })));
    }
}
