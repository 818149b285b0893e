//! Enumeration of a nondominated set by repeatedly exploring search zones.
//!
//! Each probe asks an [`Explorer`] for a point strictly below the apex of an
//! active zone. A point found is added to the stable set and the bound set
//! is updated; an empty zone is retired. Every probe either finds a new
//! nondominated point or retires a bound of the final upper bound set, so
//! the number of probes is `|N| + |U(N)|`.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::point::{Point, SearchInterval};
use crate::sets::{classify_points, Relation, StableSet, UpperBoundSet};
use crate::update::Strategy;

/// Zone exploration: returns a point `z < apex` of the feasible set that is
/// nondominated among such points, or `None` when the zone is empty.
pub trait Explorer {
    fn explore(&mut self, apex: &Point) -> Option<Point>;
}

/// How a finite explorer encodes `z < u`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ZoneTest {
    /// `z_j < u_j` for every `j`.
    #[default]
    Strict,
    /// `z_j <= u_j - 1` for every `j`, the same set on integer points.
    ShiftedWeak,
}

/// Explorer over an explicit finite point set, minimizing the coordinate
/// sum with lexicographic tie-break.
#[derive(Clone, Debug)]
pub struct FiniteSetExplorer {
    points: Vec<Point>,
    test: ZoneTest,
}

impl FiniteSetExplorer {
    pub fn new(points: Vec<Point>) -> Self {
        Self::with_zone_test(points, ZoneTest::Strict)
    }

    pub fn with_zone_test(points: Vec<Point>, test: ZoneTest) -> Self {
        FiniteSetExplorer { points, test }
    }

    // the shifted form is the point of ShiftedWeak, so keep it literal
    #[allow(clippy::int_plus_one)]
    fn in_zone(&self, y: &Point, apex: &Point) -> bool {
        match self.test {
            ZoneTest::Strict => y.strictly_dominates(apex),
            ZoneTest::ShiftedWeak => y.iter().zip(apex.iter()).all(|(a, b)| *a <= b - 1),
        }
    }
}

impl Explorer for FiniteSetExplorer {
    fn explore(&mut self, apex: &Point) -> Option<Point> {
        self.points
            .iter()
            .filter(|y| self.in_zone(y, apex))
            .min_by(|a, b| {
                let sa: i128 = a.iter().map(|&v| v as i128).sum();
                let sb: i128 = b.iter().map(|&v| v as i128).sum();
                sa.cmp(&sb).then_with(|| a.cmp(b))
            })
            .cloned()
    }
}

/// Which active zone is explored next.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SelectionOrder {
    /// Oldest bound first.
    #[default]
    Fifo,
    /// Newest bound first.
    Lifo,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub explorer_calls: usize,
    pub found: usize,
    pub final_bounds: usize,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub nondominated: StableSet,
    pub stats: EnumerationStats,
    /// Bounds whose zones were found empty; at termination this is `U(N)`.
    pub retired: UpperBoundSet,
}

/// Runs the enumeration loop until no active zone remains.
pub fn enumerate_nondominated<E: Explorer + ?Sized>(
    explorer: &mut E,
    interval: SearchInterval,
    strategy: Strategy,
    order: SelectionOrder,
) -> Result<Enumeration> {
    let mut maintainer = strategy.maintainer(interval);
    let mut queue: VecDeque<Point> = VecDeque::from([interval.top()]);
    let mut active: HashSet<Point> = HashSet::from([interval.top()]);
    let mut retired = Vec::new();
    let mut stats = EnumerationStats::default();

    loop {
        let next = match order {
            SelectionOrder::Fifo => queue.pop_front(),
            SelectionOrder::Lifo => queue.pop_back(),
        };
        let Some(apex) = next else { break };
        // stale entry of a bound already replaced
        if !active.contains(&apex) {
            continue;
        }
        stats.explorer_calls += 1;
        match explorer.explore(&apex) {
            None => {
                active.remove(&apex);
                retired.push(apex);
            }
            Some(z) => {
                if !interval.contains(&z) || !z.strictly_dominates(&apex) {
                    return Err(Error::ExplorerContract(format!(
                        "{z} is not an interior point strictly below {apex}"
                    )));
                }
                match classify_points(&z, maintainer.generators()) {
                    Ok(Relation::Incomparable) => {}
                    Ok(rel) => {
                        return Err(Error::ExplorerContract(format!(
                            "{z} is not incomparable with the points found so far ({rel:?})"
                        )))
                    }
                    Err(e) => return Err(e),
                }
                let update = maintainer.insert(z)?;
                for u in &update.removed {
                    active.remove(u);
                }
                for u in update.added {
                    active.insert(u.clone());
                    queue.push_back(u);
                }
                stats.found += 1;
            }
        }
    }

    stats.final_bounds = retired.len();
    let mut nondominated = StableSet::new(interval);
    for z in maintainer.generators() {
        nondominated.push_unchecked(z.clone());
    }
    Ok(Enumeration {
        nondominated,
        stats,
        retired: UpperBoundSet::from_bounds_unchecked(interval, retired),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[[i64; 3]]) -> Vec<Point> {
        v.iter().map(|&c| Point::from(c)).collect()
    }

    fn interval(p: usize) -> SearchInterval {
        SearchInterval::new(p, 0, 10).unwrap()
    }

    #[test]
    fn small_instance_call_count() {
        for strategy in [Strategy::Re, Strategy::Ra] {
            let mut ex = FiniteSetExplorer::new(pts(&[[3, 5, 7], [6, 2, 4], [9, 9, 9]]));
            let out = enumerate_nondominated(&mut ex, interval(3), strategy, SelectionOrder::Fifo).unwrap();
            assert_eq!(out.nondominated.canonical(), pts(&[[3, 5, 7], [6, 2, 4]]));
            assert_eq!(out.stats.explorer_calls, 7);
            assert_eq!(out.stats.final_bounds, 5);
        }
    }

    #[test]
    fn empty_feasible_set_needs_one_probe() {
        let mut ex = FiniteSetExplorer::new(vec![]);
        let out = enumerate_nondominated(&mut ex, interval(3), Strategy::Re, SelectionOrder::Lifo).unwrap();
        assert!(out.nondominated.is_empty());
        assert_eq!(out.stats.explorer_calls, 1);
        assert_eq!(out.retired.canonical(), vec![interval(3).top()]);
    }

    #[test]
    fn biobjective_needs_two_n_plus_one_probes() {
        let y: Vec<Point> = (1..=9).map(|a| Point::from([a, 10 - a])).chain([Point::from([8, 8])]).collect();
        let mut ex = FiniteSetExplorer::new(y);
        let out = enumerate_nondominated(&mut ex, interval(2), Strategy::Ra, SelectionOrder::Fifo).unwrap();
        assert_eq!(out.nondominated.len(), 9);
        assert_eq!(out.stats.explorer_calls, 19);
    }

    #[test]
    fn shifted_zone_test_gives_same_output() {
        let y = pts(&[[3, 5, 7], [6, 2, 4], [4, 4, 2], [2, 7, 7], [5, 7, 5], [9, 9, 9]]);
        let a = enumerate_nondominated(&mut FiniteSetExplorer::new(y.clone()), interval(3), Strategy::Re, SelectionOrder::Fifo).unwrap();
        let mut shifted = FiniteSetExplorer::with_zone_test(y, ZoneTest::ShiftedWeak);
        let b = enumerate_nondominated(&mut shifted, interval(3), Strategy::Re, SelectionOrder::Fifo).unwrap();
        assert_eq!(a.nondominated, b.nondominated);
        assert_eq!(a.stats, b.stats);
    }

    struct Liar;

    impl Explorer for Liar {
        fn explore(&mut self, apex: &Point) -> Option<Point> {
            Some(apex.clone())
        }
    }

    struct Repeater(Point);

    impl Explorer for Repeater {
        fn explore(&mut self, _apex: &Point) -> Option<Point> {
            Some(self.0.clone())
        }
    }

    #[test]
    fn explorer_contract_violations_are_errors() {
        let err = enumerate_nondominated(&mut Liar, interval(2), Strategy::Re, SelectionOrder::Fifo).unwrap_err();
        assert!(matches!(err, Error::ExplorerContract(_)));

        // second probe returns a point equal to one already found
        let mut rep = Repeater(Point::from([1, 1]));
        let err = enumerate_nondominated(&mut rep, interval(2), Strategy::Ra, SelectionOrder::Fifo).unwrap_err();
        assert!(matches!(err, Error::ExplorerContract(_)));
    }
}
