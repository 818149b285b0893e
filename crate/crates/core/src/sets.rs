//! Stable point sets, upper bound sets and search zones, together with the
//! filtering and membership operations defined over them.

use crate::error::{Error, Result};
use crate::point::{Point, SearchInterval};

/// How a point relates to a stable set.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    /// Some member weakly dominates the point (equality included).
    Dominated,
    /// The point dominates some member.
    Dominating,
    Incomparable,
}

/// A set of pairwise incomparable points of the search interval.
///
/// Members keep their insertion order, which incremental folds consume;
/// equality is set equality.
#[derive(Clone, Debug)]
pub struct StableSet {
    interval: SearchInterval,
    points: Vec<Point>,
}

impl StableSet {
    pub fn new(interval: SearchInterval) -> Self {
        StableSet {
            interval,
            points: Vec::new(),
        }
    }

    /// Builds a stable set, rejecting out-of-interval points and comparable
    /// pairs (duplicates included).
    pub fn from_points(interval: SearchInterval, points: Vec<Point>) -> Result<Self> {
        let mut set = StableSet::new(interval);
        set.points.reserve(points.len());
        for z in points {
            set.insert(z)?;
        }
        Ok(set)
    }

    /// Adds a point that must be incomparable with every member.
    pub fn insert(&mut self, z: Point) -> Result<()> {
        self.interval.check_point(&z)?;
        if let Some(other) = self.points.iter().find(|n| n.weakly_dominates(&z) || z.weakly_dominates(n)) {
            return Err(Error::NotStable {
                first: other.clone(),
                second: z,
            });
        }
        self.points.push(z);
        Ok(())
    }

    pub(crate) fn push_unchecked(&mut self, z: Point) {
        self.points.push(z);
    }

    pub fn interval(&self) -> &SearchInterval {
        &self.interval
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Members in lexicographic order.
    pub fn canonical(&self) -> Vec<Point> {
        let mut v = self.points.clone();
        v.sort_unstable();
        v
    }

    /// True if no two members share a value in any coordinate.
    pub fn is_general_position(&self) -> bool {
        (0..self.interval.dim()).all(|j| {
            let mut vals: Vec<_> = self.points.iter().map(|z| z[j]).collect();
            vals.sort_unstable();
            vals.windows(2).all(|w| w[0] != w[1])
        })
    }
}

impl PartialEq for StableSet {
    fn eq(&self, other: &Self) -> bool {
        self.interval == other.interval && self.canonical() == other.canonical()
    }
}

impl Eq for StableSet {}

/// Keeps the members of `points` that no other member dominates. Exact
/// duplicates collapse into one. The result is in canonical order.
pub fn nondominated_filter(interval: SearchInterval, points: &[Point]) -> Result<StableSet> {
    for z in points {
        interval.check_point(z)?;
    }
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let kept = sorted
        .iter()
        .filter(|z| !sorted.iter().any(|y| y.dominates(z)))
        .cloned()
        .collect();
    Ok(StableSet {
        interval,
        points: kept,
    })
}

/// `z ∈ S(N)`: no member of `N` weakly dominates `z`.
pub fn in_search_region(z: &Point, set: &StableSet) -> Result<bool> {
    set.interval.check_point(z)?;
    Ok(!set.points.iter().any(|n| n.weakly_dominates(z)))
}

/// Relation of `z` to the members of `set`.
pub fn classify(z: &Point, set: &StableSet) -> Result<Relation> {
    set.interval.check_point(z)?;
    classify_points(z, &set.points)
}

pub(crate) fn classify_points(z: &Point, points: &[Point]) -> Result<Relation> {
    let by = points.iter().find(|n| n.weakly_dominates(z));
    let over = points.iter().find(|n| z.dominates(n));
    match (by, over) {
        (Some(by), Some(over)) => Err(Error::Conflict {
            point: z.clone(),
            by: by.clone(),
            over: over.clone(),
        }),
        (Some(_), None) => Ok(Relation::Dominated),
        (None, Some(_)) => Ok(Relation::Dominating),
        (None, None) => Ok(Relation::Incomparable),
    }
}

/// Errors unless `z` is incomparable with every point of `points`.
pub(crate) fn require_incomparable<'a, I>(z: &Point, points: I) -> Result<()>
where
    I: IntoIterator<Item = &'a Point>,
{
    for n in points {
        if n.weakly_dominates(z) {
            return Err(Error::Dominated {
                point: z.clone(),
                by: n.clone(),
            });
        }
        if z.weakly_dominates(n) {
            return Err(Error::Dominating {
                point: z.clone(),
                over: n.clone(),
            });
        }
    }
    Ok(())
}

/// The open box `C(u) = {z ∈ Z : z < u}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchZone {
    pub apex: Point,
    pub interval: SearchInterval,
}

impl SearchZone {
    pub fn contains(&self, z: &Point) -> bool {
        self.interval.contains(z) && z.strictly_dominates(&self.apex)
    }
}

/// A set of local upper bounds over a search interval.
///
/// Storage order is unspecified and changes with updates; iteration through
/// [`canonical`](Self::canonical) is lexicographic. Equality is set
/// equality.
#[derive(Clone, Debug)]
pub struct UpperBoundSet {
    interval: SearchInterval,
    bounds: Vec<Point>,
}

impl UpperBoundSet {
    /// `U(∅) = {(M, ..., M)}`.
    pub fn initial(interval: SearchInterval) -> Self {
        UpperBoundSet {
            interval,
            bounds: vec![interval.top()],
        }
    }

    /// Wraps arbitrary bounds in the closed interval. Pairwise
    /// non-dominance is not checked here; see [`crate::oracle::verify_upper_bound_set`].
    pub fn from_bounds(interval: SearchInterval, bounds: Vec<Point>) -> Result<Self> {
        for u in &bounds {
            interval.check_bound(u)?;
        }
        Ok(UpperBoundSet { interval, bounds })
    }

    pub(crate) fn from_bounds_unchecked(interval: SearchInterval, bounds: Vec<Point>) -> Self {
        UpperBoundSet { interval, bounds }
    }

    pub fn interval(&self) -> &SearchInterval {
        &self.interval
    }

    pub fn bounds(&self) -> &[Point] {
        &self.bounds
    }

    pub(crate) fn bounds_mut(&mut self) -> &mut Vec<Point> {
        &mut self.bounds
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.bounds.iter()
    }

    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    pub fn contains(&self, u: &Point) -> bool {
        self.bounds.contains(u)
    }

    pub fn canonical(&self) -> Vec<Point> {
        let mut v = self.bounds.clone();
        v.sort_unstable();
        v
    }

    pub fn zones(&self) -> impl Iterator<Item = SearchZone> + '_ {
        self.bounds.iter().map(|u| SearchZone {
            apex: u.clone(),
            interval: self.interval,
        })
    }

    /// No member dominates another.
    pub fn is_pairwise_nondominated(&self) -> bool {
        self.bounds
            .iter()
            .all(|a| !self.bounds.iter().any(|b| a.dominates(b)))
    }
}

impl PartialEq for UpperBoundSet {
    fn eq(&self, other: &Self) -> bool {
        self.interval == other.interval && self.canonical() == other.canonical()
    }
}

impl Eq for UpperBoundSet {}
