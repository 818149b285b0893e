//! Points of the objective space, the search interval `(m, M)^p`, and the
//! componentwise orderings between points.
//!
//! All objectives are minimized. For two points `a` and `b`:
//!
//! - `a` *weakly dominates* `b` (`a ≦ b`) if `a_j <= b_j` for every `j`;
//! - `a` *dominates* `b` (`a ≤ b`) if it weakly dominates it and `a != b`;
//! - `a` *strictly dominates* `b` (`a < b`) if `a_j < b_j` for every `j`.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Coordinate type. Objective values are integral, which makes every
/// equality test in the update procedures exact.
pub type Scalar = i64;

/// A point of the objective space.
///
/// The derived ordering is lexicographic, which is the canonical order used
/// for every serialized or compared set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point(Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Point(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    /// `self ≦ other`. Dimensions are assumed equal.
    #[inline]
    pub fn weakly_dominates(&self, other: &Point) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self < other`. Dimensions are assumed equal.
    #[inline]
    pub fn strictly_dominates(&self, other: &Point) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).all(|(a, b)| a < b)
    }

    /// `self ≤ other`: weak dominance between distinct points.
    #[inline]
    pub fn dominates(&self, other: &Point) -> bool {
        self.weakly_dominates(other) && self != other
    }

    /// Returns `(value, self_{-j})`, the point obtained by replacing
    /// coordinate `j` with `value`.
    pub fn with_coord(&self, j: usize, value: Scalar) -> Point {
        let mut coords = self.0.clone();
        coords[j] = value;
        Point(coords)
    }

    /// True if `self_k < other_k` for every `k != j`.
    #[inline]
    pub(crate) fn strictly_below_except(&self, other: &Point, j: usize) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .enumerate()
            .all(|(k, (a, b))| k == j || a < b)
    }

    /// True if `self_k <= other_k` for every `k != j`.
    #[inline]
    pub(crate) fn weakly_below_except(&self, other: &Point, j: usize) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .enumerate()
            .all(|(k, (a, b))| k == j || a <= b)
    }
}

impl Deref for Point {
    type Target = [Scalar];

    fn deref(&self) -> &[Scalar] {
        &self.0
    }
}

impl From<Vec<Scalar>> for Point {
    fn from(coords: Vec<Scalar>) -> Self {
        Point(coords)
    }
}

impl<const N: usize> From<[Scalar; N]> for Point {
    fn from(coords: [Scalar; N]) -> Self {
        Point(coords.to_vec())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

fn check_same_dim(a: &Point, b: &Point) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

/// `a ≦ b`, checking dimensions.
pub fn weakly_dominates(a: &Point, b: &Point) -> Result<bool> {
    check_same_dim(a, b)?;
    Ok(a.weakly_dominates(b))
}

/// `a < b`, checking dimensions.
pub fn strictly_dominates(a: &Point, b: &Point) -> Result<bool> {
    check_same_dim(a, b)?;
    Ok(a.strictly_dominates(b))
}

/// The search interval `Z = (m, M)^p`. Feasible points lie strictly inside
/// it; local upper bounds live in its closure.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchInterval {
    dim: usize,
    lower: Scalar,
    upper: Scalar,
}

impl SearchInterval {
    pub fn new(dim: usize, lower: Scalar, upper: Scalar) -> Result<Self> {
        if dim < 2 || lower >= upper {
            return Err(Error::InvalidInterval { dim, lower, upper });
        }
        Ok(SearchInterval { dim, lower, upper })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `m`
    pub fn lower(&self) -> Scalar {
        self.lower
    }

    /// `M`
    pub fn upper(&self) -> Scalar {
        self.upper
    }

    /// The point `(M, ..., M)`, sole local upper bound of the empty set.
    pub fn top(&self) -> Point {
        Point(vec![self.upper; self.dim])
    }

    /// Dummy point for coordinate `j`: `M` at position `j`, `m` elsewhere.
    pub fn dummy(&self, j: usize) -> Point {
        let mut coords = vec![self.lower; self.dim];
        coords[j] = self.upper;
        Point(coords)
    }

    pub fn dummies(&self) -> Vec<Point> {
        (0..self.dim).map(|j| self.dummy(j)).collect()
    }

    /// Membership in the open interval.
    pub fn contains(&self, z: &Point) -> bool {
        z.dim() == self.dim && z.iter().all(|&v| self.lower < v && v < self.upper)
    }

    /// Validates a feasible point: right dimension, strictly inside.
    pub fn check_point(&self, z: &Point) -> Result<()> {
        if z.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: z.dim(),
            });
        }
        if !self.contains(z) {
            return Err(Error::OutsideInterval {
                point: z.clone(),
                lower: self.lower,
                upper: self.upper,
            });
        }
        Ok(())
    }

    /// Validates a bound: right dimension, inside the closed interval.
    pub fn check_bound(&self, u: &Point) -> Result<()> {
        if u.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: u.dim(),
            });
        }
        if u.iter().any(|&v| v < self.lower || v > self.upper) {
            return Err(Error::BoundOutsideInterval {
                bound: u.clone(),
                lower: self.lower,
                upper: self.upper,
            });
        }
        Ok(())
    }

    pub(crate) fn check_coord(&self, j: usize) -> Result<()> {
        if j >= self.dim {
            return Err(Error::CoordinateOutOfRange {
                index: j,
                dim: self.dim,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const M: Scalar = 10;

    #[test]
    fn weak_dominance_examples() {
        let a = Point::from([3, 5, 7]);
        assert!(weakly_dominates(&a, &a).unwrap());
        assert!(!weakly_dominates(&a, &Point::from([6, 2, 4])).unwrap());
        assert!(weakly_dominates(&Point::from([2, 7, 7]), &Point::from([2, 8, 9])).unwrap());
    }

    #[test]
    fn strict_dominance_examples() {
        let z2 = Point::from([6, 2, 4]);
        assert!(strictly_dominates(&z2, &Point::from([M, 5, M])).unwrap());
        assert!(!strictly_dominates(&Point::from([3, 5, 7]), &Point::from([3, 9, 9])).unwrap());
        assert!(!strictly_dominates(&z2, &Point::from([3, M, M])).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = Point::from([1, 2]);
        let b = Point::from([1, 2, 3]);
        assert!(matches!(
            weakly_dominates(&a, &b),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        ));
        assert!(strictly_dominates(&b, &a).is_err());
    }

    #[test]
    fn interval_dummies_and_membership() {
        let z = SearchInterval::new(3, 0, 10).unwrap();
        assert_eq!(z.dummy(1), Point::from([0, 10, 0]));
        assert_eq!(z.top(), Point::from([10, 10, 10]));
        assert!(z.contains(&Point::from([1, 9, 5])));
        assert!(!z.contains(&Point::from([0, 9, 5])));
        assert!(z.check_point(&Point::from([1, 10, 5])).is_err());
        assert!(z.check_bound(&Point::from([1, 10, 5])).is_ok());
        assert!(SearchInterval::new(1, 0, 10).is_err());
        assert!(SearchInterval::new(2, 5, 5).is_err());
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(Point::from([3, 5, 7]).to_string(), "(3,5,7)");
    }

    fn triple() -> impl Strategy<Value = (Point, Point, Point)> {
        let p = || prop::collection::vec(0i64..4, 3).prop_map(Point::new);
        (p(), p(), p())
    }

    proptest! {
        #[test]
        fn weak_dominance_is_a_partial_order((a, b, c) in triple()) {
            prop_assert!(a.weakly_dominates(&a));
            if a.weakly_dominates(&b) && b.weakly_dominates(&a) {
                prop_assert_eq!(&a, &b);
            }
            if a.weakly_dominates(&b) && b.weakly_dominates(&c) {
                prop_assert!(a.weakly_dominates(&c));
            }
        }

        #[test]
        fn strict_implies_weak((a, b, _c) in triple()) {
            if a.strictly_dominates(&b) {
                prop_assert!(a.weakly_dominates(&b));
            }
            prop_assert_eq!(a.dominates(&b), a.weakly_dominates(&b) && a != b);
        }
    }
}
