//! Read-only queries over an upper bound set: which zones contain or touch
//! a point, and sufficient tests for a polytope
//! `Q = {z : Σ_j λ^i_j z_j >= α_i for all i}` to miss the search region.
//!
//! The disjointness tests are one-sided. `true` certifies `Q ∩ S(N) = ∅`;
//! `false` only means the test could not prove it.

use std::fmt;

use crate::error::{Error, Result};
use crate::point::{Point, Scalar};
use crate::sets::UpperBoundSet;

/// One constraint `Σ_j λ_j z_j >= α` of the polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfspaceCut {
    lambda: Vec<Scalar>,
    alpha: Scalar,
}

impl HalfspaceCut {
    pub fn new(lambda: Vec<Scalar>, alpha: Scalar) -> Result<Self> {
        if lambda.iter().any(|&l| l < 0) {
            return Err(Error::InvalidCut(format!("negative weight in {lambda:?}")));
        }
        if lambda.iter().all(|&l| l == 0) {
            return Err(Error::InvalidCut("all weights are zero".into()));
        }
        Ok(HalfspaceCut { lambda, alpha })
    }

    pub fn lambda(&self) -> &[Scalar] {
        &self.lambda
    }

    pub fn alpha(&self) -> Scalar {
        self.alpha
    }

    /// `Σ_j λ_j u_j`, widened so that large weights cannot overflow.
    pub fn weigh(&self, u: &[Scalar]) -> i128 {
        self.lambda.iter().zip(u).map(|(&l, &v)| l as i128 * v as i128).sum()
    }

    fn weight_sum(&self) -> i128 {
        self.lambda.iter().map(|&l| l as i128).sum()
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        if self.lambda.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: self.lambda.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for HalfspaceCut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lambda {
            write!(f, "{l} ")?;
        }
        write!(f, "{}", self.alpha)
    }
}

/// `{u ∈ U : z < u}`.
pub fn zones_containing<'a>(bounds: &'a UpperBoundSet, z: &Point) -> Vec<&'a Point> {
    bounds.iter().filter(|u| z.strictly_dominates(u)).collect()
}

/// `B_j = {u ∈ U : z_j = u_j and z_{-j} < u_{-j}}`.
pub fn boundary_zones<'a>(bounds: &'a UpperBoundSet, z: &Point, j: usize) -> Result<Vec<&'a Point>> {
    bounds.interval().check_coord(j)?;
    Ok(bounds
        .iter()
        .filter(|u| z[j] == u[j] && z.strictly_below_except(u, j))
        .collect())
}

fn check_cuts(bounds: &UpperBoundSet, cuts: &[HalfspaceCut]) -> Result<()> {
    let dim = bounds.interval().dim();
    cuts.iter().try_for_each(|c| c.check_dim(dim))
}

/// Real-valued test: every bound has some cut with `Σ λ_j u_j <= α`.
pub fn rule_r_disjoint(bounds: &UpperBoundSet, cuts: &[HalfspaceCut]) -> Result<bool> {
    check_cuts(bounds, cuts)?;
    Ok(bounds
        .iter()
        .all(|u| cuts.iter().any(|c| c.weigh(u) <= c.alpha as i128)))
}

/// Integral test in its published form: every bound has some cut with
/// `Σ λ_j u_j < α - Σ λ_j`.
///
/// This condition implies the one of [`rule_r_disjoint`], so it never
/// certifies more than the real-valued test does.
pub fn rule_z_disjoint(bounds: &UpperBoundSet, cuts: &[HalfspaceCut]) -> Result<bool> {
    check_cuts(bounds, cuts)?;
    Ok(bounds
        .iter()
        .all(|u| cuts.iter().any(|c| c.weigh(u) < c.alpha as i128 - c.weight_sum())))
}

/// Integral test derived from `z < u ⇒ z <= u - 1` on integer points:
/// every bound has some cut with `Σ λ_j u_j < α + Σ λ_j`, i.e. the weighted
/// sum of `u - 1` stays below `α`. Certifies everything
/// [`rule_r_disjoint`] does, and more on integer data.
pub fn rule_z_tight_disjoint(bounds: &UpperBoundSet, cuts: &[HalfspaceCut]) -> Result<bool> {
    check_cuts(bounds, cuts)?;
    Ok(bounds
        .iter()
        .all(|u| cuts.iter().any(|c| c.weigh(u) < c.alpha as i128 + c.weight_sum())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elimination::build_from_scratch_re;
    use crate::point::SearchInterval;
    use crate::sets::StableSet;

    const M: i64 = 10;

    fn bounds(p: usize, pts: &[&[i64]]) -> UpperBoundSet {
        let iv = SearchInterval::new(p, 0, M).unwrap();
        let n = StableSet::from_points(iv, pts.iter().map(|c| Point::new(c.to_vec())).collect()).unwrap();
        build_from_scratch_re(&n).unwrap()
    }

    fn example2() -> UpperBoundSet {
        bounds(3, &[&[3, 5, 7]])
    }

    #[test]
    fn containing_zones() {
        let u = example2();
        let mut found: Vec<Point> = zones_containing(&u, &Point::from([6, 2, 4])).into_iter().cloned().collect();
        found.sort();
        assert_eq!(found, vec![Point::from([M, 5, M]), Point::from([M, M, 7])]);

        let top = bounds(3, &[]);
        assert_eq!(zones_containing(&top, &Point::from([9, 1, 5])).len(), 1);
    }

    #[test]
    fn containing_zones_by_scan_on_shared_values() {
        let u = bounds(3, &[&[2, 7, 7], &[5, 7, 5], &[8, 7, 3]]);
        let z = Point::from([4, 3, 7]);
        let got = zones_containing(&u, &z);
        let expected: Vec<&Point> = u.iter().filter(|b| b.iter().zip(z.iter()).all(|(bv, zv)| zv < bv)).collect();
        assert_eq!(got, expected);
        assert!(!got.is_empty());
    }

    #[test]
    fn boundary_zones_examples() {
        let sa = example2();
        for j in 0..3 {
            assert!(boundary_zones(&sa, &Point::from([6, 2, 4]), j).unwrap().is_empty());
        }
        let shared = bounds(3, &[&[2, 7, 7], &[5, 7, 5], &[8, 7, 3]]);
        let b = boundary_zones(&shared, &Point::from([5, 7, 6]), 1).unwrap();
        assert!(b.contains(&&Point::from([M, 7, M])));
        assert!(boundary_zones(&shared, &Point::from([1, 1, 1]), 0).unwrap().is_empty());
        assert!(boundary_zones(&shared, &Point::from([1, 1, 1]), 3).is_err());
    }

    fn staircase() -> UpperBoundSet {
        bounds(2, &[&[3, 5], &[5, 3]])
    }

    fn cut(alpha: i64) -> Vec<HalfspaceCut> {
        vec![HalfspaceCut::new(vec![1, 1], alpha).unwrap()]
    }

    #[test]
    fn staircase_bounds() {
        assert_eq!(
            staircase().canonical(),
            vec![Point::from([3, M]), Point::from([5, 5]), Point::from([M, 3])]
        );
    }

    #[test]
    fn rule_r_examples() {
        let empty = UpperBoundSet::from_bounds(SearchInterval::new(2, 0, M).unwrap(), vec![]).unwrap();
        assert!(rule_r_disjoint(&empty, &cut(0)).unwrap());
        assert!(rule_r_disjoint(&staircase(), &cut(16)).unwrap());
        assert!(!rule_r_disjoint(&staircase(), &cut(12)).unwrap());
    }

    #[test]
    fn rule_z_examples() {
        let empty = UpperBoundSet::from_bounds(SearchInterval::new(2, 0, M).unwrap(), vec![]).unwrap();
        assert!(rule_z_disjoint(&empty, &cut(0)).unwrap());
        assert!(rule_z_disjoint(&staircase(), &cut(16)).unwrap());
        assert!(!rule_z_disjoint(&staircase(), &cut(15)).unwrap());
    }

    /// Integer points of S(N) ∩ Q, by enumerating (0, M)^2.
    fn brute_force_hits(alpha: i64) -> usize {
        let n = [[3, 5], [5, 3]];
        let mut hits = 0;
        for a in 1..M {
            for b in 1..M {
                let in_region = !n.iter().any(|z| z[0] <= a && z[1] <= b);
                if in_region && a + b >= alpha {
                    hits += 1;
                }
            }
        }
        hits
    }

    #[test]
    fn certificates_agree_with_enumeration() {
        // integer points of S(N) reach a weighted sum of 11 at most
        assert!(brute_force_hits(11) > 0);
        assert_eq!(brute_force_hits(12), 0);
        // over the reals the supremum is 13, approached near (3, 10)
        assert!(rule_r_disjoint(&staircase(), &cut(13)).unwrap());
        assert!(!rule_r_disjoint(&staircase(), &cut(12)).unwrap());
        assert!(rule_z_tight_disjoint(&staircase(), &cut(12)).unwrap());
        assert!(!rule_z_tight_disjoint(&staircase(), &cut(11)).unwrap());
        for alpha in 0..30 {
            let z = rule_z_disjoint(&staircase(), &cut(alpha)).unwrap();
            let r = rule_r_disjoint(&staircase(), &cut(alpha)).unwrap();
            let t = rule_z_tight_disjoint(&staircase(), &cut(alpha)).unwrap();
            assert!(!z || r, "alpha = {alpha}");
            assert!(!r || t, "alpha = {alpha}");
            assert!(!t || brute_force_hits(alpha) == 0, "alpha = {alpha}");
        }
    }

    #[test]
    fn invalid_cuts_are_rejected() {
        assert!(HalfspaceCut::new(vec![-1, 2], 3).is_err());
        assert!(HalfspaceCut::new(vec![0, 0], 3).is_err());
        let three = vec![HalfspaceCut::new(vec![1, 1, 1], 3).unwrap()];
        assert!(rule_r_disjoint(&staircase(), &three).is_err());
    }

    #[test]
    fn adding_cuts_keeps_a_certificate() {
        let mut cuts = cut(16);
        assert!(rule_r_disjoint(&staircase(), &cuts).unwrap());
        cuts.push(HalfspaceCut::new(vec![2, 0], 1).unwrap());
        assert!(rule_r_disjoint(&staircase(), &cuts).unwrap());
    }
}
