#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use search_region::{generate_stable_set, Error, GenConfig, Point, SearchInterval, StableSet};

/// A stable set in two objectives: `n` distinct first coordinates paired in
/// reverse order with `n` distinct second coordinates, then shuffled. Every
/// biobjective stable set has this shape, which rejection sampling reaches
/// only very slowly.
pub fn chain2(n: usize, range: i64, seed: u64) -> StableSet {
    assert!(range as usize >= n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<i64> = (1..=range).collect();
    let mut xs: Vec<i64> = pool.choose_multiple(&mut rng, n).copied().collect();
    let mut ys: Vec<i64> = pool.choose_multiple(&mut rng, n).copied().collect();
    xs.sort_unstable();
    ys.sort_unstable_by(|a, b| b.cmp(a));
    let mut pts: Vec<Point> = xs.into_iter().zip(ys).map(|(x, y)| Point::from([x, y])).collect();
    pts.shuffle(&mut rng);
    StableSet::from_points(SearchInterval::new(2, 0, range + 1).unwrap(), pts).unwrap()
}

/// Generated instance together with the range actually used.
pub struct Instance {
    pub set: StableSet,
    pub range: i64,
}

/// Draws a stable set; for shared-value instances the requested range is
/// doubled until rejection sampling can reach `n` points.
pub fn instance(dim: usize, n: usize, general_position: bool, range: i64, seed: u64) -> Instance {
    if dim == 2 {
        let range = range.max(n as i64);
        return Instance {
            set: chain2(n, range, seed),
            range,
        };
    }
    let mut range = range.max(1);
    loop {
        let cfg = GenConfig {
            dim,
            count: n,
            range,
            general_position,
            seed,
        };
        match generate_stable_set(&cfg) {
            Ok(set) => return Instance { set, range },
            Err(Error::RejectionCap { .. }) => range *= 2,
            Err(e) => panic!("generation failed: {e}"),
        }
    }
}

/// Maximal elements by direct pairwise comparison, duplicates collapsed.
pub fn brute_nondominated(points: &[Point]) -> Vec<Point> {
    let mut out: Vec<Point> = points
        .iter()
        .filter(|z| {
            !points
                .iter()
                .any(|y| y.iter().zip(z.iter()).all(|(a, b)| a <= b) && y != *z)
        })
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}
