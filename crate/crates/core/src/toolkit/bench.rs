//! Benchmark harness: feeds a point sequence to one strategy, records
//! counters and wall time per window of inserts, and fingerprints the
//! bound set at each window end so runs of different strategies can be
//! compared.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::io::{Read, Write};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::{Point, SearchInterval};
use crate::sets::UpperBoundSet;
use crate::toolkit::generate::{generate_stable_set, GenConfig};
use crate::update::Strategy;

/// Counters summed over the inserts `insert_index + 1 - window ..= insert_index`
/// (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub strategy: String,
    pub seed: u64,
    pub insert_index: usize,
    pub window: usize,
    /// `|U|` after the last insert of the window.
    pub bounds: usize,
    pub containing: usize,
    pub boundary: usize,
    pub candidates: usize,
    pub accepted: usize,
    pub discarded: usize,
    pub decisions: usize,
    pub dominance_tests: u64,
    pub filter_tests: u64,
    pub nanos: u64,
    pub max_definers: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct BenchRun {
    pub strategy: Strategy,
    pub records: Vec<BenchRecord>,
    /// `(insert_index, fingerprint of the canonical bound set)` per record.
    pub checkpoints: Vec<(usize, u64)>,
    pub final_bounds: UpperBoundSet,
    pub total_nanos: u128,
}

impl BenchRun {
    pub fn summary(&self) -> BenchSummary {
        BenchSummary::from_records(&self.records)
    }
}

/// Order-independent fingerprint of a bound set.
pub fn fingerprint(bounds: &UpperBoundSet) -> u64 {
    let mut h = DefaultHasher::new();
    bounds.canonical().hash(&mut h);
    h.finish()
}

pub fn run_benchmark(cfg: &GenConfig, strategy: Strategy, record_every: usize) -> Result<BenchRun> {
    let set = generate_stable_set(cfg)?;
    run_points_seeded(*set.interval(), set.points(), strategy, record_every, cfg.seed)
}

pub fn run_points(interval: SearchInterval, points: &[Point], strategy: Strategy, record_every: usize) -> Result<BenchRun> {
    run_points_seeded(interval, points, strategy, record_every, 0)
}

fn run_points_seeded(
    interval: SearchInterval,
    points: &[Point],
    strategy: Strategy,
    record_every: usize,
    seed: u64,
) -> Result<BenchRun> {
    if record_every == 0 {
        return Err(Error::InvalidConfig("record interval must be positive".into()));
    }
    let mut m = strategy.maintainer(interval);
    let mut records = Vec::new();
    let mut checkpoints = Vec::new();
    let mut acc = blank(strategy, seed);
    let mut total_nanos = 0u128;

    for (i, z) in points.iter().enumerate() {
        let t = Instant::now();
        let up = m.insert(z.clone())?;
        let dt = t.elapsed().as_nanos();
        total_nanos += dt;
        let s = up.stats;
        acc.window += 1;
        acc.containing += s.containing;
        acc.boundary += s.boundary;
        acc.candidates += s.candidates;
        acc.accepted += s.accepted;
        acc.discarded += s.discarded;
        acc.decisions += s.decisions;
        acc.dominance_tests += s.dominance_tests();
        acc.filter_tests += s.filter_tests;
        acc.nanos += dt as u64;

        if (i + 1) % record_every == 0 || i + 1 == points.len() {
            acc.insert_index = i;
            acc.bounds = m.bound_count();
            acc.max_definers = m.max_definer_set();
            checkpoints.push((i, fingerprint(&m.upper_bounds())));
            records.push(std::mem::replace(&mut acc, blank(strategy, seed)));
        }
    }

    Ok(BenchRun {
        strategy,
        records,
        checkpoints,
        final_bounds: m.upper_bounds(),
        total_nanos,
    })
}

fn blank(strategy: Strategy, seed: u64) -> BenchRecord {
    BenchRecord {
        strategy: strategy.name().to_string(),
        seed,
        insert_index: 0,
        window: 0,
        bounds: 0,
        containing: 0,
        boundary: 0,
        candidates: 0,
        accepted: 0,
        discarded: 0,
        decisions: 0,
        dominance_tests: 0,
        filter_tests: 0,
        nanos: 0,
        max_definers: None,
    }
}

pub fn write_records<W: Write>(w: W, records: &[BenchRecord]) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    for r in records {
        out.serialize(r)?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_records<R: Read>(r: R) -> Result<Vec<BenchRecord>> {
    csv::Reader::from_reader(r)
        .deserialize()
        .map(|r| r.map_err(Error::from))
        .collect()
}

/// Averages per insert over a run.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct BenchSummary {
    pub inserts: usize,
    pub mean_containing: f64,
    pub mean_bound_growth: f64,
    /// `Σ Δ|U| / Σ |A|`.
    pub growth_per_containing: f64,
}

impl BenchSummary {
    pub fn from_records(records: &[BenchRecord]) -> Self {
        let inserts: usize = records.iter().map(|r| r.window).sum();
        if inserts == 0 {
            return BenchSummary::default();
        }
        let containing: usize = records.iter().map(|r| r.containing).sum();
        let accepted: usize = records.iter().map(|r| r.accepted).sum();
        // Δ|U| = accepted - |A| per insert
        let growth = accepted as f64 - containing as f64;
        let n = inserts as f64;
        BenchSummary {
            inserts,
            mean_containing: containing as f64 / n,
            mean_bound_growth: growth / n,
            growth_per_containing: if containing == 0 { 0.0 } else { growth / containing as f64 },
        }
    }
}

/// First checkpoint at which two strategies disagree on the bound set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub insert_index: usize,
    pub only_first: Vec<Point>,
    pub only_second: Vec<Point>,
}

/// Runs two strategies in lockstep over `points`, comparing the full bound
/// sets after every `check_every` inserts and after the last one.
pub fn paired_check(
    interval: SearchInterval,
    points: &[Point],
    first: Strategy,
    second: Strategy,
    check_every: usize,
) -> Result<Option<Mismatch>> {
    if check_every == 0 {
        return Err(Error::InvalidConfig("check interval must be positive".into()));
    }
    let mut a = first.maintainer(interval);
    let mut b = second.maintainer(interval);
    for (i, z) in points.iter().enumerate() {
        a.insert(z.clone())?;
        b.insert(z.clone())?;
        if (i + 1) % check_every == 0 || i + 1 == points.len() {
            let ua = a.upper_bounds();
            let ub = b.upper_bounds();
            if ua != ub {
                let only_first = ua.canonical().into_iter().filter(|u| !ub.contains(u)).collect();
                let only_second = ub.canonical().into_iter().filter(|u| !ua.contains(u)).collect();
                return Ok(Some(Mismatch {
                    insert_index: i,
                    only_first,
                    only_second,
                }));
            }
        }
    }
    Ok(None)
}
