//! Upper bound sets of the search region of a stable point set in a box,
//! maintained under insertion by redundancy elimination or redundancy
//! avoidance, with a brute-force oracle, region queries and a generic
//! enumeration loop.

pub mod avoidance;
pub mod elimination;
pub mod enumerate;
pub mod error;
pub mod oracle;
pub mod point;
pub mod queries;
pub mod sets;
pub mod toolkit;
pub mod update;

pub use avoidance::{zmax, BoundWithDefiners, RaState};
pub use elimination::{build_from_scratch_re, re_insert, re_insert_with, FilterScope, ReState};
pub use enumerate::{enumerate_nondominated, Enumeration, EnumerationStats, Explorer, FiniteSetExplorer, SelectionOrder, ZoneTest};
pub use error::{Error, Result};
pub use oracle::{oracle_upper_bounds, verify_upper_bound_set, Verdict, Violation};
pub use point::{Point, Scalar, SearchInterval};
pub use queries::{boundary_zones, rule_r_disjoint, rule_z_disjoint, rule_z_tight_disjoint, zones_containing, HalfspaceCut};
pub use sets::{classify, in_search_region, nondominated_filter, Relation, SearchZone, StableSet, UpperBoundSet};
pub use update::{build, BoundMaintainer, InsertStats, Strategy, Update};
pub use toolkit::{generate_stable_set, run_benchmark, GenConfig};
