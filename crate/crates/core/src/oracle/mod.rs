//! Brute-force oracles and named verification suites.
//!
//! Each suite sweeps a grid of `(m, n)` pairs, checks one property on every
//! case, and returns a [`SuiteReport`]. Cases are independent and run
//! through [`Execution`]; results are merged in case order, and sampled
//! suites derive one RNG stream per case from the recorded seed, so reports
//! do not depend on the execution mode.

mod checks;
mod sample;
mod suites;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::Execution;

pub use checks::{
    cross_check_parking, find_invariant_witness, in_closed_alcove, parking_by_sorting,
    shifting_words,
};
pub use sample::{
    interior_point, nearby_point, random_centroid, random_point, random_word, CaseRng,
};

/// One failing case with enough input to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub case: usize,
    pub input: serde_json::Value,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub grid: Vec<(usize, usize)>,
    pub seed: Option<u64>,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Named counts gathered along the way (sets seen, periods observed, …).
    pub summary: BTreeMap<String, u64>,
    /// Not serialized, so equal runs give byte-identical JSON.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// [`Self::to_json`] plus a `wall_time_ms` field.
    pub fn to_json_timed(&self) -> serde_json::Value {
        let mut v = self.to_json();
        v["wall_time_ms"] = serde_json::json!(self.wall_time.as_secs_f64() * 1e3);
        v
    }
}

/// Outcome of one case: a failure description, plus optional counters.
pub(crate) struct CaseResult {
    pub failure: Option<(serde_json::Value, String)>,
    pub counts: Vec<(String, u64)>,
}

impl CaseResult {
    pub fn ok() -> Self {
        CaseResult {
            failure: None,
            counts: Vec::new(),
        }
    }

    pub fn fail(input: serde_json::Value, reason: impl Into<String>) -> Self {
        CaseResult {
            failure: Some((input, reason.into())),
            counts: Vec::new(),
        }
    }

    pub fn count(mut self, key: impl Into<String>, by: u64) -> Self {
        self.counts.push((key.into(), by));
        self
    }
}

pub(crate) fn collect(
    name: &str,
    grid: &[(usize, usize)],
    seed: Option<u64>,
    results: Vec<CaseResult>,
    started: Instant,
) -> SuiteReport {
    let mut failures = Vec::new();
    let mut summary = BTreeMap::new();
    let cases = results.len();
    for (case, r) in results.into_iter().enumerate() {
        if let Some((input, reason)) = r.failure {
            failures.push(Failure {
                case,
                input,
                reason,
            });
        }
        for (k, v) in r.counts {
            *summary.entry(k).or_insert(0) += v;
        }
    }
    SuiteReport {
        name: name.to_string(),
        grid: grid.to_vec(),
        seed,
        cases,
        failures,
        summary,
        wall_time: started.elapsed(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteParams {
    pub grid: Vec<(usize, usize)>,
    pub seed: u64,
    /// Samples per word or per grid point for sampled suites; each suite
    /// has its own default.
    pub samples: Option<usize>,
}

impl SuiteParams {
    pub fn new(grid: Vec<(usize, usize)>) -> Self {
        SuiteParams {
            grid,
            seed: 0,
            samples: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = Some(samples);
        self
    }
}

/// Registered suites, with the property each one checks.
pub const SUITES: &[(&str, &str)] = &[
    (
        "parking-fixed-point",
        "a word has a fixed point in V^m iff it is parking",
    ),
    ("weak-contraction", "words never increase distances in V^m"),
    (
        "alcove-isometry",
        "points sharing an alcove move rigidly with equal permutations",
    ),
    (
        "norm-equal-sorting",
        "a letter preserves a distance iff both points resort alike",
    ),
    (
        "fixed-cycle-structure",
        "the permutation at a fixed point is d cycles of length m/d",
    ),
    (
        "alcove-identity",
        "p^m fixes every interior point of the fixed alcove",
    ),
    (
        "unit-gap-facet",
        "some intermediate point of the fixed orbit has a unit gap",
    ),
    (
        "absorption",
        "orbits of other centroids end in the closed fixed alcove",
    ),
    (
        "shift-characterization",
        "w·Δ = Δ+n forces parking words and invariant intermediates",
    ),
    (
        "removed-are-generators",
        "shifting words remove n-generators of Δ and of every Δ^(i)",
    ),
    (
        "skeleton-union",
        "the m-generators along a shifting orbit form the skeleton of Δ+n",
    ),
    (
        "monotone-uniqueness",
        "exactly one monotone word shifts each set",
    ),
    (
        "gamma-bijection",
        "the Dyck map is a bijection and matches the monotone word",
    ),
    ("phi-centroid", "φ(Δ) is a centroid"),
    (
        "phi-equivariance",
        "φ intertwines the set action and the V^m action",
    ),
    (
        "witness-existence",
        "every parking word shifts some invariant set",
    ),
    (
        "placement-agreement",
        "placement and sorted inverses agree; counters behave",
    ),
    ("sp-roundtrip", "the sorted inverse round-trips through SP"),
    (
        "sp-bijection",
        "SP is a bijection from restricted windows onto parking words",
    ),
];

/// Default grid for a suite when the caller gives none.
pub fn default_grid(name: &str) -> Vec<(usize, usize)> {
    match name {
        "monotone-uniqueness" | "skeleton-union" => vec![(4, 3), (3, 4), (3, 5), (2, 5)],
        "fixed-cycle-structure" | "alcove-identity" | "unit-gap-facet" | "absorption" => {
            vec![(3, 4), (4, 3)]
        }
        "sp-bijection" => vec![(4, 3), (3, 4), (2, 5)],
        _ => vec![(3, 4), (4, 3), (3, 5)],
    }
}

pub fn run_suite(name: &str, params: &SuiteParams, exec: Execution) -> Result<SuiteReport> {
    let started = Instant::now();
    let grid = &params.grid;
    let (results, seed) = match name {
        "parking-fixed-point" => (suites::parking_fixed_point(grid, exec)?, None),
        "weak-contraction" => (suites::weak_contraction(params, exec)?, Some(params.seed)),
        "alcove-isometry" => (suites::alcove_isometry(params, exec)?, Some(params.seed)),
        "norm-equal-sorting" => (suites::norm_equal_sorting(params, exec)?, Some(params.seed)),
        "fixed-cycle-structure" => (suites::fixed_cycle_structure(grid, exec)?, None),
        "alcove-identity" => (suites::alcove_identity(params, exec)?, Some(params.seed)),
        "unit-gap-facet" => (suites::unit_gap_facet(grid, exec)?, None),
        "absorption" => (suites::absorption(params, exec)?, Some(params.seed)),
        "shift-characterization" => (suites::shift_characterization(grid, exec)?, None),
        "removed-are-generators" => (suites::removed_are_generators(grid, exec)?, None),
        "skeleton-union" => (suites::skeleton_union(grid, exec)?, None),
        "monotone-uniqueness" => (suites::monotone_uniqueness(grid, exec)?, None),
        "gamma-bijection" => (suites::gamma_bijection(grid, exec)?, None),
        "phi-centroid" => (suites::phi_centroid(grid, exec)?, None),
        "phi-equivariance" => (suites::phi_equivariance(grid, exec)?, None),
        "witness-existence" => (suites::witness_existence(grid, exec)?, None),
        "placement-agreement" => (suites::placement_agreement(grid, exec)?, None),
        "sp-roundtrip" => (suites::sp_roundtrip(grid, exec)?, None),
        "sp-bijection" => (suites::sp_bijection(grid, exec)?, None),
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(collect(name, grid, seed, results, started))
}
