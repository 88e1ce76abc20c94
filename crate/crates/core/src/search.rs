//! Reproducible random search over quarter arcs with a line-delimited JSON
//! catalog of accepted embeddings.
//!
//! Sample `i` draws from its own ChaCha stream `(seed, i)`, so the catalog
//! depends only on the configuration and never on scheduling.

use std::collections::BTreeMap;
use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{counts_of, parity_check, project_all, DiagramError, TripleCount};
use crate::exact::{Axis, Point3, Rational};
use crate::families::sim_lower_bound;
use crate::invariants::{alexander, crossing_number, determinant_of, identify, simplify, Fingerprint};
use crate::polygon::{symmetrize, validate_embedding, QuarterArc, QuarterError};

/// Samples are evaluated in batches of this size before being written.
const BATCH: u64 = 512;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub seed: u64,
    pub samples: u64,
    /// Inclusive range of interior vertices per quarter arc.
    pub min_interior: usize,
    pub max_interior: usize,
    /// Coordinates lie in `[-B, B]`.
    pub coord_bound: i64,
    /// Lattice step for interior coordinates.
    pub delta: Rational,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 42,
            samples: 1000,
            min_interior: 1,
            max_interior: 3,
            coord_bound: 3,
            delta: Rational::new(1, 5),
        }
    }
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid search configuration: {0}")]
    Config(String),
    #[error("sample {index}: parity check failed in the {axis} projection")]
    Parity { index: u64, axis: Axis },
    #[error("catalog write failed after {written} entries: {source}")]
    Sink { written: u64, source: io::Error },
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), SearchError> {
        if self.min_interior < 1 || self.min_interior > self.max_interior {
            return Err(SearchError::Config(format!(
                "interior vertex range {}..={} must satisfy 1 <= min <= max",
                self.min_interior, self.max_interior
            )));
        }
        if self.coord_bound < 2 {
            return Err(SearchError::Config(format!(
                "coordinate bound must be at least 2, got {}",
                self.coord_bound
            )));
        }
        if !self.delta.is_positive() || self.delta > Rational::one() {
            return Err(SearchError::Config(format!(
                "lattice step must lie in (0, 1], got {}",
                self.delta
            )));
        }
        Ok(())
    }

    fn lattice_steps(&self) -> i64 {
        let steps = &Rational::from_integer(self.coord_bound) / &self.delta;
        steps.to_f64().floor() as i64
    }
}

/// Independent random stream for sample `index`.
pub fn sample_stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Draws a quarter arc from `(a,0,0)` to `(0,b,0)` with lattice interior
/// vertices; fails when the draw breaks a quarter-arc invariant.
pub fn sample_quarter<R: Rng>(rng: &mut R, cfg: &SearchConfig, name: &str) -> Result<QuarterArc, QuarterError> {
    let b = cfg.coord_bound;
    let axis_coord = |rng: &mut R| {
        let v = rng.random_range(1..=b);
        if rng.random_bool(0.5) {
            v
        } else {
            -v
        }
    };
    let steps = cfg.lattice_steps();
    let interior = rng.random_range(cfg.min_interior..=cfg.max_interior);
    let mut vertices = Vec::with_capacity(interior + 2);
    vertices.push(Point3::from_ints(axis_coord(rng), 0, 0));
    for _ in 0..interior {
        let mut c = || &cfg.delta * &Rational::from_integer(rng.random_range(-steps..=steps));
        let (x, y, z) = (c(), c(), c());
        vertices.push(Point3::new(x, y, z));
    }
    vertices.push(Point3::from_ints(0, axis_coord(rng), 0));
    QuarterArc::new(name, cfg.delta.clone(), vertices)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub index: u64,
    pub seed: u64,
    pub delta: Rational,
    pub vertices: Vec<[Rational; 3]>,
    pub p_x: usize,
    pub p_y: usize,
    pub p_z: usize,
    pub sum: usize,
    pub fingerprint: Option<Fingerprint>,
    pub names: Vec<String>,
}

impl CatalogEntry {
    pub fn counts(&self) -> TripleCount {
        TripleCount {
            x: self.p_x,
            y: self.p_y,
            z: self.p_z,
            sum: self.sum,
        }
    }

    pub fn quarter(&self) -> Result<QuarterArc, QuarterError> {
        let vertices = self
            .vertices
            .iter()
            .map(|[x, y, z]| Point3::new(x.clone(), y.clone(), z.clone()))
            .collect();
        QuarterArc::new(format!("sample-{}", self.index), self.delta.clone(), vertices)
    }

    /// Rebuilds the embedding from the stored coordinates and checks that it
    /// reproduces the stored counts.
    pub fn revalidate(&self) -> bool {
        let Ok(q) = self.quarter() else { return false };
        match project_all(&symmetrize(&q)) {
            Ok(d) => counts_of(&d) == self.counts(),
            Err(_) => false,
        }
    }

    /// Smallest crossing number among the candidate names, if any is known.
    pub fn known_crossing_number(&self) -> Option<u64> {
        self.names
            .iter()
            .filter_map(|n| crossing_number(n))
            .min()
            .map(|n| n as u64)
    }
}

/// Why a sample produced no catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rejection {
    Quarter,
    Invalid,
    GeneralPosition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Accepted(Box<CatalogEntry>),
    Rejected(Rejection),
}

/// Fingerprint from whichever projection reduces to the fewest crossings.
pub fn best_fingerprint(diagrams: &[crate::diagram::Diagram; 3]) -> Option<Fingerprint> {
    let reduced = diagrams
        .iter()
        .filter_map(|d| simplify(&d.pd_code).ok())
        .min_by_key(|c| c.len())?;
    let alexander = alexander(&reduced).ok()?;
    Some(Fingerprint {
        determinant: determinant_of(&alexander),
        alexander,
    })
}

/// Runs one quarter arc through symmetrize, validate, count and identify.
pub fn evaluate(index: u64, seed: u64, q: &QuarterArc) -> Result<Outcome, SearchError> {
    let knot = symmetrize(q);
    if !validate_embedding(&knot).valid {
        return Ok(Outcome::Rejected(Rejection::Invalid));
    }
    let diagrams = match project_all(&knot) {
        Ok(d) => d,
        Err(DiagramError::InvalidEmbedding(_)) => return Ok(Outcome::Rejected(Rejection::Invalid)),
        Err(DiagramError::GeneralPosition { .. }) => return Ok(Outcome::Rejected(Rejection::GeneralPosition)),
    };
    if let Some(d) = diagrams.iter().find(|d| !parity_check(d)) {
        return Err(SearchError::Parity { index, axis: d.axis });
    }
    let counts = counts_of(&diagrams);
    let fingerprint = best_fingerprint(&diagrams);
    let names = fingerprint.as_ref().map(identify).unwrap_or_default();
    Ok(Outcome::Accepted(Box::new(CatalogEntry {
        index,
        seed,
        delta: q.delta().clone(),
        vertices: q
            .vertices()
            .iter()
            .map(|p| [p.x.clone(), p.y.clone(), p.z.clone()])
            .collect(),
        p_x: counts.x,
        p_y: counts.y,
        p_z: counts.z,
        sum: counts.sum,
        fingerprint,
        names,
    })))
}

/// Draws and evaluates sample `index`.
pub fn run_sample(cfg: &SearchConfig, index: u64) -> Result<Outcome, SearchError> {
    let mut rng = sample_stream(cfg.seed, index);
    match sample_quarter(&mut rng, cfg, &format!("sample-{index}")) {
        Ok(q) => evaluate(index, cfg.seed, &q),
        Err(_) => Ok(Outcome::Rejected(Rejection::Quarter)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BestRecord {
    pub sum: usize,
    pub index: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub attempted: u64,
    pub rejected_quarter: u64,
    pub invalid: u64,
    pub general_position: u64,
    pub accepted: u64,
    pub identified: u64,
    pub unfingerprinted: u64,
    /// Accepted entries whose sum is below the bound for their crossing number.
    pub bound_violations: u64,
    /// Lowest sum per identified name (multi-candidate names count for each).
    pub best: BTreeMap<String, BestRecord>,
}

impl SearchStats {
    fn record(&mut self, outcome: &Outcome) {
        self.attempted += 1;
        match outcome {
            Outcome::Rejected(Rejection::Quarter) => self.rejected_quarter += 1,
            Outcome::Rejected(Rejection::Invalid) => self.invalid += 1,
            Outcome::Rejected(Rejection::GeneralPosition) => self.general_position += 1,
            Outcome::Accepted(e) => {
                self.accepted += 1;
                if e.fingerprint.is_none() {
                    self.unfingerprinted += 1;
                }
                if !e.names.is_empty() {
                    self.identified += 1;
                }
                if let Some(n) = e.known_crossing_number() {
                    if (e.sum as u64) < sim_lower_bound(n) {
                        self.bound_violations += 1;
                    }
                }
                for name in &e.names {
                    let better = self.best.get(name).is_none_or(|b| e.sum < b.sum);
                    if better {
                        self.best.insert(
                            name.clone(),
                            BestRecord {
                                sum: e.sum,
                                index: e.index,
                            },
                        );
                    }
                }
            }
        }
    }
}

/// Runs the search on a pool of `threads` workers (0 = rayon default) and
/// writes one JSON line per accepted sample, in sample order.
pub fn run_search<W: Write>(cfg: &SearchConfig, threads: usize, sink: &mut W) -> Result<SearchStats, SearchError> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| SearchError::Config(e.to_string()))?;
    let mut stats = SearchStats::default();
    let mut written = 0u64;
    let mut start = 0u64;
    while start < cfg.samples {
        let end = (start + BATCH).min(cfg.samples);
        let outcomes: Vec<Result<Outcome, SearchError>> =
            pool.install(|| (start..end).into_par_iter().map(|i| run_sample(cfg, i)).collect());
        for outcome in outcomes {
            let outcome = outcome?;
            stats.record(&outcome);
            if let Outcome::Accepted(entry) = &outcome {
                let line = serde_json::to_string(entry).expect("catalog entries serialize");
                writeln!(sink, "{line}").map_err(|source| SearchError::Sink { written, source })?;
                written += 1;
            }
        }
        start = end;
    }
    sink.flush().map_err(|source| SearchError::Sink { written, source })?;
    Ok(stats)
}

/// Parses a catalog written by [`run_search`].
pub fn read_catalog(text: &str) -> Result<Vec<CatalogEntry>, serde_json::Error> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(serde_json::from_str)
        .collect()
}
