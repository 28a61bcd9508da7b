//! Exhaustive extremal checks over labeled connected graphs and trees.
//!
//! Every graph in the search space is scored by its exact `d!·‖G‖_d^d`
//! (an integer), so minima and maxima are compared without rounding. The
//! space is split into strided shards that are processed in parallel and
//! merged with order-independent rules, so the output does not depend on
//! the worker count or schedule.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use crate::chs::{validate_degree, Expansion};
use crate::graph::{family, FamilyId, Graph};
use crate::io::emit_graph6;
use crate::rational::ExactRational;
use crate::spectra::eigenvalues;
use crate::walks::{closed_walk_counts, closed_walk_counts_native};

use super::bounds::{BoundCheck, BoundConstants};
use super::enumerate::{enumerate_connected_indexed, enumerate_trees_indexed, Indexed, Shard};
use super::AnalysisError;

/// How many argmin/argmax graphs are kept verbatim in a report.
pub const SAMPLE_LIMIT: usize = 16;
/// How many failing bound checks are kept verbatim.
pub const FAILURE_LIMIT: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Connected,
    Trees,
}

impl Mode {
    /// Family attaining the maximum: `K_n` for connected graphs, `S_n` for trees.
    pub fn upper_family(&self, n: usize) -> FamilyId {
        match self {
            Mode::Connected => FamilyId::Complete(n),
            Mode::Trees => FamilyId::Star(n),
        }
    }

    fn is_upper(&self, g: &Graph) -> bool {
        match self {
            Mode::Connected => g.is_complete(),
            Mode::Trees => g.is_star(),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Connected => "connected",
            Mode::Trees => "trees",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "connected" => Ok(Mode::Connected),
            "trees" => Ok(Mode::Trees),
            _ => Err(format!("unknown mode {s:?} (expected connected or trees)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalReport {
    pub n: usize,
    pub d: usize,
    pub mode: Mode,
    pub shard: Shard,
    pub scanned: u64,
    pub min_value: ExactRational,
    pub argmin_count: u64,
    /// graph6 of the first argmin graphs in enumeration order.
    pub argmin: Vec<String>,
    /// Whether every argmin graph is a path.
    pub argmin_all_paths: bool,
    pub max_value: ExactRational,
    pub argmax_count: u64,
    pub argmax: Vec<String>,
    /// Whether every argmax graph belongs to the upper family.
    pub argmax_all_upper: bool,
    pub path_value: ExactRational,
    pub upper_family: FamilyId,
    pub upper_value: ExactRational,
}

impl ExtremalReport {
    /// Values outside `[‖P_n‖_d^d, upper]` contradict the extremal theorem.
    pub fn out_of_range(&self) -> bool {
        self.min_value < self.path_value || self.max_value > self.upper_value
    }

    /// Whether both extremes equal the family values.
    pub fn attained(&self) -> bool {
        self.min_value == self.path_value && self.max_value == self.upper_value
    }

    /// A violation for a full scan; shards only need to stay in range.
    pub fn violation(&self) -> Option<String> {
        if self.out_of_range() {
            return Some(format!(
                "n={} d={} {}: scanned range [{}, {}] leaves [{}, {}]",
                self.n, self.d, self.mode, self.min_value, self.max_value, self.path_value, self.upper_value
            ));
        }
        if self.shard.is_all() && !self.attained() {
            return Some(format!(
                "n={} d={} {}: extremes [{}, {}] not attained by P{} and {}",
                self.n, self.d, self.mode, self.min_value, self.max_value, self.n, self.upper_family
            ));
        }
        None
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub n: usize,
    pub mode: Mode,
    pub degrees: Vec<usize>,
    /// Also evaluate the energy and spectral bounds on every graph.
    pub check_bounds: bool,
    pub shard: Shard,
    /// Worker threads; 0 uses the ambient rayon pool.
    pub jobs: usize,
}

impl SweepConfig {
    pub fn new(n: usize, mode: Mode, degrees: Vec<usize>) -> Self {
        Self { n, mode, degrees, check_bounds: false, shard: Shard::ALL, jobs: 0 }
    }
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub reports: Vec<ExtremalReport>,
    /// Number of (graph, d) bound evaluations.
    pub bounds_checked: u64,
    pub bound_failure_count: u64,
    pub bound_failures: Vec<BoundCheck>,
}

impl SweepOutcome {
    pub fn violations(&self) -> Vec<String> {
        let mut out: Vec<String> = self.reports.iter().filter_map(ExtremalReport::violation).collect();
        if self.bound_failure_count > 0 {
            out.push(format!("{} bound checks failed", self.bound_failure_count));
        }
        out
    }
}

#[derive(Debug, Clone)]
struct Extreme {
    value: Option<BigUint>,
    count: u64,
    samples: Vec<(u64, String)>,
    all_family: bool,
}

impl Extreme {
    fn new() -> Self {
        Self { value: None, count: 0, samples: Vec::new(), all_family: true }
    }

    fn offer(&mut self, value: &BigUint, better: std::cmp::Ordering, index: u64, g: &Graph, in_family: impl Fn(&Graph) -> bool) {
        let ord = match &self.value {
            None => better,
            Some(cur) => value.cmp(cur),
        };
        if ord == better || self.value.is_none() {
            self.value = Some(value.clone());
            self.count = 0;
            self.samples.clear();
            self.all_family = true;
        } else if ord != std::cmp::Ordering::Equal {
            return;
        }
        self.count += 1;
        self.all_family &= in_family(g);
        if self.samples.len() < SAMPLE_LIMIT {
            self.samples.push((index, emit_graph6(g)));
        }
    }

    fn merge(self, other: Self, better: std::cmp::Ordering) -> Self {
        let (a, b) = match (&self.value, &other.value) {
            (None, _) => return other,
            (_, None) => return self,
            (Some(x), Some(y)) => (x.clone(), y.clone()),
        };
        match b.cmp(&a) {
            o if o == better => other,
            std::cmp::Ordering::Equal => {
                let mut samples = self.samples;
                samples.extend(other.samples);
                samples.sort_unstable_by_key(|(i, _)| *i);
                samples.truncate(SAMPLE_LIMIT);
                Extreme {
                    value: self.value,
                    count: self.count + other.count,
                    samples,
                    all_family: self.all_family && other.all_family,
                }
            }
            _ => self,
        }
    }
}

#[derive(Debug, Clone)]
struct Partial {
    scanned: u64,
    mins: Vec<Extreme>,
    maxs: Vec<Extreme>,
    bounds_checked: u64,
    bound_failure_count: u64,
    bound_failures: Vec<(u64, BoundCheck)>,
}

impl Partial {
    fn new(degrees: usize) -> Self {
        Self {
            scanned: 0,
            mins: vec![Extreme::new(); degrees],
            maxs: vec![Extreme::new(); degrees],
            bounds_checked: 0,
            bound_failure_count: 0,
            bound_failures: Vec::new(),
        }
    }

    fn merge(self, other: Self) -> Self {
        let mut failures = self.bound_failures;
        failures.extend(other.bound_failures);
        failures.sort_by_key(|(i, c)| (*i, c.d));
        failures.truncate(FAILURE_LIMIT);
        Partial {
            scanned: self.scanned + other.scanned,
            mins: self.mins.into_iter().zip(other.mins).map(|(a, b)| a.merge(b, std::cmp::Ordering::Less)).collect(),
            maxs: self.maxs.into_iter().zip(other.maxs).map(|(a, b)| a.merge(b, std::cmp::Ordering::Greater)).collect(),
            bounds_checked: self.bounds_checked + other.bounds_checked,
            bound_failure_count: self.bound_failure_count + other.bound_failure_count,
            bound_failures: failures,
        }
    }
}

struct Scorer {
    mode: Mode,
    d_max: usize,
    expansions: Vec<Expansion>,
    bounds: Option<Vec<BoundConstants>>,
}

impl Scorer {
    fn numerators(&self, g: &Graph) -> Vec<BigUint> {
        if let Some(counts) = closed_walk_counts_native(g, self.d_max) {
            let native: Option<Vec<u128>> =
                self.expansions.iter().map(|e| e.scaled_numerator_native(&counts)).collect();
            if let Some(values) = native {
                return values.into_iter().map(BigUint::from).collect();
            }
        }
        let counts = closed_walk_counts(g, self.d_max);
        self.expansions.iter().map(|e| e.scaled_numerator(counts.as_slice())).collect()
    }

    fn visit(&self, acc: &mut Partial, (index, g): Indexed) -> Result<(), AnalysisError> {
        acc.scanned += 1;
        let values = self.numerators(&g);
        for (k, v) in values.iter().enumerate() {
            acc.mins[k].offer(v, std::cmp::Ordering::Less, index, &g, Graph::is_path);
            acc.maxs[k].offer(v, std::cmp::Ordering::Greater, index, &g, |g| self.mode.is_upper(g));
        }
        if let Some(constants) = &self.bounds {
            let spectrum = eigenvalues(&g)?;
            for ((v, e), c) in values.iter().zip(&self.expansions).zip(constants) {
                let exact = ExactRational::new(BigInt::from(v.clone()), BigInt::from(e.denominator().clone()));
                let check = c.check(&spectrum, exact.to_f64().powf(1.0 / e.degree() as f64));
                acc.bounds_checked += 1;
                if !check.all_ok() {
                    acc.bound_failure_count += 1;
                    if acc.bound_failures.len() < FAILURE_LIMIT {
                        let mut check = check;
                        check.graph = emit_graph6(&g);
                        acc.bound_failures.push((index, check));
                    }
                }
            }
        }
        Ok(())
    }
}

fn exact_value(g: &Graph, d: usize) -> ExactRational {
    Expansion::new(d).evaluate(&closed_walk_counts(g, d))
}

/// Scans every graph of the configured family once, scoring all requested
/// degrees (and optionally the bounds) in the same pass.
pub fn sweep(config: &SweepConfig) -> Result<SweepOutcome, AnalysisError> {
    if config.degrees.is_empty() {
        return Err(AnalysisError::InvalidParameter("at least one degree is required".into()));
    }
    for &d in &config.degrees {
        validate_degree(d)?;
    }
    let n = config.n;
    // validate the order up front
    match config.mode {
        Mode::Connected => drop(enumerate_connected_indexed(n, Shard::ALL)?),
        Mode::Trees => drop(enumerate_trees_indexed(n, Shard::ALL)?),
    }
    let d_max = *config.degrees.iter().max().expect("nonempty");
    let scorer = Scorer {
        mode: config.mode,
        d_max,
        expansions: config.degrees.iter().map(|&d| Expansion::new(d)).collect(),
        bounds: config
            .check_bounds
            .then(|| config.degrees.iter().map(|&d| BoundConstants::new(n, d)).collect()),
    };

    let run = || -> Result<Partial, AnalysisError> {
        let workers = rayon::current_num_threads().max(1) as u64;
        let pieces = config.shard.split(workers * 8);
        pieces
            .into_par_iter()
            .map(|piece| {
                let mut acc = Partial::new(config.degrees.len());
                match config.mode {
                    Mode::Connected => {
                        for item in enumerate_connected_indexed(n, piece)? {
                            scorer.visit(&mut acc, item)?;
                        }
                    }
                    Mode::Trees => {
                        for item in enumerate_trees_indexed(n, piece)? {
                            scorer.visit(&mut acc, item)?;
                        }
                    }
                }
                Ok(acc)
            })
            .try_reduce(|| Partial::new(config.degrees.len()), |a, b| Ok(a.merge(b)))
    };
    let partial = if config.jobs == 0 {
        run()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| AnalysisError::InvalidParameter(e.to_string()))?
            .install(run)?
    };

    let path = family(FamilyId::Path(n))?;
    let upper_family = config.mode.upper_family(n);
    let upper = family(upper_family)?;
    let reports = config
        .degrees
        .iter()
        .zip(partial.mins)
        .zip(partial.maxs)
        .map(|((&d, lo), hi)| {
            let denom = BigInt::from(crate::partitions::factorial(d));
            let value = |e: &Extreme| {
                e.value
                    .as_ref()
                    .map(|v| ExactRational::new(BigInt::from(v.clone()), denom.clone()))
                    .unwrap_or_else(ExactRational::zero)
            };
            ExtremalReport {
                n,
                d,
                mode: config.mode,
                shard: config.shard,
                scanned: partial.scanned,
                min_value: value(&lo),
                argmin_count: lo.count,
                argmin: lo.samples.into_iter().map(|(_, s)| s).collect(),
                argmin_all_paths: lo.all_family,
                max_value: value(&hi),
                argmax_count: hi.count,
                argmax: hi.samples.into_iter().map(|(_, s)| s).collect(),
                argmax_all_upper: hi.all_family,
                path_value: exact_value(&path, d),
                upper_family,
                upper_value: exact_value(&upper, d),
            }
        })
        .collect();
    Ok(SweepOutcome {
        reports,
        bounds_checked: partial.bounds_checked,
        bound_failure_count: partial.bound_failure_count,
        bound_failures: partial.bound_failures.into_iter().map(|(_, c)| c).collect(),
    })
}

/// Full scan for one degree; any graph below `P_n` or above `K_n`/`S_n`,
/// or extremes not attained by those families, is an error.
pub fn verify_theorem2(n: usize, d: usize, mode: Mode) -> Result<ExtremalReport, AnalysisError> {
    let outcome = sweep(&SweepConfig::new(n, mode, vec![d]))?;
    let report = outcome.reports.into_iter().next().expect("one degree requested");
    match report.violation() {
        Some(msg) => Err(AnalysisError::ExtremalViolation(msg)),
        None => Ok(report),
    }
}
