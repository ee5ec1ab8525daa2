//! Timing harness: solve generated instances and set the measured time
//! against the analytic work term Σ|C_i|²|C_{i+1}|² + |C_t|².

use std::fmt::Write as _;

use crate::dp::solve_unchecked;
use crate::error::{Error, Result};
use crate::gen::{generate, GenParams, GenSpec, Model};
use crate::graph::{build_overlap_graph, sweep_maximal_cliques, validate_arrangement};

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub model: Model,
    pub seed: u64,
    pub reps: usize,
    pub params: GenParams,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub model: Model,
    pub n: usize,
    pub rep: usize,
    pub t: usize,
    pub max_clique: usize,
    pub work: u128,
    pub count: usize,
    pub elapsed_ns: u128,
}

pub const CSV_HEADER: &str = "model,n,rep,t,max_clique,work,count,elapsed_ns";

impl BenchRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.model,
            self.n,
            self.rep,
            self.t,
            self.max_clique,
            self.work,
            self.count,
            self.elapsed_ns
        )
    }

    /// Nanoseconds per unit of work.
    pub fn ratio(&self) -> f64 {
        self.elapsed_ns as f64 / self.work.max(1) as f64
    }
}

/// One row per (size, repetition), sizes in the given order. Every
/// repetition solves the same instance.
pub fn run(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    if config.reps == 0 {
        return Err(Error::InvalidSpec("reps must be at least 1".into()));
    }
    if config.sizes.is_empty() {
        return Err(Error::InvalidSpec("no sizes given".into()));
    }
    let mut rows = Vec::with_capacity(config.sizes.len() * config.reps);
    for &n in &config.sizes {
        let spec = GenSpec::new(config.model, n, config.seed).with_params(config.params.clone());
        let instance = generate(&spec)?;
        let arrangement = sweep_maximal_cliques(&instance)?;
        let report = validate_arrangement(&build_overlap_graph(&instance), &arrangement);
        if !report.is_valid() {
            return Err(Error::InvalidArrangement(report));
        }
        for rep in 0..config.reps {
            let solution = solve_unchecked(&arrangement);
            rows.push(BenchRow {
                model: config.model,
                n,
                rep,
                t: arrangement.len(),
                max_clique: arrangement.clique_sizes().into_iter().max().unwrap_or(0),
                work: arrangement.work_term(),
                count: solution.count,
                elapsed_ns: solution.elapsed.as_nanos(),
            });
        }
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let _ = writeln!(out, "{}", row.to_csv());
    }
    out
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = logs.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = logs.iter().map(|&(x, _)| (x - mx).powi(2)).sum();
    sxy / sxx
}
