//! Benchmark sweeps over a game family, one CSV row per (n, algorithm).

use std::io;
use std::time::{Duration, Instant};

use pgame_core::random::FamilySpec;
use pgame_core::zielonka::SolveError;
use pgame_core::Family;
use serde::Serialize;
use thiserror::Error;

use crate::solve::{solve_with, Algorithm, SolveFailure};

/// One measurement. Stat columns are empty when the instance timed out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub family: String,
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub priorities: usize,
    pub algorithm: String,
    pub recursive_calls: Option<u64>,
    pub for_iterations: Option<u64>,
    pub attractor_edge_visits: Option<u64>,
    pub runtime_nanoseconds: Option<u128>,
    pub even_region_size: Option<usize>,
    pub odd_region_size: Option<usize>,
}

impl BenchRow {
    pub fn timed_out(&self) -> bool {
        self.recursive_calls.is_none()
    }
}

pub const CSV_HEADER: [&str; 12] = [
    "family",
    "n",
    "vertices",
    "edges",
    "priorities",
    "algorithm",
    "recursive_calls",
    "for_iterations",
    "attractor_edge_visits",
    "runtime_nanoseconds",
    "even_region_size",
    "odd_region_size",
];

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub family: Family,
    pub min: usize,
    pub max: usize,
    pub algorithms: Vec<Algorithm>,
    /// Wall-clock limit per instance.
    pub timeout: Option<Duration>,
    /// Seed for random families.
    pub seed: u64,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("{algorithm} cannot solve {family} at n = {n}: {source}")]
    Precondition {
        family: Family,
        n: usize,
        algorithm: Algorithm,
        source: SolveFailure,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Runs the sweep. Rows are ordered by `n`, then by the order of
/// `config.algorithms`. Once an algorithm times out, its rows for larger `n`
/// are reported as timed out without running.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>, BenchError> {
    let mut rows = Vec::new();
    let mut gave_up = vec![false; config.algorithms.len()];
    for n in config.min.max(1)..=config.max {
        let game = FamilySpec::new(config.family, n).with_seed(config.seed).generate();
        for (slot, &algorithm) in config.algorithms.iter().enumerate() {
            let mut row = BenchRow {
                family: config.family.name().to_string(),
                n,
                vertices: game.vertex_count(),
                edges: game.edge_count(),
                priorities: game.priority_count(),
                algorithm: algorithm.name().to_string(),
                recursive_calls: None,
                for_iterations: None,
                attractor_edge_visits: None,
                runtime_nanoseconds: None,
                even_region_size: None,
                odd_region_size: None,
            };
            if !gave_up[slot] {
                let start = Instant::now();
                let deadline = config.timeout.map(|t| start + t);
                let mut past_deadline = || deadline.is_some_and(|d| Instant::now() >= d);
                match solve_with(algorithm, &game, &mut past_deadline) {
                    Ok(solution) => {
                        let elapsed = start.elapsed();
                        if config.timeout.is_some_and(|t| elapsed > t) {
                            gave_up[slot] = true;
                        } else {
                            row.recursive_calls = Some(solution.stats.recursive_calls);
                            row.for_iterations = Some(solution.stats.for_iterations);
                            row.attractor_edge_visits = Some(solution.stats.attractor_edge_visits);
                            row.runtime_nanoseconds = Some(elapsed.as_nanos());
                            row.even_region_size = Some(solution.even.len());
                            row.odd_region_size = Some(solution.odd.len());
                        }
                    }
                    Err(SolveFailure::Solver(SolveError::Interrupted)) => gave_up[slot] = true,
                    Err(source) => {
                        return Err(BenchError::Precondition {
                            family: config.family,
                            n,
                            algorithm,
                            source,
                        })
                    }
                }
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Writes rows as CSV with a header line, even when `rows` is empty.
pub fn write_csv<W: io::Write>(rows: &[BenchRow], out: W) -> Result<(), BenchError> {
    let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    writer.write_record(CSV_HEADER)?;
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_matches_row_fields() {
        let rows = run_bench(&BenchConfig {
            family: Family::Weak,
            min: 1,
            max: 2,
            algorithms: vec![Algorithm::Recursive, Algorithm::Weak],
            timeout: None,
            seed: 0,
        })
        .unwrap();
        assert_eq!(rows.len(), 4);
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        assert!(lines.next().unwrap().starts_with("weak,1,4,"));
        for row in &rows {
            assert_eq!(row.even_region_size.unwrap() + row.odd_region_size.unwrap(), row.vertices);
        }
    }

    #[test]
    fn timed_out_rows_have_empty_stats() {
        let rows = run_bench(&BenchConfig {
            family: Family::Whitegame,
            min: 30,
            max: 31,
            algorithms: vec![Algorithm::Recursive],
            timeout: Some(Duration::from_millis(20)),
            seed: 0,
        })
        .unwrap();
        assert!(rows.iter().all(BenchRow::timed_out));
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.lines().nth(1).unwrap().ends_with("recursive,,,,,,"));
    }

    #[test]
    fn precondition_failures_abort() {
        let err = run_bench(&BenchConfig {
            family: Family::Solitaire,
            min: 1,
            max: 1,
            algorithms: vec![Algorithm::Weak],
            timeout: None,
            seed: 0,
        })
        .unwrap_err();
        assert!(matches!(err, BenchError::Precondition { n: 1, .. }));
    }
}
