//! Delay measurement: the time between consecutive solution emissions,
//! including the gap from the start of enumeration to the first solution and
//! the gap from the last solution to termination.

mod recipe;

pub use recipe::{generate_graph, Family, GraphRecipe};

use std::fmt::Write as _;
use std::io;
use std::time::{Duration, Instant};

use crate::error::Result;
use crate::graph::Graph;
use crate::search::{enumerate, Algorithm, EnumOptions};

#[derive(Debug, Clone, PartialEq)]
pub struct DelayReport {
    pub algorithm: Algorithm,
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub delta: usize,
    pub dictionary: &'static str,
    pub total_solutions: u64,
    pub truncated: bool,
    pub total_time: Duration,
    pub max_delay: Duration,
    pub p50_delay: Duration,
    pub p99_delay: Duration,
    pub dict_lookups: u64,
    pub articulation_time: Duration,
    pub neighborhood_time: Duration,
    pub common_neighborhood_time: Duration,
}

/// Nearest-rank percentile of an ascending slice.
fn percentile(sorted: &[Duration], q: f64) -> Duration {
    if sorted.is_empty() {
        return Duration::ZERO;
    }
    let rank = (q * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

/// Runs one timed enumeration. `options.timed` is forced on.
pub fn run_benchmark(
    g: &Graph,
    k: usize,
    algorithm: Algorithm,
    graph_id: &str,
    options: &EnumOptions,
) -> Result<DelayReport> {
    let options = EnumOptions {
        timed: true,
        ..options.clone()
    };
    let mut gaps = Vec::new();
    let start = Instant::now();
    let mut last = start;
    let stats = enumerate(g, k, algorithm, &options, |_| {
        let now = Instant::now();
        gaps.push(now - last);
        last = now;
    })?;
    let end = Instant::now();
    gaps.push(end - last);
    gaps.sort_unstable();

    Ok(DelayReport {
        algorithm,
        graph_id: graph_id.to_string(),
        n: g.vertex_count(),
        m: g.edge_count(),
        k,
        delta: g.max_degree(),
        dictionary: options.dictionary.as_str(),
        total_solutions: stats.solutions,
        truncated: stats.truncated,
        total_time: end - start,
        max_delay: *gaps.last().unwrap(),
        p50_delay: percentile(&gaps, 0.50),
        p99_delay: percentile(&gaps, 0.99),
        dict_lookups: stats.dict_lookups,
        articulation_time: stats.articulation_time,
        neighborhood_time: stats.neighborhood_time,
        common_neighborhood_time: stats.common_neighborhood_time,
    })
}

const COLUMNS: [&str; 17] = [
    "algorithm",
    "graph_id",
    "n",
    "m",
    "k",
    "delta",
    "dictionary",
    "total_solutions",
    "truncated",
    "total_time_ns",
    "max_delay_ns",
    "p50_delay_ns",
    "p99_delay_ns",
    "dict_lookups",
    "articulation_time_ns",
    "neighborhood_time_ns",
    "common_neighborhood_time_ns",
];

impl DelayReport {
    fn values(&self) -> [String; 17] {
        let ns = |d: Duration| d.as_nanos().to_string();
        [
            self.algorithm.to_string(),
            self.graph_id.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.k.to_string(),
            self.delta.to_string(),
            self.dictionary.to_string(),
            self.total_solutions.to_string(),
            self.truncated.to_string(),
            ns(self.total_time),
            ns(self.max_delay),
            ns(self.p50_delay),
            ns(self.p99_delay),
            self.dict_lookups.to_string(),
            ns(self.articulation_time),
            ns(self.neighborhood_time),
            ns(self.common_neighborhood_time),
        ]
    }

    /// One `key=value` pair per line; durations in nanoseconds.
    pub fn to_key_value(&self) -> String {
        let mut out = String::new();
        for (key, value) in COLUMNS.iter().zip(self.values()) {
            let _ = writeln!(out, "{key}={value}");
        }
        out
    }
}

/// Writes a header row followed by one row per report (RFC 4180 quoting).
pub fn write_csv<W: io::Write>(writer: W, reports: &[DelayReport]) -> csv::Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record(COLUMNS)?;
    for report in reports {
        csv.write_record(report.values())?;
    }
    csv.flush()?;
    Ok(())
}
