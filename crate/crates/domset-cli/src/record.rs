//! Machine-readable run records.
//!
//! One [`RunRecord`] per solve; bench sweeps aggregate repeats into
//! [`BenchRow`]s (one CSV row per instance/algorithm pair). Both round-trip
//! through JSON and the fixed-column CSV encoding below.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub instance: String,
    pub n: usize,
    pub edge_count: usize,
    pub algorithm: String,
    pub scope: String,
    pub m: usize,
    pub seed: u64,
    pub vc: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rounds: Option<usize>,
    pub wall_ms: f64,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub solution: Option<Vec<u32>>,
}

pub const RECORD_CSV_HEADER: &str =
    "instance,n,edge_count,algorithm,scope,m,seed,vc,k,size,rounds,wall_ms,verified,solution";

impl RunRecord {
    pub fn to_csv_row(&self) -> String {
        let k = self.k.map(|v| v.to_string()).unwrap_or_default();
        let rounds = self.rounds.map(|v| v.to_string()).unwrap_or_default();
        let solution = self
            .solution
            .as_ref()
            .map(|s| {
                s.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.instance,
            self.n,
            self.edge_count,
            self.algorithm,
            self.scope,
            self.m,
            self.seed,
            self.vc,
            k,
            self.size,
            rounds,
            self.wall_ms,
            self.verified,
            solution
        )
    }

    pub fn from_csv_row(row: &str) -> Option<RunRecord> {
        let fields: Vec<&str> = row.split(',').collect();
        if fields.len() != 14 {
            return None;
        }
        let opt_usize = |s: &str| -> Option<usize> { s.parse().ok() };
        Some(RunRecord {
            instance: fields[0].to_string(),
            n: fields[1].parse().ok()?,
            edge_count: fields[2].parse().ok()?,
            algorithm: fields[3].to_string(),
            scope: fields[4].to_string(),
            m: fields[5].parse().ok()?,
            seed: fields[6].parse().ok()?,
            vc: fields[7].to_string(),
            k: opt_usize(fields[8]),
            size: fields[9].parse().ok()?,
            rounds: opt_usize(fields[10]),
            wall_ms: fields[11].parse().ok()?,
            verified: fields[12].parse().ok()?,
            solution: if fields[13].is_empty() {
                None
            } else {
                Some(
                    fields[13]
                        .split_whitespace()
                        .map(|t| t.parse().unwrap())
                        .collect(),
                )
            },
        })
    }
}

/// Aggregated bench result for one instance/algorithm pair.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub edge_count: usize,
    pub algorithm: String,
    pub scope: String,
    pub m: usize,
    pub seed: u64,
    pub vc: String,
    pub repeat: usize,
    pub size_min: usize,
    pub size_mean: f64,
    pub wall_ms_mean: f64,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

pub const BENCH_CSV_HEADER: &str =
    "instance,n,edge_count,algorithm,scope,m,seed,vc,repeat,size_min,size_mean,wall_ms_mean,verified,error";

impl BenchRow {
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.instance,
            self.n,
            self.edge_count,
            self.algorithm,
            self.scope,
            self.m,
            self.seed,
            self.vc,
            self.repeat,
            self.size_min,
            self.size_mean,
            self.wall_ms_mean,
            self.verified,
            self.error.clone().unwrap_or_default()
        )
    }

    pub fn error_row(instance: &str, algorithm: &str, message: &str) -> BenchRow {
        BenchRow {
            instance: instance.to_string(),
            n: 0,
            edge_count: 0,
            algorithm: algorithm.to_string(),
            scope: String::new(),
            m: 0,
            seed: 0,
            vc: String::new(),
            repeat: 0,
            size_min: 0,
            size_mean: 0.0,
            wall_ms_mean: 0.0,
            verified: false,
            error: Some(message.replace(',', ";")),
        }
    }
}
