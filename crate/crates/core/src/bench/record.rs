//! Result rows and their CSV form.

use std::io::{Read, Write};
use std::path::PathBuf;

use serde::Deserialize;

use crate::error::Result;

pub const CSV_HEADER: [&str; 11] = [
    "problem", "M", "D", "N", "strategy", "kernel", "seed", "evals", "igd", "hv", "wall_ms",
];

#[derive(Clone, Debug, PartialEq, Deserialize)]
pub struct RunRecord {
    pub problem: String,
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "D")]
    pub d: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub strategy: String,
    pub kernel: String,
    pub seed: u64,
    pub evals: usize,
    pub igd: f64,
    pub hv: f64,
    pub wall_ms: f64,
    #[serde(skip)]
    pub trace_path: Option<PathBuf>,
}

/// Scientific notation with six significant digits.
pub fn sci(v: f64) -> String {
    format!("{v:.5e}")
}

impl RunRecord {
    pub fn csv_fields(&self) -> [String; 11] {
        [
            self.problem.clone(),
            self.m.to_string(),
            self.d.to_string(),
            self.n.to_string(),
            self.strategy.clone(),
            self.kernel.clone(),
            self.seed.to_string(),
            self.evals.to_string(),
            sci(self.igd),
            sci(self.hv),
            sci(self.wall_ms),
        ]
    }
}

pub fn write_csv<W: Write>(out: W, records: &[RunRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record(r.csv_fields())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<RunRecord>> {
    let mut rdr = csv::Reader::from_reader(input);
    let mut records = Vec::new();
    for row in rdr.deserialize() {
        records.push(row?);
    }
    Ok(records)
}
