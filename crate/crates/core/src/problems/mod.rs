//! Scalable benchmark problems.
//!
//! Problems are addressed by lowercase name (`"dtlz2"`, `"wfg7"`, `"maf3"`,
//! `"idtlz1"`). The decision dimension follows the usual settings:
//! `D = M - 1 + 5` for DTLZ1 and IDTLZ1, `D = M - 1 + 10` for everything else.
//! WFG problems use `k = M - 1` position and `l = 10` distance parameters.
//!
//! Scale constants: MaF4 multiplies objective `i` (1-based) by `2^i`, MaF5 by
//! `2^(M - i + 1)`; WFG objective `m` is scaled by `2m`.

mod dtlz;
mod front;
mod maf;
mod shapes;
mod wfg;

use std::fmt;
use std::str::FromStr;

use crate::error::{contract, Error, Result};

pub use front::{reference_size, true_pf_sample};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProblemKind {
    Dtlz1,
    Dtlz2,
    Dtlz3,
    Dtlz4,
    Dtlz5,
    Dtlz6,
    Idtlz1,
    Idtlz2,
    Wfg1,
    Wfg2,
    Wfg3,
    Wfg4,
    Wfg5,
    Wfg6,
    Wfg7,
    Wfg8,
    Wfg9,
    Maf1,
    Maf2,
    Maf3,
    Maf4,
    Maf5,
    Maf6,
    Maf7,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 24] = [
        ProblemKind::Dtlz1,
        ProblemKind::Dtlz2,
        ProblemKind::Dtlz3,
        ProblemKind::Dtlz4,
        ProblemKind::Dtlz5,
        ProblemKind::Dtlz6,
        ProblemKind::Idtlz1,
        ProblemKind::Idtlz2,
        ProblemKind::Wfg1,
        ProblemKind::Wfg2,
        ProblemKind::Wfg3,
        ProblemKind::Wfg4,
        ProblemKind::Wfg5,
        ProblemKind::Wfg6,
        ProblemKind::Wfg7,
        ProblemKind::Wfg8,
        ProblemKind::Wfg9,
        ProblemKind::Maf1,
        ProblemKind::Maf2,
        ProblemKind::Maf3,
        ProblemKind::Maf4,
        ProblemKind::Maf5,
        ProblemKind::Maf6,
        ProblemKind::Maf7,
    ];

    pub fn name(self) -> &'static str {
        use ProblemKind::*;
        match self {
            Dtlz1 => "dtlz1",
            Dtlz2 => "dtlz2",
            Dtlz3 => "dtlz3",
            Dtlz4 => "dtlz4",
            Dtlz5 => "dtlz5",
            Dtlz6 => "dtlz6",
            Idtlz1 => "idtlz1",
            Idtlz2 => "idtlz2",
            Wfg1 => "wfg1",
            Wfg2 => "wfg2",
            Wfg3 => "wfg3",
            Wfg4 => "wfg4",
            Wfg5 => "wfg5",
            Wfg6 => "wfg6",
            Wfg7 => "wfg7",
            Wfg8 => "wfg8",
            Wfg9 => "wfg9",
            Maf1 => "maf1",
            Maf2 => "maf2",
            Maf3 => "maf3",
            Maf4 => "maf4",
            Maf5 => "maf5",
            Maf6 => "maf6",
            Maf7 => "maf7",
        }
    }

    pub fn is_wfg(self) -> bool {
        use ProblemKind::*;
        matches!(self, Wfg1 | Wfg2 | Wfg3 | Wfg4 | Wfg5 | Wfg6 | Wfg7 | Wfg8 | Wfg9)
    }

    /// Number of distance variables appended to the `M - 1` position variables.
    fn distance_vars(self) -> usize {
        match self {
            ProblemKind::Dtlz1 | ProblemKind::Idtlz1 => 5,
            _ => 10,
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        ProblemKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::UnsupportedProblem(s.to_string()))
    }
}

/// A concrete problem instance: kind, objective count and box bounds.
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemSpec {
    pub kind: ProblemKind,
    pub m: usize,
    pub d: usize,
    pub bounds: Vec<(f64, f64)>,
}

impl ProblemSpec {
    pub fn new(kind: ProblemKind, m: usize) -> Result<Self> {
        if m < 2 {
            return Err(contract(format!("{kind} needs at least 2 objectives, got {m}")));
        }
        let d = m - 1 + kind.distance_vars();
        let bounds = if kind.is_wfg() {
            (1..=d).map(|i| (0.0, 2.0 * i as f64)).collect()
        } else {
            vec![(0.0, 1.0); d]
        };
        Ok(Self { kind, m, d, bounds })
    }

    pub fn by_name(name: &str, m: usize) -> Result<Self> {
        Self::new(name.parse()?, m)
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn check_decision(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.d {
            return Err(contract(format!(
                "{} expects {} decision variables, got {}",
                self.kind,
                self.d,
                x.len()
            )));
        }
        for (i, (&v, &(lo, hi))) in x.iter().zip(&self.bounds).enumerate() {
            if !(lo..=hi).contains(&v) {
                return Err(contract(format!(
                    "decision variable {i} = {v} outside [{lo}, {hi}]"
                )));
            }
        }
        Ok(())
    }

    /// Objective vector of `x`. Pure; rejects wrong-length or out-of-box input.
    pub fn evaluate(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_decision(x)?;
        Ok(self.evaluate_unchecked(x))
    }

    pub(crate) fn evaluate_unchecked(&self, x: &[f64]) -> Vec<f64> {
        use ProblemKind::*;
        let m = self.m;
        match self.kind {
            Dtlz1 => dtlz::dtlz1(x, m),
            Dtlz2 => dtlz::dtlz2(x, m),
            Dtlz3 => dtlz::dtlz3(x, m),
            Dtlz4 => dtlz::dtlz4(x, m),
            Dtlz5 => dtlz::dtlz5(x, m),
            Dtlz6 => dtlz::dtlz6(x, m),
            Idtlz1 => dtlz::idtlz1(x, m),
            Idtlz2 => dtlz::idtlz2(x, m),
            Wfg1 | Wfg2 | Wfg3 | Wfg4 | Wfg5 | Wfg6 | Wfg7 | Wfg8 | Wfg9 => {
                wfg::evaluate(self.kind, x, m)
            }
            Maf1 => maf::maf1(x, m),
            Maf2 => maf::maf2(x, m),
            Maf3 => maf::maf3(x, m),
            Maf4 => maf::maf4(x, m),
            Maf5 => maf::maf5(x, m),
            Maf6 => maf::maf6(x, m),
            Maf7 => maf::maf7(x, m),
        }
    }
}
