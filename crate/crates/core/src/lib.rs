//! Many-objective evolutionary optimisation with determinantal point process
//! environmental selection.
//!
//! A run keeps a population and a corner-solution archive. Each generation
//! fills a convergence-biased mating pool, creates `N` offspring with SBX and
//! polynomial mutation, and keeps `N` survivors from the nondominated part of
//! parents plus offspring. When too many survive, a kernel
//! `L_xy = q(x) cos(x, y) q(y)` is built over normalized objectives and a
//! diverse, well-converged subset is chosen from it.
//!
//! ```no_run
//! use dpp_moea::{run, AlgoConfig, ProblemKind, ProblemSpec};
//!
//! let spec = ProblemSpec::new(ProblemKind::Dtlz2, 5).unwrap();
//! let result = run(&AlgoConfig::new(spec, 126, 42).with_max_evals(20_000)).unwrap();
//! println!("{} survivors", result.population.len());
//! ```

pub mod bench;
pub mod csa;
pub mod dpp;
pub mod error;
pub mod indicators;
pub mod moea;
pub mod normalize;
pub mod operators;
pub mod pareto;
pub mod problems;
pub mod rng;
pub mod solution;

pub use csa::{build_csa, update_csa, CornerArchive};
pub use dpp::{EigenMethod, KernelMatrix, SelectionStrategy, SimilarityMode};
pub use error::{Error, Result};
pub use indicators::{hv, igd, HvMode};
pub use moea::{environmental_selection, run, run_with_reference, AlgoConfig, GenerationTrace, RunResult};
pub use normalize::NormalizationContext;
pub use pareto::{dominates, nondominated_filter};
pub use problems::{true_pf_sample, ProblemKind, ProblemSpec};
pub use rng::RngStream;
pub use solution::{Population, Solution};
