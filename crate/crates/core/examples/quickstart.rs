//! One full run on DTLZ2 with five objectives, reporting IGD against a
//! sampled true front.
//!
//! ```text
//! cargo run --release --example quickstart -- [seed] [evals] [strategy]
//! ```

use std::time::Instant;

use dpp_moea::bench::reference_front;
use dpp_moea::{igd, run, AlgoConfig, ProblemKind, ProblemSpec, SelectionStrategy};

fn main() -> dpp_moea::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    let evals: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(100_000);
    let strategy: SelectionStrategy = match args.next() {
        Some(s) => s.parse()?,
        None => SelectionStrategy::Dpp,
    };

    let spec = ProblemSpec::new(ProblemKind::Dtlz2, 5)?;
    let config = AlgoConfig::new(spec.clone(), 126, seed)
        .with_max_evals(evals)
        .with_strategy(strategy);

    let start = Instant::now();
    let result = run(&config)?;
    let elapsed = start.elapsed();

    let reference = reference_front(&spec, None)?;
    let front = result.front();
    println!("problem     {} (M={}, D={})", spec.name(), spec.m, spec.d);
    println!("strategy    {strategy}");
    println!("generations {}", result.trace.len() - 1);
    println!("evaluations {}", result.evaluations);
    println!("survivors   {}", front.len());
    println!("IGD         {:.5e}", igd(&front, &reference));
    println!("wall time   {:.2?}", elapsed);
    Ok(())
}
