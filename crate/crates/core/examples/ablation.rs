//! Greedy DPP, k-DPP sampling and uniform sampling as the environmental
//! selection on the same problem and seeds.
//!
//! ```text
//! cargo run --release --example ablation -- [problem] [objectives] [evals] [seeds]
//! ```

use dpp_moea::bench::reference_front;
use dpp_moea::indicators::default_pop_size;
use dpp_moea::{igd, run, AlgoConfig, ProblemSpec, SelectionStrategy};

fn main() -> dpp_moea::Result<()> {
    let mut args = std::env::args().skip(1);
    let problem = args.next().unwrap_or_else(|| "dtlz2".into());
    let m: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let evals: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(30_000);
    let seeds: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);

    let spec = ProblemSpec::by_name(&problem, m)?;
    let n = default_pop_size(m).unwrap_or(100);
    let reference = reference_front(&spec, None)?;

    for strategy in [SelectionStrategy::Dpp, SelectionStrategy::KDpp, SelectionStrategy::Uniform] {
        let mut values = Vec::new();
        for seed in 0..seeds {
            let cfg = AlgoConfig::new(spec.clone(), n, seed)
                .with_max_evals(evals)
                .with_strategy(strategy);
            values.push(igd(&run(&cfg)?.front(), &reference));
        }
        values.sort_by(f64::total_cmp);
        let line: Vec<String> = values.iter().map(|v| format!("{v:.4}")).collect();
        println!("{strategy:<8} median {:.4}   [{}]", values[values.len() / 2], line.join(" "));
    }
    Ok(())
}
