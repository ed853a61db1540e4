//! A small benchmark matrix from an inline config, written as CSV to stdout
//! and summarized with rank-sum verdicts against the greedy DPP baseline.

use dpp_moea::bench::{markdown, run_matrix, summarize, write_csv, BenchConfig};

const CONFIG: &str = r#"
problems = ["dtlz2", "wfg4"]
objectives = [3]
pop_size = 60
max_evals = 6000
strategies = ["dpp", "uniform"]
seeds = 5
hv_samples = 100000
"#;

fn main() -> dpp_moea::Result<()> {
    let cfg = BenchConfig::from_toml_str(CONFIG)?;
    let report = run_matrix(&cfg, true)?;
    for (cell, err) in &report.failures {
        eprintln!("{cell}: {err}");
    }
    write_csv(std::io::stdout().lock(), &report.records)?;
    println!();
    print!("{}", markdown(&summarize(&report.records, "dpp")?));
    Ok(())
}
