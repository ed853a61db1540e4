use dpp_moea::bench::{
    read_csv, reference_front, run_matrix, summarize, totals, write_csv, BenchConfig, RunRecord, Totals, Verdict,
};
use dpp_moea::{igd, run, AlgoConfig, ProblemKind, ProblemSpec, SelectionStrategy};

fn small_matrix() -> BenchConfig {
    BenchConfig::from_toml_str(
        r#"
problems = ["dtlz2"]
objectives = [3]
pop_size = 20
max_evals = 600
strategies = ["dpp", "uniform"]
seeds = [1, 2, 3]
hv_samples = 2000
reference_points = 200
"#,
    )
    .unwrap()
}

fn csv_without_wall(records: &[RunRecord]) -> String {
    let mut stripped = records.to_vec();
    for r in &mut stripped {
        r.wall_ms = 0.0;
    }
    let mut out = Vec::new();
    write_csv(&mut out, &stripped).unwrap();
    String::from_utf8(out).unwrap()
}

#[test]
fn matrix_has_one_row_per_cell_and_is_repeatable() {
    let cfg = small_matrix();
    let first = run_matrix(&cfg, false).unwrap();
    assert!(first.is_complete());
    assert_eq!(first.records.len(), 6);
    let again = run_matrix(&cfg, true).unwrap();
    assert_eq!(csv_without_wall(&first.records), csv_without_wall(&again.records));

    let mut buf = Vec::new();
    write_csv(&mut buf, &first.records).unwrap();
    let back = read_csv(buf.as_slice()).unwrap();
    assert_eq!(csv_without_wall(&back), csv_without_wall(&first.records));
}

#[test]
fn matrix_row_equals_direct_library_call() {
    let cfg = BenchConfig {
        pop_size: Some(30),
        reference_points: Some(300),
        hv_samples: 1000,
        ..BenchConfig::single(ProblemKind::Dtlz2, 5, SelectionStrategy::Dpp, 7, 900)
    };
    let report = run_matrix(&cfg, false).unwrap();
    let row = &report.records[0];

    let spec = ProblemSpec::new(ProblemKind::Dtlz2, 5).unwrap();
    let reference = reference_front(&spec, Some(300)).unwrap();
    let direct = run(&AlgoConfig::new(spec, 30, 7).with_max_evals(900)).unwrap();
    assert_eq!(row.igd, igd(&direct.front(), &reference));
    assert_eq!(row.evals, direct.evaluations);
}

fn record(problem: &str, m: usize, strategy: &str, seed: u64, igd: f64) -> RunRecord {
    RunRecord {
        problem: problem.into(),
        m,
        d: m + 9,
        n: 100,
        strategy: strategy.into(),
        kernel: "cos".into(),
        seed,
        evals: 1000,
        igd,
        hv: 0.5,
        wall_ms: 1.0,
        trace_path: None,
    }
}

#[test]
fn totals_match_hand_count() {
    let mut records = Vec::new();
    // (problem, M, dpp offset, uniform offset): dpp clearly better twice,
    // clearly worse once, interleaved once
    let cells = [("dtlz1", 5, 0.0, 1.0), ("dtlz2", 5, 0.0, 1.0), ("wfg4", 5, 1.0, 0.0), ("maf1", 5, 0.0, 0.05)];
    for (problem, m, a, b) in cells {
        for seed in 0..5u64 {
            let jitter = seed as f64 * 0.1;
            records.push(record(problem, m, "dpp", seed, a + jitter));
            records.push(record(problem, m, "uniform", seed, b + jitter));
        }
    }
    let results = summarize(&records, "uniform").unwrap();
    assert_eq!(results.len(), 4);
    assert_eq!(
        totals(&results),
        Totals {
            better: 2,
            worse: 1,
            similar: 1
        }
    );
    let maf1 = results.iter().find(|r| r.problem == "maf1").unwrap();
    assert_eq!(maf1.verdict, Verdict::Similar);
}
