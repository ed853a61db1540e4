//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion does.

use std::io::Write;
use std::time::Instant;

use dpp_moea::bench::{reference_front, run_matrix, write_csv, BenchConfig};
use dpp_moea::dpp::{
    build_kernel, dpp_select_greedy, eigendecompose, eigendecompose_with, kdpp_sample, kernel_from_parts, uniform_sample,
};
use dpp_moea::indicators::{default_pop_size, layer_divisions, two_layer_size};
use dpp_moea::pareto::nondominated_indices;
use dpp_moea::{
    build_csa, hv, igd, run, AlgoConfig, EigenMethod, HvMode, KernelMatrix, NormalizationContext, Population, ProblemKind,
    ProblemSpec, RngStream, SelectionStrategy, SimilarityMode,
};
use nalgebra::DMatrix;
use rand::Rng;
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    if v.len() % 2 == 1 {
        v[mid]
    } else {
        0.5 * (v[mid - 1] + v[mid])
    }
}

const SEEDS: [u64; 5] = [0, 1, 2, 3, 4];
const BUDGET: usize = 100_000;

/// Final IGD of five seeded runs per strategy.
fn igd_runs(kind: ProblemKind, strategies: &[SelectionStrategy]) -> Vec<Vec<f64>> {
    let spec = ProblemSpec::new(kind, 5).unwrap();
    let n = default_pop_size(5).unwrap();
    let reference = reference_front(&spec, None).unwrap();
    let jobs: Vec<(usize, u64)> = (0..strategies.len()).flat_map(|s| SEEDS.map(|seed| (s, seed))).collect();
    let values: Vec<f64> = jobs
        .par_iter()
        .map(|&(s, seed)| {
            let cfg = AlgoConfig::new(spec.clone(), n, seed)
                .with_max_evals(BUDGET)
                .with_strategy(strategies[s]);
            igd(&run(&cfg).unwrap().front(), &reference)
        })
        .collect();
    values.chunks(SEEDS.len()).map(|c| c.to_vec()).collect()
}

fn fmt_values(v: &[f64]) -> String {
    v.iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>().join(", ")
}

fn dtlz2_quality(runs: &[Vec<f64>]) -> Outcome {
    let m = median(&runs[0]);
    outcome(m <= 0.25, format!("DTLZ2 M=5 dpp median IGD {m:.4} (runs {}) <= 0.25", fmt_values(&runs[0])))
}

fn ablation_ordering(runs: &[Vec<f64>]) -> Outcome {
    let (dpp, uniform, kdpp) = (median(&runs[0]), median(&runs[1]), median(&runs[2]));
    let ratio = dpp / uniform;
    let gap = (kdpp - dpp).abs() / dpp;
    outcome(
        ratio <= 0.6 && gap <= 0.25,
        format!("dpp/uniform = {dpp:.4}/{uniform:.4} = {ratio:.3} <= 0.6; |kdpp - dpp|/dpp = {gap:.3} <= 0.25 (kdpp {kdpp:.4})"),
    )
}

fn dtlz1_quality() -> Outcome {
    let runs = igd_runs(ProblemKind::Dtlz1, &[SelectionStrategy::Dpp]);
    let m = median(&runs[0]);
    outcome(m <= 0.10, format!("DTLZ1 M=5 dpp median IGD {m:.4} (runs {}) <= 0.10", fmt_values(&runs[0])))
}

fn min_angle(points: &[Vec<f64>], subset: &[usize]) -> f64 {
    let mut best = f64::INFINITY;
    for (a, &i) in subset.iter().enumerate() {
        for &j in &subset[a + 1..] {
            let dot: f64 = points[i].iter().zip(&points[j]).map(|(x, y)| x * y).sum();
            let norms = points[i].iter().map(|v| v * v).sum::<f64>().sqrt() * points[j].iter().map(|v| v * v).sum::<f64>().sqrt();
            best = best.min((dot / norms).clamp(-1.0, 1.0).acos());
        }
    }
    best
}

fn spread_property() -> Outcome {
    let spec = ProblemSpec::new(ProblemKind::Dtlz2, 3).unwrap();
    let mut wins = 0;
    for trial in 0..100u64 {
        let mut rng = RngStream::new(1000 + trial);
        let pts = dpp_moea::true_pf_sample(&spec, 500, &mut rng).unwrap();
        let refs: Vec<&[f64]> = pts.iter().map(|p| p.as_slice()).collect();
        let l = kernel_from_parts(&refs, &vec![1.0; pts.len()], SimilarityMode::Cos);
        let picked = dpp_select_greedy(&l, 100).unwrap();
        let random: Vec<f64> = (0..100)
            .map(|_| min_angle(&pts, &uniform_sample(500, 100, &mut rng).unwrap()))
            .collect();
        if min_angle(&pts, &picked) > median(&random) {
            wins += 1;
        }
    }
    outcome(wins >= 95, format!("greedy beats median random min-angle in {wins}/100 trials (>= 95)"))
}

fn kernel_psd() -> Outcome {
    let mut rng = RngStream::new(5);
    let mut worst_eig = f64::INFINITY;
    let mut worst_sym: f64 = 0.0;
    for _ in 0..100 {
        let n = rng.random_range(10..=300);
        let m = [3, 5, 10][rng.random_range(0..3)];
        let scale: Vec<f64> = (0..m).map(|_| rng.random_range(0.1..100.0)).collect();
        let pop = Population::from_objectives(
            (0..n)
                .map(|_| scale.iter().map(|s| s * rng.random::<f64>()).collect::<Vec<f64>>())
                .collect::<Vec<_>>(),
        );
        let ctx = NormalizationContext::from_population(&pop).unwrap();
        let csa = build_csa(&pop, n, m);
        let l = build_kernel(&pop, &csa, &ctx, SimilarityMode::Cos).unwrap();
        worst_sym = worst_sym.max(l.asymmetry());
        let eig = eigendecompose(&l).unwrap();
        let max = eig.values[0];
        let min = eig.values[eig.values.len() - 1];
        worst_eig = worst_eig.min(min / max);
    }
    outcome(
        worst_eig >= -1e-8 && worst_sym <= 1e-12,
        format!("worst min/max eigenvalue {worst_eig:.3e} >= -1e-8; worst asymmetry {worst_sym:.3e} <= 1e-12"),
    )
}

fn eigen_oracle() -> Outcome {
    let mut rng = RngStream::new(6);
    let mut details = Vec::new();
    let mut pass = true;
    let matrices: Vec<KernelMatrix> = [5, 20, 50, 100, 200, 300]
        .into_iter()
        .map(|n| {
            let a = DMatrix::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0));
            let g = a.transpose() * &a;
            KernelMatrix::from_fn(n, |i, j| 0.5 * (g[(i, j)] + g[(j, i)]))
        })
        .collect();
    for method in [EigenMethod::Jacobi, EigenMethod::Tridiagonal] {
        let mut worst_rec: f64 = 0.0;
        let mut worst_orth: f64 = 0.0;
        let mut secs = 0.0;
        for l in &matrices {
            let start = Instant::now();
            let eig = eigendecompose_with(l, method).unwrap();
            if l.size() == 300 {
                secs = start.elapsed().as_secs_f64();
            }
            worst_rec = worst_rec.max(eig.reconstruction_error(l) / l.frobenius());
            worst_orth = worst_orth.max(eig.orthonormality_error());
        }
        pass &= worst_rec <= 1e-8 && worst_orth <= 1e-10 && secs <= 5.0;
        details.push(format!(
            "{method:?}: reconstruction {worst_rec:.2e} <= 1e-8, orthonormality {worst_orth:.2e} <= 1e-10, n=300 in {secs:.3}s <= 5s"
        ));
    }
    outcome(pass, details.join("; "))
}

fn kdpp_statistics() -> Outcome {
    let rows = vec![
        vec![2.0, 0.6, 0.2, 0.1],
        vec![0.6, 1.5, 0.4, 0.3],
        vec![0.2, 0.4, 1.0, 0.5],
        vec![0.1, 0.3, 0.5, 1.2],
    ];
    let l = KernelMatrix::from_rows(&rows).unwrap();
    let pairs: Vec<[usize; 2]> = (0..4).flat_map(|i| (i + 1..4).map(move |j| [i, j])).collect();
    let dets: Vec<f64> = pairs
        .iter()
        .map(|&[i, j]| rows[i][i] * rows[j][j] - rows[i][j] * rows[j][i])
        .collect();
    let z: f64 = dets.iter().sum();
    let total = 100_000;
    let mut counts = [0usize; 6];
    let mut rng = RngStream::new(7);
    for _ in 0..total {
        let mut s = kdpp_sample(&l, 2, &mut rng).unwrap();
        s.sort();
        counts[pairs.iter().position(|p| p[..] == s[..]).unwrap()] += 1;
    }
    let mut worst: f64 = 0.0;
    for (c, d) in counts.iter().zip(&dets) {
        let p = d / z;
        let sigma = (total as f64 * p * (1.0 - p)).sqrt();
        worst = worst.max((*c as f64 - total as f64 * p).abs() / sigma);
    }
    outcome(worst <= 3.0, format!("largest deviation {worst:.2} sigma over 6 subsets (<= 3)"))
}

fn population_sizing() -> Outcome {
    let got: Vec<(usize, Option<(usize, usize)>, Option<usize>)> =
        [5, 10, 15].iter().map(|&m| (m, layer_divisions(m), default_pop_size(m))).collect();
    let pass = two_layer_size(5, 5, 0) == 126
        && two_layer_size(10, 3, 1) == 230
        && two_layer_size(15, 2, 2) == 240
        && got == vec![(5, Some((5, 0)), Some(126)), (10, Some((3, 1)), Some(230)), (15, Some((2, 2)), Some(240))];
    outcome(pass, format!("(M, divisions, N) = {got:?}"))
}

fn exact_hv_2d(points: &[Vec<f64>], r: &[f64]) -> f64 {
    let mut pts: Vec<&Vec<f64>> = points.iter().filter(|p| p[0] < r[0] && p[1] < r[1]).collect();
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]));
    let mut area = 0.0;
    let mut ceiling = r[1];
    for p in pts {
        if p[1] < ceiling {
            area += (r[0] - p[0]) * (ceiling - p[1]);
            ceiling = p[1];
        }
    }
    area
}

fn indicator_oracles() -> Outcome {
    let mut rng = RngStream::new(9);
    let mut worst_igd: f64 = 0.0;
    for _ in 0..50 {
        let m = rng.random_range(2..=6);
        let na = rng.random_range(1..=60);
        let nr = rng.random_range(20..=100);
        let mut cloud = |k: usize| -> Vec<Vec<f64>> { (0..k).map(|_| (0..m).map(|_| rng.random::<f64>()).collect()).collect() };
        let a = cloud(na);
        let r = cloud(nr);
        let mut total = 0.0;
        for p in &r {
            let mut best = f64::INFINITY;
            for q in &a {
                let d: f64 = p.iter().zip(q).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt();
                best = best.min(d);
            }
            total += best;
        }
        worst_igd = worst_igd.max((igd(&a, &r) - total / nr as f64).abs());
    }
    let mut worst_hv: f64 = 0.0;
    for _ in 0..5 {
        let front: Vec<Vec<f64>> = (0..20)
            .map(|_| {
                let t: f64 = rng.random();
                vec![t, (1.0 - t * t).sqrt() * rng.random_range(0.8..1.0)]
            })
            .collect();
        let r = [1.1, 1.1];
        let mc = hv(&front, &r, HvMode::MonteCarlo, 1_000_000, &mut rng).unwrap();
        worst_hv = worst_hv.max((mc - exact_hv_2d(&front, &r)).abs());
    }
    outcome(
        worst_igd <= 1e-12 && worst_hv <= 0.01,
        format!("IGD vs double loop {worst_igd:.2e} <= 1e-12 on 50 fixtures; MC HV error {worst_hv:.4} <= 0.01"),
    )
}

fn nondominated_oracle() -> Outcome {
    let mut rng = RngStream::new(10);
    let mut mismatches = 0;
    for trial in 0..200 {
        let n = rng.random_range(1..=200);
        let m = rng.random_range(2..=10);
        let gridded = trial % 2 == 0;
        let pts: Vec<Vec<f64>> = (0..n)
            .map(|_| {
                (0..m)
                    .map(|_| if gridded { rng.random_range(0..4) as f64 } else { rng.random() })
                    .collect()
            })
            .collect();
        let dominated = |a: &[f64], b: &[f64]| a.iter().zip(b).all(|(x, y)| x <= y) && a.iter().zip(b).any(|(x, y)| x < y);
        let want: Vec<usize> = (0..n).filter(|&i| !(0..n).any(|j| dominated(&pts[j], &pts[i]))).collect();
        let refs: Vec<&[f64]> = pts.iter().map(|p| p.as_slice()).collect();
        if nondominated_indices(&refs) != want {
            mismatches += 1;
        }
    }
    outcome(mismatches == 0, format!("{mismatches} mismatches over 200 random populations"))
}

fn csv_without_wall(cfg: &BenchConfig, parallel: bool) -> String {
    let report = run_matrix(cfg, parallel).unwrap();
    assert!(report.is_complete());
    let mut buf = Vec::new();
    write_csv(&mut buf, &report.records).unwrap();
    String::from_utf8(buf)
        .unwrap()
        .lines()
        .map(|l| l.rsplit_once(',').unwrap().0.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn determinism() -> Outcome {
    let cfg = BenchConfig::from_toml_str(
        r#"
problems = ["dtlz2", "wfg4"]
objectives = [3, 5]
pop_size = 40
max_evals = 4000
strategies = ["dpp", "kdpp", "uniform"]
seeds = 2
hv_samples = 20000
reference_points = 500
"#,
    )
    .unwrap();
    let serial = csv_without_wall(&cfg, false);
    let parallel = csv_without_wall(&cfg, true);
    let rows = serial.lines().count() - 1;
    outcome(serial == parallel, format!("serial and parallel CSV identical over {rows} rows: {}", serial == parallel))
}

#[test]
fn acceptance_criteria() {
    let dtlz2 = igd_runs(
        ProblemKind::Dtlz2,
        &[SelectionStrategy::Dpp, SelectionStrategy::Uniform, SelectionStrategy::KDpp],
    );
    let checks: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("DTLZ2 M=5 end-to-end quality", Box::new(|| dtlz2_quality(&dtlz2))),
        ("ablation ordering", Box::new(|| ablation_ordering(&dtlz2))),
        ("DTLZ1 M=5 end-to-end quality", Box::new(dtlz1_quality)),
        ("spread property", Box::new(spread_property)),
        ("kernel PSD suite", Box::new(kernel_psd)),
        ("eigendecomposition oracle", Box::new(eigen_oracle)),
        ("k-DPP statistics", Box::new(kdpp_statistics)),
        ("population sizing", Box::new(population_sizing)),
        ("indicator oracles", Box::new(indicator_oracles)),
        ("nondominated filter oracle", Box::new(nondominated_oracle)),
        ("serial/parallel determinism", Box::new(determinism)),
    ];
    let mut failed = Vec::new();
    let stdout = std::io::stdout();
    for (i, (name, check)) in checks.iter().enumerate() {
        let o = check();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        // direct write so the lines show without --nocapture
        writeln!(stdout.lock(), "criterion {:>2} {verdict}: {name}: {}", i + 1, o.detail).unwrap();
        if !o.pass {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
