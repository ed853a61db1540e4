//! Greedy DPP selection against random subsets on a sampled DTLZ2 front.
//!
//! Picks 100 of 500 front points with a cosine kernel of unit quality and
//! compares the smallest pairwise angle of the pick with that of random
//! subsets of the same size.

use dpp_moea::dpp::{dpp_select_greedy, kernel_from_parts, uniform_sample};
use dpp_moea::{true_pf_sample, ProblemKind, ProblemSpec, RngStream, SimilarityMode};

fn min_angle_deg(points: &[Vec<f64>], subset: &[usize]) -> f64 {
    let unit: Vec<Vec<f64>> = subset
        .iter()
        .map(|&i| {
            let n = points[i].iter().map(|v| v * v).sum::<f64>().sqrt();
            points[i].iter().map(|v| v / n).collect()
        })
        .collect();
    let mut best = f64::INFINITY;
    for a in 0..unit.len() {
        for b in a + 1..unit.len() {
            let c: f64 = unit[a].iter().zip(&unit[b]).map(|(x, y)| x * y).sum();
            best = best.min(c.clamp(-1.0, 1.0).acos());
        }
    }
    best.to_degrees()
}

fn main() -> dpp_moea::Result<()> {
    let spec = ProblemSpec::new(ProblemKind::Dtlz2, 3)?;
    let mut rng = RngStream::new(2024);
    let points = true_pf_sample(&spec, 500, &mut rng)?;
    let refs: Vec<&[f64]> = points.iter().map(|p| p.as_slice()).collect();
    let kernel = kernel_from_parts(&refs, &vec![1.0; refs.len()], SimilarityMode::Cos);

    let picked = dpp_select_greedy(&kernel, 100)?;
    println!("greedy DPP    min angle {:6.3} deg", min_angle_deg(&points, &picked));
    for trial in 0..5 {
        let random = uniform_sample(points.len(), 100, &mut rng)?;
        println!("random #{trial}     min angle {:6.3} deg", min_angle_deg(&points, &random));
    }
    Ok(())
}
