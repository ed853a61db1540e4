//! Samples the true front of every supported problem at three objectives and
//! prints the per-objective extent of each sample.

use dpp_moea::{true_pf_sample, ProblemKind, ProblemSpec, RngStream};

fn main() -> dpp_moea::Result<()> {
    let m = 3;
    let mut rng = RngStream::new(1);
    println!("{:<8} {:>3} {:>5}  ideal / nadir of 2000 front samples", "problem", "D", "pts");
    for kind in ProblemKind::ALL {
        let spec = ProblemSpec::new(kind, m)?;
        let front = true_pf_sample(&spec, 2000, &mut rng)?;
        let lo: Vec<String> = (0..m)
            .map(|i| format!("{:.2}", front.iter().map(|f| f[i]).fold(f64::INFINITY, f64::min)))
            .collect();
        let hi: Vec<String> = (0..m)
            .map(|i| format!("{:.2}", front.iter().map(|f| f[i]).fold(f64::NEG_INFINITY, f64::max)))
            .collect();
        println!("{:<8} {:>3} {:>5}  [{}] / [{}]", spec.name(), spec.d, front.len(), lo.join(", "), hi.join(", "));
    }
    Ok(())
}
