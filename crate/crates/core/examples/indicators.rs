//! IGD and hypervolume on a hand-made 2-objective front, plus the two-layer
//! reference-point counts used for population sizing.

use dpp_moea::indicators::{das_dennis, default_pop_size, layer_divisions, two_layer_size};
use dpp_moea::{hv, igd, HvMode, RngStream};

fn main() -> dpp_moea::Result<()> {
    // quarter circle as the reference, a coarse approximation of it as the set
    let reference: Vec<Vec<f64>> = das_dennis(2, 99)
        .into_iter()
        .map(|w| {
            let n = (w[0] * w[0] + w[1] * w[1]).sqrt();
            vec![w[0] / n, w[1] / n]
        })
        .collect();
    let approx: Vec<Vec<f64>> = (0..=4)
        .map(|i| {
            let t = i as f64 / 4.0 * std::f64::consts::FRAC_PI_2;
            vec![1.02 * t.cos(), 1.02 * t.sin()]
        })
        .collect();

    let mut rng = RngStream::new(3);
    let r = [1.1, 1.1];
    println!("IGD                {:.5}", igd(&approx, &reference));
    println!("HV exact           {:.5}", hv(&approx, &r, HvMode::Exact2D, 0, &mut rng)?);
    println!("HV Monte Carlo     {:.5}", hv(&approx, &r, HvMode::MonteCarlo, 1_000_000, &mut rng)?);

    for m in [3, 5, 8, 10, 15] {
        match layer_divisions(m) {
            Some((p1, p2)) => println!("M={m:<2} divisions ({p1},{p2}) -> {}", two_layer_size(m, p1, p2)),
            None => println!("M={m:<2} default population {:?}", default_pop_size(m)),
        }
    }
    Ok(())
}
