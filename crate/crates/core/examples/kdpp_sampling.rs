//! Exact k-DPP sampling on a small kernel: empirical subset frequencies next
//! to the probabilities given by normalized principal minors.

use dpp_moea::dpp::kdpp_sample;
use dpp_moea::{KernelMatrix, RngStream};

fn main() -> dpp_moea::Result<()> {
    let rows = vec![
        vec![2.0, 0.6, 0.2, 0.1],
        vec![0.6, 1.5, 0.4, 0.3],
        vec![0.2, 0.4, 1.0, 0.5],
        vec![0.1, 0.3, 0.5, 1.2],
    ];
    let l = KernelMatrix::from_rows(&rows)?;
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
    let minors: Vec<f64> = pairs
        .iter()
        .map(|&(i, j)| rows[i][i] * rows[j][j] - rows[i][j] * rows[j][i])
        .collect();
    let z: f64 = minors.iter().sum();

    let draws = 50_000;
    let mut counts = vec![0usize; pairs.len()];
    let mut rng = RngStream::new(7);
    for _ in 0..draws {
        let mut s = kdpp_sample(&l, 2, &mut rng)?;
        s.sort();
        let slot = pairs.iter().position(|&(i, j)| s == [i, j]).expect("pair");
        counts[slot] += 1;
    }

    println!("subset   exact    empirical");
    for ((pair, det), count) in pairs.iter().zip(&minors).zip(&counts) {
        println!("{pair:?}   {:.4}   {:.4}", det / z, *count as f64 / draws as f64);
    }
    Ok(())
}
