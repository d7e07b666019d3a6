//! Rates respond continuously to the ballot data: shrinking random
//! perturbations of the score matrix shrink the worst observed rate
//! change towards zero, even though the admissible order underneath is
//! discrete and can flip.
//!
//! Run with: cargo run -p clc --example continuity

use clc::rational::{format_decimal, rat};
use clc::verify::{continuity_probe, random_gamma_matrix, rng};

fn main() -> Result<(), clc::Error> {
    let seeds = 10u64;
    let trials = 20;
    println!("worst rate change over {seeds} random 6-candidate matrices, {trials} trials each:");
    println!("{:>10}  {:>12}", "eps", "max |dR|");
    for k in 3..=12u32 {
        let eps = rat(1, 1i64 << k);
        let mut worst = rat(0, 1);
        for seed in 0..seeds {
            let matrix = random_gamma_matrix(&mut rng(seed), 6, 100);
            let observed = continuity_probe(&matrix, &eps, trials, seed)?;
            if observed > worst {
                worst = observed;
            }
        }
        println!("{:>10}  {:>12}", format!("2^-{k}"), format_decimal(&worst, 6));
    }
    Ok(())
}
