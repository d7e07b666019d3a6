//! Cross-checks the triple-loop max-min closure against two independent
//! computations: exhaustive simple-path enumeration and the max-min
//! matrix power. All three must agree exactly on every input.
//!
//! Run with: cargo run -p clc --example closure_oracles

use clc::indirect_scores;
use clc::verify::{indirect_scores_by_power, oracle_indirect_scores, random_gamma_matrix, rng};

fn main() -> Result<(), clc::Error> {
    let mut rng = rng(2024);
    let rounds = 200;
    for n in 3..=6 {
        for round in 0..rounds {
            let matrix = random_gamma_matrix(&mut rng, n, 24);
            let dp = indirect_scores(&matrix);
            let paths = oracle_indirect_scores(&matrix)?;
            let power = indirect_scores_by_power(&matrix);
            assert_eq!(dp, paths, "path enumeration disagreed at n={n} round={round}");
            assert_eq!(dp, power, "matrix power disagreed at n={n} round={round}");
        }
        println!("n = {n}: closure == path enumeration == max-min power on {rounds} matrices");
    }

    // One matrix in detail: the widest path can be much better than the
    // direct comparison.
    let matrix = random_gamma_matrix(&mut rng, 4, 10);
    let closed = indirect_scores(&matrix);
    println!("\ndirect -> indirect scores on one random matrix:");
    for x in 0..4 {
        for y in 0..4 {
            if x != y && closed.get(x, y) > matrix.get(x, y) {
                println!(
                    "  {} over {}: {} -> {}",
                    matrix.candidates().name(x),
                    matrix.candidates().name(y),
                    matrix.get(x, y),
                    closed.get(x, y),
                );
            }
        }
    }
    Ok(())
}
