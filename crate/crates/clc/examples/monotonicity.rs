//! Raising one candidate in some ballots (touching nothing else) can
//! never hurt that candidate's indirect scores, never flips a strict
//! advantage it held into a deficit, and never costs it a unique win.
//! Strictly *keeping* every strict advantage is too much to ask: the
//! example hunts for the known edge case where a strict lead collapses
//! to an exact tie.
//!
//! Run with: cargo run -p clc --example monotonicity

use clc::verify::{
    check_monotonicity_matrix, random_gamma_matrix, random_lift, rng,
    search_strict_monotonicity_violation,
};
use rand::Rng;

fn main() -> Result<(), clc::Error> {
    let mut rng = rng(77);
    let rounds = 200;
    let mut winners = 0;
    for round in 0..rounds {
        let matrix = random_gamma_matrix(&mut rng, 5, 12);
        let a = rng.gen_range(0..5);
        let lifted = random_lift(&mut rng, &matrix, a, 8);
        let report = check_monotonicity_matrix(&matrix, a, &lifted)?;
        assert!(report.passed(), "round {round}: {report:?}");
        if report.was_unique_winner {
            winners += 1;
        }
    }
    println!(
        "{rounds} random lifts: indirect scores monotone, weak order kept, \
         unique winner kept ({winners} unique-winner cases)"
    );

    match search_strict_monotonicity_violation(5, 20_000, 0) {
        Some(found) => {
            println!("\nstrict monotonicity failure found (seed {}):", found.seed);
            println!("  {}", found.detail);
        }
        None => println!("\nno strict monotonicity failure within the search budget"),
    }
    Ok(())
}
