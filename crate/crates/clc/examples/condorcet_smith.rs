//! The two-class majority principle: if every member of one class beats
//! every member of the other by strict majority, the whole upper class
//! must be rated strictly above the whole lower class. The rank-like
//! rates honor this; the maximin baseline does not once the upper class
//! has more than one member.
//!
//! Run with: cargo run -p clc --example condorcet_smith

use clc::verify::{
    check_condorcet_smith, planted_majority, rng, search_maximin_majority_violation,
    PlantedStructure,
};
use clc::{aggregate, project, rank_like_rates};

fn main() -> Result<(), clc::Error> {
    let mut rng = rng(5);
    let rounds = 100;
    for round in 0..rounds {
        let planted = planted_majority(&mut rng, 2, 3);
        let report = check_condorcet_smith(&planted)?;
        assert!(report.passed(), "round {round}: {:?}", report.failures);
    }
    println!("two-class majority respected on {rounds} planted profiles");

    let mut rng = rng(6);
    let planted = planted_majority(&mut rng, 2, 3);
    let PlantedStructure::Majority { upper, lower } = &planted.structure else {
        unreachable!()
    };
    let matrix = aggregate(&planted.profile)?;
    let rates = rank_like_rates(&project(&matrix)?);
    println!("\none such profile, rates (upper class first):");
    for &c in upper.iter().chain(lower) {
        println!(
            "  {}  {}",
            matrix.candidates().name(c),
            clc::rational::format_decimal(rates.get(c), 4)
        );
    }

    match search_maximin_majority_violation(2, 3, 10_000, 0) {
        Some(found) => {
            println!("\nmaximin baseline violation found (seed {}):", found.seed);
            println!("  {}", found.detail);
        }
        None => println!("\nmaximin violation not found within the search budget"),
    }
    Ok(())
}
