//! When one class of candidates is unanimously preferred to the rest,
//! the rating splits: the upper class is rated as if the lower class did
//! not exist, and the lower class gets its standalone rating shifted by
//! the size of the upper class. The example also shows the converse:
//! without unanimity, all four equivalent statements fail together.
//!
//! Run with: cargo run -p clc --example decomposition

use clc::verify::{check_decomposition, planted_dominance, rng, PlantedStructure};
use clc::{aggregate, project, rank_like_rates, Scores};

fn main() -> Result<(), clc::Error> {
    let mut rng = rng(11);
    let planted = planted_dominance(&mut rng, 2, 3, 6);
    let PlantedStructure::Dominance { upper, lower } = &planted.structure else {
        unreachable!()
    };
    let matrix = aggregate(&planted.profile)?;
    let names = matrix.candidates();
    println!(
        "planted profile: {{{}}} unanimously above {{{}}}",
        upper.iter().map(|&c| names.name(c)).collect::<Vec<_>>().join(", "),
        lower.iter().map(|&c| names.name(c)).collect::<Vec<_>>().join(", "),
    );

    let report = check_decomposition(&planted.profile, upper, lower)?;
    println!("  unanimity across the split:      {}", report.unanimous);
    println!("  upper rates equal sub-rating:    {}", report.upper_rates_match);
    println!("  lower rates equal shifted sub:   {}", report.lower_rates_match);
    println!("  upper rates sum to |X|(|X|+1)/2: {}", report.upper_rank_sum);
    assert!(report.all_hold());

    let rates = rank_like_rates(&project(&matrix)?);
    let sub = matrix.restrict(lower);
    let sub_rates = rank_like_rates(&project(&sub)?);
    println!("\nlower-class rates, full tally vs standalone + {}:", upper.len());
    for (i, &c) in lower.iter().enumerate() {
        println!(
            "  {}  {}  =  {} + {}",
            names.name(c),
            rates.get(c),
            sub_rates.get(i),
            upper.len(),
        );
    }

    // Break the unanimity with one dissenting ballot: every statement
    // flips to false at once.
    let mut ballots = planted.profile.ballots().to_vec();
    let dissent: Vec<Vec<usize>> = lower
        .iter()
        .chain(upper.iter())
        .map(|&c| vec![c])
        .collect();
    ballots.push(clc::Ballot::new(names, dissent, clc::rational::rat_int(1)).unwrap());
    let broken = clc::Profile::new(names.clone(), ballots);
    let report = check_decomposition(&broken, upper, lower)?;
    println!("\nafter one dissenting ballot:");
    println!("  unanimity {}  sub-rating matches {} / {}  rank sum {}",
        report.unanimous,
        report.upper_rates_match,
        report.lower_rates_match,
        report.upper_rank_sum,
    );
    assert!(report.consistent() && !report.all_hold());
    Ok(())
}
