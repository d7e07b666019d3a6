//! Clone consistency: a block of near-identical candidates (every ballot
//! treats them as one unit) cannot change the standing of anyone else,
//! and collapsing the block to a single candidate commutes with the
//! whole tally.
//!
//! Run with: cargo run -p clc --example clones

use clc::verify::{check_clones, planted_clones, rng, PlantedStructure};
use clc::{Scores, TallyReport};

fn main() -> Result<(), clc::Error> {
    let mut rng = rng(31);
    let planted = planted_clones(&mut rng, 3, 3, 6);
    let PlantedStructure::Clones { members } = &planted.structure else {
        unreachable!()
    };

    let report = TallyReport::from_profile(&planted.profile)?;
    let names = report.llull().candidates();
    println!(
        "clone block {{{}}} inside {}",
        members.iter().map(|&c| names.name(c)).collect::<Vec<_>>().join(", "),
        names,
    );
    println!(
        "block is autonomous for the scores: {}",
        report.llull().is_autonomous(members)
    );
    println!("full tally: {}", report.social().describe(names));

    let contracted = planted.profile.contract(members)?;
    let contracted_report = TallyReport::from_profile(&contracted)?;
    println!(
        "contracted tally ({}): {}",
        contracted.candidates(),
        contracted_report.social().describe(contracted.candidates()),
    );

    let verdict = check_clones(&planted)?;
    assert!(verdict.passed(), "{verdict:?}");
    println!("\nautonomy survives every stage and contraction commutes:");
    println!("  scores {}", verdict.autonomous_for_llull);
    println!("  indirect scores {}", verdict.autonomous_for_indirect);
    println!("  projected scores {}", verdict.autonomous_for_projected);
    println!("  comparison relation {}", verdict.autonomous_for_comparison);
    println!("  rate preorder {}", verdict.autonomous_for_preorder);
    println!(
        "  contraction commutes (relation / preorder): {} / {}",
        verdict.contraction_commutes_comparison, verdict.contraction_commutes_preorder,
    );
    Ok(())
}
