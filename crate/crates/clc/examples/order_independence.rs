//! When indirect comparisons tie, several total orders are admissible.
//! The projected scores must not depend on which one the pipeline picks;
//! this example enumerates all of them and verifies that literally.
//!
//! Run with: cargo run -p clc --example order_independence

use clc::{
    aggregate, all_admissible_orders, comparison_relation, indirect_scores, parse_profile,
    project_with_order, rank_like_rates, social_preorder, UnlistedPolicy,
};

// A and B tie head-to-head but both crush C and D: two admissible
// orders, one answer.
const TIED_ELECTION: &str = "\
candidates: A B C D
1: A > B > C > D
1: B > A > C > D
";

fn main() -> Result<(), clc::Error> {
    let profile = parse_profile(TIED_ELECTION, UnlistedPolicy::Error)?;
    let matrix = aggregate(&profile)?;
    let nu = comparison_relation(&indirect_scores(&matrix))?;
    println!(
        "indirect comparison relation has {} strict pairs on 4 candidates",
        nu.len()
    );

    let orders = all_admissible_orders(&nu)?;
    println!("admissible orders: {}", orders.len());
    for order in &orders {
        println!("  {}", order.names().join(" "));
    }

    let reference = project_with_order(&matrix, &orders[0])?;
    for order in &orders[1..] {
        assert_eq!(
            project_with_order(&matrix, order)?,
            reference,
            "projection depended on the admissible order"
        );
    }
    println!("\nprojected scores are identical under every admissible order");

    let rates = rank_like_rates(&reference);
    for c in 0..4 {
        println!(
            "  {}  {}",
            matrix.candidates().name(c),
            clc::rational::format_decimal(rates.get(c), 4)
        );
    }
    println!(
        "social ranking: {}",
        social_preorder(&rates).describe(matrix.candidates())
    );
    Ok(())
}
