//! Tallies the bundled 2007 Blackpool dancesport final (6 couples, 44
//! rankings) and prints every stage of the computation, then contrasts
//! the result with the Borda and maximin baselines.
//!
//! Run with: cargo run -p clc --example blackpool

use clc::rational::{format_compact, format_decimal, rat_int};
use clc::{borda_mean_ranks, maximin_scores, parse_matrix_tsv, TallyReport};

fn main() -> Result<(), clc::Error> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/blackpool.tsv");
    let text = std::fs::read_to_string(path).expect("bundled data file");
    let total = rat_int(44);
    let matrix = parse_matrix_tsv(&text, Some(&total))?;

    let report = TallyReport::from_matrix(matrix.clone(), Some(total))?;
    print!("{}", report.render_detailed(4));

    // The pairwise method orders the couples differently than a plain
    // positional count: several majority cycles hide in this final.
    let borda = borda_mean_ranks(&matrix);
    let mut by_borda: Vec<usize> = (0..6).collect();
    by_borda.sort_by(|&a, &b| borda.get(a).cmp(borda.get(b)));
    let borda_names: Vec<&str> = by_borda
        .iter()
        .map(|&c| matrix.candidates().name(c))
        .collect();
    println!("\nBorda mean ranks would give: {}", borda_names.join(" > "));

    let maximin = maximin_scores(&matrix);
    println!("Maximin scores (worst pairwise count):");
    for c in 0..6 {
        println!(
            "  {:>4}  {} / 44  ({})",
            matrix.candidates().name(c),
            format_compact(&(maximin.get(c) * rat_int(44))),
            format_decimal(maximin.get(c), 4),
        );
    }
    Ok(())
}
