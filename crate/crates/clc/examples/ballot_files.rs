//! The ballot-file grammar: weighted rankings with ties, comments, and
//! the two policies for candidates a ballot leaves out.
//!
//! Run with: cargo run -p clc --example ballot_files

use clc::{parse_profile, TallyReport, UnlistedPolicy};

const ELECTION: &str = "\
# Committee chair election, 9 votes.
candidates: Ada Grace Edsger Barbara
4: Ada > Grace = Edsger > Barbara
3: Grace > Barbara > Ada > Edsger
1/2: Edsger > Ada > Grace > Barbara
1/2: Edsger > Grace > Ada > Barbara
1: Barbara > Grace
";

fn main() -> Result<(), clc::Error> {
    // The last ballot skips two candidates. Under the strict policy that
    // is an error; the tied-last policy files them in one final tier.
    match parse_profile(ELECTION, UnlistedPolicy::Error) {
        Err(error) => println!("strict policy rejects the file: {error}"),
        Ok(_) => unreachable!("the last ballot is incomplete"),
    }

    let profile = parse_profile(ELECTION, UnlistedPolicy::TiedLast)?;
    println!(
        "parsed {} ballots, total weight {}",
        profile.ballots().len(),
        profile.total_weight()
    );

    let report = TallyReport::from_profile(&profile)?;
    println!("\nrank-like rates (1 = unanimously first):");
    print!("{}", report.render_rates(4));
    println!(
        "\nsocial ranking: {}",
        report.social().describe(profile.candidates())
    );
    Ok(())
}
