//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with its measurements (run with `--nocapture` to see them).
//! All comparisons are exact rational equality unless a runtime bound is
//! involved.

mod common;

use std::time::{Duration, Instant};

use clc::rational::{format_decimal, rat, rat_int, Rational};
use clc::verify::{
    check_clones, check_condorcet_smith, check_decomposition, check_monotonicity,
    continuity_probe, indirect_scores_by_power, invariant_report, oracle_indirect_scores,
    planted_clones, planted_dominance, planted_majority, random_gamma_matrix, random_lift,
    random_profile, rng, search_maximin_majority_violation, PlantedStructure,
};
use clc::{
    aggregate, all_admissible_orders, comparison_relation, indirect_scores, project,
    project_with_order, rank_like_rates, RateVector, TallyReport,
};
use common::blackpool_matrix;
use num::{One, Zero};
use rand::Rng;

fn assert_rank_like(rates: &RateVector) {
    let n = rates.candidates().len();
    let hi = rat_int(n as i64);
    for x in 0..n {
        assert!(*rates.get(x) >= Rational::one() && *rates.get(x) <= hi);
    }
    assert_eq!(rates.sum(), rat_int((n * (n + 1) / 2) as i64));
}

#[test]
fn criterion_01_blackpool_golden() {
    let matrix = blackpool_matrix();
    let started = Instant::now();
    let report = TallyReport::from_matrix(matrix, Some(rat_int(44))).unwrap();
    let elapsed = started.elapsed();

    let name_index = |name: &str| report.llull().candidates().index_of(name).unwrap();
    let abs = |v: &Rational| v * rat_int(44);

    // Indirect scores, spot values and the full published table.
    let expected_indirect: [(&str, [i64; 6]); 6] = [
        ("3", [0, 23, 28, 23, 28, 23]),
        ("4", [24, 0, 24, 23, 30, 24]),
        ("31", [21, 21, 0, 21, 25, 21]),
        ("122", [24, 24, 29, 0, 28, 24]),
        ("238", [19, 19, 19, 19, 0, 19]),
        ("264", [24, 23, 26, 23, 25, 0]),
    ];
    for (row_name, row) in expected_indirect {
        let x = name_index(row_name);
        for (y, &value) in row.iter().enumerate() {
            if x != y {
                assert_eq!(abs(report.indirect().get(x, y)), rat_int(value));
            }
        }
    }
    assert_eq!(abs(report.indirect().get(name_index("31"), name_index("238"))), rat_int(25));
    for y in 0..6 {
        if y != name_index("238") {
            assert_eq!(abs(report.indirect().get(name_index("238"), y)), rat_int(19));
        }
    }

    // Ranks in declared order 3, 4, 31, 122, 238, 264.
    let ranks: Vec<Rational> = (0..6).map(|c| report.ranks().get(c).clone()).collect();
    assert_eq!(
        ranks,
        [4, 2, 5, 1, 6, 3].map(rat_int).to_vec()
    );

    assert_eq!(report.order().names(), ["122", "4", "264", "3", "31", "238"]);

    let order = report.order();
    let expected_projected: [&[i64]; 5] = [&[1, 1, 1, 3, 6], &[1, 1, 3, 6], &[1, 3, 6], &[3, 6], &[6]];
    for (i, row) in expected_projected.iter().enumerate() {
        for (offset, &value) in row.iter().enumerate() {
            let x = order.at(i);
            let y = order.at(i + 1 + offset);
            assert_eq!(abs(report.projected_margins().get(x, y)), rat_int(value));
        }
    }

    let expected_rates = [
        ("122", rat(37, 11), "3.3636"),
        ("4", rat(149, 44), "3.3864"),
        ("264", rat(75, 22), "3.4091"),
        ("3", rat(151, 44), "3.4318"),
        ("31", rat(157, 44), "3.5682"),
        ("238", rat(169, 44), "3.8409"),
    ];
    for (name, exact, decimal) in expected_rates {
        let c = name_index(name);
        assert_eq!(report.rates().get(c), &exact);
        assert_eq!(format_decimal(report.rates().get(c), 4), decimal);
    }

    assert!(
        elapsed < Duration::from_millis(10),
        "tally took {elapsed:?}, budget 10ms"
    );
    println!("PASS criterion 1: blackpool tables and rates exact, tally in {elapsed:?}");
}

#[test]
fn criterion_02_oracle_equivalence() {
    let started = Instant::now();
    let mut rng = rng(0x02);
    for n in 3..=6 {
        for _ in 0..500 {
            let matrix = random_gamma_matrix(&mut rng, n, 24);
            let dp = indirect_scores(&matrix);
            assert_eq!(oracle_indirect_scores(&matrix).unwrap(), dp, "n = {n}");
            assert_eq!(indirect_scores_by_power(&matrix), dp, "n = {n}");
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!(
        "PASS criterion 2: closure = path enumeration = max-min power on 2000 matrices in {elapsed:?}"
    );
}

#[test]
fn criterion_03_order_independence() {
    let mut rng = rng(0x03);
    let mut with_multiple_orders = 0usize;
    for round in 0..200 {
        let n = 3 + round % 3; // 3, 4, 5
        let ballots = rng.gen_range(2..=5);
        let profile = random_profile(&mut rng, n, ballots, 2, 40);
        let matrix = aggregate(&profile).unwrap();
        let nu = comparison_relation(&indirect_scores(&matrix)).unwrap();
        let orders = all_admissible_orders(&nu).unwrap();
        assert!(!orders.is_empty());
        if orders.len() > 1 {
            with_multiple_orders += 1;
        }
        let reference = project_with_order(&matrix, &orders[0]).unwrap();
        assert_rank_like(&rank_like_rates(&reference));
        for order in &orders[1..] {
            let other = project_with_order(&matrix, order).unwrap();
            assert_eq!(other, reference, "projection depended on the order");
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        assert_eq!(
                            other.get(order.at(i), order.at(j)),
                            reference.get(orders[0].at(i), orders[0].at(j)),
                            "position-indexed table depended on the order"
                        );
                    }
                }
            }
        }
    }
    assert!(
        with_multiple_orders > 0,
        "no profile produced multiple admissible orders; the check never bit"
    );
    println!(
        "PASS criterion 3: one projected matrix per profile across all admissible orders \
         (200 profiles, {with_multiple_orders} with several orders)"
    );
}

#[test]
fn criterion_04_projection_idempotent() {
    let mut rng = rng(0x04);
    for round in 0..500 {
        let n = 2 + round % 7; // 2 ..= 8
        let matrix = random_gamma_matrix(&mut rng, n, 30);
        let once = project(&matrix).unwrap();
        let twice = project(&once.to_llull()).unwrap();
        assert_eq!(twice, once, "projection not idempotent at n = {n}");
        assert_rank_like(&rank_like_rates(&once));
    }
    println!("PASS criterion 4: projection idempotent on 500 matrices up to n = 8");
}

#[test]
fn criterion_05_rank_like_conditions() {
    let mut rng = rng(0x05);
    for round in 0..200 {
        let n = 1 + round % 8; // 1 ..= 8
        let matrix = random_gamma_matrix(&mut rng, n, 20);
        assert_rank_like(&rank_like_rates(&project(&matrix).unwrap()));
    }
    for _ in 0..100 {
        let n = 2 + rng.gen_range(0..4);
        let profile = random_profile(&mut rng, n, 5, 3, 30);
        let matrix = aggregate(&profile).unwrap();
        assert_rank_like(&rank_like_rates(&project(&matrix).unwrap()));
    }
    println!("PASS criterion 5: rates in [1, N] with exact mean (N+1)/2 on 300 inputs");
}

#[test]
fn criterion_06_decomposition() {
    let mut rng = rng(0x06);
    for round in 0..200 {
        let upper = 1 + round % 3;
        let lower = 1 + (round / 3) % 3;
        let ballots = rng.gen_range(3..=6);
        let planted = planted_dominance(&mut rng, upper, lower, ballots);
        let PlantedStructure::Dominance { upper, lower } = &planted.structure else {
            unreachable!()
        };
        let report = check_decomposition(&planted.profile, upper, lower).unwrap();
        assert!(report.all_hold(), "dominance round {round}: {report:?}");
        assert!(report.consistent());
    }

    let mut unstructured_without_unanimity = 0usize;
    for round in 0..200 {
        let n = 3 + round % 3;
        let ballots = rng.gen_range(2..=5);
        let profile = random_profile(&mut rng, n, ballots, 2, 25);
        let split = 1 + rng.gen_range(0..(n - 1));
        let upper: Vec<usize> = (0..split).collect();
        let lower: Vec<usize> = (split..n).collect();
        let report = check_decomposition(&profile, &upper, &lower).unwrap();
        assert!(report.consistent(), "round {round}: {report:?}");
        if !report.unanimous {
            unstructured_without_unanimity += 1;
            assert!(!report.all_hold());
        }
    }
    assert!(unstructured_without_unanimity >= 150);
    println!(
        "PASS criterion 6: four-way equivalence on 200 planted and 200 unstructured profiles \
         ({unstructured_without_unanimity} without unanimity)"
    );
}

#[test]
fn criterion_07_condorcet_smith() {
    let mut rng = rng(0x07);
    for round in 0..200 {
        let n = 4 + round % 3; // 4 ..= 6
        let upper = 2 + round % (n - 3).max(1); // 2 ..= n - 2
        let planted = planted_majority(&mut rng, upper, n - upper);
        let report = check_condorcet_smith(&planted).unwrap();
        assert!(
            report.passed(),
            "round {round}: majority violated for {:?}",
            report.failures
        );
    }

    let maximin = search_maximin_majority_violation(2, 3, 10_000, 0x07_00);
    let note = match &maximin {
        Some(found) => format!("maximin counterexample at seed {}: {}", found.seed, found.detail),
        None => "maximin counterexample not found within budget".to_string(),
    };
    println!("PASS criterion 7: two-class majority respected on 200 planted profiles; {note}");
}

#[test]
fn criterion_08_clone_consistency() {
    let mut rng = rng(0x08);
    for round in 0..200 {
        let clones = 2 + round % 2;
        let outsiders = 2 + round % 3;
        let ballots = rng.gen_range(3..=6);
        let planted = planted_clones(&mut rng, clones, outsiders, ballots);
        let report = check_clones(&planted).unwrap();
        assert!(!report.degenerate);
        assert!(report.passed(), "round {round}: {report:?}");
    }
    println!(
        "PASS criterion 8: clone sets stay autonomous and contraction commutes on 200 profiles"
    );
}

#[test]
fn criterion_09_weak_monotonicity() {
    let mut rng = rng(0x09);
    let mut unique_winner_cases = 0usize;
    for round in 0..500 {
        let n = 4 + round % 2;
        let ballots = rng.gen_range(2..=6);
        let profile = random_profile(&mut rng, n, ballots, 3, 25);
        let base = aggregate(&profile).unwrap();
        let a = rng.gen_range(0..n);
        let lifted = random_lift(&mut rng, &base, a, 10);
        let report = check_monotonicity(&profile, a, &lifted).unwrap();
        assert!(report.indirect_scores_monotone, "round {round}");
        assert!(report.weak_order_preserved, "round {round}");
        assert!(report.unique_winner_preserved, "round {round}");
        if report.was_unique_winner {
            unique_winner_cases += 1;
        }
    }
    assert!(unique_winner_cases > 0, "winner preservation never applied");
    println!(
        "PASS criterion 9: 500 lifts kept indirect dominance, weak order and unique winners \
         ({unique_winner_cases} unique-winner cases)"
    );
}

#[test]
fn criterion_10_continuity() {
    let threshold = rat(1, 1000);
    let mut worst_by_k: Vec<Rational> = Vec::new();
    for k in 3..=12u32 {
        // Perturbation size 2^-k measured on the margins, which is where
        // the completeness-preserving perturbation is applied; the scores
        // move by at most half that.
        let eps = rat(1, 2i64 << k);
        let mut worst = Rational::zero();
        for seed in 0..20u64 {
            let matrix = random_gamma_matrix(&mut rng(seed), 6, 100);
            let observed = continuity_probe(&matrix, &eps, 20, seed).unwrap();
            if observed > worst {
                worst = observed;
            }
        }
        worst_by_k.push(worst);
    }
    for pair in worst_by_k.windows(2) {
        assert!(
            pair[1] <= pair[0],
            "observed rate change increased when eps shrank: {pair:?}"
        );
    }
    let last = worst_by_k.last().unwrap();
    assert!(
        *last < threshold,
        "rate change {last} at eps = 2^-12 is not below 1/1000"
    );
    let rendered: Vec<String> = worst_by_k.iter().map(|w| format_decimal(w, 6)).collect();
    println!(
        "PASS criterion 10: max rate change non-increasing over eps = 2^-3 .. 2^-12: {}",
        rendered.join(" ")
    );
}

#[test]
fn criterion_11_performance() {
    let matrix = random_gamma_matrix(&mut rng(0x11), 100, 1000);
    let started = Instant::now();
    let report = TallyReport::from_matrix(matrix, None).unwrap();
    let elapsed = started.elapsed();
    assert_rank_like(report.rates());
    assert!(
        elapsed < Duration::from_secs(1),
        "full tally at n = 100 took {elapsed:?}"
    );
    println!("PASS criterion 11: full tally at n = 100 in {elapsed:?}");
}

#[test]
fn stage_invariants_hold_on_random_input() {
    // Companion to the numbered criteria: the full PASS/FAIL battery the
    // CLI exposes must come back green on generated matrices.
    let mut rng = rng(0x99);
    for _ in 0..25 {
        let matrix = random_gamma_matrix(&mut rng, 6, 50);
        let checks = invariant_report(&matrix);
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
    }
}
