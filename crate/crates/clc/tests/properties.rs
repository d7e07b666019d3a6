//! Property tests for the pipeline's structural guarantees. Everything
//! here is an exact identity or an exact inequality; rational arithmetic
//! means no tolerances anywhere.

use clc::rational::{rat, rat_int, Rational};
use clc::verify::{indirect_scores_by_power, oracle_indirect_scores};
use clc::{
    aggregate, all_admissible_orders, ballot_to_scores, borda_mean_ranks, comparison_relation,
    copeland_ranks, default_order, indirect_scores, is_projection_shaped, project,
    project_with_order, rank_like_rates, validate_gamma, AdmissibleOrder, Ballot, CandidateSet,
    LlullMatrix, Profile, Relation,
};
use num::{One, Zero};
use proptest::prelude::*;

fn generic_candidates(n: usize) -> CandidateSet {
    CandidateSet::new((0..n).map(|i| format!("c{i}"))).unwrap()
}

/// Complete matrices with entries `k/12`.
fn arb_gamma(sizes: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = LlullMatrix> {
    sizes.prop_flat_map(|n| {
        prop::collection::vec(0..=12i64, n * (n - 1) / 2).prop_map(move |picks| {
            let mut it = picks.iter();
            let mut cells = vec![Rational::zero(); n * n];
            for x in 0..n {
                for y in (x + 1)..n {
                    let k = *it.next().unwrap();
                    cells[x * n + y] = rat(k, 12);
                    cells[y * n + x] = rat(12 - k, 12);
                }
            }
            LlullMatrix::from_fn(generic_candidates(n), |x, y| cells[x * n + y].clone())
        })
    })
}

/// One ranked-with-ties ballot over `n` candidates: a shuffled sequence
/// plus a tie mask deciding which candidates join the previous tier.
fn arb_ballot(n: usize) -> impl Strategy<Value = Ballot> {
    let order = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
    let ties = prop::collection::vec(any::<bool>(), n.saturating_sub(1));
    let weight = 1..=3i64;
    (order, ties, weight).prop_map(move |(order, ties, weight)| {
        let candidates = generic_candidates(n);
        let mut tiers: Vec<Vec<usize>> = vec![vec![order[0]]];
        for (i, &c) in order.iter().enumerate().skip(1) {
            if ties[i - 1] {
                tiers.last_mut().unwrap().push(c);
            } else {
                tiers.push(vec![c]);
            }
        }
        Ballot::new(&candidates, tiers, rat_int(weight)).unwrap()
    })
}

fn arb_profile(sizes: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Profile> {
    sizes.prop_flat_map(|n| {
        prop::collection::vec(arb_ballot(n), 1..=6)
            .prop_map(move |ballots| Profile::new(generic_candidates(n), ballots))
    })
}

fn arb_relation(sizes: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Relation> {
    sizes.prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |mask| {
            let pairs = (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .filter(|&(x, y)| x != y && mask[x * n + y]);
            Relation::new(generic_candidates(n), pairs)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn ballot_scores_are_complete(ballot in (2usize..=6).prop_flat_map(arb_ballot)) {
        let n = ballot.tiers().iter().map(Vec::len).sum::<usize>();
        let m = ballot_to_scores(&generic_candidates(n), &ballot);
        prop_assert!(validate_gamma(&m).is_empty());
    }

    #[test]
    fn aggregation_is_an_affine_blend(
        left in arb_profile(3..=4),
        right_ballots in prop::collection::vec(arb_ballot(4), 1..=4),
    ) {
        // Blend over a common 4-candidate set; `left` may use 3 of them.
        prop_assume!(left.candidates().len() == 4);
        let candidates = left.candidates().clone();
        let right = Profile::new(candidates.clone(), right_ballots);
        let mut merged_ballots = left.ballots().to_vec();
        merged_ballots.extend(right.ballots().iter().cloned());
        let merged = Profile::new(candidates, merged_ballots);

        let wl = left.total_weight().clone();
        let wr = right.total_weight().clone();
        let blend_weight = &wl + &wr;
        let ml = aggregate(&left).unwrap();
        let mr = aggregate(&right).unwrap();
        let merged_matrix = aggregate(&merged).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                if x != y {
                    let blended = (ml.get(x, y) * &wl + mr.get(x, y) * &wr) / &blend_weight;
                    prop_assert_eq!(merged_matrix.get(x, y), &blended);
                }
            }
        }
    }

    #[test]
    fn duplicating_ballots_changes_nothing(profile in arb_profile(2..=5), copies in 2usize..=4) {
        let mut ballots = Vec::new();
        for _ in 0..copies {
            ballots.extend(profile.ballots().iter().cloned());
        }
        let duplicated = Profile::new(profile.candidates().clone(), ballots);
        prop_assert_eq!(
            aggregate(&profile).unwrap(),
            aggregate(&duplicated).unwrap()
        );
    }

    #[test]
    fn relabelling_candidates_permutes_the_rates(
        profile in arb_profile(3..=5),
        shuffle_seed in any::<u64>(),
    ) {
        let n = profile.candidates().len();
        let mut perm: Vec<usize> = (0..n).collect();
        // Cheap deterministic shuffle of the permutation from the seed.
        for i in (1..n).rev() {
            perm.swap(i, (shuffle_seed as usize).wrapping_mul(31).wrapping_add(i) % (i + 1));
        }
        let relabelled_ballots = profile
            .ballots()
            .iter()
            .map(|b| {
                let tiers = b
                    .tiers()
                    .iter()
                    .map(|tier| tier.iter().map(|&c| perm[c]).collect())
                    .collect();
                Ballot::new(profile.candidates(), tiers, b.weight().clone()).unwrap()
            })
            .collect();
        let relabelled = Profile::new(profile.candidates().clone(), relabelled_ballots);

        let base = aggregate(&profile).unwrap();
        let moved = aggregate(&relabelled).unwrap();
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    prop_assert_eq!(moved.get(perm[x], perm[y]), base.get(x, y));
                }
            }
        }
        let base_rates = rank_like_rates(&project(&base).unwrap());
        let moved_rates = rank_like_rates(&project(&moved).unwrap());
        for x in 0..n {
            prop_assert_eq!(moved_rates.get(perm[x]), base_rates.get(x));
        }
    }

    #[test]
    fn closure_dominates_and_satisfies_min_inequality(matrix in arb_gamma(2..=6)) {
        let n = matrix.candidates().len();
        let s = indirect_scores(&matrix);
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    prop_assert!(s.get(x, y) >= matrix.get(x, y));
                }
            }
        }
        prop_assert_eq!(s.min_inequality_violation(), None);
    }

    #[test]
    fn closure_is_idempotent(matrix in arb_gamma(2..=6)) {
        let s = indirect_scores(&matrix);
        let as_matrix = LlullMatrix::from_fn(matrix.candidates().clone(), |x, y| {
            s.get(x, y).clone()
        });
        prop_assert_eq!(indirect_scores(&as_matrix), s);
    }

    #[test]
    fn comparison_relation_is_a_partial_order(matrix in arb_gamma(2..=6)) {
        let nu = comparison_relation(&indirect_scores(&matrix)).unwrap();
        prop_assert!(nu.is_partial_order());
    }

    #[test]
    fn codual_is_an_involution(relation in arb_relation(2..=6)) {
        prop_assert_eq!(relation.codual().codual(), relation);
    }

    #[test]
    fn transitive_closure_is_minimal_and_idempotent(relation in arb_relation(2..=5)) {
        let closed = relation.transitive_closure();
        for (x, y) in relation.pairs() {
            prop_assert!(closed.contains(x, y));
        }
        prop_assert_eq!(closed.transitivity_violation(), None);
        prop_assert_eq!(closed.transitive_closure(), closed);
    }

    #[test]
    fn ranks_respect_partial_orders(matrix in arb_gamma(2..=6)) {
        // First half of the rank lemma: within a partial order, a held
        // pair forces strictly better rank.
        let nu = comparison_relation(&indirect_scores(&matrix)).unwrap();
        let ranks = copeland_ranks(&nu);
        for (x, y) in nu.pairs() {
            prop_assert!(ranks.get(x) < ranks.get(y));
        }
    }

    #[test]
    fn projection_is_idempotent(matrix in arb_gamma(2..=6)) {
        let once = project(&matrix).unwrap();
        let twice = project(&once.to_llull()).unwrap();
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn projection_output_is_projection_shaped(matrix in arb_gamma(2..=6)) {
        let order = default_order(&matrix).unwrap();
        let p = project(&matrix).unwrap();
        prop_assert!(validate_gamma(&p.to_llull()).is_empty());
        prop_assert!(is_projection_shaped(&p.to_llull(), &order));
    }

    #[test]
    fn projected_margins_are_ultrametric(matrix in arb_gamma(3..=6)) {
        let report = clc::TallyReport::from_matrix(matrix, None).unwrap();
        prop_assert_eq!(report.projected_margins().ultrametric_violation(), None);
    }

    #[test]
    fn projection_is_monotone_along_its_order(matrix in arb_gamma(3..=6)) {
        let n = matrix.candidates().len();
        let order = default_order(&matrix).unwrap();
        let p = project(&matrix).unwrap();
        for i in 0..n {
            for j in (i + 1)..n {
                let (x, y) = (order.at(i), order.at(j));
                prop_assert!(p.get(x, y) >= p.get(y, x));
                for z in (0..n).filter(|&z| z != x && z != y) {
                    prop_assert!(p.get(x, z) >= p.get(y, z));
                    prop_assert!(p.get(z, x) <= p.get(z, y));
                    if p.get(x, y) == p.get(y, x) {
                        prop_assert_eq!(p.get(x, z), p.get(y, z));
                        prop_assert_eq!(p.get(z, x), p.get(z, y));
                    }
                }
            }
        }
    }

    #[test]
    fn rates_satisfy_the_rank_like_conditions(matrix in arb_gamma(2..=6)) {
        let n = matrix.candidates().len();
        let rates = rank_like_rates(&project(&matrix).unwrap());
        let lo = Rational::one();
        let hi = rat_int(n as i64);
        for x in 0..n {
            prop_assert!(*rates.get(x) >= lo);
            prop_assert!(*rates.get(x) <= hi);
        }
        prop_assert_eq!(rates.sum(), rat_int((n * (n + 1) / 2) as i64));
    }

    #[test]
    fn rate_comparisons_mirror_projected_scores(matrix in arb_gamma(2..=6)) {
        let n = matrix.candidates().len();
        let p = project(&matrix).unwrap();
        let rates = rank_like_rates(&p);
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    prop_assert_eq!(
                        rates.get(x) == rates.get(y),
                        p.get(x, y) == p.get(y, x)
                    );
                    prop_assert_eq!(
                        rates.get(x) < rates.get(y),
                        p.get(x, y) > p.get(y, x)
                    );
                }
            }
        }
    }

    #[test]
    fn rate_order_is_the_closed_codual_relation(matrix in arb_gamma(2..=6)) {
        // Independent route: close the codual of the comparison relation
        // with the generic relation tools and compare with the rates.
        let n = matrix.candidates().len();
        let nu = comparison_relation(&indirect_scores(&matrix)).unwrap();
        let reachable = nu.codual().transitive_closure();
        let rates = rank_like_rates(&project(&matrix).unwrap());
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    prop_assert_eq!(rates.get(x) <= rates.get(y), reachable.contains(x, y));
                    prop_assert_eq!(rates.get(x) < rates.get(y), !reachable.contains(y, x));
                    if rates.get(x) < rates.get(y) {
                        prop_assert!(nu.contains(x, y));
                    }
                }
            }
        }
    }

    #[test]
    fn extreme_rates_mean_unanimity(matrix in arb_gamma(2..=5)) {
        let n = matrix.candidates().len();
        let rates = rank_like_rates(&project(&matrix).unwrap());
        for x in 0..n {
            let all_wins = (0..n).filter(|&y| y != x).all(|y| matrix.get(x, y).is_one());
            let all_losses = (0..n).filter(|&y| y != x).all(|y| matrix.get(x, y).is_zero());
            prop_assert_eq!(*rates.get(x) == Rational::one(), all_wins);
            prop_assert_eq!(*rates.get(x) == rat_int(n as i64), all_losses);
        }
    }

    #[test]
    fn borda_agrees_with_rates_on_projection_fixed_points(profile in arb_profile(2..=5)) {
        // Mean ranks and rank-like rates coincide when the ballots are
        // total orders and the matrix is already projection shaped.
        let total_orders = profile
            .ballots()
            .iter()
            .all(|b| b.tiers().iter().all(|t| t.len() == 1));
        let matrix = aggregate(&profile).unwrap();
        let order = default_order(&matrix).unwrap();
        if total_orders && is_projection_shaped(&matrix, &order) {
            let rates = rank_like_rates(&project(&matrix).unwrap());
            prop_assert_eq!(borda_mean_ranks(&matrix), rates);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_equals_both_oracles(matrix in arb_gamma(2..=5)) {
        let dp = indirect_scores(&matrix);
        prop_assert_eq!(&oracle_indirect_scores(&matrix).unwrap(), &dp);
        prop_assert_eq!(&indirect_scores_by_power(&matrix), &dp);
    }

    #[test]
    fn enumeration_matches_the_brute_force_filter(matrix in arb_gamma(2..=5)) {
        let nu = comparison_relation(&indirect_scores(&matrix)).unwrap();
        let orders = all_admissible_orders(&nu).unwrap();
        prop_assert!(!orders.is_empty());

        let defaulted = default_order(&matrix).unwrap();
        prop_assert!(orders.contains(&defaulted));

        let n = matrix.candidates().len();
        let mut expected = Vec::new();
        permutations(n, &mut Vec::new(), &mut expected);
        let expected: Vec<AdmissibleOrder> = expected
            .into_iter()
            .map(|seq| AdmissibleOrder::new(matrix.candidates().clone(), seq))
            .filter(|order| order.extends(&nu))
            .collect();
        prop_assert_eq!(orders, expected);
    }

    #[test]
    fn projection_does_not_depend_on_the_order(matrix in arb_gamma(2..=5)) {
        let n = matrix.candidates().len();
        let nu = comparison_relation(&indirect_scores(&matrix)).unwrap();
        let orders = all_admissible_orders(&nu).unwrap();
        let reference = project_with_order(&matrix, &orders[0]).unwrap();
        for order in &orders[1..] {
            let other = project_with_order(&matrix, order).unwrap();
            // Pairwise-indexed scores agree...
            prop_assert_eq!(&other, &reference);
            // ...and so do the position-indexed tables.
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        prop_assert_eq!(
                            other.get(order.at(i), order.at(j)),
                            reference.get(orders[0].at(i), orders[0].at(j))
                        );
                    }
                }
            }
        }
    }
}

fn permutations(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    for c in 0..n {
        if !prefix.contains(&c) {
            prefix.push(c);
            permutations(n, prefix, out);
            prefix.pop();
        }
    }
}
