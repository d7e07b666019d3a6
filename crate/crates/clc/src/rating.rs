//! Rank-like rates and the social ordering they induce, plus the two
//! classical per-candidate baselines (Borda mean ranks, maximin scores)
//! kept around for comparison.

use std::collections::BTreeSet;

use crate::candidates::CandidateSet;
use crate::closure::Relation;
use crate::matrix::Scores;
use crate::profile::LlullMatrix;
use crate::projection::ProjectedScores;
use crate::rational::{rat_int, Rational};

/// One exact rational value per candidate, indexed in declared order.
/// Rank-like rates lie in `[1, N]` and sum to `N (N + 1) / 2`; the Borda
/// and maximin vectors reuse the shape with their own ranges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RateVector {
    candidates: CandidateSet,
    values: Vec<Rational>,
}

impl RateVector {
    pub fn new(candidates: CandidateSet, values: Vec<Rational>) -> RateVector {
        debug_assert_eq!(candidates.len(), values.len());
        RateVector { candidates, values }
    }

    pub fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    pub fn get(&self, x: usize) -> &Rational {
        &self.values[x]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn sum(&self) -> Rational {
        self.values.iter().sum()
    }
}

/// Rank-like rates from projected scores: `R_x = N - sum_y p_xy`.
/// A rate of 1 means unanimously first, `N` unanimously last.
pub fn rank_like_rates(projected: &ProjectedScores) -> RateVector {
    row_deficit_rates(projected)
}

/// Borda mean ranks straight from the Llull matrix: same formula as the
/// rank-like rates but applied to the unprojected scores.
pub fn borda_mean_ranks(matrix: &LlullMatrix) -> RateVector {
    row_deficit_rates(matrix)
}

fn row_deficit_rates<S: Scores>(scores: &S) -> RateVector {
    let candidates = scores.candidates().clone();
    let n = candidates.len();
    let values = (0..n)
        .map(|x| {
            let row: Rational = (0..n).filter(|&y| y != x).map(|y| scores.score(x, y)).sum();
            rat_int(n as i64) - row
        })
        .collect();
    RateVector { candidates, values }
}

/// Maximin score of each candidate: its worst pairwise score, higher is
/// better. A comparison baseline only; it satisfies the single-winner
/// Condorcet principle but not the two-class majority principle, and it
/// is not a rank-like rate.
pub fn maximin_scores(matrix: &LlullMatrix) -> RateVector {
    let candidates = matrix.candidates().clone();
    let n = candidates.len();
    let values = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| y != x)
                .map(|y| matrix.get(x, y))
                .min()
                .cloned()
                .unwrap_or_else(|| rat_int(1))
        })
        .collect();
    RateVector { candidates, values }
}

/// The total preorder determined by a rate vector, with exact ties kept
/// visible instead of broken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocialOrdering {
    /// Pairs `xy` with `R_x <= R_y` (a total preorder).
    pub preorder: Relation,
    /// Pairs `xy` with `R_x < R_y` (the strict part).
    pub strict: Relation,
    /// Candidates grouped by equal rate, best class first; members keep
    /// declared order.
    pub tie_classes: Vec<Vec<usize>>,
}

impl SocialOrdering {
    /// `A > B = C > D` style rendering of the classes.
    pub fn describe(&self, candidates: &CandidateSet) -> String {
        self.tie_classes
            .iter()
            .map(|class| {
                class
                    .iter()
                    .map(|&c| candidates.name(c))
                    .collect::<Vec<_>>()
                    .join(" = ")
            })
            .collect::<Vec<_>>()
            .join(" > ")
    }
}

/// Orders candidates by non-decreasing rate (lower rate = more accepted).
pub fn social_preorder(rates: &RateVector) -> SocialOrdering {
    let candidates = rates.candidates().clone();
    let n = candidates.len();
    let mut strict = BTreeSet::new();
    let mut preorder = BTreeSet::new();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            if rates.get(x) <= rates.get(y) {
                preorder.insert((x, y));
                if rates.get(x) < rates.get(y) {
                    strict.insert((x, y));
                }
            }
        }
    }
    let mut sorted: Vec<usize> = (0..n).collect();
    sorted.sort_by(|&a, &b| rates.get(a).cmp(rates.get(b)).then(a.cmp(&b)));
    let mut tie_classes: Vec<Vec<usize>> = Vec::new();
    for c in sorted {
        match tie_classes.last_mut() {
            Some(class) if rates.get(class[0]) == rates.get(c) => class.push(c),
            _ => tie_classes.push(vec![c]),
        }
    }
    SocialOrdering {
        preorder: Relation::new(candidates.clone(), preorder),
        strict: Relation::new(candidates, strict),
        tie_classes,
    }
}
