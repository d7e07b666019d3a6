//! Max-min path closure of the score matrix and the comparison relation
//! it induces, plus the small relation algebra the rest of the pipeline
//! needs (codual, transitive closure, contraction).
//!
//! The indirect score of `(x, y)` is the best score over all paths from
//! `x` to `y`, where a path scores its weakest link. The strict relation
//! `v*_xy > v*_yx` is always a partial order, which is what makes a total
//! ranking extension possible even when direct majorities cycle.

use std::collections::BTreeSet;

use crate::candidates::CandidateSet;
use crate::error::{Error, Result};
use crate::matrix::{PairTable, Scores};
use crate::profile::LlullMatrix;
use crate::rational::Rational;

/// The widest-path closure `v*` of a score matrix. Dominates its source
/// entrywise and satisfies `s_xz >= min(s_xy, s_yz)` on every triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndirectScores {
    candidates: CandidateSet,
    table: PairTable,
}

impl IndirectScores {
    /// Wraps raw entries without computing a closure. Intended for tests
    /// and diagnostics; [`comparison_relation`] re-checks the min
    /// inequality before trusting any input.
    pub fn from_fn(
        candidates: CandidateSet,
        f: impl FnMut(usize, usize) -> Rational,
    ) -> IndirectScores {
        let table = PairTable::from_fn(candidates.len(), f);
        IndirectScores { candidates, table }
    }

    pub fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    pub fn get(&self, x: usize, y: usize) -> &Rational {
        self.table.get(x, y)
    }

    /// First triple `(x, y, z)` with `s_xz < min(s_xy, s_yz)`, if any.
    pub fn min_inequality_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.candidates.len();
        let (nums, _) = self.table.common_numerators();
        for x in 0..n {
            for y in 0..n {
                if y == x {
                    continue;
                }
                for z in 0..n {
                    if z == x || z == y {
                        continue;
                    }
                    let lo = (&nums[x * n + y]).min(&nums[y * n + z]);
                    if nums[x * n + z] < *lo {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }
}

impl Scores for IndirectScores {
    fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    fn score(&self, x: usize, y: usize) -> &Rational {
        self.table.get(x, y)
    }
}

/// Computes the indirect scores by the max-min variant of the
/// Floyd-Warshall triple loop, `O(N^3)` comparisons. Entries are moved to
/// a common denominator once so the loop compares plain integers.
pub fn indirect_scores(matrix: &LlullMatrix) -> IndirectScores {
    let n = matrix.candidates().len();
    let (mut nums, den) = matrix.table().common_numerators();
    for k in 0..n {
        for i in 0..n {
            if i == k {
                continue;
            }
            let through_ik = nums[i * n + k].clone();
            for j in 0..n {
                if j == k || j == i {
                    continue;
                }
                let via = (&through_ik).min(&nums[k * n + j]);
                if *via > nums[i * n + j] {
                    let via = via.clone();
                    nums[i * n + j] = via;
                }
            }
        }
    }
    IndirectScores {
        candidates: matrix.candidates().clone(),
        table: PairTable::from_numerators(n, &nums, &den),
    }
}

/// Antisymmetric margin matrix `m_xy = v_xy - v_yx` of any score table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarginMatrix {
    candidates: CandidateSet,
    table: PairTable,
}

impl MarginMatrix {
    pub fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    pub fn get(&self, x: usize, y: usize) -> &Rational {
        self.table.get(x, y)
    }

    pub(crate) fn from_table(candidates: CandidateSet, table: PairTable) -> MarginMatrix {
        MarginMatrix { candidates, table }
    }

}

impl Scores for MarginMatrix {
    fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    fn score(&self, x: usize, y: usize) -> &Rational {
        self.table.get(x, y)
    }
}

/// Margins of a direct or indirect score matrix.
pub fn margins<S: Scores>(scores: &S) -> MarginMatrix {
    let candidates = scores.candidates().clone();
    let table = PairTable::from_fn(candidates.len(), |x, y| {
        scores.score(x, y) - scores.score(y, x)
    });
    MarginMatrix { candidates, table }
}

/// A strict binary relation on the candidate set: a set of ordered pairs
/// of distinct candidates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    candidates: CandidateSet,
    pairs: BTreeSet<(usize, usize)>,
}

impl Relation {
    pub fn new(candidates: CandidateSet, pairs: impl IntoIterator<Item = (usize, usize)>) -> Relation {
        let n = candidates.len();
        let pairs = pairs
            .into_iter()
            .filter(|&(x, y)| x != y && x < n && y < n)
            .collect();
        Relation { candidates, pairs }
    }

    pub fn empty(candidates: CandidateSet) -> Relation {
        Relation {
            candidates,
            pairs: BTreeSet::new(),
        }
    }

    pub fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.pairs.contains(&(x, y))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_asymmetric(&self) -> bool {
        self.pairs.iter().all(|&(x, y)| !self.contains(y, x))
    }

    /// First transitivity failure `(x, y, z)`: `xy` and `yz` held but
    /// `xz` missing.
    pub fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        for &(x, y) in &self.pairs {
            for &(y2, z) in self.pairs.range((y, 0)..(y + 1, 0)) {
                debug_assert_eq!(y, y2);
                if z != x && !self.contains(x, z) {
                    return Some((x, y, z));
                }
            }
        }
        None
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_asymmetric() && self.transitivity_violation().is_none()
    }

    pub(crate) fn require_partial_order(&self) -> Result<()> {
        if !self.is_asymmetric() {
            return Err(Error::NotPartialOrder("not asymmetric".into()));
        }
        if let Some((x, y, z)) = self.transitivity_violation() {
            return Err(Error::NotPartialOrder(format!(
                "({}, {}) and ({}, {}) hold but ({}, {}) does not",
                self.candidates.name(x),
                self.candidates.name(y),
                self.candidates.name(y),
                self.candidates.name(z),
                self.candidates.name(x),
                self.candidates.name(z),
            )));
        }
        Ok(())
    }

    /// The codual: all pairs `xy` whose reverse is absent. Applying it
    /// twice gives the original relation back.
    pub fn codual(&self) -> Relation {
        let n = self.candidates.len();
        let mut pairs = BTreeSet::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && !self.contains(y, x) {
                    pairs.insert((x, y));
                }
            }
        }
        Relation {
            candidates: self.candidates.clone(),
            pairs,
        }
    }

    /// Smallest transitive relation containing this one, by boolean
    /// reachability.
    pub fn transitive_closure(&self) -> Relation {
        let n = self.candidates.len();
        let mut reach = vec![false; n * n];
        for &(x, y) in &self.pairs {
            reach[x * n + y] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if i == k || !reach[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if reach[k * n + j] {
                        reach[i * n + j] = true;
                    }
                }
            }
        }
        let pairs = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && reach[x * n + y])
            .collect();
        Relation {
            candidates: self.candidates.clone(),
            pairs,
        }
    }

    /// True when every outsider relates the same way to all of `members`.
    pub fn is_autonomous(&self, members: &[usize]) -> bool {
        let n = self.candidates.len();
        let Some(&first) = members.first() else {
            return true;
        };
        (0..n).filter(|z| !members.contains(z)).all(|z| {
            members[1..].iter().all(|&m| {
                self.contains(first, z) == self.contains(m, z)
                    && self.contains(z, first) == self.contains(z, m)
            })
        })
    }

    /// Contraction by an autonomous set: `members` collapse to their
    /// first element, every other pair carries over.
    pub fn contract(&self, members: &[usize]) -> Result<Relation> {
        if !self.is_autonomous(members) {
            let names = members
                .iter()
                .map(|&c| self.candidates.name(c))
                .collect::<Vec<_>>()
                .join(", ");
            return Err(Error::NotAutonomous(names));
        }
        let contracted = self.candidates.contract(members)?;
        let reps: Vec<usize> = contracted
            .names()
            .iter()
            .map(|n| self.candidates.index_of(n).unwrap())
            .collect();
        let pairs = (0..reps.len())
            .flat_map(|i| (0..reps.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && self.contains(reps[i], reps[j]))
            .collect();
        Ok(Relation {
            candidates: contracted,
            pairs,
        })
    }
}

/// The strict comparison relation of an indirect score matrix: pairs with
/// `s_xy > s_yx`. Refuses score tables that fail the min inequality, since
/// only those guarantee a transitive result; raw (unclosed) scores are the
/// typical offender.
pub fn comparison_relation(scores: &IndirectScores) -> Result<Relation> {
    if let Some((x, y, z)) = scores.min_inequality_violation() {
        let name = |i: usize| scores.candidates.name(i).to_string();
        return Err(Error::MinInequality {
            x: name(x),
            y: name(y),
            z: name(z),
        });
    }
    let n = scores.candidates.len();
    let pairs = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y && scores.get(x, y) > scores.get(y, x))
        .collect();
    Ok(Relation {
        candidates: scores.candidates.clone(),
        pairs,
    })
}
