//! Total-order extensions of the indirect comparison relation.
//!
//! The pipeline only needs *one* admissible order, built by sorting on
//! tie-splitting ranks with the declared candidate order breaking exact
//! ties. The exhaustive enumerator exists so order-independence can be
//! tested literally at small sizes.

use crate::candidates::CandidateSet;
use crate::closure::Relation;
use crate::error::{Error, Result};
use crate::rational::{rat, rat_int, Rational};

/// Default size cap for [`all_admissible_orders`].
pub const ENUMERATION_BOUND: usize = 7;

/// Rank of each candidate in a relation: `N` minus the strict wins minus
/// half the mutual ties. Values are half-integers in `[1, N]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CopelandRanks {
    candidates: CandidateSet,
    values: Vec<Rational>,
}

impl CopelandRanks {
    pub fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    pub fn get(&self, x: usize) -> &Rational {
        &self.values[x]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// Tie-splitting rank of every candidate in `rel`.
///
/// On the comparison relation itself the tie term is always zero; feeding
/// the codual counts the zero-margin pairs as half wins, which is the
/// variant the tally uses to seed its admissible order.
pub fn copeland_ranks(rel: &Relation) -> CopelandRanks {
    let candidates = rel.candidates().clone();
    let n = candidates.len();
    let half = rat(1, 2);
    let values = (0..n)
        .map(|x| {
            let mut rank = rat_int(n as i64);
            for y in 0..n {
                if y == x || !rel.contains(x, y) {
                    continue;
                }
                if rel.contains(y, x) {
                    rank -= &half;
                } else {
                    rank -= rat_int(1);
                }
            }
            rank
        })
        .collect();
    CopelandRanks { candidates, values }
}

/// A total order on the candidates, most preferred first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleOrder {
    candidates: CandidateSet,
    sequence: Vec<usize>,
    position: Vec<usize>,
}

impl AdmissibleOrder {
    pub fn new(candidates: CandidateSet, sequence: Vec<usize>) -> AdmissibleOrder {
        debug_assert_eq!(sequence.len(), candidates.len());
        let mut position = vec![0; sequence.len()];
        for (i, &c) in sequence.iter().enumerate() {
            position[c] = i;
        }
        AdmissibleOrder {
            candidates,
            sequence,
            position,
        }
    }

    pub fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    /// Candidate at position `i` (0 = most preferred).
    pub fn at(&self, i: usize) -> usize {
        self.sequence[i]
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn position(&self, candidate: usize) -> usize {
        self.position[candidate]
    }

    /// True when every pair of `rel` appears in order.
    pub fn extends(&self, rel: &Relation) -> bool {
        rel.pairs().all(|(x, y)| self.position[x] < self.position[y])
    }

    pub fn names(&self) -> Vec<&str> {
        self.sequence
            .iter()
            .map(|&c| self.candidates.name(c))
            .collect()
    }
}

/// Builds an admissible order for the partial order `nu` by sorting on
/// `(rank, declared index)`. The result is verified to extend `nu`, which
/// guards against ranks computed from some other relation.
pub fn admissible_order(nu: &Relation, ranks: &CopelandRanks) -> Result<AdmissibleOrder> {
    nu.require_partial_order()?;
    let candidates = nu.candidates().clone();
    let mut sequence: Vec<usize> = (0..candidates.len()).collect();
    sequence.sort_by(|&a, &b| ranks.get(a).cmp(ranks.get(b)).then(a.cmp(&b)));
    let order = AdmissibleOrder::new(candidates, sequence);
    if let Some((x, y)) = nu.pairs().find(|&(x, y)| order.position(x) >= order.position(y)) {
        return Err(Error::NotAnExtension {
            x: order.candidates.name(x).to_string(),
            y: order.candidates.name(y).to_string(),
        });
    }
    Ok(order)
}

/// Enumerates every total order extending `nu`, in lexicographic order of
/// the declared candidate indices. Non-empty for every partial order.
/// Capped at [`ENUMERATION_BOUND`] candidates; use
/// [`all_admissible_orders_bounded`] to override.
pub fn all_admissible_orders(nu: &Relation) -> Result<Vec<AdmissibleOrder>> {
    all_admissible_orders_bounded(nu, ENUMERATION_BOUND)
}

pub fn all_admissible_orders_bounded(
    nu: &Relation,
    bound: usize,
) -> Result<Vec<AdmissibleOrder>> {
    nu.require_partial_order()?;
    let n = nu.candidates().len();
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    // Backtracking over prefix-feasible choices: a candidate may come next
    // once all its predecessors in nu are already placed.
    let mut predecessors = vec![Vec::new(); n];
    for (x, y) in nu.pairs() {
        predecessors[y].push(x);
    }
    let mut placed = vec![false; n];
    let mut prefix = Vec::with_capacity(n);
    let mut found = Vec::new();
    extend_prefix(&predecessors, &mut placed, &mut prefix, &mut found);
    Ok(found
        .into_iter()
        .map(|seq| AdmissibleOrder::new(nu.candidates().clone(), seq))
        .collect())
}

fn extend_prefix(
    predecessors: &[Vec<usize>],
    placed: &mut Vec<bool>,
    prefix: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    let n = placed.len();
    if prefix.len() == n {
        found.push(prefix.clone());
        return;
    }
    for c in 0..n {
        if placed[c] || !predecessors[c].iter().all(|&p| placed[p]) {
            continue;
        }
        placed[c] = true;
        prefix.push(c);
        extend_prefix(predecessors, placed, prefix, found);
        prefix.pop();
        placed[c] = false;
    }
}
