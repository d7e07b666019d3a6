//! Projection of the indirect margins onto margins that are monotone
//! along an admissible order and max-decomposable over it.
//!
//! Given an admissible order, each superdiagonal pair gets the minimum
//! indirect margin over its upper-right rectangle; a projected margin is
//! then the maximum of the superdiagonal values between its endpoints.
//! The absolute projected margins satisfy the ultrametric inequality, and
//! the whole map is an idempotent operator on complete score matrices
//! whose value does not depend on which admissible order was used.

use num::{One, Zero};

use crate::candidates::CandidateSet;
use crate::closure::{comparison_relation, indirect_scores, margins, MarginMatrix};
use crate::error::{Error, Result};
use crate::matrix::{PairTable, Scores};
use crate::ordering::{admissible_order, copeland_ranks, AdmissibleOrder};
use crate::profile::{validate_gamma, LlullMatrix};
use crate::rational::{rat, Rational};

/// The superdiagonal intermediate margins along an admissible order:
/// entry `k` belongs to the consecutive pair at positions `(k, k+1)` and
/// is the minimum indirect margin over pairs `(p, q)` with `p` at or
/// before position `k` and `q` strictly after it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntermediateMargins {
    order: AdmissibleOrder,
    sigma: Vec<Rational>,
}

impl IntermediateMargins {
    pub fn order(&self) -> &AdmissibleOrder {
        &self.order
    }

    /// The `N - 1` superdiagonal values in order position.
    pub fn values(&self) -> &[Rational] {
        &self.sigma
    }
}

/// Computes the intermediate margins of `indirect` along `order`.
/// Fails if the order is not admissible for these margins, i.e. some
/// pair taken in order has a negative indirect margin.
pub fn intermediate_margins(
    indirect: &MarginMatrix,
    order: &AdmissibleOrder,
) -> Result<IntermediateMargins> {
    let n = order.candidates().len();
    let at = |i: usize, j: usize| indirect.get(order.at(i), order.at(j));
    for i in 0..n {
        for j in (i + 1)..n {
            if *at(i, j) < Rational::zero() {
                return Err(Error::NotAdmissible {
                    x: order.candidates().name(order.at(i)).to_string(),
                    y: order.candidates().name(order.at(j)).to_string(),
                });
            }
        }
    }
    if n < 2 {
        return Ok(IntermediateMargins {
            order: order.clone(),
            sigma: Vec::new(),
        });
    }
    // Suffix minima per row, then a prefix sweep down the rows: O(N^2)
    // instead of one rectangle scan per superdiagonal cell.
    let mut row_suffix_min: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![Rational::zero(); n];
        for j in (i + 1..n).rev() {
            row[j] = if j + 1 < n && row[j + 1] < *at(i, j) {
                row[j + 1].clone()
            } else {
                at(i, j).clone()
            };
        }
        row_suffix_min.push(row);
    }
    let mut sigma = Vec::with_capacity(n - 1);
    for k in 0..n - 1 {
        // Rectangle minimum for the pair at (k, k+1): rows 0..=k of the
        // suffix minima, column k+1.
        let mut best = &row_suffix_min[0][k + 1];
        for row in row_suffix_min.iter().take(k + 1).skip(1) {
            if row[k + 1] < *best {
                best = &row[k + 1];
            }
        }
        sigma.push(best.clone());
    }
    Ok(IntermediateMargins {
        order: order.clone(),
        sigma,
    })
}

/// Antisymmetric margins that are max-decomposable along the order used
/// to build them: for positions `i < j` the margin is the maximum
/// superdiagonal value in between, and the lower triangle is its
/// negation. Absolute values satisfy the ultrametric inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectedMargins {
    margins: MarginMatrix,
}

impl ProjectedMargins {
    pub fn candidates(&self) -> &CandidateSet {
        self.margins.candidates()
    }

    pub fn get(&self, x: usize, y: usize) -> &Rational {
        self.margins.get(x, y)
    }

    pub fn as_margins(&self) -> &MarginMatrix {
        &self.margins
    }

    /// First triple violating `|m_xz| <= max(|m_xy|, |m_yz|)`, if any.
    pub fn ultrametric_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.candidates().len();
        let d = |x: usize, y: usize| {
            let m = self.get(x, y);
            if *m < Rational::zero() {
                -m
            } else {
                m.clone()
            }
        };
        for x in 0..n {
            for y in 0..n {
                if y == x {
                    continue;
                }
                for z in 0..n {
                    if z == x || z == y {
                        continue;
                    }
                    if d(x, z) > d(x, y).max(d(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }
}

/// Expands intermediate margins into the full projected margin matrix.
pub fn projected_margins(intermediate: &IntermediateMargins) -> ProjectedMargins {
    let order = intermediate.order();
    let n = order.candidates().len();
    let sigma = intermediate.values();
    let mut table = PairTable::zeros(n);
    for i in 0..n {
        let mut running = Rational::zero();
        for j in (i + 1)..n {
            if sigma[j - 1] > running {
                running = sigma[j - 1].clone();
            }
            table.set(order.at(i), order.at(j), running.clone());
            table.set(order.at(j), order.at(i), -running.clone());
        }
    }
    ProjectedMargins {
        margins: MarginMatrix::from_table(order.candidates().clone(), table),
    }
}

/// Complete score matrix recovered from projected margins by
/// `p_xy = (1 + m_xy) / 2`. Along the admissible order each entry
/// dominates its transpose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectedScores {
    candidates: CandidateSet,
    table: PairTable,
}

impl ProjectedScores {
    pub fn from_margins(projected: &ProjectedMargins) -> ProjectedScores {
        let candidates = projected.candidates().clone();
        let half = rat(1, 2);
        let one = Rational::one();
        let table = PairTable::from_fn(candidates.len(), |x, y| {
            (projected.get(x, y) + &one) * &half
        });
        ProjectedScores { candidates, table }
    }

    pub fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    pub fn get(&self, x: usize, y: usize) -> &Rational {
        self.table.get(x, y)
    }

    /// Reinterprets the projected scores as a score matrix, e.g. to apply
    /// the projection operator a second time.
    pub fn to_llull(&self) -> LlullMatrix {
        LlullMatrix::from_table(self.candidates.clone(), self.table().clone())
    }

    pub(crate) fn table(&self) -> &PairTable {
        &self.table
    }
}

impl Scores for ProjectedScores {
    fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    fn score(&self, x: usize, y: usize) -> &Rational {
        self.table.get(x, y)
    }
}

/// The full projection operator on complete score matrices: closure,
/// margins, admissible order, intermediate margins, projected margins,
/// scores. Applying it twice returns the same matrix as applying it once,
/// and the result does not depend on the admissible order, so the public
/// operator is a function of the matrix alone.
pub fn project(matrix: &LlullMatrix) -> Result<ProjectedScores> {
    let order = default_order(matrix)?;
    project_with_order(matrix, &order)
}

/// Projection along a caller-supplied admissible order. Exists so the
/// order-independence property can be exercised literally; ordinary use
/// goes through [`project`].
pub fn project_with_order(
    matrix: &LlullMatrix,
    order: &AdmissibleOrder,
) -> Result<ProjectedScores> {
    if let Some(violation) = validate_gamma(matrix).into_iter().next() {
        return Err(Error::NotComplete(violation));
    }
    let indirect = indirect_scores(matrix);
    let indirect_margins = margins(&indirect);
    let intermediate = intermediate_margins(&indirect_margins, order)?;
    Ok(ProjectedScores::from_margins(&projected_margins(
        &intermediate,
    )))
}

/// The admissible order the pipeline uses by default: candidates sorted
/// by tie-splitting ranks of the codual of the comparison relation, with
/// declared order breaking ties.
pub fn default_order(matrix: &LlullMatrix) -> Result<AdmissibleOrder> {
    if let Some(violation) = validate_gamma(matrix).into_iter().next() {
        return Err(Error::NotComplete(violation));
    }
    let indirect = indirect_scores(matrix);
    let nu = comparison_relation(&indirect)?;
    let ranks = copeland_ranks(&nu.codual());
    admissible_order(&nu, &ranks)
}

/// True when `matrix` already has the shape of a projection output along
/// `order`: ordered entries dominate their transposes and every margin is
/// the maximum of the margins over intermediate steps.
pub fn is_projection_shaped(matrix: &LlullMatrix, order: &AdmissibleOrder) -> bool {
    let n = order.candidates().len();
    let m = margins(matrix);
    let at = |i: usize, j: usize| m.get(order.at(i), order.at(j));
    for i in 0..n {
        for j in (i + 1)..n {
            if *at(i, j) < Rational::zero() {
                return false;
            }
            for k in (i + 1)..j {
                if *at(i, j) != *at(i, k).max(at(k, j)) {
                    return false;
                }
            }
        }
    }
    true
}
