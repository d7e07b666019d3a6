//! Ballots, profiles and their aggregation into the pairwise score matrix.
//!
//! A ballot ranks the full candidate set, with ties allowed inside a tier.
//! The profile's Llull matrix holds, for every ordered pair `(x, y)`, the
//! fraction of the vote weight preferring `x` to `y`, a tie counting half
//! a vote each way. Complete ballots make the matrix *complete*:
//! `v_xy + v_yx = 1` on every pair (the set Γ).

use std::fmt;

use num::Zero;

use crate::candidates::CandidateSet;
use crate::error::{Error, Result};
use crate::matrix::{PairTable, Scores};
use crate::rational::{parse_rational, rat, Rational};

/// One ranked-with-ties ballot: earlier tiers are preferred, candidates in
/// the same tier are mutually tied. Tiers partition the candidate set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ballot {
    tiers: Vec<Vec<usize>>,
    weight: Rational,
}

impl Ballot {
    /// Builds a complete ballot. Tiers must be non-empty, disjoint, and
    /// jointly cover the candidate set; the weight must be non-negative.
    pub fn new(
        candidates: &CandidateSet,
        tiers: Vec<Vec<usize>>,
        weight: Rational,
    ) -> Result<Ballot> {
        if weight < Rational::zero() {
            return Err(Error::NegativeWeight { line: 0 });
        }
        let n = candidates.len();
        let mut seen = vec![false; n];
        for tier in &tiers {
            if tier.is_empty() {
                return Err(Error::Parse {
                    line: 0,
                    message: "empty tier".into(),
                });
            }
            for &c in tier {
                if c >= n || seen[c] {
                    return Err(Error::DuplicateCandidate {
                        line: 0,
                        name: candidates.name(c.min(n - 1)).to_string(),
                    });
                }
                seen[c] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::IncompleteBallot {
                line: 0,
                missing: candidates.name(missing).to_string(),
            });
        }
        let mut tiers = tiers;
        for tier in &mut tiers {
            tier.sort_unstable();
        }
        Ok(Ballot { tiers, weight })
    }

    pub fn tiers(&self) -> &[Vec<usize>] {
        &self.tiers
    }

    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    /// Tier position of each candidate (0 = most preferred).
    pub fn tier_index(&self, n: usize) -> Vec<usize> {
        let mut pos = vec![usize::MAX; n];
        for (t, tier) in self.tiers.iter().enumerate() {
            for &c in tier {
                pos[c] = t;
            }
        }
        pos
    }
}

/// A weighted multiset of complete ballots over one candidate set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    candidates: CandidateSet,
    ballots: Vec<Ballot>,
    total_weight: Rational,
}

impl Profile {
    pub fn new(candidates: CandidateSet, ballots: Vec<Ballot>) -> Profile {
        let total_weight = ballots
            .iter()
            .fold(Rational::zero(), |acc, b| acc + &b.weight);
        Profile {
            candidates,
            ballots,
            total_weight,
        }
    }

    pub fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    pub fn total_weight(&self) -> &Rational {
        &self.total_weight
    }

    /// True when every ballot weight is a whole number.
    pub fn integer_weights(&self) -> bool {
        self.ballots.iter().all(|b| b.weight.is_integer())
    }

    /// Contracts a clone set to its first member in every ballot.
    /// Fails if some ballot does not treat `members` as a block.
    pub fn contract(&self, members: &[usize]) -> Result<Profile> {
        let contracted = self.candidates.contract(members)?;
        let rep = *members.iter().min().unwrap();
        let mut ballots = Vec::with_capacity(self.ballots.len());
        for ballot in &self.ballots {
            ballots.push(contract_ballot(
                &self.candidates,
                &contracted,
                ballot,
                members,
                rep,
            )?);
        }
        Ok(Profile::new(contracted, ballots))
    }
}

fn contract_ballot(
    original: &CandidateSet,
    contracted: &CandidateSet,
    ballot: &Ballot,
    members: &[usize],
    rep: usize,
) -> Result<Ballot> {
    let describe = || {
        members
            .iter()
            .map(|&c| original.name(c))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let remap = |c: usize| contracted.index_of(original.name(c)).unwrap();
    let mut tiers: Vec<Vec<usize>> = Vec::new();
    let mut emitted = false;
    for tier in &ballot.tiers {
        let inside: Vec<usize> = tier.iter().copied().filter(|c| members.contains(c)).collect();
        let outside: Vec<usize> = tier
            .iter()
            .copied()
            .filter(|c| !members.contains(c))
            .collect();
        if inside.is_empty() {
            tiers.push(outside.iter().map(|&c| remap(c)).collect());
        } else if !outside.is_empty() {
            // Clones tied with outsiders must all sit in this one tier.
            if inside.len() != members.len() {
                return Err(Error::NotAutonomous(describe()));
            }
            let mut mapped: Vec<usize> = outside.iter().map(|&c| remap(c)).collect();
            mapped.push(remap(rep));
            tiers.push(mapped);
            emitted = true;
        } else if !emitted {
            // A run of clone-only tiers becomes a single candidate.
            tiers.push(vec![remap(rep)]);
            emitted = true;
        } else if tiers.last().map_or(false, |t| *t == [remap(rep)]) {
            // Consecutive clone-only tier: collapses into the one emitted.
        } else {
            return Err(Error::NotAutonomous(describe()));
        }
    }
    Ballot::new(contracted, tiers, ballot.weight.clone())
}

/// How to treat candidates a ballot line does not mention.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnlistedPolicy {
    /// Reject the ballot: only complete ballots are meaningful here.
    Error,
    /// Place all unlisted candidates in one final tier, mutually tied.
    TiedLast,
}

/// Parses a ballot file.
///
/// Grammar (UTF-8 text): lines starting with `#` are comments; the first
/// non-comment line is `candidates: NAME NAME ...`; every further
/// non-empty line is `WEIGHT: EXPR` where `WEIGHT` is a non-negative
/// decimal or `p/q` rational and `EXPR` chains tiers with `>`, ties inside
/// a tier with `=`, e.g. `3: A > B = C > D`. Whitespace around tokens is
/// ignored.
pub fn parse_profile(text: &str, unlisted: UnlistedPolicy) -> Result<Profile> {
    let mut candidates: Option<CandidateSet> = None;
    let mut ballots = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some(set) = &candidates else {
            let Some(rest) = trimmed.strip_prefix("candidates:") else {
                return Err(Error::Parse {
                    line,
                    message: "expected \"candidates: NAME NAME ...\"".into(),
                });
            };
            let set = CandidateSet::new(rest.split_whitespace()).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            candidates = Some(set);
            continue;
        };
        ballots.push(parse_ballot_line(set, trimmed, line, unlisted)?);
    }
    match candidates {
        Some(candidates) => Ok(Profile::new(candidates, ballots)),
        None => Err(Error::Parse {
            line: 0,
            message: "missing candidates line".into(),
        }),
    }
}

fn parse_ballot_line(
    candidates: &CandidateSet,
    line_text: &str,
    line: usize,
    unlisted: UnlistedPolicy,
) -> Result<Ballot> {
    let Some((weight_text, expr)) = line_text.split_once(':') else {
        return Err(Error::Parse {
            line,
            message: "expected \"WEIGHT: RANKING\"".into(),
        });
    };
    if weight_text.trim_start().starts_with('-') {
        return Err(Error::NegativeWeight { line });
    }
    let weight = parse_rational(weight_text).ok_or_else(|| Error::Parse {
        line,
        message: format!("invalid weight \"{}\"", weight_text.trim()),
    })?;
    if weight < Rational::zero() {
        return Err(Error::NegativeWeight { line });
    }

    let mut tiers: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; candidates.len()];
    for tier_text in expr.split('>') {
        let mut tier = Vec::new();
        for name in tier_text.split('=') {
            let name = name.trim();
            if name.is_empty() {
                return Err(Error::Parse {
                    line,
                    message: "empty candidate name in ranking".into(),
                });
            }
            let Some(index) = candidates.index_of(name) else {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown candidate \"{name}\""),
                });
            };
            if seen[index] {
                return Err(Error::DuplicateCandidate {
                    line,
                    name: name.to_string(),
                });
            }
            seen[index] = true;
            tier.push(index);
        }
        if tier.is_empty() {
            return Err(Error::Parse {
                line,
                message: "empty tier in ranking".into(),
            });
        }
        tiers.push(tier);
    }

    let missing: Vec<usize> = (0..candidates.len()).filter(|&c| !seen[c]).collect();
    if !missing.is_empty() {
        match unlisted {
            UnlistedPolicy::Error => {
                return Err(Error::IncompleteBallot {
                    line,
                    missing: missing
                        .iter()
                        .map(|&c| candidates.name(c))
                        .collect::<Vec<_>>()
                        .join(", "),
                });
            }
            UnlistedPolicy::TiedLast => tiers.push(missing),
        }
    }
    Ballot::new(candidates, tiers, weight).map_err(|e| match e {
        Error::NegativeWeight { .. } => Error::NegativeWeight { line },
        other => other,
    })
}

/// The pairwise score matrix of a vote: `v_xy` is the weight fraction
/// preferring `x` to `y`. Completeness (`v_xy + v_yx = 1`) is checked by
/// [`validate_gamma`], not enforced on construction, so diagnostics can
/// run on defective input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LlullMatrix {
    candidates: CandidateSet,
    table: PairTable,
}

impl LlullMatrix {
    pub fn from_fn(
        candidates: CandidateSet,
        f: impl FnMut(usize, usize) -> Rational,
    ) -> LlullMatrix {
        let table = PairTable::from_fn(candidates.len(), f);
        LlullMatrix { candidates, table }
    }

    pub(crate) fn from_table(candidates: CandidateSet, table: PairTable) -> LlullMatrix {
        LlullMatrix { candidates, table }
    }

    pub fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    pub fn get(&self, x: usize, y: usize) -> &Rational {
        self.table.get(x, y)
    }

    pub(crate) fn table(&self) -> &PairTable {
        &self.table
    }

    /// Submatrix on `members`, keeping their declared order.
    pub fn restrict(&self, members: &[usize]) -> LlullMatrix {
        let mut members = members.to_vec();
        members.sort_unstable();
        let sub = CandidateSet::new(members.iter().map(|&c| self.candidates.name(c)))
            .expect("restriction of a valid candidate set");
        LlullMatrix::from_fn(sub, |i, j| self.get(members[i], members[j]).clone())
    }

    /// Collapses an autonomous set to its first member.
    pub fn contract(&self, members: &[usize]) -> Result<LlullMatrix> {
        if !self.is_autonomous(members) {
            let names = members
                .iter()
                .map(|&c| self.candidates.name(c))
                .collect::<Vec<_>>()
                .join(", ");
            return Err(Error::NotAutonomous(names));
        }
        let contracted = self.candidates.contract(members)?;
        let rep = |name: &str| {
            let original = self.candidates.index_of(name).unwrap();
            original
        };
        let reps: Vec<usize> = contracted.names().iter().map(|n| rep(n)).collect();
        Ok(LlullMatrix::from_fn(contracted, |i, j| {
            self.get(reps[i], reps[j]).clone()
        }))
    }
}

impl Scores for LlullMatrix {
    fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    fn score(&self, x: usize, y: usize) -> &Rational {
        self.table.get(x, y)
    }
}

/// One defect found by [`validate_gamma`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaViolation {
    pub x: String,
    pub y: String,
    pub kind: GammaViolationKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaViolationKind {
    /// Entry outside `[0, 1]`.
    Range { value: Rational },
    /// `v_xy + v_yx != 1`; carries the residual `v_xy + v_yx - 1`.
    Completeness { residual: Rational },
}

impl fmt::Display for GammaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GammaViolationKind::Range { value } => {
                write!(f, "v({}, {}) = {} is outside [0, 1]", self.x, self.y, value)
            }
            GammaViolationKind::Completeness { residual } => write!(
                f,
                "v({}, {}) + v({}, {}) - 1 = {}",
                self.x, self.y, self.y, self.x, residual
            ),
        }
    }
}

/// Checks membership in Γ: every off-diagonal entry in `[0, 1]` and every
/// pair summing to one. Returns all violations rather than the first.
pub fn validate_gamma(matrix: &LlullMatrix) -> Vec<GammaViolation> {
    let n = matrix.candidates.len();
    let one = rat(1, 1);
    let mut violations = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let v = matrix.get(x, y);
            if *v < Rational::zero() || *v > one {
                violations.push(GammaViolation {
                    x: matrix.candidates.name(x).to_string(),
                    y: matrix.candidates.name(y).to_string(),
                    kind: GammaViolationKind::Range { value: v.clone() },
                });
            }
            if x < y {
                let residual = v + matrix.get(y, x) - &one;
                if !residual.is_zero() {
                    violations.push(GammaViolation {
                        x: matrix.candidates.name(x).to_string(),
                        y: matrix.candidates.name(y).to_string(),
                        kind: GammaViolationKind::Completeness { residual },
                    });
                }
            }
        }
    }
    violations
}

/// Scores of a single ballot: 1 for a strict preference, 1/2 for a tie.
pub fn ballot_to_scores(candidates: &CandidateSet, ballot: &Ballot) -> LlullMatrix {
    let pos = ballot.tier_index(candidates.len());
    let half = rat(1, 2);
    LlullMatrix::from_fn(candidates.clone(), |x, y| {
        use std::cmp::Ordering::*;
        match pos[x].cmp(&pos[y]) {
            Less => rat(1, 1),
            Equal => half.clone(),
            Greater => Rational::zero(),
        }
    })
}

/// Weighted average of the ballot score matrices: the profile's Llull
/// matrix. Fails on zero total weight.
pub fn aggregate(profile: &Profile) -> Result<LlullMatrix> {
    if profile.total_weight().is_zero() {
        return Err(Error::ZeroTotalWeight);
    }
    let candidates = profile.candidates();
    let n = candidates.len();
    let half = rat(1, 2);
    let mut sums = PairTable::zeros(n);
    for ballot in profile.ballots() {
        if ballot.weight().is_zero() {
            continue;
        }
        let pos = ballot.tier_index(n);
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                let contribution = match pos[x].cmp(&pos[y]) {
                    std::cmp::Ordering::Less => ballot.weight().clone(),
                    std::cmp::Ordering::Equal => ballot.weight() * &half,
                    std::cmp::Ordering::Greater => continue,
                };
                let updated = sums.get(x, y) + contribution;
                sums.set(x, y, updated);
            }
        }
    }
    let total = profile.total_weight();
    Ok(LlullMatrix::from_fn(candidates.clone(), |x, y| {
        sums.get(x, y) / total
    }))
}

/// Parses a Llull matrix from tab-separated text: header row and first
/// column carry the candidate names, the diagonal cells are ignored, and
/// entries are decimals or `p/q` rationals. When `total_weight` is given,
/// entries are absolute counts and are divided by it.
pub fn parse_matrix_tsv(text: &str, total_weight: Option<&Rational>) -> Result<LlullMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let Some((header_line, header)) = lines.next() else {
        return Err(Error::Parse {
            line: 0,
            message: "empty matrix file".into(),
        });
    };
    let mut cells = header.split('\t').map(str::trim);
    let corner = cells.next().unwrap_or("");
    if !corner.is_empty() {
        return Err(Error::Parse {
            line: header_line,
            message: "header row must start with an empty cell".into(),
        });
    }
    let candidates = CandidateSet::new(cells.filter(|c| !c.is_empty())).map_err(|e| {
        Error::Parse {
            line: header_line,
            message: e.to_string(),
        }
    })?;
    let n = candidates.len();

    let mut table = PairTable::zeros(n);
    let mut rows_seen = 0usize;
    for (line, row) in lines {
        let mut cells = row.split('\t').map(str::trim);
        let name = cells.next().unwrap_or("");
        let Some(x) = candidates.index_of(name) else {
            return Err(Error::Parse {
                line,
                message: format!("unknown candidate \"{name}\""),
            });
        };
        if x != rows_seen {
            return Err(Error::Parse {
                line,
                message: "rows must follow the header order".into(),
            });
        }
        rows_seen += 1;
        for y in 0..n {
            let cell = cells.next().ok_or_else(|| Error::Parse {
                line,
                message: format!("missing entry for column \"{}\"", candidates.name(y)),
            })?;
            if x == y {
                continue;
            }
            let mut value = parse_rational(cell).ok_or_else(|| Error::Parse {
                line,
                message: format!("invalid entry \"{cell}\""),
            })?;
            if let Some(total) = total_weight {
                value /= total;
            }
            table.set(x, y, value);
        }
    }
    if rows_seen != n {
        return Err(Error::Parse {
            line: 0,
            message: format!("expected {n} rows, found {rows_seen}"),
        });
    }
    Ok(LlullMatrix::from_table(candidates, table))
}

/// Renders a profile in the ballot-file grammar accepted by
/// [`parse_profile`].
pub fn render_profile(profile: &Profile) -> String {
    use crate::rational::format_compact;
    let candidates = profile.candidates();
    let mut out = format!("candidates: {}\n", candidates);
    for ballot in profile.ballots() {
        let expr = ballot
            .tiers()
            .iter()
            .map(|tier| {
                tier.iter()
                    .map(|&c| candidates.name(c))
                    .collect::<Vec<_>>()
                    .join(" = ")
            })
            .collect::<Vec<_>>()
            .join(" > ");
        out.push_str(&format!("{}: {}\n", format_compact(ballot.weight()), expr));
    }
    out
}

/// Renders a matrix in the same TSV layout accepted by
/// [`parse_matrix_tsv`], with exact `p/q` entries and `-` on the diagonal.
pub fn render_matrix_tsv(matrix: &LlullMatrix) -> String {
    use crate::rational::format_exact;
    let candidates = matrix.candidates();
    let n = candidates.len();
    let mut out = String::new();
    out.push('\t');
    out.push_str(&candidates.names().join("\t"));
    out.push('\n');
    for x in 0..n {
        out.push_str(candidates.name(x));
        for y in 0..n {
            out.push('\t');
            if x == y {
                out.push('-');
            } else {
                out.push_str(&format_exact(matrix.get(x, y)));
            }
        }
        out.push('\n');
    }
    out
}
