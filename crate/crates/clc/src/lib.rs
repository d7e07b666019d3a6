//! Continuous Llull Condorcet (CLC) rating of complete preferential
//! votes.
//!
//! Given ballots that compare every pair of candidates (strict rankings,
//! possibly with ties), this crate computes a *rank-like rate* for each
//! candidate: a number between 1 (unanimously first) and N (unanimously
//! last) whose average is always `(N + 1) / 2`. The rates vary
//! continuously with the ballot data, respect two-class majorities, and
//! are consistent under cloning of candidates, which no classical
//! positional count achieves.
//!
//! The tally runs in five stages, each exposed on its own:
//!
//! 1. [`profile`] — aggregate ballots into the pairwise score matrix
//!    (`v_xy + v_yx = 1` for complete votes).
//! 2. [`closure`] — widest-path indirect scores and the comparison
//!    relation they induce (always a partial order).
//! 3. [`ordering`] — a total order extending that relation, seeded by
//!    tie-splitting ranks.
//! 4. [`projection`] — projection of the indirect margins onto margins
//!    that are monotone along the order and ultrametric in absolute
//!    value; an idempotent, order-independent operator.
//! 5. [`rating`] — rank-like rates from the projected scores and the
//!    social preorder, ties kept visible.
//!
//! All arithmetic is exact rational: whether two candidates are *exactly*
//! tied decides which relations hold downstream, and no floating-point
//! rounding is allowed to blur that.
//!
//! ```
//! use clc::{parse_profile, TallyReport, UnlistedPolicy};
//!
//! let profile = parse_profile(
//!     "candidates: A B C\n2: A > B > C\n1: B = C > A\n",
//!     UnlistedPolicy::Error,
//! )?;
//! let report = TallyReport::from_profile(&profile)?;
//! assert_eq!(report.render_rates(4), "A 1.6667\nB 2.0000\nC 2.3333\n");
//! # Ok::<(), clc::Error>(())
//! ```
//!
//! The [`verify`] module turns the method's guarantees into executable
//! checks (decomposition, two-class majority, clone consistency, weak
//! monotonicity, continuity) with seeded generators for structured
//! random inputs.

pub mod candidates;
pub mod cli;
pub mod closure;
pub mod error;
mod matrix;
pub mod ordering;
pub mod profile;
pub mod projection;
pub mod rating;
pub mod rational;
pub mod report;
pub mod verify;

pub use candidates::CandidateSet;
pub use closure::{
    comparison_relation, indirect_scores, margins, IndirectScores, MarginMatrix, Relation,
};
pub use error::{Error, Result};
pub use matrix::Scores;
pub use ordering::{
    admissible_order, all_admissible_orders, all_admissible_orders_bounded, copeland_ranks,
    AdmissibleOrder, CopelandRanks, ENUMERATION_BOUND,
};
pub use profile::{
    aggregate, ballot_to_scores, parse_matrix_tsv, parse_profile, render_matrix_tsv,
    validate_gamma, Ballot, GammaViolation, GammaViolationKind, LlullMatrix, Profile,
    UnlistedPolicy,
};
pub use projection::{
    default_order, intermediate_margins, is_projection_shaped, project, project_with_order,
    projected_margins, IntermediateMargins, ProjectedMargins, ProjectedScores,
};
pub use rating::{
    borda_mean_ranks, maximin_scores, rank_like_rates, social_preorder, RateVector,
    SocialOrdering,
};
pub use rational::Rational;
pub use report::TallyReport;
