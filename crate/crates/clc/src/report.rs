//! One-stop tally: runs the whole pipeline and keeps every intermediate
//! stage so detailed output can mirror the hand calculation.

use serde_json::{json, Value};

use crate::closure::{comparison_relation, indirect_scores, margins, IndirectScores, MarginMatrix, Relation};
use crate::error::{Error, Result};
use crate::ordering::{admissible_order, copeland_ranks, AdmissibleOrder, CopelandRanks};
use crate::profile::{aggregate, validate_gamma, LlullMatrix, Profile};
use crate::projection::{
    intermediate_margins, projected_margins, IntermediateMargins, ProjectedMargins,
    ProjectedScores,
};
use crate::rating::{rank_like_rates, social_preorder, RateVector, SocialOrdering};
use crate::rational::{format_compact, format_decimal, format_exact, Rational};

/// Every stage of a tally, each derivable from the previous one.
#[derive(Clone, Debug)]
pub struct TallyReport {
    llull: LlullMatrix,
    indirect: IndirectScores,
    indirect_margins: MarginMatrix,
    comparison: Relation,
    ranks: CopelandRanks,
    order: AdmissibleOrder,
    intermediate: IntermediateMargins,
    projected_margins: ProjectedMargins,
    projected: ProjectedScores,
    rates: RateVector,
    social: SocialOrdering,
    total_weight: Option<Rational>,
}

impl TallyReport {
    /// Tallies a complete score matrix. `total_weight` is display-only:
    /// when given, tables show absolute counts `v * W` instead of
    /// fractions.
    pub fn from_matrix(llull: LlullMatrix, total_weight: Option<Rational>) -> Result<TallyReport> {
        if let Some(violation) = validate_gamma(&llull).into_iter().next() {
            return Err(Error::NotComplete(violation));
        }
        let indirect = indirect_scores(&llull);
        let indirect_margins = margins(&indirect);
        let comparison = comparison_relation(&indirect)?;
        let ranks = copeland_ranks(&comparison.codual());
        let order = admissible_order(&comparison, &ranks)?;
        let intermediate = intermediate_margins(&indirect_margins, &order)?;
        let projected_margins = projected_margins(&intermediate);
        let projected = ProjectedScores::from_margins(&projected_margins);
        let rates = rank_like_rates(&projected);
        let social = social_preorder(&rates);
        Ok(TallyReport {
            llull,
            indirect,
            indirect_margins,
            comparison,
            ranks,
            order,
            intermediate,
            projected_margins,
            projected,
            rates,
            social,
            total_weight,
        })
    }

    pub fn from_profile(profile: &Profile) -> Result<TallyReport> {
        let llull = aggregate(profile)?;
        TallyReport::from_matrix(llull, Some(profile.total_weight().clone()))
    }

    pub fn llull(&self) -> &LlullMatrix {
        &self.llull
    }

    pub fn indirect(&self) -> &IndirectScores {
        &self.indirect
    }

    pub fn indirect_margins(&self) -> &MarginMatrix {
        &self.indirect_margins
    }

    pub fn comparison(&self) -> &Relation {
        &self.comparison
    }

    pub fn ranks(&self) -> &CopelandRanks {
        &self.ranks
    }

    pub fn order(&self) -> &AdmissibleOrder {
        &self.order
    }

    pub fn intermediate(&self) -> &IntermediateMargins {
        &self.intermediate
    }

    pub fn projected_margins(&self) -> &ProjectedMargins {
        &self.projected_margins
    }

    pub fn projected(&self) -> &ProjectedScores {
        &self.projected
    }

    pub fn rates(&self) -> &RateVector {
        &self.rates
    }

    pub fn social(&self) -> &SocialOrdering {
        &self.social
    }

    pub fn total_weight(&self) -> Option<&Rational> {
        self.total_weight.as_ref()
    }

    /// Default output: one `NAME RATE` line per candidate, best first.
    pub fn render_rates(&self, digits: usize) -> String {
        let candidates = self.llull.candidates();
        let mut out = String::new();
        for &c in self.order.sequence() {
            out.push_str(candidates.name(c));
            out.push(' ');
            out.push_str(&format_decimal(self.rates.get(c), digits));
            out.push('\n');
        }
        out
    }

    /// Full stage-by-stage tables. Score tables follow the declared
    /// candidate order and star entries that beat their transpose; margin
    /// tables follow the admissible order, upper triangle only.
    pub fn render_detailed(&self, digits: usize) -> String {
        let candidates = self.llull.candidates();
        let n = candidates.len();
        let declared: Vec<usize> = (0..n).collect();
        let cell = |v: &Rational| match &self.total_weight {
            Some(w) => format_compact(&(v * w)),
            None => format_decimal(v, digits),
        };
        let mut out = String::new();

        out.push_str(&format!("Candidates: {}\n", candidates));
        if let Some(w) = &self.total_weight {
            out.push_str(&format!("Total weight: {}\n", format_compact(w)));
        }
        out.push('\n');

        let unit = match &self.total_weight {
            Some(w) => format!("counts out of {}", format_compact(w)),
            None => "fractions".to_string(),
        };
        out.push_str(&render_table(
            &format!("Original scores ({unit})"),
            candidates.names(),
            &declared,
            |x, y| Some(cell(self.llull.get(x, y))),
            |x, y| self.llull.get(x, y) > self.llull.get(y, x),
        ));
        out.push_str(&render_table(
            &format!("Indirect scores ({unit})"),
            candidates.names(),
            &declared,
            |x, y| Some(cell(self.indirect.get(x, y))),
            |x, y| self.indirect.get(x, y) > self.indirect.get(y, x),
        ));

        out.push_str("Copeland ranks (tie-splitting): ");
        let ranks: Vec<String> = (0..n)
            .map(|c| format!("{}:{}", candidates.name(c), format_compact(self.ranks.get(c))))
            .collect();
        out.push_str(&ranks.join(" "));
        out.push('\n');
        out.push_str(&format!(
            "Admissible order: {}\n\n",
            self.order.names().join(" ")
        ));

        let seq = self.order.sequence();
        out.push_str(&render_table(
            &format!("Indirect margins (admissible order, {unit})"),
            candidates.names(),
            seq,
            |x, y| {
                (self.order.position(x) < self.order.position(y))
                    .then(|| cell(self.indirect_margins.get(x, y)))
            },
            |_, _| false,
        ));

        let sigma: Vec<String> = self.intermediate.values().iter().map(&cell).collect();
        out.push_str(&format!("Intermediate margins: {}\n\n", sigma.join(" ")));

        out.push_str(&render_table(
            &format!("Projected margins (admissible order, {unit})"),
            candidates.names(),
            seq,
            |x, y| {
                (self.order.position(x) < self.order.position(y))
                    .then(|| cell(self.projected_margins.get(x, y)))
            },
            |_, _| false,
        ));

        let rates: Vec<String> = seq
            .iter()
            .map(|&c| format_decimal(self.rates.get(c), digits))
            .collect();
        out.push_str(&format!("Rates: {}\n", rates.join(" ")));
        out.push_str(&format!(
            "Social ranking: {}\n",
            self.social.describe(candidates)
        ));
        out
    }

    /// Machine-readable report. Every number appears twice, as an exact
    /// `p/q` string and as a decimal rounded to `digits`.
    pub fn to_json(&self, digits: usize) -> Value {
        let candidates = self.llull.candidates();
        let n = candidates.len();
        let number = |v: &Rational| {
            json!({
                "exact": format_exact(v),
                "decimal": format_decimal(v, digits),
            })
        };
        let matrix = |get: &dyn Fn(usize, usize) -> Rational| -> Value {
            (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| if x == y { Value::Null } else { number(&get(x, y)) })
                        .collect::<Vec<Value>>()
                })
                .collect::<Vec<Vec<Value>>>()
                .into()
        };
        let classes: Vec<Vec<&str>> = self
            .social
            .tie_classes
            .iter()
            .map(|class| class.iter().map(|&c| candidates.name(c)).collect())
            .collect();
        json!({
            "candidates": candidates.names(),
            "total_weight": self.total_weight.as_ref().map(number),
            "llull": matrix(&|x, y| self.llull.get(x, y).clone()),
            "indirect_scores": matrix(&|x, y| self.indirect.get(x, y).clone()),
            "indirect_margins": matrix(&|x, y| self.indirect_margins.get(x, y).clone()),
            "ranks": (0..n).map(|c| number(self.ranks.get(c))).collect::<Vec<_>>(),
            "order": self.order.names(),
            "intermediate": self.intermediate.values().iter().map(number).collect::<Vec<_>>(),
            "projected": matrix(&|x, y| self.projected.get(x, y).clone()),
            "projected_margins": matrix(&|x, y| self.projected_margins.get(x, y).clone()),
            "rates": (0..n).map(|c| number(self.rates.get(c))).collect::<Vec<_>>(),
            "preorder": { "classes": classes },
        })
    }
}

/// Plain aligned table: `display` gives the row/column candidate order,
/// `cell` returns `None` for suppressed cells (diagonal, lower triangle),
/// `star` appends `*` to entries that beat their transpose.
fn render_table(
    title: &str,
    names: &[String],
    display: &[usize],
    cell: impl Fn(usize, usize) -> Option<String>,
    star: impl Fn(usize, usize) -> bool,
) -> String {
    let k = display.len();
    let mut cells = vec![vec![String::new(); k]; k];
    for (i, &x) in display.iter().enumerate() {
        for (j, &y) in display.iter().enumerate() {
            cells[i][j] = if x == y {
                ".".to_string()
            } else {
                match cell(x, y) {
                    Some(mut text) => {
                        if star(x, y) {
                            text.push('*');
                        }
                        text
                    }
                    None => ".".to_string(),
                }
            };
        }
    }
    let name_width = display
        .iter()
        .map(|&c| names[c].len())
        .max()
        .unwrap_or(0)
        .max(1);
    let mut widths = vec![0usize; k];
    for (j, width) in widths.iter_mut().enumerate() {
        *width = cells
            .iter()
            .map(|row| row[j].len())
            .max()
            .unwrap_or(0)
            .max(names[display[j]].len());
    }
    let mut out = String::new();
    out.push_str(title);
    out.push_str(":\n");
    let mut header = " ".repeat(name_width + 2);
    for (j, &y) in display.iter().enumerate() {
        header.push_str(&format!("{:>width$}  ", names[y], width = widths[j]));
    }
    out.push_str(header.trim_end());
    out.push('\n');
    for (i, &x) in display.iter().enumerate() {
        let mut line = format!("{:>name_width$}  ", names[x]);
        for (j, _) in display.iter().enumerate() {
            line.push_str(&format!("{:>width$}  ", cells[i][j], width = widths[j]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push('\n');
    out
}
