use std::fmt;

use crate::error::{Error, Result};

/// The declared candidate set of a vote.
///
/// Candidates are identified by name; the declared order is significant
/// because every deterministic tie-break in the pipeline falls back to it.
/// Internally candidates are handled as indices into this set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSet {
    names: Vec<String>,
}

impl CandidateSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::Parse {
                line: 0,
                message: "empty candidate set".into(),
            });
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::Parse {
                    line: 0,
                    message: "empty candidate name".into(),
                });
            }
            if names[..i].contains(name) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("duplicate candidate \"{name}\""),
                });
            }
        }
        Ok(CandidateSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false // N >= 1 by construction
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Set obtained by collapsing `members` (candidate indices) into the
    /// single candidate named after the first member in declared order.
    pub fn contract(&self, members: &[usize]) -> Result<CandidateSet> {
        let first = members
            .iter()
            .copied()
            .min()
            .ok_or(Error::InvalidPartition)?;
        let names = (0..self.len())
            .filter(|i| *i == first || !members.contains(i))
            .map(|i| self.names[i].clone());
        CandidateSet::new(names)
    }
}

impl fmt::Display for CandidateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(" "))
    }
}
