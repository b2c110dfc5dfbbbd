//! Violation reports shared by every law checker.

use std::fmt;

/// A single failed instance of a law, with the tuple that witnesses it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<String>,
    pub details: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at ({}): {}",
            self.law,
            self.witness.join(", "),
            self.details
        )
    }
}

/// How many instances of one law were checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawTally {
    pub law: String,
    pub checked: u64,
}

/// Outcome of an exhaustive check: per-law instance counts plus every violation found.
///
/// An empty violation list means every checked instance held.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    tallies: Vec<LawTally>,
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records that `n` more instances of `law` were checked.
    pub fn count(&mut self, law: &str, n: u64) {
        match self.tallies.iter_mut().find(|t| t.law == law) {
            Some(t) => t.checked += n,
            None => self.tallies.push(LawTally {
                law: law.to_string(),
                checked: n,
            }),
        }
    }

    /// Records one checked instance of `law`; on failure the violation is stored.
    pub fn check<W, D>(&mut self, law: &str, holds: bool, witness: W, details: D)
    where
        W: FnOnce() -> Vec<String>,
        D: FnOnce() -> String,
    {
        self.count(law, 1);
        if !holds {
            self.violations.push(Violation {
                law: law.to_string(),
                witness: witness(),
                details: details(),
            });
        }
    }

    pub fn push(&mut self, violation: Violation) {
        self.violations.push(violation);
    }

    pub fn merge(&mut self, other: ValidationReport) {
        for t in other.tallies {
            self.count(&t.law, t.checked);
        }
        self.violations.extend(other.violations);
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn tallies(&self) -> &[LawTally] {
        &self.tallies
    }

    /// Total number of law instances checked.
    pub fn checks(&self) -> u64 {
        self.tallies.iter().map(|t| t.checked).sum()
    }

    pub fn checks_for(&self, law: &str) -> u64 {
        self.tallies
            .iter()
            .find(|t| t.law == law)
            .map_or(0, |t| t.checked)
    }

    pub fn violations_of<'a>(&'a self, law: &'a str) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations.iter().filter(move |v| v.law == law)
    }
}
