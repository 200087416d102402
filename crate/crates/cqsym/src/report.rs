//! Verdict types shared by the identity checks. A check never trusts a
//! closed form: on failure the report carries both sides.

use std::fmt;

/// Location and both sides of a failed comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Where the first disagreement was found, e.g. `mu=[4,2]` or `r=1`.
    pub key: String,
    pub lhs: String,
    pub rhs: String,
}

/// Result of a single verification instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    /// Human-readable instance label.
    pub label: String,
    pub pass: bool,
    pub mismatch: Option<Mismatch>,
    /// Set when a product factor with negative q-integer argument was
    /// annihilated to zero during evaluation.
    pub negative_factor_seen: bool,
}

impl CheckReport {
    pub fn pass(label: impl Into<String>) -> Self {
        CheckReport {
            label: label.into(),
            pass: true,
            mismatch: None,
            negative_factor_seen: false,
        }
    }

    pub fn fail(label: impl Into<String>, mismatch: Mismatch) -> Self {
        CheckReport {
            label: label.into(),
            pass: false,
            mismatch: Some(mismatch),
            negative_factor_seen: false,
        }
    }

    pub fn with_negative_flag(mut self, seen: bool) -> Self {
        self.negative_factor_seen = seen;
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass {
            write!(f, "{}: pass", self.label)
        } else {
            let m = self.mismatch.as_ref().expect("failed report has a mismatch");
            write!(
                f,
                "{}: MISMATCH at {} (lhs = {}, rhs = {})",
                self.label, m.key, m.lhs, m.rhs
            )
        }
    }
}

/// Outcome of a relation check whose preconditions may not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Report(CheckReport),
    NotApplicable(String),
}

impl CheckOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, CheckOutcome::Report(r) if r.pass)
    }

    pub fn is_applicable(&self) -> bool {
        matches!(self, CheckOutcome::Report(_))
    }
}
