//! Verdicts, witnesses and per-check reports shared by every checker.

use serde::Serialize;
use serde_json::Value;

use crate::ring::{coeff_json, CoeffPoly, Comparison, MotivePoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The implemented mathematics holds but a stated variant does not; see the note.
    Flagged,
}

/// Completion (or lack of one) in which a check was evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    Adic,
    Dimensional,
    /// Finite classes compared without truncation.
    Exact,
}

impl From<crate::ring::Mode> for CheckMode {
    fn from(m: crate::ring::Mode) -> Self {
        match m {
            crate::ring::Mode::Adic => CheckMode::Adic,
            crate::ring::Mode::Dimensional => CheckMode::Dimensional,
        }
    }
}

/// First point where two sides of an identity disagree.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    /// Human-readable position, e.g. `"k=5"` or `"t^3"`.
    pub location: String,
    pub exponent: Option<i64>,
    pub expected: Value,
    pub actual: Value,
    pub delta: Value,
}

impl Witness {
    pub fn from_coeffs(location: impl Into<String>, exponent: i64, actual: &CoeffPoly, expected: &CoeffPoly) -> Self {
        Witness {
            location: location.into(),
            exponent: Some(exponent),
            expected: coeff_json(expected),
            actual: coeff_json(actual),
            delta: coeff_json(&actual.sub(expected)),
        }
    }

    pub fn from_comparison(location: impl Into<String>, cmp: &Comparison) -> Option<Self> {
        match cmp {
            Comparison::EqualUpTo { .. } => None,
            Comparison::Unequal { exponent, lhs, rhs, .. } => {
                Some(Self::from_coeffs(location, *exponent, lhs, rhs))
            }
        }
    }

    /// Witness for two exact classes, or `None` if they agree.
    pub fn from_polys(location: impl Into<String>, actual: &MotivePoly, expected: &MotivePoly) -> Option<Self> {
        actual
            .first_difference(expected)
            .map(|(e, a, b)| Self::from_coeffs(location, e, &a, &b))
    }

    pub fn scalar(location: impl Into<String>, actual: impl ToString, expected: impl ToString) -> Self {
        let (a, e) = (actual.to_string(), expected.to_string());
        Witness {
            location: location.into(),
            exponent: None,
            delta: Value::String(format!("{a} vs {e}")),
            expected: Value::String(e),
            actual: Value::String(a),
        }
    }
}

/// Result of one identity check, before the harness attaches ids and timing.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub verdict: Verdict,
    pub mode: CheckMode,
    pub window: Option<(i64, i64)>,
    pub witness: Option<Witness>,
    pub note: Option<String>,
    pub details: Value,
}

impl CheckOutcome {
    pub fn pass(mode: CheckMode) -> Self {
        CheckOutcome {
            verdict: Verdict::Pass,
            mode,
            window: None,
            witness: None,
            note: None,
            details: Value::Null,
        }
    }

    pub fn fail(mode: CheckMode, witness: Witness) -> Self {
        CheckOutcome {
            verdict: Verdict::Fail,
            witness: Some(witness),
            ..Self::pass(mode)
        }
    }

    pub fn flagged(mode: CheckMode, note: impl Into<String>) -> Self {
        CheckOutcome {
            verdict: Verdict::Flagged,
            note: Some(note.into()),
            ..Self::pass(mode)
        }
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    /// Pass if `witness` is `None`, otherwise fail with it.
    pub fn from_witness(mode: CheckMode, witness: Option<Witness>) -> Self {
        match witness {
            None => Self::pass(mode),
            Some(w) => Self::fail(mode, w),
        }
    }

    pub fn with_window(mut self, window: (i64, i64)) -> Self {
        self.window = Some(match self.window {
            None => window,
            Some((lo, hi)) => (lo.max(window.0), hi.min(window.1)),
        });
        self
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = details;
        self
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Folds several sub-checks into one: the first failure wins, then the
    /// first flag (with its note and witness); windows intersect.
    pub fn combine(mode: CheckMode, parts: impl IntoIterator<Item = CheckOutcome>) -> Self {
        let mut acc = Self::pass(mode);
        for part in parts {
            if part.verdict == Verdict::Fail {
                return part;
            }
            if part.verdict == Verdict::Flagged && acc.verdict == Verdict::Pass {
                acc.verdict = Verdict::Flagged;
                acc.note = part.note.clone();
                acc.witness = part.witness.clone();
            }
            if let Some(w) = part.window {
                acc = acc.with_window(w);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combine_keeps_first_failure() {
        let w = Witness::scalar("x", 1, 2);
        let out = CheckOutcome::combine(
            CheckMode::Exact,
            [
                CheckOutcome::pass(CheckMode::Exact).with_window((0, 10)),
                CheckOutcome::fail(CheckMode::Exact, w.clone()),
                CheckOutcome::fail(CheckMode::Exact, Witness::scalar("y", 3, 4)),
            ],
        );
        assert_eq!(out.verdict, Verdict::Fail);
        assert_eq!(out.witness, Some(w));
    }

    #[test]
    fn combine_intersects_windows() {
        let out = CheckOutcome::combine(
            CheckMode::Adic,
            [
                CheckOutcome::pass(CheckMode::Adic).with_window((0, 10)),
                CheckOutcome::pass(CheckMode::Adic).with_window((2, 12)),
            ],
        );
        assert_eq!(out.window, Some((2, 10)));
    }
}
