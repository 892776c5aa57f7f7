use serde::Serialize;

use crate::linalg::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// One failing instance of an identity.
///
/// `basis_indices` are 1-based, naming `e_1, ..., e_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct Violation {
    pub axiom_id: String,
    pub omega_indices: Vec<String>,
    pub basis_indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
    /// Diagnostics that do not affect the verdict (verbose mode only).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn from_violations(violations: Vec<Violation>) -> Self {
        let verdict = if violations.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        CheckReport {
            verdict,
            violations,
            notes: Vec::new(),
        }
    }

    pub fn pass() -> Self {
        Self::from_violations(Vec::new())
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn merge(mut self, other: CheckReport) -> Self {
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
        let mut merged = Self::from_violations(self.violations);
        merged.notes = self.notes;
        merged
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
