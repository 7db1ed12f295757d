//! Machine-readable check verdicts shared by every verification suite.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn ok(check: impl Into<String>) -> CheckResult {
        CheckResult {
            check: check.into(),
            pass: true,
            witness: None,
        }
    }

    pub fn fail(check: impl Into<String>, location: String, lhs: String, rhs: String) -> CheckResult {
        CheckResult {
            check: check.into(),
            pass: false,
            witness: Some(Witness { location, lhs, rhs }),
        }
    }

    pub fn of(check: impl Into<String>, witness: Option<Witness>) -> CheckResult {
        CheckResult {
            check: check.into(),
            pass: witness.is_none(),
            witness,
        }
    }
}

pub fn all_pass(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.pass)
}

pub fn first_failure(results: &[CheckResult]) -> Option<&CheckResult> {
    results.iter().find(|r| !r.pass)
}
