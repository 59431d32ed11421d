//! Machine checks for everything the gadget constructions promise: exact
//! distance tables, degeneracy and bipartiteness bounds, role cardinalities
//! and degrees, target-size arithmetic, witness lifting/projection, and
//! full decision equivalence against the exact solvers.
//!
//! Checks are deliberately independent of the construction code they audit:
//! distances come from raw BFS, cardinalities are recounted from the role
//! labels, and numeric side conditions are re-evaluated from scratch.

mod distance;
mod roundtrip;
mod structure;
mod witness;

pub use distance::check_distance_claims;
pub use roundtrip::{check_yellow_count, roundtrip_equivalence, TargetKind};
pub use structure::check_structure;
pub use witness::{lift_witness, project_witness};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::reductions::ReduceError;
use crate::solvers::SolveError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A budget ran out before the check finished. Never counts as a pass.
    Skipped,
}

/// Outcome of one machine check. A failing report always carries a concrete
/// counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<String>,
    pub details: String,
}

impl ClaimReport {
    pub fn pass(claim: impl Into<String>, details: impl Into<String>) -> Self {
        ClaimReport {
            claim: claim.into(),
            status: CheckStatus::Pass,
            counterexample: None,
            details: details.into(),
        }
    }

    pub fn fail(
        claim: impl Into<String>,
        counterexample: impl Into<String>,
        details: impl Into<String>,
    ) -> Self {
        ClaimReport {
            claim: claim.into(),
            status: CheckStatus::Fail,
            counterexample: Some(counterexample.into()),
            details: details.into(),
        }
    }

    pub fn skipped(claim: impl Into<String>, details: impl Into<String>) -> Self {
        ClaimReport {
            claim: claim.into(),
            status: CheckStatus::Skipped,
            counterexample: None,
            details: details.into(),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// True iff every report passed (skips do not count).
pub fn all_pass(reports: &[ClaimReport]) -> bool {
    reports.iter().all(ClaimReport::is_pass)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("check expects a {0} artifact")]
    WrongArtifactKind(&'static str),
    #[error("trivially answered artifact has no gadget structure to check")]
    TrivialArtifact,
    #[error("witness is not a source clique of size {0}")]
    NotASourceClique(usize),
    #[error("solution fails verification on the produced instance")]
    InvalidSolution,
    #[error("projection of a valid solution is not a source clique ({0}); soundness is broken")]
    ProjectionNotClique(String),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}
