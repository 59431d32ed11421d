//! Problem statements shared by solvers, reductions and checkers, plus the
//! reference verifier every solver's witness is checked against.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::ratio::Ratio;

/// One of the four decision problems, with its parameters.
///
/// `k` is always the minimum size of the demanded vertex set. `s` is a hop
/// distance bound (`s >= 1`); `gamma` is an exact rational in `]0,1[`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ProblemSpec {
    Clique { k: usize },
    SClub { s: usize, k: usize },
    SClique { s: usize, k: usize },
    GammaCs { gamma: Ratio, k: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("distance parameter must satisfy s >= 1")]
    InvalidS,
}

impl ProblemSpec {
    pub fn k(&self) -> usize {
        match *self {
            ProblemSpec::Clique { k }
            | ProblemSpec::SClub { k, .. }
            | ProblemSpec::SClique { k, .. }
            | ProblemSpec::GammaCs { k, .. } => k,
        }
    }

    pub fn with_k(&self, k: usize) -> ProblemSpec {
        let mut out = *self;
        match &mut out {
            ProblemSpec::Clique { k: kk }
            | ProblemSpec::SClub { k: kk, .. }
            | ProblemSpec::SClique { k: kk, .. }
            | ProblemSpec::GammaCs { k: kk, .. } => *kk = k,
        }
        out
    }

    pub fn validate(&self) -> Result<(), SpecError> {
        match *self {
            ProblemSpec::SClub { s, .. } | ProblemSpec::SClique { s, .. } if s == 0 => {
                Err(SpecError::InvalidS)
            }
            // Ratio construction already guarantees 0 < gamma < 1
            _ => Ok(()),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            ProblemSpec::Clique { .. } => "clique",
            ProblemSpec::SClub { .. } => "s-club",
            ProblemSpec::SClique { .. } => "s-clique",
            ProblemSpec::GammaCs { .. } => "gcs",
        }
    }
}

/// Result of an exact solve: the decision, a witness on yes, and search
/// statistics. A yes-decision always carries a witness that passes
/// [`verify_solution`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub decision: bool,
    pub witness: Option<Vec<usize>>,
    pub nodes_explored: u64,
    pub method: &'static str,
}

impl SolveOutcome {
    pub fn yes(mut witness: Vec<usize>, nodes: u64, method: &'static str) -> Self {
        witness.sort_unstable();
        SolveOutcome {
            decision: true,
            witness: Some(witness),
            nodes_explored: nodes,
            method,
        }
    }

    pub fn no(nodes: u64, method: &'static str) -> Self {
        SolveOutcome {
            decision: false,
            witness: None,
            nodes_explored: nodes,
            method,
        }
    }
}

/// Checks the problem predicate on `S` without the size requirement.
///
/// Duplicate entries are ignored; any out-of-range vertex fails the check.
pub fn verify_predicate(g: &Graph, spec: &ProblemSpec, s: &[usize]) -> bool {
    if s.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let set = VertexSet::from_iter(g.n(), s.iter().copied());
    let members = set.to_vec();
    let size = members.len();
    match *spec {
        ProblemSpec::Clique { .. } => pairs_ok(&members, |u, v| g.has_edge(u, v)),
        ProblemSpec::SClique { s: dist, .. } => {
            members.iter().all(|&u| {
                let d = g.bfs_distances(u, None);
                members.iter().all(|&v| d[v] <= dist)
            })
        }
        ProblemSpec::SClub { s: dist, .. } => {
            members.iter().all(|&u| {
                let d = g.bfs_distances(u, Some(&set));
                members.iter().all(|&v| d[v] <= dist)
            })
        }
        ProblemSpec::GammaCs { gamma, .. } => {
            if size == 0 {
                return true;
            }
            members.iter().all(|&u| {
                let deg_s = g
                    .neighbors(u)
                    .iter()
                    .filter(|&&w| set.contains(w))
                    .count();
                // b * deg_S(u) >= a * (|S|-1), exactly
                gamma.le_times((size - 1) as u64, deg_s as u64)
            })
        }
    }
}

/// Full solution check: the predicate holds and `|S| >= k`.
pub fn verify_solution(g: &Graph, spec: &ProblemSpec, s: &[usize]) -> bool {
    let set = VertexSet::from_iter(g.n(), s.iter().copied().filter(|&v| v < g.n()));
    set.len() >= spec.k() && verify_predicate(g, spec, s)
}

fn pairs_ok(members: &[usize], mut ok: impl FnMut(usize, usize) -> bool) -> bool {
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if !ok(u, v) {
                return false;
            }
        }
    }
    true
}
