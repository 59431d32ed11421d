//! Decision-equivalence certification: solve the source with the exact
//! clique solver, solve the produced instance with the appropriate exact
//! solver, and require equal answers; on yes-instances additionally run the
//! lift/project witness round-trip.

use crate::graph::Graph;
use crate::problem::verify_solution;
use crate::ratio::Ratio;
use crate::reductions::{
    reduce_club_even, reduce_club_odd, reduce_gcs_degeneracy, reduce_gcs_ell, ReductionArtifact,
    ReductionKind,
};
use crate::solvers::{max_clique, solve_gcs, solve_s_club, solve_s_clique, GcsStrategy, SolveError};

use super::{lift_witness, project_witness, ClaimReport, VerifyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetKind {
    ClubOdd { s: usize },
    ClubEven { s: usize },
    GcsDegeneracy { gamma: Ratio },
    GcsEll { gamma: Ratio },
}

impl TargetKind {
    fn reduce(&self, g: &Graph, k: usize) -> Result<ReductionArtifact, VerifyError> {
        Ok(match *self {
            TargetKind::ClubOdd { s } => reduce_club_odd(g, k, s)?,
            TargetKind::ClubEven { s } => reduce_club_even(g, k, s)?,
            TargetKind::GcsDegeneracy { gamma } => reduce_gcs_degeneracy(g, k, gamma)?,
            TargetKind::GcsEll { gamma } => reduce_gcs_ell(g, k, gamma)?,
        })
    }
}

/// Runs the full source/target equivalence check for one instance. Budget
/// exhaustion is reported as `Skipped`, never as a pass; parameter errors
/// propagate.
pub fn roundtrip_equivalence(
    g: &Graph,
    k: usize,
    target: TargetKind,
    budget: u64,
) -> Result<ClaimReport, VerifyError> {
    let claim = "equiv.roundtrip";
    let artifact = target.reduce(g, k)?;

    let source = match max_clique(g, budget) {
        Ok(out) => out,
        Err(SolveError::BudgetExceeded(b)) => {
            return Ok(ClaimReport::skipped(claim, format!("source solve hit budget {b}")))
        }
        Err(e) => return Err(e.into()),
    };
    let source_yes = source.witness.as_ref().map_or(0, Vec::len) >= k;

    // one decision per target problem on the produced instance
    let mut target_rows: Vec<(&'static str, bool, Option<Vec<usize>>)> = Vec::new();
    let solve = |r: Result<crate::problem::SolveOutcome, SolveError>| match r {
        Ok(out) => Ok(Some(out)),
        Err(SolveError::BudgetExceeded(_)) => Ok(None),
        Err(e) => Err(e),
    };
    match artifact.kind {
        ReductionKind::ClubOdd | ReductionKind::ClubEven => {
            let s = artifact.params.s.expect("club artifact records s");
            match solve(solve_s_club(&artifact.gprime, artifact.kprime, s, budget))? {
                Some(out) => target_rows.push(("s-club", out.decision, out.witness)),
                None => return Ok(ClaimReport::skipped(claim, "s-club solve hit budget")),
            }
            match solve(solve_s_clique(&artifact.gprime, artifact.kprime, s, budget))? {
                Some(out) => target_rows.push(("s-clique", out.decision, out.witness)),
                None => return Ok(ClaimReport::skipped(claim, "s-clique solve hit budget")),
            }
        }
        ReductionKind::GcsDegeneracy | ReductionKind::GcsEll => {
            let gamma = artifact.params.gamma.expect("gcs artifact records gamma");
            let strategy = if artifact.kind == ReductionKind::GcsDegeneracy {
                GcsStrategy::Brute
            } else {
                GcsStrategy::XpEll
            };
            match solve(solve_gcs(&artifact.gprime, artifact.kprime, gamma, strategy, budget))? {
                Some(out) => target_rows.push(("gcs", out.decision, out.witness)),
                None => return Ok(ClaimReport::skipped(claim, "gcs solve hit budget")),
            }
        }
    }

    for (name, decision, _) in &target_rows {
        if *decision != source_yes {
            return Ok(ClaimReport::fail(
                claim,
                format!(
                    "k={k}, source edges {:?}: source {source_yes}, {name} on the instance {decision}",
                    g.edges()
                ),
                "decision mismatch",
            ));
        }
    }

    if source_yes && !artifact.is_trivial() {
        let clique: Vec<usize> = source.witness.expect("yes outcome has witness")[..k].to_vec();
        let lifted = lift_witness(&artifact, &clique)?;
        if lifted.len() != artifact.kprime {
            return Ok(ClaimReport::fail(
                claim,
                format!("lifted set has size {} != kprime {}", lifted.len(), artifact.kprime),
                "forward witness size",
            ));
        }
        for spec in artifact.target_specs() {
            if !verify_solution(&artifact.gprime, &spec, &lifted) {
                return Ok(ClaimReport::fail(
                    claim,
                    format!("lifted witness rejected by {}", spec.kind_name()),
                    "forward witness verification",
                ));
            }
        }
        let recovered = project_witness(&artifact, &lifted)?;
        if !clique.iter().all(|v| recovered.contains(v)) {
            return Ok(ClaimReport::fail(
                claim,
                format!("projected {recovered:?} does not contain lifted clique {clique:?}"),
                "project/lift containment",
            ));
        }
        for (name, _, witness) in &target_rows {
            if let Some(found) = witness {
                if let Err(e) = project_witness(&artifact, found) {
                    return Ok(ClaimReport::fail(
                        claim,
                        format!("{name} witness projection failed: {e}"),
                        "solver witness projection",
                    ));
                }
            }
        }
    }

    Ok(ClaimReport::pass(
        claim,
        format!(
            "decision {source_yes} agrees across source and instance (n'={}, k'={})",
            artifact.gprime.n(),
            artifact.kprime
        ),
    ))
}

/// Re-validates the three numeric conditions on a yellow-count candidate for
/// the deletion gadget, independently of the search that produced it:
/// `N(b-a) > a*n + a*m_bar + b`, the ceiling gap
/// `ceil(gamma*(N+n+m_bar)) < ceil(gamma*(N+n+m_bar+1))`, and
/// `N > (k+1)(k+m_bar)`.
pub fn check_yellow_count(
    n: usize,
    m_bar: usize,
    k: usize,
    gamma: Ratio,
    candidate: usize,
) -> ClaimReport {
    let claim = "techN.conditions";
    let (a, b) = (gamma.num(), gamma.den());
    let (n64, mb64, k64, cand) = (n as u64, m_bar as u64, k as u64, candidate as u64);
    let mut failing = Vec::new();
    if cand * (b - a) <= a * n64 + a * mb64 + b {
        failing.push("condition 1 (growth lower bound)");
    }
    let m_total = cand + n64 + mb64;
    if gamma.ceil_mul(m_total) >= gamma.ceil_mul(m_total + 1) {
        failing.push("condition 2 (ceiling gap)");
    }
    if cand <= (k64 + 1) * (k64 + mb64) {
        failing.push("condition 3 (quadratic lower bound)");
    }
    if failing.is_empty() {
        ClaimReport::pass(claim, format!("N = {candidate} satisfies all conditions"))
    } else {
        ClaimReport::fail(
            claim,
            format!("N = {candidate} violates: {}", failing.join(", ")),
            format!("n={n}, m_bar={m_bar}, k={k}, gamma={gamma}"),
        )
    }
}
