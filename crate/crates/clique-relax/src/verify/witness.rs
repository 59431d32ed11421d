//! Witness transport between source and produced instances: `lift_witness`
//! builds the canonical forward solution from a source k-clique, and
//! `project_witness` recovers a source clique from any valid solution of the
//! produced instance.

use crate::bitset::VertexSet;
use crate::problem::{verify_solution, ProblemSpec};
use crate::reductions::{ReductionArtifact, ReductionKind, Role};

use super::VerifyError;

/// Builds the forward solution set for a source clique of size exactly
/// `source_k`:
///
/// - odd club gadget: the clique's blues, all reds, and the hub;
/// - even club gadget: everything except the blues outside the clique;
/// - degeneracy gadget: the clique's blues, the reds of clique-internal
///   edges, and every special (purple/yellow) vertex;
/// - deletion gadget: everything except the clique's blues.
pub fn lift_witness(
    artifact: &ReductionArtifact,
    clique: &[usize],
) -> Result<Vec<usize>, VerifyError> {
    if artifact.is_trivial() {
        return Err(VerifyError::TrivialArtifact);
    }
    let k = artifact.source_k;
    let distinct: std::collections::BTreeSet<usize> = clique.iter().copied().collect();
    if distinct.len() != k
        || !verify_solution(&artifact.source, &ProblemSpec::Clique { k }, clique)
    {
        return Err(VerifyError::NotASourceClique(k));
    }
    let mut blues = Vec::with_capacity(k);
    for &v in &distinct {
        match artifact.blue_of_source(v) {
            Some(b) => blues.push(b),
            None => return Err(VerifyError::NotASourceClique(k)),
        }
    }

    let mut out: Vec<usize> = match artifact.kind {
        ReductionKind::ClubOdd => blues
            .iter()
            .copied()
            .chain(artifact.vertices_with_role(Role::Red))
            .chain(artifact.vertices_with_role(Role::Yellow))
            .collect(),
        ReductionKind::ClubEven => {
            let blue_set = VertexSet::from_iter(artifact.gprime.n(), blues.iter().copied());
            (0..artifact.gprime.n())
                .filter(|&v| artifact.roles[v] != Role::Blue || blue_set.contains(v))
                .collect()
        }
        ReductionKind::GcsDegeneracy => {
            let red_base = artifact.role_base(Role::Red).unwrap_or(0);
            let clique_reds = artifact
                .red_map
                .iter()
                .enumerate()
                .filter(|(_, (u, v))| distinct.contains(u) && distinct.contains(v))
                .map(|(i, _)| red_base + i);
            blues
                .iter()
                .copied()
                .chain(clique_reds)
                .chain(artifact.vertices_with_role(Role::Purple))
                .chain(artifact.vertices_with_role(Role::Yellow))
                .collect()
        }
        ReductionKind::GcsEll => {
            let blue_set = VertexSet::from_iter(artifact.gprime.n(), blues.iter().copied());
            (0..artifact.gprime.n()).filter(|&v| !blue_set.contains(v)).collect()
        }
    };
    out.sort_unstable();
    debug_assert_eq!(out.len(), artifact.kprime);
    Ok(out)
}

/// Recovers a source clique of size at least `source_k` from a solution of
/// the produced instance. The solution is re-verified first; a valid
/// solution whose projection fails to be a clique exposes a soundness bug
/// and aborts loudly.
pub fn project_witness(
    artifact: &ReductionArtifact,
    solution: &[usize],
) -> Result<Vec<usize>, VerifyError> {
    if artifact.is_trivial() {
        return Err(VerifyError::TrivialArtifact);
    }
    if !accepted_by_target(artifact, solution) {
        return Err(VerifyError::InvalidSolution);
    }
    let in_solution = VertexSet::from_iter(artifact.gprime.n(), solution.iter().copied());
    let projected: Vec<usize> = match artifact.kind {
        ReductionKind::ClubOdd | ReductionKind::ClubEven | ReductionKind::GcsDegeneracy => {
            solution
                .iter()
                .copied()
                .filter(|&v| artifact.roles[v] == Role::Blue)
                .map(|v| artifact.blue_map[v])
                .collect()
        }
        ReductionKind::GcsEll => {
            let mut outside = Vec::new();
            for v in 0..artifact.gprime.n() {
                if !in_solution.contains(v) {
                    if artifact.roles[v] != Role::Blue {
                        return Err(VerifyError::ProjectionNotClique(format!(
                            "non-blue vertex {v} left outside the solution"
                        )));
                    }
                    outside.push(artifact.blue_map[v]);
                }
            }
            outside
        }
    };
    let mut clique: Vec<usize> = projected;
    clique.sort_unstable();
    clique.dedup();
    let spec = ProblemSpec::Clique { k: artifact.source_k };
    if !verify_solution(&artifact.source, &spec, &clique) {
        return Err(VerifyError::ProjectionNotClique(format!(
            "projected set {clique:?} (need a clique of size >= {})",
            artifact.source_k
        )));
    }
    Ok(clique)
}

/// Whether `solution` is a valid solution of the produced instance at size
/// `kprime`. Club gadgets accept under the s-clique predicate, which both
/// target problems imply.
fn accepted_by_target(artifact: &ReductionArtifact, solution: &[usize]) -> bool {
    let spec = match artifact.kind {
        ReductionKind::ClubOdd | ReductionKind::ClubEven => ProblemSpec::SClique {
            s: artifact.params.s.expect("club artifact records s"),
            k: artifact.kprime,
        },
        ReductionKind::GcsDegeneracy | ReductionKind::GcsEll => ProblemSpec::GammaCs {
            gamma: artifact.params.gamma.expect("gcs artifact records gamma"),
            k: artifact.kprime,
        },
    };
    verify_solution(&artifact.gprime, &spec, solution)
}
