//! Gadget constructions turning a clique instance `(G, k)` into an
//! equivalent instance of one of the relaxation problems, emitting
//! role-labeled graphs with back-maps and predicted target sizes.
//!
//! Vertex ids are laid out deterministically: blues `0..`, then reds sorted
//! by source pair `(min, max)`, then greens by red-pair, then purples, then
//! yellows. Identical inputs produce bit-identical artifacts.

mod club_even;
mod club_odd;
mod gcs_degeneracy;
mod gcs_ell;

pub use club_even::reduce_club_even;
pub use club_odd::reduce_club_odd;
pub use gcs_degeneracy::reduce_gcs_degeneracy;
pub use gcs_ell::{find_yellow_count, reduce_gcs_ell};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::problem::ProblemSpec;
use crate::ratio::Ratio;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReduceError {
    #[error("s = {0} is invalid here: construction needs {1}")]
    BadDistance(usize, &'static str),
    #[error("construction needs at least 2 edges, source has {0}")]
    TooFewEdges(usize),
    #[error("k = {0} is not of the form 2r(b-a)+2 = 2r*{1}+2 with r >= 1; normalize first")]
    KNotInForm(usize, u64),
    #[error("k = {0} must satisfy k*a > 2b for gamma = {1}; normalize first")]
    KTooSmall(usize, Ratio),
    #[error("construction assumption violated: {0}")]
    Assumption(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Blue,
    Red,
    Green,
    Purple,
    Yellow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionKind {
    ClubOdd,
    ClubEven,
    GcsDegeneracy,
    GcsEll,
}

impl ReductionKind {
    pub fn name(&self) -> &'static str {
        match self {
            ReductionKind::ClubOdd => "club-odd",
            ReductionKind::ClubEven => "club-even",
            ReductionKind::GcsDegeneracy => "gcs-degeneracy",
            ReductionKind::GcsEll => "gcs-ell",
        }
    }
}

/// Parameters of a construction, recorded for auditing. Only the fields the
/// construction uses are set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionParams {
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gamma: Option<Ratio>,
    /// r with k = 2r(b-a)+2.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub step_index: Option<u64>,
    /// R = r(k+3); the tight threshold satisfies degree_threshold = R*a and
    /// kprime-1 = R*b.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub threshold_scale: Option<u64>,
    /// The forced minimum degree inside any solution of the produced instance.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree_threshold: Option<u64>,
    /// Number of yellow vertices (p, or N for the deletion-parameter gadget).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub yellow_count: Option<usize>,
    /// Non-edge count of the source, where the construction works on
    /// non-edges.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub non_edge_count: Option<usize>,
    /// Vertices left outside any solution of the produced instance,
    /// `|V'| - kprime`; equals the source k for the deletion gadget.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub outside_count: Option<usize>,
}

/// A produced instance: the graph, its target size, per-vertex roles and
/// back-maps to the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub kind: ReductionKind,
    /// The source instance as given (before any isolated-vertex stripping).
    pub source: Graph,
    pub source_k: usize,
    pub gprime: Graph,
    /// Target size derived from actual construction cardinalities.
    pub kprime: usize,
    /// The closed-form target size; differs from `kprime` only for the even
    /// club construction (see `kprime_discrepancy` in the structure checks).
    pub kprime_closed_form: usize,
    pub roles: Vec<Role>,
    /// Blue vertex id in `gprime` -> source vertex id.
    pub blue_map: Vec<usize>,
    /// i-th red vertex -> source pair: an edge, or a non-edge for the
    /// deletion-parameter gadget.
    pub red_map: Vec<(usize, usize)>,
    /// Source vertices removed before the club constructions.
    pub dropped_isolated: Vec<usize>,
    pub params: ReductionParams,
    /// Set when the source was answered directly and `gprime` is a canonical
    /// constant-size equivalent instance.
    pub trivial_decision: Option<bool>,
}

impl ReductionArtifact {
    pub fn is_trivial(&self) -> bool {
        self.trivial_decision.is_some()
    }

    pub fn role_count(&self, role: Role) -> usize {
        self.roles.iter().filter(|&&r| r == role).count()
    }

    pub fn vertices_with_role(&self, role: Role) -> Vec<usize> {
        (0..self.gprime.n())
            .filter(|&v| self.roles[v] == role)
            .collect()
    }

    /// Smallest gprime id carrying `role`; roles are laid out contiguously.
    pub fn role_base(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    /// Inverse of `blue_map`: source vertex -> blue id in `gprime`.
    pub fn blue_of_source(&self, source_vertex: usize) -> Option<usize> {
        self.blue_map.iter().position(|&s| s == source_vertex)
    }

    /// The problem(s) the produced instance targets, at size `kprime`. Club
    /// constructions are simultaneously hard for s-club and s-clique.
    pub fn target_specs(&self) -> Vec<ProblemSpec> {
        match self.kind {
            ReductionKind::ClubOdd | ReductionKind::ClubEven => {
                let s = self.params.s.expect("club artifact records s");
                vec![
                    ProblemSpec::SClub { s, k: self.kprime },
                    ProblemSpec::SClique { s, k: self.kprime },
                ]
            }
            ReductionKind::GcsDegeneracy | ReductionKind::GcsEll => {
                let gamma = self.params.gamma.expect("gcs artifact records gamma");
                vec![ProblemSpec::GammaCs { gamma, k: self.kprime }]
            }
        }
    }
}

/// Canonical constant-size equivalent instances for trivially answered
/// sources: a single auxiliary vertex with target 1 (yes), or the empty
/// graph with target 1 (no).
pub(crate) fn trivial_artifact(
    kind: ReductionKind,
    source: &Graph,
    params: ReductionParams,
    decision: bool,
) -> ReductionArtifact {
    let (gprime, roles) = if decision {
        (Graph::from_edges(1, &[]).expect("K1"), vec![Role::Yellow])
    } else {
        (Graph::from_edges(0, &[]).expect("empty graph"), vec![])
    };
    ReductionArtifact {
        kind,
        source: source.clone(),
        source_k: params.k,
        gprime,
        kprime: 1,
        kprime_closed_form: 1,
        roles,
        blue_map: vec![],
        red_map: vec![],
        dropped_isolated: vec![],
        params,
        trivial_decision: Some(decision),
    }
}

/// Removes isolated vertices; returns the stripped graph and the map from
/// new ids to original ids.
pub(crate) fn strip_isolated(g: &Graph) -> (Graph, Vec<usize>, Vec<usize>) {
    let keep: Vec<usize> = (0..g.n()).filter(|&u| g.degree(u) > 0).collect();
    let dropped: Vec<usize> = (0..g.n()).filter(|&u| g.degree(u) == 0).collect();
    let mut new_id = vec![usize::MAX; g.n()];
    for (i, &u) in keep.iter().enumerate() {
        new_id[u] = i;
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (new_id[u], new_id[v]))
        .collect();
    let stripped = Graph::from_edges(keep.len(), &edges).expect("stripping preserves simplicity");
    (stripped, keep, dropped)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizeMode {
    /// Pad until k has the form 2r(b-a)+2 with r >= 1.
    Degeneracy,
    /// Pad until k*a > 2b strictly.
    Ell,
}

/// Pads the source with `q` universal vertices so the target-size assumption
/// of the requested construction holds; `q` depends only on `(k, gamma)`.
/// Returns the padded graph and `k + q`.
pub fn normalize_k_gcs(g: &Graph, k: usize, gamma: Ratio, mode: NormalizeMode) -> (Graph, usize) {
    let q = normalize_padding(k, gamma, mode);
    (g.pad_universal(q), k + q)
}

/// The padding amount used by [`normalize_k_gcs`].
pub fn normalize_padding(k: usize, gamma: Ratio, mode: NormalizeMode) -> usize {
    let (a, b) = (gamma.num(), gamma.den());
    match mode {
        NormalizeMode::Degeneracy => {
            let step = 2 * (b - a) as usize;
            let lo = step + 2;
            if k < lo {
                lo - k
            } else {
                let rem = (k - 2) % step;
                if rem == 0 {
                    0
                } else {
                    step - rem
                }
            }
        }
        NormalizeMode::Ell => {
            let target = (2 * b / a) as usize + 1;
            target.saturating_sub(k)
        }
    }
}
