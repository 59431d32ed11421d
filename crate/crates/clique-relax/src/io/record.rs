//! Versioned JSON output records: solve results and serialized reduction
//! artifacts. Records are byte-for-byte deterministic for identical inputs,
//! settings and tool version; wall-clock time lives in the single ignorable
//! `millis` field.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::problem::{ProblemSpec, SolveOutcome};
use crate::ratio::Ratio;
use crate::reductions::{ReductionArtifact, ReductionKind, ReductionParams, Role};

pub const SCHEMA_VERSION: u32 = 1;

pub fn tool_version() -> String {
    format!("clique-relax {}", env!("CARGO_PKG_VERSION"))
}

/// FNV-1a over the canonical `n;edge,edge,...` serialization.
pub fn graph_digest(g: &Graph) -> String {
    let mut hash: u64 = 0xcbf29ce484222325;
    let mut eat = |bytes: &[u8]| {
        for &b in bytes {
            hash ^= b as u64;
            hash = hash.wrapping_mul(0x100000001b3);
        }
    };
    eat(g.n().to_string().as_bytes());
    eat(b";");
    for (u, v) in g.edges() {
        eat(u.to_string().as_bytes());
        eat(b",");
        eat(v.to_string().as_bytes());
        eat(b";");
    }
    format!("fnv1a:{hash:016x}")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsRecord {
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gamma: Option<Ratio>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputRecord {
    pub digest: String,
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsRecord {
    pub nodes: u64,
    /// Wall-clock milliseconds; ignorable for byte-equality comparisons.
    pub millis: u64,
    pub method: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub schema: u32,
    pub tool: String,
    pub problem: String,
    pub params: ParamsRecord,
    pub input: InputRecord,
    pub decision: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
    pub stats: StatsRecord,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

impl ResultRecord {
    pub fn new(g: &Graph, spec: &ProblemSpec, outcome: &SolveOutcome, millis: u64) -> Self {
        let (s, gamma) = match *spec {
            ProblemSpec::Clique { .. } => (None, None),
            ProblemSpec::SClub { s, .. } | ProblemSpec::SClique { s, .. } => (Some(s), None),
            ProblemSpec::GammaCs { gamma, .. } => (None, Some(gamma)),
        };
        ResultRecord {
            schema: SCHEMA_VERSION,
            tool: tool_version(),
            problem: spec.kind_name().to_string(),
            params: ParamsRecord { k: spec.k(), s, gamma },
            input: InputRecord { digest: graph_digest(g), n: g.n(), m: g.m() },
            decision: outcome.decision,
            witness: outcome.witness.clone(),
            stats: StatsRecord {
                nodes: outcome.nodes_explored,
                millis,
                method: outcome.method.to_string(),
            },
            seed: None,
        }
    }

    /// The record with its ignorable timing field zeroed, for byte-equality
    /// comparisons across runs.
    pub fn normalized(&self) -> ResultRecord {
        let mut out = self.clone();
        out.stats.millis = 0;
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Flat serialization of a graph inside artifact JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphRecord {
    fn from(g: &Graph) -> Self {
        GraphRecord { n: g.n(), edges: g.edges() }
    }
}

impl GraphRecord {
    pub fn to_graph(&self) -> Result<Graph, crate::graph::GraphError> {
        Graph::from_edges(self.n, &self.edges)
    }
}

/// Self-contained JSON form of a [`ReductionArtifact`]: the produced graph,
/// roles, back-maps, parameters, and the source instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtifactRecord {
    pub schema: u32,
    pub tool: String,
    pub kind: ReductionKind,
    pub source: GraphRecord,
    pub source_k: usize,
    pub source_digest: String,
    pub gprime: GraphRecord,
    pub kprime: usize,
    pub kprime_closed_form: usize,
    pub roles: Vec<Role>,
    pub blue_map: Vec<usize>,
    pub red_map: Vec<(usize, usize)>,
    pub dropped_isolated: Vec<usize>,
    pub params: ReductionParams,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trivial_decision: Option<bool>,
}

impl ArtifactRecord {
    pub fn from_artifact(a: &ReductionArtifact) -> Self {
        ArtifactRecord {
            schema: SCHEMA_VERSION,
            tool: tool_version(),
            kind: a.kind,
            source: GraphRecord::from(&a.source),
            source_k: a.source_k,
            source_digest: graph_digest(&a.source),
            gprime: GraphRecord::from(&a.gprime),
            kprime: a.kprime,
            kprime_closed_form: a.kprime_closed_form,
            roles: a.roles.clone(),
            blue_map: a.blue_map.clone(),
            red_map: a.red_map.clone(),
            dropped_isolated: a.dropped_isolated.clone(),
            params: a.params.clone(),
            trivial_decision: a.trivial_decision,
        }
    }

    pub fn to_artifact(&self) -> Result<ReductionArtifact, crate::graph::GraphError> {
        Ok(ReductionArtifact {
            kind: self.kind,
            source: self.source.to_graph()?,
            source_k: self.source_k,
            gprime: self.gprime.to_graph()?,
            kprime: self.kprime,
            kprime_closed_form: self.kprime_closed_form,
            roles: self.roles.clone(),
            blue_map: self.blue_map.clone(),
            red_map: self.red_map.clone(),
            dropped_isolated: self.dropped_isolated.clone(),
            params: self.params.clone(),
            trivial_decision: self.trivial_decision,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("artifact serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::reduce_club_odd;
    use crate::solvers::{solve_s_club, DEFAULT_BUDGET};

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn record_roundtrip_and_normalization() {
        let g = p4();
        let spec = ProblemSpec::SClub { s: 2, k: 3 };
        let out = solve_s_club(&g, 3, 2, DEFAULT_BUDGET).unwrap();
        let rec = ResultRecord::new(&g, &spec, &out, 42);
        let json = rec.to_json();
        let back: ResultRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
        assert_eq!(rec.normalized().stats.millis, 0);
        // identical solves yield identical normalized bytes
        let rec2 = ResultRecord::new(&g, &spec, &solve_s_club(&g, 3, 2, DEFAULT_BUDGET).unwrap(), 7);
        assert_eq!(rec.normalized().to_json(), rec2.normalized().to_json());
    }

    #[test]
    fn digest_distinguishes_graphs() {
        let a = graph_digest(&p4());
        let b = graph_digest(&Graph::from_edges(4, &[(0, 1), (1, 2), (0, 3)]).unwrap());
        assert_ne!(a, b);
        assert_eq!(a, graph_digest(&p4()));
    }

    #[test]
    fn artifact_roundtrip() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let a = reduce_club_odd(&g, 3, 3).unwrap();
        let rec = ArtifactRecord::from_artifact(&a);
        let json = rec.to_json();
        let back: ArtifactRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_artifact().unwrap(), a);
    }
}
