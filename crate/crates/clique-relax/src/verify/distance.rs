//! Exact distance-table checks on the club gadgets, by all-pairs BFS.
//!
//! The produced graph must satisfy, for the recorded distance bound `s`:
//! every pair with a non-blue endpoint sits within distance `s`; blue pairs
//! sit at exactly `s-1` over source edges and exactly `s+1` over source
//! non-edges; and every pair within distance `s` also achieves some path of
//! length at most `s` whose interior avoids blue vertices.

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::graph::{Graph, INF};
use crate::reductions::{ReductionArtifact, ReductionKind, Role};

use super::{ClaimReport, VerifyError};

pub fn check_distance_claims(
    artifact: &ReductionArtifact,
) -> Result<Vec<ClaimReport>, VerifyError> {
    match artifact.kind {
        ReductionKind::ClubOdd | ReductionKind::ClubEven => {}
        _ => return Err(VerifyError::WrongArtifactKind("club")),
    }
    if artifact.is_trivial() {
        return Ok(vec![]);
    }
    let g = &artifact.gprime;
    let s = artifact.params.s.expect("club artifact records s");
    let blue = VertexSet::from_iter(
        g.n(),
        (0..g.n()).filter(|&v| artifact.roles[v] == Role::Blue),
    );

    let mut nonblue_fail = None;
    let mut blue_pair_fail = None;
    let mut avoid_fail = None;
    let mut pairs = 0usize;

    for u in 0..g.n() {
        let dist = g.bfs_distances(u, None);
        let avoiding = blue_interior_free_distances(g, u, &blue);
        for v in u + 1..g.n() {
            pairs += 1;
            if blue.contains(u) && blue.contains(v) {
                let su = artifact.blue_map[u];
                let sv = artifact.blue_map[v];
                let expected = if artifact.source.has_edge(su, sv) { s - 1 } else { s + 1 };
                if dist[v] != expected && blue_pair_fail.is_none() {
                    blue_pair_fail = Some(format!(
                        "blue pair ({u},{v}) from source ({su},{sv}): dist {} expected {expected}",
                        fmt_dist(dist[v])
                    ));
                }
            } else if dist[v] > s && nonblue_fail.is_none() {
                nonblue_fail = Some(format!(
                    "pair ({u},{v}) with a non-blue endpoint at dist {}",
                    fmt_dist(dist[v])
                ));
            }
            if dist[v] <= s && avoiding[v] > s && avoid_fail.is_none() {
                avoid_fail = Some(format!(
                    "pair ({u},{v}): dist {} but no blue-avoiding path within {s} (best {})",
                    dist[v],
                    fmt_dist(avoiding[v])
                ));
            }
        }
    }

    let mk = |claim: &str, fail: Option<String>, what: &str| match fail {
        None => ClaimReport::pass(claim, format!("{what} over {pairs} pairs")),
        Some(ce) => ClaimReport::fail(claim, ce, what.to_string()),
    };
    Ok(vec![
        mk(
            "dist.nonblue-within-s",
            nonblue_fail,
            "pairs with a non-blue endpoint stay within distance s",
        ),
        mk(
            "dist.blue-pairs-exact",
            blue_pair_fail,
            "blue pairs at s-1 over source edges, s+1 over non-edges",
        ),
        mk(
            "dist.blue-avoiding-path",
            avoid_fail,
            "close pairs reachable by a path whose interior avoids blues",
        ),
    ])
}

/// Shortest path lengths from `src` over walks whose interior never visits a
/// blue vertex: blue vertices get a distance but are never expanded.
fn blue_interior_free_distances(g: &Graph, src: usize, blue: &VertexSet) -> Vec<usize> {
    let mut dist = vec![INF; g.n()];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        if u != src && blue.contains(u) {
            continue;
        }
        for &v in g.neighbors(u) {
            if dist[v] == INF {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

fn fmt_dist(d: usize) -> String {
    if d == INF {
        "inf".to_string()
    } else {
        d.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::{reduce_club_even, reduce_club_odd, reduce_gcs_degeneracy};
    use crate::ratio::Ratio;
    use crate::verify::all_pass;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn triangle_s3_all_claims_pass() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let a = reduce_club_odd(&g, 3, 3).unwrap();
        let reports = check_distance_claims(&a).unwrap();
        assert_eq!(reports.len(), 3);
        assert!(all_pass(&reports), "{reports:?}");
    }

    #[test]
    fn non_edge_sits_at_s_plus_1() {
        // P3 source: the pair (0,2) is a non-edge, must land at distance 4
        let g = graph(3, &[(0, 1), (1, 2)]);
        let a = reduce_club_odd(&g, 2, 3).unwrap();
        let d = a.gprime.bfs_distances(0, None);
        assert_eq!(d[2], 4);
        assert!(all_pass(&check_distance_claims(&a).unwrap()));
    }

    #[test]
    fn s5_hub_covers_all_reds() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let a = reduce_club_odd(&g, 2, 5).unwrap();
        let hub = a.vertices_with_role(Role::Yellow)[0];
        let d = a.gprime.bfs_distances(hub, None);
        for red in a.vertices_with_role(Role::Red) {
            assert!(d[red] <= 2); // (s-1)/2
        }
        assert!(all_pass(&check_distance_claims(&a).unwrap()));
    }

    #[test]
    fn even_construction_tables() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        for s in [4, 6] {
            let a = reduce_club_even(&g, 2, s).unwrap();
            let reports = check_distance_claims(&a).unwrap();
            assert!(all_pass(&reports), "s={s}: {reports:?}");
        }
    }

    #[test]
    fn wrong_kind_is_rejected() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 2)]);
        let a = reduce_gcs_degeneracy(&g, 4, Ratio::new(1, 2).unwrap()).unwrap();
        assert_eq!(
            check_distance_claims(&a),
            Err(VerifyError::WrongArtifactKind("club"))
        );
    }

    #[test]
    fn trivial_artifact_yields_no_reports() {
        let empty = graph(3, &[]);
        let a = reduce_club_odd(&empty, 2, 3).unwrap();
        assert!(check_distance_claims(&a).unwrap().is_empty());
    }
}
