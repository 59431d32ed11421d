//! Even-distance club/clique gadget: subdivide every source edge into `s-2`
//! reds, connect every pair of reds from distinct source edges by a path of
//! `s-2` green vertices, and hang one yellow hub off the two middle greens of
//! every green path. Degeneracy at most 3 (at most 2 once `s >= 6`).
//!
//! The target size is derived from the actual red/green counts; the recorded
//! closed form `k + (s-2)m + (s-2)*C((s-2)m, 2) + 1` also counts green paths
//! between reds of the same source edge, which the construction does not
//! create, so it overshoots by exactly `(s-2) * m * C(s-2, 2)`.

use crate::graph::Graph;

use super::{
    strip_isolated, trivial_artifact, ReduceError, ReductionArtifact, ReductionKind,
    ReductionParams, Role,
};

pub fn reduce_club_even(
    g: &Graph,
    k: usize,
    s: usize,
) -> Result<ReductionArtifact, ReduceError> {
    if s < 4 || s % 2 == 1 {
        return Err(ReduceError::BadDistance(s, "an even value >= 4"));
    }
    let params = ReductionParams {
        k,
        s: Some(s),
        ..Default::default()
    };
    if k <= 1 {
        let yes = k == 0 || g.n() >= 1;
        return Ok(trivial_artifact(ReductionKind::ClubEven, g, params, yes));
    }
    let (core, keep, dropped) = strip_isolated(g);
    if core.m() == 0 || k > core.n() {
        return Ok(trivial_artifact(ReductionKind::ClubEven, g, params, false));
    }
    if core.m() < 2 {
        return Err(ReduceError::TooFewEdges(core.m()));
    }

    let n = core.n();
    let m = core.m();
    let per_edge = s - 2;
    let red_base = n;
    let red_count = m * per_edge;
    let green_base = red_base + red_count;

    let source_edges = core.edges();
    let edge_of_red = |r: usize| (r - red_base) / per_edge;

    let mut edges = Vec::new();
    let mut red_map = Vec::with_capacity(red_count);
    for (i, &(u, v)) in source_edges.iter().enumerate() {
        let first = red_base + i * per_edge;
        edges.push((u, first));
        for j in 0..per_edge - 1 {
            edges.push((first + j, first + j + 1));
        }
        edges.push((first + per_edge - 1, v));
        let source_edge = (keep[u], keep[v]);
        red_map.extend(std::iter::repeat_n(source_edge, per_edge));
    }

    // green paths between reds of distinct source edges, red pairs ascending
    let mut next_green = green_base;
    for a in red_base..red_base + red_count {
        for b in a + 1..red_base + red_count {
            if edge_of_red(a) == edge_of_red(b) {
                continue;
            }
            let first = next_green;
            next_green += per_edge;
            edges.push((a, first));
            for j in 0..per_edge - 1 {
                edges.push((first + j, first + j + 1));
            }
            edges.push((first + per_edge - 1, b));
        }
    }
    let green_count = next_green - green_base;
    let hub = next_green;
    // the hub sees the two middle greens, path positions (s-2)/2 and
    // (s-2)/2 + 1
    for path_start in (green_base..next_green).step_by(per_edge) {
        edges.push((hub, path_start + (s - 2) / 2 - 1));
        edges.push((hub, path_start + (s - 2) / 2));
    }

    let gprime = Graph::from_edges(hub + 1, &edges).expect("even club gadget is simple");
    let mut roles = vec![Role::Blue; n];
    roles.extend(std::iter::repeat_n(Role::Red, red_count));
    roles.extend(std::iter::repeat_n(Role::Green, green_count));
    roles.push(Role::Yellow);

    let kprime = k + red_count + green_count + 1;
    let all_red_pairs = red_count * (red_count - 1) / 2;
    let kprime_closed_form = k + red_count + per_edge * all_red_pairs + 1;

    Ok(ReductionArtifact {
        kind: ReductionKind::ClubEven,
        source: g.clone(),
        source_k: k,
        gprime,
        kprime,
        kprime_closed_form,
        roles,
        blue_map: keep,
        red_map,
        dropped_isolated: dropped,
        params,
        trivial_decision: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::verify_solution;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn two_disjoint_edges_s4() {
        let g = graph(4, &[(0, 1), (2, 3)]);
        let a = reduce_club_even(&g, 2, 4).unwrap();
        // 4 blue, 4 red, 4 cross-edge red pairs each with 2 greens, 1 hub
        assert_eq!(a.role_count(Role::Blue), 4);
        assert_eq!(a.role_count(Role::Red), 4);
        assert_eq!(a.role_count(Role::Green), 8);
        assert_eq!(a.gprime.n(), 17);
        assert_eq!(a.kprime, 2 + 4 + 8 + 1);
        // the closed form counts same-edge red pairs too
        assert_eq!(a.kprime_closed_form, 2 + 4 + 2 * 6 + 1);
        assert_eq!(a.kprime_closed_form - a.kprime, 4); // (s-2)*m*C(s-2,2)
    }

    #[test]
    fn triangle_s4_structure() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let a = reduce_club_even(&g, 3, 4).unwrap();
        assert_eq!(a.gprime.degeneracy(), 3);
        assert!(!a.gprime.is_bipartite());
    }

    #[test]
    fn s6_degeneracy_drops_to_2() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let a = reduce_club_even(&g, 2, 6).unwrap();
        assert!(a.gprime.degeneracy() <= 2);
    }

    #[test]
    fn forward_set_is_a_club() {
        // source K3, K = everything: lifted set = all of gprime
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let a = reduce_club_even(&g, 3, 4).unwrap();
        let lifted: Vec<usize> = (0..a.gprime.n()).collect();
        assert_eq!(lifted.len(), a.kprime);
        for spec in a.target_specs() {
            assert!(verify_solution(&a.gprime, &spec, &lifted));
        }
    }

    #[test]
    fn single_edge_is_rejected() {
        let g = graph(2, &[(0, 1)]);
        assert_eq!(reduce_club_even(&g, 2, 4), Err(ReduceError::TooFewEdges(1)));
    }

    #[test]
    fn parity_and_trivial_cases() {
        let g = graph(4, &[(0, 1), (2, 3)]);
        assert!(matches!(reduce_club_even(&g, 2, 3), Err(ReduceError::BadDistance(3, _))));
        let empty = graph(2, &[]);
        assert_eq!(reduce_club_even(&empty, 2, 4).unwrap().trivial_decision, Some(false));
        assert_eq!(reduce_club_even(&empty, 0, 4).unwrap().trivial_decision, Some(true));
    }

    #[test]
    fn green_paths_have_correct_length() {
        let g = graph(4, &[(0, 1), (2, 3)]);
        let a = reduce_club_even(&g, 2, 6).unwrap();
        // s = 6: reds of distinct edges are at distance s-1 = 5 along greens
        let reds = a.vertices_with_role(Role::Red);
        let d = a.gprime.bfs_distances(reds[0], None);
        for &r in &reds {
            if (r - reds[0]) / 4 != 0 {
                assert_eq!(d[r], 5);
            }
        }
    }
}
