//! Odd-distance club/clique gadget: subdivide every source edge into a path
//! of `s-2` red vertices and hang one yellow hub off the middle red of every
//! path. The produced graph is bipartite of degeneracy at most 3 (at most 2
//! once `s >= 5`), and it has an s-club (equivalently s-clique) of size
//! `k + (s-2)m + 1` exactly when the source has a k-clique.

use crate::graph::Graph;

use super::{
    strip_isolated, trivial_artifact, ReduceError, ReductionArtifact, ReductionKind,
    ReductionParams, Role,
};

pub fn reduce_club_odd(
    g: &Graph,
    k: usize,
    s: usize,
) -> Result<ReductionArtifact, ReduceError> {
    if s < 3 || s.is_multiple_of(2) {
        return Err(ReduceError::BadDistance(s, "an odd value >= 3"));
    }
    let params = ReductionParams {
        k,
        s: Some(s),
        ..Default::default()
    };
    if k <= 1 {
        let yes = k == 0 || g.n() >= 1;
        return Ok(trivial_artifact(ReductionKind::ClubOdd, g, params, yes));
    }
    let (core, keep, dropped) = strip_isolated(g);
    if core.m() == 0 || k > core.n() {
        // no edges, or not enough non-isolated vertices for a k-clique
        return Ok(trivial_artifact(ReductionKind::ClubOdd, g, params, false));
    }

    let n = core.n();
    let m = core.m();
    let per_edge = s - 2;
    let red_base = n;
    let hub = n + m * per_edge;
    let total = hub + 1;

    let mut edges = Vec::new();
    let mut red_map = Vec::with_capacity(m * per_edge);
    for (i, &(u, v)) in core.edges().iter().enumerate() {
        let first = red_base + i * per_edge;
        // path u, r_1, .., r_{s-2}, v of length s-1
        edges.push((u, first));
        for j in 0..per_edge - 1 {
            edges.push((first + j, first + j + 1));
        }
        edges.push((first + per_edge - 1, v));
        // the middle path position (s-1)/2 is the ((s-1)/2)-th red
        edges.push((hub, first + (s - 1) / 2 - 1));
        let source_edge = (keep[u], keep[v]);
        red_map.extend(std::iter::repeat_n(source_edge, per_edge));
    }

    let gprime = Graph::from_edges(total, &edges).expect("odd club gadget is simple");
    let mut roles = vec![Role::Blue; n];
    roles.extend(std::iter::repeat_n(Role::Red, m * per_edge));
    roles.push(Role::Yellow);

    let kprime = k + per_edge * m + 1;
    Ok(ReductionArtifact {
        kind: ReductionKind::ClubOdd,
        source: g.clone(),
        source_k: k,
        gprime,
        kprime,
        kprime_closed_form: kprime,
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
    fn single_edge_s3() {
        let g = graph(2, &[(0, 1)]);
        let a = reduce_club_odd(&g, 2, 3).unwrap();
        assert_eq!(a.gprime.n(), 4); // 2 blue, 1 red, hub
        assert_eq!(a.kprime, 4);
        assert_eq!(a.role_count(Role::Red), 1);
        assert_eq!(a.role_count(Role::Yellow), 1);
    }

    #[test]
    fn three_disjoint_edges_s3() {
        let g = graph(6, &[(0, 1), (2, 3), (4, 5)]);
        let a = reduce_club_odd(&g, 2, 3).unwrap();
        assert_eq!(a.gprime.n(), 10); // 6 blue + 3 red + hub
        assert_eq!(a.role_count(Role::Blue), 6);
    }

    #[test]
    fn triangle_s5_sizes_and_degeneracy() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let a = reduce_club_odd(&g, 3, 5).unwrap();
        assert_eq!(a.kprime, 3 + 3 * 3 + 1);
        assert_eq!(a.gprime.degeneracy(), 2);
        assert!(a.gprime.is_bipartite());
    }

    #[test]
    fn s3_artifact_is_bipartite_3_degenerate() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let a = reduce_club_odd(&g, 3, 3).unwrap();
        assert!(a.gprime.degeneracy() <= 3);
        assert!(a.gprime.is_bipartite());
    }

    #[test]
    fn forward_set_is_a_club() {
        // triangle source: K = all three, lifted set = blues + reds + hub
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let a = reduce_club_odd(&g, 3, 3).unwrap();
        let mut lifted: Vec<usize> = (0..3).collect();
        lifted.extend(a.vertices_with_role(Role::Red));
        lifted.extend(a.vertices_with_role(Role::Yellow));
        assert_eq!(lifted.len(), a.kprime);
        for spec in a.target_specs() {
            assert!(verify_solution(&a.gprime, &spec, &lifted));
        }
    }

    #[test]
    fn rejects_even_or_small_s() {
        let g = graph(2, &[(0, 1)]);
        assert!(matches!(reduce_club_odd(&g, 2, 4), Err(ReduceError::BadDistance(4, _))));
        assert!(matches!(reduce_club_odd(&g, 2, 1), Err(ReduceError::BadDistance(1, _))));
    }

    #[test]
    fn trivial_cases() {
        let empty = graph(3, &[]);
        let a = reduce_club_odd(&empty, 2, 3).unwrap();
        assert_eq!(a.trivial_decision, Some(false));
        assert_eq!(a.kprime, 1);
        assert_eq!(a.gprime.n(), 0);

        let g = graph(2, &[(0, 1)]);
        let yes = reduce_club_odd(&g, 1, 3).unwrap();
        assert_eq!(yes.trivial_decision, Some(true));
        assert_eq!(yes.gprime.n(), 1);

        // k exceeds the non-isolated vertex count
        let sparse = graph(5, &[(0, 1)]);
        let no = reduce_club_odd(&sparse, 3, 3).unwrap();
        assert_eq!(no.trivial_decision, Some(false));
    }

    #[test]
    fn stripping_is_recorded() {
        let g = graph(4, &[(1, 3)]);
        let a = reduce_club_odd(&g, 2, 3).unwrap();
        assert_eq!(a.dropped_isolated, vec![0, 2]);
        assert_eq!(a.blue_map, vec![1, 3]);
        assert_eq!(a.red_map, vec![(1, 3)]);
    }

    #[test]
    fn deterministic_construction() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert_eq!(reduce_club_odd(&g, 3, 5).unwrap(), reduce_club_odd(&g, 3, 5).unwrap());
    }
}
