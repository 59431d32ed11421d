//! Polynomial-time s-club / s-clique decision on forests.
//!
//! On a tree the two problems coincide, and any maximal s-clique is either a
//! whole small-diameter component, a ball of radius `s/2` (even `s`), or the
//! union of two balls of radius `(s-1)/2` around an edge (odd `s`). Scanning
//! those candidate shapes decides both problems.

use crate::graph::Graph;
use crate::problem::{verify_solution, ProblemSpec, SolveOutcome};

use super::SolveError;

/// Decides s-club and s-clique (identical on forests) for a graph of
/// degeneracy at most 1. Errors on any other input.
pub fn solve_forest(g: &Graph, k: usize, s: usize) -> Result<SolveOutcome, SolveError> {
    if s == 0 {
        return Err(SolveError::InvalidParameter("s must be >= 1"));
    }
    let bound = g.degeneracy();
    if bound > 1 {
        return Err(SolveError::NotAForest(bound));
    }
    if k == 0 {
        return Ok(SolveOutcome::yes(vec![], 0, "forest"));
    }
    let mut nodes = 0u64;

    for comp in g.components() {
        nodes += 1;
        if comp.len() >= k && tree_diameter(g, &comp) <= s {
            return Ok(finish(g, k, s, comp, nodes));
        }
    }

    if s % 2 == 1 {
        for (u, v) in g.edges() {
            nodes += 1;
            let mut dumbbell = g.ball(u, (s - 1) / 2);
            dumbbell.union_with(&g.ball(v, (s - 1) / 2));
            if dumbbell.len() >= k {
                return Ok(finish(g, k, s, dumbbell.to_vec(), nodes));
            }
        }
    } else {
        for u in 0..g.n() {
            nodes += 1;
            let ball = g.ball(u, s / 2);
            if ball.len() >= k {
                return Ok(finish(g, k, s, ball.to_vec(), nodes));
            }
        }
    }
    Ok(SolveOutcome::no(nodes, "forest"))
}

fn finish(g: &Graph, k: usize, s: usize, witness: Vec<usize>, nodes: u64) -> SolveOutcome {
    debug_assert!(verify_solution(g, &ProblemSpec::SClub { s, k }, &witness));
    debug_assert!(verify_solution(g, &ProblemSpec::SClique { s, k }, &witness));
    SolveOutcome::yes(witness, nodes, "forest")
}

/// Diameter of a tree component by double BFS from its smallest vertex.
fn tree_diameter(g: &Graph, comp: &[usize]) -> usize {
    let start = comp[0];
    let d1 = g.bfs_distances(start, None);
    let far = comp
        .iter()
        .copied()
        .max_by_key(|&v| d1[v])
        .expect("component is non-empty");
    let d2 = g.bfs_distances(far, None);
    comp.iter().map(|&v| d2[v]).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        graph(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    #[test]
    fn p5_even_s_thresholds() {
        // ball of radius 1 at the center of P5 has 3 vertices
        let g = path(5);
        assert!(solve_forest(&g, 3, 2).unwrap().decision);
        assert!(!solve_forest(&g, 4, 2).unwrap().decision);
    }

    #[test]
    fn p5_odd_s_thresholds() {
        // dumbbell on a middle edge of P5 covers 4 vertices
        let g = path(5);
        assert!(solve_forest(&g, 4, 3).unwrap().decision);
        assert!(!solve_forest(&g, 5, 3).unwrap().decision);
    }

    #[test]
    fn star_small_diameter_component() {
        let star = graph(10, &(1..10).map(|v| (0, v)).collect::<Vec<_>>());
        let out = solve_forest(&star, 10, 2).unwrap();
        assert!(out.decision);
        assert_eq!(out.witness.unwrap().len(), 10);
    }

    #[test]
    fn rejects_non_forest() {
        let c3 = graph(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(solve_forest(&c3, 2, 2), Err(SolveError::NotAForest(2)));
    }

    #[test]
    fn forest_handles_components_and_conventions() {
        let g = graph(7, &[(0, 1), (1, 2), (3, 4), (4, 5), (5, 6)]);
        assert!(solve_forest(&g, 4, 3).unwrap().decision); // second path entirely
        assert!(!solve_forest(&g, 5, 3).unwrap().decision);
        assert!(solve_forest(&g, 0, 1).unwrap().decision);
        assert!(solve_forest(&g, 1, 1).unwrap().decision);
        let empty = graph(0, &[]);
        assert!(!solve_forest(&empty, 1, 2).unwrap().decision);
    }

    #[test]
    fn s1_on_a_tree_finds_an_edge() {
        let g = path(4);
        assert!(solve_forest(&g, 2, 1).unwrap().decision);
        assert!(!solve_forest(&g, 3, 1).unwrap().decision);
    }
}
