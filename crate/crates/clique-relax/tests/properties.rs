//! Property tests for the structural invariants of the graph core and the
//! file formats, over random small graphs.

use proptest::prelude::*;

use clique_relax::graph::Graph;
use clique_relax::io::{emit_graph, parse_graph, GraphFormat};
use clique_relax::problem::{verify_solution, ProblemSpec};
use clique_relax::ratio::Ratio;
use clique_relax::solvers::{solve_gcs, solve_s_club, solve_s_clique, GcsStrategy};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), 0..(1u64 << pairs))
    })
    .prop_map(|(n, mask)| {
        let mut edges = Vec::new();
        let mut idx = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> idx & 1 == 1 {
                    edges.push((u, v));
                }
                idx += 1;
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Largest d such that some subset has minimum internal degree d, by
/// enumerating all subsets.
fn brute_degeneracy(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    for mask in 1u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let min_deg = members
            .iter()
            .map(|&u| g.neighbors(u).iter().filter(|&&w| mask >> w & 1 == 1).count())
            .min()
            .unwrap();
        best = best.max(min_deg);
    }
    best
}

fn brute_max_clique(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    for mask in 0u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let ok = members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if ok {
            best = best.max(members.len());
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn handshake_and_parameter_chain(g in arb_graph(8)) {
        let degsum: usize = (0..g.n()).map(|u| g.degree(u)).sum();
        prop_assert_eq!(degsum, 2 * g.m());
        let stats = g.stats();
        prop_assert!(stats.degeneracy <= stats.h_index);
        prop_assert!(stats.h_index <= stats.max_degree);
    }

    #[test]
    fn elimination_order_is_tight(g in arb_graph(8)) {
        let elim = g.degeneracy_order();
        prop_assert!(elim.certifies(&g));
        prop_assert_eq!(elim.bound, brute_degeneracy(&g));
    }

    #[test]
    fn balls_nest_and_cover_components(g in arb_graph(8)) {
        let comps = g.components();
        for u in 0..g.n() {
            for r in 0..g.n() {
                let inner = g.ball(u, r);
                let outer = g.ball(u, r + 1);
                prop_assert!(inner.is_subset(&outer));
            }
            let comp = comps.iter().find(|c| c.contains(&u)).unwrap();
            prop_assert_eq!(g.ball(u, g.n()).len(), comp.len());
        }
    }

    #[test]
    fn power_graphs_grow_monotonically(g in arb_graph(7)) {
        for s in 1..g.n().max(2) {
            let a = g.power(s);
            let b = g.power(s + 1);
            for (u, v) in a.edges() {
                prop_assert!(b.has_edge(u, v));
            }
        }
        // beyond every finite distance the power graph is complete per
        // component; cross-component pairs stay absent
        let saturated = g.power(g.n().max(1));
        let comps = g.components();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let same = comps.iter().any(|c| c.contains(&u) && c.contains(&v));
                prop_assert_eq!(saturated.has_edge(u, v), same);
            }
        }
    }

    #[test]
    fn padding_shifts_the_clique_number(g in arb_graph(6), q in 0usize..3) {
        let padded = g.pad_universal(q);
        prop_assert_eq!(brute_max_clique(&padded), brute_max_clique(&g) + q);
    }

    #[test]
    fn formats_round_trip(g in arb_graph(9)) {
        for fmt in [GraphFormat::Dimacs, GraphFormat::EdgeList] {
            let text = emit_graph(&g, fmt);
            prop_assert_eq!(parse_graph(&text, fmt).unwrap(), g.clone());
        }
    }

    #[test]
    fn solver_witnesses_always_verify(g in arb_graph(7), k in 0usize..8, s in 1usize..4) {
        let club_spec = ProblemSpec::SClub { s, k };
        let club = solve_s_club(&g, k, s, 1_000_000).unwrap();
        if let Some(w) = club.witness {
            let ok = verify_solution(&g, &club_spec, &w);
            prop_assert!(ok);
        }
        let sclique_spec = ProblemSpec::SClique { s, k };
        let sclique = solve_s_clique(&g, k, s, 1_000_000).unwrap();
        if let Some(w) = sclique.witness {
            let ok = verify_solution(&g, &sclique_spec, &w);
            prop_assert!(ok);
        }
        let gamma = Ratio::new(2, 3).unwrap();
        let gcs_spec = ProblemSpec::GammaCs { gamma, k };
        let gcs = solve_gcs(&g, k, gamma, GcsStrategy::XpDegeneracy, 1_000_000).unwrap();
        if let Some(w) = gcs.witness {
            let ok = verify_solution(&g, &gcs_spec, &w);
            prop_assert!(ok);
        }
    }
}
