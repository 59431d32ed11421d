//! Degeneracy-parameter gadget for gamma-complete subgraph: subdivide every
//! source edge with one red vertex, then add `k-3` purple vertices adjacent
//! to all reds and `p = R*a - k + 1` yellow universal vertices, with the
//! purple/yellow ("special") block forming a clique.
//!
//! Requires `k = 2r(b-a)+2` with integer `r >= 1`; then with `R = r(k+3)`
//! the forced solution degree `k-1+p` equals `R*a` and the target size
//! satisfies `kprime-1 = R*b`, so solutions are tight for `gamma = a/b`.
//! The produced graph has degeneracy at most `k-1+p`.

use crate::graph::Graph;
use crate::ratio::Ratio;

use super::{ReduceError, ReductionArtifact, ReductionKind, ReductionParams, Role};

pub fn reduce_gcs_degeneracy(
    g: &Graph,
    k: usize,
    gamma: Ratio,
) -> Result<ReductionArtifact, ReduceError> {
    let (a, b) = (gamma.num(), gamma.den());
    let step = 2 * (b - a) as usize;
    if k < step + 2 || !(k - 2).is_multiple_of(step) {
        return Err(ReduceError::KNotInForm(k, b - a));
    }
    let r = ((k - 2) / step) as u64;
    let scale = r * (k as u64 + 3);
    let p = (scale * a - k as u64 + 1) as usize;
    let degree_threshold = (k - 1) as u64 + p as u64;
    assert_eq!(degree_threshold, scale * a);

    let n = g.n();
    let m = g.m();
    let red_base = n;
    let purple_base = red_base + m;
    let yellow_base = purple_base + (k - 3);
    let total = yellow_base + p;

    let mut edges = Vec::new();
    let mut red_map = Vec::with_capacity(m);
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let red = red_base + i;
        edges.push((u, red));
        edges.push((v, red));
        red_map.push((u, v));
    }
    for purple in purple_base..yellow_base {
        for red in red_base..purple_base {
            edges.push((red, purple));
        }
        for other in purple + 1..yellow_base {
            edges.push((purple, other));
        }
    }
    // yellows are universal, which also completes the special clique
    for yellow in yellow_base..total {
        for v in 0..yellow {
            edges.push((v, yellow));
        }
    }

    let gprime = Graph::from_edges(total, &edges).expect("gcs gadget is simple");
    let mut roles = vec![Role::Blue; n];
    roles.extend(std::iter::repeat_n(Role::Red, m));
    roles.extend(std::iter::repeat_n(Role::Purple, k - 3));
    roles.extend(std::iter::repeat_n(Role::Yellow, p));

    let kprime = 2 * k - 3 + k * (k - 1) / 2 + p;
    assert_eq!((kprime - 1) as u64, scale * b);

    Ok(ReductionArtifact {
        kind: ReductionKind::GcsDegeneracy,
        source: g.clone(),
        source_k: k,
        gprime,
        kprime,
        kprime_closed_form: kprime,
        roles,
        blue_map: (0..n).collect(),
        red_map,
        dropped_isolated: vec![],
        params: ReductionParams {
            k,
            gamma: Some(gamma),
            step_index: Some(r),
            threshold_scale: Some(scale),
            degree_threshold: Some(degree_threshold),
            yellow_count: Some(p),
            ..Default::default()
        },
        trivial_decision: None,
    })
}
