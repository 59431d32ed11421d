//! Deletion-parameter gadget for gamma-complete subgraph. The source keeps
//! its edges; every NON-edge gets a red witness vertex adjacent to its two
//! endpoints; `k+1` purples (a clique, complete to the reds) and `N` yellows
//! (a clique, complete to the blues) pad the degrees so that any solution of
//! size `kprime = N + n + m_bar + 1` is forced to contain every non-blue
//! vertex, leaving exactly `k` blues outside. The deleted set is a clique of
//! the source, and the gap parameter `|V'| - kprime` equals `k`.

use crate::graph::Graph;
use crate::ratio::Ratio;

use super::{ReduceError, ReductionArtifact, ReductionKind, ReductionParams, Role};

/// Smallest yellow count `N` satisfying, in exact integer arithmetic:
///
/// 1. `N(b-a) > a*n + a*m_bar + b`
/// 2. `ceil(gamma*(N+n+m_bar)) < ceil(gamma*(N+n+m_bar+1))`
/// 3. `N > (k+1)(k+m_bar)`
///
/// The scan starts at the larger of the two strict lower bounds and the gap
/// condition holds at least once every `ceil(b/a)` consecutive integers.
pub fn find_yellow_count(n: usize, m_bar: usize, k: usize, gamma: Ratio) -> usize {
    let (a, b) = (gamma.num(), gamma.den());
    let (n64, mb64, k64) = (n as u64, m_bar as u64, k as u64);
    let cond1_min = (a * (n64 + mb64) + b) / (b - a) + 1;
    let cond3_min = (k64 + 1) * (k64 + mb64) + 1;
    let start = cond1_min.max(cond3_min);
    let limit = start + b.div_ceil(a) + 1;
    for yellow_count in start..=limit {
        let m_total = yellow_count + n64 + mb64;
        if gamma.ceil_mul(m_total) < gamma.ceil_mul(m_total + 1) {
            return yellow_count as usize;
        }
    }
    unreachable!("ceiling gap occurs within ceil(b/a) steps of the lower bounds")
}

pub fn reduce_gcs_ell(
    g: &Graph,
    k: usize,
    gamma: Ratio,
) -> Result<ReductionArtifact, ReduceError> {
    let (a, b) = (gamma.num(), gamma.den());
    if (k as u64) * a <= 2 * b {
        return Err(ReduceError::KTooSmall(k, gamma));
    }
    let n = g.n();
    let non_edges = g.non_edges();
    let m_bar = non_edges.len();
    let yellow_count = find_yellow_count(n, m_bar, k, gamma);
    let degree_threshold = gamma.ceil_mul((yellow_count + n + m_bar) as u64);

    // positive by the choice of N and k > 2b/a; a violation means the
    // construction's assumptions do not hold, so refuse rather than clamp
    let red_yellow_degree = (degree_threshold as usize)
        .checked_sub(k + 2)
        .ok_or(ReduceError::Assumption("degree threshold below k + 2"))?;
    let interval_width = (degree_threshold as usize)
        .checked_sub(m_bar + k)
        .filter(|&w| w > 0)
        .ok_or(ReduceError::Assumption("degree threshold not above m_bar + k"))?;

    let red_base = n;
    let purple_base = red_base + m_bar;
    let yellow_base = purple_base + (k + 1);
    let total = yellow_base + yellow_count;

    let mut edges = g.edges();
    let mut red_map = Vec::with_capacity(m_bar);
    for (i, &(u, v)) in non_edges.iter().enumerate() {
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
    for yellow in yellow_base..total {
        for blue in 0..n {
            edges.push((blue, yellow));
        }
        for other in yellow + 1..total {
            edges.push((yellow, other));
        }
    }
    // each red sees the first `red_yellow_degree` yellows
    for red in red_base..purple_base {
        for j in 0..red_yellow_degree {
            edges.push((red, yellow_base + j));
        }
    }
    // purple i covers the cyclic yellow interval [i*w, (i+1)*w - 1] mod N
    for (i, purple) in (purple_base..yellow_base).enumerate() {
        for j in 0..interval_width {
            let idx = (i * interval_width + j) % yellow_count;
            edges.push((purple, yellow_base + idx));
        }
    }

    let gprime = Graph::from_edges(total, &edges).expect("gcs-ell gadget is simple");
    let mut roles = vec![Role::Blue; n];
    roles.extend(std::iter::repeat_n(Role::Red, m_bar));
    roles.extend(std::iter::repeat_n(Role::Purple, k + 1));
    roles.extend(std::iter::repeat_n(Role::Yellow, yellow_count));

    let kprime = yellow_count + n + m_bar + 1;
    assert_eq!(total - kprime, k);

    Ok(ReductionArtifact {
        kind: ReductionKind::GcsEll,
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
            degree_threshold: Some(degree_threshold),
            yellow_count: Some(yellow_count),
            non_edge_count: Some(m_bar),
            outside_count: Some(total - kprime),
            ..Default::default()
        },
        trivial_decision: None,
    })
}
