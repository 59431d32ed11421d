//! Self-contained brute-force oracles for the integration suites.
//!
//! Everything here works on raw edge lists with its own adjacency and BFS,
//! sharing no code path with the library it checks. Graphs are capped at 16
//! vertices so subsets fit in a u16-indexed mask.

#![allow(dead_code)]

pub const ORACLE_INF: usize = usize::MAX;

/// Tiny deterministic generator (splitmix64) for corpus sampling, so the
/// suites do not depend on the library's own randomness.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    /// Random edge set of exactly `m` distinct pairs on `0..n`.
    pub fn edge_sample(&mut self, n: usize, m: usize) -> Vec<(usize, usize)> {
        let mut pairs = pair_list(n);
        assert!(m <= pairs.len());
        // partial Fisher-Yates
        for i in 0..m {
            let j = i + self.below(pairs.len() - i);
            pairs.swap(i, j);
        }
        pairs.truncate(m);
        pairs.sort_unstable();
        pairs
    }
}

/// Adjacency masks: bit v of `adj[u]` is set iff {u,v} is an edge.
pub fn adjacency_masks(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    assert!(n <= 16, "oracle graphs stay tiny");
    let mut adj = vec![0u64; n];
    for &(u, v) in edges {
        assert!(u != v && u < n && v < n);
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// All vertex pairs of 0..n in lexicographic order.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

/// Edge subset selected by `mask` over `pair_list(n)`.
pub fn edges_from_mask(n: usize, mask: u64) -> Vec<(usize, usize)> {
    pair_list(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect()
}

/// BFS distances from `src` inside the vertex subset `allowed`.
pub fn bfs_in_mask(adj: &[u64], allowed: u64, src: usize) -> Vec<usize> {
    let n = adj.len();
    let mut dist = vec![ORACLE_INF; n];
    if allowed >> src & 1 == 0 {
        return dist;
    }
    dist[src] = 0;
    let mut frontier = vec![src];
    while let Some(u) = frontier.pop() {
        // simple queue discipline via index scan keeps this tiny
        let du = dist[u];
        let mut nbrs = adj[u] & allowed;
        while nbrs != 0 {
            let v = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if dist[v] > du + 1 {
                dist[v] = du + 1;
                frontier.insert(0, v);
            }
        }
    }
    dist
}

pub fn all_pairs_dist(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let adj = adjacency_masks(n, edges);
    let full = full_mask(n);
    (0..n).map(|u| bfs_in_mask(&adj, full, u)).collect()
}

pub fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        (1u64 << n) - 1
    }
}

fn members(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Size of a maximum clique, by enumerating all vertex subsets.
pub fn oracle_max_clique(n: usize, edges: &[(usize, usize)]) -> usize {
    let adj = adjacency_masks(n, edges);
    let mut best = 0;
    for mask in 0..=full_mask(n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        if members(mask).all(|u| mask & !(adj[u] | 1 << u) == 0) {
            best = size;
        }
    }
    best
}

/// Masks of vertices pairwise within distance `s` of each other in the graph.
fn s_clique_far_masks(n: usize, edges: &[(usize, usize)], s: usize) -> Vec<u64> {
    let dist = all_pairs_dist(n, edges);
    (0..n)
        .map(|u| {
            let mut far = 0u64;
            for (v, &d) in dist[u].iter().enumerate() {
                if v != u && d > s {
                    far |= 1 << v;
                }
            }
            far
        })
        .collect()
}

pub fn is_s_clique_mask(far: &[u64], mask: u64) -> bool {
    members(mask).all(|u| far[u] & mask == 0)
}

pub fn oracle_max_s_clique(n: usize, edges: &[(usize, usize)], s: usize) -> usize {
    let far = s_clique_far_masks(n, edges, s);
    let mut best = 0;
    for mask in 0..=full_mask(n) {
        let size = mask.count_ones() as usize;
        if size > best && is_s_clique_mask(&far, mask) {
            best = size;
        }
    }
    best
}

/// All maximal s-cliques, as masks.
pub fn oracle_maximal_s_cliques(n: usize, edges: &[(usize, usize)], s: usize) -> Vec<u64> {
    let far = s_clique_far_masks(n, edges, s);
    let mut out = Vec::new();
    for mask in 1..=full_mask(n) {
        if !is_s_clique_mask(&far, mask) {
            continue;
        }
        let extendable = (0..n).any(|v| mask >> v & 1 == 0 && far[v] & mask == 0);
        if !extendable {
            out.push(mask);
        }
    }
    out
}

/// Whether `mask` induces an s-club: pairwise distance at most `s` inside
/// the induced subgraph.
pub fn is_s_club_mask(adj: &[u64], mask: u64, s: usize) -> bool {
    for u in members(mask) {
        let dist = bfs_in_mask(adj, mask, u);
        for v in members(mask) {
            if dist[v] > s {
                return false;
            }
        }
    }
    true
}

pub fn oracle_max_s_club(n: usize, edges: &[(usize, usize)], s: usize) -> usize {
    let adj = adjacency_masks(n, edges);
    let mut best = 0;
    for mask in 0..=full_mask(n) {
        let size = mask.count_ones() as usize;
        if size > best && is_s_club_mask(&adj, mask, s) {
            best = size;
        }
    }
    best
}

/// Whether some subset of size >= k has every member with
/// `b*deg >= a*(|S|-1)` neighbors inside it.
pub fn oracle_gcs_exists(n: usize, edges: &[(usize, usize)], a: u64, b: u64, k: usize) -> bool {
    let adj = adjacency_masks(n, edges);
    if k == 0 {
        return true;
    }
    for mask in 0..=full_mask(n) {
        let size = mask.count_ones() as usize;
        if size < k {
            continue;
        }
        let need = (size - 1) as u64;
        if members(mask).all(|u| (adj[u] & mask).count_ones() as u64 * b >= a * need) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn oracle_agrees_with_hand_values() {
        // C5: triangle-free, 2-clique number 5 at s=2
        let c5 = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        assert_eq!(oracle_max_clique(5, &c5), 2);
        assert_eq!(oracle_max_s_clique(5, &c5, 2), 5);
        // P4: 2-club number 3
        let p4 = vec![(0, 1), (1, 2), (2, 3)];
        assert_eq!(oracle_max_s_club(4, &p4, 2), 3);
        assert_eq!(oracle_max_s_clique(4, &p4, 3), 4);
        // K4 satisfies gamma = 1/2 at k = 4
        let k4 = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        assert!(oracle_gcs_exists(4, &k4, 1, 2, 4));
        assert!(!oracle_gcs_exists(4, &p4, 3, 4, 3));
    }
}
