//! Immutable simple undirected graphs and the structural primitives the
//! solvers, reductions and checkers are built on: BFS distances, balls,
//! degeneracy elimination orders, power graphs and universal-vertex padding.

use std::borrow::Cow;
use std::collections::BinaryHeap;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;

/// Sentinel for an unreachable vertex in a distance map.
pub const INF: usize = usize::MAX;

/// Up to this many vertices the adjacency is mirrored as bitset rows, which
/// the exact solvers use for fast intersection counts.
pub const DEFAULT_BITSET_THRESHOLD: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge endpoint {0} out of range (n = {1})")]
    OutOfRange(usize, usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
}

/// Immutable simple undirected graph on vertex ids `0..n`.
///
/// Neighbor lists are kept sorted; `sum(deg) == 2m` holds for every
/// constructed graph by construction.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    bits: Option<Vec<VertexSet>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}
impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Self::build(n, edges, false, DEFAULT_BITSET_THRESHOLD)
    }

    /// Like [`Graph::from_edges`] but silently collapses duplicate edges.
    pub fn from_edges_dedup(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Self::build(n, edges, true, DEFAULT_BITSET_THRESHOLD)
    }

    pub fn build(
        n: usize,
        edges: &[(usize, usize)],
        collapse_duplicates: bool,
        bitset_threshold: usize,
    ) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::OutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::OutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            if list.len() != before && !collapse_duplicates {
                let dup = find_duplicate(u, edges);
                return Err(GraphError::DuplicateEdge(dup.0, dup.1));
            }
            m += list.len();
        }
        debug_assert!(m % 2 == 0);
        let m = m / 2;
        let bits = if n <= bitset_threshold {
            Some(bitset_rows(n, &adj))
        } else {
            None
        };
        Ok(Graph { n, m, adj, bits })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of non-edges `C(n,2) - m`, in checked integer arithmetic.
    pub fn m_bar(&self) -> usize {
        let pairs = self
            .n
            .checked_mul(self.n.saturating_sub(1))
            .expect("pair count overflow")
            / 2;
        pairs - self.m
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if let Some(bits) = &self.bits {
            return bits[u].contains(v);
        }
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as sorted `(min, max)` pairs, lexicographically ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Non-edges as sorted `(min, max)` pairs, lexicographically ascending.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m_bar());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Adjacency as bitset rows; borrows the cached rows when present.
    pub fn bit_adjacency(&self) -> Cow<'_, [VertexSet]> {
        match &self.bits {
            Some(rows) => Cow::Borrowed(rows),
            None => Cow::Owned(bitset_rows(self.n, &self.adj)),
        }
    }

    /// Hop distances from `source`; unreachable vertices map to [`INF`].
    ///
    /// With `restrict`, traversal is confined to `restrict ∪ {source}`, i.e.
    /// distances are taken in the induced subgraph on that set.
    pub fn bfs_distances(&self, source: usize, restrict: Option<&VertexSet>) -> Vec<usize> {
        assert!(source < self.n, "invalid BFS source {source}");
        let mut dist = vec![INF; self.n];
        dist[source] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == INF && restrict.is_none_or(|r| r.contains(v)) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Hop distance between `u` and `v` in the subgraph induced by
    /// `S ∪ {u, v}`.
    pub fn dist_within(&self, s: &VertexSet, u: usize, v: usize) -> usize {
        if u == v {
            return 0;
        }
        let mut allowed = s.clone();
        allowed.insert(u);
        allowed.insert(v);
        self.bfs_distances(u, Some(&allowed))[v]
    }

    /// `{v : dist(u, v) <= r}`; always contains `u`.
    pub fn ball(&self, u: usize, r: usize) -> VertexSet {
        let dist = self.bfs_distances(u, None);
        VertexSet::from_iter(self.n, (0..self.n).filter(|&v| dist[v] <= r))
    }

    /// Connected components, each sorted ascending, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Minimum-degree peeling, smallest vertex id first on ties. The returned
    /// bound is the degeneracy.
    pub fn degeneracy_order(&self) -> EliminationOrder {
        let mut deg: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        let mut removed = vec![false; self.n];
        // lazy min-heap over (degree, id); stale entries are skipped
        let mut heap: BinaryHeap<std::cmp::Reverse<(usize, usize)>> =
            (0..self.n).map(|u| std::cmp::Reverse((deg[u], u))).collect();
        let mut peel = Vec::with_capacity(self.n);
        let mut bound = 0;
        while let Some(std::cmp::Reverse((d, u))) = heap.pop() {
            if removed[u] || d != deg[u] {
                continue;
            }
            removed[u] = true;
            bound = bound.max(d);
            peel.push(u);
            for &v in &self.adj[u] {
                if !removed[v] {
                    deg[v] -= 1;
                    heap.push(std::cmp::Reverse((deg[v], v)));
                }
            }
        }
        peel.reverse();
        EliminationOrder { order: peel, bound }
    }

    pub fn degeneracy(&self) -> usize {
        self.degeneracy_order().bound
    }

    /// Two-colorability via BFS; the empty graph is bipartite.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![2u8; self.n];
        for start in 0..self.n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == 2 {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Same vertex set, edge `{u,v}` iff `1 <= dist(u,v) <= s`.
    pub fn power(&self, s: usize) -> Graph {
        assert!(s >= 1, "power graph needs s >= 1");
        let mut edges = Vec::new();
        for u in 0..self.n {
            let dist = self.bfs_distances(u, None);
            for (v, &d) in dist.iter().enumerate().skip(u + 1) {
                if d <= s {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &edges).expect("power graph is simple")
    }

    /// Adds `q` universal vertices (ids `n..n+q`), each adjacent to every
    /// other vertex including each other.
    pub fn pad_universal(&self, q: usize) -> Graph {
        let n2 = self.n + q;
        let mut edges = self.edges();
        for w in self.n..n2 {
            for v in 0..w {
                edges.push((v, w));
            }
        }
        Graph::from_edges(n2, &edges).expect("padded graph is simple")
    }

    pub fn stats(&self) -> GraphStats {
        let max_degree = (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0);
        let mut degs: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        let mut h_index = 0;
        for (i, &d) in degs.iter().enumerate() {
            if d > i {
                h_index = i + 1;
            } else {
                break;
            }
        }
        let elim = self.degeneracy_order();
        let comps = self.components();
        let diameter = if comps.len() == 1 && self.n > 0 {
            Some(self.component_diameter(&comps[0]))
        } else {
            None
        };
        GraphStats {
            n: self.n,
            m: self.m,
            max_degree,
            h_index,
            degeneracy: elim.bound,
            bipartite: self.is_bipartite(),
            component_count: comps.len(),
            diameter,
        }
    }

    fn component_diameter(&self, comp: &[usize]) -> usize {
        let mut diam = 0;
        for &u in comp {
            let dist = self.bfs_distances(u, None);
            for &v in comp {
                debug_assert_ne!(dist[v], INF);
                diam = diam.max(dist[v]);
            }
        }
        diam
    }
}

fn bitset_rows(n: usize, adj: &[Vec<usize>]) -> Vec<VertexSet> {
    adj.iter()
        .map(|list| VertexSet::from_iter(n, list.iter().copied()))
        .collect()
}

fn find_duplicate(u: usize, edges: &[(usize, usize)]) -> (usize, usize) {
    let mut seen = std::collections::HashSet::new();
    for &(a, b) in edges {
        let key = (a.min(b), a.max(b));
        if !seen.insert(key) && (a == u || b == u) {
            return key;
        }
    }
    // the caller detected a duplicate incident to u, so this is unreachable,
    // but fall back to the first repeated pair to keep the error useful
    let mut seen = std::collections::HashSet::new();
    for &(a, b) in edges {
        let key = (a.min(b), a.max(b));
        if !seen.insert(key) {
            return key;
        }
    }
    unreachable!("no duplicate edge found")
}

/// Vertex permutation certifying a degeneracy bound: eliminating vertices
/// from the back of `order`, each eliminated vertex has at most `bound`
/// neighbors among the ones still present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder {
    pub order: Vec<usize>,
    pub bound: usize,
}

impl EliminationOrder {
    /// Replays the elimination and confirms no step removes a vertex with
    /// more than `bound` remaining neighbors.
    pub fn certifies(&self, g: &Graph) -> bool {
        if self.order.len() != g.n() {
            return false;
        }
        let mut pos = vec![usize::MAX; g.n()];
        for (i, &v) in self.order.iter().enumerate() {
            if v >= g.n() || pos[v] != usize::MAX {
                return false;
            }
            pos[v] = i;
        }
        for (i, &v) in self.order.iter().enumerate() {
            let earlier = g.neighbors(v).iter().filter(|&&w| pos[w] < i).count();
            if earlier > self.bound {
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub h_index: usize,
    pub degeneracy: usize,
    pub bipartite: bool,
    pub component_count: usize,
    /// Defined only for connected graphs.
    pub diameter: Option<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        e.push((n - 1, 0));
        Graph::from_edges(n, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, &(1..=leaves).map(|v| (0, v)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn build_triangle() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.n(), 3);
    }

    #[test]
    fn build_rejects_self_loop() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 5)]),
            Err(GraphError::OutOfRange(5, 2))
        );
    }

    #[test]
    fn build_duplicate_edges() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        let g = Graph::from_edges_dedup(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn handshake_on_p4() {
        let g = path(4);
        let degsum: usize = (0..4).map(|u| g.degree(u)).sum();
        assert_eq!(degsum, 2 * g.m());
        assert_eq!(
            (0..4).map(|u| g.degree(u)).collect::<Vec<_>>(),
            vec![1, 2, 2, 1]
        );
    }

    #[test]
    fn bfs_on_path_and_disconnected() {
        let g = path(4);
        assert_eq!(g.bfs_distances(0, None), vec![0, 1, 2, 3]);
        let h = Graph::from_edges(2, &[]).unwrap();
        assert_eq!(h.bfs_distances(0, None), vec![0, INF]);
    }

    #[test]
    fn bfs_on_c5_max_distance() {
        // brute-force all-pairs on the 5-cycle: eccentricity 2 everywhere
        let g = cycle(5);
        for u in 0..5 {
            let d = g.bfs_distances(u, None);
            assert_eq!(*d.iter().max().unwrap(), 2);
        }
    }

    #[test]
    fn dist_within_cases() {
        // P4 = a-b-c-d with interior removed
        let g = path(4);
        let s = VertexSet::from_iter(4, [0, 3]);
        assert_eq!(g.dist_within(&s, 0, 3), INF);

        // S = V gives plain distances
        let full = VertexSet::full(4);
        assert_eq!(g.dist_within(&full, 0, 3), 3);

        // C6 restricted to one arc of 4 vertices: endpoints at distance 3
        let c6 = cycle(6);
        let arc = VertexSet::from_iter(6, [0, 1, 2, 3]);
        assert_eq!(c6.dist_within(&arc, 0, 3), 3);
        assert_eq!(c6.bfs_distances(0, None)[3], 3); // in C6 itself both routes tie
        let arc5 = VertexSet::from_iter(6, [0, 1, 2, 3, 4]);
        assert_eq!(c6.dist_within(&arc5, 0, 4), 4);
    }

    #[test]
    fn ball_cases() {
        let g = path(5);
        assert_eq!(g.ball(2, 0).to_vec(), vec![2]);
        assert_eq!(g.ball(2, 1).len(), 3);
        let st = star(5);
        assert_eq!(st.ball(0, 1).len(), 6);
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(path(7).degeneracy(), 1); // trees have degeneracy 1
        assert_eq!(star(9).degeneracy(), 1);
        assert_eq!(complete(4).degeneracy(), 3);
        assert_eq!(cycle(6).degeneracy(), 2);
        assert_eq!(Graph::from_edges(0, &[]).unwrap().degeneracy(), 0);
    }

    #[test]
    fn elimination_order_certifies() {
        for g in [path(6), cycle(6), complete(5), star(4)] {
            let elim = g.degeneracy_order();
            assert!(elim.certifies(&g));
            if elim.bound > 0 {
                let weaker = EliminationOrder {
                    order: elim.order.clone(),
                    bound: elim.bound - 1,
                };
                assert!(!weaker.certifies(&g));
            }
        }
    }

    #[test]
    fn stats_star_k15() {
        // degree sequence 5,1,1,1,1,1: only one vertex of degree >= 2
        let st = star(5);
        let s = st.stats();
        assert_eq!(s.max_degree, 5);
        assert_eq!(s.h_index, 1);
        assert_eq!(s.degeneracy, 1);
        assert!(s.bipartite);
    }

    #[test]
    fn stats_k4_and_c5() {
        let s = complete(4).stats();
        assert_eq!((s.max_degree, s.h_index, s.degeneracy), (3, 3, 3));
        assert!(!s.bipartite);
        assert_eq!(s.diameter, Some(1));
        assert!(!cycle(5).stats().bipartite);
        assert!(cycle(6).stats().bipartite);
    }

    #[test]
    fn stats_disconnected_has_no_diameter() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let s = g.stats();
        assert_eq!(s.component_count, 2);
        assert_eq!(s.diameter, None);
    }

    #[test]
    fn power_graph_cases() {
        let g = path(4);
        assert_eq!(g.power(1), g);
        assert_eq!(g.power(2).edges(), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(g.power(3), complete(4)); // diameter 3
    }

    #[test]
    fn pad_universal_cases() {
        let g = path(4);
        assert_eq!(g.pad_universal(0), g);
        let empty2 = Graph::from_edges(2, &[]).unwrap();
        let padded = empty2.pad_universal(1);
        assert_eq!(padded.edges(), vec![(0, 2), (1, 2)]); // P3 through the new vertex
        assert_eq!(complete(3).pad_universal(2), complete(5));
    }

    #[test]
    fn m_bar_exact() {
        assert_eq!(complete(5).m_bar(), 0);
        assert_eq!(path(4).m_bar(), 3);
        assert_eq!(Graph::from_edges(0, &[]).unwrap().m_bar(), 0);
    }
}
