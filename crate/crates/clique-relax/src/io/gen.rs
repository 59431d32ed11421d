//! Seeded, reproducible instance generators: G(n,p), uniform random labeled
//! trees via random sequence decoding, and forests as trees with a random
//! edge subset removed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq)]
pub enum GenError {
    #[error("probability {0} is not in [0, 1]")]
    InvalidProbability(f64),
}

/// Erdos-Renyi G(n, p): each pair appears independently with probability `p`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(GenError::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("generated pairs are simple"))
}

/// Uniform random labeled tree on `n` vertices, by decoding a uniformly
/// random length-(n-2) sequence over the vertex set.
pub fn gen_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.random_range(0..n)).collect();
    tree_from_sequence(n, &seq)
}

/// Decodes a Prufer-style sequence into its labeled tree.
pub fn tree_from_sequence(n: usize, seq: &[usize]) -> Graph {
    if n <= 1 {
        return Graph::from_edges(n, &[]).expect("trivial tree");
    }
    assert_eq!(seq.len(), n - 2, "sequence length must be n-2");
    let mut degree = vec![1usize; n];
    for &x in seq {
        assert!(x < n, "sequence entry out of range");
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // smallest-leaf-first decoding via a pointer and a floating leaf
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edges(n, &edges).expect("decoded tree is simple")
}

/// Random forest: a random tree with each edge independently removed with
/// probability `drop_p`.
pub fn gen_forest(n: usize, drop_p: f64, seed: u64) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&drop_p) || drop_p.is_nan() {
        return Err(GenError::InvalidProbability(drop_p));
    }
    let tree = gen_tree(n, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x666f7265_73740000); // distinct stream
    let edges: Vec<(usize, usize)> = tree
        .edges()
        .into_iter()
        .filter(|_| rng.random::<f64>() >= drop_p)
        .collect();
    Ok(Graph::from_edges(n, &edges).expect("subset of a tree is simple"))
}
