//! Exact maximum clique via branch and bound with greedy coloring bounds,
//! on bitset adjacency rows.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::problem::SolveOutcome;

use super::SolveError;

/// Finds a maximum clique. Deterministic for a given graph: vertices are
/// ordered by descending degree (ties by id) and branching follows the
/// coloring order.
pub fn max_clique(g: &Graph, budget: u64) -> Result<SolveOutcome, SolveError> {
    let adj = g.bit_adjacency();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));

    let mut search = CliqueSearch {
        adj: &adj,
        best: Vec::new(),
        nodes: 0,
        budget,
    };
    search.expand(&mut Vec::new(), order)?;
    Ok(SolveOutcome::yes(search.best, search.nodes, "bb-maxclique"))
}

struct CliqueSearch<'a> {
    adj: &'a [VertexSet],
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, current: &mut Vec<usize>, cand: Vec<usize>) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SolveError::BudgetExceeded(self.budget));
        }
        if cand.is_empty() {
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            return Ok(());
        }
        let (ordered, colors) = self.color_sort(&cand);
        for i in (0..ordered.len()).rev() {
            if current.len() + colors[i] <= self.best.len() {
                return Ok(());
            }
            let v = ordered[i];
            let next: Vec<usize> = ordered[..i]
                .iter()
                .copied()
                .filter(|&u| self.adj[v].contains(u))
                .collect();
            current.push(v);
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next)?;
            }
            current.pop();
        }
        Ok(())
    }

    /// Greedy coloring in candidate order; returns candidates regrouped by
    /// color class with each vertex's color number (an upper bound on the
    /// clique extension size at its position).
    fn color_sort(&self, cand: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<(VertexSet, Vec<usize>)> = Vec::new();
        for &v in cand {
            let slot = classes.iter().position(|(mask, _)| !mask.contains(v));
            match slot {
                Some(i) => {
                    let (mask, members) = &mut classes[i];
                    mask.union_with(&self.adj[v]);
                    members.push(v);
                }
                None => {
                    classes.push((self.adj[v].clone(), vec![v]));
                }
            }
        }
        let mut ordered = Vec::with_capacity(cand.len());
        let mut colors = Vec::with_capacity(cand.len());
        for (c, (_, members)) in classes.iter().enumerate() {
            for &v in members {
                ordered.push(v);
                colors.push(c + 1);
            }
        }
        (ordered, colors)
    }
}
