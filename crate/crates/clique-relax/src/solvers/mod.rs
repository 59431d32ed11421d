//! Exact decision and optimization solvers for the four problems.
//!
//! Every search-based solver takes a node/subset cap and fails loudly with
//! [`SolveError::BudgetExceeded`] instead of truncating silently. Branching
//! tie-breaks are canonical (smallest lexicographic) so decisions, witnesses
//! and node counts are reproducible.

mod clique;
mod club;
mod forest;
mod gcs;

pub use clique::max_clique;
pub use club::{solve_s_club, solve_s_clique};
pub use forest::solve_forest;
pub use gcs::{solve_gcs, GcsStrategy};

use thiserror::Error;

/// Default node/subset cap for the search-based solvers.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("input graph is not a forest (degeneracy {0})")]
    NotAForest(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}

/// Lexicographic size-`t` combinations of `0..n`, visited in ascending order.
///
/// Calls `f` with each combination; stops early when `f` returns `true`
/// (found) and reports how many combinations were visited.
pub(crate) fn for_each_combination(
    n: usize,
    t: usize,
    visited: &mut u64,
    cap: u64,
    mut f: impl FnMut(&[usize]) -> bool,
) -> Result<Option<Vec<usize>>, SolveError> {
    if t > n {
        return Ok(None);
    }
    let mut idx: Vec<usize> = (0..t).collect();
    loop {
        *visited += 1;
        if *visited > cap {
            return Err(SolveError::BudgetExceeded(cap));
        }
        if f(&idx) {
            return Ok(Some(idx));
        }
        // advance to the next combination
        let mut i = t;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if idx[i] != i + n - t {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..t {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_visit_all_in_order() {
        let mut seen = Vec::new();
        let mut visited = 0;
        let r = for_each_combination(4, 2, &mut visited, 1000, |c| {
            seen.push(c.to_vec());
            false
        })
        .unwrap();
        assert!(r.is_none());
        assert_eq!(visited, 6);
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn combinations_respect_cap() {
        let mut visited = 0;
        let r = for_each_combination(10, 3, &mut visited, 5, |_| false);
        assert_eq!(r, Err(SolveError::BudgetExceeded(5)));
    }

    #[test]
    fn empty_combination() {
        let mut visited = 0;
        let r = for_each_combination(3, 0, &mut visited, 10, |c| c.is_empty()).unwrap();
        assert_eq!(r, Some(vec![]));
    }
}
