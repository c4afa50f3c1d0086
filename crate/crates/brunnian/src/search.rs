//! Bounded search for realizations on smaller universes than the canonical
//! construction provides.
//!
//! The search sweeps universe sizes upward, enumerating uniform families in
//! a canonical order with symmetry pruning, and falls back to the canonical
//! realization when nothing smaller is found within budget. Optimality is
//! only ever claimed relative to the searched class.

use thiserror::Error;

use crate::construct::realize;
use crate::family::{ProbabilitySpace, RandomFamily, RandomVariable};
use crate::structure::ConnectivityStructure;

/// Hard cap on the searchable universe size; beyond this the candidate
/// space is no longer desk-scale.
pub const MAX_SEARCH_UNIVERSE: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("budget caps must be positive with max_universe ≤ {MAX_SEARCH_UNIVERSE}: universe {0}, alphabet {1}, candidates {2}")]
    InvalidBudget(usize, u64, u64),
}

/// Which probability spaces the search sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbabilityModel {
    /// Uniform spaces with any number of outcomes.
    UniformAnyM,
    /// Uniform spaces whose size is a power of two.
    UniformDyadic,
}

/// Caps on the search: largest universe, largest per-variable value range,
/// and how many candidate families may be examined in total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    max_universe: usize,
    max_alphabet: u64,
    max_candidates: u64,
    probability_model: ProbabilityModel,
}

impl SearchBudget {
    pub fn new(
        max_universe: usize,
        max_alphabet: u64,
        max_candidates: u64,
        probability_model: ProbabilityModel,
    ) -> Result<Self, SearchError> {
        if max_universe == 0
            || max_universe > MAX_SEARCH_UNIVERSE
            || max_alphabet == 0
            || max_candidates == 0
        {
            return Err(SearchError::InvalidBudget(max_universe, max_alphabet, max_candidates));
        }
        Ok(SearchBudget { max_universe, max_alphabet, max_candidates, probability_model })
    }

    pub fn max_universe(&self) -> usize {
        self.max_universe
    }

    pub fn max_alphabet(&self) -> u64 {
        self.max_alphabet
    }

    pub fn max_candidates(&self) -> u64 {
        self.max_candidates
    }

    pub fn probability_model(&self) -> ProbabilityModel {
        self.probability_model
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_universe: MAX_SEARCH_UNIVERSE,
            max_alphabet: 4,
            max_candidates: 100_000,
            probability_model: ProbabilityModel::UniformAnyM,
        }
    }
}

enum SearchOutcome {
    Found(RandomFamily),
    NotFound,
    BudgetExhausted,
}

/// Finds a family with connectivity structure `k` on the smallest universe
/// the budget allows, or the canonical realization as a fallback, so the
/// returned family always has connectivity structure `k`.
///
/// Universe sizes are tried in ascending order; at each size the uniform
/// families are enumerated in lexicographic order of their value matrix
/// (outcomes are rows). A candidate is skipped when an equivalent family
/// strictly earlier in that order exists: rows must be non-decreasing
/// (outcome permutations) and each column's codes must appear in
/// first-occurrence order (per-variable value permutations).
pub fn minimize_family(k: &ConnectivityStructure, budget: &SearchBudget) -> RandomFamily {
    let canonical = realize(k);
    let cap = budget.max_universe.min(canonical.universe_size());
    let mut remaining = budget.max_candidates;
    for m in 1..=cap {
        if budget.probability_model == ProbabilityModel::UniformDyadic && !m.is_power_of_two() {
            continue;
        }
        match search_universe(k, m, budget.max_alphabet, &mut remaining) {
            SearchOutcome::Found(f) => return f,
            SearchOutcome::BudgetExhausted => break,
            SearchOutcome::NotFound => {}
        }
    }
    canonical
}

fn search_universe(
    k: &ConnectivityStructure,
    m: usize,
    max_alphabet: u64,
    remaining: &mut u64,
) -> SearchOutcome {
    let n = k.ground().n();
    let mut grid = vec![0u64; m * n];
    // Distinct codes seen so far in each column; a cell may reuse one of
    // them or introduce the next fresh code, never skip ahead.
    let mut fresh = vec![0u64; n];
    search_cell(k, m, n, max_alphabet, 0, &mut grid, &mut fresh, remaining)
}

#[allow(clippy::too_many_arguments)]
fn search_cell(
    k: &ConnectivityStructure,
    m: usize,
    n: usize,
    max_alphabet: u64,
    cell: usize,
    grid: &mut Vec<u64>,
    fresh: &mut Vec<u64>,
    remaining: &mut u64,
) -> SearchOutcome {
    if cell == m * n {
        if *remaining == 0 {
            return SearchOutcome::BudgetExhausted;
        }
        *remaining -= 1;
        let family = grid_family(k, m, n, grid);
        if family.connectivity_structure() == *k {
            return SearchOutcome::Found(family);
        }
        return SearchOutcome::NotFound;
    }
    let (row, col) = (cell / n, cell % n);
    // Row-sortedness: once some earlier column of this row exceeds the
    // previous row, the rest of the row is unconstrained.
    let lower = if row == 0 {
        0
    } else {
        let prefix_tied = (0..col).all(|c| grid[row * n + c] == grid[(row - 1) * n + c]);
        if prefix_tied {
            grid[(row - 1) * n + col]
        } else {
            0
        }
    };
    let upper = max_alphabet.min(fresh[col] + 1);
    for v in lower..upper {
        grid[cell] = v;
        let was_fresh = v == fresh[col];
        if was_fresh {
            fresh[col] += 1;
        }
        let out = search_cell(k, m, n, max_alphabet, cell + 1, grid, fresh, remaining);
        if was_fresh {
            fresh[col] -= 1;
        }
        match out {
            SearchOutcome::NotFound => {}
            found_or_exhausted => return found_or_exhausted,
        }
    }
    grid[cell] = 0;
    SearchOutcome::NotFound
}

fn grid_family(k: &ConnectivityStructure, m: usize, n: usize, grid: &[u64]) -> RandomFamily {
    let variables: Vec<RandomVariable> = (0..n)
        .map(|c| RandomVariable::from_raw((0..m).map(|r| grid[r * n + c]).collect()))
        .collect();
    RandomFamily::new(k.ground(), ProbabilitySpace::uniform(m), variables)
        .expect("grid dimensions match")
}
