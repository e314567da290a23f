//! Partition selection and coset search.

pub mod coset;
pub mod ilp;
pub mod lp;
pub mod partition;

use std::time::Duration;

use serde::{Deserialize, Serialize};

pub use coset::{decode_coset_solution, ilp_coset_model, random_coset_search, CosetSearchResult};
pub use ilp::{enumerate_feasible, solve_ilp, Cmp, Constraint, IlpModel, IlpSolution, SolveStatus};
pub use lp::{export_lp, parse_lp};
pub use partition::{
    contiguous_partition, coverage_count, decode_partition, default_symbol_sets, greedy_partition, ilp_partition_model,
    is_partition,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Solver {
    #[default]
    Builtin,
    /// Write the model as LP text and stop.
    ExportOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub seed: u64,
    pub trial_budget: u64,
    pub time_budget: Duration,
    /// Branch-and-bound nodes before the solver gives up.
    pub node_budget: u64,
    pub solver: Solver,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            trial_budget: 10_000,
            time_budget: Duration::from_secs(600),
            node_budget: 10_000_000,
            solver: Solver::Builtin,
        }
    }
}

/// The k rotations of a base partition: family t assigns base set (i + t) mod k to block i.
pub fn cyclic_shift_family(base: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let k = base.len();
    (0..k).map(|t| (0..k).map(|i| base[(i + t) % k].clone()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotations() {
        let fam = cyclic_shift_family(&[vec![0], vec![1, 2], vec![3]]);
        assert_eq!(fam.len(), 3);
        assert_eq!(fam[1], vec![vec![1, 2], vec![3], vec![0]]);
    }
}
