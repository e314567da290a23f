//! Searching for coset representatives of a group at a target distance.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{agreements_capped, compose_slices, inverse_slice, Permutation, PermutationArray, Symbol};
use crate::verify::group_min_distance;

use super::ilp::{Cmp, IlpModel};
use super::SearchConfig;

const BATCH: u64 = 256;

/// True when every row of `g` agrees with `target` in at most n − d positions.
fn far_from_group(g: &PermutationArray, target: &[Symbol], d: usize) -> bool {
    let Some(cap) = g.n().checked_sub(d) else { return false };
    g.rows().all(|k| agreements_capped(k, target, cap) <= cap)
}

/// min over k ∈ G of hd(α k, β k') ≥ d reduces to G against α⁻¹ β.
fn cosets_far(g: &PermutationArray, alpha: &[Symbol], beta: &[Symbol], d: usize) -> bool {
    far_from_group(g, &compose_slices(&inverse_slice(alpha), beta), d)
}

fn candidate(n: usize, seed: u64) -> Vec<Symbol> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<Symbol> = (0..n as Symbol).collect();
    v.shuffle(&mut rng);
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSearchResult {
    pub found: Vec<Permutation>,
    /// (trial index, seed) of each accepted representative.
    pub trials: Vec<(u64, u64)>,
    pub trials_run: u64,
}

/// Trial t draws a uniform permutation from seed + t. Candidates are screened in parallel
/// and accepted in trial order, so the output depends only on the seed and the trial budget.
pub fn random_coset_search(
    g: &PermutationArray,
    d_target: usize,
    existing: &[Permutation],
    cfg: &SearchConfig,
) -> Result<CosetSearchResult> {
    let n = g.n();
    let (gd, _) = group_min_distance(g)?;
    if d_target > gd {
        return Err(Error::Precondition(format!("target {d_target} exceeds the group's distance {gd}")));
    }
    if let Some(e) = existing.iter().find(|e| e.len() != n) {
        return Err(Error::LengthMismatch { left: n, right: e.len() });
    }
    let start = Instant::now();
    let mut found: Vec<Permutation> = Vec::new();
    let mut trials = Vec::new();
    let mut t = 0u64;
    while t < cfg.trial_budget && start.elapsed() <= cfg.time_budget {
        let end = (t + BATCH).min(cfg.trial_budget);
        let screened: Vec<(u64, Vec<Symbol>)> = (t..end)
            .into_par_iter()
            .map(|trial| (trial, candidate(n, cfg.seed.wrapping_add(trial))))
            .filter(|(_, c)| far_from_group(g, c, d_target))
            .filter(|(_, c)| existing.iter().all(|e| cosets_far(g, e.as_slice(), c, d_target)))
            .collect();
        for (trial, c) in screened {
            if found.iter().all(|f| cosets_far(g, f.as_slice(), &c, d_target)) {
                found.push(Permutation::from_vec_unchecked(c));
                trials.push((trial, cfg.seed.wrapping_add(trial)));
            }
        }
        t = end;
    }
    Ok(CosetSearchResult { found, trials, trials_run: t })
}

pub fn x_var(i: usize, j: usize) -> String {
    format!("x_{i}_{j}")
}

/// x_i_j means π(i) = j. Each row of G may agree with π in at most n − d positions.
pub fn ilp_coset_model(g: &PermutationArray, d_target: usize) -> Result<IlpModel> {
    let n = g.n();
    let mut m = IlpModel::new();
    let x: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| m.add_var(x_var(i, j))).collect::<Result<_>>()).collect::<Result<_>>()?;
    m.set_objective(x.iter().flatten().map(|&v| (v, 1)).collect())?;
    for (i, xi) in x.iter().enumerate() {
        m.add_constraint(format!("pos_{i}"), xi.iter().map(|&v| (v, 1)).collect(), Cmp::Eq, 1)?;
    }
    for j in 0..n {
        m.add_constraint(format!("sym_{j}"), (0..n).map(|i| (x[i][j], 1)).collect(), Cmp::Eq, 1)?;
    }
    let cap = n as i64 - d_target as i64;
    for (s, row) in g.rows().enumerate() {
        let terms = row.iter().enumerate().map(|(i, &j)| (x[i][j as usize], 1)).collect();
        m.add_constraint(format!("agree_{s}"), terms, Cmp::Le, cap)?;
    }
    Ok(m)
}

/// The permutation encoded by a solution of [`ilp_coset_model`], rechecked for bijectivity.
pub fn decode_coset_solution(model: &IlpModel, values: &[bool], n: usize) -> Result<Permutation> {
    let mut pi = vec![None; n];
    for (i, slot) in pi.iter_mut().enumerate() {
        for j in 0..n {
            let v = model.var(&x_var(i, j)).ok_or_else(|| Error::Model(format!("missing {}", x_var(i, j))))?;
            if values[v] {
                if slot.is_some() {
                    return Err(Error::Model(format!("position {i} assigned twice")));
                }
                *slot = Some(j as Symbol);
            }
        }
    }
    let pi: Vec<Symbol> = pi
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| Error::Model(format!("position {i} unassigned"))))
        .collect::<Result<_>>()?;
    Permutation::new(pi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_target_accepts_first_trial() {
        let g = PermutationArray::new(3, [Permutation::identity(3)]).unwrap();
        let cfg = SearchConfig { trial_budget: 1, ..SearchConfig::default() };
        let r = random_coset_search(&g, 0, &[], &cfg).unwrap();
        assert_eq!(r.found.len(), 1);
        assert_eq!(r.trials, vec![(0, cfg.seed)]);
    }

    #[test]
    fn target_above_group_distance_rejected() {
        let g = PermutationArray::new(3, [Permutation::identity(3)]).unwrap();
        assert!(random_coset_search(&g, 4, &[], &SearchConfig::default()).is_err());
    }
}
