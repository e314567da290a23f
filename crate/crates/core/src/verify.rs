//! Minimum-distance scans: exhaustive, sampled and coset-structured.
//!
//! Pairwise scans fan out over rows with rayon. Every reduction orders candidates by
//! `(distance, i, j)` or by `(i, j)`, so reports do not depend on scheduling.

use std::sync::atomic::{AtomicUsize, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{agreements_capped, compose_slices, hd, inverse_slice, Permutation, PermutationArray, Symbol};

pub const DEFAULT_SAMPLED_PAIRS: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceMode {
    Full,
    CosetShortcut,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub mode: DistanceMode,
    /// Smallest distance seen. Exact over all pairs when `exact` is set; otherwise the
    /// distance of `witness_pair`, an upper bound on the true minimum.
    pub min_distance_found: usize,
    pub exact: bool,
    pub pairs_checked: u64,
    pub witness_pair: Option<(usize, usize)>,
    pub sample_seed: Option<u64>,
    pub claimed_d: Option<usize>,
}

impl DistanceReport {
    /// True when no checked pair falls below the claimed distance.
    pub fn passed(&self) -> bool {
        self.claimed_d.is_none_or(|d| self.min_distance_found >= d)
    }

    fn singleton(n: usize, mode: DistanceMode, claimed_d: Option<usize>) -> Self {
        DistanceReport {
            mode,
            min_distance_found: n,
            exact: true,
            pairs_checked: 0,
            witness_pair: None,
            sample_seed: None,
            claimed_d,
        }
    }
}

/// Pairs `(i, j)` with `i < j` that precede row `i` in lexicographic scan order.
fn pairs_before(m: usize, i: usize) -> u64 {
    let (m, i) = (m as u64, i as u64);
    i * (m - 1) - i * (i.saturating_sub(1)) / 2
}

/// Exact minimum distance over all unordered pairs. A singleton array reports `n`.
///
/// With `early_exit_threshold = Some(t)` a pair is abandoned once its agreements exceed
/// `n - t`; the scan then stops at the lexicographically first pair closer than `t` and
/// reports that pair's distance with `exact = false`.
pub fn min_distance(a: &PermutationArray, early_exit_threshold: Option<usize>) -> Result<DistanceReport> {
    let m = a.len();
    if m == 0 {
        return Err(Error::EmptyArray);
    }
    let n = a.n();
    if m == 1 {
        return Ok(DistanceReport::singleton(n, DistanceMode::Full, early_exit_threshold));
    }
    let total_pairs = (m as u64) * (m as u64 - 1) / 2;

    let Some(t) = early_exit_threshold else {
        let (d, i, j) = (0..m - 1)
            .into_par_iter()
            .map(|i| {
                let ri = a.row(i);
                let mut best = (usize::MAX, i, 0);
                for j in i + 1..m {
                    let d = hd(ri, a.row(j));
                    if d < best.0 {
                        best = (d, i, j);
                    }
                }
                best
            })
            .min()
            .expect("at least one pair");
        return Ok(DistanceReport {
            mode: DistanceMode::Full,
            min_distance_found: d,
            exact: true,
            pairs_checked: total_pairs,
            witness_pair: Some((i, j)),
            sample_seed: None,
            claimed_d: None,
        });
    };

    let cap = n.saturating_sub(t);
    let first_bad = AtomicUsize::new(usize::MAX);
    // Per row: Err(j) for its first violating partner, Ok((d, j)) for its closest partner.
    let per_row: Vec<Option<std::result::Result<(usize, usize), usize>>> = (0..m - 1)
        .into_par_iter()
        .map(|i| {
            if i > first_bad.load(Ordering::Relaxed) {
                return None;
            }
            let ri = a.row(i);
            let mut best = (usize::MAX, 0);
            for j in i + 1..m {
                let agree = agreements_capped(ri, a.row(j), cap);
                if agree > cap {
                    first_bad.fetch_min(i, Ordering::Relaxed);
                    return Some(Err(j));
                }
                if n - agree < best.0 {
                    best = (n - agree, j);
                }
            }
            Some(Ok(best))
        })
        .collect();

    let bad = per_row.iter().enumerate().find_map(|(i, r)| match r {
        Some(Err(j)) => Some((i, *j)),
        _ => None,
    });
    if let Some((i, j)) = bad {
        return Ok(DistanceReport {
            mode: DistanceMode::Full,
            min_distance_found: hd(a.row(i), a.row(j)),
            exact: false,
            pairs_checked: pairs_before(m, i) + (j - i) as u64,
            witness_pair: Some((i, j)),
            sample_seed: None,
            claimed_d: Some(t),
        });
    }
    let (d, i, j) = per_row
        .iter()
        .enumerate()
        .filter_map(|(i, r)| match r {
            Some(Ok((d, j))) => Some((*d, i, *j)),
            _ => None,
        })
        .min()
        .expect("at least one pair");
    Ok(DistanceReport {
        mode: DistanceMode::Full,
        min_distance_found: d,
        exact: true,
        pairs_checked: total_pairs,
        witness_pair: Some((i, j)),
        sample_seed: None,
        claimed_d: Some(t),
    })
}

/// Exact minimum over `A × B`.
pub fn cross_distance(a: &PermutationArray, b: &PermutationArray) -> Result<usize> {
    Ok(cross_scan(a, b, None)?.0)
}

/// Cross scan returning `(distance, (i, j))`. With a threshold the scan stops at the
/// first pair (in row-major order) closer than it.
pub(crate) fn cross_scan(
    a: &PermutationArray,
    b: &PermutationArray,
    threshold: Option<usize>,
) -> Result<(usize, (usize, usize))> {
    if a.n() != b.n() {
        return Err(Error::LengthMismatch { left: a.n(), right: b.n() });
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyArray);
    }
    let n = a.n();
    let cap = threshold.map_or(n, |t| n.saturating_sub(t));
    let first_bad = AtomicUsize::new(usize::MAX);
    let per_row: Vec<Option<(bool, usize, usize)>> = (0..a.len())
        .into_par_iter()
        .map(|i| {
            if i > first_bad.load(Ordering::Relaxed) {
                return None;
            }
            let ri = a.row(i);
            let mut best = (false, usize::MAX, 0);
            for (j, rj) in b.rows().enumerate() {
                let agree = agreements_capped(ri, rj, cap);
                if threshold.is_some() && agree > cap {
                    first_bad.fetch_min(i, Ordering::Relaxed);
                    return Some((true, hd(ri, rj), j));
                }
                if n - agree < best.1 {
                    best = (false, n - agree, j);
                }
            }
            Some(best)
        })
        .collect();
    if let Some((i, &Some((_, d, j)))) = per_row.iter().enumerate().find(|(_, r)| matches!(r, Some((true, ..)))) {
        return Ok((d, (i, j)));
    }
    let (d, i, j) = per_row
        .iter()
        .enumerate()
        .filter_map(|(i, r)| r.map(|(_, d, j)| (d, i, j)))
        .min()
        .expect("non-empty");
    Ok((d, (i, j)))
}

/// Distance between the left cosets `alpha∘G` and `beta∘G`.
///
/// `hd(alpha∘g, beta∘h) = hd(g∘h⁻¹, alpha⁻¹∘beta)` and `g∘h⁻¹` ranges over `G`, so one
/// pass over `G` suffices. `G` must be a group; see [`crate::group::check_group`].
pub fn coset_min_distance(g: &PermutationArray, alpha: &Permutation, beta: &Permutation) -> Result<usize> {
    Ok(coset_scan(g, alpha.as_slice(), beta.as_slice())?.0)
}

/// Returns the distance and the index of the element `k ∈ G` achieving it; the rows
/// `alpha∘k` and `beta` realize the minimum.
pub(crate) fn coset_scan(g: &PermutationArray, alpha: &[Symbol], beta: &[Symbol]) -> Result<(usize, usize)> {
    let n = g.n();
    for len in [alpha.len(), beta.len()] {
        if len != n {
            return Err(Error::LengthMismatch { left: n, right: len });
        }
    }
    if g.is_empty() {
        return Err(Error::EmptyArray);
    }
    let gamma = compose_slices(&inverse_slice(alpha), beta);
    let (d, k) = g
        .as_flat()
        .par_chunks_exact(n)
        .enumerate()
        .map(|(k, h)| (hd(h, &gamma), k))
        .min()
        .expect("non-empty");
    Ok((d, k))
}

/// First row of `block` not of the form `rep ∘ g` with g ∈ `group`.
pub(crate) fn first_outside_coset(group: &PermutationArray, rep: &Permutation, block: &PermutationArray) -> Option<usize> {
    let gidx = group.index();
    let inv = inverse_slice(rep.as_slice());
    (0..block.len()).into_par_iter().find_first(|&k| !gidx.contains(&compose_slices(&inv, block.row(k))))
}

/// `min_{h ≠ id} hd(id, h)`, the minimum distance of a group. Returns the index of the
/// identity and of a closest element.
pub fn group_min_distance(g: &PermutationArray) -> Result<(usize, Option<(usize, usize)>)> {
    let n = g.n();
    let id = g
        .rows()
        .position(|r| r.iter().enumerate().all(|(i, &s)| i == s as usize))
        .ok_or_else(|| Error::NotAGroup("identity missing".into()))?;
    let best = g
        .rows()
        .enumerate()
        .filter(|&(k, _)| k != id)
        .map(|(k, r)| (n - r.iter().enumerate().filter(|&(i, &s)| i == s as usize).count(), k))
        .min();
    Ok(match best {
        None => (n, None),
        Some((d, k)) => (d, Some((id.min(k), id.max(k)))),
    })
}

#[derive(Clone, Copy, Debug)]
pub enum VerifyMode<'a> {
    Full,
    Sampled { pairs: u64, seed: u64 },
    /// `A` must be the concatenation of the cosets `reps[b] ∘ group`, |group| rows each, in
    /// any order within a coset.
    Coset { group: &'a PermutationArray, reps: &'a [Permutation], full_intra: bool },
}

/// Checks `hd(A) ≥ claimed_d`. Violations come back as a report with a witness, not an error.
pub fn verify_pa(a: &PermutationArray, claimed_d: usize, mode: VerifyMode<'_>) -> Result<DistanceReport> {
    match mode {
        VerifyMode::Full => min_distance(a, Some(claimed_d)),
        VerifyMode::Sampled { pairs, seed } => verify_sampled(a, claimed_d, pairs, seed),
        VerifyMode::Coset { group, reps, full_intra } => verify_coset(a, claimed_d, group, reps, full_intra),
    }
}

fn verify_sampled(a: &PermutationArray, claimed_d: usize, pairs: u64, seed: u64) -> Result<DistanceReport> {
    let m = a.len();
    if m == 0 {
        return Err(Error::EmptyArray);
    }
    if m == 1 {
        let mut r = DistanceReport::singleton(a.n(), DistanceMode::Sampled, Some(claimed_d));
        r.sample_seed = Some(seed);
        return Ok(r);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample: Vec<(usize, usize)> = (0..pairs)
        .map(|_| {
            let i = rng.random_range(0..m);
            let mut j = rng.random_range(0..m - 1);
            if j >= i {
                j += 1;
            }
            (i.min(j), i.max(j))
        })
        .collect();
    let (d, i, j) = sample
        .par_iter()
        .map(|&(i, j)| (hd(a.row(i), a.row(j)), i, j))
        .min()
        .expect("non-empty sample");
    Ok(DistanceReport {
        mode: DistanceMode::Sampled,
        min_distance_found: d,
        exact: false,
        pairs_checked: pairs,
        witness_pair: Some((i, j)),
        sample_seed: Some(seed),
        claimed_d: Some(claimed_d),
    })
}

fn verify_coset(
    a: &PermutationArray,
    claimed_d: usize,
    group: &PermutationArray,
    reps: &[Permutation],
    full_intra: bool,
) -> Result<DistanceReport> {
    let gs = group.len();
    if gs == 0 || reps.is_empty() {
        return Err(Error::EmptyArray);
    }
    if a.n() != group.n() {
        return Err(Error::LengthMismatch { left: a.n(), right: group.n() });
    }
    if a.len() != gs * reps.len() {
        return Err(Error::CosetStructure(format!(
            "{} rows, expected {} cosets of {}",
            a.len(),
            reps.len(),
            gs
        )));
    }
    let gidx = group.index();
    for (b, rep) in reps.iter().enumerate() {
        let inv = inverse_slice(rep.as_slice());
        let bad = (0..gs).into_par_iter().find_first(|&k| !gidx.contains(&compose_slices(&inv, a.row(b * gs + k))));
        if let Some(k) = bad {
            return Err(Error::CosetStructure(format!("row {} is not in coset {b}", b * gs + k)));
        }
    }
    // row of block b equal to rep_b ∘ g
    let locate = |b: usize, g: &[Symbol]| -> usize {
        let want = compose_slices(reps[b].as_slice(), g);
        b * gs + (0..gs).find(|&k| a.row(b * gs + k) == want.as_slice()).expect("coset membership checked")
    };

    let (intra, intra_pair) = group_min_distance(group)?;
    let mut pairs_checked = gs as u64;
    if full_intra {
        let full = min_distance(group, None)?;
        pairs_checked += full.pairs_checked;
        if full.min_distance_found != intra {
            return Err(Error::NotAGroup(format!(
                "full scan gives {} but the group shortcut gives {intra}",
                full.min_distance_found
            )));
        }
    }
    let mut best: (usize, usize, usize) = match intra_pair {
        Some((i, j)) => {
            let (i, j) = (locate(0, group.row(i)), locate(0, group.row(j)));
            (intra, i.min(j), i.max(j))
        }
        None => (a.n(), usize::MAX, usize::MAX),
    };
    let id = group
        .rows()
        .position(|r| r.iter().enumerate().all(|(i, &s)| i == s as usize))
        .expect("checked by group_min_distance");
    for x in 0..reps.len() {
        for y in x + 1..reps.len() {
            let (d, k) = coset_scan(group, reps[x].as_slice(), reps[y].as_slice())?;
            pairs_checked += gs as u64;
            if d < best.0 {
                best = (d, locate(x, group.row(k)), locate(y, group.row(id)));
            }
        }
    }
    Ok(DistanceReport {
        mode: DistanceMode::CosetShortcut,
        min_distance_found: best.0,
        exact: true,
        pairs_checked,
        witness_pair: (best.1 != usize::MAX).then_some((best.1, best.2)),
        sample_seed: None,
        claimed_d: Some(claimed_d),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(n: usize, rows: &[&[usize]]) -> PermutationArray {
        PermutationArray::new(n, rows.iter().map(|r| Permutation::from_slice(r).unwrap())).unwrap()
    }

    #[test]
    fn singleton_reports_n() {
        let a = arr(3, &[&[0, 1, 2]]);
        assert_eq!(min_distance(&a, None).unwrap().min_distance_found, 3);
    }

    #[test]
    fn threshold_stops_at_first_violation() {
        let a = arr(3, &[&[0, 1, 2], &[1, 2, 0], &[0, 2, 1], &[2, 0, 1]]);
        let exact = min_distance(&a, None).unwrap();
        assert_eq!(exact.min_distance_found, 2);
        assert_eq!(exact.witness_pair, Some((0, 2)));
        let t = min_distance(&a, Some(3)).unwrap();
        assert!(!t.passed());
        assert_eq!(t.witness_pair, Some((0, 2)));
        assert_eq!(t.pairs_checked, 2);
        assert!(min_distance(&a, Some(2)).unwrap().passed());
    }

    #[test]
    fn pair_counting() {
        assert_eq!(pairs_before(5, 0), 0);
        assert_eq!(pairs_before(5, 1), 4);
        assert_eq!(pairs_before(5, 2), 7);
        assert_eq!(pairs_before(5, 4), 10);
    }

    #[test]
    fn trivial_group_coset_distance() {
        let g = arr(3, &[&[0, 1, 2]]);
        let id = Permutation::identity(3);
        let b = Permutation::from_slice(&[1, 0, 2]).unwrap();
        assert_eq!(coset_min_distance(&g, &id, &b).unwrap(), 2);
        assert_eq!(cross_distance(&g, &arr(3, &[&[1, 0, 2]])).unwrap(), 2);
    }
}
