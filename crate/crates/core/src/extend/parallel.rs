use crate::error::{Error, Result};
use crate::perm::{PermutationArray, Symbol, MAX_N};
use crate::verify::min_distance;

use super::{PartitionSystem2, Role2};

/// SHIFT(γ, t): the sequence n, n+1, …, n+r−1 rotated left by t (mod r).
pub fn shift(n: usize, r: usize, t: usize) -> Vec<Symbol> {
    (0..r).map(|i| (n + (i + t) % r) as Symbol).collect()
}

/// Extends 2r blocks by r new symbols at once.
///
/// Block l < r: the first r symbols are replaced by SHIFT(γ, l) and re-appended in their
/// original order. Block r + m: SHIFT(γ, m) is appended.
pub fn parallel_rudimentary(blocks: &[PermutationArray], r: usize, d: usize) -> Result<PermutationArray> {
    if r == 0 || blocks.len() != 2 * r {
        return Err(Error::Precondition(format!("{} blocks given, 2r = {} required", blocks.len(), 2 * r)));
    }
    let n = blocks[0].n();
    if let Some(b) = blocks.iter().find(|b| b.n() != n) {
        return Err(Error::LengthMismatch { left: n, right: b.n() });
    }
    if r > n {
        return Err(Error::Precondition(format!("r = {r} exceeds n = {n}")));
    }
    if n + r > MAX_N {
        return Err(Error::TooManySymbols(n + r));
    }
    for (i, b) in blocks.iter().enumerate() {
        if b.is_empty() {
            continue;
        }
        let rep = min_distance(b, Some(d))?;
        if !rep.passed() {
            return Err(Error::Precondition(format!(
                "block {i} has distance {} < {d}",
                rep.min_distance_found
            )));
        }
    }
    let union = PermutationArray::concat(n, blocks)?;
    if !union.is_empty() {
        let rep = min_distance(&union, Some(d.saturating_sub(r)))?;
        if !rep.passed() {
            return Err(Error::Precondition(format!(
                "union has distance {} < {}",
                rep.min_distance_found,
                d.saturating_sub(r)
            )));
        }
    }

    let mut data = Vec::with_capacity(union.len() * (n + r));
    for (l, b) in blocks.iter().enumerate() {
        for row in b.rows() {
            if l < r {
                data.extend(shift(n, r, l));
                data.extend_from_slice(&row[r..]);
                data.extend_from_slice(&row[..r]);
            } else {
                data.extend_from_slice(row);
                data.extend(shift(n, r, l - r));
            }
        }
    }
    Ok(PermutationArray::from_flat_unchecked(n + r, data))
}

/// 2-ext(Π): each 2-covered row is extended by its designated pair (p, r) with
/// σ'(p) = n, σ'(n) = σ(p), σ'(r) = n+1, σ'(n+1) = σ(r).
pub fn parallel_2ext(sys: &PartitionSystem2) -> Result<PermutationArray> {
    sys.validate().into_result()?;
    let n = sys.n();
    let (a, b) = (n as Symbol, (n + 1) as Symbol);
    let mut data = Vec::new();
    for ((block, role), cov) in sys.blocks().iter().zip(sys.roles()).zip(sys.coverage()) {
        match role {
            Role2::Extend { .. } => {
                for (i, p, r) in cov.designated {
                    let row = block.row(i);
                    let start = data.len();
                    data.extend_from_slice(row);
                    data.push(row[p]);
                    data.push(row[r]);
                    data[start + p] = a;
                    data[start + r] = b;
                }
            }
            Role2::AppendForward | Role2::AppendReversed => {
                let tail = if *role == Role2::AppendForward { [a, b] } else { [b, a] };
                for row in block.rows() {
                    data.extend_from_slice(row);
                    data.extend_from_slice(&tail);
                }
            }
        }
    }
    Ok(PermutationArray::from_flat_unchecked(n + 2, data))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_rotates_left() {
        assert_eq!(shift(9, 3, 0), vec![9, 10, 11]);
        assert_eq!(shift(9, 3, 1), vec![10, 11, 9]);
        assert_eq!(shift(9, 3, 4), vec![10, 11, 9]);
    }
}
