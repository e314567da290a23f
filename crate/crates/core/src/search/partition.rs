//! Choosing position partitions for a fixed list of blocks and symbol partition.

use crate::error::{Error, Result};
use crate::perm::PermutationArray;

use super::ilp::{Cmp, IlpModel};

fn block_n(blocks: &[PermutationArray]) -> Result<usize> {
    let n = blocks.first().map(|b| b.n()).ok_or(Error::EmptyArray)?;
    match blocks.iter().find(|b| b.n() != n) {
        Some(b) => Err(Error::LengthMismatch { left: n, right: b.n() }),
        None => Ok(n),
    }
}

fn symbol_mask(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &s in set.iter().filter(|&&s| s < n) {
        m[s] = true;
    }
    m
}

/// Q_1 = {0..k−1}, Q_2 = {k..2k−1}, …; symbols from k² on join Q_k.
pub fn default_symbol_sets(n: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    if k == 0 || k * k > n {
        return Err(Error::Precondition(format!("k = {k} needs 1 ≤ k² ≤ n = {n}")));
    }
    let mut q: Vec<Vec<usize>> = (0..k).map(|i| (i * k..(i + 1) * k).collect()).collect();
    q[k - 1].extend(k * k..n);
    Ok(q)
}

/// Z_n cut into k runs of consecutive positions, sizes differing by at most one.
pub fn contiguous_partition(n: usize, k: usize) -> Vec<Vec<usize>> {
    let k = k.max(1);
    (0..k).map(|i| (i * n / k..(i + 1) * n / k).collect()).collect()
}

/// Rows of all blocks having some Q_i symbol in some P_i position.
pub fn coverage_count(blocks: &[PermutationArray], p: &[Vec<usize>], q: &[Vec<usize>]) -> usize {
    blocks
        .iter()
        .zip(p.iter().zip(q))
        .map(|(b, (pi, qi))| {
            let mask = symbol_mask(b.n(), qi);
            b.rows().filter(|row| pi.iter().any(|&pos| pos < row.len() && mask[row[pos] as usize])).count()
        })
        .sum()
}

fn check_inputs(blocks: &[PermutationArray], q: &[Vec<usize>]) -> Result<usize> {
    let n = block_n(blocks)?;
    let k = blocks.len();
    if k > n {
        return Err(Error::Precondition(format!("{k} blocks but only {n} positions")));
    }
    if q.len() != k {
        return Err(Error::Precondition(format!("{} symbol sets for {k} blocks", q.len())));
    }
    if let Some(&s) = q.iter().flatten().find(|&&s| s >= n) {
        return Err(Error::Precondition(format!("symbol {s} outside Z_{n}")));
    }
    Ok(n)
}

/// Positions are taken in ascending order; each goes to the block gaining the most newly
/// covered rows, ties to the smallest index. `q` defaults to [`default_symbol_sets`].
pub fn greedy_partition(blocks: &[PermutationArray], q: Option<&[Vec<usize>]>) -> Result<Vec<Vec<usize>>> {
    let n = block_n(blocks)?;
    let default;
    let q = match q {
        Some(q) => q,
        None => {
            default = default_symbol_sets(n, blocks.len())?;
            &default
        }
    };
    check_inputs(blocks, q)?;
    let masks: Vec<Vec<bool>> = q.iter().map(|qi| symbol_mask(n, qi)).collect();
    let mut uncovered: Vec<Vec<usize>> = blocks.iter().map(|b| (0..b.len()).collect()).collect();
    let mut p = vec![Vec::new(); blocks.len()];
    for r in 0..n {
        let gains = blocks
            .iter()
            .zip(&uncovered)
            .zip(&masks)
            .map(|((b, u), m)| u.iter().filter(|&&j| m[b.row(j)[r] as usize]).count());
        let (best, _) = gains.enumerate().fold((0, 0), |(bi, bg), (i, g)| if g > bg { (i, g) } else { (bi, bg) });
        let (b, m) = (&blocks[best], &masks[best]);
        uncovered[best].retain(|&j| !m[b.row(j)[r] as usize]);
        p[best].push(r);
    }
    debug_assert!(is_partition(&p, n));
    Ok(p)
}

pub fn is_partition(p: &[Vec<usize>], n: usize) -> bool {
    let mut seen = vec![false; n];
    for &x in p.iter().flatten() {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    seen.into_iter().all(|s| s)
}

pub fn b_var(i: usize, p: usize) -> String {
    format!("b_{i}_{p}")
}

pub fn c_var(i: usize, j: usize) -> String {
    format!("c_{i}_{j}")
}

/// Variables b_i_p (position p assigned to block i) and c_i_j (row j of block i covered).
///
/// Row j of block i may count as covered only if some position assigned to block i holds a
/// Q_i symbol: c_i_j ≤ Σ_p [σ_j(p) ∈ Q_i]·b_i_p.
pub fn ilp_partition_model(blocks: &[PermutationArray], q: &[Vec<usize>]) -> Result<IlpModel> {
    let n = check_inputs(blocks, q)?;
    let k = blocks.len();
    let mut m = IlpModel::new();
    let b: Vec<Vec<usize>> = (0..k).map(|i| (0..n).map(|p| m.add_var(b_var(i, p))).collect::<Result<_>>()).collect::<Result<_>>()?;
    let c: Vec<Vec<usize>> =
        blocks.iter().enumerate().map(|(i, blk)| (0..blk.len()).map(|j| m.add_var(c_var(i, j))).collect::<Result<_>>()).collect::<Result<_>>()?;
    m.set_objective(c.iter().flatten().map(|&v| (v, 1)).collect())?;
    for p in 0..n {
        m.add_constraint(format!("assign_{p}"), (0..k).map(|i| (b[i][p], 1)).collect(), Cmp::Eq, 1)?;
    }
    for (i, blk) in blocks.iter().enumerate() {
        let mask = symbol_mask(n, &q[i]);
        for (j, row) in blk.rows().enumerate() {
            let mut terms: Vec<(usize, i64)> = (0..n).filter(|&p| mask[row[p] as usize]).map(|p| (b[i][p], 1)).collect();
            terms.push((c[i][j], -1));
            m.add_constraint(format!("cover_{i}_{j}"), terms, Cmp::Ge, 0)?;
        }
    }
    m.add_constraint("total", b.iter().flatten().map(|&v| (v, 1)).collect(), Cmp::Eq, n as i64)?;
    Ok(m)
}

/// Reads the position partition back out of a solved partition model.
pub fn decode_partition(model: &IlpModel, values: &[bool], k: usize, n: usize) -> Result<Vec<Vec<usize>>> {
    let mut p = vec![Vec::new(); k];
    for (i, set) in p.iter_mut().enumerate() {
        for pos in 0..n {
            let v = model.var(&b_var(i, pos)).ok_or_else(|| Error::Model(format!("missing {}", b_var(i, pos))))?;
            if values[v] {
                set.push(pos);
            }
        }
    }
    if !is_partition(&p, n) {
        return Err(Error::Model("solution does not assign each position exactly once".into()));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_sets() {
        assert_eq!(default_symbol_sets(5, 2).unwrap(), vec![vec![0, 1], vec![2, 3, 4]]);
        assert!(default_symbol_sets(3, 2).is_err());
    }

    #[test]
    fn contiguous() {
        assert_eq!(contiguous_partition(5, 2), vec![vec![0, 1], vec![2, 3, 4]]);
    }
}
