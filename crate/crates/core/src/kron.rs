//! Modified Kronecker products of permutation arrays and the extension bounds built on them.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::extend::{simple_extend, CosetStructure, PartitionSystem, Role};
use crate::group::{agl1, check_group, cyclic_coset_decomposition};
use crate::latin::{latin_to_pa, MolsSet};
use crate::perm::{compose_slices, inverse_slice, Permutation, PermutationArray, Symbol, MAX_N};
use crate::verify::min_distance;

/// Systems above this many rows are validated through their coset structure when one is found.
const PAIRWISE_ROWS: usize = 20_000;

fn kron_row(alpha: &[Symbol], beta: &[Symbol], m: usize, out: &mut Vec<Symbol>) {
    for &a in alpha {
        let base = m as Symbol * a;
        out.extend(beta.iter().map(|&b| base + b));
    }
}

/// Row (α, β) is the concatenation over j of m·α(j) + β(0..m); X rows outer, Y rows inner.
pub fn kronecker(x: &PermutationArray, y: &PermutationArray) -> Result<PermutationArray> {
    let (l, m) = (x.n(), y.n());
    if l * m > MAX_N {
        return Err(Error::TooManySymbols(l * m));
    }
    let mut data = Vec::with_capacity(x.len() * y.len() * l * m);
    for a in x.rows() {
        for b in y.rows() {
            kron_row(a, b, m, &mut data);
        }
    }
    Ok(PermutationArray::from_flat_unchecked(l * m, data))
}

fn check_pairing(a_blocks: &[PermutationArray], b_blocks: &[PermutationArray]) -> Result<(usize, usize)> {
    if a_blocks.len() != b_blocks.len() || a_blocks.is_empty() {
        return Err(Error::Precondition(format!(
            "{} left blocks vs {} right blocks",
            a_blocks.len(),
            b_blocks.len()
        )));
    }
    let (l, m) = (a_blocks[0].n(), b_blocks[0].n());
    for b in a_blocks {
        if b.n() != l {
            return Err(Error::LengthMismatch { left: l, right: b.n() });
        }
    }
    for b in b_blocks {
        if b.n() != m {
            return Err(Error::LengthMismatch { left: m, right: b.n() });
        }
    }
    Ok((l, m))
}

/// M_i = A^(i) ⊗ B^(i) for each i.
pub fn kron_blocks(a_blocks: &[PermutationArray], b_blocks: &[PermutationArray]) -> Result<Vec<PermutationArray>> {
    check_pairing(a_blocks, b_blocks)?;
    a_blocks.iter().zip(b_blocks).map(|(a, b)| kronecker(a, b)).collect()
}

/// The union of the blockwise products.
pub fn kron_blockwise(a_blocks: &[PermutationArray], b_blocks: &[PermutationArray]) -> Result<PermutationArray> {
    let blocks = kron_blocks(a_blocks, b_blocks)?;
    PermutationArray::concat(blocks[0].n(), &blocks)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaOneCheck {
    pub l: usize,
    pub m: usize,
    /// l − hd(∪A)
    pub a: usize,
    /// m − hd(∪B)
    pub b: usize,
    pub predicted: usize,
    pub measured: usize,
}

impl LemmaOneCheck {
    pub fn holds(&self) -> bool {
        self.predicted == self.measured
    }
}

/// Measures both input unions and the blockwise product, comparing against lm − ab.
pub fn lemma_one_check(a_blocks: &[PermutationArray], b_blocks: &[PermutationArray]) -> Result<LemmaOneCheck> {
    let (l, m) = check_pairing(a_blocks, b_blocks)?;
    let ua = PermutationArray::concat(l, a_blocks)?;
    let ub = PermutationArray::concat(m, b_blocks)?;
    let a = l - min_distance(&ua, None)?.min_distance_found;
    let b = m - min_distance(&ub, None)?.min_distance_found;
    let measured = min_distance(&kron_blockwise(a_blocks, b_blocks)?, None)?.min_distance_found;
    Ok(LemmaOneCheck { l, m, a, b, predicted: l * m - a * b, measured })
}

#[derive(Clone, Debug)]
pub struct KronExtension {
    pub system: PartitionSystem,
    /// k·l·m rows on lm + 1 symbols.
    pub array: PermutationArray,
    pub bound: usize,
}

/// The system with M_i = A^(i) ⊗ B^(i), P_i = {i + jm : j < l} and Q_i = {im, …, im + m − 1}
/// (0-based i). Positions and symbols left over when k < m or k < l join the last sets.
pub fn kron_extension_system(a_blocks: &[PermutationArray], b_blocks: &[PermutationArray]) -> Result<PartitionSystem> {
    let (l, m) = check_pairing(a_blocks, b_blocks)?;
    let k = a_blocks.len();
    let n = l * m;
    if n + 1 > MAX_N {
        return Err(Error::TooManySymbols(n + 1));
    }
    if k > l || k > m {
        return Err(Error::Precondition(format!("k = {k} blocks exceed l = {l} or m = {m}")));
    }
    let mut roles: Vec<Role> = (0..k)
        .map(|i| Role::Extend {
            positions: (0..l).map(|j| i + j * m).collect(),
            symbols: (i * m..(i + 1) * m).collect(),
        })
        .collect();
    if let Some(Role::Extend { positions, symbols }) = roles.last_mut() {
        positions.extend((0..n).filter(|p| p % m >= k));
        positions.sort_unstable();
        symbols.extend(k * m..n);
    }
    let blocks = kron_blocks(a_blocks, b_blocks)?;
    let total: usize = blocks.iter().map(|b| b.len()).sum();
    let mut sys = PartitionSystem::new(n, n, blocks, roles)?;
    if total > PAIRWISE_ROWS {
        if let (Some((ga, ra)), Some((gb, rb))) = (coset_form(a_blocks), coset_form(b_blocks)) {
            let group = kronecker(&ga, &gb)?;
            let reps = ra
                .iter()
                .zip(&rb)
                .map(|(x, y)| {
                    let mut row = Vec::with_capacity(n);
                    kron_row(x.as_slice(), y.as_slice(), m, &mut row);
                    Permutation::from_vec_unchecked(row)
                })
                .collect();
            sys = sys.with_cosets(CosetStructure { group: Arc::new(group), reps });
        }
    }
    Ok(sys)
}

/// `Some((H, reps))` when the first block is a group H and every block is a left coset of it.
fn coset_form(blocks: &[PermutationArray]) -> Option<(PermutationArray, Vec<Permutation>)> {
    let h = blocks.first()?;
    if (h.len() as u64).pow(2) > 4_000_000 || check_group(h, 0, 0).is_err() {
        return None;
    }
    let idx = h.index();
    let mut reps = Vec::with_capacity(blocks.len());
    for b in blocks {
        if b.len() != h.len() || b.is_empty() {
            return None;
        }
        let rep = b.row(0);
        let inv = inverse_slice(rep);
        if !b.rows().all(|row| idx.contains(&compose_slices(&inv, row))) {
            return None;
        }
        reps.push(Permutation::from_vec_unchecked(rep.to_vec()));
    }
    Some((h.clone(), reps))
}

/// Extends the blockwise product by one symbol; every row must be covered.
pub fn kron_extend_bound(a_blocks: &[PermutationArray], b_blocks: &[PermutationArray]) -> Result<KronExtension> {
    let system = kron_extension_system(a_blocks, b_blocks)?;
    let cov = system.coverage();
    let total: usize = system.blocks().iter().map(|b| b.len()).sum();
    if cov.total() != total {
        return Err(Error::CoverageShortfall { covered: cov.total(), total });
    }
    let array = simple_extend(&system)?;
    let bound = array.len();
    Ok(KronExtension { system, array, bound })
}

/// The AGL route: the first min(p, q) − 1 cyclic blocks of AGL(1,p) and AGL(1,q).
pub fn agl_kron_bound(p: usize, q: usize) -> Result<KronExtension> {
    let k = p.min(q) - 1;
    let a = cyclic_coset_decomposition(&agl1(p)?)?;
    let b = cyclic_coset_decomposition(&agl1(q)?)?;
    kron_extend_bound(&a[..k], &b[..k])
}

/// The MOLS route: k = min(|mols_n|, |mols_m|) squares from each set, turned into blocks.
pub fn kron_mols_bound(mols_n: &MolsSet, mols_m: &MolsSet) -> Result<KronExtension> {
    let k = mols_n.len().min(mols_m.len());
    if k == 0 {
        return Err(Error::Precondition("empty MOLS set".into()));
    }
    let a: Vec<_> = mols_n.squares()[..k].iter().map(latin_to_pa).collect();
    let b: Vec<_> = mols_m.squares()[..k].iter().map(latin_to_pa).collect();
    kron_extend_bound(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_product() {
        let x = PermutationArray::new(2, [Permutation::identity(2), Permutation::from_slice(&[1, 0]).unwrap()]).unwrap();
        let k = kronecker(&x, &x).unwrap();
        assert_eq!(k.len(), 4);
        assert_eq!(k.row(1), &[1, 0, 3, 2]);
        assert_eq!(k.row(2), &[2, 3, 0, 1]);
    }
}
