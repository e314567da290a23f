use crate::error::{Error, Result};
use crate::perm::{PermutationArray, Symbol};
use crate::verify::cross_scan;

use super::{PartitionSystem, Role};

/// σ'(p) = n, σ'(n) = σ(p), all other positions unchanged.
pub fn extend_by_position(row: &[Symbol], p: usize) -> Vec<Symbol> {
    let mut out = Vec::with_capacity(row.len() + 1);
    out.extend_from_slice(row);
    out.push(row[p]);
    out[p] = row.len() as Symbol;
    out
}

/// ext(Π): covered rows extended by their designated position, append-block rows with
/// n appended; block order, then source row order.
pub fn simple_extend(sys: &PartitionSystem) -> Result<PermutationArray> {
    sys.validate().into_result()?;
    Ok(extend_unchecked(sys))
}

pub(crate) fn extend_unchecked(sys: &PartitionSystem) -> PermutationArray {
    let n = sys.n();
    let coverage = sys.coverage();
    let mut data = Vec::new();
    for ((block, role), cov) in sys.blocks().iter().zip(sys.roles()).zip(&coverage.blocks) {
        match role {
            Role::Extend { .. } => {
                for &(i, p) in &cov.designated {
                    data.extend(extend_by_position(block.row(i), p));
                }
            }
            Role::Append => {
                for row in block.rows() {
                    data.extend_from_slice(row);
                    data.push(n as Symbol);
                }
            }
        }
    }
    PermutationArray::from_flat_unchecked(n + 1, data)
}

#[derive(Clone, Debug)]
pub struct SequentialOutput {
    /// ext(Π_i) for each input system, on Z_{n+1}.
    pub stage_one: Vec<PermutationArray>,
    /// The stage-two system Ψ built from the stage-one arrays.
    pub stage_two: PartitionSystem,
    /// ext(Ψ) on Z_{n+2}.
    pub output: PermutationArray,
}

/// Extends each system, then extends the resulting arrays once more as a system on
/// Z_{n+1} with the supplied outer roles (one per system).
pub fn sequential_extend(systems: &[PartitionSystem], outer: Vec<Role>) -> Result<SequentialOutput> {
    let first = systems.first().ok_or_else(|| Error::Precondition("no systems".into()))?;
    let (n, d) = (first.n(), first.d());
    if let Some(s) = systems.iter().find(|s| s.n() != n || s.d() != d) {
        return Err(Error::Precondition(format!(
            "systems disagree: (n, d) = ({n}, {d}) vs ({}, {})",
            s.n(),
            s.d()
        )));
    }
    if outer.len() != systems.len() {
        return Err(Error::Precondition(format!("{} outer roles for {} systems", outer.len(), systems.len())));
    }

    let unions = systems
        .iter()
        .map(|s| PermutationArray::concat(n, s.blocks()))
        .collect::<Result<Vec<_>>>()?;
    for x in 0..unions.len() {
        for y in x + 1..unions.len() {
            if unions[x].is_empty() || unions[y].is_empty() {
                continue;
            }
            let (found, (i, j)) = cross_scan(&unions[x], &unions[y], Some(d.saturating_sub(1)))?;
            if found + 1 < d {
                return Err(Error::Precondition(format!(
                    "systems {x} and {y} are at distance {found} < {} (rows {i} and {j})",
                    d - 1
                )));
            }
        }
    }

    let stage_one = systems.iter().map(simple_extend).collect::<Result<Vec<_>>>()?;
    let stage_two = PartitionSystem::new(n + 1, d, stage_one.clone(), outer)?;
    let output = simple_extend(&stage_two)?;
    Ok(SequentialOutput { stage_one, stage_two, output })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extension_moves_symbol_to_end() {
        assert_eq!(extend_by_position(&[2, 3, 0, 1], 2), vec![2, 3, 4, 1, 0]);
    }
}
