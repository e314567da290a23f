//! Latin squares, MOLS over GF(q), and their permutation-array form.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::make_field;
use crate::perm::{PermutationArray, Symbol};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatinSquare {
    m: usize,
    cells: Vec<Symbol>,
}

impl LatinSquare {
    pub fn new(m: usize, cells: Vec<Symbol>) -> Result<Self> {
        if cells.len() != m * m {
            return Err(Error::NotLatin(format!("{} cells for order {m}", cells.len())));
        }
        let sq = LatinSquare { m, cells };
        for i in 0..m {
            let mut row = vec![false; m];
            let mut col = vec![false; m];
            for j in 0..m {
                for (seen, s, what) in [(&mut row, sq.get(i, j), "row"), (&mut col, sq.get(j, i), "column")] {
                    if s >= m {
                        return Err(Error::NotLatin(format!("symbol {s} out of range")));
                    }
                    if std::mem::replace(&mut seen[s], true) {
                        return Err(Error::NotLatin(format!("{what} {i} repeats symbol {s}")));
                    }
                }
            }
        }
        Ok(sq)
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.m + j] as usize
    }

    pub fn row(&self, i: usize) -> &[Symbol] {
        &self.cells[i * self.m..(i + 1) * self.m]
    }

    /// L[i][j] = i + j mod m.
    pub fn cyclic(m: usize) -> Self {
        let cells = (0..m).flat_map(|i| (0..m).map(move |j| ((i + j) % m) as Symbol)).collect();
        LatinSquare { m, cells }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MolsSet {
    m: usize,
    squares: Vec<LatinSquare>,
}

impl MolsSet {
    pub fn new(m: usize, squares: Vec<LatinSquare>) -> Result<Self> {
        for s in &squares {
            if s.order() != m {
                return Err(Error::NotLatin(format!("order {} in a set of order {m}", s.order())));
            }
        }
        for a in 0..squares.len() {
            for b in a + 1..squares.len() {
                if !orthogonal(&squares[a], &squares[b]) {
                    return Err(Error::NotOrthogonal(a, b));
                }
            }
        }
        Ok(MolsSet { m, squares })
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn squares(&self) -> &[LatinSquare] {
        &self.squares
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }
}

pub fn orthogonal(a: &LatinSquare, b: &LatinSquare) -> bool {
    let m = a.order();
    let pairs: HashSet<(usize, usize)> =
        (0..m).flat_map(|i| (0..m).map(move |j| (a.get(i, j), b.get(i, j)))).collect();
    pairs.len() == m * m
}

/// L_a[i][j] = a·i + j over GF(q) for a = 1..q−1.
pub fn mols_prime_power(q: usize) -> Result<MolsSet> {
    let f = make_field(q)?;
    let squares = (1..q as Symbol)
        .map(|a| {
            let cells = f.elements().flat_map(|i| f.elements().map(move |j| (i, j)));
            let cells = cells.map(|(i, j)| f.add(f.mul(a, i), j)).collect();
            LatinSquare { m: q, cells }
        })
        .collect();
    Ok(MolsSet { m: q, squares })
}

/// Row k of the result holds, in column j, the row index i with L[i][j] = k.
pub fn latin_to_pa(l: &LatinSquare) -> PermutationArray {
    let m = l.order();
    let mut data = vec![0; m * m];
    for i in 0..m {
        for j in 0..m {
            data[l.get(i, j) * m + j] = i as Symbol;
        }
    }
    PermutationArray::from_flat_unchecked(m, data)
}
