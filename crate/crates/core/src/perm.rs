//! Permutations on Z_n and permutation arrays.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::verify::{min_distance, DistanceReport};

/// Symbol type; wide enough for every n up to [`MAX_N`].
pub type Symbol = u16;

pub const MAX_N: usize = 1024;

/// A bijection of Z_n stored as its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<Symbol>);

impl Permutation {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        check_bijective(&symbols)?;
        Ok(Permutation(symbols))
    }

    pub fn from_slice(symbols: &[usize]) -> Result<Self> {
        if symbols.len() > MAX_N {
            return Err(Error::TooManySymbols(symbols.len()));
        }
        let v = symbols
            .iter()
            .map(|&s| {
                Symbol::try_from(s).map_err(|_| Error::NotBijective {
                    n: symbols.len(),
                    reason: format!("symbol {s} out of range"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(v)
    }

    /// Caller guarantees bijectivity.
    pub(crate) fn from_vec_unchecked(symbols: Vec<Symbol>) -> Self {
        debug_assert!(check_bijective(&symbols).is_ok());
        Permutation(symbols)
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_N, "n = {n} exceeds {MAX_N}");
        Permutation((0..n as Symbol).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Symbol> {
        self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &s)| i == s as usize)
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|&(i, &s)| i == s as usize).count()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_row(f, &self.0)
    }
}

impl AsRef<[Symbol]> for Permutation {
    fn as_ref(&self) -> &[Symbol] {
        &self.0
    }
}

pub(crate) fn write_row(f: &mut impl fmt::Write, row: &[Symbol]) -> fmt::Result {
    for (i, s) in row.iter().enumerate() {
        if i > 0 {
            f.write_char(' ')?;
        }
        write!(f, "{s}")?;
    }
    Ok(())
}

pub(crate) fn check_bijective(symbols: &[Symbol]) -> Result<()> {
    let n = symbols.len();
    if n > MAX_N {
        return Err(Error::TooManySymbols(n));
    }
    let mut seen = vec![false; n];
    for (pos, &s) in symbols.iter().enumerate() {
        let s = s as usize;
        if s >= n {
            return Err(Error::NotBijective { n, reason: format!("symbol {s} at position {pos}") });
        }
        if std::mem::replace(&mut seen[s], true) {
            return Err(Error::NotBijective { n, reason: format!("symbol {s} repeated") });
        }
    }
    Ok(())
}

/// Number of positions where `a` and `b` differ. Works on any equal-length sequences.
pub fn hamming_distance<T: PartialEq>(a: &[T], b: &[T]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(hd(a, b))
}

#[inline]
pub(crate) fn hd<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Agreement count, abandoning the scan once it exceeds `cap`.
#[inline]
pub(crate) fn agreements_capped(a: &[Symbol], b: &[Symbol], cap: usize) -> usize {
    let mut agree = 0;
    for (ca, cb) in a.chunks(16).zip(b.chunks(16)) {
        agree += ca.iter().zip(cb).filter(|(x, y)| x == y).count();
        if agree > cap {
            break;
        }
    }
    agree
}

/// `compose(f, g)(x) = f(g(x))`.
pub fn compose(f: &Permutation, g: &Permutation) -> Result<Permutation> {
    if f.len() != g.len() {
        return Err(Error::LengthMismatch { left: f.len(), right: g.len() });
    }
    Ok(Permutation(compose_slices(&f.0, &g.0)))
}

pub(crate) fn compose_slices(f: &[Symbol], g: &[Symbol]) -> Vec<Symbol> {
    g.iter().map(|&x| f[x as usize]).collect()
}

pub fn inverse(f: &Permutation) -> Permutation {
    Permutation(inverse_slice(&f.0))
}

pub(crate) fn inverse_slice(f: &[Symbol]) -> Vec<Symbol> {
    let mut inv = vec![0; f.len()];
    for (i, &s) in f.iter().enumerate() {
        inv[s as usize] = i as Symbol;
    }
    inv
}

/// An ordered, duplicate-free list of permutations of a common length `n`.
///
/// Rows are stored contiguously; `row(i)` borrows a slice.
#[derive(Clone, PartialEq, Eq)]
pub struct PermutationArray {
    n: usize,
    data: Vec<Symbol>,
    certified: Option<usize>,
}

impl PermutationArray {
    pub fn new(n: usize, rows: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::TooManySymbols(n));
        }
        let mut data = Vec::new();
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch { left: n, right: row.len() });
            }
            data.extend_from_slice(&row.0);
        }
        Self::from_flat(n, data)
    }

    /// Builds from concatenated rows, checking bijectivity and duplicates.
    pub fn from_flat(n: usize, data: Vec<Symbol>) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::TooManySymbols(n));
        }
        if n == 0 {
            if !data.is_empty() {
                return Err(Error::LengthMismatch { left: 0, right: data.len() });
            }
            return Ok(PermutationArray { n, data, certified: None });
        }
        if data.len() % n != 0 {
            return Err(Error::LengthMismatch { left: n, right: data.len() % n });
        }
        for row in data.chunks_exact(n) {
            check_bijective(row)?;
        }
        let a = PermutationArray { n, data, certified: None };
        a.check_duplicates()?;
        Ok(a)
    }

    pub(crate) fn from_flat_unchecked(n: usize, data: Vec<Symbol>) -> Self {
        debug_assert!(n == 0 || data.len() % n == 0);
        PermutationArray { n, data, certified: None }
    }

    pub fn empty(n: usize) -> Self {
        PermutationArray { n, data: Vec::new(), certified: None }
    }

    fn check_duplicates(&self) -> Result<()> {
        let mut seen: HashMap<&[Symbol], usize> = HashMap::with_capacity(self.len());
        for (i, row) in self.rows().enumerate() {
            if let Some(&first) = seen.get(row) {
                return Err(Error::DuplicateRow { first, second: i });
            }
            seen.insert(row, i);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        if self.n == 0 {
            0
        } else {
            self.data.len() / self.n
        }
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn row(&self, i: usize) -> &[Symbol] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn permutation(&self, i: usize) -> Permutation {
        Permutation(self.row(i).to_vec())
    }

    pub fn rows(&self) -> std::slice::ChunksExact<'_, Symbol> {
        // chunks_exact panics on a zero chunk size
        self.data.chunks_exact(self.n.max(1))
    }

    pub fn as_flat(&self) -> &[Symbol] {
        &self.data
    }

    pub fn certified_min_distance(&self) -> Option<usize> {
        self.certified
    }

    /// Runs a full distance scan and records its result.
    pub fn certify(&mut self) -> Result<DistanceReport> {
        let report = min_distance(self, None)?;
        self.certified = Some(report.min_distance_found);
        Ok(report)
    }

    pub fn position(&self, row: &[Symbol]) -> Option<usize> {
        self.rows().position(|r| r == row)
    }

    pub fn index(&self) -> RowIndex<'_> {
        RowIndex { map: self.rows().enumerate().map(|(i, r)| (r, i)).collect() }
    }

    /// Concatenates arrays in order, rejecting duplicates across them.
    pub fn concat<'a>(n: usize, parts: impl IntoIterator<Item = &'a PermutationArray>) -> Result<Self> {
        let mut data = Vec::new();
        for p in parts {
            if p.n != n {
                return Err(Error::LengthMismatch { left: n, right: p.n });
            }
            data.extend_from_slice(&p.data);
        }
        let a = PermutationArray { n, data, certified: None };
        a.check_duplicates()?;
        Ok(a)
    }

    /// Left multiplication: every row g becomes `alpha ∘ g`.
    pub fn left_multiply(&self, alpha: &Permutation) -> Result<Self> {
        if alpha.len() != self.n {
            return Err(Error::LengthMismatch { left: self.n, right: alpha.len() });
        }
        let data = self.data.iter().map(|&x| alpha.0[x as usize]).collect();
        Ok(PermutationArray { n: self.n, data, certified: self.certified })
    }

    pub fn select(&self, indices: &[usize]) -> Self {
        let mut data = Vec::with_capacity(indices.len() * self.n);
        for &i in indices {
            data.extend_from_slice(self.row(i));
        }
        PermutationArray::from_flat_unchecked(self.n, data)
    }
}

impl fmt::Debug for PermutationArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermutationArray {{ n: {}, rows: {} }}", self.n, self.len())
    }
}

/// Hash index from row contents to row number.
pub struct RowIndex<'a> {
    map: HashMap<&'a [Symbol], usize>,
}

impl RowIndex<'_> {
    pub fn get(&self, row: &[Symbol]) -> Option<usize> {
        self.map.get(row).copied()
    }

    pub fn contains(&self, row: &[Symbol]) -> bool {
        self.map.contains_key(row)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_slice(v).unwrap()
    }

    #[test]
    fn distance_accepts_non_bijective_sequences() {
        assert_eq!(hamming_distance(&[0, 4, 1, 3, 2], &[2, 4, 3, 1, 2]).unwrap(), 3);
        assert_eq!(hamming_distance(&[0, 1], &[1, 0]).unwrap(), 2);
        assert!(hamming_distance(&[0, 1], &[0]).is_err());
    }

    #[test]
    fn compose_and_inverse() {
        assert_eq!(compose(&p(&[1, 0, 2]), &p(&[2, 1, 0])).unwrap(), p(&[2, 0, 1]));
        assert_eq!(inverse(&p(&[1, 2, 0])), p(&[2, 0, 1]));
        let f = p(&[3, 0, 4, 1, 2]);
        assert!(compose(&f, &inverse(&f)).unwrap().is_identity());
        assert!(compose(&f, &p(&[0, 1])).is_err());
    }

    #[test]
    fn rejects_bad_rows() {
        assert!(Permutation::from_slice(&[0, 0, 1]).is_err());
        assert!(Permutation::from_slice(&[0, 3, 1]).is_err());
        let e = PermutationArray::new(2, [p(&[0, 1]), p(&[1, 0]), p(&[0, 1])]).unwrap_err();
        assert!(matches!(e, Error::DuplicateRow { first: 0, second: 2 }));
    }

    #[test]
    fn capped_agreements_stop_early() {
        let a = [0u16, 1, 2, 3];
        assert_eq!(agreements_capped(&a, &a, 10), 4);
        assert!(agreements_capped(&a, &a, 1) > 1);
    }
}
