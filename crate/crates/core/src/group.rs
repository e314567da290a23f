//! AGL(1,q), PGL(2,q) and PΓL(2,q) as permutation arrays, with their block decompositions.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{make_field, Elem, FieldTable};
use crate::perm::{compose_slices, hd, inverse_slice, Permutation, PermutationArray, Symbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Agl1,
    Pgl2,
    Pgammal2,
    Cyclic,
    Explicit,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Agl1 => "agl1",
            Family::Pgl2 => "pgl2",
            Family::Pgammal2 => "pgammal2",
            Family::Cyclic => "cyclic",
            Family::Explicit => "explicit",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "agl1" => Family::Agl1,
            "pgl2" => Family::Pgl2,
            "pgammal2" => Family::Pgammal2,
            "cyclic" => Family::Cyclic,
            "explicit" => Family::Explicit,
            _ => return Err(Error::Precondition(format!("unknown group family {s:?}"))),
        })
    }
}

/// Parameters of the map generating a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementLabel {
    /// x ↦ ax + b
    Affine { a: Elem, b: Elem },
    /// x ↦ (ax + b)/(cx + d)
    Projective { a: Elem, b: Elem, c: Elem, d: Elem },
    /// x ↦ (a x^σ + b)/(c x^σ + d) with σ = p^j
    Semilinear { a: Elem, b: Elem, c: Elem, d: Elem, j: usize },
}

#[derive(Clone, Debug)]
pub struct GroupPa {
    base: PermutationArray,
    family: Family,
    q: usize,
    labels: Option<Vec<ElementLabel>>,
}

impl GroupPa {
    /// Wraps rows that are claimed to form a group; run [`GroupPa::check_closure`] to confirm.
    pub fn explicit(base: PermutationArray) -> Self {
        GroupPa { base, family: Family::Explicit, q: 0, labels: None }
    }

    /// Re-attaches family metadata, e.g. after reading a group back from a file.
    pub fn with_family(base: PermutationArray, family: Family, q: usize) -> Self {
        GroupPa { base, family, q, labels: None }
    }

    pub fn base(&self) -> &PermutationArray {
        &self.base
    }

    pub fn into_base(self) -> PermutationArray {
        self.base
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn labels(&self) -> Option<&[ElementLabel]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    /// Identity present, every inverse present, and closure under composition: exhaustive
    /// when |G|² ≤ 4·10^6, otherwise on `samples` random pairs drawn under `seed`.
    pub fn check_closure(&self, samples: usize, seed: u64) -> Result<()> {
        check_group(&self.base, samples, seed)
    }
}

/// Group test on raw rows; see [`GroupPa::check_closure`].
pub fn check_group(g: &PermutationArray, samples: usize, seed: u64) -> Result<()> {
    let m = g.len();
    if m == 0 {
        return Err(Error::NotAGroup("empty".into()));
    }
    let idx = g.index();
    let id: Vec<Symbol> = (0..g.n() as Symbol).collect();
    if !idx.contains(&id) {
        return Err(Error::NotAGroup("identity missing".into()));
    }
    for (i, r) in g.rows().enumerate() {
        if !idx.contains(&inverse_slice(r)) {
            return Err(Error::NotAGroup(format!("inverse of row {i} missing")));
        }
    }
    let check = |i: usize, j: usize| -> Result<()> {
        if idx.contains(&compose_slices(g.row(i), g.row(j))) {
            Ok(())
        } else {
            Err(Error::NotAGroup(format!("row {i} ∘ row {j} missing")))
        }
    };
    if (m as u64) * (m as u64) <= 4_000_000 {
        for i in 0..m {
            for j in 0..m {
                check(i, j)?;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            check(rng.random_range(0..m), rng.random_range(0..m))?;
        }
    }
    Ok(())
}

fn field_for(q: usize) -> Result<FieldTable> {
    make_field(q)
}

/// x ↦ ax + b for a ≠ 0, ordered by a (as an encoded integer) then b.
pub fn agl1(q: usize) -> Result<GroupPa> {
    let f = field_for(q)?;
    let mut data = Vec::with_capacity(q * q * (q - 1));
    let mut labels = Vec::with_capacity(q * (q - 1));
    for a in 1..q as Elem {
        for b in 0..q as Elem {
            data.extend(f.elements().map(|x| f.add(f.mul(a, x), b)));
            labels.push(ElementLabel::Affine { a, b });
        }
    }
    Ok(GroupPa {
        base: PermutationArray::from_flat_unchecked(q, data),
        family: Family::Agl1,
        q,
        labels: Some(labels),
    })
}

/// Normalized matrices (first nonzero entry 1) with nonzero determinant, in
/// lexicographic order of (a, b, c, d).
fn pgl_matrices(f: &FieldTable) -> Vec<[Elem; 4]> {
    let q = f.q() as Elem;
    let mut out = Vec::new();
    for c in 1..q {
        for d in 0..q {
            out.push([0, 1, c, d]);
        }
    }
    for b in 0..q {
        for c in 0..q {
            let bc = f.mul(b, c);
            for d in 0..q {
                if d != bc {
                    out.push([1, b, c, d]);
                }
            }
        }
    }
    out
}

/// Image of x under the Möbius map; `q` stands for ∞.
fn mobius(f: &FieldTable, [a, b, c, d]: [Elem; 4], x: Elem) -> Elem {
    let inf = f.q() as Elem;
    if x == inf {
        return if c == 0 { inf } else { f.div(a, c).expect("c ≠ 0") };
    }
    let den = f.add(f.mul(c, x), d);
    if den == 0 {
        return inf;
    }
    f.div(f.add(f.mul(a, x), b), den).expect("den ≠ 0")
}

/// x ↦ (ax+b)/(cx+d) on GF(q) ∪ {∞}, ∞ encoded as symbol q at position q.
pub fn pgl2(q: usize) -> Result<GroupPa> {
    let f = field_for(q)?;
    semilinear(&f, 1, Family::Pgl2)
}

/// PGL(2,q) composed with the field automorphisms x ↦ x^(p^j), j = 0..k−1; rows ordered by j
/// then by matrix.
pub fn pgammal2(q: usize) -> Result<GroupPa> {
    let f = field_for(q)?;
    semilinear(&f, f.k(), Family::Pgammal2)
}

fn semilinear(f: &FieldTable, autos: usize, family: Family) -> Result<GroupPa> {
    let q = f.q();
    let n = q + 1;
    let mats = pgl_matrices(f);
    let mut data = Vec::with_capacity(mats.len() * autos * n);
    let mut labels = Vec::with_capacity(mats.len() * autos);
    for j in 0..autos {
        let frob: Vec<Elem> = (0..=q as Elem).map(|x| if x as usize == q { x } else { f.frobenius(x, j) }).collect();
        for &m in &mats {
            data.extend(frob.iter().map(|&x| mobius(f, m, x)));
            let [a, b, c, d] = m;
            labels.push(if family == Family::Pgl2 {
                ElementLabel::Projective { a, b, c, d }
            } else {
                ElementLabel::Semilinear { a, b, c, d, j }
            });
        }
    }
    Ok(GroupPa {
        base: PermutationArray::from_flat_unchecked(n, data),
        family,
        q,
        labels: Some(labels),
    })
}

/// The q−1 Latin-square blocks C_a = {x ↦ ax + b : b} of AGL(1,q), in the group's a order.
pub fn cyclic_coset_decomposition(g: &GroupPa) -> Result<Vec<PermutationArray>> {
    if g.family != Family::Agl1 {
        return Err(Error::WrongFamily { expected: "agl1", found: g.family.to_string() });
    }
    let q = g.q;
    Ok((0..q - 1)
        .map(|a| PermutationArray::from_flat_unchecked(q, g.base.as_flat()[a * q * q..(a + 1) * q * q].to_vec()))
        .collect())
}

/// Partition of the rows into blocks of n rows at pairwise distance n.
///
/// AGL(1,q) uses its cyclic cosets. PGL(2,q) and PΓL(2,q) use the left cosets of a cyclic
/// subgroup of order q+1 acting regularly; when none is found, or for other families, rows
/// are grouped greedily (first row not yet placed, then every later compatible row).
pub fn block_decomposition(g: &GroupPa) -> Result<Vec<PermutationArray>> {
    match g.family {
        Family::Agl1 => cyclic_coset_decomposition(g),
        Family::Pgl2 | Family::Pgammal2 => match regular_cyclic_subgroup(&g.base) {
            Some(h) => Ok(left_coset_blocks(&g.base, &h)),
            None => greedy_blocks(&g.base),
        },
        _ => greedy_blocks(&g.base),
    }
}

/// Powers of some fixed-point-free element whose nontrivial powers are all fixed-point-free
/// and whose order is n.
fn regular_cyclic_subgroup(g: &PermutationArray) -> Option<Vec<Vec<Symbol>>> {
    let n = g.n();
    'rows: for r in g.rows() {
        if r.iter().enumerate().any(|(i, &s)| i == s as usize) {
            continue;
        }
        let mut powers = vec![(0..n as Symbol).collect::<Vec<_>>(), r.to_vec()];
        for _ in 2..n {
            let next = compose_slices(r, powers.last().expect("non-empty"));
            if next.iter().enumerate().any(|(i, &s)| i == s as usize) {
                continue 'rows;
            }
            powers.push(next);
        }
        if compose_slices(r, powers.last().expect("non-empty")).iter().enumerate().all(|(i, &s)| i == s as usize) {
            return Some(powers);
        }
    }
    None
}

fn left_coset_blocks(g: &PermutationArray, h: &[Vec<Symbol>]) -> Vec<PermutationArray> {
    let idx = g.index();
    let mut placed = vec![false; g.len()];
    let mut blocks = Vec::new();
    for i in 0..g.len() {
        if placed[i] {
            continue;
        }
        let x = g.row(i);
        let mut data = Vec::with_capacity(h.len() * g.n());
        for e in h {
            let row = compose_slices(x, e);
            placed[idx.get(&row).expect("group closed under composition")] = true;
            data.extend_from_slice(&row);
        }
        blocks.push(PermutationArray::from_flat_unchecked(g.n(), data));
    }
    blocks
}

fn greedy_blocks(g: &PermutationArray) -> Result<Vec<PermutationArray>> {
    let n = g.n();
    let mut placed = vec![false; g.len()];
    let mut blocks = Vec::new();
    for i in 0..g.len() {
        if placed[i] {
            continue;
        }
        placed[i] = true;
        let mut members = vec![i];
        for j in i + 1..g.len() {
            if members.len() == n {
                break;
            }
            if !placed[j] && members.iter().all(|&k| hd(g.row(k), g.row(j)) == n) {
                placed[j] = true;
                members.push(j);
            }
        }
        if members.len() != n {
            return Err(Error::Decomposition(format!(
                "greedy block starting at row {i} stopped at {} of {n} rows",
                members.len()
            )));
        }
        blocks.push(g.select(&members));
    }
    Ok(blocks)
}

/// The coset `alpha ∘ G` as an array.
pub fn coset(g: &GroupPa, alpha: &Permutation) -> Result<PermutationArray> {
    g.base.left_multiply(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(agl1(37).unwrap().len(), 1332);
        assert_eq!(pgl2(2).unwrap().len(), 6);
        assert_eq!(pgammal2(4).unwrap().len(), 120);
        assert_eq!(pgammal2(5).unwrap().len(), pgl2(5).unwrap().len());
    }

    #[test]
    fn agl4_blocks_match_hand_computation() {
        let blocks = cyclic_coset_decomposition(&agl1(4).unwrap()).unwrap();
        assert_eq!(blocks.len(), 3);
        assert_eq!(blocks[0].row(1), &[1, 0, 3, 2]);
        assert_eq!(blocks[1].row(0), &[0, 2, 3, 1]);
        assert_eq!(blocks[2].row(0), &[0, 3, 1, 2]);
    }

    #[test]
    fn wrong_family_rejected() {
        assert!(cyclic_coset_decomposition(&pgl2(5).unwrap()).is_err());
    }
}
