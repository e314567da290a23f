//! Partition systems and the extension operators built on them.
//!
//! A distance-d system on Z_n pairs blocks of permutations with position sets P_i and
//! symbol sets Q_i. A row σ of block i is covered when σ(p) ∈ Q_i for some p ∈ P_i; the
//! smallest such p is designated and σ is extended by it to a permutation of Z_{n+1}.

pub mod descriptor;
mod parallel;
mod simple;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{compose_slices, Permutation, PermutationArray, Symbol};
use crate::verify::{coset_scan, cross_scan, first_outside_coset, group_min_distance, min_distance, DistanceMode};

pub use parallel::{parallel_2ext, parallel_rudimentary, shift};
pub use simple::{extend_by_position, sequential_extend, simple_extend, SequentialOutput};

/// Declares that block i equals `reps[i] ∘ group`, enabling the coset distance shortcut.
#[derive(Clone, Debug)]
pub struct CosetStructure {
    pub group: Arc<PermutationArray>,
    pub reps: Vec<Permutation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Role {
    Extend { positions: Vec<usize>, symbols: Vec<usize> },
    Append,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Role2 {
    Extend { p: Vec<usize>, q: Vec<usize>, r: Vec<usize>, s: Vec<usize> },
    /// Rows get (n, n+1) appended.
    AppendForward,
    /// Rows get (n+1, n) appended.
    AppendReversed,
}

#[derive(Clone, Debug)]
pub struct PartitionSystem {
    n: usize,
    d: usize,
    blocks: Vec<PermutationArray>,
    roles: Vec<Role>,
    cosets: Option<CosetStructure>,
}

#[derive(Clone, Debug)]
pub struct PartitionSystem2 {
    n: usize,
    d: usize,
    blocks: Vec<PermutationArray>,
    roles: Vec<Role2>,
    cosets: Option<CosetStructure>,
}

fn check_blocks(n: usize, blocks: &[PermutationArray], roles: usize) -> Result<()> {
    if blocks.len() != roles {
        return Err(Error::Precondition(format!("{} blocks but {roles} roles", blocks.len())));
    }
    if let Some(b) = blocks.iter().find(|b| b.n() != n) {
        return Err(Error::LengthMismatch { left: n, right: b.n() });
    }
    Ok(())
}

impl PartitionSystem {
    pub fn new(n: usize, d: usize, blocks: Vec<PermutationArray>, roles: Vec<Role>) -> Result<Self> {
        check_blocks(n, &blocks, roles.len())?;
        Ok(PartitionSystem { n, d, blocks, roles, cosets: None })
    }

    /// `blocks` holds one block per (P_i, Q_i) pair, optionally followed by the append block.
    pub fn from_partitions(
        n: usize,
        d: usize,
        blocks: Vec<PermutationArray>,
        p: Vec<Vec<usize>>,
        q: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if p.len() != q.len() || !(blocks.len() == p.len() || blocks.len() == p.len() + 1) {
            return Err(Error::Precondition(format!(
                "{} blocks do not fit {} position sets and {} symbol sets",
                blocks.len(),
                p.len(),
                q.len()
            )));
        }
        let mut roles: Vec<Role> =
            p.into_iter().zip(q).map(|(positions, symbols)| Role::Extend { positions, symbols }).collect();
        if blocks.len() > roles.len() {
            roles.push(Role::Append);
        }
        Self::new(n, d, blocks, roles)
    }

    pub fn with_cosets(mut self, cosets: CosetStructure) -> Self {
        self.cosets = Some(cosets);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn blocks(&self) -> &[PermutationArray] {
        &self.blocks
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn validate(&self) -> ValidationReport {
        let v = Validator::new(self.n, &self.blocks);
        let extend: Vec<(&[usize], &[usize])> = self
            .roles
            .iter()
            .filter_map(|r| match r {
                Role::Extend { positions, symbols } => Some((positions.as_slice(), symbols.as_slice())),
                Role::Append => None,
            })
            .collect();
        let appends = self.roles.len() - extend.len();
        let check = || -> std::result::Result<(), Violation> {
            if appends > 1 {
                return Err(Violation::TooManyAppendBlocks(appends));
            }
            check_partition(self.n, SetFamily::P, extend.iter().map(|e| e.0))?;
            check_partition(self.n, SetFamily::Q, extend.iter().map(|e| e.1))?;
            Ok(())
        };
        if let Err(e) = check() {
            return v.fail(e);
        }
        v.distances(self.d, self.d.saturating_sub(1), self.cosets.as_ref())
    }

    /// Coverage of every block; append blocks report every row as uncovered.
    pub fn coverage(&self) -> CoverageReport {
        let blocks = self
            .blocks
            .iter()
            .zip(&self.roles)
            .map(|(b, r)| match r {
                Role::Extend { positions, symbols } => covered(b, positions, symbols),
                Role::Append => BlockCoverage { designated: Vec::new(), uncovered: (0..b.len()).collect() },
            })
            .collect();
        CoverageReport { blocks }
    }

    /// |ext(M_i)| per block.
    pub fn extension_sizes(&self) -> Vec<usize> {
        self.coverage()
            .blocks
            .iter()
            .zip(&self.blocks)
            .zip(&self.roles)
            .map(|((c, b), r)| match r {
                Role::Extend { .. } => c.designated.len(),
                Role::Append => b.len(),
            })
            .collect()
    }
}

impl PartitionSystem2 {
    pub fn new(n: usize, d: usize, blocks: Vec<PermutationArray>, roles: Vec<Role2>) -> Result<Self> {
        check_blocks(n, &blocks, roles.len())?;
        Ok(PartitionSystem2 { n, d, blocks, roles, cosets: None })
    }

    /// One block per (P_i, Q_i, R_i, S_i), then optionally the forward and reversed append blocks.
    pub fn from_partitions(
        n: usize,
        d: usize,
        blocks: Vec<PermutationArray>,
        sets: [Vec<Vec<usize>>; 4],
    ) -> Result<Self> {
        let [p, q, r, s] = sets;
        let k = p.len();
        if q.len() != k || r.len() != k || s.len() != k || blocks.len() < k || blocks.len() > k + 2 {
            return Err(Error::Precondition(format!("{} blocks do not fit {k} set quadruples", blocks.len())));
        }
        let mut roles: Vec<Role2> = p
            .into_iter()
            .zip(q)
            .zip(r.into_iter().zip(s))
            .map(|((p, q), (r, s))| Role2::Extend { p, q, r, s })
            .collect();
        if blocks.len() > k {
            roles.push(Role2::AppendForward);
        }
        if blocks.len() > k + 1 {
            roles.push(Role2::AppendReversed);
        }
        Self::new(n, d, blocks, roles)
    }

    pub fn with_cosets(mut self, cosets: CosetStructure) -> Self {
        self.cosets = Some(cosets);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn blocks(&self) -> &[PermutationArray] {
        &self.blocks
    }

    pub fn roles(&self) -> &[Role2] {
        &self.roles
    }

    pub fn validate(&self) -> ValidationReport {
        let v = Validator::new(self.n, &self.blocks);
        let ext: Vec<[&[usize]; 4]> = self
            .roles
            .iter()
            .filter_map(|r| match r {
                Role2::Extend { p, q, r, s } => Some([p.as_slice(), q, r, s]),
                _ => None,
            })
            .collect();
        let fwd = self.roles.iter().filter(|r| **r == Role2::AppendForward).count();
        let rev = self.roles.iter().filter(|r| **r == Role2::AppendReversed).count();
        let check = || -> std::result::Result<(), Violation> {
            if fwd > 1 || rev > 1 {
                return Err(Violation::TooManyAppendBlocks(fwd.max(rev)));
            }
            for (f, fam) in [SetFamily::P, SetFamily::Q, SetFamily::R, SetFamily::S].into_iter().enumerate() {
                check_partition(self.n, fam, ext.iter().map(|e| e[f]))?;
            }
            for (i, e) in ext.iter().enumerate() {
                if let Some(&x) = e[0].iter().find(|x| e[2].contains(x)) {
                    return Err(Violation::Overlap { families: "P/R", set: i, element: x });
                }
                if let Some(&x) = e[1].iter().find(|x| e[3].contains(x)) {
                    return Err(Violation::Overlap { families: "Q/S", set: i, element: x });
                }
            }
            Ok(())
        };
        if let Err(e) = check() {
            return v.fail(e);
        }
        v.distances(self.d, self.d.saturating_sub(2), self.cosets.as_ref())
    }

    pub fn coverage(&self) -> Vec<PairCoverage> {
        self.blocks
            .iter()
            .zip(&self.roles)
            .map(|(b, role)| match role {
                Role2::Extend { p, q, r, s } => covered_pair(b, p, q, r, s),
                _ => PairCoverage { designated: Vec::new(), uncovered: (0..b.len()).collect() },
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetFamily {
    P,
    Q,
    R,
    S,
}

/// The first clause a system fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TooManyAppendBlocks(usize),
    OutOfRange { family: SetFamily, set: usize, element: usize },
    NotDisjoint { family: SetFamily, element: usize },
    NotCovering { family: SetFamily, missing: usize },
    Overlap { families: &'static str, set: usize, element: usize },
    SharedRow { first: (usize, usize), second: (usize, usize) },
    CosetStructure(String),
    /// Property I: `hd(M_block) ≥ d`.
    IntraDistance { block: usize, found: usize, required: usize, witness: (usize, usize) },
    /// Property II: pairwise block distance at least `required`.
    CrossDistance { blocks: (usize, usize), found: usize, required: usize, witness: (usize, usize) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooManyAppendBlocks(k) => write!(f, "{k} append-only blocks of one kind"),
            Violation::OutOfRange { family, set, element } => {
                write!(f, "{family:?}_{set} contains {element}, outside Z_n")
            }
            Violation::NotDisjoint { family, element } => write!(f, "{family:?} is not a partition: {element} repeats"),
            Violation::NotCovering { family, missing } => {
                write!(f, "{family:?} is not a partition: {missing} missing")
            }
            Violation::Overlap { families, set, element } => write!(f, "{families} sets {set} share {element}"),
            Violation::SharedRow { first, second } => {
                write!(f, "block {} row {} equals block {} row {}", first.0, first.1, second.0, second.1)
            }
            Violation::CosetStructure(s) => write!(f, "coset structure: {s}"),
            Violation::IntraDistance { block, found, required, witness } => write!(
                f,
                "block {block} has distance {found} < {required} (rows {} and {})",
                witness.0, witness.1
            ),
            Violation::CrossDistance { blocks, found, required, witness } => write!(
                f,
                "blocks {} and {} are at distance {found} < {required} (rows {} and {})",
                blocks.0, blocks.1, witness.0, witness.1
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violation: Option<Violation>,
    pub distance_mode: Option<DistanceMode>,
    pub pairs_checked: u64,
    /// Smallest block distance measured; exact when the system is valid.
    pub min_intra: Option<usize>,
    pub min_cross: Option<usize>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }

    pub fn into_result(self) -> Result<Self> {
        match self.violation {
            Some(v) => Err(Error::InvalidSystem(v)),
            None => Ok(self),
        }
    }
}

fn check_partition<'a>(
    n: usize,
    family: SetFamily,
    sets: impl Iterator<Item = &'a [usize]>,
) -> std::result::Result<(), Violation> {
    let mut seen = vec![false; n];
    let mut any = false;
    for (i, set) in sets.enumerate() {
        any = true;
        for &x in set {
            if x >= n {
                return Err(Violation::OutOfRange { family, set: i, element: x });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Violation::NotDisjoint { family, element: x });
            }
        }
    }
    // A system made only of append blocks uses no positions at all.
    match seen.iter().position(|s| !s).filter(|_| any) {
        Some(missing) => Err(Violation::NotCovering { family, missing }),
        None => Ok(()),
    }
}

struct Validator<'a> {
    n: usize,
    blocks: &'a [PermutationArray],
    report: ValidationReport,
}

impl<'a> Validator<'a> {
    fn new(n: usize, blocks: &'a [PermutationArray]) -> Self {
        Validator {
            n,
            blocks,
            report: ValidationReport {
                violation: None,
                distance_mode: None,
                pairs_checked: 0,
                min_intra: None,
                min_cross: None,
            },
        }
    }

    fn fail(mut self, v: Violation) -> ValidationReport {
        self.report.violation = Some(v);
        self.report
    }

    fn distances(mut self, d: usize, cross_d: usize, cosets: Option<&CosetStructure>) -> ValidationReport {
        let mut seen: HashMap<&[Symbol], (usize, usize)> = HashMap::new();
        for (b, block) in self.blocks.iter().enumerate() {
            for (i, row) in block.rows().enumerate() {
                if let Some(&first) = seen.get(row) {
                    return self.fail(Violation::SharedRow { first, second: (b, i) });
                }
                seen.insert(row, (b, i));
            }
        }
        drop(seen);
        let result = match cosets {
            Some(c) => self.coset_distances(d, cross_d, c),
            None => self.full_distances(d, cross_d),
        };
        match result {
            Ok(()) => self.report,
            Err(v) => self.fail(v),
        }
    }

    fn note(slot: &mut Option<usize>, d: usize) {
        *slot = Some(slot.map_or(d, |s| s.min(d)));
    }

    fn full_distances(&mut self, d: usize, cross_d: usize) -> std::result::Result<(), Violation> {
        self.report.distance_mode = Some(DistanceMode::Full);
        for (b, block) in self.blocks.iter().enumerate() {
            if block.is_empty() {
                continue;
            }
            let r = min_distance(block, Some(d)).expect("non-empty block");
            self.report.pairs_checked += r.pairs_checked;
            if !r.passed() {
                return Err(Violation::IntraDistance {
                    block: b,
                    found: r.min_distance_found,
                    required: d,
                    witness: r.witness_pair.expect("violation has a witness"),
                });
            }
            if block.len() > 1 {
                Self::note(&mut self.report.min_intra, r.min_distance_found);
            }
        }
        for x in 0..self.blocks.len() {
            for y in x + 1..self.blocks.len() {
                let (bx, by) = (&self.blocks[x], &self.blocks[y]);
                if bx.is_empty() || by.is_empty() {
                    continue;
                }
                let (found, witness) = cross_scan(bx, by, Some(cross_d)).expect("non-empty blocks");
                self.report.pairs_checked += (bx.len() * by.len()) as u64;
                if found < cross_d {
                    return Err(Violation::CrossDistance { blocks: (x, y), found, required: cross_d, witness });
                }
                Self::note(&mut self.report.min_cross, found);
            }
        }
        Ok(())
    }

    fn coset_distances(&mut self, d: usize, cross_d: usize, c: &CosetStructure) -> std::result::Result<(), Violation> {
        self.report.distance_mode = Some(DistanceMode::CosetShortcut);
        let g = c.group.as_ref();
        if c.reps.len() != self.blocks.len() {
            return Err(Violation::CosetStructure(format!(
                "{} representatives for {} blocks",
                c.reps.len(),
                self.blocks.len()
            )));
        }
        for (b, (block, rep)) in self.blocks.iter().zip(&c.reps).enumerate() {
            if block.len() != g.len() || rep.len() != self.n {
                return Err(Violation::CosetStructure(format!("block {b} is not a full coset")));
            }
            if let Some(k) = first_outside_coset(g, rep, block) {
                return Err(Violation::CosetStructure(format!("block {b} row {k} is not in rep ∘ group")));
            }
        }
        let (intra, pair) = group_min_distance(g).map_err(|e| Violation::CosetStructure(e.to_string()))?;
        self.report.pairs_checked += g.len() as u64;
        if intra < d {
            let (gi, gj) = pair.unwrap_or((0, 0));
            let at = |k: usize| {
                let row = compose_slices(c.reps[0].as_slice(), g.row(k));
                self.blocks[0].position(&row).unwrap_or(0)
            };
            let (i, j) = (at(gi), at(gj));
            return Err(Violation::IntraDistance { block: 0, found: intra, required: d, witness: (i.min(j), i.max(j)) });
        }
        if g.len() > 1 {
            self.report.min_intra = Some(intra);
        }
        for x in 0..c.reps.len() {
            for y in x + 1..c.reps.len() {
                let (found, k) = coset_scan(g, c.reps[x].as_slice(), c.reps[y].as_slice())
                    .map_err(|e| Violation::CosetStructure(e.to_string()))?;
                self.report.pairs_checked += g.len() as u64;
                if found < cross_d {
                    // rows reps[x]∘g_k and reps[y] realize the distance
                    let wx = compose_slices(c.reps[x].as_slice(), g.row(k));
                    let i = self.blocks[x].position(&wx).unwrap_or(0);
                    let j = self.blocks[y].position(c.reps[y].as_slice()).unwrap_or(0);
                    return Err(Violation::CrossDistance { blocks: (x, y), found, required: cross_d, witness: (i, j) });
                }
                Self::note(&mut self.report.min_cross, found);
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BlockCoverage {
    /// (row, designated position) for every covered row, in row order.
    pub designated: Vec<(usize, usize)>,
    pub uncovered: Vec<usize>,
}

impl BlockCoverage {
    pub fn covered_count(&self) -> usize {
        self.designated.len()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverageReport {
    pub blocks: Vec<BlockCoverage>,
}

impl CoverageReport {
    pub fn counts(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.covered_count()).collect()
    }

    pub fn total(&self) -> usize {
        self.blocks.iter().map(|b| b.covered_count()).sum()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairCoverage {
    /// (row, p, r) for every 2-covered row.
    pub designated: Vec<(usize, usize, usize)>,
    pub uncovered: Vec<usize>,
}

fn mask(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &x in set {
        if x < n {
            m[x] = true;
        }
    }
    m
}

fn sorted(set: &[usize]) -> Vec<usize> {
    let mut v = set.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Rows σ of `block` with σ(p) ∈ `symbols` for some p ∈ `positions`, designating the smallest p.
pub fn covered(block: &PermutationArray, positions: &[usize], symbols: &[usize]) -> BlockCoverage {
    let n = block.n();
    let qm = mask(n, symbols);
    let ps: Vec<usize> = sorted(positions).into_iter().filter(|&p| p < n).collect();
    let hits: Vec<Option<usize>> = (0..block.len())
        .into_par_iter()
        .map(|i| {
            let row = block.row(i);
            ps.iter().copied().find(|&p| qm[row[p] as usize])
        })
        .collect();
    let mut out = BlockCoverage::default();
    for (i, h) in hits.into_iter().enumerate() {
        match h {
            Some(p) => out.designated.push((i, p)),
            None => out.uncovered.push(i),
        }
    }
    out
}

/// Rows with σ(p) ∈ Q and σ(r) ∈ S for some p ∈ P, r ∈ R; designates the
/// lexicographically smallest (p, r).
pub fn covered_pair(block: &PermutationArray, p: &[usize], q: &[usize], r: &[usize], s: &[usize]) -> PairCoverage {
    let n = block.n();
    let (qm, sm) = (mask(n, q), mask(n, s));
    let ps: Vec<usize> = sorted(p).into_iter().filter(|&x| x < n).collect();
    let rs: Vec<usize> = sorted(r).into_iter().filter(|&x| x < n).collect();
    let hits: Vec<Option<(usize, usize)>> = (0..block.len())
        .into_par_iter()
        .map(|i| {
            let row = block.row(i);
            let p = ps.iter().copied().find(|&p| qm[row[p] as usize])?;
            let r = rs.iter().copied().find(|&r| r != p && sm[row[r] as usize])?;
            Some((p, r))
        })
        .collect();
    let mut out = PairCoverage::default();
    for (i, h) in hits.into_iter().enumerate() {
        match h {
            Some((p, r)) => out.designated.push((i, p, r)),
            None => out.uncovered.push(i),
        }
    }
    out
}
