//! JSON descriptors for partition systems.
//!
//! ```json
//! {
//!   "n": 4, "d": 4,
//!   "blocks": [
//!     {"group": {"family": "agl1", "q": 4}, "block": 0},
//!     {"file": "m2.pa"},
//!     {"pa": "0 3 1 2\n1 2 0 3\n2 1 3 0\n3 0 2 1\n"}
//!   ],
//!   "P": [[0, 2], [1, 3], [4]],
//!   "Q": [[0, 1], [2, 3], [4]]
//! }
//! ```
//!
//! A block whose P and Q entries are both `[n]` is the append-only block. Adding `R` and
//! `S` makes a (d,2) system, where `[n]` marks the block appended with (n, n+1) and
//! `[n+1]` the one appended with (n+1, n). A descriptor with `systems` describes a
//! sequential extension: the inner systems are extended first and its own `P`/`Q` (on
//! Z_{n+1}) partition the results. One with `r` and no `P` describes a rudimentary
//! parallel extension of its `2r` blocks. `"cosets": true` lets validation use the
//! coset shortcut; every block must then be `{"group": .., "rep": [..]}` over one group.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{agl1, block_decomposition, pgammal2, pgl2, Family, GroupPa};
use crate::io::{parse_pa, read_pa};
use crate::perm::{Permutation, PermutationArray, Symbol};

use super::{CosetStructure, PartitionSystem, PartitionSystem2, Role, Role2};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    pub q: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BlockSource {
    Inline { pa: String },
    File { file: PathBuf },
    Block { group: GroupSpec, block: usize },
    Coset { group: GroupSpec, rep: Option<Vec<Symbol>> },
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Descriptor {
    pub n: usize,
    pub d: usize,
    #[serde(default)]
    pub blocks: Vec<BlockSource>,
    #[serde(rename = "P", default)]
    pub p: Vec<Vec<usize>>,
    #[serde(rename = "Q", default)]
    pub q: Vec<Vec<usize>>,
    #[serde(rename = "R", default, skip_serializing_if = "Option::is_none")]
    pub r_sets: Option<Vec<Vec<usize>>>,
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
    pub s_sets: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub systems: Vec<Descriptor>,
    #[serde(default)]
    pub cosets: bool,
}

#[derive(Clone, Debug)]
pub enum LoadedSystem {
    Simple(PartitionSystem),
    Pair(PartitionSystem2),
    Sequential { systems: Vec<PartitionSystem>, outer: Vec<Role> },
    Rudimentary { blocks: Vec<PermutationArray>, r: usize, d: usize },
}

pub fn load_descriptor(path: impl AsRef<Path>) -> Result<LoadedSystem> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let desc: Descriptor = serde_json::from_str(&text)?;
    let base = path.parent().unwrap_or(Path::new("."));
    Loader::new(base).load(&desc)
}

pub fn parse_descriptor(json: &str, base_dir: &Path) -> Result<LoadedSystem> {
    let desc: Descriptor = serde_json::from_str(json)?;
    Loader::new(base_dir).load(&desc)
}

struct Loader<'a> {
    base: &'a Path,
    groups: HashMap<GroupSpec, Arc<GroupPa>>,
    decompositions: HashMap<GroupSpec, Arc<Vec<PermutationArray>>>,
}

impl<'a> Loader<'a> {
    fn new(base: &'a Path) -> Self {
        Loader { base, groups: HashMap::new(), decompositions: HashMap::new() }
    }

    fn group(&mut self, spec: &GroupSpec) -> Result<Arc<GroupPa>> {
        if let Some(g) = self.groups.get(spec) {
            return Ok(g.clone());
        }
        let g = Arc::new(match spec.family {
            Family::Agl1 => agl1(spec.q)?,
            Family::Pgl2 => pgl2(spec.q)?,
            Family::Pgammal2 => pgammal2(spec.q)?,
            f => return Err(Error::Precondition(format!("family {f} cannot be generated from q"))),
        });
        self.groups.insert(spec.clone(), g.clone());
        Ok(g)
    }

    fn block(&mut self, src: &BlockSource, n: usize) -> Result<PermutationArray> {
        let a = match src {
            BlockSource::Inline { pa } => {
                if pa.trim().is_empty() {
                    PermutationArray::empty(n)
                } else {
                    parse_pa(pa, "inline block")?.array
                }
            }
            BlockSource::File { file } => read_pa(self.base.join(file))?.array,
            BlockSource::Block { group, block } => {
                if !self.decompositions.contains_key(group) {
                    let g = self.group(group)?;
                    self.decompositions.insert(group.clone(), Arc::new(block_decomposition(&g)?));
                }
                let blocks = &self.decompositions[group];
                blocks
                    .get(*block)
                    .cloned()
                    .ok_or_else(|| Error::Precondition(format!("block {block} of {} blocks", blocks.len())))?
            }
            BlockSource::Coset { group, rep } => {
                let g = self.group(group)?;
                match rep {
                    None => g.base().clone(),
                    Some(r) => g.base().left_multiply(&Permutation::new(r.clone())?)?,
                }
            }
        };
        if a.n() != n {
            return Err(Error::LengthMismatch { left: n, right: a.n() });
        }
        Ok(a)
    }

    fn cosets(&mut self, desc: &Descriptor) -> Result<Option<CosetStructure>> {
        if !desc.cosets {
            return Ok(None);
        }
        let mut spec = None;
        let mut reps = Vec::new();
        for b in &desc.blocks {
            let BlockSource::Coset { group, rep } = b else {
                return Err(Error::Precondition("\"cosets\" requires every block to be a group coset".into()));
            };
            if spec.get_or_insert(group) != &group {
                return Err(Error::Precondition("\"cosets\" requires a single group".into()));
            }
            reps.push(match rep {
                Some(r) => Permutation::new(r.clone())?,
                None => Permutation::identity(desc.n),
            });
        }
        let Some(spec) = spec else { return Ok(None) };
        let g = self.group(spec)?;
        Ok(Some(CosetStructure { group: Arc::new(g.base().clone()), reps }))
    }

    fn load(&mut self, desc: &Descriptor) -> Result<LoadedSystem> {
        if !desc.systems.is_empty() {
            let systems = desc
                .systems
                .iter()
                .map(|s| match self.load(s)? {
                    LoadedSystem::Simple(sys) => Ok(sys),
                    _ => Err(Error::Precondition("inner systems must be simple".into())),
                })
                .collect::<Result<Vec<_>>>()?;
            let n1 = desc.n + 1;
            let outer = simple_roles(n1, &desc.p, &desc.q)?;
            return Ok(LoadedSystem::Sequential { systems, outer });
        }
        let blocks = desc.blocks.iter().map(|b| self.block(b, desc.n)).collect::<Result<Vec<_>>>()?;
        if let (Some(r), true) = (desc.r, desc.p.is_empty()) {
            return Ok(LoadedSystem::Rudimentary { blocks, r, d: desc.d });
        }
        let cosets = self.cosets(desc)?;
        match (&desc.r_sets, &desc.s_sets) {
            (None, None) => {
                let roles = simple_roles(desc.n, &desc.p, &desc.q)?;
                let mut sys = PartitionSystem::new(desc.n, desc.d, blocks, roles)?;
                if let Some(c) = cosets {
                    sys = sys.with_cosets(c);
                }
                Ok(LoadedSystem::Simple(sys))
            }
            (Some(r), Some(s)) => {
                let roles = pair_roles(desc.n, [&desc.p, &desc.q, r, s])?;
                let mut sys = PartitionSystem2::new(desc.n, desc.d, blocks, roles)?;
                if let Some(c) = cosets {
                    sys = sys.with_cosets(c);
                }
                Ok(LoadedSystem::Pair(sys))
            }
            _ => Err(Error::Precondition("R and S must be given together".into())),
        }
    }
}

fn simple_roles(n: usize, p: &[Vec<usize>], q: &[Vec<usize>]) -> Result<Vec<Role>> {
    if p.len() != q.len() {
        return Err(Error::Precondition(format!("{} P sets but {} Q sets", p.len(), q.len())));
    }
    Ok(p.iter()
        .zip(q)
        .map(|(p, q)| {
            if p == &[n] && q == &[n] {
                Role::Append
            } else {
                Role::Extend { positions: p.clone(), symbols: q.clone() }
            }
        })
        .collect())
}

fn pair_roles(n: usize, sets: [&[Vec<usize>]; 4]) -> Result<Vec<Role2>> {
    let k = sets[0].len();
    if sets.iter().any(|s| s.len() != k) {
        return Err(Error::Precondition("P, Q, R and S must have equal length".into()));
    }
    Ok((0..k)
        .map(|i| {
            let [p, q, r, s] = sets.map(|f| f[i].clone());
            let marker = |m: usize| [&p, &q, &r, &s].iter().all(|x| x.as_slice() == [m]);
            if marker(n) {
                Role2::AppendForward
            } else if marker(n + 1) {
                Role2::AppendReversed
            } else {
                Role2::Extend { p, q, r, s }
            }
        })
        .collect())
}
