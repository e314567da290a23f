//! The `permarray` command line.
//!
//! Exit status is 0 on success, 1 when a verification or validation check fails and 2 on
//! usage or input errors. With `--json` every command prints one object with the fields
//! `command`, `inputs`, `outputs`, `metrics` and `status`.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::extend::descriptor::{load_descriptor, LoadedSystem};
use crate::extend::{parallel_2ext, parallel_rudimentary, sequential_extend, simple_extend};
use crate::group::{agl1, block_decomposition, cyclic_coset_decomposition, pgammal2, pgl2, Family, GroupPa};
use crate::io::{format_mols, read_pa, write_pa, PaFile};
use crate::kron::{kron_blockwise, kron_extend_bound, kronecker};
use crate::latin::{latin_to_pa, mols_prime_power};
use crate::ledger::{
    compare_to_paper, conjecture_check, published_conjecture_exceptions, BoundRecord, BoundSource, Ledger, MolsCounts,
};
use crate::perm::{Permutation, PermutationArray};
use crate::search::{
    coverage_count, decode_coset_solution, decode_partition, default_symbol_sets, export_lp, greedy_partition,
    ilp_coset_model, ilp_partition_model, random_coset_search, solve_ilp, SearchConfig, Solver,
};
use crate::verify::{group_min_distance, min_distance, verify_pa, DistanceMode, VerifyMode, DEFAULT_SAMPLED_PAIRS};

pub const THREADS_ENV: &str = "PERMARRAY_THREADS";

#[derive(Parser, Debug)]
#[command(name = "permarray", version, about = "Permutation array constructions and verification")]
pub struct Cli {
    /// Print a JSON summary instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for the parallel scans.
    #[arg(long, global = true, env = THREADS_ENV)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate AGL(1,q), PGL(2,q) or PΓL(2,q).
    GenGroup(GenGroupArgs),
    /// Split a group into blocks of pairwise distance n.
    Decompose(DecomposeArgs),
    /// Write the q−1 field MOLS of order q.
    GenMols(GenMolsArgs),
    /// Apply an extension operator to a partition system descriptor.
    Extend(ExtendArgs),
    /// Modified Kronecker products.
    Kron(KronArgs),
    /// Choose a position partition for a list of blocks.
    SearchPartition(SearchPartitionArgs),
    /// Search for coset representatives of a group.
    SearchCoset(SearchCosetArgs),
    /// Check the minimum distance of a PA file.
    Verify(VerifyArgs),
    /// Bounds ledger operations.
    #[command(subcommand)]
    Ledger(LedgerCommand),
    /// Run a JSON list of steps.
    Pipeline(PipelineArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupFamily {
    Agl1,
    Pgl2,
    Pgammal2,
}

impl GroupFamily {
    fn generate(self, q: usize) -> Result<GroupPa> {
        match self {
            GroupFamily::Agl1 => agl1(q),
            GroupFamily::Pgl2 => pgl2(q),
            GroupFamily::Pgammal2 => pgammal2(q),
        }
    }
}

#[derive(Args, Debug)]
pub struct GenGroupArgs {
    #[arg(long, value_enum)]
    pub family: GroupFamily,
    #[arg(long)]
    pub q: usize,
    #[arg(short, long)]
    pub output: PathBuf,
    /// Also run the exhaustive pairwise distance scan.
    #[arg(long)]
    pub verify_full: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DecomposeMode {
    Cyclic,
    Blocks,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(long, value_enum, default_value = "blocks")]
    pub mode: DecomposeMode,
    #[arg(long, value_enum, required_unless_present = "group")]
    pub family: Option<GroupFamily>,
    #[arg(long, required_unless_present = "group")]
    pub q: Option<usize>,
    /// Group PA file; `family=` and `q=` header values are honoured.
    #[arg(long, conflicts_with_all = ["family", "q"])]
    pub group: Option<PathBuf>,
    /// Directory receiving block_000.pa, block_001.pa, …
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Args, Debug)]
pub struct GenMolsArgs {
    #[arg(long)]
    pub q: usize,
    #[arg(short, long)]
    pub output: PathBuf,
    /// Also write each square as a q-row PA into this directory.
    #[arg(long)]
    pub pa_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExtendMode {
    Simple,
    Sequential,
    ParallelR,
    #[value(name = "parallel-2")]
    Parallel2,
}

#[derive(Args, Debug)]
pub struct ExtendArgs {
    #[arg(long, value_enum)]
    pub mode: ExtendMode,
    #[arg(long)]
    pub system: PathBuf,
    #[arg(short, long)]
    pub output: PathBuf,
    /// Run the exhaustive distance scan on the output.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Args, Debug)]
pub struct KronArgs {
    /// PA files; with --blockwise or --extend, one per block.
    #[arg(long, num_args = 1.., required = true)]
    pub left: Vec<PathBuf>,
    #[arg(long, num_args = 1.., required = true)]
    pub right: Vec<PathBuf>,
    /// Union of A_i ⊗ B_i instead of A ⊗ B.
    #[arg(long)]
    pub blockwise: bool,
    /// Extend the blockwise product by one symbol.
    #[arg(long)]
    pub extend: bool,
    #[arg(short, long)]
    pub output: PathBuf,
    #[arg(long)]
    pub verify: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PartitionMode {
    Greedy,
    Ilp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SolverArg {
    Builtin,
    ExportOnly,
}

#[derive(Args, Debug)]
pub struct SearchPartitionArgs {
    #[arg(long, value_enum)]
    pub mode: PartitionMode,
    #[arg(long, num_args = 1.., required = true)]
    pub blocks: Vec<PathBuf>,
    /// `default`, or symbol sets like `0,1;2,3`.
    #[arg(long, default_value = "default")]
    pub symbols: String,
    #[arg(long)]
    pub export_lp: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "builtin")]
    pub solver: SolverArg,
    #[arg(long, default_value_t = 10_000_000)]
    pub node_budget: u64,
    /// Seconds.
    #[arg(long, default_value_t = 600)]
    pub time_budget: u64,
    /// JSON file receiving P and Q.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CosetMode {
    Random,
    Ilp,
}

#[derive(Args, Debug)]
pub struct SearchCosetArgs {
    #[arg(long, value_enum)]
    pub mode: CosetMode,
    #[arg(long)]
    pub group: PathBuf,
    #[arg(long)]
    pub distance: usize,
    /// Seconds.
    #[arg(long, default_value_t = 60)]
    pub budget: u64,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, required_if_eq("mode", "random"))]
    pub seed: Option<u64>,
    /// Representatives already in use, as a PA file.
    #[arg(long)]
    pub existing: Option<PathBuf>,
    /// Representatives to find in ILP mode.
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value_t = 10_000_000)]
    pub node_budget: u64,
    #[arg(long)]
    pub export_lp: Option<PathBuf>,
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyModeArg {
    Full,
    Sampled,
    Coset,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub pa: PathBuf,
    #[arg(long)]
    pub distance: usize,
    #[arg(long, value_enum, default_value = "full")]
    pub mode: VerifyModeArg,
    #[arg(long, default_value_t = DEFAULT_SAMPLED_PAIRS)]
    pub pairs: u64,
    #[arg(long, required_if_eq("mode", "sampled"))]
    pub seed: Option<u64>,
    #[arg(long, required_if_eq("mode", "coset"))]
    pub group: Option<PathBuf>,
    /// Coset representatives, one per block, as a PA file.
    #[arg(long, required_if_eq("mode", "coset"))]
    pub reps: Option<PathBuf>,
    /// Recheck the group's own distance with a full pairwise scan.
    #[arg(long)]
    pub full_intra: bool,
}

#[derive(Subcommand, Debug)]
pub enum LedgerCommand {
    /// Add a bound; the ledger keeps the best per (n, d).
    Record(LedgerRecordArgs),
    /// Compare constructed bounds with the published values.
    Compare(LedgerPathArgs),
    /// Check M(n,n−1) ≥ (n−1)·min(⌊√(n−1)⌋, N(n−1)).
    Conjecture(ConjectureArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SourceArg {
    PaperTable,
    Constructed,
    Imported,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Full,
    CosetShortcut,
    Sampled,
}

#[derive(Args, Debug)]
pub struct LedgerRecordArgs {
    #[arg(long)]
    pub ledger: PathBuf,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub bound: u64,
    #[arg(long)]
    pub method: String,
    #[arg(long, value_enum)]
    pub source: SourceArg,
    #[arg(long)]
    pub artifact: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub verified_mode: Option<ModeArg>,
}

#[derive(Args, Debug)]
pub struct LedgerPathArgs {
    #[arg(long)]
    pub ledger: PathBuf,
}

#[derive(Args, Debug)]
pub struct ConjectureArgs {
    /// Check one value instead of the published exceptions.
    #[arg(long, requires = "bound")]
    pub n: Option<usize>,
    #[arg(long, requires = "n")]
    pub bound: Option<u64>,
    /// CSV with columns n,n_lower,provenance.
    #[arg(long)]
    pub mols_counts: Option<PathBuf>,
    /// Use the product bound for orders without an entry.
    #[arg(long)]
    pub product_fallback: bool,
}

#[derive(Args, Debug)]
pub struct PipelineArgs {
    #[arg(long)]
    pub spec: PathBuf,
}

/// A batch of commands run in order; `seed` fills in `--seed` where a step omits it.
///
/// ```json
/// {"seed": 7, "steps": [
///   {"command": "gen-group", "args": ["--family", "agl1", "--q", "4", "-o", "g.pa"]},
///   {"command": "verify", "args": ["--pa", "g.pa", "--distance", "3"]}
/// ]}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineSpec {
    #[serde(default)]
    pub seed: Option<u64>,
    pub steps: Vec<PipelineStep>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineStep {
    pub command: String,
    #[serde(default)]
    pub args: Vec<String>,
}

const SEEDED: &[&str] = &["search-coset", "verify"];
const STEPS: &[&str] =
    &["gen-group", "decompose", "gen-mols", "extend", "kron", "search-partition", "search-coset", "verify", "ledger"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Failed,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub metrics: Map<String, Value>,
    pub status: Status,
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl Summary {
    fn new(command: &str) -> Self {
        Summary {
            command: command.into(),
            inputs: Map::new(),
            outputs: Map::new(),
            metrics: Map::new(),
            status: Status::Ok,
            lines: Vec::new(),
        }
    }

    fn input(&mut self, k: &str, v: impl Serialize) -> &mut Self {
        self.inputs.insert(k.into(), json!(v));
        self
    }

    fn output(&mut self, k: &str, v: impl Serialize) -> &mut Self {
        self.outputs.insert(k.into(), json!(v));
        self
    }

    fn metric(&mut self, k: &str, v: impl Serialize) -> &mut Self {
        self.metrics.insert(k.into(), json!(v));
        self
    }

    fn say(&mut self, line: impl Into<String>) -> &mut Self {
        self.lines.push(line.into());
        self
    }

    fn fail(&mut self, line: impl Into<String>) -> &mut Self {
        self.status = Status::Failed;
        self.say(line)
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Error => 2,
        }
    }
}

/// Failed checks exit with 1, everything else with 2.
fn error_status(e: &Error) -> Status {
    match e {
        Error::InvalidSystem(_) | Error::CoverageShortfall { .. } | Error::CosetStructure(_) => Status::Failed,
        _ => Status::Error,
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::GenGroup(_) => "gen-group",
        Command::Decompose(_) => "decompose",
        Command::GenMols(_) => "gen-mols",
        Command::Extend(_) => "extend",
        Command::Kron(_) => "kron",
        Command::SearchPartition(_) => "search-partition",
        Command::SearchCoset(_) => "search-coset",
        Command::Verify(_) => "verify",
        Command::Ledger(LedgerCommand::Record(_)) => "ledger record",
        Command::Ledger(LedgerCommand::Compare(_)) => "ledger compare",
        Command::Ledger(LedgerCommand::Conjecture(_)) => "ledger conjecture",
        Command::Pipeline(_) => "pipeline",
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    if let Some(t) = cli.threads {
        // Fails only if a pool already exists, in which case its size stands.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let summary = execute(&cli.command);
    report(&summary, cli.json);
    summary.exit_code()
}

fn report(s: &Summary, as_json: bool) {
    if as_json {
        println!("{}", serde_json::to_string(s).expect("summary serialises"));
        return;
    }
    for l in &s.lines {
        if s.status == Status::Error {
            eprintln!("error: {l}");
        } else {
            println!("{l}");
        }
    }
}

pub fn execute(cmd: &Command) -> Summary {
    let name = command_name(cmd);
    let mut s = Summary::new(name);
    let res = match cmd {
        Command::GenGroup(a) => gen_group(a, &mut s),
        Command::Decompose(a) => decompose(a, &mut s),
        Command::GenMols(a) => gen_mols(a, &mut s),
        Command::Extend(a) => extend(a, &mut s),
        Command::Kron(a) => kron(a, &mut s),
        Command::SearchPartition(a) => search_partition(a, &mut s),
        Command::SearchCoset(a) => search_coset(a, &mut s),
        Command::Verify(a) => verify(a, &mut s),
        Command::Ledger(LedgerCommand::Record(a)) => ledger_record(a, &mut s),
        Command::Ledger(LedgerCommand::Compare(a)) => ledger_compare(a, &mut s),
        Command::Ledger(LedgerCommand::Conjecture(a)) => ledger_conjecture(a, &mut s),
        Command::Pipeline(a) => pipeline(a, &mut s),
    };
    if let Err(e) = res {
        s.status = error_status(&e);
        s.metric("error", e.to_string());
        s.say(e.to_string());
    }
    s
}

fn write_array(path: &Path, file: &PaFile, s: &mut Summary) -> Result<()> {
    write_pa(path, file)?;
    s.output("pa", path.display().to_string());
    Ok(())
}

fn full_check(a: &PermutationArray, d: usize, s: &mut Summary) -> Result<bool> {
    let rep = verify_pa(a, d, VerifyMode::Full)?;
    s.metric("verified_min_distance", rep.min_distance_found).metric("pairs_checked", rep.pairs_checked);
    if rep.passed() {
        s.say(format!("verified: minimum distance {} >= {d}", rep.min_distance_found));
        Ok(true)
    } else {
        let (i, j) = rep.witness_pair.expect("a failing scan has a witness");
        s.metric("witness_pair", [i, j]);
        s.fail(format!("rows {i} and {j} are at distance {} < {d}", rep.min_distance_found));
        Ok(false)
    }
}

fn gen_group(a: &GenGroupArgs, s: &mut Summary) -> Result<()> {
    s.input("family", format!("{:?}", a.family).to_lowercase()).input("q", a.q);
    let g = a.family.generate(a.q)?;
    let (d, _) = group_min_distance(g.base())?;
    s.metric("rows", g.len()).metric("n", g.n()).metric("min_distance", d);
    s.say(format!("{} on {} symbols: {} rows, minimum distance {d}", g.family(), g.n(), g.len()));
    if a.verify_full {
        full_check(g.base(), d, s)?;
    }
    let extra = [("family", g.family().to_string()), ("q", a.q.to_string())];
    let file = PaFile::with_standard_header(g.base().clone(), Some(d), &extra);
    write_array(&a.output, &file, s)
}

fn load_group(path: &Path) -> Result<GroupPa> {
    let f = read_pa(path)?;
    let family = f.header_value("family").and_then(|v| v.parse::<Family>().ok());
    let q = f.header_value("q").and_then(|v| v.parse::<usize>().ok());
    Ok(match (family, q) {
        (Some(fam), Some(q)) => GroupPa::with_family(f.array, fam, q),
        _ => GroupPa::explicit(f.array),
    })
}

fn decompose(a: &DecomposeArgs, s: &mut Summary) -> Result<()> {
    let g = match (&a.group, a.family, a.q) {
        (Some(p), _, _) => {
            s.input("group", p.display().to_string());
            load_group(p)?
        }
        (None, Some(f), Some(q)) => {
            s.input("family", format!("{f:?}").to_lowercase()).input("q", q);
            f.generate(q)?
        }
        _ => return Err(Error::Precondition("give --group or both --family and --q".into())),
    };
    s.input("mode", format!("{:?}", a.mode).to_lowercase());
    let blocks = match a.mode {
        DecomposeMode::Cyclic => cyclic_coset_decomposition(&g)?,
        DecomposeMode::Blocks => block_decomposition(&g)?,
    };
    std::fs::create_dir_all(&a.output).map_err(|e| Error::io(&a.output, e))?;
    let mut files = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        let path = a.output.join(format!("block_{i:03}.pa"));
        write_pa(&path, &PaFile::with_standard_header(b.clone(), Some(b.n()), &[("block", i.to_string())]))?;
        files.push(path.display().to_string());
    }
    let sizes: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
    s.metric("blocks", blocks.len()).metric("sizes", &sizes).output("files", files);
    s.say(format!("{} blocks of sizes {:?} written to {}", blocks.len(), sizes, a.output.display()));
    Ok(())
}

fn gen_mols(a: &GenMolsArgs, s: &mut Summary) -> Result<()> {
    s.input("q", a.q);
    let set = mols_prime_power(a.q)?;
    std::fs::write(&a.output, format_mols(&set)).map_err(|e| Error::io(&a.output, e))?;
    s.output("mols", a.output.display().to_string()).metric("squares", set.len()).metric("order", set.order());
    if let Some(dir) = &a.pa_dir {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        for (i, l) in set.squares().iter().enumerate() {
            let pa = latin_to_pa(l);
            write_pa(dir.join(format!("square_{i:03}.pa")), &PaFile::with_standard_header(pa, Some(a.q), &[]))?;
        }
        s.output("pa_dir", dir.display().to_string());
    }
    s.say(format!("{} mutually orthogonal Latin squares of order {}", set.len(), a.q));
    Ok(())
}

fn extend(a: &ExtendArgs, s: &mut Summary) -> Result<()> {
    s.input("mode", format!("{:?}", a.mode).to_lowercase()).input("system", a.system.display().to_string());
    let loaded = load_descriptor(&a.system)?;
    let (out, d) = match (a.mode, loaded) {
        (ExtendMode::Simple, LoadedSystem::Simple(sys)) => {
            let cov = sys.coverage();
            s.metric("covered", cov.counts());
            (simple_extend(&sys)?, sys.d())
        }
        (ExtendMode::Sequential, LoadedSystem::Sequential { systems, outer }) => {
            let d = systems[0].d();
            let res = sequential_extend(&systems, outer)?;
            let sizes: Vec<usize> = res.stage_one.iter().map(|b| b.len()).collect();
            s.metric("stage_one_sizes", &sizes).metric("stage_two_covered", res.stage_two.coverage().counts());
            s.say(format!("stage one sizes {sizes:?}"));
            (res.output, d)
        }
        (ExtendMode::ParallelR, LoadedSystem::Rudimentary { blocks, r, d }) => (parallel_rudimentary(&blocks, r, d)?, d),
        (ExtendMode::Parallel2, LoadedSystem::Pair(sys)) => {
            let d = sys.d();
            (parallel_2ext(&sys)?, d)
        }
        (mode, _) => return Err(Error::Precondition(format!("descriptor does not describe a {mode:?} extension"))),
    };
    s.metric("rows", out.len()).metric("n", out.n()).metric("d", d);
    s.say(format!("{} rows on {} symbols, distance at least {d}", out.len(), out.n()));
    if a.verify {
        full_check(&out, d, s)?;
    }
    write_array(&a.output, &PaFile::with_standard_header(out, Some(d), &[]), s)
}

fn read_arrays(paths: &[PathBuf]) -> Result<Vec<PermutationArray>> {
    paths.iter().map(|p| read_pa(p).map(|f| f.array)).collect()
}

fn kron(a: &KronArgs, s: &mut Summary) -> Result<()> {
    let names = |v: &[PathBuf]| v.iter().map(|p| p.display().to_string()).collect::<Vec<_>>();
    s.input("left", names(&a.left)).input("right", names(&a.right));
    let left = read_arrays(&a.left)?;
    let right = read_arrays(&a.right)?;
    let (out, d) = if a.extend {
        let ext = kron_extend_bound(&left, &right)?;
        s.metric("bound", ext.bound);
        let d = ext.array.n() - 1;
        (ext.array, Some(d))
    } else if a.blockwise {
        (kron_blockwise(&left, &right)?, None)
    } else {
        if left.len() != 1 || right.len() != 1 {
            return Err(Error::Precondition("a plain product takes one file per side".into()));
        }
        (kronecker(&left[0], &right[0])?, None)
    };
    s.metric("rows", out.len()).metric("n", out.n());
    s.say(format!("{} rows on {} symbols", out.len(), out.n()));
    let d = match (a.verify, d) {
        (true, Some(d)) => {
            full_check(&out, d, s)?;
            Some(d)
        }
        (true, None) => {
            let m = min_distance(&out, None)?.min_distance_found;
            s.metric("min_distance", m).say(format!("minimum distance {m}"));
            Some(m)
        }
        (false, d) => d,
    };
    write_array(&a.output, &PaFile::with_standard_header(out, d, &[]), s)
}

fn parse_symbol_sets(spec: &str) -> Result<Vec<Vec<usize>>> {
    spec.split(';')
        .map(|set| {
            set.split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Precondition(format!("bad symbol {t:?}"))))
                .collect()
        })
        .collect()
}

fn search_partition(a: &SearchPartitionArgs, s: &mut Summary) -> Result<()> {
    s.input("mode", format!("{:?}", a.mode).to_lowercase()).input("symbols", &a.symbols);
    let blocks = read_arrays(&a.blocks)?;
    let n = blocks.first().map(|b| b.n()).ok_or(Error::EmptyArray)?;
    let q = if a.symbols == "default" { default_symbol_sets(n, blocks.len())? } else { parse_symbol_sets(&a.symbols)? };
    let p = match a.mode {
        PartitionMode::Greedy => Some(greedy_partition(&blocks, Some(&q))?),
        PartitionMode::Ilp => {
            let model = ilp_partition_model(&blocks, &q)?;
            s.metric("variables", model.num_vars()).metric("constraints", model.constraints().len());
            if let Some(path) = &a.export_lp {
                std::fs::write(path, export_lp(&model)).map_err(|e| Error::io(path, e))?;
                s.output("lp", path.display().to_string());
            }
            if a.solver == SolverArg::ExportOnly {
                None
            } else {
                let cfg = SearchConfig {
                    node_budget: a.node_budget,
                    time_budget: Duration::from_secs(a.time_budget),
                    solver: Solver::Builtin,
                    ..SearchConfig::default()
                };
                let sol = solve_ilp(&model, &cfg);
                s.metric("solver_status", sol.status).metric("nodes", sol.nodes);
                match sol.values {
                    Some(v) => Some(decode_partition(&model, &v, blocks.len(), n)?),
                    None => return Err(Error::Model(format!("solver finished with status {:?}", sol.status))),
                }
            }
        }
    };
    if let Some(p) = p {
        let cov = coverage_count(&blocks, &p, &q);
        s.metric("covered", cov).metric("rows", blocks.iter().map(|b| b.len()).sum::<usize>());
        s.say(format!("P = {p:?}")).say(format!("covered {cov} rows"));
        if let Some(path) = &a.output {
            let text = serde_json::to_string_pretty(&json!({"P": p, "Q": q, "covered": cov}))?;
            std::fs::write(path, text + "\n").map_err(|e| Error::io(path, e))?;
            s.output("partition", path.display().to_string());
        }
        s.output("P", p).output("Q", q);
    }
    Ok(())
}

fn search_coset(a: &SearchCosetArgs, s: &mut Summary) -> Result<()> {
    s.input("mode", format!("{:?}", a.mode).to_lowercase())
        .input("group", a.group.display().to_string())
        .input("distance", a.distance)
        .input("seed", a.seed);
    let g = read_pa(&a.group)?.array;
    let existing: Vec<Permutation> = match &a.existing {
        Some(p) => {
            let f = read_pa(p)?.array;
            (0..f.len()).map(|i| f.permutation(i)).collect()
        }
        None => Vec::new(),
    };
    let cfg = SearchConfig {
        seed: a.seed.unwrap_or(0),
        trial_budget: a.trials,
        time_budget: Duration::from_secs(a.budget),
        node_budget: a.node_budget,
        solver: Solver::Builtin,
    };
    let found = match a.mode {
        CosetMode::Random => {
            let r = random_coset_search(&g, a.distance, &existing, &cfg)?;
            s.metric("trials_run", r.trials_run).metric("accepted_trials", &r.trials);
            r.found
        }
        CosetMode::Ilp => ilp_cosets(&g, a, &existing, &cfg, s)?,
    };
    s.metric("found", found.len());
    s.say(format!("found {} representatives at coset distance >= {}", found.len(), a.distance));
    let arr = PermutationArray::new(g.n(), found)?;
    let group_name = a.group.file_name().map_or_else(|| a.group.display().to_string(), |f| f.to_string_lossy().into_owned());
    let header = vec![
        format!("group={group_name} d={} count={}", a.distance, arr.len()),
        format!("seed={} mode={}", cfg.seed, format!("{:?}", a.mode).to_lowercase()),
    ];
    write_array(&a.output, &PaFile::new(arr, header), s)
}

/// Representatives one at a time; each must be far from G and from every earlier coset.
fn ilp_cosets(
    g: &PermutationArray,
    a: &SearchCosetArgs,
    existing: &[Permutation],
    cfg: &SearchConfig,
    s: &mut Summary,
) -> Result<Vec<Permutation>> {
    let mut reps: Vec<Permutation> = existing.to_vec();
    let mut found = Vec::new();
    let start = Instant::now();
    for _ in 0..a.count {
        let mut rows = g.clone();
        for r in &reps {
            rows = PermutationArray::concat(g.n(), [&rows, &g.left_multiply(r)?])?;
        }
        let model = ilp_coset_model(&rows, a.distance)?;
        if let Some(path) = &a.export_lp {
            std::fs::write(path, export_lp(&model)).map_err(|e| Error::io(path, e))?;
            s.output("lp", path.display().to_string());
            break;
        }
        let left = cfg.time_budget.saturating_sub(start.elapsed());
        let sol = solve_ilp(&model, &SearchConfig { time_budget: left, ..cfg.clone() });
        s.metric("solver_status", sol.status);
        let Some(v) = sol.values else { break };
        let pi = decode_coset_solution(&model, &v, g.n())?;
        reps.push(pi.clone());
        found.push(pi);
    }
    Ok(found)
}

fn verify(a: &VerifyArgs, s: &mut Summary) -> Result<()> {
    s.input("pa", a.pa.display().to_string())
        .input("distance", a.distance)
        .input("mode", format!("{:?}", a.mode).to_lowercase());
    let arr = read_pa(&a.pa)?.array;
    let group;
    let reps: Vec<Permutation>;
    let mode = match a.mode {
        VerifyModeArg::Full => VerifyMode::Full,
        VerifyModeArg::Sampled => {
            s.input("pairs", a.pairs).input("seed", a.seed);
            VerifyMode::Sampled { pairs: a.pairs, seed: a.seed.unwrap_or(0) }
        }
        VerifyModeArg::Coset => {
            let (gp, rp) = (a.group.as_ref().expect("required by clap"), a.reps.as_ref().expect("required by clap"));
            group = read_pa(gp)?.array;
            let r = read_pa(rp)?.array;
            reps = (0..r.len()).map(|i| r.permutation(i)).collect();
            VerifyMode::Coset { group: &group, reps: &reps, full_intra: a.full_intra }
        }
    };
    let rep = verify_pa(&arr, a.distance, mode)?;
    s.metric("rows", arr.len())
        .metric("min_distance_found", rep.min_distance_found)
        .metric("exact", rep.exact)
        .metric("pairs_checked", rep.pairs_checked)
        .metric("report", &rep);
    if rep.passed() {
        s.say(format!(
            "ok: {} rows, minimum distance {} >= {} ({:?}, {} pairs)",
            arr.len(),
            rep.min_distance_found,
            a.distance,
            rep.mode,
            rep.pairs_checked
        ));
    } else {
        let w = rep.witness_pair.map_or_else(String::new, |(i, j)| format!(" between rows {i} and {j}"));
        if let Some((i, j)) = rep.witness_pair {
            s.metric("witness_pair", [i, j]);
        }
        s.fail(format!("FAILED: distance {}{w} is below {}", rep.min_distance_found, a.distance));
    }
    Ok(())
}

fn ledger_record(a: &LedgerRecordArgs, s: &mut Summary) -> Result<()> {
    let source = match a.source {
        SourceArg::PaperTable => BoundSource::PaperTable,
        SourceArg::Constructed => BoundSource::Constructed,
        SourceArg::Imported => BoundSource::Imported,
    };
    let mut rec = BoundRecord::new(a.n, a.d, a.bound, &a.method, source);
    rec.artifact = a.artifact.clone();
    rec.verified_mode = a.verified_mode.map(|m| match m {
        ModeArg::Full => DistanceMode::Full,
        ModeArg::CosetShortcut => DistanceMode::CosetShortcut,
        ModeArg::Sampled => DistanceMode::Sampled,
    });
    s.input("ledger", a.ledger.display().to_string()).input("record", &rec);
    let improved = Ledger::record_to_disk(&a.ledger, rec)?;
    let cur = Ledger::load(&a.ledger)?.get(a.n, a.d).map(|r| r.bound);
    s.metric("improved", improved).metric("current", cur).output("ledger", a.ledger.display().to_string());
    s.say(format!("M({}, {}) >= {}{}", a.n, a.d, cur.unwrap_or(0), if improved { " (new)" } else { "" }));
    Ok(())
}

fn ledger_compare(a: &LedgerPathArgs, s: &mut Summary) -> Result<()> {
    s.input("ledger", a.ledger.display().to_string());
    let ledger = Ledger::load(&a.ledger)?;
    let report = compare_to_paper(&ledger);
    for r in &report {
        s.say(format!(
            "M({}, {}): constructed {} vs published {} -> {:?}",
            r.n,
            r.d,
            r.constructed,
            r.published.map_or("-".into(), |p| p.to_string()),
            r.verdict
        ));
    }
    s.metric("compared", report.len()).output("report", &report);
    Ok(())
}

fn ledger_conjecture(a: &ConjectureArgs, s: &mut Summary) -> Result<()> {
    let mut counts = MolsCounts::embedded();
    if let Some(p) = &a.mols_counts {
        counts.merge(MolsCounts::load_csv(p)?);
        s.input("mols_counts", p.display().to_string());
    }
    if a.product_fallback {
        counts = counts.with_product_fallback();
    }
    let cases: Vec<(usize, u64)> = match (a.n, a.bound) {
        (Some(n), Some(b)) => vec![(n, b)],
        _ => published_conjecture_exceptions().iter().map(|r| (r.n, r.computed)).collect(),
    };
    let mut verdicts = Vec::new();
    for (n, b) in cases {
        let v = conjecture_check(n, b, &counts)?;
        s.say(format!(
            "n = {n}: bound {b} vs (n-1)*min(isqrt(n-1), N(n-1) = {}) = {} -> {}",
            v.mols,
            v.rhs,
            if v.holds { "holds" } else { "exception" }
        ));
        verdicts.push(v);
    }
    s.metric("exceptions", verdicts.iter().filter(|v| !v.holds).count()).output("verdicts", &verdicts);
    Ok(())
}

fn pipeline(a: &PipelineArgs, s: &mut Summary) -> Result<()> {
    s.input("spec", a.spec.display().to_string());
    let text = std::fs::read_to_string(&a.spec).map_err(|e| Error::io(&a.spec, e))?;
    let spec: PipelineSpec = serde_json::from_str(&text)?;
    let mut results = Vec::new();
    for (i, step) in spec.steps.iter().enumerate() {
        if !STEPS.contains(&step.command.as_str()) {
            return Err(Error::Precondition(format!("step {i}: unknown command {:?}", step.command)));
        }
        let mut argv = vec!["permarray".to_string()];
        argv.extend(step.command.split_whitespace().map(str::to_string));
        argv.extend(step.args.iter().cloned());
        if let (Some(seed), true) = (spec.seed, SEEDED.contains(&step.command.as_str())) {
            if !step.args.iter().any(|x| x == "--seed") {
                argv.extend(["--seed".to_string(), seed.to_string()]);
            }
        }
        let cli = Cli::try_parse_from(&argv).map_err(|e| Error::Precondition(format!("step {i}: {e}")))?;
        let sub = execute(&cli.command);
        s.lines.extend(sub.lines.iter().map(|l| format!("[{i} {}] {l}", step.command)));
        let status = sub.status;
        results.push(json!(sub));
        if status != Status::Ok {
            s.status = status;
            break;
        }
    }
    s.metric("steps_run", results.len()).output("steps", results);
    Ok(())
}
