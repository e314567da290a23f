//! The bounds ledger and the published reference values.
//!
//! The ledger is a CSV file holding the best bound per (n, d):
//!
//! ```text
//! n,d,bound,method,source,artifact,verified_mode
//! 5,4,12,simple-extension,constructed,out/agl4_ext.pa,full
//! 39,37,195,previous,imported,,
//! ```
//!
//! and a JSON-lines history with one record per `record` call, including those that did not
//! improve anything:
//!
//! ```text
//! {"n":39,"d":37,"bound":1301,"method":"sequential-extension","source":"constructed","artifact":"out/seq.pa","verified_mode":"full"}
//! {"n":39,"d":37,"bound":195,"method":"previous","source":"imported","artifact":null,"verified_mode":null}
//! ```

pub mod conjecture;
mod published;

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::verify::DistanceMode;

pub use conjecture::{conjecture_check, conjecture_rhs, ConjectureVerdict, MolsCountEntry, MolsCounts};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundSource {
    PaperTable,
    Constructed,
    Imported,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub n: usize,
    pub d: usize,
    pub bound: u64,
    pub method: String,
    pub source: BoundSource,
    pub artifact: Option<PathBuf>,
    pub verified_mode: Option<DistanceMode>,
}

impl BoundRecord {
    pub fn new(n: usize, d: usize, bound: u64, method: impl Into<String>, source: BoundSource) -> Self {
        BoundRecord { n, d, bound, method: method.into(), source, artifact: None, verified_mode: None }
    }

    pub fn constructed(n: usize, d: usize, bound: u64, method: impl Into<String>, artifact: impl Into<PathBuf>, mode: DistanceMode) -> Self {
        BoundRecord {
            artifact: Some(artifact.into()),
            verified_mode: Some(mode),
            ..Self::new(n, d, bound, method, BoundSource::Constructed)
        }
    }

    pub fn check(&self) -> Result<()> {
        if self.bound == 0 {
            return Err(Error::Record(format!("M({}, {}) bound must be positive", self.n, self.d)));
        }
        if self.d > self.n {
            return Err(Error::Record(format!("distance {} exceeds length {}", self.d, self.n)));
        }
        if self.source == BoundSource::Constructed && (self.artifact.is_none() || self.verified_mode.is_none()) {
            return Err(Error::Record("constructed bounds need an artifact and a verification mode".into()));
        }
        if self.method.contains(['\n', '\r']) {
            return Err(Error::Record("method tag must be a single line".into()));
        }
        Ok(())
    }
}

/// Current best bound per (n, d) plus every record ever offered.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Ledger {
    current: BTreeMap<(usize, usize), BoundRecord>,
    history: Vec<BoundRecord>,
}

impl Ledger {
    pub fn new() -> Self {
        Self::default()
    }

    /// Logs the record and keeps it if it beats the current bound. Returns whether it did.
    pub fn record(&mut self, rec: BoundRecord) -> Result<bool> {
        rec.check()?;
        self.history.push(rec.clone());
        let key = (rec.n, rec.d);
        let improves = self.current.get(&key).is_none_or(|cur| rec.bound > cur.bound);
        if improves {
            self.current.insert(key, rec);
        }
        Ok(improves)
    }

    pub fn get(&self, n: usize, d: usize) -> Option<&BoundRecord> {
        self.current.get(&(n, d))
    }

    pub fn current(&self) -> impl Iterator<Item = &BoundRecord> {
        self.current.values()
    }

    pub fn history(&self) -> &[BoundRecord] {
        &self.history
    }

    pub fn len(&self) -> usize {
        self.current.len()
    }

    pub fn is_empty(&self) -> bool {
        self.current.is_empty()
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for rec in self.current.values() {
            w.serialize(rec)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Record(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    pub fn history_jsonl(&self) -> Result<String> {
        let mut out = String::new();
        for rec in &self.history {
            out.push_str(&serde_json::to_string(rec)?);
            out.push('\n');
        }
        Ok(out)
    }

    fn parse_csv(text: &str, source: &str) -> Result<Vec<BoundRecord>> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let mut out = Vec::new();
        for (i, row) in r.deserialize::<BoundRecord>().enumerate() {
            let rec = row.map_err(|e| Error::parse(source, i + 2, e.to_string()))?;
            rec.check().map_err(|e| Error::parse(source, i + 2, e.to_string()))?;
            out.push(rec);
        }
        Ok(out)
    }

    fn parse_history(text: &str, source: &str) -> Result<Vec<BoundRecord>> {
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| serde_json::from_str(l).map_err(|e| Error::parse(source, i + 1, e.to_string())))
            .collect()
    }

    /// Rebuilds a ledger from its CSV and history texts. The CSV wins where they disagree.
    pub fn from_texts(csv_text: &str, history: &str) -> Result<Self> {
        let mut ledger = Ledger { current: BTreeMap::new(), history: Self::parse_history(history, "history")? };
        for rec in Self::parse_csv(csv_text, "ledger")? {
            ledger.current.insert((rec.n, rec.d), rec);
        }
        Ok(ledger)
    }

    /// Writes `<path>` as CSV and `<path>.history.jsonl` beside it.
    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.to_csv()?).map_err(|e| Error::io(path, e))?;
        let hist = history_path(path);
        fs::write(&hist, self.history_jsonl()?).map_err(|e| Error::io(&hist, e))
    }

    /// A missing file yields an empty ledger.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let read = |p: &Path| match fs::read_to_string(p) {
            Ok(t) => Ok(t),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(String::new()),
            Err(e) => Err(Error::io(p, e)),
        };
        let csv_text = read(path)?;
        let hist = read(&history_path(path))?;
        let mut ledger = Self::from_texts(&csv_text, &hist)?;
        if ledger.history.is_empty() {
            ledger.history = ledger.current.values().cloned().collect();
        }
        Ok(ledger)
    }

    /// Records and appends the one history line, rewriting the CSV only on improvement.
    pub fn record_to_disk(path: impl AsRef<Path>, rec: BoundRecord) -> Result<bool> {
        let path = path.as_ref();
        let mut ledger = Self::load(path)?;
        let improved = ledger.record(rec.clone())?;
        let hist = history_path(path);
        let mut f = fs::OpenOptions::new().create(true).append(true).open(&hist).map_err(|e| Error::io(&hist, e))?;
        writeln!(f, "{}", serde_json::to_string(&rec)?).map_err(|e| Error::io(&hist, e))?;
        if improved || !path.exists() {
            fs::write(path, ledger.to_csv()?).map_err(|e| Error::io(path, e))?;
        }
        Ok(improved)
    }
}

pub fn history_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".history.jsonl");
    PathBuf::from(s)
}

/// The published tables, named by what they list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PublishedTable {
    MinusTwo,
    Parallel,
    SimpleFromCosets,
    Coset,
    Aggregated,
    MinusOneLow,
    MinusOneHigh,
}

impl PublishedTable {
    pub const ALL: [PublishedTable; 7] = [
        PublishedTable::MinusTwo,
        PublishedTable::Parallel,
        PublishedTable::SimpleFromCosets,
        PublishedTable::Coset,
        PublishedTable::Aggregated,
        PublishedTable::MinusOneLow,
        PublishedTable::MinusOneHigh,
    ];

    pub fn citation(self) -> &'static str {
        match self {
            PublishedTable::MinusTwo => "published M(n,n-2) bounds from sequential partition and extension",
            PublishedTable::Parallel => "published bounds from parallel partition and extension",
            PublishedTable::SimpleFromCosets => "published bounds from simple extension of coset-search arrays",
            PublishedTable::Coset => "published coset-search bounds with group and coset count",
            PublishedTable::Aggregated => "published aggregate of new lower bounds, 18 <= n <= 531",
            PublishedTable::MinusOneLow => "published M(n,n-1) bounds, 26 <= n <= 294",
            PublishedTable::MinusOneHigh => "published M(n,n-1) bounds, 300 <= n <= 600",
        }
    }
}

impl fmt::Display for PublishedTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.citation())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PublishedBound {
    pub n: usize,
    pub d: usize,
    pub prev: Option<u64>,
    pub new: u64,
    /// Method subscript as printed, or the originating table for aggregated rows.
    pub tag: &'static str,
    pub table: PublishedTable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub d: usize,
    pub computed: u64,
    pub conjectured: u64,
}

impl ConjectureRow {
    pub const CITATION: &'static str = "published M(n,n-1) conjecture exceptions, n <= 600";
}

pub fn published_bounds() -> &'static [PublishedBound] {
    published::BOUNDS
}

pub fn published_conjecture_exceptions() -> &'static [ConjectureRow] {
    published::CONJECTURE_EXCEPTIONS
}

pub fn lookup(n: usize, d: usize) -> impl Iterator<Item = &'static PublishedBound> {
    published::BOUNDS.iter().filter(move |b| b.n == n && b.d == d)
}

/// Largest published new bound for (n, d) across all tables.
pub fn published_new(n: usize, d: usize) -> Option<u64> {
    lookup(n, d).map(|b| b.new).max()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Exceed,
    FallShort,
    NotPublished,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub n: usize,
    pub d: usize,
    pub constructed: u64,
    pub published: Option<u64>,
    pub verdict: Verdict,
}

/// Each constructed bound against the published new value.
pub fn compare_to_paper(ledger: &Ledger) -> Vec<Discrepancy> {
    ledger
        .current()
        .filter(|r| r.source == BoundSource::Constructed)
        .map(|r| {
            let published = published_new(r.n, r.d);
            let verdict = match published {
                None => Verdict::NotPublished,
                Some(p) if r.bound == p => Verdict::Match,
                Some(p) if r.bound > p => Verdict::Exceed,
                Some(_) => Verdict::FallShort,
            };
            Discrepancy { n: r.n, d: r.d, constructed: r.bound, published, verdict }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_lookup() {
        assert_eq!(published_new(39, 37), Some(1301));
        assert_eq!(published_new(118, 117), Some(936));
        assert_eq!(published_new(3, 1), None);
    }

    #[test]
    fn constructed_needs_artifact() {
        let rec = BoundRecord::new(5, 4, 12, "x", BoundSource::Constructed);
        assert!(Ledger::new().record(rec).is_err());
    }
}
