//! Text formats.
//!
//! Permutation arrays: optional `#` header lines of space-separated `key=value` pairs,
//! then one row per line as space-separated decimal symbols, LF endings, no trailing
//! spaces:
//!
//! ```text
//! # n=3 d=2 count=3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```
//!
//! Latin squares are m lines of m symbols; a MOLS set separates its squares with `#` lines.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::latin::{LatinSquare, MolsSet};
use crate::perm::{check_bijective, write_row, PermutationArray, Symbol};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaFile {
    pub array: PermutationArray,
    /// Header lines without the leading `# `.
    pub header: Vec<String>,
}

impl PaFile {
    pub fn new(array: PermutationArray, header: Vec<String>) -> Self {
        PaFile { array, header }
    }

    /// A file whose first header line is `n=.. [d=..] count=..`.
    pub fn with_standard_header(array: PermutationArray, d: Option<usize>, extra: &[(&str, String)]) -> Self {
        let mut first = format!("n={}", array.n());
        if let Some(d) = d {
            let _ = write!(first, " d={d}");
        }
        let _ = write!(first, " count={}", array.len());
        let mut header = vec![first];
        if !extra.is_empty() {
            header.push(extra.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" "));
        }
        PaFile { array, header }
    }

    /// Value of `key` in the first header line that sets it.
    pub fn header_value(&self, key: &str) -> Option<&str> {
        header_pairs(&self.header).find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn header_map(&self) -> HashMap<&str, &str> {
        header_pairs(&self.header).collect()
    }
}

fn header_pairs(lines: &[String]) -> impl Iterator<Item = (&str, &str)> {
    lines.iter().flat_map(|l| l.split_whitespace()).filter_map(|t| t.split_once('='))
}

pub fn format_pa(file: &PaFile) -> String {
    let mut s = String::with_capacity(file.array.as_flat().len() * 3 + 64);
    for h in &file.header {
        s.push_str("# ");
        s.push_str(h);
        s.push('\n');
    }
    for row in file.array.rows() {
        write_row(&mut s, row).expect("writing to a String");
        s.push('\n');
    }
    s
}

pub fn write_pa(path: impl AsRef<Path>, file: &PaFile) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, format_pa(file)).map_err(|e| Error::io(path, e))
}

pub fn read_pa(path: impl AsRef<Path>) -> Result<PaFile> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_pa(&text, &path.display().to_string())
}

/// Parses PA text; `source` names the input in error messages.
pub fn parse_pa(text: &str, source: &str) -> Result<PaFile> {
    let mut header = Vec::new();
    let mut data: Vec<Symbol> = Vec::new();
    let mut n: Option<usize> = None;
    let mut seen: HashMap<Vec<Symbol>, usize> = HashMap::new();
    for (k, line) in text.lines().enumerate() {
        let lineno = k + 1;
        if let Some(h) = line.strip_prefix('#') {
            header.push(h.strip_prefix(' ').unwrap_or(h).to_string());
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<Symbol>().map_err(|_| Error::parse(source, lineno, format!("bad symbol {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        match n {
            None => n = Some(row.len()),
            Some(n) if n != row.len() => {
                return Err(Error::parse(source, lineno, format!("row has {} symbols, expected {n}", row.len())));
            }
            _ => {}
        }
        check_bijective(&row).map_err(|e| Error::parse(source, lineno, e.to_string()))?;
        if let Some(first) = seen.insert(row.clone(), lineno) {
            return Err(Error::parse(source, lineno, format!("duplicate of line {first}")));
        }
        data.extend(row);
    }
    let pairs: HashMap<&str, &str> = header_pairs(&header).collect();
    let declared_n = match pairs.get("n") {
        Some(v) => Some(v.parse::<usize>().map_err(|_| Error::parse(source, 1, format!("bad n={v}")))?),
        None => None,
    };
    let n = match (n, declared_n) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::parse(source, 1, format!("header says n={b}, rows have {a} symbols")));
        }
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) => return Err(Error::parse(source, 1, "no rows and no n= header")),
    };
    let array = PermutationArray::from_flat(n, data)?;
    if let Some(c) = pairs.get("count") {
        if c.parse::<usize>().ok() != Some(array.len()) {
            return Err(Error::parse(source, 1, format!("header says count={c}, found {} rows", array.len())));
        }
    }
    Ok(PaFile { array, header })
}

pub fn format_latin(l: &LatinSquare) -> String {
    let mut s = String::new();
    for i in 0..l.order() {
        write_row(&mut s, l.row(i)).expect("writing to a String");
        s.push('\n');
    }
    s
}

pub fn parse_latin(text: &str) -> Result<LatinSquare> {
    let rows = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(k, l)| {
            l.split_whitespace()
                .map(|t| t.parse::<Symbol>().map_err(|_| Error::parse("latin square", k + 1, format!("bad symbol {t:?}"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let m = rows.len();
    LatinSquare::new(m, rows.into_iter().flatten().collect())
}

pub fn format_mols(set: &MolsSet) -> String {
    let parts: Vec<String> = set.squares().iter().map(format_latin).collect();
    parts.join("#\n")
}

pub fn parse_mols(text: &str) -> Result<MolsSet> {
    let mut chunks = vec![String::new()];
    for line in text.lines() {
        if line.starts_with('#') {
            chunks.push(String::new());
        } else {
            let c = chunks.last_mut().expect("non-empty");
            c.push_str(line);
            c.push('\n');
        }
    }
    let squares = chunks
        .iter()
        .filter(|c| !c.trim().is_empty())
        .map(|c| parse_latin(c))
        .collect::<Result<Vec<_>>>()?;
    let m = squares.first().map_or(0, |s| s.order());
    MolsSet::new(m, squares)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    #[test]
    fn round_trip_is_byte_exact() {
        let a = PermutationArray::new(3, [Permutation::identity(3), Permutation::from_slice(&[1, 2, 0]).unwrap()])
            .unwrap();
        let f = PaFile::with_standard_header(a, Some(3), &[("family", "cyclic".into())]);
        let text = format_pa(&f);
        assert_eq!(text, "# n=3 d=3 count=2\n# family=cyclic\n0 1 2\n1 2 0\n");
        let back = parse_pa(&text, "t").unwrap();
        assert_eq!(back, f);
        assert_eq!(format_pa(&back), text);
        assert_eq!(back.header_value("family"), Some("cyclic"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_pa("# n=3\n0 1 2\n0 0 1\n", "x.pa").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse_pa("0 1 2\n0 1\n", "x.pa").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse_pa("0 1 x\n", "x.pa").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }), "{e}");
    }

    #[test]
    fn mols_round_trip() {
        let set = crate::latin::mols_prime_power(4).unwrap();
        let text = format_mols(&set);
        assert_eq!(parse_mols(&text).unwrap(), set);
    }
}
