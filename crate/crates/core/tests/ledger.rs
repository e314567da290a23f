use std::collections::HashSet;

use permarray::ledger::{
    compare_to_paper, conjecture_check, conjecture_rhs, history_path, lookup, published_bounds,
    published_conjecture_exceptions, published_new, BoundRecord, BoundSource, ConjectureRow, Ledger, MolsCountEntry,
    MolsCounts, PublishedTable, Verdict,
};
use permarray::verify::DistanceMode;
use proptest::prelude::*;

fn constructed(n: usize, d: usize, bound: u64) -> BoundRecord {
    BoundRecord::constructed(n, d, bound, "test", format!("out/{n}_{d}.pa"), DistanceMode::Full)
}

proptest! {
    #[test]
    fn ledger_keeps_the_running_maximum(bounds in prop::collection::vec((3usize..6, 1u64..2000), 1..40)) {
        let mut ledger = Ledger::new();
        for &(n, b) in &bounds {
            let before = ledger.get(n, n - 1).map(|r| r.bound);
            let improved = ledger.record(constructed(n, n - 1, b)).unwrap();
            prop_assert_eq!(improved, before.is_none_or(|x| b > x));
            let after = ledger.get(n, n - 1).unwrap().bound;
            prop_assert!(after >= before.unwrap_or(0));
        }
        for n in 3..6 {
            let best = bounds.iter().filter(|(m, _)| *m == n).map(|(_, b)| *b).max();
            prop_assert_eq!(ledger.get(n, n - 1).map(|r| r.bound), best);
        }
        prop_assert_eq!(ledger.history().len(), bounds.len());
        let back = Ledger::from_texts(&ledger.to_csv().unwrap(), &ledger.history_jsonl().unwrap()).unwrap();
        prop_assert_eq!(back, ledger);
    }
}

#[test]
fn a_weaker_record_never_overwrites() {
    let mut ledger = Ledger::new();
    assert!(ledger.record(constructed(39, 37, 1301)).unwrap());
    assert!(!ledger.record(BoundRecord::new(39, 37, 195, "previous", BoundSource::Imported)).unwrap());
    assert_eq!(ledger.get(39, 37).unwrap().bound, 1301);
    assert_eq!(ledger.history().len(), 2);
}

#[test]
fn disk_round_trip_and_history_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bounds.csv");
    assert!(Ledger::load(&path).unwrap().is_empty());
    assert!(Ledger::record_to_disk(&path, constructed(5, 4, 12)).unwrap());
    assert!(!Ledger::record_to_disk(&path, constructed(5, 4, 10)).unwrap());
    assert!(Ledger::record_to_disk(&path, constructed(118, 117, 936)).unwrap());
    let loaded = Ledger::load(&path).unwrap();
    assert_eq!(loaded.len(), 2);
    assert_eq!(loaded.get(5, 4).unwrap().bound, 12);
    assert_eq!(loaded.history().len(), 3);
    let hist = std::fs::read_to_string(history_path(&path)).unwrap();
    assert_eq!(hist.lines().count(), 3);
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("n,d,bound,method,source,artifact,verified_mode\n"));
    assert!(csv.contains("5,4,12,test,constructed,out/5_4.pa,full"));
}

#[test]
fn invalid_records_are_refused() {
    let mut ledger = Ledger::new();
    assert!(ledger.record(BoundRecord::new(5, 6, 3, "x", BoundSource::Imported)).is_err());
    assert!(ledger.record(BoundRecord::new(5, 4, 0, "x", BoundSource::Imported)).is_err());
    assert!(ledger.record(BoundRecord::new(5, 4, 3, "a\nb", BoundSource::Imported)).is_err());
    assert!(ledger.record(BoundRecord::new(5, 4, 3, "x", BoundSource::Constructed)).is_err());
    assert!(ledger.is_empty());
    assert!(Ledger::from_texts("n,d,bound\n1,2", "").is_err());
}

#[test]
fn comparison_against_published_values() {
    let mut ledger = Ledger::new();
    ledger.record(constructed(39, 37, 1301)).unwrap();
    ledger.record(constructed(118, 117, 936)).unwrap();
    ledger.record(constructed(7, 6, 42)).unwrap();
    ledger.record(BoundRecord::new(40, 34, 5, "imported", BoundSource::Imported)).unwrap();
    let verdicts: Vec<_> = compare_to_paper(&ledger).into_iter().map(|d| (d.n, d.d, d.verdict)).collect();
    assert!(verdicts.contains(&(39, 37, Verdict::Match)));
    assert!(verdicts.contains(&(118, 117, Verdict::Match)));
    assert!(verdicts.contains(&(7, 6, Verdict::NotPublished)));
    assert_eq!(verdicts.len(), 3, "imported rows are not compared");
    let mut weaker = Ledger::new();
    weaker.record(constructed(39, 37, 959)).unwrap();
    let d = &compare_to_paper(&weaker)[0];
    assert_eq!((d.published, d.verdict), (Some(1301), Verdict::FallShort));
}

#[test]
fn published_tables_are_consistent() {
    let all = published_bounds();
    assert!(all.len() > 400);
    let tables: HashSet<_> = all.iter().map(|b| b.table).collect();
    assert_eq!(tables.len(), PublishedTable::ALL.len());
    for b in all {
        assert!(b.d <= b.n, "{b:?}");
        assert!(b.prev.is_none_or(|p| p < b.new), "{b:?}");
    }
    assert_eq!(lookup(39, 37).map(|b| b.new).max(), Some(1301));
    assert_eq!(published_new(40, 34), lookup(40, 34).map(|b| b.new).max());
}

#[test]
fn citations_are_neutral() {
    let mut texts: Vec<&str> = PublishedTable::ALL.iter().map(|t| t.citation()).collect();
    texts.push(ConjectureRow::CITATION);
    let seen: HashSet<_> = texts.iter().collect();
    assert_eq!(seen.len(), texts.len());
    for t in texts {
        let lower = t.to_lowercase();
        assert!(!t.is_empty());
        for word in ["paper", "table", "arxiv", "theorem", "section"] {
            assert!(!lower.contains(word), "{t:?} mentions {word}");
        }
    }
}

#[test]
fn conjecture_exceptions_are_exactly_the_four_rows() {
    let counts = MolsCounts::embedded();
    let rows = published_conjecture_exceptions();
    assert_eq!(rows.len(), 4);
    for r in rows {
        let v = conjecture_check(r.n, r.computed, &counts).unwrap();
        assert_eq!(v.rhs, r.conjectured);
        assert!(!v.holds);
        assert!(conjecture_check(r.n, r.conjectured, &counts).unwrap().holds);
    }
}

#[test]
fn conjecture_holds_where_constructions_reach_it() {
    let counts = MolsCounts::embedded();
    // n − 1 = 117 is not a prime power, so N(117) comes from the embedded data.
    let v = conjecture_check(118, 936, &counts).unwrap();
    assert_eq!((v.mols, v.rhs, v.holds), (8, 936, true));
    // For prime powers n − 1 = q the bound min(√q, q − 1) · q needs no data.
    assert_eq!(conjecture_rhs(38, &MolsCounts::new()).unwrap(), 37 * 6);
    assert!(conjecture_rhs(11, &MolsCounts::new()).is_err());
    assert_eq!(conjecture_rhs(11, &MolsCounts::new().with_product_fallback()).unwrap(), 10);
}

#[test]
fn mols_counts_from_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n.csv");
    std::fs::write(&path, "n,n_lower,provenance\n10,2,known\n12,5,known\n").unwrap();
    let mut c = MolsCounts::load_csv(&path).unwrap();
    assert_eq!(c.get(12).unwrap().n_lower, 5);
    c.merge(MolsCounts::embedded());
    assert_eq!(c.get(117).unwrap().n_lower, 8);
    assert_eq!(c.get(10).unwrap().n_lower, 2);
    std::fs::write(&path, "n,n_lower,provenance\n9,8,bad\n").unwrap();
    assert!(MolsCounts::load_csv(&path).is_err());
    assert!(MolsCounts::new().insert(MolsCountEntry { n: 10, n_lower: 10, provenance: String::new() }).is_err());
}
