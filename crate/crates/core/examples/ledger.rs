//! Record bounds, compare them with the published values and run the conjecture check.

use permarray::ledger::{
    compare_to_paper, conjecture_check, published_conjecture_exceptions, BoundRecord, BoundSource, Ledger, MolsCounts,
};
use permarray::verify::DistanceMode;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("permarray-ledger-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("bounds.csv");
    let _ = std::fs::remove_file(&path);
    let _ = std::fs::remove_file(permarray::ledger::history_path(&path));

    Ledger::record_to_disk(&path, BoundRecord::new(39, 37, 195, "previous", BoundSource::Imported))?;
    Ledger::record_to_disk(&path, BoundRecord::constructed(39, 37, 959, "sequential", "seq.pa", DistanceMode::Full))?;
    Ledger::record_to_disk(&path, BoundRecord::constructed(118, 117, 936, "kronecker", "k.pa", DistanceMode::Full))?;
    let ledger = Ledger::load(&path)?;
    print!("{}", ledger.to_csv()?);
    for d in compare_to_paper(&ledger) {
        println!("M({},{}): {} vs {:?} -> {:?}", d.n, d.d, d.constructed, d.published, d.verdict);
    }

    let counts = MolsCounts::embedded();
    for row in published_conjecture_exceptions() {
        let v = conjecture_check(row.n, row.computed, &counts)?;
        println!("n={}: {} < {} (N({}) >= {})", v.n, v.bound, v.rhs, v.n - 1, v.mols);
    }
    Ok(())
}
