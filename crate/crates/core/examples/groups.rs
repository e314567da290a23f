//! Generate the seed groups, decompose them into blocks and certify their distances.

use permarray::group::{agl1, block_decomposition, pgammal2, pgl2};
use permarray::verify::{group_min_distance, min_distance};

fn main() -> permarray::Result<()> {
    for q in [5, 8, 9, 16] {
        for g in [agl1(q)?, pgl2(q)?, pgammal2(q)?] {
            let (d, _) = group_min_distance(g.base())?;
            let blocks = block_decomposition(&g)?;
            let sharp = blocks.iter().all(|b| min_distance(b, None).map(|r| r.min_distance_found == g.n()).unwrap_or(false));
            println!(
                "{:>8}({q:>2}): {:>6} rows on {:>2} symbols, distance {d}, {} blocks of {}{}",
                g.family().to_string(),
                g.len(),
                g.n(),
                blocks.len(),
                g.n(),
                if sharp { "" } else { " (not sharp)" }
            );
        }
    }
    Ok(())
}
