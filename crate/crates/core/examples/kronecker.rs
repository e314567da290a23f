//! Blockwise Kronecker products of affine cosets, plus their one-symbol extension.

use permarray::group::{agl1, cyclic_coset_decomposition};
use permarray::kron::{agl_kron_bound, lemma_one_check};
use permarray::ledger::published_new;
use permarray::verify::min_distance;

fn main() -> permarray::Result<()> {
    let a = cyclic_coset_decomposition(&agl1(3)?)?;
    let check = lemma_one_check(&a, &a)?;
    println!("AGL(1,3) x AGL(1,3): predicted {}, measured {}", check.predicted, check.measured);

    for (p, q) in [(3, 5), (4, 7), (9, 13)] {
        let k = agl_kron_bound(p, q)?;
        let n = k.array.n();
        let d = min_distance(&k.array, Some(n - 1))?;
        let published = published_new(n, n - 1).map_or("-".to_string(), |b| b.to_string());
        println!(
            "p={p:>2} q={q:>2}: M({n},{}) >= {} (distance {}, published {published})",
            n - 1,
            k.bound,
            d.min_distance_found
        );
    }
    Ok(())
}
