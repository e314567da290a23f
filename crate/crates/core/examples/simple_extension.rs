//! Extend two cyclic cosets of AGL(1,4) and append the third: 12 rows on 5 symbols at distance 4.

use permarray::extend::{simple_extend, PartitionSystem, Role};
use permarray::group::{agl1, cyclic_coset_decomposition};
use permarray::io::{format_pa, PaFile};
use permarray::verify::min_distance;

fn main() -> permarray::Result<()> {
    let mut blocks = cyclic_coset_decomposition(&agl1(4)?)?;
    blocks.truncate(3);
    let roles = vec![
        Role::Extend { positions: vec![0, 2], symbols: vec![0, 1] },
        Role::Extend { positions: vec![1, 3], symbols: vec![2, 3] },
        Role::Append,
    ];
    let sys = PartitionSystem::new(4, 4, blocks, roles)?;
    let report = sys.validate();
    println!("valid: {}, per-block sizes {:?}", report.is_valid(), sys.extension_sizes());
    let out = simple_extend(&sys)?;
    let d = min_distance(&out, None)?.min_distance_found;
    print!("{}", format_pa(&PaFile::with_standard_header(out, Some(d), &[])));
    Ok(())
}
