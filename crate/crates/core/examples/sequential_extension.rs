//! Two rounds of extension on AGL(1,37): six inner systems, then one outer system.
//!
//! Run from the crate root so the descriptor path resolves.

use permarray::extend::descriptor::{load_descriptor, LoadedSystem};
use permarray::extend::sequential_extend;
use permarray::verify::min_distance;

fn main() -> permarray::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/agl37_sequential.json");
    let LoadedSystem::Sequential { systems, outer } = load_descriptor(path)? else {
        panic!("{path} is not a sequential descriptor");
    };
    let out = sequential_extend(&systems, outer)?;
    let first: Vec<usize> = out.stage_one.iter().map(|a| a.len()).collect();
    println!("first round: {first:?} (total {})", first.iter().sum::<usize>());
    println!("second round keeps {:?}", out.stage_two.extension_sizes());
    let rep = min_distance(&out.output, None)?;
    println!("{} rows on Z_{}, distance {}", out.output.len(), out.output.n(), rep.min_distance_found);
    Ok(())
}
