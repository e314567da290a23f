//! The rudimentary parallel extension of six 9-row blocks, and a (d,2) extension of AGL(1,11).

use permarray::extend::descriptor::{load_descriptor, LoadedSystem};
use permarray::extend::{parallel_2ext, parallel_rudimentary, PartitionSystem2};
use permarray::group::{agl1, cyclic_coset_decomposition};
use permarray::verify::min_distance;

fn main() -> permarray::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/shift_r3_n9.json");
    let LoadedSystem::Rudimentary { blocks, r, d } = load_descriptor(path)? else {
        panic!("{path} is not a rudimentary descriptor");
    };
    let out = parallel_rudimentary(&blocks, r, d)?;
    println!("rudimentary: {} rows on Z_{}, distance {}", out.len(), out.n(), min_distance(&out, None)?.min_distance_found);

    let q = 11;
    let blocks = cyclic_coset_decomposition(&agl1(q)?)?[..2].to_vec();
    let even: Vec<usize> = (0..q).step_by(2).collect();
    let odd: Vec<usize> = (1..q).step_by(2).collect();
    let low: Vec<usize> = (0..q / 2).collect();
    let high: Vec<usize> = (q / 2..q).collect();
    let sets = [
        vec![even.clone(), odd.clone()],
        vec![low.clone(), high.clone()],
        vec![odd, even],
        vec![high, low],
    ];
    let sys = PartitionSystem2::from_partitions(q, q, blocks, sets)?;
    let out = parallel_2ext(&sys)?;
    println!("2-extension: {} rows on Z_{}, distance {}", out.len(), out.n(), min_distance(&out, None)?.min_distance_found);
    Ok(())
}
