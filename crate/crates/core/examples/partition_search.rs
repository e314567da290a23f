//! Greedy and exact position partitions for cyclic cosets of AGL(1,13), with an LP export.

use permarray::group::{agl1, cyclic_coset_decomposition};
use permarray::search::{
    contiguous_partition, coverage_count, decode_partition, default_symbol_sets, export_lp, greedy_partition,
    ilp_partition_model, solve_ilp, SearchConfig,
};

fn main() -> permarray::Result<()> {
    let q = 13;
    let k = 3;
    let blocks = cyclic_coset_decomposition(&agl1(q)?)?[..k].to_vec();
    let symbols = default_symbol_sets(q, k)?;
    let trivial = coverage_count(&blocks, &contiguous_partition(q, k), &symbols);
    let greedy = greedy_partition(&blocks, Some(&symbols))?;
    println!("contiguous covers {trivial}, greedy covers {}", coverage_count(&blocks, &greedy, &symbols));

    let model = ilp_partition_model(&blocks, &symbols)?;
    let sol = solve_ilp(&model, &SearchConfig::default());
    println!("ILP: {:?} objective {:?} after {} nodes", sol.status, sol.objective, sol.nodes);
    if let Some(x) = &sol.values {
        println!("P = {:?}", decode_partition(&model, x, k, q)?);
    }
    let lp = export_lp(&model);
    println!("LP file: {} lines, first {:?}", lp.lines().count(), lp.lines().take(2).collect::<Vec<_>>());
    Ok(())
}
