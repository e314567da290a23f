//! Full, sampled and coset-structured distance checks on cosets of PGL(2,11).

use permarray::group::pgl2;
use permarray::search::{random_coset_search, SearchConfig};
use permarray::verify::{verify_pa, VerifyMode};
use permarray::{Permutation, PermutationArray};

fn main() -> permarray::Result<()> {
    let g = pgl2(11)?.into_base();
    let n = g.n();
    let cfg = SearchConfig { seed: 7, trial_budget: 4000, ..SearchConfig::default() };
    let mut reps = vec![Permutation::identity(n)];
    reps.extend(random_coset_search(&g, 7, &[], &cfg)?.found.into_iter().take(3));
    let cosets: Vec<PermutationArray> = reps.iter().map(|r| g.left_multiply(r)).collect::<Result<_, _>>()?;
    let a = PermutationArray::concat(n, &cosets)?;
    println!("{} rows from {} cosets", a.len(), reps.len());

    for (name, mode) in [
        ("full", VerifyMode::Full),
        ("sampled", VerifyMode::Sampled { pairs: 100_000, seed: 1 }),
        ("coset", VerifyMode::Coset { group: &g, reps: &reps, full_intra: false }),
    ] {
        let r = verify_pa(&a, 7, mode)?;
        println!("{name:>8}: distance {} over {} pairs, exact {}, passed {}", r.min_distance_found, r.pairs_checked, r.exact, r.passed());
    }
    Ok(())
}
