//! Random and ILP searches for coset representatives of AGL(1,7) at distance 4.

use permarray::group::agl1;
use permarray::search::{decode_coset_solution, ilp_coset_model, random_coset_search, solve_ilp, SearchConfig};
use permarray::verify::coset_min_distance;
use permarray::Permutation;

fn main() -> permarray::Result<()> {
    let g = agl1(7)?.into_base();
    let cfg = SearchConfig { seed: 2024, trial_budget: 20_000, ..SearchConfig::default() };
    let res = random_coset_search(&g, 4, &[], &cfg)?;
    println!("random: {} representatives from {} trials", res.found.len(), res.trials_run);
    let id = Permutation::identity(7);
    for (rep, (t, _)) in res.found.iter().zip(&res.trials) {
        println!("  trial {t:>5}: {:?} at distance {}", rep.as_slice(), coset_min_distance(&g, &id, rep)?);
    }

    let model = ilp_coset_model(&g, 4)?;
    let sol = solve_ilp(&model, &SearchConfig::default());
    if let Some(x) = sol.values {
        let rep = decode_coset_solution(&model, &x, 7)?;
        println!("ILP: {:?} at distance {}", rep.as_slice(), coset_min_distance(&g, &id, &rep)?);
    }
    Ok(())
}
