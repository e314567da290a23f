use permarray::extend::descriptor::{load_descriptor, LoadedSystem};
use permarray::extend::{
    extend_by_position, parallel_2ext, parallel_rudimentary, sequential_extend, shift, simple_extend, PartitionSystem,
    PartitionSystem2, Role, Violation,
};
use permarray::group::{agl1, cyclic_coset_decomposition};
use permarray::io::read_pa;
use permarray::kron::{agl_kron_bound, kron_blockwise, kron_extend_bound, kron_mols_bound, kronecker, lemma_one_check};
use permarray::latin::mols_prime_power;
use permarray::search::{coverage_count, default_symbol_sets, greedy_partition};
use permarray::verify::{min_distance, verify_pa, VerifyMode};
use permarray::{Error, Permutation, PermutationArray};
use proptest::prelude::*;

fn data(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn agl_blocks(q: usize) -> Vec<PermutationArray> {
    cyclic_coset_decomposition(&agl1(q).unwrap()).unwrap()
}

fn random_partition(n: usize, k: usize, order: &[usize]) -> Vec<Vec<usize>> {
    let mut sets = vec![Vec::new(); k];
    for (i, &x) in order.iter().enumerate() {
        sets[i % k].push(x);
    }
    assert_eq!(sets.iter().map(Vec::len).sum::<usize>(), n);
    sets
}

fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

#[test]
fn agl4_descriptor_reproduces_the_golden_array() {
    let LoadedSystem::Simple(sys) = load_descriptor(data("agl4_simple.json")).unwrap() else { panic!() };
    let out = simple_extend(&sys).unwrap();
    assert_eq!(out, read_pa(data("agl4_simple_ext.pa")).unwrap().array);
    assert_eq!(min_distance(&out, None).unwrap().min_distance_found, 4);
}

#[test]
fn extension_moves_the_displaced_symbol_to_the_end() {
    assert_eq!(extend_by_position(&[2, 0, 3, 1], 1), vec![2, 4, 3, 1, 0]);
    assert_eq!(extend_by_position(&[2, 0, 3, 1], 3), vec![2, 0, 3, 4, 1]);
}

#[test]
fn rudimentary_golden_and_shift() {
    assert_eq!(shift(9, 3, 2), vec![11, 9, 10]);
    let LoadedSystem::Rudimentary { blocks, r, d } = load_descriptor(data("shift_r3_n9.json")).unwrap() else { panic!() };
    let out = parallel_rudimentary(&blocks, r, d).unwrap();
    assert_eq!(out, read_pa(data("shift_r3_n9_ext.pa")).unwrap().array);
    assert!(parallel_rudimentary(&blocks[..5], r, d).is_err());
}

#[test]
fn invalid_systems_are_rejected_with_the_failing_clause() {
    let blocks: Vec<_> = agl_blocks(5).into_iter().take(2).collect();
    let overlapping = PartitionSystem::from_partitions(
        5,
        5,
        blocks.clone(),
        vec![vec![0, 1, 2], vec![2, 3, 4]],
        vec![vec![0, 1], vec![2, 3, 4]],
    )
    .unwrap();
    assert!(matches!(overlapping.validate().violation, Some(Violation::NotDisjoint { .. })));
    assert!(matches!(simple_extend(&overlapping), Err(Error::InvalidSystem(_))));

    let missing =
        PartitionSystem::from_partitions(5, 5, blocks.clone(), vec![vec![0, 1], vec![2, 3]], vec![vec![0, 1], vec![2, 3, 4]])
            .unwrap();
    assert!(matches!(missing.validate().violation, Some(Violation::NotCovering { missing: 4, .. })));

    let too_far =
        PartitionSystem::from_partitions(5, 6, blocks, vec![vec![0, 1], vec![2, 3, 4]], vec![vec![0, 1], vec![2, 3, 4]])
            .unwrap();
    assert!(matches!(too_far.validate().violation, Some(Violation::IntraDistance { .. })));

    let two_appends = PartitionSystem::new(5, 5, agl_blocks(5)[..2].to_vec(), vec![Role::Append, Role::Append]).unwrap();
    assert!(matches!(two_appends.validate().violation, Some(Violation::TooManyAppendBlocks(2))));
}

#[test]
fn sequential_extension_keeps_the_distance() {
    let q = 7;
    let blocks = agl_blocks(q);
    let mut systems = Vec::new();
    for chunk in blocks.chunks(2) {
        let qs = default_symbol_sets(q, chunk.len()).unwrap();
        let p = greedy_partition(chunk, Some(&qs)).unwrap();
        systems.push(PartitionSystem::from_partitions(q, q, chunk.to_vec(), p, qs).unwrap());
    }
    let outer = vec![
        Role::Extend { positions: (0..q + 1).step_by(3).collect(), symbols: (0..3).collect() },
        Role::Extend { positions: (1..q + 1).step_by(3).collect(), symbols: (3..6).collect() },
        Role::Extend { positions: (2..q + 1).step_by(3).collect(), symbols: (6..q + 1).collect() },
    ];
    let out = sequential_extend(&systems, outer).unwrap();
    assert_eq!(out.output.n(), q + 2);
    assert_eq!(out.output.len(), out.stage_two.extension_sizes().iter().sum::<usize>());
    assert!(min_distance(&out.output, None).unwrap().min_distance_found >= q);
}

#[test]
fn kronecker_of_9_and_13_gives_936_rows() {
    let k = agl_kron_bound(9, 13).unwrap();
    assert_eq!((k.array.len(), k.array.n(), k.bound), (936, 118, 936));
    assert!(verify_pa(&k.array, 117, VerifyMode::Full).unwrap().passed());
    let via_mols = kron_mols_bound(&mols_prime_power(9).unwrap(), &mols_prime_power(13).unwrap()).unwrap();
    assert_eq!(via_mols.bound, 936);
}

#[test]
fn lemma_one_is_tight_on_small_affine_blocks() {
    for (p, q) in [(3, 3), (3, 4), (4, 5)] {
        let k = p.min(q) - 1;
        let a = agl_blocks(p)[..k].to_vec();
        let b = agl_blocks(q)[..k].to_vec();
        let check = lemma_one_check(&a, &b).unwrap();
        assert!(check.holds(), "{check:?}");
        assert_eq!(check.predicted, p * q - 1);
        assert_eq!(min_distance(&kron_blockwise(&a, &b).unwrap(), None).unwrap().min_distance_found, check.measured);
    }
}

#[test]
fn kron_extension_with_more_blocks_than_symbols_fails() {
    let a = agl_blocks(3);
    let b = agl_blocks(3);
    let mut a4 = a.clone();
    a4.extend(a.clone());
    let mut b4 = b.clone();
    b4.extend(b);
    assert!(kron_extend_bound(&a4, &b4).is_err());
}

proptest! {
    #[test]
    fn kronecker_distance_formula((ra, rb, sa, sb) in (perm(4), perm(5), perm(4), perm(5))) {
        let x = PermutationArray::new(4, [Permutation::from_slice(&ra).unwrap(), Permutation::from_slice(&sa).unwrap()]);
        let y = PermutationArray::new(5, [Permutation::from_slice(&rb).unwrap(), Permutation::from_slice(&sb).unwrap()]);
        prop_assume!(x.is_ok() && y.is_ok());
        let (x, y) = (x.unwrap(), y.unwrap());
        let k = kronecker(&x, &y).unwrap();
        let hx = ra.iter().zip(&sa).filter(|(a, b)| a != b).count();
        let hy = rb.iter().zip(&sb).filter(|(a, b)| a != b).count();
        // rows (0,0) and (1,1)
        let got = k.row(0).iter().zip(k.row(3)).filter(|(a, b)| a != b).count();
        prop_assert_eq!(got, 5 * hx + (4 - hx) * hy);
    }

    #[test]
    fn random_affine_systems_extend_to_distance_d(
        qi in 0usize..4,
        k in 1usize..4,
        seed_p in perm(11),
        seed_q in perm(11),
        append in any::<bool>(),
    ) {
        let q = [5usize, 7, 8, 11][qi];
        let order_p: Vec<usize> = seed_p.into_iter().filter(|&x| x < q).collect();
        let order_q: Vec<usize> = seed_q.into_iter().filter(|&x| x < q).collect();
        let blocks = agl_blocks(q)[..k + usize::from(append)].to_vec();
        let p = random_partition(q, k, &order_p);
        let qs = random_partition(q, k, &order_q);
        let expected = coverage_count(&blocks[..k], &p, &qs) + if append { q } else { 0 };
        let sys = PartitionSystem::from_partitions(q, q, blocks, p, qs).unwrap();
        prop_assert!(sys.validate().is_valid());
        let out = simple_extend(&sys).unwrap();
        prop_assert_eq!(out.len(), expected);
        prop_assert_eq!(out.n(), q + 1);
        prop_assert!(verify_pa(&out, q, VerifyMode::Full).unwrap().passed());
    }

    #[test]
    fn random_pair_systems_extend_to_distance_d(qi in 0usize..3, seed_p in perm(11), seed_q in perm(11)) {
        let q = [7usize, 9, 11][qi];
        let keep = |v: Vec<usize>| v.into_iter().filter(|&x| x < q).collect::<Vec<_>>();
        let p = random_partition(q, 2, &keep(seed_p));
        let qs = random_partition(q, 2, &keep(seed_q));
        // With two sets, R_i = P_{1-i} and S_i = Q_{1-i} never meet P_i and Q_i.
        let r = vec![p[1].clone(), p[0].clone()];
        let s = vec![qs[1].clone(), qs[0].clone()];
        let sys = PartitionSystem2::from_partitions(q, q, agl_blocks(q)[..2].to_vec(), [p, qs, r, s]).unwrap();
        prop_assert!(sys.validate().is_valid(), "{:?}", sys.validate().violation);
        let out = parallel_2ext(&sys).unwrap();
        prop_assert_eq!(out.n(), q + 2);
        prop_assert_eq!(out.len(), sys.coverage().iter().map(|c| c.designated.len()).sum::<usize>());
        prop_assert!(verify_pa(&out, q, VerifyMode::Full).unwrap().passed());
    }
}
