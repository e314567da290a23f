use std::collections::HashSet;

use permarray::field::{is_prime_power, make_field, prime_power};
use permarray::group::{agl1, block_decomposition, check_group, cyclic_coset_decomposition, pgammal2, pgl2, ElementLabel};
use permarray::latin::{latin_to_pa, mols_prime_power, orthogonal};
use permarray::verify::{cross_distance, min_distance};
use proptest::prelude::*;

const PRIME_POWERS: [usize; 14] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49];

fn trial_division_prime_power(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|p| q % p == 0).unwrap();
    let mut r = q;
    while r % p == 0 {
        r /= p;
    }
    r == 1
}

#[test]
fn prime_power_detection_matches_trial_division() {
    for q in 0..2000 {
        assert_eq!(is_prime_power(q), trial_division_prime_power(q), "q = {q}");
    }
    assert_eq!(prime_power(243), Some((3, 5)));
    assert_eq!(prime_power(1024), Some((2, 10)));
    assert!(make_field(6).is_err());
}

#[test]
fn field_axioms_hold_exhaustively() {
    for q in PRIME_POWERS {
        let f = make_field(q).unwrap();
        let els: Vec<_> = f.elements().collect();
        assert_eq!(els.len(), q);
        for &a in &els {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                if q <= 16 {
                    for &c in &els {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
        }
        assert!(f.inv(0).is_err());
    }
}

#[test]
fn primitive_element_generates_the_multiplicative_group() {
    for q in PRIME_POWERS {
        let f = make_field(q).unwrap();
        let g = f.primitive_element();
        let powers: HashSet<_> = (0..q - 1).map(|e| f.pow(g, e)).collect();
        assert_eq!(powers.len(), q - 1, "q = {q}");
    }
}

#[test]
fn frobenius_is_a_field_automorphism() {
    for q in [4, 8, 9, 25, 27, 32] {
        let f = make_field(q).unwrap();
        for a in f.elements() {
            assert_eq!(f.frobenius(a, f.k()), a);
            for b in f.elements() {
                assert_eq!(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
                assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
            }
        }
    }
}

#[test]
fn group_orders_and_distances() {
    for q in [4usize, 5, 7, 8, 9, 11] {
        let a = agl1(q).unwrap();
        let p = pgl2(q).unwrap();
        assert_eq!(a.len(), q * (q - 1));
        assert_eq!(p.len(), q * (q * q - 1));
        assert_eq!(min_distance(a.base(), None).unwrap().min_distance_found, q - 1);
        assert_eq!(min_distance(p.base(), None).unwrap().min_distance_found, q - 1);
        check_group(a.base(), 200, 1).unwrap();
        check_group(p.base(), 200, 2).unwrap();
    }
}

#[test]
fn semilinear_group_orders() {
    for q in [4usize, 8, 9, 16] {
        let (_, k) = prime_power(q).unwrap();
        let g = pgammal2(q).unwrap();
        assert_eq!(g.len(), q * (q * q - 1) * k);
        check_group(g.base(), 200, 3).unwrap();
    }
}

#[test]
fn affine_labels_describe_their_rows() {
    let q = 9;
    let f = make_field(q).unwrap();
    let g = agl1(q).unwrap();
    for (i, label) in g.labels().unwrap().iter().enumerate() {
        let ElementLabel::Affine { a, b } = *label else { panic!("not affine") };
        let row: Vec<u16> = f.elements().map(|x| f.add(f.mul(a, x), b)).collect();
        assert_eq!(g.base().row(i), row.as_slice());
    }
}

#[test]
fn decompositions_partition_the_group_into_sharp_blocks() {
    for g in [agl1(7).unwrap(), agl1(8).unwrap(), pgl2(7).unwrap(), pgl2(9).unwrap(), pgammal2(4).unwrap()] {
        let blocks = block_decomposition(&g).unwrap();
        let n = g.n();
        let mut seen = HashSet::new();
        for b in &blocks {
            assert_eq!(min_distance(b, None).unwrap().min_distance_found, n);
            for r in b.rows() {
                assert!(seen.insert(r.to_vec()));
                assert!(g.base().position(r).is_some());
            }
        }
        assert_eq!(seen.len(), g.len());
    }
}

#[test]
fn cyclic_cosets_follow_the_multiplier() {
    let q = 7;
    let blocks = cyclic_coset_decomposition(&agl1(q).unwrap()).unwrap();
    assert_eq!(blocks.len(), q - 1);
    for (i, b) in blocks.iter().enumerate() {
        let a = i + 1;
        for r in b.rows() {
            let shift = r[0] as usize;
            for x in 0..q {
                assert_eq!(r[x] as usize, (a * x + shift) % q);
            }
        }
    }
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            assert_eq!(cross_distance(&blocks[i], &blocks[j]).unwrap(), q - 1);
        }
    }
}

#[test]
fn prime_power_mols_are_mutually_orthogonal() {
    for q in [3, 4, 5, 7, 8, 9] {
        let set = mols_prime_power(q).unwrap();
        assert_eq!(set.len(), q - 1);
        let sq = set.squares();
        for i in 0..sq.len() {
            assert_eq!(min_distance(&latin_to_pa(&sq[i]), None).unwrap().min_distance_found, q);
            for j in i + 1..sq.len() {
                assert!(orthogonal(&sq[i], &sq[j]));
            }
        }
    }
}

proptest! {
    #[test]
    fn division_inverts_multiplication(qi in 0usize..PRIME_POWERS.len(), a in 0u16..64, b in 1u16..64) {
        let q = PRIME_POWERS[qi];
        let f = make_field(q).unwrap();
        let (a, b) = (a % q as u16, 1 + (b - 1) % (q as u16 - 1));
        prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
    }
}
