mod common;

use std::cmp::Ordering;

use common::{block_value, decompositions, naive_is_lyndon, vectors};
use num_bigint::{BigInt, BigUint};
use wordrecon_core::bounds::{
    binary_baseline, binary_baselines, count_small_coefficient_words, general_baseline,
    kr_threshold, lyndon_count, mobius, our_binary_bound, our_general_bound,
    our_general_bound_by_frequency, BoundReport, QuadraticSurd,
};
use wordrecon_core::{Alphabet, Word};

fn naive_mobius(d: u64) -> i8 {
    let mut factors = Vec::new();
    let mut rest = d;
    for p in 2..=d {
        while rest.is_multiple_of(p) {
            factors.push(p);
            rest /= p;
        }
    }
    let mut distinct = factors.clone();
    distinct.dedup();
    if distinct.len() < factors.len() {
        0
    } else if factors.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

#[test]
fn mobius_values() {
    assert_eq!((mobius(1), mobius(4), mobius(6)), (1, 0, 1));
    for d in 1..=500 {
        assert_eq!(mobius(d), naive_mobius(d), "{d}");
    }
}

#[test]
fn lyndon_counts_match_enumeration() {
    for (q, max) in [(2u32, 12usize), (3, 7), (4, 5)] {
        for i in 1..=max {
            let listed = vectors(q, i).iter().filter(|v| naive_is_lyndon(v)).count();
            assert_eq!(
                lyndon_count(q as u64, i as u64),
                BigUint::from(listed),
                "q={q} i={i}"
            );
        }
    }
    assert_eq!(lyndon_count(2, 6), BigUint::from(9u32));
    assert_eq!(lyndon_count(1, 1), BigUint::from(1u32));
    assert_eq!(lyndon_count(1, 5), BigUint::from(0u32));
}

#[test]
fn threshold_is_exact() {
    assert_eq!(
        (kr_threshold(49), kr_threshold(1), kr_threshold(16)),
        (21, 7, 14)
    );
    for n in 1..=20_000u64 {
        let mut t = 0;
        while 49 * (t + 1) * (t + 1) <= 256 * n {
            t += 1;
        }
        assert_eq!(kr_threshold(n), t + 5, "{n}");
    }
}

#[test]
fn binary_baseline_values() {
    let seven: BigUint = (1..=11).map(|i| lyndon_count(2, i)).sum();
    assert_eq!(kr_threshold(7), 11);
    assert_eq!(binary_baseline(7), seven);
    assert!(binary_baseline(7) > BigUint::from(4u32));
    assert!(binary_baseline(100) > BigUint::from(51u32));
    let table = binary_baselines(300);
    for n in 1..=300u64 {
        assert_eq!(table[n as usize - 1], binary_baseline(n));
    }
}

#[test]
fn binary_sweep_prefix() {
    let table = binary_baselines(2000);
    for n in 7..=2000u64 {
        assert!(table[n as usize - 1] > BigUint::from(n / 2 + 1), "{n}");
    }
}

/// Largest `Σ_i c_i (q + 1 − i)` over letter counts `c` summing to `n`.
fn worst_distribution(n: u64, q: u64) -> u64 {
    fn go(q: u64, index: u64, left: u64) -> u64 {
        let weight = q - index;
        if index + 1 == q {
            return left * weight;
        }
        (0..=left)
            .map(|c| c * weight + go(q, index + 1, left - c))
            .max()
            .unwrap()
    }
    go(q, 0, n)
}

#[test]
fn general_baseline_beats_every_distribution() {
    for (n, q) in [(16, 3), (25, 4)] {
        let worst = worst_distribution(n, q);
        assert_eq!(worst, q * n);
        let baseline = general_baseline(n, q).unwrap();
        assert_eq!(
            baseline.cmp_integer(&BigInt::from(worst)),
            Ordering::Greater
        );
    }
}

#[test]
fn general_baseline_is_monotone() {
    for q in 3..=5 {
        let mut previous = general_baseline(1, q).unwrap();
        for n in 2..=400 {
            let next = general_baseline(n, q).unwrap();
            let negated = QuadraticSurd::new(
                -previous.rational_part().clone(),
                -previous.irrational_part().clone(),
                previous.radicand().clone(),
            );
            let diff = next.add(&negated);
            assert_ne!(diff.signum(), Ordering::Less, "q={q} n={n}");
            previous = next;
        }
    }
}

#[test]
fn general_sweep_prefix() {
    for q in 3..=5u64 {
        for n in q - 1..=200 {
            assert!(BoundReport::new(n, q).unwrap().improves(), "q={q} n={n}");
        }
    }
}

#[test]
fn small_coefficient_counts_match_enumeration() {
    for n in 0..=12u64 {
        for k in 0..=n {
            let decs = decompositions(n as usize, k as usize);
            for level in 0..=k {
                for m in 0..=level {
                    let expected = decs
                        .iter()
                        .filter(|g| block_value(g, level as usize) == m)
                        .count();
                    let got = count_small_coefficient_words(n, k, level, m).unwrap();
                    assert_eq!(
                        got,
                        BigUint::from(expected),
                        "n={n} k={k} level={level} m={m}"
                    );
                }
            }
        }
    }
    assert!(count_small_coefficient_words(10, 4, 2, 3).is_err());
}

#[test]
fn our_bounds() {
    let binary = Alphabet::binary();
    let w = |s| Word::parse(&binary, s).unwrap();
    assert_eq!(our_binary_bound(&w("bbbbaabbaa")).unwrap(), 5);
    assert_eq!(our_binary_bound(&w("aaaa")).unwrap(), 1);
    assert_eq!(our_binary_bound(&w("ab")).unwrap(), 2);
    let abn = Alphabet::parse("abn").unwrap();
    let banana = Word::parse(&abn, "banana").unwrap();
    assert_eq!(our_general_bound(&banana), 13);
    assert_eq!(our_general_bound_by_frequency(&banana), 10);
    assert!(our_general_bound(&banana) <= 3 * 6);
}

#[test]
fn report_rows() {
    let r = BoundReport::new(7, 2).unwrap();
    assert!(r.improves());
    let fields: Vec<String> = r.row().split('\t').map(String::from).collect();
    assert_eq!(fields[0], "7");
    assert_eq!(fields[1], "11");
    assert_eq!(fields[2], binary_baseline(7).to_string());
    assert_eq!(fields[3], "4");
    assert_eq!(BoundReport::HEADER.split('\t').count(), fields.len());
    assert!(!BoundReport::new(6, 2).unwrap().row().is_empty());
}
