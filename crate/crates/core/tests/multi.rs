mod common;

use common::{all_words, all_words_up_to, from_letters, naive_count, project, random_word, word};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wordrecon_core::multi::marking::count_k_valid_markings;
use wordrecon_core::multi::{
    build_graph, coverage_decide, find_k_valid_marking, frequency_order, general_bound,
    general_coefficients, k_valid_markings, merge_scattered_factors, project_symbols,
    reconstruct_from_pairwise_projections, reconstruct_general, topo_sort_unique, Coverage,
    LetterBudget, MarkedWord, MergeOutcome, Node, Pair, ProjectionMap, TopoOrder,
};
use wordrecon_core::{Alphabet, Word};

fn ab(s: &str) -> Word {
    common::ab(s)
}

#[test]
fn banana_projections() {
    let abn = Alphabet::parse("abn").unwrap();
    let w = word(&abn, "banana");
    assert_eq!(project_symbols(&w, "ab").unwrap().to_string(), "baaa");
    assert_eq!(project_symbols(&w, "an").unwrap().to_string(), "anana");
    assert_eq!(project_symbols(&w, "bn").unwrap().to_string(), "bnn");
    assert_eq!(project_symbols(&w, "abn").unwrap(), w);
    let map = ProjectionMap::of_word(&w);
    assert_eq!(map.len(), 3);
    assert_eq!(
        reconstruct_from_pairwise_projections(&map).unwrap(),
        Some(w)
    );
}

#[test]
fn marked_example_graph() {
    let k = LetterBudget::new(&Alphabet::binary(), vec![3, 2]).unwrap();
    let marked = [
        MarkedWord::new(ab("aab"), vec![1, 3, 1]).unwrap(),
        MarkedWord::new(ab("abb"), vec![2, 1, 2]).unwrap(),
    ];
    assert!(marked.iter().all(|m| m.is_k_valid(&k)));
    let g = build_graph(&marked, &k).unwrap();
    assert_eq!(g.node_count(), 5);
    assert_eq!(g.edge_count(), 6);
    let node = |letter, mark| Node { letter, mark };
    for (from, to) in [
        ((0, 1), (0, 3)),
        ((0, 3), (1, 1)),
        ((0, 2), (1, 1)),
        ((1, 1), (1, 2)),
        ((0, 1), (0, 2)),
        ((0, 2), (0, 3)),
    ] {
        assert!(g.has_edge(node(from.0, from.1), node(to.0, to.1)));
    }
    let TopoOrder::Unique(order) = topo_sort_unique(&g) else {
        panic!("expected a unique order");
    };
    let labels: Vec<String> = order.iter().map(|&n| g.label(n)).collect();
    assert_eq!(labels.concat(), "(a)1(a)2(a)3(b)1(b)2");
}

#[test]
fn sorting_verdicts() {
    let k = LetterBudget::new(&Alphabet::binary(), vec![1, 1]).unwrap();
    let g = build_graph(&[], &k).unwrap();
    assert!(matches!(topo_sort_unique(&g), TopoOrder::Multiple(_)));
    let both = [
        MarkedWord::canonical(&ab("ab")),
        MarkedWord::canonical(&ab("ba")),
    ];
    assert_eq!(
        topo_sort_unique(&build_graph(&both, &k).unwrap()),
        TopoOrder::Cyclic
    );
    let single = build_graph(
        &[MarkedWord::canonical(&ab("abba"))],
        &LetterBudget::of_word(&ab("abba")),
    )
    .unwrap();
    assert_eq!(single.edge_count(), 4);
    assert!(matches!(topo_sort_unique(&single), TopoOrder::Unique(_)));
}

#[test]
fn markings_are_valid_and_counted() {
    let binary = Alphabet::binary();
    let words = all_words_up_to(&binary, 3);
    for ka in 0..=3 {
        for kb in 0..=3 {
            let k = LetterBudget::new(&binary, vec![ka, kb]).unwrap();
            for w1 in &words {
                for w2 in &words {
                    let list = [w1.clone(), w2.clone()];
                    let all = k_valid_markings(&list, &k, 1 << 16).unwrap();
                    assert_eq!(
                        all.len() as u64,
                        count_k_valid_markings(&list, &k).to_u64().unwrap()
                    );
                    assert!(all.iter().flatten().all(|m| m.is_k_valid(&k)));
                    match find_k_valid_marking(&list, &k) {
                        Some(canonical) => assert!(canonical.iter().all(|m| m.is_k_valid(&k))),
                        None => assert!(all.is_empty()),
                    }
                    for marking in &all {
                        let g = build_graph(marking, &k).unwrap();
                        assert_eq!(g.node_count(), ka + kb);
                        for (letter, count) in [(0, ka), (1, kb)] {
                            for mark in 1..count {
                                assert!(g.has_edge(
                                    Node { letter, mark },
                                    Node {
                                        letter,
                                        mark: mark + 1
                                    }
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(find_k_valid_marking(
        &[ab("aa")],
        &LetterBudget::new(&binary, vec![1, 0]).unwrap()
    )
    .is_none());
}

fn contains(w: &Word, u: &Word) -> bool {
    naive_count(w.letters(), u.letters()) > 0
}

#[test]
fn merging_agrees_with_superword_search() {
    let binary = Alphabet::binary();
    let words = all_words_up_to(&binary, 4);
    let mut lists: Vec<Vec<Word>> = vec![vec![]];
    lists.extend(words.iter().map(|w| vec![w.clone()]));
    for (i, w1) in words.iter().enumerate() {
        for w2 in &words[i..] {
            lists.push(vec![w1.clone(), w2.clone()]);
        }
    }
    for ka in 0..=4 {
        for kb in 0..=4 {
            let k = LetterBudget::new(&binary, vec![ka, kb]).unwrap();
            let candidates: Vec<Word> = all_words(&binary, ka + kb)
                .into_iter()
                .filter(|w| w.count(0) == ka)
                .collect();
            for list in &lists {
                let superwords: Vec<&Word> = candidates
                    .iter()
                    .filter(|w| list.iter().all(|u| contains(w, u)))
                    .collect();
                let out = merge_scattered_factors(list, &k).unwrap();
                match out.word() {
                    None => assert!(superwords.is_empty(), "{list:?} {ka} {kb}"),
                    Some(w) => {
                        assert!(superwords.contains(&w), "{list:?} {ka} {kb} gave {w}");
                        if matches!(out, MergeOutcome::Unique(_)) {
                            assert_eq!(superwords.len(), 1, "{list:?} {ka} {kb}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn merge_examples() {
    let k = LetterBudget::new(&Alphabet::binary(), vec![3, 2]).unwrap();
    let out = merge_scattered_factors(&[ab("aab"), ab("abb")], &k).unwrap();
    let w = out.word().unwrap();
    assert_eq!((w.count(0), w.count(1)), (3, 2));
    assert!(contains(w, &ab("aab")) && contains(w, &ab("abb")));
    let k = LetterBudget::new(&Alphabet::binary(), vec![1, 1]).unwrap();
    assert_eq!(
        merge_scattered_factors(&[ab("ba"), ab("ab")], &k).unwrap(),
        MergeOutcome::NoWord
    );
}

#[test]
fn pairwise_round_trip_exhaustive() {
    let alphabet = Alphabet::parse("123").unwrap();
    for w in all_words_up_to(&alphabet, 8) {
        let map = ProjectionMap::of_word(&w);
        assert_eq!(
            reconstruct_from_pairwise_projections(&map).unwrap(),
            Some(w)
        );
    }
}

#[test]
fn pairwise_round_trip_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let q = rng.gen_range(2..=5);
        let alphabet = Alphabet::parse(&"abcde"[..q]).unwrap();
        let len = rng.gen_range(0..=50);
        let w = random_word(&mut rng, &alphabet, len);
        let map = ProjectionMap::of_word(&w);
        assert_eq!(
            reconstruct_from_pairwise_projections(&map).unwrap(),
            Some(w)
        );
    }
}

#[test]
fn tampered_projections_are_rejected() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let alphabet = Alphabet::parse("abcd").unwrap();
    for _ in 0..300 {
        let w = random_word(&mut rng, &alphabet, 12);
        let mut map = ProjectionMap::new(&alphabet);
        let swap = rng.gen_range(0..6);
        let mut index = 0;
        for x in 0..4u32 {
            for y in x + 1..4 {
                let mut p = project(w.letters(), &[x, y]);
                if index == swap && p.len() >= 2 {
                    let i = rng.gen_range(0..p.len() - 1);
                    p.swap(i, i + 1);
                }
                index += 1;
                let pair = Pair::new(x, y).unwrap();
                map.insert(pair, from_letters(&alphabet, &p)).unwrap();
            }
        }
        if let Some(v) = reconstruct_from_pairwise_projections(&map).unwrap() {
            assert_eq!(ProjectionMap::of_word(&v), map);
        }
    }
}

fn check_general(w: &Word, order: Option<&[u32]>) -> usize {
    let map = general_coefficients(w, order).unwrap();
    let r = reconstruct_general(w.len(), &map).unwrap();
    assert_eq!(&r.word, w);
    assert_eq!(r.coefficients_used, map.len());
    r.coefficients_used
}

#[test]
fn general_round_trip_exhaustive() {
    let alphabet = Alphabet::parse("abc").unwrap();
    let natural = [0, 1, 2];
    for w in all_words_up_to(&alphabet, 8) {
        for order in [None, Some(&natural[..])] {
            let used = check_general(&w, order);
            if w.len() >= 2 {
                let used_order = order.map_or_else(|| frequency_order(&w), <[u32]>::to_vec);
                let bound = general_bound(&w, &used_order).unwrap();
                assert!(used <= bound, "{w}: {used} > {bound}");
                assert!(bound <= 3 * w.len());
            }
        }
    }
}

#[test]
fn general_round_trip_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..500 {
        let q = rng.gen_range(1..=5);
        let alphabet = Alphabet::parse(&"abcde"[..q]).unwrap();
        let len = rng.gen_range(0..=30);
        let w = random_word(&mut rng, &alphabet, len);
        let used = check_general(&w, None);
        if q >= 2 && len + 1 >= q {
            let bound = general_bound(&w, &frequency_order(&w)).unwrap();
            assert!(used <= bound);
            assert!(bound <= q * len);
        }
    }
}

#[test]
fn banana_bounds() {
    let abn = Alphabet::parse("abn").unwrap();
    let w = word(&abn, "banana");
    assert_eq!(general_bound(&w, &[0, 1, 2]).unwrap(), 13);
    assert_eq!(general_bound(&w, &[1, 2, 0]).unwrap(), 10);
    let r = reconstruct_general(6, &general_coefficients(&w, None).unwrap()).unwrap();
    assert_eq!(r.word, w);
    assert!(r.coefficients_used <= 10);
}

const SYMBOLS: &str = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

#[test]
fn coverage_matches_pair_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut witnesses = 0;
    for _ in 0..1000 {
        let q = rng.gen_range(1..=64);
        let k = rng.gen_range(0..=64);
        let alphabet = Alphabet::new(SYMBOLS.chars().take(q)).unwrap();
        let density: f64 = rng.gen_range(0.05..0.95);
        let sets: Vec<Vec<u32>> = (0..k)
            .map(|_| (0..q as u32).filter(|_| rng.gen_bool(density)).collect())
            .collect();
        let covered = (0..q as u32).all(|a| {
            (a + 1..q as u32).all(|b| sets.iter().any(|s| s.contains(&a) && s.contains(&b)))
        });
        match coverage_decide(&alphabet, &sets) {
            Coverage::Reconstructible => assert!(covered),
            Coverage::Witness(w, v) => {
                assert!(!covered);
                assert_ne!(w, v);
                for s in &sets {
                    assert_eq!(project(w.letters(), s), project(v.letters(), s));
                }
                witnesses += 1;
            }
        }
    }
    assert!(witnesses > 100 && witnesses < 900);
}
