mod common;

use common::*;
use proptest::prelude::*;
use rainbow_core::exact::{search_coloring, RestrictedGrowth};
use rainbow_core::generators;
use rainbow_core::{color_diam2, exact_rc, rc_lower_bound, ColorOptions, ExactConfig, Graph, RcValue};

fn rc(g: &Graph) -> usize {
    match exact_rc(g, &ExactConfig::default()).unwrap().value {
        RcValue::Exact(r) => r,
        other => panic!("no exact value: {other:?}"),
    }
}

// Smallest c for which some coloring with at most c colors is rainbow
// connected, by plain enumeration of all c^m colorings.
fn brute_rc(g: &Graph) -> usize {
    let m = g.m();
    if m == 0 {
        return 0;
    }
    for c in 1..=m {
        let mut digits = vec![0u32; m];
        loop {
            let col = rainbow_core::EdgeColoring::new(digits.iter().map(|d| d + 1).collect()).unwrap();
            if naive_failing_pair(g, &col).is_none() {
                return c;
            }
            let mut i = 0;
            while i < m {
                digits[i] += 1;
                if digits[i] < c as u32 {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
        }
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn matches_brute_force_on_tiny_graphs(g in arb_graph(6)) {
        prop_assume!(g.is_connected() && g.m() <= 8);
        let res = exact_rc(&g, &ExactConfig::default()).unwrap();
        prop_assert_eq!(res.value, RcValue::Exact(brute_rc(&g)));
        let witness = res.witness.unwrap();
        prop_assert_eq!(naive_failing_pair(&g, &witness), None);
    }

    #[test]
    fn sandwiched_between_bounds(g in arb_graph(7)) {
        prop_assume!(g.is_connected() && g.n() >= 2);
        let lower = rc_lower_bound(&g).unwrap();
        let res = exact_rc(&g, &ExactConfig::default()).unwrap();
        let RcValue::Exact(r) = res.value else {
            return Err(TestCaseError::fail("small graphs are decided"));
        };
        prop_assert!(lower <= r);
        prop_assert!(r <= g.m());
        if let Ok(out) = color_diam2(&g, &ColorOptions::default()) {
            prop_assert!(r <= out.colors_used);
        }
    }

    #[test]
    fn restricted_growth_strings_are_canonical(m in 1usize..=7, classes in 1usize..=4) {
        let mut it = RestrictedGrowth::new(m, classes);
        let mut seen = std::collections::BTreeSet::new();
        while it.advance() {
            let s = it.current().to_vec();
            let mut top = 0u8;
            for (i, &c) in s.iter().enumerate() {
                let canonical = if i == 0 { c == 0 } else { c <= top + 1 };
                prop_assert!(canonical);
                top = top.max(c);
            }
            prop_assert_eq!(top as usize + 1, classes);
            prop_assert!(seen.insert(s));
        }
    }
}

#[test]
fn cycles() {
    for n in 4..=7 {
        assert_eq!(rc(&generators::cycle(n).unwrap()), n.div_ceil(2), "C{n}");
    }
}

#[test]
fn complete_bipartite() {
    for t in 2..=5 {
        let expect = ((t as f64).sqrt().ceil() as usize).min(4);
        assert_eq!(rc(&generators::complete_bipartite(2, t).unwrap()), expect, "K2,{t}");
    }
    assert_eq!(rc(&generators::complete_bipartite(2, 4).unwrap()), 2);
}

#[test]
fn trees_need_one_color_per_edge() {
    for n in 2..=7 {
        for t in nonisomorphic_trees(n) {
            assert_eq!(rc(&t), t.m(), "{:?}", t.edges());
        }
    }
}

#[test]
fn named_values() {
    assert_eq!(rc(&generators::complete(5).unwrap()), 1);
    assert_eq!(rc(&generators::petersen()), 3);
    assert_eq!(rc(&generators::tight_example(1, 2).unwrap()), 3);
    assert_eq!(rc(&generators::star(4).unwrap()), 4);
}

#[test]
fn search_respects_budget() {
    let pet = generators::petersen();
    assert!(search_coloring(&pet, 2, 1_000_000).coloring.is_none());
    let hit = search_coloring(&pet, 3, 1_000_000);
    assert_eq!(naive_failing_pair(&pet, &hit.coloring.unwrap()), None);
    assert_eq!(search_coloring(&pet, 3, 10).colorings_tested, 10);
}
