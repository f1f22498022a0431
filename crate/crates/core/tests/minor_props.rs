mod common;

use common::*;
use gdecomp::graph::*;
use gdecomp::minors::*;
use proptest::prelude::*;

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, 0.2f64..0.8, any::<u64>())
        .prop_map(|(n, p, seed)| random_graph(&mut rng(seed), n, p))
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(1, max_n).prop_filter("connected", |g| g.is_connected())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(160))]

    #[test]
    fn induced_search_agrees_with_closure(host in arb_graph(1, 7), pattern in arb_connected(4)) {
        let out = find_induced_minor(&host, &pattern, DEFAULT_SEARCH_BUDGET);
        prop_assert_ne!(&out, &SearchOutcome::BudgetExhausted);
        prop_assert_eq!(out.is_found(), closure_contains(&host, &pattern, false));
        if let Some(m) = out.model() {
            prop_assert_eq!(validate_model(m), Ok(()));
        }
    }

    #[test]
    fn minor_search_agrees_with_closure(host in arb_graph(1, 6), pattern in arb_connected(4)) {
        let out = find_minor(&host, &pattern, DEFAULT_SEARCH_BUDGET);
        prop_assert_eq!(out.is_found(), closure_contains(&host, &pattern, true));
        if let Some(m) = out.model() {
            prop_assert_eq!(validate_model(m), Ok(()));
        }
    }

    #[test]
    fn models_survive_text_round_trip(host in arb_graph(4, 9), pattern in arb_connected(4)) {
        if let Some(m) = find_induced_minor(&host, &pattern, DEFAULT_SEARCH_BUDGET).model() {
            let back = MinorModel::parse(&host, &pattern, m.kind, &m.to_text()).unwrap();
            prop_assert_eq!(&back, m);
        }
    }

    #[test]
    fn damaged_models_are_rejected(host in arb_graph(5, 9), pattern in arb_connected(4)) {
        let out = find_minor(&host, &pattern, DEFAULT_SEARCH_BUDGET);
        let Some(m) = out.model() else { return Ok(()) };
        // Dropping a branch set, or merging two, always breaks the model.
        let mut fewer = m.clone();
        fewer.branch_sets.pop();
        prop_assert!(validate_model(&fewer).is_err());
        if m.branch_sets.len() >= 2 {
            let mut merged = m.clone();
            let first = merged.branch_sets[0].clone();
            merged.branch_sets[1].extend(first);
            prop_assert!(validate_model(&merged).is_err());
        }
    }
}

#[test]
fn every_small_pattern_in_k5_minus_edge() {
    // K5 minus an edge contains every graph on at most 4 vertices as a minor
    // and as an induced minor exactly when the pattern is.
    let host = Graph::from_edges(
        5,
        [
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
        ],
    )
    .unwrap();
    for n in 1..=4 {
        for p in all_graphs(n) {
            assert!(find_minor(&host, &p, DEFAULT_SEARCH_BUDGET).is_found());
            assert_eq!(
                find_induced_minor(&host, &p, DEFAULT_SEARCH_BUDGET).is_found(),
                closure_contains(&host, &p, false),
                "{:?}",
                p.edges()
            );
        }
    }
}
