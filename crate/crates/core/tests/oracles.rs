//! Sanity checks of the brute-force oracles themselves.

mod common;

use common::*;
use gdecomp::graph::{generate, Family, Graph};

#[test]
fn graph_counts_match_known_sequence() {
    // Graphs and connected graphs up to isomorphism on 1..=6 vertices.
    let all = [1, 2, 4, 11, 34, 156];
    let connected = [1, 1, 2, 6, 21, 112];
    for n in 1..=6 {
        assert_eq!(all_graphs(n).len(), all[n - 1], "all graphs on {n}");
        assert_eq!(
            all_connected_graphs(n).len(),
            connected[n - 1],
            "connected graphs on {n}"
        );
    }
}

#[test]
fn dp_treewidth_on_named_graphs() {
    let cases = [
        (Family::Path(7), 1),
        (Family::Cycle(6), 2),
        (Family::Clique(6), 5),
        (Family::Biclique(3, 4), 3),
        (Family::Grid { rows: 3, cols: 3 }, 3),
        (Family::Grid { rows: 3, cols: 5 }, 3),
        (Family::Grid { rows: 4, cols: 4 }, 4),
    ];
    for (f, tw) in cases {
        assert_eq!(dp_treewidth(&generate(&f).unwrap()), tw, "{f}");
    }
    assert_eq!(dp_treewidth(&Graph::empty(5)), 0);
}

#[test]
fn closure_on_small_cases() {
    let c4 = generate(&Family::Cycle(4)).unwrap();
    let c3 = generate(&Family::Cycle(3)).unwrap();
    let k4 = generate(&Family::Clique(4)).unwrap();
    let p3 = generate(&Family::Path(3)).unwrap();
    assert!(closure_contains(&c4, &c3, false));
    assert!(!closure_contains(&k4, &c4, false));
    assert!(closure_contains(&k4, &c4, true));
    assert!(!closure_contains(&k4, &p3, false));
    assert!(closure_contains(&k4, &p3, true));
    assert!(!closure_contains(&c4, &k4, true));
}
