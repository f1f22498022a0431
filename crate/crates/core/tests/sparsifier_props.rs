mod common;

use common::*;
use gdecomp::coloring::EdgeColoring;
use gdecomp::graph::*;
use gdecomp::minors::validate_model;
use gdecomp::sparsifier::*;
use proptest::prelude::*;
use rand::Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.1f64..0.8, any::<u64>())
        .prop_map(|(n, p, seed)| random_graph(&mut rng(seed), n, p))
}

fn strategies() -> impl Strategy<Value = ExtractStrategy> {
    prop_oneof![
        Just(ExtractStrategy::ExactSmall),
        Just(ExtractStrategy::WallMinor),
        Just(ExtractStrategy::Greedy)
    ]
}

fn random_class(g: &Graph, seed: u64, p: f64) -> Vec<Edge> {
    let mut r = rng(seed);
    g.edges()
        .iter()
        .copied()
        .filter(|_| r.gen_bool(p))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn one_round_invariants(g in arb_graph(12), seed in any::<u64>(), p in 0.0f64..1.0, s in strategies()) {
        let f = random_class(&g, seed, p);
        let t = sparsify_once(&g, &f, s).unwrap();
        prop_assert!(t.f_degree_max() <= 3);
        prop_assert!(check_induced(&g, &t.output, &t.output_vertices).is_ok());
        prop_assert_eq!(validate_model(&t.model()), Ok(()));
        prop_assert!(t.extraction.max_degree() <= 3);
        for k in &t.kept {
            prop_assert!(k.terminals.len() <= 3);
            prop_assert!(k.vertices.iter().all(|v| t.partition.parts()[k.part].contains(v)));
        }
        // The output carries the extracted subgraph as a minor.
        let (h, _) = t.extraction.graph();
        prop_assert!(dp_treewidth(&t.output) >= dp_treewidth(&h));
    }

    #[test]
    fn kept_parts_are_inclusion_minimal(g in arb_graph(12), seed in any::<u64>()) {
        let f = random_class(&g, seed, 0.7);
        let t = sparsify_once(&g, &f, ExtractStrategy::Greedy).unwrap();
        for k in &t.kept {
            for &v in &k.vertices {
                if k.terminals.contains(&v) {
                    continue;
                }
                let rest: Vec<usize> = k.vertices.iter().copied().filter(|&w| w != v).collect();
                prop_assert!(!g.is_connected_set(&rest), "vertex {} removable from part {}", v, k.part);
            }
        }
    }

    #[test]
    fn contraction_loses_at_most_the_part_size(g in arb_graph(14), seed in any::<u64>()) {
        let f = random_class(&g, seed, 0.5);
        let parts = color_components(&g, &f).unwrap();
        let c = contract_partition(&g, &parts).unwrap();
        let (tg, tc) = (dp_treewidth(&g), dp_treewidth(&c));
        prop_assert!(tc <= tg);
        // Flattening a decomposition of the quotient multiplies bag sizes by
        // at most the part size.
        prop_assert!((tc + 1) * parts.max_part_size() > tg);
    }

    #[test]
    fn all_classes_bound_degree(g in arb_graph(14), seed in any::<u64>(), h in 1usize..4) {
        let mut r = rng(seed);
        let c = EdgeColoring::from_fn(&g, h, |_, _| r.gen_range(0..h)).unwrap();
        let out = sparsify_all(&g, &c, ExtractStrategy::Greedy).unwrap();
        prop_assert!(out.output.max_degree() <= 3 * h);
        prop_assert!(check_induced(&g, &out.output, &out.vertices).is_ok());
        prop_assert_eq!(out.stages.len(), h);
    }
}

#[test]
fn exact_small_is_at_least_as_wide_as_greedy() {
    let mut complete = 0;
    for seed in 0..20 {
        let g = random_graph(&mut rng(seed), 9, 0.4);
        let a = extract_subcubic(&g, ExtractStrategy::ExactSmall).unwrap();
        let b = extract_subcubic(&g, ExtractStrategy::Greedy).unwrap();
        if !a.exhaustive {
            continue;
        }
        complete += 1;
        assert!(
            dp_treewidth(&a.graph().0) >= dp_treewidth(&b.graph().0),
            "seed {seed}"
        );
    }
    assert!(complete >= 10, "only {complete} searches completed");
}
