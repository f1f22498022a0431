use gdecomp::experiment::*;

fn config(text: &str) -> ExperimentConfig {
    let cfg = ExperimentConfig::parse(text).unwrap();
    cfg.validate().unwrap();
    cfg
}

#[test]
fn bound_check_on_pohoata_davies() {
    let cfg =
        config("family = pohoata_davies\nsizes = 3;4;5\npipeline = bound_check\nbudget = 48\n");
    let out = run_experiment(&cfg).unwrap();
    assert_eq!(out.rows.len(), 3);
    let widths: Vec<usize> = out.rows.iter().map(|r| r.tw_lo).collect();
    assert!(widths.windows(2).all(|w| w[0] <= w[1]), "{widths:?}");
    for r in &out.rows {
        assert_eq!(r.tw_lo, r.tw_hi, "exact at this size");
        assert!(r.ms == 0);
    }
    let value = |id: usize, key: &str| -> usize {
        out.details
            .iter()
            .find(|d| d.graph_id == id && d.key == key)
            .unwrap()
            .value
            .parse()
            .unwrap()
    };
    for r in &out.rows {
        assert!(value(r.graph_id, "out_delta") <= value(r.graph_id, "degree_bound"));
        assert!(value(r.graph_id, "out_tw_lo") <= r.tw_hi);
    }
}

#[test]
fn csv_round_trip_and_ordering() {
    let cfg = config("family = grid\nsizes = 3,3; 2,5; 4,4\npipeline = tree_partition_color\n");
    let out = run_experiment(&cfg).unwrap();
    let ids: Vec<usize> = out.rows.iter().map(|r| r.graph_id).collect();
    assert_eq!(ids, vec![0, 1, 2]);
    let csv = rows_to_csv(&out.rows);
    assert_eq!(parse_csv(&csv).unwrap(), out.rows);
    assert!(out.rows.iter().all(|r| r.colors <= 3));
}

#[test]
fn every_pipeline_runs_on_a_small_family() {
    for p in Pipeline::ALL {
        let family = if p == Pipeline::ProductColor {
            "path"
        } else {
            "cycle"
        };
        let cfg = config(&format!(
            "family = {family}\nsizes = 3; 6\npipeline = {p}\n"
        ));
        let out = run_experiment(&cfg).unwrap_or_else(|e| panic!("{p}: {e}"));
        assert_eq!(out.rows.len(), 2, "{p}");
        assert!(out.rows.iter().all(|r| r.pipeline == p));
    }
}
