mod common;

use std::cmp::Ordering;
use std::fs;

use chromex::cache::DiskCache;
use chromex::construct::{build_instance, theorem5_bracket, FamilyParams, G0Mode};
use chromex::format::{emit_edgelist, emit_graph6, parse_edgelist, parse_graph6, parse_graph6_document};
use chromex::mean::mu;
use chromex::verify::{
    hunt_conjectures, hunt_conjectures_with_interval, reverify, scan_thresholds, verify_theorem8, Conjecture,
    ThresholdRow, VerificationReport, VerifyError,
};
use chromex::{canonical_key, chromatic_polynomial, ChromaticEngine, EngineConfig, ExactRational, Graph};
use common::{random_graph_in, rng};
use num_bigint::BigInt;

#[test]
fn scan_rows_sit_exactly_at_the_threshold() {
    let rows = scan_thresholds(4, 4, 2, G0Mode::CliquePlusIsolated, &EngineConfig::default()).unwrap();
    // t ranges over 1, 2, 3, 3 values for j = 1..4, times three values of s
    assert_eq!(rows.len(), 27);
    for r in &rows {
        assert!(r.t < r.j);
        assert!(r.verified, "{r:?}");
        assert!(r.bracket_at_minimal < BigInt::from(0));
        assert!(r.bracket_below_minimal >= BigInt::from(0) || r.minimal_i == 1);
        assert_eq!(r.threshold.cmp_integer(&BigInt::from(r.minimal_i)), Ordering::Less);
        assert_eq!(r.minimal_n, r.minimal_i + r.j + r.s);
    }
    let find = |j, s, t| rows.iter().find(|r| (r.j, r.s, r.t) == (j, s, t)).unwrap();
    assert_eq!(find(2, 2, 1).threshold, ExactRational::from_integer(12));
    assert_eq!(find(2, 2, 1).minimal_i, 13);
    assert_eq!(find(2, 2, 0).threshold, ExactRational::from_integer(11));
    let json = serde_json::to_string(&rows).unwrap();
    let back: Vec<ThresholdRow> = serde_json::from_str(&json).unwrap();
    assert_eq!(back, rows);
}

#[test]
fn reports_round_trip_through_json() {
    let p = FamilyParams::new(8, 1, 2, 0).unwrap();
    let report = verify_theorem8(&p, G0Mode::CliquePlusPath, &EngineConfig::default()).unwrap();
    let json = serde_json::to_string_pretty(&report).unwrap();
    assert!(json.contains("\"COUNTEREXAMPLE_CONFIRMED\""));
    assert!(json.contains("\"-72425041920000\""));
    let back: VerificationReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);
}

#[test]
fn hunts_reject_large_orders() {
    assert!(matches!(
        hunt_conjectures(8, Conjecture::C2, None),
        Err(VerifyError::HuntTooLarge { n: 8 })
    ));
}

#[test]
fn small_hunts() {
    let c2 = hunt_conjectures(5, Conjecture::C2, None).unwrap();
    assert_eq!(c2.graphs_scanned, 1024);
    assert!(c2.violations.is_empty());
    let span5 = hunt_conjectures(5, Conjecture::Spanning, None).unwrap();
    assert!(span5.violations.is_empty());
}

#[test]
fn six_vertex_spanning_hunt_finds_the_family_instance() {
    let result = hunt_conjectures(6, Conjecture::Spanning, None).unwrap();
    assert_eq!(result.graphs_scanned, 1 << 15);
    assert!(!result.violations.is_empty());
    let inst = build_instance(&FamilyParams::new(3, 1, 2, 0).unwrap(), G0Mode::CliquePlusIsolated).unwrap();
    let (gk, hk) = (canonical_key(&inst.g1), canonical_key(&inst.g1_minus_uv()));
    let found = result.violations.iter().any(|v| {
        canonical_key(&parse_graph6(&v.graph6).unwrap()) == gk
            && canonical_key(&parse_graph6(&v.derived_graph6).unwrap()) == hk
    });
    assert!(found);
    for v in &result.violations {
        reverify(v).unwrap();
        let g = parse_graph6(&v.graph6).unwrap();
        let h = parse_graph6(&v.derived_graph6).unwrap();
        assert_eq!(h.n(), g.n());
        assert_eq!(h.edge_count() + 1, g.edge_count());
        // independent recomputation with a fresh, memo-free engine
        let mu_g = mu(&g).unwrap().value;
        let mu_h = mu(&h).unwrap().value;
        assert_eq!((&mu_g, &mu_h), (&v.mu_g, &v.mu_h));
        assert!(mu_g < mu_h);
    }
}

#[test]
fn interrupted_hunt_resumes_to_the_same_result() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hunt.ndjson");
    let full = hunt_conjectures_with_interval(6, Conjecture::C3, Some(&path), 4000).unwrap();
    let lines: Vec<String> = fs::read_to_string(&path).unwrap().lines().map(String::from).collect();
    assert_eq!(lines.len(), 9);
    fs::write(&path, lines[..3].join("\n") + "\n").unwrap();
    let resumed = hunt_conjectures_with_interval(6, Conjecture::C3, Some(&path), 4000).unwrap();
    assert_eq!(resumed, full);
    assert_eq!(full, hunt_conjectures(6, Conjecture::C3, None).unwrap());
    assert!(!full.violations.is_empty());
}

#[test]
fn disk_cache_survives_engines() {
    let dir = tempfile::tempdir().unwrap();
    let cache = std::sync::Arc::new(DiskCache::open(dir.path()).unwrap());
    let g = Graph::petersen();
    let expected = chromatic_polynomial(&g, &EngineConfig::without_memo());
    let mut a = ChromaticEngine::new(EngineConfig::default()).with_store(cache.clone());
    assert_eq!(a.polynomial(&g), expected);
    let files = fs::read_dir(dir.path()).unwrap().count();
    assert!(files > 0);

    let reopened = std::sync::Arc::new(DiskCache::open(dir.path()).unwrap());
    let mut b = ChromaticEngine::new(EngineConfig::default()).with_store(reopened);
    assert_eq!(b.polynomial(&g), expected);
    assert!(b.stats().store_hits > 0);

    // a corrupt entry is a miss, never a wrong answer
    for entry in fs::read_dir(dir.path()).unwrap() {
        fs::write(entry.unwrap().path(), "{not json").unwrap();
    }
    let mut c = ChromaticEngine::new(EngineConfig::default())
        .with_store(std::sync::Arc::new(DiskCache::open(dir.path()).unwrap()));
    assert_eq!(c.polynomial(&g), expected);
}

#[test]
fn format_round_trips_on_random_graphs() {
    let mut r = rng(31);
    for _ in 0..200 {
        let g = random_graph_in(&mut r, 0, 70);
        assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
        assert_eq!(parse_edgelist(&emit_edgelist(&g)).unwrap(), g);
    }
    let doc = ">>graph6<<A_\nBw\n\nDQc\n";
    let graphs = parse_graph6_document(doc).unwrap();
    assert_eq!(graphs.iter().map(Graph::edge_count).collect::<Vec<_>>(), [1, 3, 4]);
}

#[test]
fn malformed_inputs_are_rejected() {
    for bad in ["", "B", "Bww", "A\u{7f}", "~??"] {
        assert!(parse_graph6(bad).is_err(), "{bad:?}");
    }
    for bad in [
        "e 1 2\n",
        "p edge 3 1\ne 1 4\n",
        "p edge 3 1\ne 1 1\n",
        "p edge 3 2\ne 1 2\ne 2 1\n",
        "p edge 3 2\ne 1 2\n",
        "p edge x 1\n",
    ] {
        assert!(parse_edgelist(bad).is_err(), "{bad:?}");
    }
    let ok = parse_edgelist("c comment\np edge 3 2\n\ne 1 2\ne 2 3\n").unwrap();
    assert_eq!(ok, Graph::path(3));
    assert_eq!(
        theorem5_bracket(&FamilyParams::new(7, 1, 2, 0).unwrap()),
        BigInt::from(0)
    );
}
