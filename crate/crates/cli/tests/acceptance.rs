//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! The two sweeps over all connected graphs with at most 7 vertices are
//! shared across criteria through lazily initialized statics: a light sweep
//! carrying the splitting-equivalence and oracle-equality checks, and a
//! heavy sweep carrying homology, presentation, and decomposition checks.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use bbg_core::flag::{flag_complex, h1_summary};
use bbg_core::graph::SimplicialGraph;
use bbg_core::jsj::{jsj_report, verify_decomposition};
use bbg_core::oracle::{sweep_small_graphs, SweepCheck, SweepConfig, SweepReport};
use bbg_core::presentation::{recognize_special, Flavor, GroupDescriptor};
use bbg_core::splitting::{bbg_splitting_verdict, SplitCase};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(name),
    )
    .unwrap()
}

fn bbg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bbg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn load(name: &str) -> SimplicialGraph {
    SimplicialGraph::parse(&std::fs::read_to_string(data(name)).unwrap()).unwrap()
}

fn k_n(n: usize) -> SimplicialGraph {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| (format!("v{i}"), format!("v{j}")))
        .collect();
    SimplicialGraph::from_named_edges(names, edges).unwrap()
}

fn light_sweep() -> &'static (SweepReport, Duration) {
    static SWEEP: OnceLock<(SweepReport, Duration)> = OnceLock::new();
    SWEEP.get_or_init(|| {
        let cfg = SweepConfig {
            min_n: 1,
            max_n: 7,
            seed: 1,
            checks: vec![
                SweepCheck::SplitEquivalence,
                SweepCheck::SeparatingCliques,
                SweepCheck::Chordality,
            ],
            samples: 0,
            threads: 4,
        };
        let start = Instant::now();
        let report = sweep_small_graphs(&cfg).expect("sweep runs");
        (report, start.elapsed())
    })
}

fn heavy_sweep() -> &'static SweepReport {
    static SWEEP: OnceLock<SweepReport> = OnceLock::new();
    SWEEP.get_or_init(|| {
        // run after the timed light sweep so its runtime bound is fair
        let _ = light_sweep();
        let cfg = SweepConfig {
            min_n: 1,
            max_n: 7,
            seed: 1,
            checks: vec![
                SweepCheck::ChordalHomology,
                SweepCheck::Presentations,
                SweepCheck::Jsj,
                SweepCheck::JsjPermutation,
            ],
            samples: 0,
            threads: 4,
        };
        sweep_small_graphs(&cfg).expect("sweep runs")
    })
}

fn outcome(report: &SweepReport, check: SweepCheck) -> (u64, u64) {
    let o = &report.outcomes[check.name()];
    (o.evaluated, o.failures)
}

/// Connected labeled graphs on n vertices by the standard counting
/// recurrence; an oracle for exhaustiveness of the mask enumeration.
fn connected_labeled_graphs(n: usize) -> u64 {
    fn choose(n: usize, k: usize) -> u64 {
        let mut result = 1u64;
        for i in 0..k {
            result = result * (n - i) as u64 / (i + 1) as u64;
        }
        result
    }
    fn all_graphs(n: usize) -> u64 {
        1u64 << (n * (n - 1) / 2)
    }
    let mut d = vec![0u64; n + 1];
    for m in 1..=n {
        let disconnected: u64 = (1..m)
            .map(|k| choose(m - 1, k - 1) * d[k] * all_graphs(m - k))
            .sum();
        d[m] = all_graphs(m) - disconnected;
    }
    d[n]
}

#[test]
fn acceptance_criterion_1_golden_sun_example() {
    // wait for the shared sweeps so the runtime bound below is measured on
    // a quiet machine, not while 2M graphs are being enumerated in parallel
    let _ = light_sweep();
    let _ = heavy_sweep();

    let file = data("sun3.g");
    let file = file.to_str().unwrap();

    let start = Instant::now();
    let raag = bbg(&["jsj", file, "--group", "raag", "--format", "json"]);
    let raag_elapsed = start.elapsed();
    assert!(raag.status.success());
    assert!(
        raag_elapsed < Duration::from_secs(1),
        "took {raag_elapsed:?}"
    );
    let raag_json = String::from_utf8(raag.stdout).unwrap();
    assert_eq!(
        raag_json,
        golden("sun3_raag.json"),
        "golden mismatch (raag)"
    );

    let start = Instant::now();
    let bbg_out = bbg(&["jsj", file, "--group", "bbg", "--format", "json"]);
    let bbg_elapsed = start.elapsed();
    assert!(bbg_out.status.success());
    assert!(bbg_elapsed < Duration::from_secs(1), "took {bbg_elapsed:?}");
    let bbg_json = String::from_utf8(bbg_out.stdout).unwrap();
    assert_eq!(bbg_json, golden("sun3_bbg.json"), "golden mismatch (bbg)");

    // structural content: star tree, 4 vertex groups, 3 edge groups, with
    // ranks 3/2 for the ambient group and 2/1 for the kernel group
    for (text, vrank, erank) in [(&raag_json, 3u64, 2u64), (&bbg_json, 2, 1)] {
        let v: serde_json::Value = serde_json::from_str(text).unwrap();
        let vertices = v["vertices"].as_array().unwrap();
        let edges = v["edges"].as_array().unwrap();
        assert_eq!(vertices.len(), 4);
        assert_eq!(edges.len(), 3);
        for vx in vertices {
            assert_eq!(vx["group"]["kind"], "free_abelian");
            assert_eq!(vx["group"]["rank"].as_u64().unwrap(), vrank);
        }
        for e in edges {
            assert_eq!(e["group"]["rank"].as_u64().unwrap(), erank);
        }
        // star through the piece {2,3,5}
        assert_eq!(vertices[1]["piece"], serde_json::json!(["2", "3", "5"]));
        let endpoint_pairs: Vec<(u64, u64)> = edges
            .iter()
            .map(|e| (e["from"].as_u64().unwrap(), e["to"].as_u64().unwrap()))
            .collect();
        assert_eq!(endpoint_pairs, vec![(0, 1), (1, 2), (1, 3)]);
    }
    // underlying trees identical across flavors
    let vr: serde_json::Value = serde_json::from_str(&raag_json).unwrap();
    let vb: serde_json::Value = serde_json::from_str(&bbg_json).unwrap();
    assert_eq!(
        vr["vertices"].as_array().unwrap().len(),
        vb["vertices"].as_array().unwrap().len()
    );
    for (a, b) in vr["edges"]
        .as_array()
        .unwrap()
        .iter()
        .zip(vb["edges"].as_array().unwrap())
    {
        assert_eq!(a["from"], b["from"]);
        assert_eq!(a["to"], b["to"]);
        assert_eq!(a["clique"], b["clique"]);
    }
    println!("ACCEPTANCE 1 (golden 3-sun example): PASS");
}

#[test]
fn acceptance_criterion_2_splitting_verdict_catalog() {
    // complete graphs K_2..K_6: Complete with kernel rank n-1
    for n in 2..=6 {
        let v = bbg_splitting_verdict(&k_n(n)).unwrap();
        assert!(v.splits, "K_{n} must split");
        assert_eq!(v.case, SplitCase::Complete(n), "K_{n}");
        assert_eq!(v.edge_group_rank_bbg, Some(n - 1), "K_{n}");
        assert_eq!(v.edge_group_rank_raag, Some(n), "K_{n}");
    }

    // every labeled tree on 3..6 vertices: cut-vertex case (free product)
    let mut trees_checked = 0u64;
    for n in 3usize..=6 {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        for mask in 0u64..(1 << pairs.len()) {
            if (mask.count_ones() as usize) != n - 1 {
                continue;
            }
            let names: Vec<String> = (0..n).map(|i| format!("t{i}")).collect();
            let edges: Vec<(String, String)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &(i, j))| (names[i].clone(), names[j].clone()))
                .collect();
            let g = SimplicialGraph::from_named_edges(names, edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let v = bbg_splitting_verdict(&g).unwrap();
            assert!(v.splits);
            assert!(
                matches!(v.case, SplitCase::CutVertex(_)),
                "tree mask {mask:#x} on {n} vertices: {:?}",
                v.case
            );
            // free product: the splitting subgroup is trivial
            assert_eq!(v.edge_group_rank_bbg, Some(0));
            trees_checked += 1;
        }
    }
    // Cayley's formula: 3 + 16 + 125 + 1296 labeled trees
    assert_eq!(trees_checked, 3 + 16 + 125 + 1296);

    // the 3-sun: separating clique of size 2 with ranks (2, 1)
    let f4 = load("sun3.g");
    let v = bbg_splitting_verdict(&f4).unwrap();
    match &v.case {
        SplitCase::SeparatingClique(k) => {
            assert_eq!(k.size(), 2);
            assert_eq!(f4.names_of(k.members()), vec!["2", "3"]);
        }
        other => panic!("expected separating clique, got {other:?}"),
    }
    assert_eq!(
        (v.edge_group_rank_raag, v.edge_group_rank_bbg),
        (Some(2), Some(1))
    );
    println!("ACCEPTANCE 2 (splitting verdict catalog): PASS");
}

#[test]
fn acceptance_criterion_3_split_equivalence_sweep() {
    let (report, elapsed) = light_sweep();
    // exhaustive adjacency-mask enumeration over all graphs with <= 7
    // vertices, validated against the connected-graph counting recurrence
    assert!(report.sampled_sizes.is_empty());
    let expected_masks: u64 = (1..=7).map(|n: u64| 1u64 << (n * (n - 1) / 2)).sum();
    assert_eq!(report.graphs_scanned, expected_masks);
    let expected_connected: u64 = (1..=7).map(connected_labeled_graphs).sum();
    assert_eq!(report.connected_graphs, expected_connected);

    let (evaluated, failures) = outcome(report, SweepCheck::SplitEquivalence);
    assert!(
        evaluated > 500_000,
        "equivalence applied to every flag input, got {evaluated}"
    );
    assert_eq!(failures, 0, "counterexamples: {:?}", report.counterexamples);
    assert!(
        *elapsed < Duration::from_secs(300),
        "sweep took {elapsed:?}, budget is 5 minutes"
    );
    println!(
        "ACCEPTANCE 3 (splitting equivalence sweep, {} graphs in {:.1?}): PASS",
        evaluated, elapsed
    );
}

#[test]
fn acceptance_criterion_4_oracle_equivalence() {
    let (report, _) = light_sweep();
    let connected = report.connected_graphs;
    let (sep_eval, sep_fail) = outcome(report, SweepCheck::SeparatingCliques);
    let (ch_eval, ch_fail) = outcome(report, SweepCheck::Chordality);
    assert_eq!(sep_eval, connected, "oracle ran on every connected graph");
    assert_eq!(ch_eval, connected);
    assert_eq!(sep_fail, 0, "counterexamples: {:?}", report.counterexamples);
    assert_eq!(ch_fail, 0, "counterexamples: {:?}", report.counterexamples);
    println!(
        "ACCEPTANCE 4 (oracle equivalence on {} graphs): PASS",
        connected
    );
}

#[test]
fn acceptance_criterion_5_presentation_consistency() {
    let report = heavy_sweep();
    let (eval, failures) = outcome(report, SweepCheck::Presentations);
    let (homology_eval, _) = outcome(report, SweepCheck::ChordalHomology);
    assert_eq!(
        eval, homology_eval,
        "presentations ran on every accepted graph"
    );
    assert!(eval > 500_000);
    assert_eq!(failures, 0, "counterexamples: {:?}", report.counterexamples);

    // recognizers exact: trees to free groups, complete graphs to free
    // abelian groups
    for n in 2..=6 {
        assert_eq!(
            recognize_special(&k_n(n)).unwrap(),
            GroupDescriptor::FreeAbelian { rank: n - 1 },
            "K_{n}"
        );
    }
    assert_eq!(
        recognize_special(&load("path3.g")).unwrap(),
        GroupDescriptor::Free { rank: 2 }
    );
    let star = SimplicialGraph::from_named_edges(
        Vec::<String>::new(),
        [("c", "a"), ("c", "b"), ("c", "d"), ("c", "e")]
            .map(|(u, v)| (u.to_string(), v.to_string())),
    )
    .unwrap();
    assert_eq!(
        recognize_special(&star).unwrap(),
        GroupDescriptor::Free { rank: 4 }
    );
    println!(
        "ACCEPTANCE 5 (presentation consistency on {} graphs): PASS",
        eval
    );
}

#[test]
fn acceptance_criterion_6_structural_jsj_invariants() {
    let report = heavy_sweep();
    let (eval, failures) = outcome(report, SweepCheck::Jsj);
    assert!(eval > 500_000);
    assert_eq!(failures, 0, "counterexamples: {:?}", report.counterexamples);
    let (perm_eval, perm_failures) = outcome(report, SweepCheck::JsjPermutation);
    assert!(perm_eval > 10_000);
    assert_eq!(
        perm_failures, 0,
        "counterexamples: {:?}",
        report.counterexamples
    );

    // spot check on the 3-sun
    let f4 = load("sun3.g");
    for flavor in [Flavor::Raag, Flavor::Bbg] {
        let rep = jsj_report(&f4, flavor).unwrap();
        let violations = verify_decomposition(&rep.decomposition, &f4);
        assert!(violations.is_empty(), "{violations:?}");
        assert_eq!(
            rep.decomposition.edge_count() + 1,
            rep.decomposition.vertex_count()
        );
    }
    println!(
        "ACCEPTANCE 6 (structural decomposition invariants on {} graphs): PASS",
        eval
    );
}

#[test]
fn acceptance_criterion_7_topology_cross_check() {
    let report = heavy_sweep();
    let (eval, failures) = outcome(report, SweepCheck::ChordalHomology);
    assert!(eval > 500_000);
    assert_eq!(failures, 0, "counterexamples: {:?}", report.counterexamples);

    // circles have first homology of rank 1
    for edges in [
        vec![("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        vec![("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")],
    ] {
        let g = SimplicialGraph::from_named_edges(
            Vec::<String>::new(),
            edges.iter().map(|&(u, v)| (u.to_string(), v.to_string())),
        )
        .unwrap();
        let h = h1_summary(&flag_complex(&g).unwrap());
        assert_eq!(h.h1_rank, 1);
        assert!(h.h1_torsion.is_empty());
    }
    println!(
        "ACCEPTANCE 7 (topology cross-check on {} graphs): PASS",
        eval
    );
}

#[test]
fn acceptance_criterion_8_byte_determinism() {
    let corpus: Vec<Vec<String>> = {
        let mut runs: Vec<Vec<String>> = Vec::new();
        let files = [
            "sun3.g",
            "sun3.json",
            "c4.g",
            "k4.g",
            "k5.g",
            "path3.g",
            "fan4.g",
            "two_triangles.g",
            "wedge_k4.g",
        ];
        for f in files {
            let path = data(f).to_str().unwrap().to_string();
            for format in ["text", "json"] {
                runs.push(vec![
                    "check".into(),
                    path.clone(),
                    "--format".into(),
                    format.into(),
                ]);
                for group in ["raag", "bbg"] {
                    runs.push(vec![
                        "split".into(),
                        path.clone(),
                        "--group".into(),
                        group.into(),
                        "--format".into(),
                        format.into(),
                    ]);
                }
                runs.push(vec![
                    "present".into(),
                    path.clone(),
                    "--format".into(),
                    format.into(),
                ]);
                runs.push(vec![
                    "present".into(),
                    path.clone(),
                    "--reduced".into(),
                    "--format".into(),
                    format.into(),
                ]);
            }
            for group in ["raag", "bbg"] {
                for format in ["text", "dot", "json"] {
                    runs.push(vec![
                        "jsj".into(),
                        path.clone(),
                        "--group".into(),
                        group.into(),
                        "--format".into(),
                        format.into(),
                    ]);
                }
            }
            runs.push(vec![
                "check".into(),
                path.clone(),
                "--emit-complex".into(),
                "-".into(),
            ]);
        }
        runs.push(vec![
            "oracle".into(),
            "--max-n".into(),
            "5".into(),
            "--seed".into(),
            "3".into(),
        ]);
        runs
    };

    let mut outputs: BTreeMap<String, (Vec<u8>, Option<i32>)> = BTreeMap::new();
    for run in &corpus {
        let args: Vec<&str> = run.iter().map(|s| s.as_str()).collect();
        let first = bbg(&args);
        let second = bbg(&args);
        assert_eq!(first.stdout, second.stdout, "stdout differs for {run:?}");
        assert_eq!(
            first.status.code(),
            second.status.code(),
            "exit differs for {run:?}"
        );
        outputs.insert(run.join(" "), (first.stdout, first.status.code()));
    }

    // thread count must not change bytes
    let single = bbg(&["oracle", "--max-n", "5", "--seed", "3", "--threads", "1"]);
    let quad = bbg(&["oracle", "--max-n", "5", "--seed", "3", "--threads", "4"]);
    assert_eq!(
        single.stdout, quad.stdout,
        "thread count changed oracle output"
    );
    let (baseline, _) = &outputs["oracle --max-n 5 --seed 3"];
    assert_eq!(&single.stdout, baseline);
    println!(
        "ACCEPTANCE 8 (byte determinism over {} command invocations): PASS",
        corpus.len() + 2
    );
}
