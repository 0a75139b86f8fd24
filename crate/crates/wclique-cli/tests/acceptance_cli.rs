//! Acceptance criterion 10: the command-line interface round-trips
//! generated graphs, emits the predicted benchmark record count as
//! valid CSV, and returns the documented exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn wclique(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wclique"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn criterion_10_cli_interface() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();

    // gen -> save -> load -> solve round-trip
    let gen = wclique(
        &[
            "gen",
            "--n",
            "8",
            "--p",
            "0.6",
            "--weights",
            "0.1:1.0",
            "--seed",
            "3",
            "--out",
            "g.graph.json",
        ],
        dir,
    );
    assert!(
        gen.status.success(),
        "{}",
        String::from_utf8_lossy(&gen.stderr)
    );
    let solve = wclique(
        &[
            "solve",
            "g.graph.json",
            "--pivot",
            "clique",
            "--estimate",
            "sum",
        ],
        dir,
    );
    assert!(solve.status.success());
    let text = stdout(&solve);
    assert!(
        text.contains("clique:") && text.contains("weight:") && text.contains("completed: true"),
        "{text}"
    );

    // enumerate on the same file
    let enumerate = wclique(&["enumerate", "g.graph.json"], dir);
    assert!(enumerate.status.success());
    assert!(stdout(&enumerate).contains("weight="));

    // match two generated attributed graphs
    for (seed, name) in [("5", "a.graph.json"), ("6", "b.graph.json")] {
        let g = wclique(
            &[
                "gen",
                "--n",
                "4",
                "--p",
                "0.6",
                "--attr-dim",
                "2",
                "--seed",
                seed,
                "--out",
                name,
            ],
            dir,
        );
        assert!(g.status.success());
    }
    let matched = wclique(
        &["match", "a.graph.json", "b.graph.json", "--kernel", "dot"],
        dir,
    );
    assert!(matched.status.success());
    let text = stdout(&matched);
    for field in [
        "kernel:",
        "length_x:",
        "length_y:",
        "similarity:",
        "morphism:",
    ] {
        assert!(text.contains(field), "missing {field} in {text}");
    }

    // exit code 2: usage error
    let usage = wclique(&["solve"], dir);
    assert_eq!(usage.status.code(), Some(2));
    let conflict = wclique(
        &[
            "gen",
            "--n",
            "3",
            "--p",
            "0.5",
            "--weights",
            "0:1",
            "--attr-dim",
            "2",
            "--seed",
            "1",
            "--out",
            "x.graph.json",
        ],
        dir,
    );
    assert_eq!(conflict.status.code(), Some(2));

    // exit code 3: input error
    let missing = wclique(&["solve", "nope.graph.json"], dir);
    assert_eq!(missing.status.code(), Some(3));
    std::fs::write(dir.join("broken.graph.json"), "{not json").unwrap();
    let broken = wclique(&["solve", "broken.graph.json"], dir);
    assert_eq!(broken.status.code(), Some(3));

    // exit code 4: budget exhausted with an empty incumbent
    let starved = wclique(&["solve", "g.graph.json", "--budget", "1"], dir);
    assert_eq!(starved.status.code(), Some(4));

    // anytime trace file
    let traced = wclique(&["solve", "g.graph.json", "--trace", "trace.csv"], dir);
    assert!(traced.status.success());
    let trace_text = std::fs::read_to_string(dir.join("trace.csv")).unwrap();
    assert!(trace_text.starts_with("recursions,best_weight\n"));
    assert!(trace_text.lines().count() > 1);

    // bench over a 5-graph dataset: 10 pairs x 4 configs x |budgets|
    // records plus 4 x |budgets| aggregate rows, all valid CSV
    let ds = dir.join("ds");
    std::fs::create_dir(&ds).unwrap();
    for seed in 0..5 {
        let g = wclique(
            &[
                "gen",
                "--n",
                "4",
                "--p",
                "0.5",
                "--attr-dim",
                "1",
                "--seed",
                &seed.to_string(),
                "--out",
                &format!("ds/g{seed}.graph.json"),
            ],
            dir,
        );
        assert!(g.status.success());
    }
    let bench = wclique(
        &[
            "bench",
            "ds",
            "--budgets",
            "2,5,10",
            "--seed",
            "1",
            "--out",
            "bench.csv",
        ],
        dir,
    );
    assert!(
        bench.status.success(),
        "{}",
        String::from_utf8_lossy(&bench.stderr)
    );
    let csv_text = std::fs::read_to_string(dir.join("bench.csv")).unwrap();
    let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
    assert_eq!(reader.headers().unwrap().len(), 10);
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert!(rows.iter().all(|r| r.len() == 10), "ragged csv row");
    let data_rows = rows.iter().filter(|r| &r[0] != "(mean)").count();
    let aggregate_rows = rows.len() - data_rows;
    assert_eq!(data_rows, 10 * 4 * 3);
    assert_eq!(aggregate_rows, 4 * 3);

    // stats prints the summary table
    let stats = wclique(&["stats", "ds"], dir);
    assert!(stats.status.success());
    assert!(stdout(&stats).contains("avg(nodes)"));

    println!("ACCEPTANCE 10 cli-interface: PASS — round-trip, bench csv counts, exit codes 2/3/4");
}
