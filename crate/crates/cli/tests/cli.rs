//! End-to-end tests of the `netmorph` binary: artifact round-trips,
//! seeded replay, and exit codes per failure class.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn netmorph(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netmorph"))
        .args(args)
        .current_dir(dir)
        .env("NETMORPH_CACHE_DIR", dir.join("cache"))
        .output()
        .expect("binary runs")
}

fn assert_ok(out: &Output) {
    assert!(
        out.status.success(),
        "command failed: {}\n{}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
}

fn write(dir: &Path, name: &str, content: &str) {
    fs::write(dir.join(name), content).unwrap();
}

#[test]
fn synth_writes_exactly_the_requested_arcs() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    write(dir, "pa.gen", "# preferential attachment\n(indeg j)\n");
    let out = netmorph(
        dir,
        &[
            "synth", "--program", "pa.gen", "--vertices", "100", "--arcs", "1000", "--seed",
            "42", "--out", "net.edges",
        ],
    );
    assert_ok(&out);
    let text = fs::read_to_string(dir.join("net.edges")).unwrap();
    assert_eq!(text.lines().count(), 1000);

    // output is re-parseable by the same binary
    let out = netmorph(
        dir,
        &[
            "eval",
            "--candidate",
            "net.edges",
            "--target",
            "net.edges",
            "--ensemble",
            "3",
        ],
    );
    assert_ok(&out);
}

#[test]
fn eval_of_the_target_against_itself_is_zero() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    write(dir, "c.gen", "1\n");
    assert_ok(&netmorph(
        dir,
        &[
            "synth", "--program", "c.gen", "--vertices", "60", "--arcs", "300", "--seed", "7",
            "--out", "t.edges",
        ],
    ));
    let out = netmorph(
        dir,
        &[
            "eval",
            "--candidate",
            "t.edges",
            "--target",
            "t.edges",
            "--ensemble",
            "5",
        ],
    );
    assert_ok(&out);
    let report: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("fitness report is JSON");
    assert_eq!(report["fitness"].as_f64().unwrap(), 0.0);
}

#[test]
fn evolve_replays_byte_identically_and_writes_the_run_directory() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    write(dir, "pa.gen", "(indeg j)\n");
    assert_ok(&netmorph(
        dir,
        &[
            "synth", "--program", "pa.gen", "--vertices", "40", "--arcs", "150", "--seed", "9",
            "--out", "t.edges",
        ],
    ));
    let evolve = |out_dir: &str| {
        netmorph(
            dir,
            &[
                "evolve",
                "--target",
                "t.edges",
                "--seed",
                "11",
                "--out-dir",
                out_dir,
                "--stable-gens",
                "12",
                "--ensemble",
                "5",
            ],
        )
    };
    assert_ok(&evolve("run1"));
    assert_ok(&evolve("run2"));

    for name in ["run.json", "history.csv", "best.gen", "shortest.gen", "synthetic.edges"] {
        assert!(dir.join("run1").join(name).exists(), "missing {name}");
    }
    let h1 = fs::read(dir.join("run1/history.csv")).unwrap();
    let h2 = fs::read(dir.join("run2/history.csv")).unwrap();
    assert_eq!(h1, h2, "seeded replay must reproduce history.csv exactly");
    assert_eq!(
        fs::read(dir.join("run1/synthetic.edges")).unwrap(),
        fs::read(dir.join("run2/synthetic.edges")).unwrap()
    );

    // the evolved program file is itself a loadable program
    let out = netmorph(
        dir,
        &[
            "eval",
            "--program",
            "run1/shortest.gen",
            "--target",
            "t.edges",
            "--ensemble",
            "5",
        ],
    );
    assert_ok(&out);
}

#[test]
fn compare_a_network_with_itself_is_all_zeros() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    write(dir, "c.gen", "1\n");
    assert_ok(&netmorph(
        dir,
        &[
            "synth", "--program", "c.gen", "--vertices", "50", "--arcs", "200", "--seed", "3",
            "--out", "t.edges",
        ],
    ));
    let out = netmorph(
        dir,
        &[
            "compare", "--a", "t.edges", "--b", "t.edges", "--hist-dir", "hists",
        ],
    );
    assert_ok(&out);
    let vector: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let object = vector.as_object().unwrap();
    assert_eq!(object.len(), 7);
    for (metric, value) in object {
        assert_eq!(value.as_f64().unwrap(), 0.0, "{metric} nonzero");
    }
    for name in ["a_d_d.hist", "a_d_u.hist", "a_tau.hist", "b_d_d.hist"] {
        let text = fs::read_to_string(dir.join("hists").join(name)).unwrap();
        assert!(!text.is_empty());
        for line in text.lines() {
            assert_eq!(line.split_whitespace().count(), 2, "bad line `{line}`");
        }
    }
}

#[test]
fn gensim_reports_zero_for_identical_programs() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    write(dir, "a.gen", "(indeg j)\n");
    write(dir, "b.gen", "(* (indeg j) 2)\n");
    let out = netmorph(
        dir,
        &[
            "gensim", "--a", "a.gen", "--b", "b.gen", "--vertices", "50", "--arcs", "200",
            "--seed", "5",
        ],
    );
    assert_ok(&out);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["d"].as_f64().unwrap(), 0.0, "scale-equivalent programs");
    assert!(value["seeds"].as_array().unwrap().len() == 2);
}

#[test]
fn baseline_is_cached_and_deterministic() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    write(dir, "c.gen", "1\n");
    assert_ok(&netmorph(
        dir,
        &[
            "synth", "--program", "c.gen", "--vertices", "40", "--arcs", "120", "--seed", "2",
            "--out", "t.edges",
        ],
    ));
    let run = || {
        netmorph(
            dir,
            &["baseline", "--target", "t.edges", "--count", "5", "--seed", "4"],
        )
    };
    let first = run();
    assert_ok(&first);
    assert!(dir.join("cache").is_dir(), "cache directory created");
    let second = run();
    assert_ok(&second);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn exit_codes_by_failure_class() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();

    // usage: unknown flag
    let out = netmorph(dir, &["synth", "--bogus"]);
    assert_eq!(out.status.code(), Some(1));

    // input: missing file
    let out = netmorph(
        dir,
        &[
            "synth", "--program", "nope.gen", "--vertices", "5", "--arcs", "2", "--out", "x",
        ],
    );
    assert_eq!(out.status.code(), Some(2));

    // input: malformed program
    write(dir, "bad.gen", "(min (indeg i)\n");
    let out = netmorph(
        dir,
        &[
            "synth", "--program", "bad.gen", "--vertices", "5", "--arcs", "2", "--out", "x",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("syntax error"));

    // input: directed-only variable in undirected mode
    write(dir, "dir.gen", "(outdeg j)\n");
    let out = netmorph(
        dir,
        &[
            "synth",
            "--program",
            "dir.gen",
            "--vertices",
            "5",
            "--arcs",
            "2",
            "--undirected",
            "--out",
            "x",
        ],
    );
    assert_eq!(out.status.code(), Some(2));

    // runtime: more arcs than capacity
    write(dir, "c.gen", "1\n");
    let out = netmorph(
        dir,
        &[
            "synth", "--program", "c.gen", "--vertices", "3", "--arcs", "99", "--out", "x",
        ],
    );
    assert_eq!(out.status.code(), Some(3));

    // usage: parameter outside its legal range
    let out = netmorph(
        dir,
        &[
            "synth", "--program", "c.gen", "--vertices", "5", "--arcs", "2", "--out", "x",
            "--sample-ratio", "2.0",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
}
