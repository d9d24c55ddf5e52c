use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

use ucg::construction::{verify_construction, Role, Scaffold};
use ucg::io::{parse_graph6, to_graph6};
use ucg::Graph;

fn ucg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ucg"))
        .args(args)
        .env_remove("UCG_BOUND")
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--json", "-"]);
    let out = ucg(&full);
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr));
    });
    (code, v)
}

fn families(dir: &Path) -> Value {
    let out = ucg(&["families", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success());
    serde_json::from_str(&fs::read_to_string(dir.join("manifest.json")).unwrap()).unwrap()
}

#[test]
fn manifest_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = families(dir.path());
    let entries = manifest["fixtures"].as_array().unwrap();
    assert!(entries.len() >= 14);
    for e in entries {
        let g6 = e["graph6"].as_str().unwrap();
        let file = fs::read_to_string(dir.path().join(e["file"].as_str().unwrap())).unwrap();
        assert_eq!(file.trim(), g6);
        let g = parse_graph6(g6).unwrap();
        assert_eq!(to_graph6(&g), g6);
        assert_eq!(g.n() as u64, e["n"].as_u64().unwrap());
    }
}

#[test]
fn identical_runs_give_identical_reports() {
    let run = || {
        let (code, mut v) = report(&["append", "--center", "p3", "--periphery", "hex_prism"]);
        assert_eq!(code, 0);
        v.as_object_mut().unwrap().remove("timing");
        v
    };
    assert_eq!(run(), run());
}

#[test]
fn complete_center_over_two_edges() {
    let dir = tempfile::tempdir().unwrap();
    families(dir.path());
    let p = dir.path().join("2k2.g6");
    let (code, v) = report(&["append", "--center", "k2", "--periphery", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "ucg-report/v1");
    assert_eq!(v["result"]["value"], 2);
    assert_eq!(v["result"]["case_tag"], "complete-center:diam≥4,r≥3");
    assert_eq!(v["inputs"][1]["sha256"].as_str().unwrap().len(), 64);

    // the embedded witness re-verifies from its graph6 and roles alone
    let w = &v["result"]["witness"];
    let graph = parse_graph6(w["graph6"].as_str().unwrap()).unwrap();
    let roles: Vec<Role> = w["roles"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| match r.as_str().unwrap() {
            s if s.starts_with("center(") => Role::Center(s[7..s.len() - 1].parse().unwrap()),
            s if s.starts_with("periphery(") => Role::Periphery(s[10..s.len() - 1].parse().unwrap()),
            _ => Role::X(0),
        })
        .collect();
    let s = Scaffold { graph, roles };
    let c = Graph::complete(2).unwrap();
    let p = parse_graph6("C`").unwrap();
    let rep = verify_construction(&s, &c, &p);
    assert!(rep.ok());
    assert_eq!(rep.intermediate_count, 2);
}

#[test]
fn hex_prism_profile() {
    let (code, v) = report(&["cover", "--periphery", "hex_prism"]);
    assert_eq!(code, 0);
    let entries = v["result"]["profile"].as_array().unwrap();
    let last = entries.iter().find(|e| e["which"] == "cov_AA″B″").unwrap();
    assert_eq!(last["value"]["ne"], 2);
    assert_eq!(last["method"], "shortcut-two-ball");
    assert!(entries.iter().all(|e| e["method"].is_string()));
}

#[test]
fn figure1_centered_periphery() {
    let dir = tempfile::tempdir().unwrap();
    families(dir.path());
    let g = dir.path().join("figure1.g6");
    let (code, v) = report(&["analyze", "--periphery", g.to_str().unwrap()]);
    assert_eq!(code, 0);
    let cp: Vec<&str> = v["result"]["centered_periphery_labels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l.as_str().unwrap())
        .collect();
    assert_eq!(cp, ["p1", "p2", "p3", "p4", "p5", "p6"]);
    assert_eq!(v["result"]["analysis"]["is_ucg"], true);
}

#[test]
fn one_sided_modes() {
    let (code, v) = report(&["append", "--center", "p3", "--center-only"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["value"], 6);
    let (code, v) = report(&["append", "--periphery", "c5", "--periphery-only"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["value"], 1);
}

#[test]
fn refined_construction_from_cover_file() {
    let dir = tempfile::tempdir().unwrap();
    families(dir.path());
    let p = dir.path().join("hept_prism_refined.g6");
    let cover = dir.path().join("hept_prism_refined.cover.json");
    let dot = dir.path().join("w.dot");
    let (code, v) = report(&[
        "construct",
        "--center",
        "k2",
        "--periphery",
        p.to_str().unwrap(),
        "--refined",
        "--cover",
        cover.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verification"]["is_ucg"], true);
    assert!(v["result"]["conditions"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    assert!(fs::read_to_string(dot).unwrap().starts_with("graph G {"));
}

#[test]
fn failed_construction_exits_one() {
    // P5 has radius 2: no two-block covering passes B, so dropping the apex breaks it
    let dir = tempfile::tempdir().unwrap();
    let cover = dir.path().join("c.json");
    fs::write(&cover, r#"{"blocks": [[0, 1, 2], [3, 4]]}"#).unwrap();
    let (code, v) = report(&[
        "construct",
        "--center",
        "k2",
        "--periphery",
        "p5",
        "--rho",
        "1",
        "--drop",
        "1",
        "--cover",
        cover.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["conditions"][1]["pass"], false);
}

#[test]
fn oracle_small_case() {
    let (code, v) = report(&["oracle", "--center", "k1", "--periphery", "c4", "--tmax", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["outcome"]["found"], 0);
    let (code, v) = report(&["oracle", "--center", "k2", "--periphery", "c4", "--tmax", "4", "--bound", "10"]);
    assert_eq!(code, 1);
    assert!(v["result"]["error"].as_str().unwrap().contains("above the bound 10"));
}

#[test]
fn exit_codes() {
    let (code, v) = report(&["append", "--center", "k2", "--periphery", "k3"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["value"], "inf");

    let (code, _) = report(&["cover", "--periphery", "p6", "--k", "2", "--conditions", "a,b1"]);
    assert_eq!(code, 1);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.g6");
    fs::write(&bad, "A~\n").unwrap();
    for args in [
        vec!["analyze", "--graph", bad.to_str().unwrap()],
        vec!["analyze", "--graph", "no-such-graph"],
        vec!["cover", "--periphery", "c5", "--k", "2", "--conditions", "z"],
        vec!["append", "--center", "k2"],
        vec!["frobnicate"],
    ] {
        let out = ucg(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn bounds_come_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_ucg"))
        .args(["cover", "--periphery", "c5", "--json", "-"])
        .env("UCG_BOUND", "pair=9,oracle=12")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["bounds"]["pair_max_n"], 9);
    assert_eq!(v["bounds"]["oracle_free_pairs"], 12);
}
