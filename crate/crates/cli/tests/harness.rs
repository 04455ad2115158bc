use std::fs;
use std::process::Command;

use hamsquare_cli::io::{graph_arg, import_graphs, parse_records};
use hamsquare_cli::report::{export_report, Format};
use hamsquare_cli::{run, RunConfig, Session, Status, Target, VerificationReport};

fn small(lo: usize, hi: usize) -> RunConfig {
    RunConfig { n_min: Some(lo), n_max: Some(hi), ..RunConfig::default() }
}

#[test]
fn report_survives_json_round_trip() {
    let r = run(Target::EdgeExtremal, &small(6, 9)).unwrap();
    assert_eq!(r.status, Status::Confirmed);
    let back = VerificationReport::from_json(&r.to_json()).unwrap();
    assert_eq!(back, r);
    let md = export_report(&r, Format::Markdown);
    assert!(md.starts_with("# edge-extremal"));
    assert!(md.contains("| 8 |"));
}

#[test]
fn runs_are_deterministic() {
    let a = run(Target::SmallCores, &small(6, 11)).unwrap();
    let b = run(Target::SmallCores, &small(6, 11)).unwrap();
    assert_eq!(a.rows, b.rows);
    assert_eq!(a.config_hash, b.config_hash);
    assert_eq!(a.instances_checked, b.instances_checked);
}

#[test]
fn reports_are_written_to_the_output_directory() {
    let dir = tempfile::tempdir().unwrap();
    let config = RunConfig { out_dir: Some(dir.path().to_path_buf()), ..small(6, 8) };
    run(Target::CliqueNumber, &config).unwrap();
    let json = fs::read_to_string(dir.path().join("clique-number.json")).unwrap();
    let r = VerificationReport::from_json(&json).unwrap();
    assert_eq!(r.n_range, (6, 8));
    assert!(dir.path().join("clique-number.md").exists());
}

#[test]
fn exhausted_budget_gives_a_partial_report() {
    let config = RunConfig { max_members: Some(500), ..small(15, 15) };
    let r = run(Target::StarCore, &config).unwrap();
    assert_eq!(r.status, Status::Partial);
    assert!(r.discrepancies.is_empty());
    assert!(r.notices.iter().any(|n| n.contains("budget")));
}

#[test]
fn session_reuses_sweeps_across_targets() {
    let mut s = Session::new(small(12, 12)).unwrap();
    let a = s.run(Target::StarCoreDense).unwrap();
    let b = s.run(Target::EdgeThreshold).unwrap();
    // Below order 18 the star statement fails, e.g. for K5 minus an edge.
    assert_eq!(a.status, Status::Refuted);
    assert_eq!(b.status, Status::Refuted);
    let k5 = hamsquare::catalog::parse_name("K5-").unwrap();
    let found = a.discrepancies.iter().any(|d| {
        let g = hamsquare::graph6::decode_str(&d.graph6).unwrap();
        hamsquare::iso::embed_subgraph(&k5, &g).unwrap().is_present()
    });
    assert!(found);
    assert!(b.wall_time < 1.0);
}

#[test]
fn wrong_gadget_is_refuted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gadgets.tsv");
    fs::write(&path, "G1\tC~\n").unwrap();
    let config = RunConfig { gadgets: Some(path), ..small(10, 10) };
    let r = run(Target::DenseCores, &config).unwrap();
    assert_eq!(r.status, Status::Refuted);
    assert!(!r.discrepancies.is_empty());
}

#[test]
fn records_parse_with_names_and_line_numbers() {
    let recs = parse_records("# comment\n\nstar\tC~\nBw\n", "mem").unwrap();
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[0].name.as_deref(), Some("star"));
    assert_eq!(recs[0].line, 3);
    assert_eq!(recs[1].graph.size(), 3);
    let err = parse_records("Bw\n\u{7f}\n", "mem").unwrap_err();
    assert!(err.to_string().contains("line 2"), "{err}");
}

#[test]
fn graphs_come_from_files_strings_or_names() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.g6");
    fs::write(&path, "a\tC~\nb\tBw\n").unwrap();
    assert_eq!(import_graphs(&path).unwrap().len(), 2);
    assert_eq!(graph_arg(path.to_str().unwrap()).unwrap().size(), 6);
    assert_eq!(graph_arg("Bw").unwrap().size(), 3);
    assert_eq!(graph_arg("S6").unwrap().size(), 5);
    assert!(graph_arg("not a graph").is_err());
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hamsquare"))
}

#[test]
fn exit_codes() {
    let ok = bin().args(["verify", "clique-number", "--n-max", "9", "--format", "json"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let r = VerificationReport::from_json(&String::from_utf8(ok.stdout).unwrap()).unwrap();
    assert_eq!(r.rows.len(), 4);
    let partial = bin().args(["verify", "star-core", "--n-min", "15", "--n-max", "15", "--max-members", "100"]).output().unwrap();
    assert_eq!(partial.status.code(), Some(3));
    assert_eq!(bin().args(["verify", "no-such-target"]).output().unwrap().status.code(), Some(1));
    assert_eq!(bin().args(["verify"]).output().unwrap().status.code(), Some(1));
    assert_eq!(bin().args(["verify", "clique-number", "--tol", "-1"]).output().unwrap().status.code(), Some(1));
}

#[test]
fn subcommands_print_json() {
    let out = bin().args(["embed", "--pattern", "S5", "--host-order", "9"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["embeds"], true);
    let out = bin().args(["contains", "K7"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["contains"], true);
    let out = bin().args(["spectral", "K5"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["mu"].as_f64().unwrap() - 4.0).abs() < 1e-9);
    let out = bin().args(["enumerate", "--n", "8", "--t", "3"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], 5);
    let out = bin().args(["extremal", "--n", "8"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["optimum"], 25);
    let out = bin().args(["cores", "--n", "6", "--t-max", "3"]).output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1);
}
