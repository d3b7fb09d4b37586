//! The command-line interface, in process through `cli::run` and once
//! through the built binary.

use std::process::Command;

use sl5susy::cli::{run, Outcome, EXIT_FAILURE, EXIT_SUCCESS, EXIT_USAGE};

fn sl5susy(args: &[&str]) -> Outcome {
    run(std::iter::once("sl5susy").chain(args.iter().copied()))
}

#[test]
fn levels_text() {
    let out = sl5susy(&["levels", "--max-level", "6", "--format", "text"]);
    assert_eq!(out.code, EXIT_SUCCESS, "{}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[5], "6: (0002)+(1100)");
    assert_eq!(sl5susy(&["levels", "--max-level", "1"]).stdout, "1: (0010)\n");
}

#[test]
fn levels_json_includes_paired_levels() {
    let out = sl5susy(&["levels", "--max-level", "6", "--format", "json"]);
    assert_eq!(out.code, EXIT_SUCCESS);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let levels = v["levels"].as_array().unwrap();
    assert_eq!(levels.first().unwrap()["level"], -1);
    assert_eq!(levels.first().unwrap()["origin"], "paired");
    assert_eq!(levels.last().unwrap()["level"], 6);
    assert_eq!(levels.last().unwrap()["parity"], "even");
}

#[test]
fn paired_text_lists_non_positive_levels() {
    let out = sl5susy(&["levels", "--max-level", "6", "--paired"]);
    assert!(out.stdout.starts_with("-1: (0011)+(2000)\n0: (1001)\n1: (0010)\n"), "{}", out.stdout);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["levels", "--max-level", "0"][..],
        &["levels", "--format", "yaml"],
        &["cohomology", "--field", "tensor"],
        &["e510", "nothing"],
        &["frobnicate"],
        &[],
    ] {
        let out = sl5susy(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(sl5susy(&["--help"]).code, EXIT_SUCCESS);
}

#[test]
fn json_is_deterministic() {
    let args = ["levels", "--max-level", "8", "--format", "json"];
    assert_eq!(sl5susy(&args).stdout, sl5susy(&args).stdout);
    let args = ["e510", "jacobi", "--trials", "9", "--max-degree", "2", "--seed", "3", "--format", "json"];
    assert_eq!(sl5susy(&args).stdout, sl5susy(&args).stdout);
}

#[test]
fn verify_passes_and_fault_injection_fails() {
    let out = sl5susy(&["verify", "--max-level", "6", "--max-x-degree", "0"]);
    assert_eq!(out.code, EXIT_SUCCESS, "{}", out.stdout);
    let names: Vec<&str> = out
        .stdout
        .lines()
        .filter(|l| l.starts_with("PASS ") || l.starts_with("FAIL "))
        .filter_map(|l| l[5..].split(':').next())
        .collect();
    assert_eq!(names.len(), 6);
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);

    let out = sl5susy(&["verify", "--max-level", "3", "--max-x-degree", "0"]);
    assert!(out.stdout.contains("levels 3..3"), "{}", out.stdout);

    let out = sl5susy(&["verify", "--max-level", "5", "--max-x-degree", "0", "--inject-fault", "--format", "json"]);
    assert_eq!(out.code, EXIT_FAILURE);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let free = v["items"].as_array().unwrap().iter().find(|i| i["name"] == "free-generation").unwrap();
    assert!(free["detail"].as_str().unwrap().contains("level 3"));
}

#[test]
fn cohomology_latex_and_json() {
    let out = sl5susy(&["cohomology", "--field", "scalar", "--format", "latex", "--n-max", "6"]);
    assert_eq!(out.code, EXIT_SUCCESS);
    for entry in ["(0000)", "(1000)", "(0001)", "\\bullet"] {
        assert!(out.stdout.contains(entry), "{entry}");
    }
    let out = sl5susy(&["cohomology", "--field", "oneform", "--format", "json", "--n-max", "5"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["field"], "oneform");
    assert_eq!(v["n_max"], 5);
    assert_eq!(v["classes"].as_array().unwrap().len(), 5);
}

#[test]
fn e510_subcommands() {
    let out = sl5susy(&["e510", "levels", "--max-level", "4"]);
    assert_eq!(out.stdout.trim(), "2: (1000), 1: (0010), 0: (1001), -1: (0011)");
    let out = sl5susy(&["e510", "jacobi", "--trials", "9", "--max-degree", "2"]);
    assert_eq!(out.code, EXIT_SUCCESS);
    assert!(out.stdout.contains("0 failures"));
    let out = sl5susy(&["e510", "dims", "--max-degree", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["rows"][1]["vector_rank"], 24);
}

#[test]
fn series_output() {
    let out = sl5susy(&["series", "--series", "theta", "--max-level", "6"]);
    assert_eq!(out.stdout, "0: (0000)\n1: 0\n2: -(1000)\n3: (0001)\n4: 0\n5: -(0000)\n6: 0\n");
    let out = sl5susy(&["series", "--max-level", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["truncation"], 2);
}

#[test]
fn config_file_sets_defaults_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.conf");
    std::fs::write(&config, "# defaults\nmax-level = 2\nformat = json\n").unwrap();
    let c = config.to_str().unwrap();
    let out = sl5susy(&["levels", "--config", c]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["max_level"], 2);
    let out = sl5susy(&["levels", "--config", c, "--format", "text", "--max-level", "3"]);
    assert_eq!(out.stdout, "1: (0010)\n2: (1000)\n3: (0001)\n");

    std::fs::write(&config, "colour = blue\n").unwrap();
    assert_eq!(sl5susy(&["levels", "--config", c]).code, EXIT_USAGE);
}

#[test]
fn out_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("levels.txt");
    let out = sl5susy(&["levels", "--max-level", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_SUCCESS);
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1: (0010)\n2: (1000)\n");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_sl5susy");
    let ok = Command::new(bin).args(["levels", "--max-level", "1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "1: (0010)\n");
    let usage = Command::new(bin).args(["levels", "--max-level", "0"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let fail = Command::new(bin).args(["verify", "--max-level", "3", "--max-x-degree", "0", "--inject-fault"]).output().unwrap();
    assert_eq!(fail.status.code(), Some(1));
}
