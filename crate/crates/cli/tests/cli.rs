use std::process::{Command, Output};

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_combilab"));
    cmd.args(args).env_remove("COMBILAB_MAX_ENUM");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn counts() {
    assert_eq!(stdout(&["count", "--family", "minpart", "-n", "8", "-p", "2"]), "13\n");
    assert_eq!(stdout(&["count", "--family", "marked", "-n", "4", "-k", "1", "-p", "2"]), "2\n");
    assert_eq!(stdout(&["count", "--family", "insets", "-n", "2", "-k", "1", "-m", "1"]), "8\n");
    assert_eq!(stdout(&["count", "--family", "weak-zeros", "-n", "2", "-k", "1"]), "5\n");
    assert_eq!(stdout(&["count", "--family", "usequences", "-n", "3", "-k", "1"]), "8\n");
}

#[test]
fn large_counts_are_exact() {
    // c(300, 1) = 2^299
    let want = "1018517988167243043134222844204689080525734196832968125318070224677190649881668353091698688";
    assert_eq!(stdout(&["count", "--family", "minpart", "-n", "300", "-p", "1"]).trim(), want);
}

#[test]
fn enumerations() {
    assert_eq!(stdout(&["enumerate", "--family", "minpart", "-n", "4", "-p", "2"]), "(2,2)\n(4)\n");
    assert_eq!(stdout(&["enumerate", "--family", "minpart", "-n", "0", "-p", "3"]), "()\n");
    assert_eq!(
        stdout(&["enumerate", "--family", "usequences", "-n", "2", "-k", "1", "--format", "jsonl"]),
        "{\"symbols\":\"1x\"}\n{\"symbols\":\"1|x\"}\n{\"symbols\":\"x1\"}\n"
    );
    assert_eq!(
        stdout(&["enumerate", "--family", "minpart", "-n", "5", "-p", "2", "--format", "jsonl"]),
        "{\"parts\":[2,3]}\n{\"parts\":[3,2]}\n{\"parts\":[5]}\n"
    );
}

#[test]
fn charpolys() {
    assert_eq!(stdout(&["charpoly", "-n", "4", "-p", "2"]), "x^4 + 3x^2 - 2x + 2\n");
    assert_eq!(stdout(&["charpoly", "-n", "1", "-p", "1"]), "x - 1\n");
    assert_eq!(stdout(&["charpoly", "-n", "0", "-p", "2"]), "1\n");
    assert_eq!(
        stdout(&["charpoly", "-n", "4", "-p", "2", "--format", "json"]),
        "{\"coeffs\":[\"2\",\"-2\",\"3\",\"0\",\"1\"]}\n"
    );
}

#[test]
fn json_round_trips_byte_for_byte() {
    let outputs = [
        stdout(&["charpoly", "-n", "40", "-p", "1", "--format", "json"]),
        stdout(&["enumerate", "--family", "insets", "-n", "2", "-k", "2", "-m", "1", "--format", "jsonl"]),
        stdout(&["enumerate", "--family", "exact-large", "--total", "7", "-k", "2", "-a", "2", "--format", "jsonl"]),
    ];
    for text in outputs {
        for line in text.lines() {
            let value: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(serde_json::to_string(&value).unwrap(), line);
        }
    }
}

#[test]
fn big_coefficients_are_strings() {
    let text = stdout(&["charpoly", "-n", "80", "-p", "1", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    let coeffs = value["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len(), 81);
    assert!(coeffs.iter().all(|c| c.is_string()));
    // constant term is det(-F) = det F for even n, and det F(80,1) = 2^79
    assert_eq!(coeffs[0], "604462909807314587353088");
}

#[test]
fn verify_reports() {
    let text = stdout(&["verify", "--identity", "prop5-det", "--max-n", "40", "--max-p", "5"]);
    assert!(text.contains("cases: 200"), "{text}");
    assert!(text.contains("failures: 0"), "{text}");
    let text = stdout(&["verify", "--identity", "prop4-s2-example"]);
    assert!(text.contains("PASS"), "{text}");
}

#[test]
fn table_is_csv() {
    assert_eq!(
        stdout(&["table", "--family", "marked", "-p", "2", "--max-n", "4", "--max-k", "2"]),
        "n,0,1,2\n0,1,0,0\n1,0,1,0\n2,1,0,1\n3,1,2,0\n4,2,2,3\n"
    );
    let text = stdout(&["table", "--family", "minor-sums", "-p", "2", "--max-n", "4", "--max-k", "5"]);
    assert_eq!(text.lines().last(), Some("4,2,2,3,0,1,"));
    let text = stdout(&["table", "--family", "cheb-first", "--max-n", "3", "--max-k", "3"]);
    assert_eq!(text.lines().nth(2), Some("1,2,-3,1,"));
    assert!(!text.contains('\r'));
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--family", "insets", "-n", "4", "-k", "3", "-m", "2"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["verify", "--identity", "prop6-minors", "--max-n", "8"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["count", "--family", "minpart", "-n", "8"][..],
        &["count", "--family", "minpart", "-n", "8", "-p", "0"],
        &["count", "--family", "nope", "-n", "8"],
        &["count", "--family", "insets", "-n", "2", "-k", "4", "-m", "1"],
        &["verify", "--identity", "prop9"],
        &["table", "--family", "insets"],
        &["charpoly", "-n", "3", "-p", "0"],
        &[],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    let out = run_env(&["enumerate", "--family", "minpart", "-n", "3", "-p", "1"], &[("COMBILAB_MAX_ENUM", "lots")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn guards_exit_3() {
    let out = run(&["enumerate", "--family", "minpart", "-n", "31", "-p", "6"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("30"));
    assert!(out.stdout.is_empty());
    assert_eq!(run(&["charpoly", "-n", "2001", "-p", "1"]).status.code(), Some(3));
}

#[test]
fn guard_override() {
    let args = ["enumerate", "--family", "minpart", "-n", "31", "-p", "6"];
    let out = run_env(&args, &[("COMBILAB_MAX_ENUM", "40")]);
    assert_eq!(out.status.code(), Some(0));
    let lines = String::from_utf8(out.stdout).unwrap().lines().count();
    assert_eq!(lines.to_string(), stdout(&["count", "--family", "minpart", "-n", "31", "-p", "6"]).trim());
    // the flag wins over the environment
    let mut with_flag = args.to_vec();
    with_flag.extend(["--max-enum", "31"]);
    assert_eq!(run_env(&with_flag, &[("COMBILAB_MAX_ENUM", "5")]).status.code(), Some(0));
}
