use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gencartan")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("gencartan-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn verify_x_prime_power() {
    let o = run(&["verify", "x", "--p", "2", "--r", "1", "--w-max", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 5);
    assert!(lines.iter().all(|l| l.starts_with("PASS x-prime-power")));
    assert!(lines[4].contains("w=4"));
}

#[test]
fn verify_x_trivial_and_general() {
    assert_eq!(run(&["verify", "x", "--p", "2", "--r", "0", "--w-max", "4"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "x", "--ell", "12", "--w-max", "4"]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "x", "--p", "4", "--r", "1", "--w-max", "2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "cartan", "--ell", "1", "--n-max", "5"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "reduction", "--p", "6", "--r", "1", "--w-max", "2"]).status.code(), Some(2));
    assert_eq!(run(&["table", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_cartan() {
    assert_eq!(run(&["verify", "cartan", "--ell", "2", "--n-max", "6"]).status.code(), Some(0));
    let o = run(&["verify", "cartan", "--ell", "4", "--n-max", "8", "--blockwise"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("cartan-block core=[] ell=4 n=4"));
    assert!(text.contains("cartan-block core=[1] ell=4 n=1"));
}

#[test]
fn verify_reduction() {
    for args in [["2", "1", "6"], ["3", "2", "5"], ["2", "0", "6"]] {
        let o = run(&["verify", "reduction", "--p", args[0], "--r", args[1], "--w-max", args[2]]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
}

#[test]
fn json_matches_stdout() {
    let path = std::env::temp_dir().join(format!("gencartan-cli-{}-reports.json", std::process::id()));
    let o = run(&["verify", "wreath-ops", "--trials", "50", "--seed", "7", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<serde_json::Value> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(reports.len(), lines.len());
    for (r, line) in reports.iter().zip(&lines) {
        for key in ["check", "params", "status", "expected", "actual", "millis"] {
            assert!(r.get(key).is_some(), "{key}");
        }
        assert_eq!(r["status"], "pass");
        assert!(line.starts_with(&format!("PASS {}", r["check"].as_str().unwrap())));
        assert_eq!(r["params"]["seed"], "7");
    }
    std::fs::remove_file(path).ok();
}

#[test]
fn tables() {
    let theta = stdout(&run(&["table", "theta", "--ell", "6", "--w", "3"]));
    assert_eq!(theta.lines().count(), 4);
    assert!(theta.contains("\"[2,1]\",18"));
    let cpr = stdout(&run(&["table", "cpr", "--p", "2", "--r", "2", "--w", "2"]));
    assert!(cpr.contains("\"[1,1]\",5"));
    assert!(cpr.contains("[2],1"));
    let rell = stdout(&run(&["table", "rell", "--ell", "1", "--n", "3"]));
    assert_eq!(rell.trim(), "partition,value");
}

#[test]
fn snf_files() {
    let o = run(&["snf", scratch("m", "2, 1\n0, 4\n").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n8\n");
    let id = run(&["snf", scratch("id", "1 0 0\n\n0 1 0\n0 0 1\n").to_str().unwrap()]);
    assert_eq!(stdout(&id), "1\n1\n1\n");
    let bad = run(&["snf", scratch("bad", "1 2\n3 x\n").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("line 2"));
}
