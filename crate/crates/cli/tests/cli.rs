use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z3hopf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim_end().to_string()
}

#[test]
fn normalize_examples() {
    let o = run(&["normalize", "-p", "Mq2", "d*a"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "a*d - (q - 1)*beta*gamma");
    let o = run(&["normalize", "-p", "plane", "q^2 * phi * theta"]);
    assert_eq!(stdout(&o), "theta*phi");
    let o = run(&["normalize", "-p", "Mq2", "Dq^-1*Dq"]);
    assert_eq!(stdout(&o), "1");
}

#[test]
fn grade_example() {
    let o = run(&["grade", "-p", "Mq2", "beta*gamma"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0");
    assert_eq!(stdout(&run(&["grade", "-p", "Mq2", "a + gamma"])), "inhomogeneous");
}

#[test]
fn apply_examples() {
    let delta = stdout(&run(&["apply", "-p", "Mq2", "delta", "beta"]));
    let direct = stdout(&run(&["normalize", "-p", "Mq2", "a ox beta + beta ox d"]));
    assert_eq!(delta, direct);
    assert_eq!(stdout(&run(&["apply", "-p", "Mq2", "antipode", "beta"])), "-beta*Dq^-1");
    assert_eq!(stdout(&run(&["apply", "-p", "Mq2", "epsilon", "a*d"])), "1");
}

#[test]
fn parse_error_exits_2() {
    let o = run(&["normalize", "-p", "Mq2", "a * (beta + gamma"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
    let o = run(&["normalize", "-p", "nowhere", "a"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["apply", "-p", "Mq2", "frobnicate", "a"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "no-such-check"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "determinant-central", "-p", "Mq2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS determinant-central"));
    let o = run(&["verify", "antipode-square"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL"));
    // informational checks never fail
    let o = run(&["verify", "dual-plane"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn machine_output_is_json() {
    let o = run(&["verify", "hecke", "--format", "machine"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).expect("valid JSON");
    assert_eq!(v["summary"]["pass"], 1);
    assert_eq!(v["checks"][0]["name"], "hecke");
    let o = run(&["census", "Mq2", "--degree", "2", "--format", "machine"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["census"], serde_json::json!([1, 4, 10]));
}

#[test]
fn verify_all_is_deterministic() {
    let args = ["verify", "all", "--cases", "50", "--format", "machine"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(1));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn confluence_and_export() {
    let o = run(&["confluence", "SLq2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&run(&["export", "plane"]));
    assert!(text.contains("phi*theta -> q*theta*phi"));

    let dir = std::env::temp_dir().join(format!("z3hopf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("plane.txt");
    std::fs::write(&file, format!("{text}\n")).unwrap();
    let f = file.to_str().unwrap();
    assert_eq!(stdout(&run(&["normalize", "-f", f, "phi*theta"])), "q*theta*phi");
    assert_eq!(run(&["confluence", "-f", f]).status.code(), Some(0));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn census_and_list() {
    assert_eq!(stdout(&run(&["census", "plane", "4"])), "0: 1\n1: 2\n2: 3\n3: 2\n4: 1");
    let list = stdout(&run(&["list"]));
    assert!(list.contains("Uqgl2") && list.contains("rll-relations"));
}
