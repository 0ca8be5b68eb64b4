use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_antipode-spectrum"))
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn binary");
    let mut pipe = child.stdin.take().expect("stdin");
    pipe.write_all(stdin.unwrap_or("").as_bytes()).expect("write stdin");
    drop(pipe);
    child.wait_with_output().expect("wait")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn spec_of(args: &[&str]) -> String {
    let o = run(args, None);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn taft_spec_piped_into_charpoly() {
    let spec = spec_of(&["family", "taft", "--n", "3"]);
    let o = run(&["charpoly"], Some(&spec));
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.pop(), Some("total degree 81"));
    lines.sort();
    assert_eq!(lines, ["(z - (1))^27", "(z - (z))^27", "(z - (z^2))^27"]);
}

#[test]
fn uqsl2_run_json() {
    let o = run(&["family", "uqsl2", "--ell", "5", "--run", "--json"], None);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "symbolic");
    assert_eq!(v["total_degree"], 3125);
    let total: u64 = v["eigenvalues"].as_array().unwrap().iter().map(|e| e["multiplicity"].as_u64().unwrap()).sum();
    assert_eq!(total, 3125);
}

#[test]
fn limit_zero_is_a_power_of_z_cubed_minus_one() {
    let spec = spec_of(&["family", "uqsl2", "--ell", "3"]);
    let o = run(&["charpoly", "--limit", "zero"], Some(&spec));
    assert!(stdout(&o).contains("polynomial (z^3 - 1)^81"), "{}", stdout(&o));
}

#[test]
fn emitted_specs_verify() {
    for args in [
        vec!["family", "taft", "--n", "5"],
        vec!["family", "vecg", "--group", "S3"],
        vec!["family", "regular", "--preset", "fibonacci"],
    ] {
        let spec = spec_of(&args);
        let o = run(&["verify"], Some(&spec));
        assert!(o.status.success(), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn json_output_is_deterministic() {
    let spec = spec_of(&["family", "regular", "--preset", "fibonacci"]);
    let a = stdout(&run(&["charpoly", "--json"], Some(&spec)));
    let b = stdout(&run(&["charpoly", "--json"], Some(&spec)));
    assert_eq!(a, b);
    assert_eq!(serde_json::from_str::<serde_json::Value>(&a).unwrap()["total_degree"], 13);
}

#[test]
fn ambiguous_m_is_an_input_error() {
    let spec = spec_of(&["family", "uqsl2", "--ell", "3"]);
    let mut v: serde_json::Value = serde_json::from_str(&spec).unwrap();
    v.as_object_mut().unwrap().remove("m_vector");
    let o = run(&["charpoly"], Some(&v.to_string()));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("multiplicity 2"));
}

#[test]
fn explicit_m_resolves_ambiguity() {
    let spec = spec_of(&["family", "uqsl2", "--ell", "3"]);
    let mut v: serde_json::Value = serde_json::from_str(&spec).unwrap();
    v.as_object_mut().unwrap().remove("m_vector");
    let m = "L - 1, L*z - z^-1, L*z^-1 - z";
    let o = run(&["charpoly", "--m", m, "--summary"], Some(&v.to_string()));
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("total degree 243"));
}

#[test]
fn unmatched_vecg_exits_one() {
    let o = run(&["family", "vecg", "--group", "Z2", "--kappa", "1,-1", "--subgroup", "0,1", "--run"], None);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn malformed_spec_reports_position() {
    let o = run(&["charpoly"], Some("{\n  \"category\": ,\n}"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn uq_verify_reports_failed_identities() {
    let spec = spec_of(&["family", "uqsl2", "--ell", "3"]);
    let o = run(&["verify", "--json"], Some(&spec));
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], false);
}

#[test]
fn oracle_radical_of_uqsl2() {
    let o = run(&["oracle", "radical", "--algebra", "uqsl2", "--n", "3", "--json"], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains("13"));
}

#[test]
fn pivotalize_matches_charpoly_on_fibonacci() {
    let spec = spec_of(&["family", "regular", "--preset", "fibonacci"]);
    let o = run(&["pivotalize"], Some(&spec));
    assert!(o.status.success());
    assert!(stdout(&o).contains("total degree 13"));
}
