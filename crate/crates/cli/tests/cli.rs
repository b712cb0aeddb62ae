use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperroots"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn eval_prints_fifteen_digits() {
    let o = run(&["eval", "gamma", "0.5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "1.77245385090552");
    let o = run(&["eval", "2f1", "0.5", "1", "2", "0.5"]);
    assert_eq!(stdout(&o).trim(), "1.17157287525381");
    let o = run(&["eval", "gamma", "1+1i"]);
    assert_eq!(stdout(&o).trim(), "0.498015668118356-0.154949828301811i");
}

#[test]
fn eval_exit_codes() {
    assert_eq!(code(&run(&["eval", "bogus", "1"])), 2);
    assert_eq!(code(&run(&["eval", "gamma", "-2"])), 3);
    assert_eq!(code(&run(&["eval", "gamma", "x"])), 2);
    assert_eq!(code(&run(&["eval", "2f1", "1", "1", "2", "1"])), 3);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn roots_closed_quadratic() {
    let o = run(&["roots", "2", "0.21", "closed"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("x = 0.3 "), "{text}");
    assert!(text.contains("x = 0.7 "), "{text}");
}

#[test]
fn roots_quartic_both_deviation() {
    let o = run(&["roots", "4", "0.05", "both", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["deviation"].as_f64().unwrap() <= 1e-8);
    assert_eq!(v["closed_form"]["roots"].as_array().unwrap().len(), 4);
    assert_eq!(v["series"]["method"], "series");
}

#[test]
fn roots_domain_errors() {
    assert_eq!(code(&run(&["roots", "5", "0.1", "closed"])), 3);
    assert_eq!(code(&run(&["roots", "2", "0.3", "series"])), 3);
    assert_eq!(code(&run(&["roots", "2", "-0.1", "series"])), 0);
}

#[test]
fn integrate_commands() {
    let o = run(&["integrate", "J1", "--n", "0", "--s", "2", "--x", "1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("verdict = pass") && text.contains("closed_form = 1.126703698416"), "{text}");
    let o = run(&["integrate", "custom", "exp(-t)"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("value = 1\n") || stdout(&o).starts_with("value = 0.99999999999"));
    let o = run(&["integrate", "custom", "t^(-0.5)/(1+t)", "--exponent", "-0.5", "--power", "-1.5"]);
    let v: f64 = stdout(&o).lines().next().unwrap().trim_start_matches("value = ").parse().unwrap();
    assert!((v - std::f64::consts::PI).abs() < 1e-9);
    assert_eq!(code(&run(&["integrate", "J3", "--p", "0.4", "--x", "1"])), 3);
    assert_eq!(code(&run(&["integrate", "custom", "exp(-"])), 2);
    assert_eq!(code(&run(&["integrate", "J9"])), 2);
    assert_eq!(code(&run(&["integrate", "J2", "--p", "1"])), 2);
    let o = run(&["integrate", "J0", "--a", "1", "--b", "2", "--alpha", "1", "--s", "2", "--x", "1"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn check_i01_user_grid() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = run(&["check", "--ids", "I01", "--grid", "t:-0.9:0.9:50", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("total=50"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["records"].as_array().unwrap().len(), 50);
    let pass = v["summary"]["pass"].as_u64().unwrap();
    assert!((48..=50).contains(&pass));
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn report_schema() {
    let o = run(&["check", "--ids", "I07,K01", "--grid", "n=1,2", "--grid", "t=0.2,1", "--grid", "z=0.5"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let obj = v.as_object().unwrap();
    assert_eq!(obj.len(), 5);
    for k in ["version", "config", "records", "summary", "wall_time_ms"] {
        assert!(obj.contains_key(k), "{k}");
    }
    let recs = v["records"].as_array().unwrap();
    // I07 on 2 x 2 points, K01 on n = 1, 2 with z = 0.5
    assert_eq!(recs.len(), 4 + 2);
    let s = &v["summary"];
    let sum: u64 = ["pass", "fail", "skipped_domain", "divergent_both"].iter().map(|k| s[k].as_u64().unwrap()).sum();
    assert_eq!(sum, s["total"].as_u64().unwrap());
    // sorted by id, then parameters
    let ids: Vec<_> = recs.iter().map(|r| r["identity_id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert_eq!(recs[0]["params"]["n"], 1);
    assert_eq!(recs[1]["params"]["t"][0], 1.0);
}

#[test]
fn csv_output() {
    let o = run(&["check", "--ids", "I13", "--grid", "z=0.1,0.2", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "identity_id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,verdict");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("I13,z=0.1,") && lines[1].ends_with(",pass"));
}

#[test]
fn j3_check_with_tolerance() {
    let o = run(&["check", "--ids", "J3", "--tol", "1e-5", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",pass")), "{text}");
}

#[test]
fn failures_exit_one() {
    let o = run(&["check", "--ids", "J1", "--tol", "1e-17"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn check_usage_and_io_errors() {
    assert_eq!(code(&run(&["check", "--ids", "I99"])), 2);
    assert_eq!(code(&run(&["check", "--ids", "I01", "--grid", "t:0:1"])), 2);
    assert_eq!(code(&run(&["check", "--ids", "I01", "--tol", "-1"])), 2);
    assert_eq!(code(&run(&["check", "--ids", "I02", "--grid", "t=0.5", "--grid", "n=99"])), 2);
    assert_eq!(code(&run(&["check", "--ids", "I01", "--format", "xml"])), 2);
    assert_eq!(code(&run(&["check", "--ids", "I01", "--out", "/nonexistent-dir/r.json"])), 4);
    assert_eq!(code(&run(&["sweep"])), 2);
    assert_eq!(code(&run(&["sweep", "--config", "/nonexistent-dir/c.json"])), 4);
}

#[test]
fn sweep_reads_config_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(
        &cfg,
        r#"{"identity_ids":["I01","I13"],"grid":{"t":{"min":0.1,"max":0.5,"count":3},"z":["0.1+0.1i"]},"seed":5,"output_format":"csv"}"#,
    )
    .unwrap();
    let o = run(&["sweep", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 1 + 3 + 1);
    let o = run(&["sweep", "--config", cfg.to_str().unwrap(), "--ids", "I13", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["records"].as_array().unwrap().len(), 1);
    assert_eq!(v["config"]["seed"], 5);
    std::fs::write(&cfg, r#"{"identity_ids": 3}"#).unwrap();
    assert_eq!(code(&run(&["sweep", "--config", cfg.to_str().unwrap()])), 2);
}

#[test]
fn list_names_every_check() {
    let o = run(&["list"]);
    let text = stdout(&o);
    for id in ["I01", "I14a", "I18", "K02", "J0", "J3", "2f1", "bell"] {
        assert!(text.contains(id), "{id}");
    }
}
