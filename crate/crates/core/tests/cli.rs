use std::process::{Command, Output};

use serde_json::Value;

fn cayley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley"))
        .args(args)
        .output()
        .expect("run cayley")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_csv_small() {
    let o = cayley(&["table", "--max", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "n,recurrence,closed_form,match\n1,1,1,ok\n2,1,1,ok\n3,3,3,ok\n"
    );
}

#[test]
fn table_single_row_plain() {
    let o = cayley(&["table", "--max", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(
        lines[1].split_whitespace().collect::<Vec<_>>(),
        ["1", "1", "1", "ok"]
    );
}

#[test]
fn table_200_rows_all_ok() {
    let o = cayley(&["table", "--max", "200", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["results"].as_array().unwrap();
    assert_eq!(rows.len(), 200);
    assert!(rows.iter().all(|r| r["match"] == "ok"));
    // ~450 digits, carried as a string
    assert!(rows[199]["recurrence"].as_str().unwrap().len() > 400);
}

fn csv_records(text: &str) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = r.headers().unwrap().iter().map(String::from).collect();
    let mut out = vec![header];
    out.extend(
        r.records()
            .map(|rec| rec.unwrap().iter().map(String::from).collect()),
    );
    out
}

fn json_records(text: &str) -> Vec<Vec<String>> {
    let v: Value = serde_json::from_str(text).unwrap();
    let rows = v["results"].as_array().unwrap();
    let header: Vec<String> = rows[0].as_object().unwrap().keys().cloned().collect();
    let mut out = vec![header];
    for row in rows {
        out.push(
            row.as_object()
                .unwrap()
                .values()
                .map(|c| match c {
                    Value::String(s) => s.clone(),
                    Value::Null => String::new(),
                    other => other.to_string(),
                })
                .collect(),
        );
    }
    out
}

#[test]
fn csv_and_json_carry_identical_content() {
    for args in [
        vec!["table", "--max", "25"],
        vec!["series", "--order", "12", "--what", "lagrange"],
        vec!["series", "--order", "8", "--what", "residuals"],
        vec!["verify", "oracle", "--max", "5"],
        vec!["verify", "closed-form", "--max", "9", "--inject-fault", "5"],
    ] {
        let with = |f: &str| {
            let mut a = args.clone();
            a.extend(["--format", f]);
            stdout(&cayley(&a))
        };
        assert_eq!(
            csv_records(&with("csv")),
            json_records(&with("json")),
            "{args:?}"
        );
    }
}

#[test]
fn verify_suites_pass() {
    for args in [
        ["verify", "closed-form", "--max", "100"],
        ["verify", "edge-symmetry", "--max", "100"],
        ["verify", "oracle", "--max", "6"],
        ["verify", "split", "--max", "6"],
        ["verify", "series", "--order", "30"],
    ] {
        let o = cayley(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", stdout(&o));
    }
}

#[test]
fn verify_oracle_lists_counts() {
    let o = cayley(&["verify", "oracle", "--max", "6", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["results"][0]["value"], "1,1,3,16,125,1296");
}

#[test]
fn corrupted_table_fails_with_index() {
    let o = cayley(&[
        "verify",
        "edge-symmetry",
        "--max",
        "30",
        "--inject-fault",
        "12",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let r = &v["results"][0];
    assert_eq!(r["passed"], false);
    assert_eq!(r["failure_index"], 12);
    assert_ne!(r["lhs"], r["rhs"]);
}

#[test]
fn usage_errors_exit_2() {
    let o = cayley(&["verify", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    for suite in ["closed-form", "edge-symmetry", "oracle", "split", "series"] {
        assert!(err.contains(suite), "{err}");
    }
    assert_eq!(cayley(&["table", "--max", "0"]).status.code(), Some(2));
    assert_eq!(
        cayley(&["verify", "oracle", "--max", "9"]).status.code(),
        Some(2)
    );
    assert_eq!(
        cayley(&["series", "--order", "201", "--what", "egf"])
            .status
            .code(),
        Some(2)
    );
    let o = cayley(&["series", "--order", "0", "--what", "egf"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn series_residuals_report_zero() {
    let o = cayley(&[
        "series",
        "--order",
        "10",
        "--what",
        "residuals",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let recs = csv_records(&stdout(&o));
    assert_eq!(recs.len(), 5);
    for r in &recs[1..] {
        assert_eq!(r[2], "0/1");
        assert_eq!(r[3], "true");
    }
}

#[test]
fn numbers_never_use_exponents() {
    let out = stdout(&cayley(&[
        "series", "--order", "60", "--what", "egf", "--format", "json",
    ]));
    let v: Value = serde_json::from_str(&out).unwrap();
    for row in v["results"].as_array().unwrap() {
        let c = row["coefficient"].as_str().unwrap();
        assert!(c.chars().all(|ch| ch.is_ascii_digit() || ch == '/'), "{c}");
    }
}
