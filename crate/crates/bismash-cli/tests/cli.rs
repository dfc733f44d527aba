use std::process::{Command, Output};

use serde_json::Value;

fn bismash(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bismash")).args(args).env_remove("BISMASH_MAX_WORK").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// CSV records as string maps, empty cells dropped.
fn csv_rows(text: &str) -> Vec<Vec<(String, String)>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = r.headers().unwrap().iter().map(String::from).collect();
    r.records()
        .map(|rec| {
            header
                .iter()
                .zip(rec.unwrap().iter())
                .filter(|(_, v)| !v.is_empty())
                .map(|(k, v)| (k.clone(), v.to_string()))
                .collect()
        })
        .collect()
}

fn json_rows(text: &str) -> Vec<Vec<(String, String)>> {
    let v: Value = serde_json::from_str(text).unwrap();
    v.as_array()
        .unwrap()
        .iter()
        .map(|row| {
            row.as_object()
                .unwrap()
                .iter()
                .filter(|(_, v)| !v.is_null())
                .map(|(k, v)| (k.clone(), v.as_str().map_or_else(|| v.to_string(), String::from)))
                .collect()
        })
        .collect()
}

fn same_rows(args: &[&str]) {
    let csv = bismash(&[args, &["--format", "csv"]].concat());
    let json = bismash(&[args, &["--format", "json"]].concat());
    assert!(csv.status.success() && json.status.success());
    let (a, b) = (csv_rows(&stdout(&csv)), json_rows(&stdout(&json)));
    assert!(!a.is_empty());
    assert_eq!(a, b, "{args:?}");
}

#[test]
fn indicators_twelve_two() {
    let o = bismash(&["indicators", "--n", "12", "--t", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("pairs (+1:30, -1:2, 0:16)"));
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 24);
    assert!(stdout(&o).contains("(1 5 9)") || stdout(&o).contains("(2 10)"), "cycle notation");
}

#[test]
fn indicators_two_and_zero() {
    let o = bismash(&["indicators", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    assert!(rows.iter().all(|r| r.contains(&("indicator".into(), "+1".into()))));
    assert_eq!(bismash(&["indicators", "--n", "0"]).status.code(), Some(1));
}

#[test]
fn count_m_twelve() {
    let o = bismash(&["count", "--n", "12", "--quantity", "M"]);
    assert_eq!(o.status.code(), Some(0));
    let values: Vec<String> =
        csv_rows(&stdout(&o)).into_iter().map(|r| r.into_iter().find(|(k, _)| k == "value").unwrap().1).collect();
    assert_eq!(values, ["4", "8", "60", "312", "3768", "39912648"]);
}

#[test]
fn count_it2_parity() {
    let o = bismash(&["count", "--n", "36", "--quantity", "It2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(bismash(&["count", "--n", "35", "--quantity", "It2"]).status.code(), Some(1));
    let o = bismash(&["count", "--n", "150", "--quantity", "It2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(csv_rows(&stdout(&o)).len(), 3);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(bismash(&["count", "--quantity", "M"]).status.code(), Some(1));
    assert_eq!(bismash(&["count", "--n", "12", "--quantity", "Q"]).status.code(), Some(1));
    assert_eq!(bismash(&["count", "--n", "12", "--quantity", "M", "--t", "5"]).status.code(), Some(1));
    assert_eq!(bismash(&["count", "--n", "12", "--quantity", "Iplus", "--t", "4"]).status.code(), Some(1));
    assert_eq!(bismash(&["nothing"]).status.code(), Some(1));
    assert_eq!(bismash(&["--help"]).status.code(), Some(0));
}

#[test]
fn workload_guard_exits_two() {
    let o = bismash(&["indicators", "--n", "14", "--max-work", "1000"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    let o = Command::new(env!("CARGO_BIN_EXE_bismash"))
        .args(["indicators", "--n", "10"])
        .env("BISMASH_MAX_WORK", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_runs() {
    assert_eq!(bismash(&["verify", "--n", "8"]).status.code(), Some(0));
    assert_eq!(bismash(&["verify", "--n", "1"]).status.code(), Some(1));
    let o = bismash(&["verify", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("hopf").count(), 4);
}

#[test]
fn verify_twelve_reports_the_census() {
    let o = bismash(&["verify", "--n", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("I_t2 12 → (30,2,16)"));
}

#[test]
fn csv_and_json_agree() {
    same_rows(&["indicators", "--n", "8"]);
    same_rows(&["count", "--n", "12", "--quantity", "O"]);
    same_rows(&["count", "--n", "12", "--quantity", "Oj"]);
    same_rows(&["count", "--quantity", "ratios", "--n", "20"]);
    same_rows(&["verify", "--n", "6"]);
}

#[test]
fn output_is_deterministic() {
    let args = ["indicators", "--n", "9", "--threads", "2"];
    assert_eq!(bismash(&args).stdout, bismash(&args).stdout);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("bismash-out-{}.csv", std::process::id()));
    let o = bismash(&["count", "--n", "8", "--quantity", "T", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("quantity,n,t,r,j,sign,value\n"));
}
