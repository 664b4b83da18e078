use binom_rare::cli::{execute, Outcome, Terminal, EXIT_IO, EXIT_USAGE};
use binom_rare::present::number;
use serde_json::Value;

const TTY: Terminal = Terminal { stdout_is_tty: true, no_color_env: false, now_unix: 1_700_000_000 };
const PIPE: Terminal = Terminal { stdout_is_tty: false, no_color_env: false, now_unix: 1_700_000_000 };

fn run(term: Terminal, args: &[&str]) -> Outcome {
    execute(std::iter::once("binom-rare").chain(args.iter().copied()), term)
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = format!("{}/schema/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(v: &jsonschema::Validator, doc: &Value) {
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{doc:#}");
}

#[test]
fn successful_commands_exit_zero() {
    let cases: &[&[&str]] = &[
        &["interval", "--estimator", "wald", "--x", "8", "--n", "21720"],
        &["interval", "--estimator", "all", "--p-hat", "0.137", "--n", "6338"],
        &["evaluate", "--estimator", "wilson", "--p", "1e-5", "--n", "2500000"],
        &["plan", "--estimator", "all", "--p-star", "1e-3", "--eps-r", "0.4"],
        &["plan", "--estimator", "cp", "--p-star", "0.1", "--epsilon", "0.04"],
        &["sweep", "--estimator", "all", "--p", "0.1", "--n-start", "10", "--n-end", "50", "--n-step", "10"],
        &["tables", "--table", "4"],
        &["case-study", "--name", "covid"],
        &["case-study", "--name", "adhd", "--replan"],
        &["thresholds"],
    ];
    for args in cases {
        let out = run(PIPE, args);
        assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
        assert!(!out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn bad_arguments_exit_with_usage_code() {
    let cases: &[&[&str]] = &[
        &["evaluate", "--p", "1.5", "--n", "10"],
        &["evaluate", "--p", "0.1"],
        &["interval", "--estimator", "nope", "--x", "1", "--n", "10"],
        &["interval", "--x", "11", "--n", "10"],
        &["plan", "--p-star", "0", "--eps-r", "0.4"],
        &["--alpha", "1.2", "thresholds"],
        &["--tail-tol", "-1", "evaluate", "--p", "0.1", "--n", "10"],
        &["tables", "--table", "5"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = run(PIPE, args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}: {}", out.stdout);
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn unwritable_output_exits_with_io_code() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("missing").join("sweep.csv");
    let out = run(PIPE, &["sweep", "--p", "0.1", "--n-start", "10", "--n-end", "20", "--n-step", "10", "--out", target.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_IO, "{}", out.stderr);
}

#[test]
fn out_file_receives_report() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("t1.csv");
    let out = run(TTY, &["--reproducible", "tables", "--table", "1", "--out", target.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    let direct = run(PIPE, &["--reproducible", "tables", "--table", "1"]);
    assert_eq!(written, direct.stdout);
    assert!(!written.contains('\x1b'));
}

#[test]
fn csv_numbers_survive_a_round_trip() {
    let out = run(PIPE, &["--reproducible", "sweep", "--estimator", "all", "--p", "1e-3", "--n-start", "500", "--n-end", "5000", "--n-step", "500"]);
    assert_eq!(out.code, 0);
    let mut reader = csv::ReaderBuilder::new().has_headers(false).from_reader(out.stdout.as_bytes());
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut numeric = 0;
    for record in reader.records() {
        let record = record.unwrap();
        let fields: Vec<String> = record
            .iter()
            .map(|f| match f.parse::<f64>() {
                Ok(v) if f.parse::<u64>().is_err() => {
                    numeric += 1;
                    number(v)
                }
                _ => f.to_string(),
            })
            .collect();
        writer.write_record(&fields).unwrap();
    }
    let rebuilt = String::from_utf8(writer.into_inner().unwrap()).unwrap();
    assert!(numeric > 50);
    assert_eq!(rebuilt, out.stdout);
}

#[test]
fn reproducible_output_is_byte_identical() {
    let args = ["--reproducible", "--format", "json", "sweep", "--p", "0.01", "--n-start", "100", "--n-end", "1000", "--n-step", "100"];
    let a = run(PIPE, &args);
    let b = run(Terminal { now_unix: 42, ..PIPE }, &args);
    assert_eq!(a, b);
    assert!(!a.stdout.contains("generated_unix"));
}

#[test]
fn timestamp_present_unless_reproducible() {
    let csv = run(PIPE, &["tables", "--table", "4"]).stdout;
    assert!(csv.starts_with("# generated by binom-rare"), "{csv}");
    assert!(csv.lines().next().unwrap().ends_with("1700000000"));
    let json: Value = serde_json::from_str(&run(PIPE, &["--format", "json", "thresholds"]).stdout).unwrap();
    assert_eq!(json["meta"]["generated_unix"], 1_700_000_000u64);
    let quiet = run(PIPE, &["--reproducible", "tables", "--table", "4"]).stdout;
    assert!(!quiet.contains("generated"));
}

#[test]
fn evaluate_json_matches_row_schema() {
    let v = schema("report-row.schema.json");
    for args in [
        &["--format", "json", "evaluate", "--estimator", "all", "--p", "0.1", "--n", "10"][..],
        &["--format", "json", "evaluate", "--estimator", "cp,ws", "--p", "1e-5", "--p-star", "2e-5", "--n-start", "750000", "--n-end", "850000", "--n-step", "50000"][..],
        &["--format", "json", "evaluate", "--estimator", "wald", "--p", "0.02", "--n", "30", "--width-bounds", "clipped"][..],
    ] {
        let out = run(PIPE, args);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_valid(&v, &serde_json::from_str(&out.stdout).unwrap());
    }
}

#[test]
fn every_command_json_matches_report_schema() {
    let v = schema("report.schema.json");
    let cases: &[&[&str]] = &[
        &["interval", "--estimator", "all", "--x", "0", "--n", "50"],
        &["evaluate", "--p", "0.1", "--n", "60"],
        &["plan", "--p-star", "0.1", "--epsilon", "0.04"],
        &["sweep", "--p", "0.1", "--n-start", "10", "--n-end", "100", "--n-step", "10"],
        &["tables", "--table", "2"],
        &["tables", "--table", "6"],
        &["case-study", "--name", "aircraft"],
        &["case-study", "--name", "covid", "--replan", "--eps-r", "0.2,0.4"],
        &["thresholds", "--p-star", "0.1,0.01", "--a", "5", "--alphas", "0.05"],
    ];
    for args in cases {
        let full: Vec<&str> = ["--format", "json"].iter().copied().chain(args.iter().copied()).collect();
        let out = run(PIPE, &full);
        assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
        let doc: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_valid(&v, &doc);
        assert!(!doc["rows"].as_array().unwrap().is_empty(), "{args:?}");
    }
}

#[test]
fn empty_sweep_prints_header_only() {
    let out = run(PIPE, &["--reproducible", "sweep", "--p", "0.1", "--n-start", "50", "--n-end", "10", "--n-step", "10"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "row_type,estimator,n,cpr,eps_r,coverage_band,moe_band\n");
}

#[test]
fn sweep_reports_summary_rows() {
    let out = run(PIPE, &["--reproducible", "sweep", "--estimator", "ws", "--p", "1e-2", "--n-start", "1000", "--n-end", "3000", "--n-step", "200"]);
    let mut reader = csv::Reader::from_reader(out.stdout.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    let from = rows.iter().find(|r| &r[0] == "target_from").unwrap();
    let n: u64 = from[2].parse().unwrap();
    assert!(n <= 1600, "{n}");
    assert_eq!(rows.iter().filter(|r| &r[0] == "point").count(), 11);
}

#[test]
fn color_follows_terminal_and_switches() {
    let args = ["evaluate", "--estimator", "all", "--p", "0.1", "--n", "10"];
    assert!(run(TTY, &args).stdout.contains('\x1b'));
    assert!(!run(PIPE, &args).stdout.contains('\x1b'));
    let mut no_flag = vec!["--no-color"];
    no_flag.extend(args);
    assert!(!run(TTY, &no_flag).stdout.contains('\x1b'));
    let env_off = Terminal { no_color_env: true, ..TTY };
    assert!(!run(env_off, &args).stdout.contains('\x1b'));
    let mut csv = vec!["--format", "csv"];
    csv.extend(args);
    assert!(!run(TTY, &csv).stdout.contains('\x1b'));
}

#[test]
fn degenerate_interval_is_flagged() {
    let text = run(PIPE, &["interval", "--estimator", "wald", "--x", "0", "--n", "10"]);
    assert!(text.stdout.contains("degenerate"), "{}", text.stdout);
    let csv = run(PIPE, &["--format", "csv", "interval", "--estimator", "wald", "--x", "10", "--n", "10"]);
    assert!(csv.stderr.contains("degenerate at [1, 1]"), "{}", csv.stderr);
    let wilson = run(PIPE, &["--format", "csv", "interval", "--estimator", "wilson", "--x", "0", "--n", "10"]);
    assert!(!wilson.stderr.contains("degenerate"));
}

#[test]
fn reference_examples() {
    let json = |args: &[&str]| -> Value {
        let full: Vec<&str> = ["--format", "json"].iter().copied().chain(args.iter().copied()).collect();
        serde_json::from_str(&run(PIPE, &full).stdout).unwrap()
    };
    let iv = json(&["interval", "--estimator", "wald", "--x", "8", "--n", "21720"]);
    let row = &iv["rows"][0];
    assert!((row["lower"].as_f64().unwrap() - 1.131e-4).abs() < 5e-8);
    assert!((row["upper"].as_f64().unwrap() - 6.235e-4).abs() < 5e-8);
    let ev = json(&["evaluate", "--estimator", "wilson", "--p", "1e-5", "--n", "2500000"]);
    let row = &ev["rows"][0];
    assert!((row["cpr"].as_f64().unwrap() - 0.944).abs() < 1e-3 + 1e-9);
    assert!((row["eps_r"].as_f64().unwrap() - 0.40).abs() < 5e-3);
}
