use std::process::{Command, Output};

use num_rational::BigRational;

use dualpivot::oracle::{cost_distribution, dp_expected};
use dualpivot::{Algorithm, Metric, Rational};

fn dpqs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dpqs")).args(args).output().expect("run dpqs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<csv::StringRecord> {
    csv::Reader::from_reader(text.as_bytes()).records().map(|r| r.unwrap()).collect()
}

fn header(text: &str) -> String {
    text.lines().next().unwrap_or_default().to_owned()
}

#[test]
fn verify_passes_and_rejects_small_n_max() {
    let ok = dpqs(&["verify", "--n-max", "20", "--dist-cap", "12"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).contains("0 failed"));
    let bad = dpqs(&["verify", "--n-max", "3"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(dpqs(&["simulate", "--n", "10", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(dpqs(&["simulate", "--alg", "triple", "--n", "10"]).status.code(), Some(2));
    assert_eq!(dpqs(&["bogus"]).status.code(), Some(2));
    assert_eq!(dpqs(&["dist", "--metric", "comparisons", "--n", "17"]).status.code(), Some(2));
    assert_eq!(dpqs(&["table", "--alg", "classic", "--n", "5", "--metrics", "variance"]).status.code(), Some(2));
    assert_eq!(dpqs(&["plotdata", "--n-grid", "1,10"]).status.code(), Some(2));
}

#[test]
fn simulate_headline_run() {
    let args = ["simulate", "--alg", "dual", "--n", "1000", "--trials", "100000", "--seed", "42", "--format", "csv"];
    let first = dpqs(&args);
    assert_eq!(first.status.code(), Some(0));
    let text = stdout(&first);
    assert_eq!(
        header(&text),
        "algorithm,metric,n,trials,seed,theory_exact,theory_float,empirical_mean,std_error,z_score"
    );
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 3);
    assert_eq!(&rows[0][1], "comparisons");
    let z: f64 = rows[0][9].parse().unwrap();
    assert!(z.abs() <= 3.0, "z = {z}");
    let theory: f64 = rows[0][6].parse().unwrap();
    assert!((theory - 10985.9).abs() < 0.05);
    // exact column parses back to the oracle's value
    let exact: BigRational = rows[0][5].parse().unwrap();
    assert_eq!(exact, dp_expected::<Rational>(Algorithm::Dual, Metric::Comparisons, 1000)[1000]);

    let second = dpqs(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn simulate_classic_omits_exchanges() {
    let o = dpqs(&["simulate", "--alg", "classic", "--n", "200", "--trials", "500", "--seed", "3"]);
    let rows = csv_rows(&stdout(&o));
    let metrics: Vec<_> = rows.iter().map(|r| r[1].to_owned()).collect();
    assert_eq!(metrics, ["comparisons", "stages"]);
}

#[test]
fn simulate_json_mirrors_csv() {
    let args = ["simulate", "--n", "50", "--trials", "300", "--seed", "5"];
    let csv_text = stdout(&dpqs(&[&args[..], &["--format", "csv"]].concat()));
    let json_text = stdout(&dpqs(&[&args[..], &["--format", "json"]].concat()));
    let json: Vec<serde_json::Map<String, serde_json::Value>> = serde_json::from_str(&json_text).unwrap();
    let rows = csv_rows(&csv_text);
    assert_eq!(json.len(), rows.len());
    let cols: Vec<_> = header(&csv_text).split(',').map(str::to_owned).collect();
    for (obj, row) in json.iter().zip(&rows) {
        assert_eq!(obj.keys().cloned().collect::<std::collections::BTreeSet<_>>(), cols.iter().cloned().collect());
        assert_eq!(obj["theory_exact"].as_str().unwrap(), &row[5]);
        assert_eq!(obj["metric"].as_str().unwrap(), &row[1]);
    }
}

#[test]
fn single_trial_has_no_spread() {
    let rows = csv_rows(&stdout(&dpqs(&["simulate", "--n", "10", "--trials", "1"])));
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r[8].is_empty() && r[9].is_empty()));
}

#[test]
fn table_values_round_trip() {
    let o = dpqs(&["table", "--n", "4", "--metrics", "exchanges"]);
    let rows = csv_rows(&stdout(&o));
    assert_eq!(&rows[0][3], "13/3");

    let o = dpqs(&["table", "--n", "2,3,4,9,20", "--metrics", "comparisons,exchanges,stages"]);
    for row in csv_rows(&stdout(&o)) {
        let metric: Metric = row[1].parse().unwrap();
        let n: usize = row[2].parse().unwrap();
        let parsed: BigRational = row[3].parse().unwrap();
        assert_eq!(parsed, dp_expected::<Rational>(Algorithm::Dual, metric, n)[n]);
    }
}

#[test]
fn dist_dump() {
    let o = dpqs(&["dist", "--metric", "comparisons", "--n", "3"]);
    let rows = csv_rows(&stdout(&o));
    let pairs: Vec<_> = rows.iter().map(|r| (r[2].to_owned(), r[3].to_owned())).collect();
    assert_eq!(pairs, [("2".to_owned(), "1/3".to_owned()), ("3".to_owned(), "2/3".to_owned())]);

    let o = dpqs(&["dist", "--metric", "exchanges", "--n", "9"]);
    let exact = &cost_distribution::<Rational>(Metric::Exchanges, 9).unwrap()[9];
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), exact.probs().len());
    for row in rows {
        let p: BigRational = row[3].parse().unwrap();
        assert_eq!(p, exact.prob(row[2].parse().unwrap()));
    }

    let o = dpqs(&["dist", "--metric", "comparisons", "--n", "30", "--float"]);
    assert_eq!(o.status.code(), Some(0));
    let total: f64 = csv_rows(&stdout(&o)).iter().map(|r| r[4].parse::<f64>().unwrap()).sum();
    assert!((total - 1.0).abs() < 1e-9);
}

#[test]
fn plotdata_ratios_approach_one() {
    let o = dpqs(&["plotdata", "--n-grid", "10,100,1000"]);
    let rows = csv_rows(&stdout(&o));
    let ratios: Vec<f64> = rows
        .iter()
        .filter(|r| &r[1] == "dual_comparisons")
        .map(|r| r[5].parse().unwrap())
        .collect();
    assert_eq!(ratios.len(), 3);
    assert!(ratios.windows(2).all(|w| w[0] < w[1] && w[1] < 1.0), "{ratios:?}");
}
