use std::process::{Command, Output};

use altdes::cli::report::parse_report;

fn altdes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altdes"))
        .args(args)
        .env_remove("ALTDES_BRUTE_MAX")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_alt_text() {
    let o = altdes(&["compute", "alt", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "16 + 26t + 36t^2 + 26t^3 + 16t^4\n");
}

#[test]
fn compute_alt_q_matches_enumeration() {
    let o = altdes(&["compute", "alt", "--n", "6", "--q", "--format", "json"]);
    let report = parse_report(&stdout(&o)).unwrap();
    let got = report.results[0].value.as_ref().unwrap().to_bipoly();
    assert_eq!(got, altdes::Oracle::default().brute_qalt(6).unwrap());
}

#[test]
fn factor_json() {
    let o = altdes(&["factor", "--n", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report = parse_report(&stdout(&o)).unwrap();
    assert_eq!(report.command, "factor");
    let e_hat = report.results.iter().find(|r| r.name == "e_hat").unwrap();
    let coeffs: Vec<String> = e_hat
        .value
        .as_ref()
        .unwrap()
        .to_int_poly()
        .unwrap()
        .coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect();
    assert_eq!(
        coeffs,
        ["61", "-87", "66", "-82", "129", "-82", "66", "-87", "61"]
    );
    assert!(stdout(&o).contains("\"e_hat\""));
}

#[test]
fn verify_log_concavity_to_200() {
    let o = altdes(&["verify", "conj5.1", "--max-n", "200"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass"));
}

#[test]
fn oracle_csv() {
    let o = altdes(&["oracle", "--n", "4", "--stat", "altdes", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "name,status,exponent,q_exponent,coefficient,witness\n\
         altdes,pass,0,,5,\naltdes,pass,1,,7,\naltdes,pass,2,,7,\naltdes,pass,3,,5,\n"
    );
}

#[test]
fn reports_are_deterministic() {
    let run = || {
        let mut r = parse_report(&stdout(&altdes(&[
            "verify", "thm4.11", "--max-n", "7", "--format", "json",
        ])))
        .unwrap();
        r.elapsed_ms = 0;
        r
    };
    assert_eq!(run(), run());
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("altdes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    let o = altdes(&[
        "compute",
        "gamma",
        "--n",
        "5",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let report = parse_report(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let v = report.results[0]
        .value
        .as_ref()
        .unwrap()
        .to_int_poly()
        .unwrap();
    assert_eq!(v, altdes::IntPoly::from_i64s(&[16, 19, 4]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["compute", "alt"],
        &["verify", "thm9.9", "--max-n", "3"],
        &["oracle", "--n", "12", "--stat", "maj"],
        &["oracle", "--n", "3", "--stat", "inv"],
        &["compute", "two-sided", "--n", "0"],
    ] {
        let o = altdes(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn brute_max_flag_and_env() {
    let o = altdes(&["oracle", "--n", "5", "--stat", "des3", "--brute-max", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_altdes"))
        .args(["oracle", "--n", "5", "--stat", "des3"])
        .env("ALTDES_BRUTE_MAX", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn jobs_do_not_change_results() {
    let one = stdout(&altdes(&[
        "oracle", "--n", "8", "--stat", "altmaj", "--jobs", "1",
    ]));
    let four = stdout(&altdes(&[
        "oracle", "--n", "8", "--stat", "altmaj", "--jobs", "4",
    ]));
    assert_eq!(one, four);
}
