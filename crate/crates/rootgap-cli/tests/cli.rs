//! End-to-end checks against the built binary: exit-status contract,
//! deterministic output, JSON round-trips, file output, and config
//! precedence.

use std::process::{Command, Output};

use rootgap_cli::docs::{BoundsRow, Document, OracleRow, RootDataRow, VerifyRow};

fn rootgap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootgap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn exit_codes_follow_the_contract() {
    // all checks pass
    let ok = rootgap(&["verify", "--family", "SpC", "--ranks", "2..20"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));

    // usage: D needs rank >= 4
    let usage = rootgap(&["verify", "--family", "SO_rr", "--ranks", "3..3"]);
    assert_eq!(usage.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&usage.stderr).contains("rank"));

    // usage: unknown family
    let unknown = rootgap(&["table", "bounds", "--family", "nope", "--rank", "3"]);
    assert_eq!(unknown.status.code(), Some(2));

    // usage: bad flag (clap)
    let flag = rootgap(&["verify", "--definitely-not-a-flag"]);
    assert_eq!(flag.status.code(), Some(2));

    // usage: oracle above the search cap suggests the closed form route
    let cap = rootgap(&["oracle", "--family", "B", "--rank", "9"]);
    assert_eq!(cap.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&cap.stderr).contains("cap"));
}

#[test]
fn verify_runs_are_byte_identical() {
    let args = [
        "verify", "--all", "--ranks", "2..40", "--ks", "1..6", "--format", "json",
    ];
    let first = rootgap(&args);
    let second = rootgap(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn json_round_trips_are_identity() {
    let out = rootgap(&[
        "table", "bounds", "--family", "SU_rk", "--ranks", "2..5", "--ks", "0..3",
        "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let doc: Document<BoundsRow> = serde_json::from_str(&text).unwrap();
    let mut again = serde_json::to_string_pretty(&doc).unwrap();
    again.push('\n');
    assert_eq!(text, again);

    let out = rootgap(&["table", "root-data", "--family", "BC", "--rank", "2", "--format", "json"]);
    let text = stdout(&out);
    let doc: Document<RootDataRow> = serde_json::from_str(&text).unwrap();
    let mut again = serde_json::to_string_pretty(&doc).unwrap();
    again.push('\n');
    assert_eq!(text, again);

    let out = rootgap(&["oracle", "--family", "A", "--rank", "1", "--format", "json"]);
    let text = stdout(&out);
    let doc: Document<OracleRow> = serde_json::from_str(&text).unwrap();
    assert!(doc.rows[0].agrees);
    // A_1: the single root e1-e2, half-sum (1/2, -1/2)
    assert_eq!(doc.rows[0].dominant_half_sum, vec!["1/2", "-1/2"]);
}

#[test]
fn bounds_subcommand_matches_table_bounds() {
    let a = rootgap(&["table", "bounds", "--family", "SLR", "--rank", "2", "--format", "json"]);
    let b = rootgap(&["bounds", "--family", "SLR", "--rank", "2", "--format", "json"]);
    let da: Document<BoundsRow> = serde_json::from_str(&stdout(&a)).unwrap();
    let db: Document<BoundsRow> = serde_json::from_str(&stdout(&b)).unwrap();
    assert_eq!(da.rows, db.rows);
    // SL_3(R): k_closed = 11/2
    assert_eq!(da.rows[0].k_closed, "11/2");
    assert_eq!(da.rows[0].k_direct, Some(5));
}

#[test]
fn root_data_values_match_the_tables() {
    let out = rootgap(&["table", "root-data", "--family", "B", "--rank", "3", "--format", "json"]);
    let doc: Document<RootDataRow> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.rows[0].two_rho, vec!["5", "3", "1"]);
    assert_eq!(doc.rows[0].theta, vec!["1", "1/2", "0"]);
    assert_eq!(doc.rows[0].positive_roots, 9);

    // group-family root data with parameter
    let out = rootgap(&[
        "table", "root-data", "--family", "SU_rk", "--rank", "2", "--k", "1", "--format", "json",
    ]);
    let doc: Document<RootDataRow> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.rows[0].two_rho, vec!["8", "4"]);
    assert_eq!(doc.rows[0].multiplicities, "2,2,...,2, (2,1)");
}

#[test]
fn decimal_flag_adds_marked_approx_columns() {
    let plain = rootgap(&["bounds", "--family", "SpR", "--rank", "2", "--format", "json"]);
    let dec = rootgap(&["bounds", "--family", "SpR", "--rank", "2", "--decimal", "--format", "json"]);
    let p: Document<BoundsRow> = serde_json::from_str(&stdout(&plain)).unwrap();
    let d: Document<BoundsRow> = serde_json::from_str(&stdout(&dec)).unwrap();
    assert!(p.rows[0].k_closed_approx.is_none());
    assert_eq!(d.rows[0].k_closed, "19/3");
    assert_eq!(d.rows[0].k_closed_approx.as_deref(), Some("6.333333"));
    // exact content is unchanged by the flag
    assert_eq!(p.rows[0].k_closed, d.rows[0].k_closed);
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = rootgap(&[
        "list", "--format", "json", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let doc: Document<rootgap_cli::docs::ListRow> = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.rows.iter().filter(|r| r.kind == "group").count(), 13);
    assert_eq!(doc.rows.iter().filter(|r| r.kind == "stub").count(), 4);
}

#[test]
fn list_contains_the_constants_and_stubs() {
    let out = rootgap(&["list", "--format", "json"]);
    let doc: Document<rootgap_cli::docs::ListRow> = serde_json::from_str(&stdout(&out)).unwrap();
    let so4r = doc
        .rows
        .iter()
        .find(|r| r.family.as_deref() == Some("SOstar4r"))
        .unwrap();
    assert_eq!(so4r.constant.as_deref(), Some("1/4"));
    let sork = doc
        .rows
        .iter()
        .find(|r| r.family.as_deref() == Some("SO_rk"))
        .unwrap();
    assert_eq!(sork.constant.as_deref(), Some("3/16"));
    assert!(doc
        .rows
        .iter()
        .any(|r| r.kind == "stub" && r.note.as_deref() == Some("rank-trivial (r < 8)")));
    // both table spellings of the quaternionic family are recorded
    let sustar = doc
        .rows
        .iter()
        .find(|r| r.family.as_deref() == Some("SUstar"))
        .unwrap();
    assert_eq!(sustar.aliases, vec!["SU*_{2r+2}", "SU*_{4r+2}"]);
}

#[test]
fn config_file_overrides_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("rootgap.toml");
    std::fs::write(&cfg, "[verify]\nrank_max = 10\nk_max = 2\n").unwrap();

    let out = rootgap(&[
        "verify", "--family", "SpC", "--config", cfg.to_str().unwrap(), "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Document<VerifyRow> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(doc.command.contains("--ranks 2..10"));

    // an explicit flag beats the config file
    let out = rootgap(&[
        "verify", "--family", "SpC", "--config", cfg.to_str().unwrap(),
        "--ranks", "2..5", "--format", "json",
    ]);
    let doc: Document<VerifyRow> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(doc.command.contains("--ranks 2..5"));
    assert_eq!(doc.rows[0].instances, Some(4));
}

#[test]
fn csv_and_md_carry_the_same_exact_strings_as_json() {
    let json = rootgap(&["bounds", "--family", "SOstar4r2", "--rank", "2", "--format", "json"]);
    let doc: Document<BoundsRow> = serde_json::from_str(&stdout(&json)).unwrap();
    let row = &doc.rows[0];
    assert_eq!(row.theta_pairing, "18");
    assert_eq!(row.ell, "26");

    let csv = stdout(&rootgap(&["bounds", "--family", "SOstar4r2", "--rank", "2", "--format", "csv"]));
    let md = stdout(&rootgap(&["bounds", "--family", "SOstar4r2", "--rank", "2", "--format", "md"]));
    for needle in [&row.theta_pairing, &row.ell, &row.k_closed, &row.margin] {
        assert!(csv.contains(needle.as_str()), "csv missing {needle}");
        assert!(md.contains(needle.as_str()), "md missing {needle}");
    }
}
