//! End-to-end tests of the `rrknot` binary: subcommand output, the diagram
//! spec file grammar, output formats, determinism, and exit codes.

use std::io::Write;

use assert_cmd::Command;
use predicates::prelude::*;

fn rrknot() -> Command {
    Command::cargo_bin("rrknot").unwrap()
}

fn spec_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

const TWO_CURVE_SPEC: &str = "\
# two curves: AB and A^3 B^2 A^2 B^2
family = custom
handleA.bands = 3*1, 2*1, 1*1
handleB.bands = 2*2, 1*1
chords = A0.1-B0.0*1, A1.1-B0.0*1, B0.1-A0.0*1, B0.1-A1.0*1, A2.1-B1.0*1, B1.1-A2.0*1
";

#[test]
fn word_from_spec_file() {
    let f = spec_file(TWO_CURVE_SPEC);
    rrknot()
        .args(["word", "--file"])
        .arg(f.path())
        .assert()
        .success()
        .stdout("A B\nA^3 B^2 A^2 B^2\n");
}

#[test]
fn word_inline_family_with_budget() {
    rrknot()
        .args(["word", "--family", "fig15", "-a", "1", "-b", "1", "-c", "1"])
        .args(["-q", "2", "-r", "1", "-u", "3", "-t", "2", "--budget", "2"])
        .assert()
        .success()
        .stdout(predicate::str::contains("A^2 B^2 A^2 B^3 A B^3"))
        .stdout(predicate::str::contains("minimal length"));
}

#[test]
fn classify_torus_instance() {
    rrknot()
        .args(["classify", "--family", "fig1b", "-a", "1", "-b", "0"])
        .args(["-m", "1", "-n", "2", "-s", "3"])
        .assert()
        .success()
        .stdout("Torus(2,3), condition 1, u=1, delta=+1\n");
}

#[test]
fn classify_cable_instance() {
    rrknot()
        .args(["classify", "--family", "fig1b", "-a", "2", "-b", "1"])
        .args(["-m", "2", "-n", "3", "-s", "2"])
        .assert()
        .success()
        .stdout("Cable(11,2;3,2), condition 3, u=1, delta=+1\n");
}

#[test]
fn meridians_unit_four_band() {
    rrknot()
        .args(["meridians", "--family", "fig15", "-a", "1", "-b", "1", "-c", "1"])
        .args(["-q", "3", "-r", "2", "-u", "3", "-t", "2"])
        .assert()
        .success()
        .stdout(predicate::str::contains("M1 = A^2 B A^2 B^3"))
        .stdout(predicate::str::contains("M2 = A^3 B^2 A B^2"))
        .stdout(predicate::str::contains("length check: |M1| + |M2| = 16 <= |R| = 16: ok"))
        .stdout(predicate::str::contains("homology check: ab(M1) + ab(M2) = (8,8) = ab(R): ok"));
}

#[test]
fn census_csv_header_and_rows() {
    rrknot()
        .args(["census", "--family", "fig1b", "--bound", "3", "--format", "csv"])
        .assert()
        .success()
        .stdout(predicate::str::starts_with(
            "family,a,b,c,m,n,s,u,delta,condition,knot_class,cable_c1,cable_c2,comp_p,comp_q,m1,m2\n",
        ))
        .stdout(predicate::str::contains(
            "fig1b,1,0,,1,2,3,1,+1,1,\"Torus(2,3)\",,,,,A B,A B^2",
        ));
}

#[test]
fn census_is_byte_deterministic() {
    let run = || {
        rrknot()
            .args(["census", "--family", "fig1b", "--bound", "4", "--format", "csv"])
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn census_csv_and_jsonl_carry_identical_data() {
    let csv = rrknot()
        .args(["census", "--family", "fig1b", "--bound", "3", "--format", "csv"])
        .output()
        .unwrap();
    let jsonl = rrknot()
        .args(["census", "--family", "fig1b", "--bound", "3", "--format", "jsonl"])
        .output()
        .unwrap();
    let mut reader = csv::Reader::from_reader(csv.stdout.as_slice());
    let header: Vec<String> =
        reader.headers().unwrap().iter().map(str::to_string).collect();
    let jsonl_text = String::from_utf8(jsonl.stdout).unwrap();
    let mut rows = 0;
    for (record, json_row) in reader.records().zip(jsonl_text.lines()) {
        let record = record.unwrap();
        let obj: serde_json::Value = serde_json::from_str(json_row).unwrap();
        assert_eq!(record.len(), header.len());
        for (key, cell) in header.iter().zip(record.iter()) {
            match &obj[key] {
                serde_json::Value::Null => assert_eq!(cell, "", "key {key}"),
                serde_json::Value::String(s) => assert_eq!(cell, s, "key {key}"),
                other => panic!("unexpected JSON value {other} for {key}"),
            }
        }
        rows += 1;
    }
    assert!(rows > 0);
    assert_eq!(jsonl_text.lines().count(), rows);
}

#[test]
fn census_all_positive_family_has_no_embeddable_rows() {
    rrknot()
        .args(["census", "--family", "fig9", "--bound", "3"])
        .assert()
        .success()
        .stdout(predicate::str::contains("Torus(").not())
        .stdout(predicate::str::contains("Cable(").not())
        .stdout(predicate::str::contains("NotEmbeddable"));
}

#[test]
fn check_reports_all_criteria() {
    rrknot()
        .arg("check")
        .assert()
        .success()
        .stdout(predicate::str::contains("criterion 1: PASS"))
        .stdout(predicate::str::contains("criterion 9: PASS"))
        .stdout(predicate::str::contains("9/9 criteria passed"));
}

#[test]
fn file_errors_cite_line_numbers() {
    let f = spec_file("family = fig1b\na = one\n");
    rrknot()
        .args(["word", "--file"])
        .arg(f.path())
        .assert()
        .code(1)
        .stderr(predicate::str::contains("line 2"));
}

#[test]
fn unknown_key_is_rejected_with_line_number() {
    let f = spec_file("family = fig1b\nz = 1\n");
    rrknot()
        .args(["word", "--file"])
        .arg(f.path())
        .assert()
        .code(1)
        .stderr(predicate::str::contains("line 2: unknown key `z`"));
}

#[test]
fn missing_parameter_is_invalid_input() {
    rrknot()
        .args(["classify", "--family", "fig1b", "-a", "1", "-b", "0"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("requires parameter `m`"));
}

#[test]
fn invalid_family_parameters_are_rejected() {
    rrknot()
        .args(["classify", "--family", "fig1a", "-s", "1"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("s > 1"));
}

#[test]
fn missing_file_is_invalid_input() {
    rrknot()
        .args(["word", "--file", "/nonexistent/diagram.rr"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("No such file"));
}

#[test]
fn verbose_prints_version_line_on_stderr_only() {
    rrknot()
        .args(["classify", "--verbose", "--family", "fig1a", "-s", "2"])
        .assert()
        .success()
        .stdout("Unknot\n")
        .stderr(predicate::str::contains("rrknot 0.1.0"));
}
