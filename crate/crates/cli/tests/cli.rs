//! End-to-end transcripts of the command-line tool, exercising the exit-code
//! contract and the text formats.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use linsemi::io::serialize_graph;
use linsemi::poset::Graph;
use linsemi::samples;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_linsemi"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).to_string()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn chevron_file(dir: &Path) -> PathBuf {
    write(
        dir,
        "chevron.poset",
        &linsemi::io::serialize_poset(&samples::chevron_dual()),
    )
}

fn forbidden_file(dir: &Path) -> PathBuf {
    write(
        dir,
        "forbidden.poset",
        &linsemi::io::serialize_poset(&samples::forbidden_interval_order()),
    )
}

#[test]
fn recognize_yes_and_no() {
    let dir = tempfile::tempdir().unwrap();
    let yes = run(&["recognize", chevron_file(dir.path()).to_str().unwrap()]);
    assert_eq!(code(&yes), 0);
    assert_eq!(stdout(&yes), "YES\n");

    let no = run(&["recognize", forbidden_file(dir.path()).to_str().unwrap()]);
    assert_eq!(code(&no), 1);
    assert_eq!(stdout(&no), "NO\n");
}

#[test]
fn recognize_rejects_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.poset", "poset two\n");
    let out = run(&["recognize", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let missing = run(&["recognize", dir.path().join("nope").to_str().unwrap()]);
    assert_eq!(code(&missing), 2);
}

#[test]
fn certify_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let poset = chevron_file(dir.path());
    let cert = dir.path().join("chevron.cert");
    let out = run(&[
        "recognize",
        poset.to_str().unwrap(),
        "--certify",
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);

    let ok = run(&["verify", poset.to_str().unwrap(), cert.to_str().unwrap()]);
    assert_eq!(code(&ok), 0);
    assert_eq!(stdout(&ok), "OK\n");
}

#[test]
fn verify_rejects_tampering_and_wrong_poset() {
    let dir = tempfile::tempdir().unwrap();
    let poset = chevron_file(dir.path());
    let cert = dir.path().join("chevron.cert");
    run(&[
        "recognize",
        poset.to_str().unwrap(),
        "--certify",
        "--out",
        cert.to_str().unwrap(),
    ]);

    // Widen one interval so that it swallows another.
    let text = std::fs::read_to_string(&cert).unwrap();
    let tampered_text = text.replace("interval a 0 6 / 6", "interval a 0 36 / 6");
    assert_ne!(text, tampered_text);
    let tampered = write(dir.path(), "tampered.cert", &tampered_text);
    let fail = run(&[
        "verify",
        poset.to_str().unwrap(),
        tampered.to_str().unwrap(),
    ]);
    assert_eq!(code(&fail), 1);
    assert!(
        stdout(&fail).contains("not proper"),
        "got: {}",
        stdout(&fail)
    );

    // Same elements, different order.
    let other = write(
        dir.path(),
        "other.poset",
        "poset 6\na\nb\nc\nd\ne\nf\na b\na e\nb d\nc d\nc f\n",
    );
    let fail = run(&["verify", other.to_str().unwrap(), cert.to_str().unwrap()]);
    assert_eq!(code(&fail), 1);
    assert!(
        stdout(&fail).contains("intersection mismatch"),
        "got: {}",
        stdout(&fail)
    );
}

#[test]
fn graph_modes() {
    let dir = tempfile::tempdir().unwrap();
    let incomp = write(
        dir.path(),
        "chevron-incomp.graph",
        &serialize_graph(&samples::chevron_dual().incomparability_graph()),
    );
    let out = run(&[
        "graph",
        incomp.to_str().unwrap(),
        "--mode",
        "incomparability",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("YES"));
    let ordering: Vec<&str> = lines.next().unwrap().split(' ').collect();
    assert_eq!(ordering.len(), 6);

    let c5: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let c5 = write(
        dir.path(),
        "c5.graph",
        &serialize_graph(&Graph::indexed(5, &c5).unwrap()),
    );
    let out = run(&["graph", c5.to_str().unwrap(), "--mode", "incomparability"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "NO\n");

    let k3 = write(
        dir.path(),
        "k3.graph",
        &serialize_graph(&Graph::indexed(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()),
    );
    let out = run(&["graph", k3.to_str().unwrap(), "--mode", "comparability"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "YES\n");
}

#[test]
fn oracle_command() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["oracle", forbidden_file(dir.path()).to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "NO\n");

    let out = run(&["oracle", chevron_file(dir.path()).to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "YES\n");

    // brute force refuses oversized inputs as a usage error
    let big = write(
        dir.path(),
        "big.poset",
        &linsemi::io::serialize_poset(
            &linsemi::poset::PartialOrder::indexed(11, &[]).unwrap(),
        ),
    );
    let out = run(&["oracle", big.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn gen_is_deterministic_and_parseable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.poset");
    let b = dir.path().join("b.poset");
    for path in [&a, &b] {
        let out = run(&[
            "gen",
            "--n",
            "6",
            "--density",
            "0.3",
            "--seed",
            "42",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
    }
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert_eq!(bytes_a, bytes_b);

    let out = run(&["recognize", a.to_str().unwrap()]);
    assert!(code(&out) == 0 || code(&out) == 1);
}

#[test]
fn render_emits_one_triangle_per_element() {
    let dir = tempfile::tempdir().unwrap();
    let poset = chevron_file(dir.path());
    let cert = dir.path().join("chevron.cert");
    run(&[
        "recognize",
        poset.to_str().unwrap(),
        "--certify",
        "--out",
        cert.to_str().unwrap(),
    ]);

    let svg1 = dir.path().join("a.svg");
    let svg2 = dir.path().join("b.svg");
    for svg in [&svg1, &svg2] {
        let out = run(&[
            "render",
            cert.to_str().unwrap(),
            "--out",
            svg.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
    }
    let body = std::fs::read_to_string(&svg1).unwrap();
    assert_eq!(body.matches("<polygon").count(), 6);
    assert_eq!(std::fs::read(&svg1).unwrap(), std::fs::read(&svg2).unwrap());
}

#[test]
fn certificate_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let poset = chevron_file(dir.path());
    let cert_path = dir.path().join("c.cert");
    run(&[
        "recognize",
        poset.to_str().unwrap(),
        "--certify",
        "--out",
        cert_path.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&cert_path).unwrap();
    let cert = linsemi::io::parse_certificate(&text).unwrap();
    assert_eq!(linsemi::io::serialize_certificate(&cert), text);
}
