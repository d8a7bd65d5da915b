use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use sncs_core::describe::CodeDescription;

fn sncs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sncs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn capacity_text_and_json() {
    let out = sncs(&["capacity", "--k", "22", "--d", "7", "--u", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("capacity = 2/9\n"), "{text}");
    assert!(text.contains("a = 2\n"));

    let out = sncs(&[
        "capacity", "--k", "27", "--d", "8", "--u", "5", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["minimality_certified"], false);
    assert_eq!(v["capacity"], "1/4");
}

#[test]
fn exit_codes() {
    assert_eq!(sncs(&["--help"]).status.code(), Some(0));
    assert_eq!(sncs(&["capacity", "--help"]).status.code(), Some(0));
    assert_eq!(sncs(&[]).status.code(), Some(1));
    assert_eq!(sncs(&["capacity", "--k", "8"]).status.code(), Some(1));
    assert_eq!(
        sncs(&["capacity", "--k", "8", "--d", "x", "--u", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        sncs(&["capacity", "--k", "8", "--d", "7", "--u", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        sncs(&["generate", "--k", "8", "--d", "2", "--u", "1", "--q", "4"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        sncs(&["air", "--rows", "3", "--cols", "4"]).status.code(),
        Some(1)
    );
}

#[test]
fn air_verify() {
    let out = sncs(&[
        "air", "--rows", "6", "--cols", "5", "--verify", "--fields", "2,7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "1 0 0 0 0\n0 1 0 0 0\n0 0 1 0 0\n0 0 0 1 0\n0 0 0 0 1\n1 1 1 1 1\nverify: pass over GF(2), GF(7)\n"
    );
    let out = sncs(&["air", "--rows", "4", "--cols", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["matrix"][3], serde_json::json!([1, 1, 1]));
    assert!(v["verified"].is_null());
}

#[test]
fn generate_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("code.txt");
    let out = sncs(&[
        "generate",
        "--k",
        "8",
        "--d",
        "2",
        "--u",
        "1",
        "-o",
        path(&file),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&file).unwrap();
    let desc = CodeDescription::parse_text(&text).unwrap();
    assert_eq!(desc.to_text(), text);
    assert_eq!(desc.summary.length, 7);
    assert_eq!(desc.summary.dimension, 2);
    assert_eq!(desc.encoding.len(), 16);
    assert_eq!(desc.encoding[13], vec![1; 7]);

    let out = sncs(&[
        "generate", "--k", "22", "--d", "7", "--u", "3", "--q", "3", "--format", "json",
    ]);
    let json = stdout(&out);
    assert_eq!(CodeDescription::parse_json(&json).unwrap().to_json(), json);
}

#[test]
fn generate_scalar_and_boundary() {
    let out = sncs(&["generate", "--k", "7", "--d", "2", "--u", "0"]);
    let text = stdout(&out);
    for line in [
        "air.rows = 7\n",
        "air.cols = 5\n",
        "c[0] = x0,1 + x5,1\n",
        "c[4] = x4,1 + x5,1 + x6,1\n",
    ] {
        assert!(text.contains(line), "missing {line:?}");
    }

    let out = sncs(&["generate", "--k", "3", "--d", "1", "--u", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("rate = 1/1\n"));
    assert!(text.contains("\nwarning = "));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("warning:"));
}

#[test]
fn encode_then_decode() {
    let dir = tempfile::tempdir().unwrap();
    let messages = dir.path().join("m.txt");
    let codeword = dir.path().join("c.txt");
    let text = "3 8 2 1\n0 1\n2 2\n1 0\n0 0\n2 1\n1 1\n0 2\n2 0\n";
    fs::write(&messages, text).unwrap();

    let out = sncs(&[
        "encode",
        "--messages",
        path(&messages),
        "-o",
        path(&codeword),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let cw = fs::read_to_string(&codeword).unwrap();
    assert!(cw.starts_with("3 8 2 1\n"));
    assert_eq!(cw.lines().nth(1).unwrap().split(' ').count(), 7);

    // Everything known: every receiver decodes and agrees with the file.
    let out = sncs(&[
        "decode",
        "--codeword",
        path(&codeword),
        "--known",
        path(&messages),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), text);

    // Receiver 0 knows x7, x1, x2 only.
    let partial = dir.path().join("p.txt");
    fs::write(&partial, "3 8 2 1\n*\n2 2\n1 0\n*\n*\n*\n*\n2 0\n").unwrap();
    for oracle in [false, true] {
        let mut args = vec![
            "decode",
            "--codeword",
            path(&codeword),
            "--known",
            path(&partial),
            "--receiver",
            "0",
        ];
        if oracle {
            args.push("--oracle");
        }
        let out = sncs(&args);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), "0 1\n");
    }
    let out = sncs(&[
        "decode",
        "--codeword",
        path(&codeword),
        "--known",
        path(&partial),
        "--receiver",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn decode_detects_corruption_and_truncation() {
    let dir = tempfile::tempdir().unwrap();
    let messages = dir.path().join("m.txt");
    let codeword = dir.path().join("c.txt");
    fs::write(
        &messages,
        "2 8 2 1\n0 1\n1 1\n1 0\n0 0\n1 1\n1 1\n0 1\n1 0\n",
    )
    .unwrap();
    sncs(&[
        "encode",
        "--messages",
        path(&messages),
        "-o",
        path(&codeword),
    ]);
    let cw = fs::read_to_string(&codeword).unwrap();
    let mut lines: Vec<String> = cw.lines().map(str::to_string).collect();

    let mut symbols: Vec<u32> = lines[1].split(' ').map(|t| t.parse().unwrap()).collect();
    symbols[3] ^= 1;
    let flipped = dir.path().join("flipped.txt");
    let joined: Vec<String> = symbols.iter().map(u32::to_string).collect();
    fs::write(&flipped, format!("{}\n{}\n", lines[0], joined.join(" "))).unwrap();
    let out = sncs(&[
        "decode",
        "--codeword",
        path(&flipped),
        "--known",
        path(&messages),
    ]);
    assert_eq!(out.status.code(), Some(2));

    let truncated = dir.path().join("short.txt");
    let last = lines[1].rfind(' ').unwrap();
    lines[1].truncate(last);
    fs::write(&truncated, format!("{}\n{}\n", lines[0], lines[1])).unwrap();
    let out = sncs(&[
        "decode",
        "--codeword",
        path(&truncated),
        "--known",
        path(&messages),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = sncs(&[
        "decode",
        "--codeword",
        path(&truncated),
        "--known",
        path(&messages),
        "--oracle",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn simulate_is_deterministic() {
    let args = [
        "simulate", "--k", "8", "--d", "2", "--u", "1", "--trials", "100", "--seed", "7",
    ];
    let a = sncs(&args);
    let b = sncs(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("failures = 0\n"));

    let out = sncs(&[
        "simulate", "--k", "22", "--d", "7", "--u", "3", "--q", "3", "--trials", "50", "--seed",
        "1", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["failures"], serde_json::json!([]));
    assert_eq!(v["rate"], "2/9");

    let out = sncs(&[
        "simulate", "--k", "2", "--d", "0", "--u", "0", "--trials", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_examples_passes() {
    let out = sncs(&["verify-examples"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PASS plan K=22 D=7 U=3"));
    assert!(text.ends_with("0 failed\n"));
    let out = sncs(&["verify-examples", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["failed"], 0);
}
