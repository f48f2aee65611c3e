use std::io::Write;
use std::path::Path;
use std::process::{Command, Stdio};

use mrle::cli::{run_cli, EXIT_CORRUPT, EXIT_IO, EXIT_OK, EXIT_USAGE};

struct Outcome {
    code: i32,
    stdout: Vec<u8>,
    stderr: String,
}

fn mrle(args: &[&str], stdin: &[u8]) -> Outcome {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let code = run_cli(
        std::iter::once("mrle").chain(args.iter().copied()),
        &mut &stdin[..],
        &mut stdout,
        &mut stderr,
    );
    Outcome {
        code,
        stdout,
        stderr: String::from_utf8_lossy(&stderr).into_owned(),
    }
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn encode_decode_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.bin");
    let enc = dir.path().join("in.mrle");
    let dec = dir.path().join("out.bin");
    let data: Vec<u8> = (0..5000u32).map(|i| ((i / 37) % 7) as u8).collect();
    std::fs::write(&input, &data).unwrap();

    for extra in [&[][..], &["--raw"][..], &["--mode", "bit"][..]] {
        let mut args = vec!["encode", p(&input), "-o", p(&enc)];
        args.extend_from_slice(extra);
        let o = mrle(&args, b"");
        assert_eq!(o.code, EXIT_OK, "{}", o.stderr);

        let mut args = vec!["decode", p(&enc), "-o", p(&dec)];
        if extra.contains(&"--raw") {
            args.push("--raw");
        }
        let o = mrle(&args, b"");
        assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
        assert_eq!(std::fs::read(&dec).unwrap(), data, "{extra:?}");
    }
}

#[test]
fn analyze_first_example() {
    let o = mrle(&["analyze", "-", "--raw", "--json"], b"AAAABBCCCDB");
    assert_eq!(o.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["predicted_encoded_bytes"], 40);
    assert_eq!(v["payload_size"], 8);
    assert_eq!(v["compressible"], serde_json::json!([65, 67]));
    let symbols: Vec<u64> = v["symbols"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["symbol"].as_u64().unwrap())
        .collect();
    assert_eq!(symbols, vec![65, 66, 67, 68]);

    let o = mrle(&["analyze", "-"], b"AAAABBCCCDB");
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(
        text.contains("predicted encoded:  46 bytes (container)"),
        "{text}"
    );
}

#[test]
fn analyze_json_is_stable() {
    let a = mrle(&["analyze", "-", "--json"], b"zzzzyyxxxxxxxw");
    let b = mrle(&["analyze", "-", "--json"], b"zzzzyyxxxxxxxw");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn stdin_stdout_match_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in");
    let out = dir.path().join("out");
    std::fs::write(&input, b"hello hello wooooooooorld").unwrap();
    let via_file = {
        assert_eq!(mrle(&["encode", p(&input), "-o", p(&out)], b"").code, 0);
        std::fs::read(&out).unwrap()
    };
    let via_pipe = mrle(&["encode", "-", "-o", "-"], b"hello hello wooooooooorld");
    assert_eq!(via_pipe.code, 0);
    assert_eq!(via_pipe.stdout, via_file);
    let back = mrle(&["decode", "-"], &via_file);
    assert_eq!(back.stdout, b"hello hello wooooooooorld");
}

#[test]
fn corrupted_magic_is_exit_3() {
    let enc = mrle(&["encode", "-"], b"some data").stdout;
    let mut bad = enc.clone();
    bad[1] ^= 0xFF;
    let o = mrle(&["decode", "-"], &bad);
    assert_eq!(o.code, EXIT_CORRUPT);
    assert!(o.stderr.contains("magic"));

    let o = mrle(&["decode", "-", "--raw"], &[0u8; 10]);
    assert_eq!(o.code, EXIT_CORRUPT);

    let mut flagged = vec![0u8; 32];
    flagged[8] = 0x02;
    flagged.push(b'A');
    assert_eq!(mrle(&["decode", "-", "--raw"], &flagged).code, EXIT_CORRUPT);
}

#[test]
fn decode_mode_mismatch_is_exit_3() {
    let enc = mrle(&["encode", "-", "--mode", "bit"], b"abc").stdout;
    assert_eq!(
        mrle(&["decode", "-", "--mode", "byte"], &enc).code,
        EXIT_CORRUPT
    );
    assert_eq!(mrle(&["decode", "-", "--mode", "bit"], &enc).code, EXIT_OK);
}

#[test]
fn usage_errors_are_exit_1() {
    assert_eq!(mrle(&["frobnicate"], b"").code, EXIT_USAGE);
    assert_eq!(mrle(&["encode", "-", "--bogus"], b"").code, EXIT_USAGE);
    assert_eq!(
        mrle(&["encode", "-", "--raw", "--mode", "bit"], b"x").code,
        EXIT_USAGE
    );
    assert_eq!(
        mrle(&["decode", "-", "--raw", "--mode", "bit"], b"x").code,
        EXIT_USAGE
    );
    assert_eq!(
        mrle(&["analyze", "-", "--raw", "--mode", "bit"], b"x").code,
        EXIT_USAGE
    );
    assert_eq!(mrle(&["bench"], b"").code, EXIT_USAGE);
    assert_eq!(
        mrle(&["bench", "--corpus", "nope:10"], b"").code,
        EXIT_USAGE
    );
    assert_eq!(
        mrle(&["bench", "--corpus", "random:10", "--codecs", "zip"], b"").code,
        EXIT_USAGE
    );
    assert_eq!(mrle(&["--help"], b"").code, EXIT_OK);
}

#[test]
fn missing_file_is_exit_2() {
    let o = mrle(&["encode", "/definitely/not/here"], b"");
    assert_eq!(o.code, EXIT_IO);
    assert!(o.stderr.contains("/definitely/not/here"));
    assert_eq!(mrle(&["bench", "/definitely/not/here"], b"").code, EXIT_IO);
}

#[test]
fn bench_formats_agree() {
    let args = |fmt: &'static str| {
        vec![
            "bench",
            "-",
            "--corpus",
            "alternating:1000",
            "--corpus",
            "geometric-runs(0.1):3000:4",
            "--format",
            fmt,
        ]
    };
    let csv = mrle(&args("csv"), b"AAAABBCCCDB");
    let json = mrle(&args("json"), b"AAAABBCCCDB");
    let table = mrle(&args("table"), b"AAAABBCCCDB");
    assert_eq!(csv.code, 0, "{}", csv.stderr);

    let csv = String::from_utf8(csv.stdout).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "path,codec,input_bytes,encoded_bytes,ratio,encode_ms,decode_ms,roundtrip_ok"
    );
    let rows: Vec<&str> = lines.collect();
    let json: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    let table = String::from_utf8(table.stdout).unwrap();
    let table_rows = table.lines().skip(1).take_while(|l| !l.is_empty()).count();
    assert_eq!(rows.len(), 9);
    assert_eq!(json.as_array().unwrap().len(), rows.len());
    assert_eq!(table_rows, rows.len());

    assert!(rows[0].starts_with("-,mrle,11,40,"));
    assert!(rows[2].starts_with("-,rle,11,10,"));
    assert!(rows[3].starts_with("gen:alternating:1000:0,mrle,1000,1032,"));
    assert!(rows[5].starts_with("gen:alternating:1000:0,rle,1000,2000,"));
}

#[test]
fn bench_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = mrle(
        &[
            "bench",
            "--corpus",
            "constant:1020",
            "--format",
            "json",
            "-o",
            p(&out),
            "--codecs",
            "mrle",
        ],
        b"",
    );
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(out).unwrap()).unwrap();
    assert_eq!(v[0]["encoded_bytes"], 32 + 6);
}

#[test]
fn binary_pipes_through_stdio() {
    let exe = env!("CARGO_BIN_EXE_mrle");
    let data: Vec<u8> = b"xxxxxxxxxxyz".repeat(100);
    let run = |args: &[&str], input: &[u8]| {
        let mut child = Command::new(exe)
            .args(args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(input).unwrap();
        let out = child.wait_with_output().unwrap();
        (out.status.code().unwrap(), out.stdout)
    };
    let (code, encoded) = run(&["encode", "-", "-o", "-"], &data);
    assert_eq!(code, 0);
    assert!(encoded.starts_with(b"MRLE\x01\x00"));
    let (code, decoded) = run(&["decode", "-"], &encoded);
    assert_eq!(code, 0);
    assert_eq!(decoded, data);
    let (code, _) = run(&["decode", "-"], b"garbage!");
    assert_eq!(code, 3);
}
