use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_seqverify"));
    cmd.env_remove("SEQVERIFY_GUARD");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn seqverify")
}

fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/a000123_prefix.txt")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_prints_tsv_with_header() {
    let o = run(&[
        "compute",
        "--seq",
        "and-pairs",
        "--n",
        "7",
        "--method",
        "fast",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "seq\tindex\tvalue\tmethod\nand-pairs\t7\t24\tfast\n"
    );
}

#[test]
fn compute_handles_arbitrary_precision_indices() {
    let n = "123456789012345678901234567890";
    let o = run(&[
        "compute",
        "--seq",
        "and-pairs",
        "--n",
        n,
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rec: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(rec["index"], n);
    let value = rec["value"].as_str().unwrap();
    assert!(
        value.chars().all(|c| c.is_ascii_digit()) && value.len() > 50,
        "{value}"
    );
}

#[test]
fn unknown_sequence_is_a_usage_error() {
    let o = run(&["compute", "--seq", "fibonacci", "--n", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid value"));
}

#[test]
fn guard_env_override() {
    let o = bin()
        .env("SEQVERIFY_GUARD", "10")
        .args([
            "compute", "--seq", "binpart", "--n", "11", "--method", "oracle",
        ])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("guard of 10"));

    let o = bin()
        .env("SEQVERIFY_GUARD", "ten")
        .args(["compute", "--seq", "binpart", "--n", "1"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_110_passes() {
    let o = run(&["verify", "--conjecture", "110", "--max", "256"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 5);
    for id in [
        "C110_EVEN",
        "C110_ODD",
        "C110_COMPLEMENT",
        "C110_PARITY_SPLIT",
    ] {
        assert!(out.contains(&format!("{id}\t")), "{out}");
    }
}

#[test]
fn verify_115_with_m1_one_exits_2() {
    let o = run(&[
        "verify",
        "--conjecture",
        "115",
        "--max",
        "512",
        "--m1",
        "one",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let cor3 = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .find(|r| r["identity"] == "C115_COR3")
        .unwrap();
    assert_eq!(cor3["status"], "fail");
    assert_eq!(cor3["first_failure"]["index"], "2");
}

#[test]
fn verify_115_max_1_reports_skips() {
    let o = run(&["verify", "--conjecture", "115", "--max", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("C115_PROP4\t-\tskipped"));
}

#[test]
fn crosscheck_fixture_passes() {
    let path = fixture();
    let o = run(&[
        "crosscheck",
        "--bfile",
        path.to_str().unwrap(),
        "--seq",
        "binpart",
        "--offset",
        "0",
        "--max",
        "100",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("OEIS_CROSSCHECK\t0..100\tpass"));
}

#[test]
fn crosscheck_altered_fixture_exits_2() {
    let text = std::fs::read_to_string(fixture()).unwrap();
    let altered = text.replace("\n37 3074\n", "\n37 3075\n");
    assert_ne!(text, altered, "fixture line for index 37 changed");
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(altered.as_bytes()).unwrap();
    let o = run(&[
        "crosscheck",
        "--bfile",
        file.path().to_str().unwrap(),
        "--seq",
        "binpart",
        "--max",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stdout(&o).contains("fail\t37\t3075\t3074"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn crosscheck_shifted_offset() {
    // A file that starts the conj115 a-sequence at index 0 instead of 1.
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(b"0 1\n1 4\n2 10\n3 19\n").unwrap();
    let p = file.path().to_str().unwrap();
    let ok = run(&[
        "crosscheck",
        "--bfile",
        p,
        "--seq",
        "conj115-a",
        "--offset",
        "0",
        "--max",
        "10",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = run(&[
        "crosscheck",
        "--bfile",
        p,
        "--seq",
        "conj115-a",
        "--max",
        "10",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn crosscheck_io_and_parse_errors_exit_1() {
    assert_eq!(
        run(&[
            "crosscheck",
            "--bfile",
            "missing.txt",
            "--seq",
            "binpart",
            "--max",
            "10"
        ])
        .status
        .code(),
        Some(1)
    );
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(b"1 2\n3 6\n").unwrap();
    let o = run(&[
        "crosscheck",
        "--bfile",
        file.path().to_str().unwrap(),
        "--seq",
        "binpart",
        "--max",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bench_skips_oracle_for_huge_n() {
    let o = run(&[
        "bench",
        "--seq",
        "and-pairs",
        "--n",
        "1000000000000000000",
        "--reps",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains("and-pairs\t1000000000000000000\toracle\tskipped"),
        "{out}"
    );
    assert!(out.contains("\tfast\ttimed\t10\t"), "{out}");
}

#[test]
fn bench_times_both_methods() {
    for seq in ["and-pairs", "binpart"] {
        let o = run(&["bench", "--seq", seq, "--n", "4096", "--reps", "3"]);
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        assert!(out.contains("\toracle\ttimed\t3\t"), "{out}");
        assert!(out.contains("\tfast\ttimed\t3\t"), "{out}");
        assert!(out.contains("values agree"), "{out}");
    }
    assert_eq!(
        run(&["bench", "--seq", "binpart", "--n", "5", "--reps", "0"])
            .status
            .code(),
        Some(1)
    );
}
