//! Command-line front end: `compute`, `verify`, `crosscheck` and `bench`.
//!
//! Exit codes: 0 on success, 2 when a verification or comparison fails, 1 on
//! usage and I/O errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Write};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::and_pairs::{
    and_pairs_bruteforce, and_pairs_bruteforce_prefix, and_pairs_recursive, zero_and_pairs_digitdp,
    RecursionMemo,
};
use crate::binary_partitions::{b_table_recursive, binary_partition_oracle_prefix};
use crate::error::Error;
use crate::guard::Guards;
use crate::maxmin::{
    conj115_closed_form_table, conj115_definition_table, Conj115Table, M1Convention,
};
use crate::oeis::{crosscheck, parse_bfile};
use crate::verifier::{verify_conjecture_110, verify_conjecture_115, Conjecture, IdentityReport};
use crate::SeqValue;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "seqverify",
    version,
    about = "Compute and cross-verify AND-pair counts, binary partitions and max/min split sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print sequence terms.
    Compute(ComputeArgs),
    /// Check every known identity of one sequence family.
    Verify(VerifyArgs),
    /// Compare a computed prefix against an OEIS b-file.
    Crosscheck(CrosscheckArgs),
    /// Time the oracle against the fast path.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Seq {
    /// Pairs 0 <= i, j < n with i AND j != 0 (first index 0).
    AndPairs,
    /// Pairs 0 <= i, j < n with i AND j == 0 (first index 0).
    AndPairsZero,
    /// a(n) = M(n) + m(n) (first index 1).
    #[value(name = "conj115-a")]
    Conj115A,
    /// m(n), minimum split sum (first index 2).
    #[value(name = "conj115-m")]
    Conj115SmallM,
    /// M(n), maximum split sum (first index 2).
    #[value(name = "conj115-M")]
    Conj115BigM,
    /// Binary partitions of 2n (first index 0).
    Binpart,
}

impl Seq {
    pub fn name(self) -> &'static str {
        match self {
            Seq::AndPairs => "and-pairs",
            Seq::AndPairsZero => "and-pairs-zero",
            Seq::Conj115A => "conj115-a",
            Seq::Conj115SmallM => "conj115-m",
            Seq::Conj115BigM => "conj115-M",
            Seq::Binpart => "binpart",
        }
    }

    pub fn first_index(self) -> usize {
        match self {
            Seq::AndPairs | Seq::AndPairsZero | Seq::Binpart => 0,
            Seq::Conj115A => 1,
            Seq::Conj115SmallM | Seq::Conj115BigM => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Fast,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Fast => "fast",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum M1Arg {
    Zero,
    One,
}

#[derive(Debug, Args)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    seq: Seq,
    /// Single index.
    #[arg(long, value_parser = parse_index, conflicts_with = "range", required_unless_present = "range")]
    n: Option<BigUint>,
    /// Inclusive range A..B.
    #[arg(long, value_parser = parse_range)]
    range: Option<(BigUint, BigUint)>,
    #[arg(long, value_enum, default_value = "fast")]
    method: Method,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// 110 (AND pairs) or 115 (max/min split).
    #[arg(long)]
    conjecture: Conjecture,
    /// Largest index checked.
    #[arg(long = "max")]
    n_max: usize,
    /// Value of m(1) in prefix sums (115 only).
    #[arg(long, value_enum)]
    m1: Option<M1Arg>,
    /// Upper end of the range for the quadratic chain identity.
    #[arg(long)]
    eq1_cap: Option<usize>,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
}

#[derive(Debug, Args)]
struct CrosscheckArgs {
    #[arg(long)]
    bfile: std::path::PathBuf,
    #[arg(long, value_enum)]
    seq: Seq,
    /// b-file index of the sequence's first term (defaults to that term's
    /// own index).
    #[arg(long, allow_hyphen_values = true)]
    offset: Option<i64>,
    /// Largest sequence index computed.
    #[arg(long = "max")]
    n_max: usize,
    #[arg(long, value_enum, default_value = "fast")]
    method: Method,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    seq: Seq,
    #[arg(long, value_parser = parse_index)]
    n: BigUint,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    reps: u32,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
}

fn parse_index(s: &str) -> Result<BigUint, String> {
    let s = s.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("{s:?} is not a nonnegative decimal integer"));
    }
    s.parse().map_err(|e| format!("{s:?}: {e}"))
}

fn parse_range(s: &str) -> Result<(BigUint, BigUint), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("{s:?} is not a range A..B"))?;
    let (lo, hi) = (parse_index(lo)?, parse_index(hi)?);
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

/// One computed term as printed by `compute`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub seq: &'static str,
    pub index: String,
    pub value: String,
    pub method: &'static str,
}

/// Failure modes of a command, mapped onto exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command, writing
/// records to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };

    let guards = match Guards::from_env() {
        Ok(g) => g,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };

    let result = match cli.command {
        Command::Compute(a) => cmd_compute(a, &guards, out),
        Command::Verify(a) => cmd_verify(a, &guards, out),
        Command::Crosscheck(a) => cmd_crosscheck(a, &guards, out),
        Command::Bench(a) => cmd_bench(a, &guards, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "mismatch: {msg}");
            EXIT_MISMATCH
        }
    }
}

fn to_usize(n: &BigUint, seq: Seq) -> Result<usize, Failure> {
    n.to_usize().ok_or_else(|| {
        Failure::Usage(format!(
            "{}: index {n} is too large for a table",
            seq.name()
        ))
    })
}

fn conj115_table(n_max: usize, method: Method, guards: &Guards) -> Result<Conj115Table, Error> {
    match method {
        Method::Oracle => conj115_definition_table(n_max, guards.definition),
        Method::Fast => conj115_closed_form_table(n_max, &b_table_recursive(n_max.max(1))?),
    }
}

/// Terms `lo..=hi` of `seq` by `method`, paired with their indices.
pub fn compute_terms(
    seq: Seq,
    lo: &BigUint,
    hi: &BigUint,
    method: Method,
    guards: &Guards,
) -> Result<Vec<(BigUint, SeqValue)>, Error> {
    compute_terms_inner(seq, lo, hi, method, guards).map_err(|f| match f {
        Failure::Usage(msg) | Failure::Mismatch(msg) => Error::range("compute", msg),
    })
}

fn compute_terms_inner(
    seq: Seq,
    lo: &BigUint,
    hi: &BigUint,
    method: Method,
    guards: &Guards,
) -> Result<Vec<(BigUint, SeqValue)>, Failure> {
    if *lo < BigUint::from(seq.first_index()) {
        return Err(Failure::Usage(format!(
            "{} is defined from index {} on",
            seq.name(),
            seq.first_index()
        )));
    }

    // Arbitrary-precision paths: no table, one evaluation per index.
    if method == Method::Fast && matches!(seq, Seq::AndPairs | Seq::AndPairsZero) {
        let mut memo = RecursionMemo::new();
        let mut out = Vec::new();
        let mut n = lo.clone();
        while n <= *hi {
            let v = match seq {
                Seq::AndPairs => and_pairs_recursive(&n, &mut memo),
                _ => zero_and_pairs_digitdp(&n),
            };
            out.push((n.clone(), v));
            n += 1u32;
        }
        return Ok(out);
    }

    let (lo, hi) = (to_usize(lo, seq)?, to_usize(hi, seq)?);
    let values: Vec<SeqValue> = match (seq, method) {
        (Seq::AndPairs | Seq::AndPairsZero, _) => {
            let brute = if lo == hi {
                let mut v = vec![BigUint::zero(); hi];
                v.push(and_pairs_bruteforce(hi, guards.brute_force)?);
                v
            } else {
                and_pairs_bruteforce_prefix(hi, guards.brute_force)?
            };
            (lo..=hi)
                .map(|n| {
                    if seq == Seq::AndPairs {
                        brute[n].clone()
                    } else {
                        BigUint::from(n).pow(2) - &brute[n]
                    }
                })
                .collect()
        }
        (Seq::Binpart, Method::Oracle) => {
            binary_partition_oracle_prefix(hi, guards.binpart_oracle)?[lo..=hi].to_vec()
        }
        (Seq::Binpart, Method::Fast) => b_table_recursive(hi.max(1))?.terms()[lo..=hi].to_vec(),
        (Seq::Conj115A | Seq::Conj115SmallM | Seq::Conj115BigM, _) => {
            let table = conj115_table(hi, method, guards)?;
            (lo..=hi)
                .map(|n| {
                    let v = match seq {
                        Seq::Conj115A => table.a(n),
                        Seq::Conj115SmallM => table.small_m(n),
                        _ => table.big_m(n),
                    };
                    v.expect("index within table").clone()
                })
                .collect()
        }
    };
    Ok((lo..=hi).map(BigUint::from).zip(values).collect())
}

fn cmd_compute(a: ComputeArgs, guards: &Guards, out: &mut dyn Write) -> CmdResult {
    let (lo, hi) = match (a.n, a.range) {
        (Some(n), _) => (n.clone(), n),
        (None, Some(r)) => r,
        (None, None) => unreachable!("clap requires --n or --range"),
    };
    let terms = compute_terms_inner(a.seq, &lo, &hi, a.method, guards)?;
    let records: Vec<OutputRecord> = terms
        .into_iter()
        .map(|(index, value)| OutputRecord {
            seq: a.seq.name(),
            index: index.to_string(),
            value: value.to_string(),
            method: a.method.name(),
        })
        .collect();
    match a.format {
        Format::Tsv => {
            writeln!(out, "seq\tindex\tvalue\tmethod")?;
            for r in &records {
                writeln!(out, "{}\t{}\t{}\t{}", r.seq, r.index, r.value, r.method)?;
            }
        }
        Format::Json => {
            for r in &records {
                writeln!(out, "{}", serde_json::to_string(r).expect("serializable"))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn write_reports(
    reports: &[IdentityReport],
    format: Format,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for r in reports {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&r.to_record()).expect("serializable")
                )?;
            }
        }
        Format::Tsv => {
            writeln!(
                out,
                "identity\trange\tstatus\tfailure_index\texpected\tactual\telapsed_ms"
            )?;
            for r in reports {
                let rec = r.to_record();
                let (idx, exp, act) = match &rec.first_failure {
                    Some(f) => (f.index.as_str(), f.expected.as_str(), f.actual.as_str()),
                    None => ("-", "-", "-"),
                };
                writeln!(
                    out,
                    "{}\t{}\t{}\t{idx}\t{exp}\t{act}\t{:.3}",
                    rec.identity.as_str(),
                    rec.range.as_deref().unwrap_or("-"),
                    rec.status,
                    rec.elapsed_ms
                )?;
            }
        }
    }
    Ok(())
}

fn exit_for(reports: &[IdentityReport]) -> i32 {
    if reports.iter().any(IdentityReport::is_fail) {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}

fn cmd_verify(a: VerifyArgs, guards: &Guards, out: &mut dyn Write) -> CmdResult {
    let mut guards = *guards;
    if let Some(cap) = a.eq1_cap {
        guards.eq1_cap = cap;
    }
    let reports = match a.conjecture {
        Conjecture::AndPairs => {
            if a.m1.is_some() {
                return Err(Failure::Usage("--m1 applies to conjecture 115 only".into()));
            }
            verify_conjecture_110(a.n_max, &guards)?
        }
        Conjecture::MaxMinSplit => {
            let m1 = match a.m1.unwrap_or(M1Arg::Zero) {
                M1Arg::Zero => M1Convention::Zero,
                M1Arg::One => M1Convention::One,
            };
            verify_conjecture_115(a.n_max, m1, &guards)?
        }
    };
    write_reports(&reports, a.format, out)?;
    Ok(exit_for(&reports))
}

fn cmd_crosscheck(a: CrosscheckArgs, guards: &Guards, out: &mut dyn Write) -> CmdResult {
    let file =
        File::open(&a.bfile).map_err(|e| Failure::Usage(format!("{}: {e}", a.bfile.display())))?;
    let entries = parse_bfile(BufReader::new(file))?;
    let first = a.seq.first_index();
    if a.n_max < first {
        return Err(Failure::Usage(format!(
            "--max {} is below the first index {first} of {}",
            a.n_max,
            a.seq.name()
        )));
    }
    let terms = compute_terms_inner(
        a.seq,
        &BigUint::from(first),
        &BigUint::from(a.n_max),
        a.method,
        guards,
    )?;
    let computed: Vec<SeqValue> = terms.into_iter().map(|(_, v)| v).collect();
    let report = crosscheck(&entries, &computed, a.offset.unwrap_or(first as i64))?;
    write_reports(std::slice::from_ref(&report), a.format, out)?;
    Ok(exit_for(std::slice::from_ref(&report)))
}

/// Timing of one method in a benchmark run.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRecord {
    pub seq: &'static str,
    pub n: String,
    pub method: &'static str,
    /// `"timed"` or `"skipped"`.
    pub status: &'static str,
    pub reps: u32,
    pub mean_ms: Option<f64>,
    pub min_ms: Option<f64>,
    pub note: String,
}

fn evaluate_at(seq: Seq, n: &BigUint, method: Method, guards: &Guards) -> Result<SeqValue, Error> {
    let mut terms = compute_terms(seq, n, n, method, guards)?;
    Ok(terms.pop().expect("one term").1)
}

fn oracle_guard(seq: Seq, guards: &Guards) -> usize {
    match seq {
        Seq::AndPairs | Seq::AndPairsZero => guards.brute_force,
        Seq::Binpart => guards.binpart_oracle,
        Seq::Conj115A | Seq::Conj115SmallM | Seq::Conj115BigM => guards.definition,
    }
}

/// Times both methods at `n` over `reps` repetitions. The oracle is skipped
/// (with an explicit record) when `n` exceeds its guard; when both run, their
/// values must agree before any timing is reported.
pub fn bench(seq: Seq, n: &BigUint, reps: u32, guards: &Guards) -> Result<Vec<BenchRecord>, Error> {
    let reps = reps.max(1);
    let guard = oracle_guard(seq, guards);
    let oracle_feasible = n.to_usize().is_some_and(|v| v <= guard);

    let fast_value = evaluate_at(seq, n, Method::Fast, guards)?;
    if oracle_feasible {
        let oracle_value = evaluate_at(seq, n, Method::Oracle, guards)?;
        if oracle_value != fast_value {
            return Err(Error::Integrity(format!(
                "{} at n = {n}: oracle gives {oracle_value}, fast path gives {fast_value}",
                seq.name()
            )));
        }
    }

    let time = |method: Method| -> Result<(f64, f64), Error> {
        let mut total = Duration::ZERO;
        let mut best = Duration::MAX;
        for _ in 0..reps {
            let start = Instant::now();
            std::hint::black_box(evaluate_at(seq, n, method, guards)?);
            let dt = start.elapsed();
            total += dt;
            best = best.min(dt);
        }
        Ok((
            total.as_secs_f64() * 1e3 / f64::from(reps),
            best.as_secs_f64() * 1e3,
        ))
    };

    let mut records = Vec::with_capacity(2);
    for method in [Method::Oracle, Method::Fast] {
        let base = BenchRecord {
            seq: seq.name(),
            n: n.to_string(),
            method: method.name(),
            status: "timed",
            reps,
            mean_ms: None,
            min_ms: None,
            note: String::new(),
        };
        if method == Method::Oracle && !oracle_feasible {
            records.push(BenchRecord {
                status: "skipped",
                note: format!("n exceeds the oracle guard of {guard}"),
                ..base
            });
            continue;
        }
        let (mean, min) = time(method)?;
        records.push(BenchRecord {
            mean_ms: Some(mean),
            min_ms: Some(min),
            note: if oracle_feasible {
                "values agree".into()
            } else {
                String::new()
            },
            ..base
        });
    }
    Ok(records)
}

fn cmd_bench(a: BenchArgs, guards: &Guards, out: &mut dyn Write) -> CmdResult {
    let records = bench(a.seq, &a.n, a.reps, guards).map_err(|e| match e {
        Error::Integrity(msg) => Failure::Mismatch(msg),
        other => other.into(),
    })?;
    let fmt_ms = |v: Option<f64>| v.map_or_else(|| "-".to_string(), |x| format!("{x:.6}"));
    match a.format {
        Format::Tsv => {
            writeln!(out, "seq\tn\tmethod\tstatus\treps\tmean_ms\tmin_ms\tnote")?;
            for r in &records {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.seq,
                    r.n,
                    r.method,
                    r.status,
                    r.reps,
                    fmt_ms(r.mean_ms),
                    fmt_ms(r.min_ms),
                    r.note
                )?;
            }
        }
        Format::Json => {
            for r in &records {
                writeln!(out, "{}", serde_json::to_string(r).expect("serializable"))?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["seqverify"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn values(tsv: &str) -> Vec<String> {
        tsv.lines()
            .skip(1)
            .map(|l| l.split('\t').nth(2).unwrap().to_string())
            .collect()
    }

    #[test]
    fn compute_and_pairs_fast() {
        let (code, out, _) = run_capture(&[
            "compute",
            "--seq",
            "and-pairs",
            "--n",
            "7",
            "--method",
            "fast",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "seq\tindex\tvalue\tmethod\nand-pairs\t7\t24\tfast\n");
    }

    #[test]
    fn compute_binpart_range_oracle() {
        let (code, out, _) = run_capture(&[
            "compute", "--seq", "binpart", "--range", "1..6", "--method", "oracle",
        ]);
        assert_eq!(code, 0);
        assert_eq!(values(&out), ["2", "4", "6", "10", "14", "20"]);
    }

    #[test]
    fn compute_conj115_a_1() {
        let (code, out, _) = run_capture(&["compute", "--seq", "conj115-a", "--n", "1"]);
        assert_eq!(code, 0);
        assert_eq!(values(&out), ["1"]);
    }

    #[test]
    fn compute_case_sensitive_m_names() {
        let (_, small, _) = run_capture(&["compute", "--seq", "conj115-m", "--range", "2..6"]);
        let (_, big, _) = run_capture(&[
            "compute",
            "--seq",
            "conj115-M",
            "--range",
            "2..6",
            "--method",
            "oracle",
        ]);
        assert_eq!(values(&small), ["2", "5", "8", "14", "20"]);
        assert_eq!(values(&big), ["2", "5", "11", "20", "35"]);
    }

    #[test]
    fn compute_json_lines() {
        let (code, out, _) = run_capture(&[
            "compute",
            "--seq",
            "and-pairs-zero",
            "--range",
            "4..5",
            "--format",
            "json",
        ]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"seq\":\"and-pairs-zero\",\"index\":\"4\",\"value\":\"9\",\"method\":\"fast\"}\n\
             {\"seq\":\"and-pairs-zero\",\"index\":\"5\",\"value\":\"17\",\"method\":\"fast\"}\n"
        );
    }

    #[test]
    fn compute_usage_errors() {
        assert_eq!(run_capture(&["compute", "--seq", "nope", "--n", "1"]).0, 1);
        assert_eq!(
            run_capture(&["compute", "--seq", "binpart", "--n", "1", "--method", "magic"]).0,
            1
        );
        assert_eq!(run_capture(&["compute", "--seq", "binpart"]).0, 1);
        assert_eq!(
            run_capture(&["compute", "--seq", "conj115-m", "--n", "1"]).0,
            1
        );
        assert_eq!(
            run_capture(&["compute", "--seq", "binpart", "--range", "5..2"]).0,
            1
        );
        let (code, _, err) = run_capture(&[
            "compute",
            "--seq",
            "and-pairs",
            "--n",
            "9000",
            "--method",
            "oracle",
        ]);
        assert_eq!(code, 1);
        assert!(err.contains("8192"), "{err}");
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(
            run_capture(&["verify", "--conjecture", "110", "--max", "64"]).0,
            0
        );
        let (code, out, _) = run_capture(&[
            "verify",
            "--conjecture",
            "115",
            "--max",
            "40",
            "--m1",
            "one",
        ]);
        assert_eq!(code, 2);
        assert!(out.contains("C115_COR3\t2..40\tfail"), "{out}");
        let (code, out, _) = run_capture(&[
            "verify",
            "--conjecture",
            "115",
            "--max",
            "1",
            "--format",
            "json",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("\"status\":\"skipped\""), "{out}");
        assert_eq!(
            run_capture(&["verify", "--conjecture", "111", "--max", "4"]).0,
            1
        );
        assert_eq!(
            run_capture(&["verify", "--conjecture", "110", "--max", "4", "--m1", "one"]).0,
            1
        );
        assert_eq!(
            run_capture(&["verify", "--conjecture", "110", "--max", "100000"]).0,
            1
        );
    }

    #[test]
    fn tsv_and_json_carry_the_same_terms() {
        let (_, tsv, _) = run_capture(&["compute", "--seq", "conj115-a", "--range", "1..30"]);
        let (_, json, _) = run_capture(&[
            "compute",
            "--seq",
            "conj115-a",
            "--range",
            "1..30",
            "--format",
            "json",
        ]);
        let from_json: Vec<String> = json
            .lines()
            .map(|l| {
                serde_json::from_str::<serde_json::Value>(l).unwrap()["value"]
                    .as_str()
                    .unwrap()
                    .to_string()
            })
            .collect();
        assert_eq!(values(&tsv), from_json);
    }

    #[test]
    fn bench_skips_oracle_above_guard() {
        let n: BigUint = "1000000000000000000".parse().unwrap();
        let records = bench(Seq::AndPairs, &n, 2, &Guards::default()).unwrap();
        assert_eq!(records[0].status, "skipped");
        assert_eq!(records[1].status, "timed");
        assert!(records[1].mean_ms.is_some());
    }

    #[test]
    fn bench_times_both_when_feasible() {
        let records = bench(Seq::Binpart, &BigUint::from(500u32), 1, &Guards::default()).unwrap();
        assert!(records
            .iter()
            .all(|r| r.status == "timed" && r.note == "values agree"));
    }
}
