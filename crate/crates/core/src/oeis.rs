//! OEIS b-files: plain text, one `<index> <value>` pair per line, `#`
//! comments, LF or CRLF line endings.

use std::fmt::Write as _;
use std::io::BufRead;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::verifier::{run_check, IdentityId, IdentityReport};
use crate::SeqValue;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileEntry {
    pub index: i64,
    pub value: SeqValue,
}

/// Parses a b-file. Blank lines and lines starting with `#` are skipped;
/// indices must increase by exactly one from line to line.
pub fn parse_bfile<R: BufRead>(reader: R) -> Result<Vec<BFileEntry>> {
    let mut entries: Vec<BFileEntry> = Vec::new();
    for (lineno, line) in reader.split(b'\n').enumerate() {
        let lineno = lineno + 1;
        let line = line?;
        let line = std::str::from_utf8(&line).map_err(|_| Error::Parse {
            line: lineno,
            msg: "not ASCII text".into(),
        })?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let entry = parse_line(line).map_err(|msg| Error::Parse { line: lineno, msg })?;
        if let Some(prev) = entries.last() {
            if entry.index != prev.index + 1 {
                return Err(Error::Integrity(format!(
                    "line {lineno}: index {} does not follow {}",
                    entry.index, prev.index
                )));
            }
        }
        entries.push(entry);
    }
    Ok(entries)
}

pub fn parse_bfile_str(text: &str) -> Result<Vec<BFileEntry>> {
    parse_bfile(text.as_bytes())
}

fn parse_line(line: &str) -> std::result::Result<BFileEntry, String> {
    let mut fields = line.split_whitespace();
    let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
        return Err(format!("expected \"<index> <value>\", got {line:?}"));
    };
    let index = index
        .parse::<i64>()
        .map_err(|_| format!("bad index {index:?}"))?;
    if !value.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!(
            "bad value {value:?} (nonnegative decimal expected)"
        ));
    }
    let value = value
        .parse::<BigUint>()
        .map_err(|_| format!("bad value {value:?}"))?;
    Ok(BFileEntry { index, value })
}

/// Renders entries back to b-file text, one `index value` per line.
pub fn write_bfile(entries: &[BFileEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let _ = writeln!(out, "{} {}", e.index, e.value);
    }
    out
}

/// Compares `computed` (whose element 0 sits at index `offset`) against the
/// b-file entries on the overlap of their index ranges.
pub fn crosscheck(
    entries: &[BFileEntry],
    computed: &[SeqValue],
    offset: i64,
) -> Result<IdentityReport> {
    let (first, last) = match (entries.first(), entries.last()) {
        (Some(f), Some(l)) => (f.index, l.index),
        _ => {
            return Err(Error::range(
                "b-file crosscheck",
                "the b-file has no entries",
            ))
        }
    };
    let lo = first.max(offset);
    let hi = last.min(offset + computed.len() as i64 - 1);
    if computed.is_empty() || lo > hi {
        return Err(Error::range(
            "b-file crosscheck",
            format!(
                "no overlap between b-file indices {first}..{last} and computed indices {offset}..{}",
                offset + computed.len() as i64 - 1
            ),
        ));
    }
    Ok(run_check(IdentityId::OeisCrosscheck, lo, hi, |index| {
        let expected = &entries[(index - first) as usize].value;
        let actual = &computed[(index - offset) as usize];
        (expected != actual).then(|| (expected.clone(), actual.clone()))
    }))
}
