//! C ABI over `seqverify`.
//!
//! Conventions:
//!
//! * every fallible function returns an [`SvStatus`]; on anything but
//!   `SV_STATUS_OK` a message is available from [`sv_last_error_message`]
//!   on the same thread;
//! * sequence values and indices of unbounded size travel as NUL-terminated
//!   decimal strings; strings returned through `char **out` are owned by the
//!   caller and released with [`sv_string_free`];
//! * tables and report lists are opaque handles created by `*_new` (or
//!   [`sv_verify`]) and released by the matching `*_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigUint;

use seqverify::and_pairs::{
    and_pairs_bruteforce, and_pairs_fast, parity_split, zero_and_pairs_digitdp,
};
use seqverify::binary_partitions::{b_table_recursive, binary_partition_oracle, BinPartTable};
use seqverify::maxmin::{
    conj115_closed_form_table, conj115_definition_table, Conj115Table, M1Convention,
};
use seqverify::oeis::{crosscheck, parse_bfile_str};
use seqverify::verifier::{verify_conjecture_110, verify_conjecture_115, IdentityReport, Status};
use seqverify::{Error, Guards, SeqValue};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    RangeError = 3,
    IntegrityError = 4,
    ParseError = 5,
    IoError = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SvMethod {
    Oracle = 0,
    Fast = 1,
}

/// Which column of a max/min split table to read.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SvTerm {
    A = 0,
    BigM = 1,
    SmallM = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SvM1 {
    Zero = 0,
    One = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SvReportStatus {
    Pass = 0,
    Fail = 1,
    Skipped = 2,
}

/// Parity class counts; they fit in 64 bits for every n the brute force
/// accepts.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SvParitySplit {
    pub ee: u64,
    pub eo: u64,
    pub oe: u64,
    pub oo: u64,
}

/// Fixed-size view of one report. `range_lo`/`range_hi` are meaningful
/// only when `status` is not skipped, `failure_index` only when it is fail.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvReportSummary {
    pub status: SvReportStatus,
    pub range_lo: i64,
    pub range_hi: i64,
    pub failure_index: i64,
    pub elapsed_ms: f64,
}

pub struct SvBinPartTable(BinPartTable);

pub struct SvConj115Table(Conj115Table);

pub struct SvReportList(Vec<IdentityReport>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct FfiError(SvStatus, String);

impl From<Error> for FfiError {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Range { .. } => SvStatus::RangeError,
            Error::Integrity(_) => SvStatus::IntegrityError,
            Error::Parse { .. } => SvStatus::ParseError,
            Error::Io(_) => SvStatus::IoError,
        };
        FfiError(status, e.to_string())
    }
}

fn invalid(msg: impl Into<String>) -> FfiError {
    FfiError(SvStatus::InvalidArgument, msg.into())
}

fn null(what: &str) -> FfiError {
    FfiError(SvStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `f`, converting errors and panics into a status plus last-error text.
fn guarded(f: impl FnOnce() -> Result<(), FfiError>) -> SvStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SvStatus::Ok,
        Ok(Err(FfiError(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            SvStatus::Panic
        }
    }
}

fn guards() -> Result<Guards, FfiError> {
    Guards::from_env().map_err(invalid)
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, FfiError> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(format!("{what} is not UTF-8")))
}

unsafe fn read_index(p: *const c_char) -> Result<BigUint, FfiError> {
    let s = read_str(p, "index")?.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(invalid(format!(
            "{s:?} is not a nonnegative decimal integer"
        )));
    }
    s.parse()
        .map_err(|_| invalid(format!("{s:?} is not a nonnegative decimal integer")))
}

unsafe fn write_value(out: *mut *mut c_char, v: &SeqValue) -> Result<(), FfiError> {
    if out.is_null() {
        return Err(null("out"));
    }
    let s = CString::new(v.to_string()).expect("decimal digits only");
    *out = s.into_raw();
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), FfiError> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = CString::new(s)
        .map_err(|_| invalid("string contains NUL"))?
        .into_raw();
    Ok(())
}

unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Result<(), FfiError> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, FfiError> {
    p.as_ref().ok_or_else(|| null(what))
}

/// Message for the last failed call on this thread, or NULL if none. The
/// returned string is owned by the caller.
#[no_mangle]
pub extern "C" fn sv_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |m| m.clone().into_raw())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// AND-pair count for the decimal index `n` by the halving recurrence.
///
/// # Safety
/// `n` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sv_and_pairs(n: *const c_char, out: *mut *mut c_char) -> SvStatus {
    guarded(|| {
        let n = read_index(n)?;
        write_value(out, &and_pairs_fast(&n))
    })
}

/// AND-pair count by enumeration; fails with a range error above the guard.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sv_and_pairs_bruteforce(n: u64, out: *mut *mut c_char) -> SvStatus {
    guarded(|| {
        let n = usize::try_from(n).map_err(|_| invalid("n does not fit in size_t"))?;
        write_value(out, &and_pairs_bruteforce(n, guards()?.brute_force)?)
    })
}

/// Number of pairs below `n` with a zero bitwise AND, by digit DP.
///
/// # Safety
/// `n` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sv_zero_and_pairs(n: *const c_char, out: *mut *mut c_char) -> SvStatus {
    guarded(|| {
        let n = read_index(n)?;
        write_value(out, &zero_and_pairs_digitdp(&n))
    })
}

/// # Safety
/// `out` must point to a writable `SvParitySplit`.
#[no_mangle]
pub unsafe extern "C" fn sv_parity_split(n: u64, out: *mut SvParitySplit) -> SvStatus {
    guarded(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let n = usize::try_from(n).map_err(|_| invalid("n does not fit in size_t"))?;
        let s = parity_split(n, guards()?.brute_force)?;
        let small = |v: &SeqValue| u64::try_from(v).map_err(|_| invalid("count exceeds 64 bits"));
        *out = SvParitySplit {
            ee: small(&s.ee)?,
            eo: small(&s.eo)?,
            oe: small(&s.oe)?,
            oo: small(&s.oo)?,
        };
        Ok(())
    })
}

/// Binary partitions of `2n` by the partition DP.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sv_binpart_oracle(n: usize, out: *mut *mut c_char) -> SvStatus {
    guarded(|| write_value(out, &binary_partition_oracle(n, guards()?.binpart_oracle)?))
}

/// Builds `b(0..=n_max)` by the recurrence.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sv_binpart_table_new(
    n_max: usize,
    out: *mut *mut SvBinPartTable,
) -> SvStatus {
    guarded(|| write_handle(out, SvBinPartTable(b_table_recursive(n_max)?)))
}

/// # Safety
/// `table` must be a live handle from [`sv_binpart_table_new`].
#[no_mangle]
pub unsafe extern "C" fn sv_binpart_table_n_max(table: *const SvBinPartTable) -> usize {
    table.as_ref().map_or(0, |t| t.0.n_max())
}

/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sv_binpart_table_get(
    table: *const SvBinPartTable,
    n: usize,
    out: *mut *mut c_char,
) -> SvStatus {
    guarded(|| {
        let t = handle(table, "table")?;
        let v = t.0.get(n).ok_or_else(|| {
            FfiError(
                SvStatus::RangeError,
                format!("n = {n} outside [0, {}]", t.0.n_max()),
            )
        })?;
        write_value(out, v)
    })
}

/// # Safety
/// `table` must be NULL or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn sv_binpart_table_free(table: *mut SvBinPartTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Builds the max/min split table up to `n_max`, by the definition
/// (`SV_METHOD_ORACLE`) or the closed forms (`SV_METHOD_FAST`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sv_conj115_table_new(
    n_max: usize,
    method: SvMethod,
    out: *mut *mut SvConj115Table,
) -> SvStatus {
    guarded(|| {
        let table = match method {
            SvMethod::Oracle => conj115_definition_table(n_max, guards()?.definition)?,
            SvMethod::Fast => conj115_closed_form_table(n_max, &b_table_recursive(n_max.max(1))?)?,
        };
        write_handle(out, SvConj115Table(table))
    })
}

/// # Safety
/// `table` must be a live handle from [`sv_conj115_table_new`].
#[no_mangle]
pub unsafe extern "C" fn sv_conj115_table_n_max(table: *const SvConj115Table) -> usize {
    table.as_ref().map_or(0, |t| t.0.n_max())
}

/// Reads `a(n)`, `M(n)` or `m(n)`. `M` and `m` start at `n = 2`.
///
/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sv_conj115_table_get(
    table: *const SvConj115Table,
    term: SvTerm,
    n: usize,
    out: *mut *mut c_char,
) -> SvStatus {
    guarded(|| {
        let t = &handle(table, "table")?.0;
        let v = match term {
            SvTerm::A => t.a(n),
            SvTerm::BigM => t.big_m(n),
            SvTerm::SmallM => t.small_m(n),
        };
        let v = v.ok_or_else(|| {
            FfiError(
                SvStatus::RangeError,
                format!("{term:?}({n}) is not in the table"),
            )
        })?;
        write_value(out, v)
    })
}

/// # Safety
/// `table` must be NULL or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn sv_conj115_table_free(table: *mut SvConj115Table) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Runs every identity of conjecture 110 or 115 up to `n_max`. `m1` is
/// ignored for 110.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sv_verify(
    conjecture: u32,
    n_max: usize,
    m1: SvM1,
    out: *mut *mut SvReportList,
) -> SvStatus {
    guarded(|| {
        let g = guards()?;
        let reports = match conjecture {
            110 => verify_conjecture_110(n_max, &g)?,
            115 => {
                let m1 = match m1 {
                    SvM1::Zero => M1Convention::Zero,
                    SvM1::One => M1Convention::One,
                };
                verify_conjecture_115(n_max, m1, &g)?
            }
            other => return Err(invalid(format!("unknown conjecture {other}"))),
        };
        write_handle(out, SvReportList(reports))
    })
}

/// Compares decimal `values` (element 0 at index `offset`) against b-file
/// text, producing a one-element report list.
///
/// # Safety
/// `bfile_text` must be a valid string; `values` must point to `len` valid
/// strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sv_crosscheck(
    bfile_text: *const c_char,
    values: *const *const c_char,
    len: usize,
    offset: i64,
    out: *mut *mut SvReportList,
) -> SvStatus {
    guarded(|| {
        let entries = parse_bfile_str(read_str(bfile_text, "bfile_text")?)?;
        if values.is_null() && len > 0 {
            return Err(null("values"));
        }
        let computed = (0..len)
            .map(|i| read_index(*values.add(i)))
            .collect::<Result<Vec<_>, _>>()?;
        let report = crosscheck(&entries, &computed, offset)?;
        write_handle(out, SvReportList(vec![report]))
    })
}

/// # Safety
/// `list` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sv_report_list_len(list: *const SvReportList) -> usize {
    list.as_ref().map_or(0, |l| l.0.len())
}

/// Number of failed reports in the list.
///
/// # Safety
/// `list` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sv_report_list_failures(list: *const SvReportList) -> usize {
    list.as_ref()
        .map_or(0, |l| l.0.iter().filter(|r| r.is_fail()).count())
}

/// # Safety
/// `list` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sv_report_summary(
    list: *const SvReportList,
    i: usize,
    out: *mut SvReportSummary,
) -> SvStatus {
    guarded(|| {
        let r = report_at(list, i)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = SvReportSummary {
            status: match r.status {
                Status::Pass => SvReportStatus::Pass,
                Status::Fail => SvReportStatus::Fail,
                Status::Skipped => SvReportStatus::Skipped,
            },
            range_lo: r.range.map_or(0, |x| x.lo),
            range_hi: r.range.map_or(-1, |x| x.hi),
            failure_index: r.first_failure.as_ref().map_or(-1, |f| f.index),
            elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
        };
        Ok(())
    })
}

/// Identity name of report `i`, e.g. `"C115_COR3"`.
///
/// # Safety
/// `list` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sv_report_identity(
    list: *const SvReportList,
    i: usize,
    out: *mut *mut c_char,
) -> SvStatus {
    guarded(|| write_string(out, report_at(list, i)?.identity.as_str().to_string()))
}

/// Expected and actual values of the first failure of report `i`; a range
/// error if the report did not fail.
///
/// # Safety
/// `list` must be a live handle; both out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn sv_report_failure_values(
    list: *const SvReportList,
    i: usize,
    expected: *mut *mut c_char,
    actual: *mut *mut c_char,
) -> SvStatus {
    guarded(|| {
        let f = report_at(list, i)?
            .first_failure
            .as_ref()
            .ok_or_else(|| FfiError(SvStatus::RangeError, format!("report {i} did not fail")))?;
        if expected.is_null() || actual.is_null() {
            return Err(null("out"));
        }
        write_value(expected, &f.expected)?;
        write_value(actual, &f.actual)
    })
}

/// All reports as JSON lines, one object per report.
///
/// # Safety
/// `list` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sv_report_list_json(
    list: *const SvReportList,
    out: *mut *mut c_char,
) -> SvStatus {
    guarded(|| {
        let l = handle(list, "list")?;
        let mut text = String::new();
        for r in &l.0 {
            text.push_str(&serde_json::to_string(&r.to_record()).expect("serializable"));
            text.push('\n');
        }
        write_string(out, text)
    })
}

unsafe fn report_at<'a>(
    list: *const SvReportList,
    i: usize,
) -> Result<&'a IdentityReport, FfiError> {
    let l = handle(list, "list")?;
    l.0.get(i)
        .ok_or_else(|| FfiError(SvStatus::RangeError, format!("report {i} of {}", l.0.len())))
}

/// # Safety
/// `list` must be NULL or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn sv_report_list_free(list: *mut SvReportList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}
