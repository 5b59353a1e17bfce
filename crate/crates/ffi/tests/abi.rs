use std::ffi::{c_char, CStr, CString};
use std::ptr;

use seqverify_ffi::*;

/// Takes ownership of a returned string.
unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let v = CStr::from_ptr(s).to_str().unwrap().to_owned();
    sv_string_free(s);
    v
}

fn last_error() -> String {
    unsafe { take(sv_last_error_message()) }
}

#[test]
fn and_pairs_routes() {
    unsafe {
        let mut out = ptr::null_mut();
        let n = CString::new("1000000000000000000").unwrap();
        assert_eq!(sv_and_pairs(n.as_ptr(), &mut out), SvStatus::Ok);
        let a = take(out);
        assert_eq!(sv_zero_and_pairs(n.as_ptr(), &mut out), SvStatus::Ok);
        let z = take(out);
        let (a, z): (u128, u128) = (a.parse().unwrap(), z.parse().unwrap());
        assert_eq!(a + z, 1_000_000_000_000_000_000u128.pow(2));

        assert_eq!(sv_and_pairs_bruteforce(5, &mut out), SvStatus::Ok);
        assert_eq!(take(out), "8");
        assert_eq!(
            sv_and_pairs_bruteforce(1 << 20, &mut out),
            SvStatus::RangeError
        );
        assert!(last_error().contains("8192"));
    }
}

#[test]
fn bad_arguments() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(sv_and_pairs(ptr::null(), &mut out), SvStatus::NullPointer);
        let bad = CString::new("-4").unwrap();
        assert_eq!(
            sv_and_pairs(bad.as_ptr(), &mut out),
            SvStatus::InvalidArgument
        );
        let good = CString::new("4").unwrap();
        assert_eq!(
            sv_and_pairs(good.as_ptr(), ptr::null_mut()),
            SvStatus::NullPointer
        );
        assert_eq!(sv_parity_split(4, ptr::null_mut()), SvStatus::NullPointer);
        assert_eq!(sv_binpart_table_n_max(ptr::null()), 0);
        sv_binpart_table_free(ptr::null_mut());
        sv_string_free(ptr::null_mut());
    }
}

#[test]
fn parity_split_struct() {
    let mut s = SvParitySplit::default();
    unsafe {
        assert_eq!(sv_parity_split(8, &mut s), SvStatus::Ok);
    }
    assert_eq!(
        s,
        SvParitySplit {
            ee: 7,
            eo: 7,
            oe: 7,
            oo: 16
        }
    );
}

#[test]
fn binpart_table_handle() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(sv_binpart_table_new(0, &mut t), SvStatus::RangeError);
        assert_eq!(sv_binpart_table_new(6, &mut t), SvStatus::Ok);
        assert_eq!(sv_binpart_table_n_max(t), 6);
        let terms: Vec<String> = (0..=6)
            .map(|n| {
                let mut out = ptr::null_mut();
                assert_eq!(sv_binpart_table_get(t, n, &mut out), SvStatus::Ok);
                take(out)
            })
            .collect();
        assert_eq!(terms, ["1", "2", "4", "6", "10", "14", "20"]);
        let mut out = ptr::null_mut();
        assert_eq!(sv_binpart_oracle(4, &mut out), SvStatus::Ok);
        assert_eq!(take(out), "10");
        sv_binpart_table_free(t);
    }
}

#[test]
fn conj115_tables_agree_across_methods() {
    unsafe {
        let (mut def, mut closed) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(
            sv_conj115_table_new(50, SvMethod::Oracle, &mut def),
            SvStatus::Ok
        );
        assert_eq!(
            sv_conj115_table_new(50, SvMethod::Fast, &mut closed),
            SvStatus::Ok
        );
        assert_eq!(sv_conj115_table_n_max(def), 50);
        for term in [SvTerm::A, SvTerm::BigM, SvTerm::SmallM] {
            for n in 2..=50 {
                let (mut x, mut y) = (ptr::null_mut(), ptr::null_mut());
                assert_eq!(sv_conj115_table_get(def, term, n, &mut x), SvStatus::Ok);
                assert_eq!(sv_conj115_table_get(closed, term, n, &mut y), SvStatus::Ok);
                assert_eq!(take(x), take(y));
            }
        }
        let mut out = ptr::null_mut();
        assert_eq!(
            sv_conj115_table_get(def, SvTerm::SmallM, 1, &mut out),
            SvStatus::RangeError
        );
        assert_eq!(
            sv_conj115_table_new(0, SvMethod::Fast, &mut out.cast()),
            SvStatus::RangeError
        );
        sv_conj115_table_free(def);
        sv_conj115_table_free(closed);
    }
}

#[test]
fn verify_reports() {
    unsafe {
        let mut list = ptr::null_mut();
        assert_eq!(sv_verify(110, 128, SvM1::Zero, &mut list), SvStatus::Ok);
        assert_eq!(sv_report_list_len(list), 4);
        assert_eq!(sv_report_list_failures(list), 0);
        sv_report_list_free(list);

        assert_eq!(sv_verify(115, 64, SvM1::One, &mut list), SvStatus::Ok);
        assert_eq!(sv_report_list_len(list), 8);
        let cor3 = (0..8)
            .find(|&i| {
                let mut out = ptr::null_mut();
                assert_eq!(sv_report_identity(list, i, &mut out), SvStatus::Ok);
                take(out) == "C115_COR3"
            })
            .unwrap();
        let mut summary = SvReportSummary {
            status: SvReportStatus::Pass,
            range_lo: 0,
            range_hi: 0,
            failure_index: 0,
            elapsed_ms: 0.0,
        };
        assert_eq!(sv_report_summary(list, cor3, &mut summary), SvStatus::Ok);
        assert_eq!(summary.status, SvReportStatus::Fail);
        assert_eq!(
            (summary.range_lo, summary.range_hi, summary.failure_index),
            (2, 64, 2)
        );
        let (mut e, mut a) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(
            sv_report_failure_values(list, cor3, &mut e, &mut a),
            SvStatus::Ok
        );
        assert_eq!((take(e), take(a)), ("2".to_string(), "3".to_string()));

        let mut json = ptr::null_mut();
        assert_eq!(sv_report_list_json(list, &mut json), SvStatus::Ok);
        let json = take(json);
        assert_eq!(json.lines().count(), 8);
        for line in json.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert!(v["identity"].is_string());
        }
        assert_eq!(
            sv_report_summary(list, 8, &mut summary),
            SvStatus::RangeError
        );
        sv_report_list_free(list);

        assert_eq!(
            sv_verify(7, 10, SvM1::Zero, &mut list),
            SvStatus::InvalidArgument
        );
    }
}

#[test]
fn crosscheck_from_c_strings() {
    let text = CString::new("# A000123\r\n0 1\r\n1 2\r\n2 4\r\n3 6\r\n").unwrap();
    let values: Vec<CString> = ["1", "2", "4", "7"]
        .iter()
        .map(|s| CString::new(*s).unwrap())
        .collect();
    let ptrs: Vec<*const c_char> = values.iter().map(|c| c.as_ptr()).collect();
    unsafe {
        let mut list = ptr::null_mut();
        assert_eq!(
            sv_crosscheck(text.as_ptr(), ptrs.as_ptr(), 3, 0, &mut list),
            SvStatus::Ok
        );
        assert_eq!(sv_report_list_failures(list), 0);
        sv_report_list_free(list);

        assert_eq!(
            sv_crosscheck(text.as_ptr(), ptrs.as_ptr(), 4, 0, &mut list),
            SvStatus::Ok
        );
        assert_eq!(sv_report_list_failures(list), 1);
        sv_report_list_free(list);

        let gap = CString::new("1 2\n3 6\n").unwrap();
        assert_eq!(
            sv_crosscheck(gap.as_ptr(), ptrs.as_ptr(), 4, 0, &mut list),
            SvStatus::IntegrityError
        );
        let junk = CString::new("1 two\n").unwrap();
        assert_eq!(
            sv_crosscheck(junk.as_ptr(), ptrs.as_ptr(), 4, 0, &mut list),
            SvStatus::ParseError
        );
        assert!(last_error().contains("line 1"));
    }
}
