//! C ABI over ascseq. Objects cross the boundary as opaque handles that the caller frees
//! with the matching `*_free` function. Every call returns an `AscseqStatus`; the message of
//! the last failure on the calling thread is available from `ascseq_last_error`.

use ascseq::bijections::{phi, phi_inv};
use ascseq::genfun::Family;
use ascseq::seq::AscentSequence;
use ascseq::verify::{family_count, run_suite, Check, Config, Suite, SCHEMA_VERSION};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AscseqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidSequence = 2,
    OutOfRange = 3,
    InvalidArgument = 4,
    BufferTooSmall = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AscseqFamily {
    Ascent = 0,
    Inversion = 1,
    Permutation = 2,
    Matrix = 3,
}

/// Statistics of an ascent sequence.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AscseqStats {
    pub asc: u32,
    pub rep: u32,
    pub zero: u32,
    pub max: u32,
    pub ealm: u32,
    pub rmin: u32,
    pub rpos: u32,
}

/// Opaque ascent sequence.
pub struct AscseqSequence(AscentSequence);

/// Opaque verification report.
pub struct AscseqReport {
    suite: Suite,
    checks: Vec<Check>,
}

const N_CAP: usize = 12;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: AscseqStatus, msg: impl Into<String>) -> AscseqStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> AscseqStatus) -> AscseqStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(AscseqStatus::Internal, "panic inside ascseq"))
}

fn stats_of(s: &AscentSequence) -> AscseqStats {
    let [asc, rep, zero, max, ealm, rmin, rpos] = s.stats().septuple();
    AscseqStats { asc, rep, zero, max, ealm, rmin, rpos }
}

/// Message of the last failed call on this thread; empty when none. The pointer stays valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ascseq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a sequence from `len` entries.
///
/// # Safety
/// `entries` must point to `len` readable values (it may be null when `len` is 0) and `out`
/// must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ascseq_sequence_new(entries: *const u32, len: usize, out: *mut *mut AscseqSequence) -> AscseqStatus {
    guard(|| {
        if out.is_null() || (entries.is_null() && len > 0) {
            return fail(AscseqStatus::NullPointer, "null pointer");
        }
        let v = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(entries, len).to_vec() };
        match AscentSequence::new(v) {
            Ok(s) => {
                *out = Box::into_raw(Box::new(AscseqSequence(s)));
                AscseqStatus::Ok
            }
            Err(e) => fail(AscseqStatus::InvalidSequence, e.to_string()),
        }
    })
}

/// # Safety
/// `seq` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ascseq_sequence_free(seq: *mut AscseqSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// # Safety
/// `seq` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ascseq_sequence_len(seq: *const AscseqSequence) -> usize {
    seq.as_ref().map_or(0, |s| s.0.len())
}

/// Copies the entries into `buf`. `out_len` receives the length even when `cap` is too small.
///
/// # Safety
/// `seq` must be a live handle, `buf` must have room for `cap` values, `out_len` valid.
#[no_mangle]
pub unsafe extern "C" fn ascseq_sequence_entries(
    seq: *const AscseqSequence,
    buf: *mut u32,
    cap: usize,
    out_len: *mut usize,
) -> AscseqStatus {
    guard(|| {
        let (Some(s), false) = (seq.as_ref(), out_len.is_null()) else {
            return fail(AscseqStatus::NullPointer, "null pointer");
        };
        let e = s.0.entries();
        *out_len = e.len();
        if e.len() > cap {
            return fail(AscseqStatus::BufferTooSmall, format!("need {} entries", e.len()));
        }
        if !e.is_empty() {
            if buf.is_null() {
                return fail(AscseqStatus::NullPointer, "null buffer");
            }
            ptr::copy_nonoverlapping(e.as_ptr(), buf, e.len());
        }
        AscseqStatus::Ok
    })
}

/// # Safety
/// `seq` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn ascseq_sequence_stats(seq: *const AscseqSequence, out: *mut AscseqStats) -> AscseqStatus {
    guard(|| match (seq.as_ref(), out.as_mut()) {
        (Some(s), Some(o)) => {
            *o = stats_of(&s.0);
            AscseqStatus::Ok
        }
        _ => fail(AscseqStatus::NullPointer, "null pointer"),
    })
}

unsafe fn apply(
    seq: *const AscseqSequence,
    out: *mut *mut AscseqSequence,
    f: fn(&[u32]) -> Result<Vec<u32>, ascseq::bijections::MapError>,
) -> AscseqStatus {
    guard(|| {
        let (Some(s), false) = (seq.as_ref(), out.is_null()) else {
            return fail(AscseqStatus::NullPointer, "null pointer");
        };
        match f(s.0.entries()).map(AscentSequence::new) {
            Ok(Ok(t)) => {
                *out = Box::into_raw(Box::new(AscseqSequence(t)));
                AscseqStatus::Ok
            }
            Ok(Err(e)) => fail(AscseqStatus::Internal, e.to_string()),
            Err(e) => fail(AscseqStatus::InvalidSequence, e.to_string()),
        }
    })
}

/// Phi(seq) as a new handle.
///
/// # Safety
/// `seq` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn ascseq_phi(seq: *const AscseqSequence, out: *mut *mut AscseqSequence) -> AscseqStatus {
    apply(seq, out, phi)
}

/// # Safety
/// `seq` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn ascseq_phi_inv(seq: *const AscseqSequence, out: *mut *mut AscseqSequence) -> AscseqStatus {
    apply(seq, out, phi_inv)
}

/// Number of objects of length n in a family (permutations restricted to pattern avoiders).
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ascseq_count(family: AscseqFamily, n: usize, out: *mut u64) -> AscseqStatus {
    guard(|| {
        if out.is_null() {
            return fail(AscseqStatus::NullPointer, "null pointer");
        }
        if n > N_CAP {
            return fail(AscseqStatus::OutOfRange, format!("n = {n} exceeds {N_CAP}"));
        }
        let f = match family {
            AscseqFamily::Ascent => Family::Ascent,
            AscseqFamily::Inversion => Family::Inversion,
            AscseqFamily::Permutation => Family::Permutation,
            AscseqFamily::Matrix => Family::Matrix,
        };
        *out = family_count(f, n);
        AscseqStatus::Ok
    })
}

/// Runs a suite ("lemmas", "phi", "distributions", "genfun", "qseries", "conjecture", "all").
/// `n` and `order` of 0 pick the defaults.
///
/// # Safety
/// `suite` must be a NUL-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn ascseq_verify(
    suite: *const c_char,
    n: usize,
    order: usize,
    seed: u64,
    points: usize,
    heavy: bool,
    out: *mut *mut AscseqReport,
) -> AscseqStatus {
    guard(|| {
        if suite.is_null() || out.is_null() {
            return fail(AscseqStatus::NullPointer, "null pointer");
        }
        let Ok(name) = CStr::from_ptr(suite).to_str() else {
            return fail(AscseqStatus::InvalidArgument, "suite is not UTF-8");
        };
        let suite: Suite = match name.parse() {
            Ok(s) => s,
            Err(e) => return fail(AscseqStatus::InvalidArgument, e),
        };
        if n > N_CAP || (n >= 10 && !heavy) {
            return fail(AscseqStatus::OutOfRange, format!("n = {n} needs heavy and at most {N_CAP}"));
        }
        if order > 30 || points == 0 {
            return fail(AscseqStatus::OutOfRange, "order at most 30, points positive");
        }
        let cfg = Config { n: (n > 0).then_some(n), order: (order > 0).then_some(order), seed, points, heavy };
        let checks = run_suite(suite, &cfg);
        *out = Box::into_raw(Box::new(AscseqReport { suite, checks }));
        AscseqStatus::Ok
    })
}

/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ascseq_report_passed(report: *const AscseqReport) -> bool {
    report.as_ref().is_some_and(|r| r.checks.iter().all(|c| c.verdict))
}

/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ascseq_report_len(report: *const AscseqReport) -> usize {
    report.as_ref().map_or(0, |r| r.checks.len())
}

/// Verdict of check `index`; false when out of range.
///
/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ascseq_report_verdict(report: *const AscseqReport, index: usize) -> bool {
    report.as_ref().and_then(|r| r.checks.get(index)).is_some_and(|c| c.verdict)
}

/// The report as JSON. Free the string with `ascseq_string_free`; null on failure.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ascseq_report_json(report: *const AscseqReport) -> *mut c_char {
    let Some(r) = report.as_ref() else {
        set_error("null pointer");
        return ptr::null_mut();
    };
    let v = serde_json::json!({
        "schema": SCHEMA_VERSION,
        "suite": r.suite.name(),
        "verdict": r.checks.iter().all(|c| c.verdict),
        "checks": r.checks,
    });
    CString::new(v.to_string()).map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `report` must come from `ascseq_verify` and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ascseq_report_free(report: *mut AscseqReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ascseq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
