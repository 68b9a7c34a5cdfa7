//! C ABI for `codezeta`.
//!
//! Codes live behind the opaque [`CzCode`] handle. Every call returns a
//! [`CzStatus`]; on failure [`cz_last_error`] holds a message for the
//! calling thread. Reports are JSON strings owned by the caller and released
//! with [`cz_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use codezeta::cli::{build_report, default_clifford_mode, extremal_report, Outcome};
use codezeta::code::{parse_code, LinearCode};
use codezeta::matroid::CliffordMode;
use codezeta::Error;

/// Status codes returned by every function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CzStatus {
    Ok = 0,
    /// The computation ran but a mathematical check failed; the report is
    /// still written.
    CheckFailed = 1,
    NullPointer = 2,
    InvalidUtf8 = 3,
    Parse = 4,
    InvalidArgument = 5,
    Capacity = 6,
    Infeasible = 7,
    Numerical = 8,
    Io = 9,
    Panic = 10,
}

/// Opaque handle to a parsed linear code.
pub struct CzCode {
    code: LinearCode,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> CzStatus {
    match e {
        Error::Parse { .. } | Error::ElementOutOfRange { .. } | Error::RankDeficient { .. } => CzStatus::Parse,
        Error::UnsupportedField(_)
        | Error::InvalidParameters(_)
        | Error::InvalidDistribution(_)
        | Error::Usage(_)
        | Error::DivisionByZero(_) => CzStatus::InvalidArgument,
        Error::Capacity(_) => CzStatus::Capacity,
        Error::Infeasible { .. } | Error::Ambiguous { .. } => CzStatus::Infeasible,
        Error::Numerical(_) => CzStatus::Numerical,
        Error::Io(_) => CzStatus::Io,
        Error::Inconsistent(_) | Error::CheckFailed(_) | Error::Structural(_) => CzStatus::CheckFailed,
    }
}

fn guard(f: impl FnOnce() -> Result<CzStatus, (CzStatus, String)>) -> CzStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            CzStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (CzStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (CzStatus, String)> {
    if p.is_null() {
        return Err((CzStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (CzStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_outcome(outcome: Outcome, out: *mut *mut c_char) -> Result<CzStatus, (CzStatus, String)> {
    let text = serde_json::to_string(&outcome.to_json()).map_err(|e| (CzStatus::Panic, e.to_string()))?;
    let c = CString::new(text).map_err(|e| (CzStatus::Panic, e.to_string()))?;
    *out = c.into_raw();
    Ok(if outcome.ok { CzStatus::Ok } else { CzStatus::CheckFailed })
}

/// Parses a code in the text format (`q n k` header, then `k` rows).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cz_code_parse(text: *const c_char, out: *mut *mut CzCode) -> CzStatus {
    guard(|| {
        if out.is_null() {
            return Err((CzStatus::NullPointer, "out is null".into()));
        }
        *out = ptr::null_mut();
        let code = parse_code(read_str(text, "text")?).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(CzCode { code }));
        Ok(CzStatus::Ok)
    })
}

/// Releases a handle from [`cz_code_parse`]. Null is ignored.
///
/// # Safety
/// `code` must come from [`cz_code_parse`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cz_code_free(code: *mut CzCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Field size, length and dimension of a code.
///
/// # Safety
/// `code` must be a live handle; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn cz_code_params(code: *const CzCode, q: *mut u32, n: *mut usize, k: *mut usize) -> CzStatus {
    guard(|| {
        if code.is_null() || q.is_null() || n.is_null() || k.is_null() {
            return Err((CzStatus::NullPointer, "null argument".into()));
        }
        let c = &(*code).code;
        *q = c.q();
        *n = c.n();
        *k = c.k();
        Ok(CzStatus::Ok)
    })
}

/// Runs one report command (`weights`, `zeta`, `rankgen`, `greene`,
/// `twovar`, `bounds`, `clifford`, `report`) and writes its JSON to `out`.
///
/// Returns `CZ_STATUS_CHECK_FAILED` with the report written when a check
/// fails.
///
/// # Safety
/// `code` must be a live handle, `command` a NUL-terminated string, `out`
/// writable. Free the result with [`cz_string_free`].
#[no_mangle]
pub unsafe extern "C" fn cz_code_report_json(
    code: *const CzCode,
    command: *const c_char,
    out: *mut *mut c_char,
) -> CzStatus {
    guard(|| {
        if code.is_null() || out.is_null() {
            return Err((CzStatus::NullPointer, "null argument".into()));
        }
        *out = ptr::null_mut();
        let c = &(*code).code;
        let cmd = read_str(command, "command")?;
        let outcome = build_report(cmd, c, default_clifford_mode(c.n())).map_err(lib_err)?;
        write_outcome(outcome, out)
    })
}

/// Clifford check with an explicit mode: every subset when `exhaustive` is
/// nonzero, otherwise `count` subsets drawn with `seed`.
///
/// # Safety
/// As for [`cz_code_report_json`].
#[no_mangle]
pub unsafe extern "C" fn cz_code_clifford_json(
    code: *const CzCode,
    exhaustive: bool,
    count: u64,
    seed: u64,
    out: *mut *mut c_char,
) -> CzStatus {
    guard(|| {
        if code.is_null() || out.is_null() {
            return Err((CzStatus::NullPointer, "null argument".into()));
        }
        *out = ptr::null_mut();
        let mode = if exhaustive { CliffordMode::Exhaustive } else { CliffordMode::Sample { count, seed } };
        let outcome = build_report("clifford", &(*code).code, mode).map_err(lib_err)?;
        write_outcome(outcome, out)
    })
}

/// Extremal self-dual enumerator for `(q, c, n)` as JSON.
///
/// # Safety
/// `out` must be writable. Free the result with [`cz_string_free`].
#[no_mangle]
pub unsafe extern "C" fn cz_extremal_json(
    q: u32,
    c: usize,
    n: usize,
    ultraspherical: bool,
    out: *mut *mut c_char,
) -> CzStatus {
    guard(|| {
        if out.is_null() {
            return Err((CzStatus::NullPointer, "out is null".into()));
        }
        *out = ptr::null_mut();
        let outcome = extremal_report(q, c, n, ultraspherical).map_err(lib_err)?;
        write_outcome(outcome, out)
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call on the same thread.
#[no_mangle]
pub extern "C" fn cz_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn cz_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
