//! C ABI for `prop-rewriter`.
//!
//! Elements cross the boundary as opaque [`PrElement`] handles owned by the
//! caller and released with [`pr_element_free`]. Strings returned through
//! out-parameters are released with [`pr_string_free`]. Every fallible
//! function returns a [`PrStatus`]; on failure [`pr_last_error`] describes
//! the error for the calling thread.
//!
//! The header `include/prop_rewriter.h` is generated by the build script.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use prop_rewriter::verify::{quotient_dimension_oracle, reports_to_json, run_suite, Suite};
use prop_rewriter::{parse_element, Algebra, Element, Engine, Error, Side};

/// Opaque handle to an element.
pub struct PrElement {
    inner: Element,
}

/// Result codes.
#[repr(i32)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    NoCanonicalForm = 5,
    BoundExceeded = 6,
    EngineError = 7,
    Panic = 8,
}

pub const PR_ALGEBRA_MAG: u32 = 0;
pub const PR_ALGEBRA_SIMP: u32 = 1;
pub const PR_ALGEBRA_BRAID: u32 = 2;
pub const PR_ALGEBRA_SYM: u32 = 3;
pub const PR_ALGEBRA_SYMMAG: u32 = 4;
pub const PR_ALGEBRA_SYMSIMP: u32 = 5;
pub const PR_ALGEBRA_LEIB: u32 = 6;
pub const PR_ALGEBRA_LEIBOP: u32 = 7;
pub const PR_ALGEBRA_FREE: u32 = 8;

pub const PR_SIDE_LEIB: u32 = 0;
pub const PR_SIDE_LEIBOP: u32 = 1;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: PrStatus, msg: &str) -> PrStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> PrStatus {
    let status = match e {
        Error::Parse { .. } => PrStatus::ParseError,
        Error::BoundExceeded { .. } => PrStatus::BoundExceeded,
        Error::NoCanonicalForm(_) => PrStatus::NoCanonicalForm,
        _ => PrStatus::EngineError,
    };
    fail(status, &e.to_string())
}

/// Runs `f`, turning panics into `PrStatus::Panic`.
fn guard(f: impl FnOnce() -> PrStatus) -> PrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(PrStatus::Panic, "internal panic"),
    }
}

fn algebra(code: u32) -> Option<Algebra> {
    Some(match code {
        PR_ALGEBRA_MAG => Algebra::Mag,
        PR_ALGEBRA_SIMP => Algebra::Simp,
        PR_ALGEBRA_BRAID => Algebra::Braid,
        PR_ALGEBRA_SYM => Algebra::Sym,
        PR_ALGEBRA_SYMMAG => Algebra::SymMag,
        PR_ALGEBRA_SYMSIMP => Algebra::SymSimp,
        PR_ALGEBRA_LEIB => Algebra::Leib,
        PR_ALGEBRA_LEIBOP => Algebra::LeibOp,
        PR_ALGEBRA_FREE => Algebra::Free,
        _ => return None,
    })
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, PrStatus> {
    if p.is_null() {
        return Err(fail(PrStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(PrStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn elem_arg<'a>(p: *const PrElement) -> Result<&'a Element, PrStatus> {
    p.as_ref()
        .map(|e| &e.inner)
        .ok_or_else(|| fail(PrStatus::NullPointer, "null element handle"))
}

fn boxed(e: Element) -> *mut PrElement {
    Box::into_raw(Box::new(PrElement { inner: e }))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("engine output has no NUL").into_raw()
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Parses `text` in the expression grammar into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pr_element_parse(text: *const c_char, out: *mut *mut PrElement) -> PrStatus {
    guard(|| {
        if out.is_null() {
            return fail(PrStatus::NullPointer, "null out pointer");
        }
        let s = tri!(str_arg(text));
        match parse_element(s) {
            Ok(e) => {
                *out = boxed(e);
                PrStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `x` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pr_element_free(x: *mut PrElement) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// Prints an element in the expression grammar.
///
/// # Safety
/// `x` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pr_element_to_string(x: *const PrElement, out: *mut *mut c_char) -> PrStatus {
    guard(|| {
        if out.is_null() {
            return fail(PrStatus::NullPointer, "null out pointer");
        }
        let e = tri!(elem_arg(x));
        *out = c_string(e.to_string());
        PrStatus::Ok
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Writes the normal form of `x` in `algebra` (a `PR_ALGEBRA_*` code) to
/// a new handle.
///
/// # Safety
/// `x` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pr_normalize(x: *const PrElement, algebra_code: u32, out: *mut *mut PrElement) -> PrStatus {
    guard(|| {
        if out.is_null() {
            return fail(PrStatus::NullPointer, "null out pointer");
        }
        let e = tri!(elem_arg(x));
        let Some(a) = algebra(algebra_code) else {
            return fail(PrStatus::InvalidArgument, "unknown algebra code");
        };
        match Engine::default().normalize_as(a, e) {
            Ok(n) => {
                *out = boxed(n);
                PrStatus::Ok
            }
            Err(err) => from_error(err),
        }
    })
}

/// Decides `x = y` in `algebra`.
///
/// # Safety
/// `x` and `y` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pr_equal(x: *const PrElement, y: *const PrElement, algebra_code: u32, out: *mut bool) -> PrStatus {
    guard(|| {
        if out.is_null() {
            return fail(PrStatus::NullPointer, "null out pointer");
        }
        let (a, b) = (tri!(elem_arg(x)), tri!(elem_arg(y)));
        let Some(alg) = algebra(algebra_code) else {
            return fail(PrStatus::InvalidArgument, "unknown algebra code");
        };
        match Engine::default().equal_as(alg, a, b) {
            Ok(v) => {
                *out = v;
                PrStatus::Ok
            }
            Err(err) => from_error(err),
        }
    })
}

/// Dimension of Leib (`PR_SIDE_LEIB`) or Leib^op (`PR_SIDE_LEIBOP`) from
/// level `n` to level `t`, by exact row reduction. Fails with
/// `BoundExceeded` when `t > max_target`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pr_quotient_dimension(side: u32, n: usize, t: usize, max_target: usize, out: *mut usize) -> PrStatus {
    guard(|| {
        if out.is_null() {
            return fail(PrStatus::NullPointer, "null out pointer");
        }
        let side = match side {
            PR_SIDE_LEIB => Side::Leib,
            PR_SIDE_LEIBOP => Side::LeibOp,
            _ => return fail(PrStatus::InvalidArgument, "unknown side code"),
        };
        match quotient_dimension_oracle(&Engine::default(), side, n, t, max_target) {
            Ok(d) => {
                *out = d;
                PrStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Runs the named suite. A negative `max_level` selects the suite's
/// default bound. Writes the JSON report and the aggregate verdict.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `json_out` and `passed` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn pr_verify(suite: *const c_char, max_level: i64, json_out: *mut *mut c_char, passed: *mut bool) -> PrStatus {
    guard(|| {
        if json_out.is_null() || passed.is_null() {
            return fail(PrStatus::NullPointer, "null out pointer");
        }
        let name = tri!(str_arg(suite));
        let Ok(suite) = name.parse::<Suite>() else {
            return fail(PrStatus::InvalidArgument, &format!("unknown suite `{name}`"));
        };
        let bound = usize::try_from(max_level).ok();
        match run_suite(&Engine::default(), suite, bound) {
            Ok(reports) => {
                *passed = reports.iter().all(|r| r.passed);
                *json_out = c_string(reports_to_json(&reports));
                PrStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// The message of the last failure on this thread, or an empty string.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn pr_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}
