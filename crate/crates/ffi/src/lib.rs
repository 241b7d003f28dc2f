//! C interface to the boundary classifier.
//!
//! Systems and verdicts are opaque handles owned by the caller and released
//! with their `_free` function. Every fallible call returns a [`CoxStatus`];
//! on failure [`cox_last_error`] describes the problem until the next call
//! on the same thread. Strings returned by the library are released with
//! [`cox_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use coxcarpet::cli::report::to_json;
use coxcarpet::cli::{make_family, parse_system};
use coxcarpet::coxeter::CoxeterMatrix;
use coxcarpet::decider::{classify_boundary, Boundary, Mode, Verdict};

/// A parsed Coxeter system.
pub struct CoxSystem(CoxeterMatrix);

/// The outcome of a classification.
pub struct CoxVerdict(Verdict);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    FamilyError = 4,
    InvalidArgument = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoxBoundary {
    SierpinskiCarpet = 0,
    Circle = 1,
    Sphere = 2,
    Empty = 3,
    NotCarpet = 4,
    OutOfScope = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoxMode {
    Theorem1 = 0,
    Theorem2 = 1,
    Conjectural = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

/// Runs `f`, converting panics into [`CoxStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<(), (CoxStatus, String)>) -> CoxStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CoxStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            CoxStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, (CoxStatus, String)> {
    if s.is_null() {
        return Err((CoxStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|e| (CoxStatus::InvalidUtf8, e.to_string()))
}

fn null(what: &str) -> (CoxStatus, String) {
    (CoxStatus::NullPointer, format!("null {what}"))
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call.
#[no_mangle]
pub extern "C" fn cox_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a system in the text or JSON document format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cox_system_parse(text: *const c_char, out: *mut *mut CoxSystem) -> CoxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let text = read_str(text)?;
        let m = parse_system(text).map_err(|e| (CoxStatus::ParseError, e.to_string()))?;
        *out = Box::into_raw(Box::new(CoxSystem(m)));
        Ok(())
    })
}

/// A named family; `n < 0` for families without a parameter.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cox_system_family(name: *const c_char, n: i64, out: *mut *mut CoxSystem) -> CoxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let name = read_str(name)?;
        let n = usize::try_from(n).ok();
        let m = make_family(name, n).map_err(|e| (CoxStatus::FamilyError, e.to_string()))?;
        *out = Box::into_raw(Box::new(CoxSystem(m)));
        Ok(())
    })
}

/// Number of generators, or 0 for a null handle.
///
/// # Safety
/// `sys` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cox_system_rank(sys: *const CoxSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.0.rank())
}

/// # Safety
/// `sys` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cox_system_free(sys: *mut CoxSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Classifies the boundary. `THEOREM1` requires a right-angled system.
///
/// # Safety
/// `sys` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cox_classify(sys: *const CoxSystem, mode: CoxMode, out: *mut *mut CoxVerdict) -> CoxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let m = &sys.as_ref().ok_or_else(|| null("system"))?.0;
        let v = match mode {
            CoxMode::Theorem1 => {
                if !m.is_right_angled() {
                    return Err((CoxStatus::InvalidArgument, "THEOREM1 needs a right-angled system".into()));
                }
                let edges: Vec<_> = m.pairs().filter(|&(_, _, e)| e.is_finite()).map(|(i, j, _)| (i, j)).collect();
                coxcarpet::decider::theorem1_racg(m.generators(), &edges)
                    .map_err(|e| (CoxStatus::InvalidArgument, e.to_string()))?
            }
            CoxMode::Theorem2 => classify_boundary(m, Mode::Theorem2),
            CoxMode::Conjectural => classify_boundary(m, Mode::Conjectural),
        };
        *out = Box::into_raw(Box::new(CoxVerdict(v)));
        Ok(())
    })
}

/// Writes the boundary type of `v` to `out`.
///
/// # Safety
/// `v` must be null or a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cox_verdict_boundary(v: *const CoxVerdict, out: *mut CoxBoundary) -> CoxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = match v.as_ref().ok_or_else(|| null("verdict"))?.0.boundary {
            Boundary::SierpinskiCarpet => CoxBoundary::SierpinskiCarpet,
            Boundary::Circle => CoxBoundary::Circle,
            Boundary::Sphere => CoxBoundary::Sphere,
            Boundary::Empty => CoxBoundary::Empty,
            Boundary::NotCarpet => CoxBoundary::NotCarpet,
            Boundary::OutOfScope => CoxBoundary::OutOfScope,
        };
        Ok(())
    })
}

/// True iff the verdict skipped the hyperbolicity hypothesis.
///
/// # Safety
/// `v` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cox_verdict_is_conjectural(v: *const CoxVerdict) -> bool {
    v.as_ref().is_some_and(|v| v.0.conjectural)
}

/// The JSON report, or null for a null handle. Free with
/// [`cox_string_free`].
///
/// # Safety
/// `v` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cox_verdict_json(v: *const CoxVerdict) -> *mut c_char {
    match v.as_ref() {
        Some(v) => CString::new(to_json(&v.0)).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `v` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cox_verdict_free(v: *mut CoxVerdict) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cox_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guard_maps_panics_and_errors() {
        assert_eq!(guard(|| panic!("boom")), CoxStatus::Panic);
        assert!(!cox_last_error().is_null());
        assert_eq!(guard(|| Err((CoxStatus::ParseError, "bad\0input".into()))), CoxStatus::ParseError);
        let msg = unsafe { CStr::from_ptr(cox_last_error()) }.to_str().unwrap();
        assert_eq!(msg, "bad input");
        assert_eq!(guard(|| Ok(())), CoxStatus::Ok);
        assert!(cox_last_error().is_null());
    }
}
