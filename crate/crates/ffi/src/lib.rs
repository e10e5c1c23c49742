//! C ABI over the `alextwist` engine.
//!
//! Polynomials cross the boundary as opaque `AtPoly` handles. Every fallible
//! call returns an `AtStatus` and writes its result through an out pointer;
//! on failure the message is available from `at_last_error` on the same
//! thread. Handles and strings returned here must be released with
//! `at_poly_free` and `at_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use alextwist::braidrep::BraidWord;
use alextwist::cli::poly_to_json;
use alextwist::exactring::render::poly_text;
use alextwist::twistcalc::{alexander_twist_formula, closure_scalar, torus_oracle, twist_coeff_f};
use alextwist::{Error, LaurentPoly, Variable};

/// Opaque Laurent polynomial in `q`.
pub struct AtPoly(LaurentPoly);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtStatus {
    Ok = 0,
    /// Malformed or out-of-range input.
    InputError = 1,
    /// An exactness or identity check failed inside the engine.
    IdentityFailure = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    /// A Rust panic was caught at the boundary.
    Panic = 5,
}

/// Exponent variable used when rendering.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtVariable {
    Q = 0,
    T = 1,
}

impl From<AtVariable> for Variable {
    fn from(v: AtVariable) -> Self {
        match v {
            AtVariable::Q => Variable::Q,
            AtVariable::T => Variable::T,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(AtStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_input_error() { AtStatus::InputError } else { AtStatus::IdentityFailure };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(AtStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, writing its value to `out`.
fn guarded<T>(out: *mut T, body: impl FnOnce() -> Result<T, Failure>) -> AtStatus {
    if out.is_null() {
        set_error("output pointer is null");
        return AtStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(v)) => {
            // SAFETY: checked non-null; the caller provides writable storage.
            unsafe { out.write(v) };
            AtStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            AtStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure(AtStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read_poly<'a>(p: *const AtPoly, what: &str) -> Result<&'a LaurentPoly, Failure> {
    p.as_ref().map(|p| &p.0).ok_or_else(|| null(what))
}

fn boxed(p: LaurentPoly) -> *mut AtPoly {
    Box::into_raw(Box::new(AtPoly(p)))
}

fn c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(AtStatus::IdentityFailure, "rendered text contains a nul byte".into()))
}

/// Alexander polynomial of the closure of `braid` on `n` strands.
///
/// # Safety
/// `braid` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn at_alexander(n: usize, braid: *const c_char, out: *mut *mut AtPoly) -> AtStatus {
    guarded(out, || {
        let w = BraidWord::parse(read_str(braid, "braid")?, n)?;
        Ok(boxed(closure_scalar(&w)?.poly))
    })
}

/// Alexander polynomial of the closure of `braid · τ^m` computed through the
/// twist expansion over the first `n` family members.
///
/// # Safety
/// `braid` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn at_twist_formula(n: usize, braid: *const c_char, m: usize, out: *mut *mut AtPoly) -> AtStatus {
    guarded(out, || {
        let w = BraidWord::parse(read_str(braid, "braid")?, n)?;
        Ok(boxed(alexander_twist_formula(&w, m)?.poly))
    })
}

/// Coefficient of the `j`-th family member in the expansion of the `m`-th.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn at_twist_coeff(m: usize, j: usize, n: usize, out: *mut *mut AtPoly) -> AtStatus {
    guarded(out, || Ok(boxed(twist_coeff_f(m, j, n)?)))
}

/// Closed form for the torus knot or link `T(n, l)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn at_torus_closed_form(n: usize, l: usize, out: *mut *mut AtPoly) -> AtStatus {
    guarded(out, || Ok(boxed(torus_oracle(n, l)?.poly)))
}

/// Human-readable rendering, e.g. `t^-1 - 1 + t`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn at_poly_to_text(p: *const AtPoly, var: AtVariable, out: *mut *mut c_char) -> AtStatus {
    guarded(out, || c_string(poly_text(read_poly(p, "poly")?, var.into())))
}

/// JSON object mapping exponent labels to decimal coefficients.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn at_poly_to_json(p: *const AtPoly, var: AtVariable, out: *mut *mut c_char) -> AtStatus {
    guarded(out, || c_string(poly_to_json(read_poly(p, "poly")?, var.into()).to_string()))
}

/// Decimal coefficient of `q^q_exponent`. Coefficients are arbitrary
/// precision, hence the string.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn at_poly_coeff(p: *const AtPoly, q_exponent: i64, out: *mut *mut c_char) -> AtStatus {
    guarded(out, || c_string(read_poly(p, "poly")?.coeff(q_exponent).to_string()))
}

/// Number of nonzero terms.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn at_poly_term_count(p: *const AtPoly, out: *mut usize) -> AtStatus {
    guarded(out, || Ok(read_poly(p, "poly")?.len()))
}

/// Writes 1 to `out` if the polynomials are equal, 0 otherwise.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn at_poly_equal(a: *const AtPoly, b: *const AtPoly, out: *mut i32) -> AtStatus {
    guarded(out, || Ok(i32::from(read_poly(a, "a")? == read_poly(b, "b")?)))
}

/// # Safety
/// `p` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn at_poly_free(p: *mut AtPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn at_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn at_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn at_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_output_is_reported() {
        let s = unsafe { at_twist_coeff(2, 0, 2, ptr::null_mut()) };
        assert_eq!(s, AtStatus::NullPointer);
        assert!(!at_last_error().is_null());
    }

    #[test]
    fn version_is_package_version() {
        let v = unsafe { CStr::from_ptr(at_version()) };
        assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}
