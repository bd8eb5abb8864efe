//! C interface to the ehrmat engine.
//!
//! Every fallible function returns an [`EhrmatStatus`]; on failure a message
//! is available from [`ehrmat_last_error`] on the same thread. Handles are
//! opaque and must be released with their `_free` function. Strings returned
//! through `char **` out-parameters are owned by the caller and released with
//! [`ehrmat_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ehrmat::cli::{ehrhart_of, CliError, MatroidDocument, EXIT_BUDGET};
use ehrmat::exactmath::{rat_to_bigint, RationalPolynomial};
use ehrmat::hstar::{ehrhart_to_hstar, normalized_volume, HStarVector};
use ehrmat::matroid::RankFunction;
use ehrmat::vertices::{Budget, Family, PolytopeSpec};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EhrmatStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidDocument = 3,
    BudgetExceeded = 4,
    ComputationFailed = 5,
    OutOfRange = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EhrmatFamily {
    Bases = 0,
    Independence = 1,
    Polymatroid = 2,
}

impl From<EhrmatFamily> for Family {
    fn from(f: EhrmatFamily) -> Self {
        match f {
            EhrmatFamily::Bases => Family::Bases,
            EhrmatFamily::Independence => Family::Independence,
            EhrmatFamily::Polymatroid => Family::Polymatroid,
        }
    }
}

/// A validated matroid or polymatroid polytope.
pub struct EhrmatPolytope {
    doc: MatroidDocument,
}

/// The Ehrhart polynomial and h*-vector of a polytope.
pub struct EhrmatEhrhart {
    polynomial: RationalPolynomial,
    hstar: HStarVector,
    dim: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(message).unwrap_or_default());
}

fn fail(status: EhrmatStatus, message: impl Into<String>) -> EhrmatStatus {
    set_error(message);
    status
}

fn guarded(f: impl FnOnce() -> EhrmatStatus) -> EhrmatStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => {
            if status == EhrmatStatus::Ok {
                set_error("");
            }
            status
        }
        Err(_) => fail(EhrmatStatus::Panic, "internal error: the computation panicked"),
    }
}

fn cli_status(e: &CliError) -> EhrmatStatus {
    if e.exit_code() == EXIT_BUDGET {
        EhrmatStatus::BudgetExceeded
    } else {
        match e {
            CliError::Document(_) => EhrmatStatus::InvalidDocument,
            _ => EhrmatStatus::ComputationFailed,
        }
    }
}

fn write_string(out: *mut *mut c_char, s: String) -> EhrmatStatus {
    match CString::new(s) {
        Ok(c) => {
            // SAFETY: callers check `out` for null before producing output.
            unsafe { *out = c.into_raw() };
            EhrmatStatus::Ok
        }
        Err(_) => fail(EhrmatStatus::ComputationFailed, "output contains a NUL byte"),
    }
}

/// Message describing the most recent failure on this thread, or an empty
/// string. The pointer stays valid until the next ehrmat call on this thread.
#[no_mangle]
pub extern "C" fn ehrmat_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ehrmat_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses and validates a JSON matroid document.
///
/// # Safety
/// `json` must be null or a valid NUL-terminated string; `out` must be null
/// or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn ehrmat_polytope_from_json(
    json: *const c_char,
    out: *mut *mut EhrmatPolytope,
) -> EhrmatStatus {
    guarded(|| {
        if json.is_null() || out.is_null() {
            return fail(EhrmatStatus::NullPointer, "null argument");
        }
        // SAFETY: non-null and NUL-terminated by contract.
        let text = match unsafe { CStr::from_ptr(json) }.to_str() {
            Ok(t) => t,
            Err(e) => return fail(EhrmatStatus::InvalidUtf8, e.to_string()),
        };
        let doc = match MatroidDocument::parse(text) {
            Ok(d) => d,
            Err(e) => return fail(EhrmatStatus::InvalidDocument, e.to_string()),
        };
        if let Err(e) = doc.spec() {
            return fail(EhrmatStatus::InvalidDocument, e.to_string());
        }
        // SAFETY: `out` is non-null and writable by contract.
        unsafe { *out = Box::into_raw(Box::new(EhrmatPolytope { doc })) };
        EhrmatStatus::Ok
    })
}

/// The polytope of the uniform matroid of rank `r` on `n` elements.
///
/// # Safety
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn ehrmat_polytope_uniform(
    n: usize,
    r: usize,
    family: EhrmatFamily,
    out: *mut *mut EhrmatPolytope,
) -> EhrmatStatus {
    guarded(|| {
        if out.is_null() {
            return fail(EhrmatStatus::NullPointer, "null argument");
        }
        let rank = match RankFunction::uniform(n, r) {
            Ok(f) => f,
            Err(e) => return fail(EhrmatStatus::InvalidDocument, e.to_string()),
        };
        let rank = if family == EhrmatFamily::Polymatroid {
            match rank.to_table() {
                Ok(t) => t,
                Err(e) => return fail(EhrmatStatus::InvalidDocument, e.to_string()),
            }
        } else {
            rank
        };
        if let Err(e) = PolytopeSpec::new(family.into(), rank) {
            return fail(EhrmatStatus::InvalidDocument, e.to_string());
        }
        let family = match family {
            EhrmatFamily::Bases => ehrmat::cli::DocFamily::Bases,
            EhrmatFamily::Independence => ehrmat::cli::DocFamily::Independence,
            EhrmatFamily::Polymatroid => ehrmat::cli::DocFamily::Polymatroid,
        };
        let doc = MatroidDocument {
            name: format!("U({r},{n})"),
            family,
            kind: ehrmat::cli::DocKind::Uniform { n, r },
            description: None,
        };
        // SAFETY: `out` is non-null and writable by contract.
        unsafe { *out = Box::into_raw(Box::new(EhrmatPolytope { doc })) };
        EhrmatStatus::Ok
    })
}

/// Releases a polytope handle. Null is ignored.
///
/// # Safety
/// `p` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ehrmat_polytope_free(p: *mut EhrmatPolytope) {
    if !p.is_null() {
        // SAFETY: the handle came from `Box::into_raw` and is freed once.
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Computes the Ehrhart polynomial and h*-vector. `max_candidates` bounds
/// vertex enumeration; 0 selects the default budget.
///
/// # Safety
/// `p` must be null or a live polytope handle; `out` must be null or valid
/// for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn ehrmat_compute_ehrhart(
    p: *const EhrmatPolytope,
    max_candidates: u64,
    out: *mut *mut EhrmatEhrhart,
) -> EhrmatStatus {
    guarded(|| {
        if p.is_null() || out.is_null() {
            return fail(EhrmatStatus::NullPointer, "null argument");
        }
        // SAFETY: live handle by contract.
        let doc = unsafe { &(*p).doc };
        let budget = if max_candidates == 0 {
            Budget::default()
        } else {
            Budget {
                max_candidates: u128::from(max_candidates),
            }
        };
        let (polynomial, dim) = match ehrhart_of(doc, budget) {
            Ok(x) => x,
            Err(e) => return fail(cli_status(&e), e.to_string()),
        };
        let hstar = match ehrhart_to_hstar(&polynomial, dim) {
            Ok(h) => h,
            Err(e) => return fail(EhrmatStatus::ComputationFailed, e.to_string()),
        };
        let result = EhrmatEhrhart {
            polynomial,
            hstar,
            dim,
        };
        // SAFETY: `out` is non-null and writable by contract.
        unsafe { *out = Box::into_raw(Box::new(result)) };
        EhrmatStatus::Ok
    })
}

/// Releases a result handle. Null is ignored.
///
/// # Safety
/// `e` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ehrmat_ehrhart_free(e: *mut EhrmatEhrhart) {
    if !e.is_null() {
        // SAFETY: the handle came from `Box::into_raw` and is freed once.
        drop(unsafe { Box::from_raw(e) });
    }
}

/// Dimension of the polytope; the polynomial has `dim + 1` coefficients.
/// Returns 0 for a null handle.
///
/// # Safety
/// `e` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn ehrmat_ehrhart_dim(e: *const EhrmatEhrhart) -> usize {
    // SAFETY: live handle by contract.
    unsafe { e.as_ref() }.map_or(0, |e| e.dim)
}

unsafe fn with_result(
    e: *const EhrmatEhrhart,
    out: *mut *mut c_char,
    f: impl FnOnce(&EhrmatEhrhart) -> Result<String, EhrmatStatus>,
) -> EhrmatStatus {
    guarded(|| {
        if out.is_null() {
            return fail(EhrmatStatus::NullPointer, "null argument");
        }
        // SAFETY: live handle by contract.
        let Some(e) = (unsafe { e.as_ref() }) else {
            return fail(EhrmatStatus::NullPointer, "null argument");
        };
        match f(e) {
            Ok(s) => write_string(out, s),
            Err(status) => status,
        }
    })
}

/// Coefficient of `k^i` as a reduced fraction string such as `"107/30"`.
///
/// # Safety
/// `e` must be null or a live result handle; `out` must be null or valid for
/// writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn ehrmat_ehrhart_coefficient(
    e: *const EhrmatEhrhart,
    i: usize,
    out: *mut *mut c_char,
) -> EhrmatStatus {
    unsafe {
        with_result(e, out, |e| {
            if i > e.dim {
                return Err(fail(EhrmatStatus::OutOfRange, format!("index {i} exceeds dimension {}", e.dim)));
            }
            Ok(e.polynomial.coeff(i).to_string())
        })
    }
}

/// Entry `h*_i` as a decimal string.
///
/// # Safety
/// As for [`ehrmat_ehrhart_coefficient`].
#[no_mangle]
pub unsafe extern "C" fn ehrmat_ehrhart_hstar(
    e: *const EhrmatEhrhart,
    i: usize,
    out: *mut *mut c_char,
) -> EhrmatStatus {
    unsafe {
        with_result(e, out, |e| {
            e.hstar.entries().get(i).map(ToString::to_string).ok_or_else(|| {
                fail(EhrmatStatus::OutOfRange, format!("index {i} exceeds dimension {}", e.dim))
            })
        })
    }
}

/// Number of lattice points in the `k`-th dilate, as a decimal string.
///
/// # Safety
/// As for [`ehrmat_ehrhart_coefficient`].
#[no_mangle]
pub unsafe extern "C" fn ehrmat_ehrhart_count(
    e: *const EhrmatEhrhart,
    k: i64,
    out: *mut *mut c_char,
) -> EhrmatStatus {
    unsafe {
        with_result(e, out, |e| {
            if k < 0 {
                return Err(fail(EhrmatStatus::OutOfRange, "dilation must be non-negative"));
            }
            rat_to_bigint(&e.polynomial.eval_int(k))
                .map(|c| c.to_string())
                .ok_or_else(|| fail(EhrmatStatus::ComputationFailed, "non-integral count"))
        })
    }
}

/// Normalized volume (`dim!` times the leading coefficient) as a decimal
/// string.
///
/// # Safety
/// As for [`ehrmat_ehrhart_coefficient`].
#[no_mangle]
pub unsafe extern "C" fn ehrmat_ehrhart_normalized_volume(
    e: *const EhrmatEhrhart,
    out: *mut *mut c_char,
) -> EhrmatStatus {
    unsafe { with_result(e, out, |e| Ok(normalized_volume(&e.polynomial, e.dim).to_string())) }
}

/// 1 if the h*-vector is unimodal, 0 if not, -1 for a null handle.
///
/// # Safety
/// `e` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn ehrmat_ehrhart_hstar_unimodal(e: *const EhrmatEhrhart) -> i32 {
    // SAFETY: live handle by contract.
    unsafe { e.as_ref() }.map_or(-1, |e| i32::from(e.hstar.is_unimodal()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ehrmat_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: the string came from `CString::into_raw` and is freed once.
        drop(unsafe { CString::from_raw(s) });
    }
}
