//! C ABI over the exact Lie-algebra workbench.
//!
//! Conventions: every constructor hands back an opaque handle the caller must
//! free with the matching `_free`; every fallible call returns a status code
//! and writes results through out-pointers; strings returned through
//! `char **` are UTF-8, NUL-terminated, and owned by the caller until passed
//! to `liealg_string_free`. On any non-OK status the thread-local message
//! from `liealg_last_error_message` describes the failure.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use liealg::derivations::DerivationSpace;
use liealg::holomorph::completeness_theorem_certificate;
use liealg::io::AlgebraFile;
use liealg::lattice::IntMat;
use liealg::torus::ExponentTorus;
use liealg::{Error, FieldSpec, LieAlgebra};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieAlgStatus {
    Ok = 0,
    /// Null pointer, malformed UTF-8, or argument out of range.
    InvalidArgument = 1,
    /// Input text did not parse as an algebra description.
    ParseError = 2,
    /// The table parsed but violates a Lie-algebra axiom.
    AxiomError = 3,
    /// The operation's mathematical precondition failed (e.g. a nonzero
    /// center where a centerless algebra is required).
    Precondition = 4,
    Internal = 5,
}

/// Opaque algebra handle.
pub struct LieAlgebraHandle {
    inner: LieAlgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let safe = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = safe);
}

fn status_of(e: &Error) -> LieAlgStatus {
    match e {
        Error::Parse(_) | Error::Json(_) => LieAlgStatus::ParseError,
        Error::AxiomViolation { .. } => LieAlgStatus::AxiomError,
        Error::NotCenterless { .. }
        | Error::NotPerfect { .. }
        | Error::NotADerivation { .. }
        | Error::DerivationIsInner { .. }
        | Error::BracketEscapesInner { .. }
        | Error::NotAnIdeal { .. } => LieAlgStatus::Precondition,
        Error::Shape(_)
        | Error::FieldMismatch(_)
        | Error::NotPrime(_)
        | Error::InvalidParameter(_)
        | Error::IndexOutOfRange(_) => LieAlgStatus::InvalidArgument,
        Error::Io(_) | Error::Internal(_) => LieAlgStatus::Internal,
    }
}

fn fail(e: &Error) -> LieAlgStatus {
    set_error(&e.to_string());
    status_of(e)
}

fn invalid(msg: &str) -> LieAlgStatus {
    set_error(msg);
    LieAlgStatus::InvalidArgument
}

/// Runs a closure, converting panics into `Internal` instead of unwinding
/// across the C boundary.
fn guarded<F: FnOnce() -> LieAlgStatus>(f: F) -> LieAlgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            LieAlgStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, LieAlgStatus> {
    if ptr.is_null() {
        return Err(invalid("null string argument"));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| invalid("string argument is not valid UTF-8"))
}

fn give_string(text: String, out: *mut *mut c_char) -> LieAlgStatus {
    match CString::new(text) {
        Ok(cstr) => {
            unsafe { *out = cstr.into_raw() };
            LieAlgStatus::Ok
        }
        Err(_) => invalid("result contained an interior NUL byte"),
    }
}

unsafe fn handle_ref<'a>(alg: *const LieAlgebraHandle) -> Result<&'a LieAlgebra, LieAlgStatus> {
    if alg.is_null() {
        return Err(invalid("null algebra handle"));
    }
    Ok(&(*alg).inner)
}

/// Message describing the most recent failure on this thread. The pointer is
/// valid until the next failing liealg call on the same thread.
#[no_mangle]
pub extern "C" fn liealg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses the JSON algebra-file format (field, dim, basis, table, optional
/// form), validates the Lie axioms, and returns a handle.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn liealg_algebra_from_json(
    json: *const c_char,
    out: *mut *mut LieAlgebraHandle,
) -> LieAlgStatus {
    guarded(|| {
        if out.is_null() {
            return invalid("null out pointer");
        }
        *out = ptr::null_mut();
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let file: AlgebraFile = match serde_json::from_str(text) {
            Ok(f) => f,
            Err(e) => return fail(&Error::Json(e)),
        };
        let (algebra, _) = match file.to_algebra() {
            Ok(pair) => pair,
            Err(e) => return fail(&e),
        };
        if let Err(e) = algebra.validate() {
            return fail(&e);
        }
        *out = Box::into_raw(Box::new(LieAlgebraHandle { inner: algebra }));
        LieAlgStatus::Ok
    })
}

/// Builds a named catalog algebra, e.g. "sl:3", "heisenberg", or
/// "sl:2+abelian:1". Pass `prime = 0` for the rationals.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn liealg_catalog_build(
    name: *const c_char,
    prime: u64,
    out: *mut *mut LieAlgebraHandle,
) -> LieAlgStatus {
    guarded(|| {
        if out.is_null() {
            return invalid("null out pointer");
        }
        *out = ptr::null_mut();
        let text = match read_str(name) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let field = if prime == 0 {
            FieldSpec::Rational
        } else {
            match FieldSpec::prime(prime) {
                Ok(f) => f,
                Err(e) => return fail(&e),
            }
        };
        let build = liealg::catalog::CatalogSpec::parse(text).and_then(|s| s.build(field));
        match build {
            Ok(algebra) => {
                *out = Box::into_raw(Box::new(LieAlgebraHandle { inner: algebra }));
                LieAlgStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Releases a handle returned by any constructor. Passing NULL is a no-op.
///
/// # Safety
/// `alg` must be NULL or a pointer previously returned by this library and
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn liealg_algebra_free(alg: *mut LieAlgebraHandle) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Dimension of the algebra; 0 for a NULL handle.
///
/// # Safety
/// `alg` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn liealg_algebra_dim(alg: *const LieAlgebraHandle) -> usize {
    handle_ref(alg).map(|g| g.dim()).unwrap_or(0)
}

/// Dimension of the center; 0 for a NULL handle.
///
/// # Safety
/// `alg` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn liealg_algebra_center_dim(alg: *const LieAlgebraHandle) -> usize {
    handle_ref(alg).map(|g| g.center().dim()).unwrap_or(0)
}

/// Dimension of the derived subalgebra [g, g]; 0 for a NULL handle.
///
/// # Safety
/// `alg` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn liealg_algebra_derived_dim(alg: *const LieAlgebraHandle) -> usize {
    handle_ref(alg).map(|g| g.derived_subspace().dim()).unwrap_or(0)
}

/// Writes the dimensions of Der g and of its inner ideal.
///
/// # Safety
/// All pointers must be valid; `alg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn liealg_algebra_derivation_dims(
    alg: *const LieAlgebraHandle,
    der_dim: *mut usize,
    inner_dim: *mut usize,
) -> LieAlgStatus {
    guarded(|| {
        if der_dim.is_null() || inner_dim.is_null() {
            return invalid("null out pointer");
        }
        let g = match handle_ref(alg) {
            Ok(g) => g,
            Err(s) => return s,
        };
        match DerivationSpace::of(g) {
            Ok(ds) => {
                *der_dim = ds.dim();
                *inner_dim = ds.inner_dim();
                LieAlgStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// True when the algebra is complete: trivial center and every derivation
/// inner.
///
/// # Safety
/// All pointers must be valid; `alg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn liealg_algebra_is_complete(
    alg: *const LieAlgebraHandle,
    out: *mut bool,
) -> LieAlgStatus {
    guarded(|| {
        if out.is_null() {
            return invalid("null out pointer");
        }
        let g = match handle_ref(alg) {
            Ok(g) => g,
            Err(s) => return s,
        };
        match DerivationSpace::of(g) {
            Ok(ds) => {
                *out = g.center().dim() == 0 && ds.all_inner();
                LieAlgStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Runs the full completeness certificate (hypotheses, Der g complete,
/// holomorph biconditional) and returns it as a JSON document.
///
/// # Safety
/// All pointers must be valid; `alg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn liealg_algebra_verify_json(
    alg: *const LieAlgebraHandle,
    out_json: *mut *mut c_char,
) -> LieAlgStatus {
    guarded(|| {
        if out_json.is_null() {
            return invalid("null out pointer");
        }
        let g = match handle_ref(alg) {
            Ok(g) => g,
            Err(s) => return s,
        };
        let cert = match completeness_theorem_certificate(g) {
            Ok(c) => c,
            Err(e) => return fail(&e),
        };
        match serde_json::to_string(&cert) {
            Ok(text) => give_string(text, out_json),
            Err(e) => fail(&Error::Json(e)),
        }
    })
}

/// Serializes the algebra back to the JSON algebra-file format.
///
/// # Safety
/// All pointers must be valid; `alg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn liealg_algebra_to_json(
    alg: *const LieAlgebraHandle,
    out_json: *mut *mut c_char,
) -> LieAlgStatus {
    guarded(|| {
        if out_json.is_null() {
            return invalid("null out pointer");
        }
        let g = match handle_ref(alg) {
            Ok(g) => g,
            Err(s) => return s,
        };
        let file = AlgebraFile::from_algebra(g, None);
        match serde_json::to_string(&file) {
            Ok(text) => give_string(text, out_json),
            Err(e) => fail(&Error::Json(e)),
        }
    })
}

/// Central-degree lattice of a quantum torus: `exponents` is the row-major
/// n-by-n antisymmetric integer matrix, `order` the multiplicative order of
/// the deformation parameter. Writes a JSON array of basis rows (decimal
/// strings).
///
/// # Safety
/// `exponents` must point to `n * n` readable values; `out_json` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn liealg_torus_radical_json(
    n: usize,
    order: u64,
    exponents: *const i64,
    out_json: *mut *mut c_char,
) -> LieAlgStatus {
    guarded(|| {
        if out_json.is_null() || (exponents.is_null() && n > 0) {
            return invalid("null pointer argument");
        }
        let flat = std::slice::from_raw_parts(exponents, n * n);
        let rows: Vec<&[i64]> = flat.chunks(n).collect();
        let torus = match ExponentTorus::new(n, order, IntMat::from_i64(&rows)) {
            Ok(t) => t,
            Err(e) => return fail(&e),
        };
        let basis: Vec<Vec<String>> = torus
            .radical_basis()
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect())
            .collect();
        match serde_json::to_string(&basis) {
            Ok(text) => give_string(text, out_json),
            Err(e) => fail(&Error::Json(e)),
        }
    })
}

/// Frees a string returned through a `char **` out-parameter. Passing NULL
/// is a no-op.
///
/// # Safety
/// `s` must be NULL or a string previously returned by this library and not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn liealg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
