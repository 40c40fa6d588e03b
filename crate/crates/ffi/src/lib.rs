//! C interface to `spectop`.
//!
//! Every function returns a [`SpectopStatus`]; results go through
//! out-pointers. Strings returned to the caller are owned by the caller and
//! must be released with [`spectop_string_free`]. After a failure,
//! [`spectop_last_error_message`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use spectop::algebra::{parse_module_spec, FiniteRing, SubmoduleLattice};
use spectop::input::{lattice_context, split_labels};
use spectop::report;
use spectop::{Error, SpectrumContext};

/// Status codes; the non-zero values match the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectopStatus {
    Ok = 0,
    /// Two independent oracles disagreed.
    OracleDisagreement = 1,
    /// Malformed input or a failed precondition.
    Parse = 2,
    /// The order is not a bounded lattice.
    NotALattice = 3,
    /// The point set is empty, unknown or contains the top.
    InvalidPoints = 4,
    /// The input exceeds a size cap.
    TooLarge = 5,
    /// A required pointer argument was null.
    NullArgument = 6,
    /// An internal panic was caught at the boundary.
    Internal = 7,
}

/// A finite module together with its submodule lattice.
pub struct SpectopModule {
    sl: SubmoduleLattice,
}

/// A finite lattice with a chosen point set.
pub struct SpectopLattice {
    ctx: SpectrumContext,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SpectopStatus {
    match e.exit_code() {
        1 => SpectopStatus::OracleDisagreement,
        3 => SpectopStatus::NotALattice,
        4 => SpectopStatus::InvalidPoints,
        5 => SpectopStatus::TooLarge,
        _ => SpectopStatus::Parse,
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), FfiError>) -> SpectopStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SpectopStatus::Ok,
        Ok(Err(FfiError::Null(what))) => {
            set_error(&format!("null argument: {what}"));
            SpectopStatus::NullArgument
        }
        Ok(Err(FfiError::Core(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            SpectopStatus::Internal
        }
    }
}

enum FfiError {
    Null(&'static str),
    Core(Error),
}

impl From<Error> for FfiError {
    fn from(e: Error) -> Self {
        FfiError::Core(e)
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, FfiError> {
    if p.is_null() {
        return Err(FfiError::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| FfiError::Core(Error::BadSpec(format!("{what} is not UTF-8"))))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &'static str) -> Result<(), FfiError> {
    if out.is_null() {
        return Err(FfiError::Null(what));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

unsafe fn module_ref<'a>(m: *const SpectopModule) -> Result<&'a SpectopModule, FfiError> {
    m.as_ref().ok_or(FfiError::Null("module"))
}

unsafe fn lattice_ref<'a>(l: *const SpectopLattice) -> Result<&'a SpectopLattice, FfiError> {
    l.as_ref().ok_or(FfiError::Null("lattice"))
}

/// Parses a module spec such as `"Z: 2,3,5"`. `max_order` of 0 selects the
/// default cap.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spectop_module_parse(
    spec: *const c_char,
    max_order: usize,
    out: *mut *mut SpectopModule,
) -> SpectopStatus {
    guard(|| {
        let spec = str_arg(spec, "spec")?;
        let cap = if max_order == 0 { spectop::algebra::DEFAULT_MAX_ORDER } else { max_order };
        let sl = SubmoduleLattice::new(parse_module_spec(spec, cap)?)?;
        write_out(out, Box::into_raw(Box::new(SpectopModule { sl })), "out")
    })
}

/// Releases a module. Null is ignored.
///
/// # Safety
/// `m` must come from [`spectop_module_parse`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn spectop_module_free(m: *mut SpectopModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of elements of the module.
///
/// # Safety
/// `m` must be a live module handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spectop_module_order(m: *const SpectopModule, out: *mut usize) -> SpectopStatus {
    guard(|| write_out(out, module_ref(m)?.sl.module().len(), "out"))
}

/// Number of submodules, including 0 and the module itself.
///
/// # Safety
/// `m` must be a live module handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spectop_module_submodule_count(
    m: *const SpectopModule,
    out: *mut usize,
) -> SpectopStatus {
    guard(|| write_out(out, module_ref(m)?.sl.len(), "out"))
}

/// Number of first submodules.
///
/// # Safety
/// `m` must be a live module handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spectop_module_spec_first_count(
    m: *const SpectopModule,
    out: *mut usize,
) -> SpectopStatus {
    guard(|| {
        let n = module_ref(m)?.sl.spec_first()?.len();
        write_out(out, n, "out")
    })
}

/// Whether the first-submodule spectrum carries a topology.
///
/// # Safety
/// `m` must be a live module handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spectop_module_is_topf(m: *const SpectopModule, out: *mut bool) -> SpectopStatus {
    guard(|| {
        let holds = module_ref(m)?.sl.topf()?.holds;
        write_out(out, holds, "out")
    })
}

/// Full JSON report for a module.
///
/// # Safety
/// `m` must be a live module handle; `out` must be writable. The string
/// written to `out` must be released with [`spectop_string_free`].
#[no_mangle]
pub unsafe extern "C" fn spectop_module_report_json(
    m: *const SpectopModule,
    cap: usize,
    seed: u64,
    out: *mut *mut c_char,
) -> SpectopStatus {
    guard(|| {
        let r = report::module_report(&module_ref(m)?.sl, cap, seed)?;
        write_out(out, into_c_string(r.to_json()), "out")
    })
}

/// Builds a lattice context from JSON. `points` is a comma-separated label
/// list and may be null when the JSON carries an `"X"` field.
///
/// # Safety
/// `json` must be NUL-terminated; `points` is null or NUL-terminated; `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn spectop_lattice_from_json(
    json: *const c_char,
    points: *const c_char,
    out: *mut *mut SpectopLattice,
) -> SpectopStatus {
    guard(|| {
        let json = str_arg(json, "json")?;
        let points = if points.is_null() {
            None
        } else {
            Some(split_labels(str_arg(points, "points")?))
        };
        let ctx = lattice_context(json, points)?;
        write_out(out, Box::into_raw(Box::new(SpectopLattice { ctx })), "out")
    })
}

/// Releases a lattice. Null is ignored.
///
/// # Safety
/// `l` must come from [`spectop_lattice_from_json`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn spectop_lattice_free(l: *mut SpectopLattice) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Whether the lattice is X-top for its point set.
///
/// # Safety
/// `l` must be a live lattice handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spectop_lattice_is_x_top(l: *const SpectopLattice, out: *mut bool) -> SpectopStatus {
    guard(|| write_out(out, lattice_ref(l)?.ctx.is_x_top().holds, "out"))
}

/// Full JSON report for a lattice context.
///
/// # Safety
/// `l` must be a live lattice handle; `out` must be writable. Release the
/// result with [`spectop_string_free`].
#[no_mangle]
pub unsafe extern "C" fn spectop_lattice_report_json(
    l: *const SpectopLattice,
    cap: usize,
    seed: u64,
    out: *mut *mut c_char,
) -> SpectopStatus {
    guard(|| {
        let r = report::lattice_report(&lattice_ref(l)?.ctx, cap, seed)?;
        write_out(out, into_c_string(r.to_json()), "out")
    })
}

/// JSON report for a ring such as `"Zmod:12"` or `"M2F2"`.
///
/// # Safety
/// `spec` must be NUL-terminated; `out` must be writable. Release the result
/// with [`spectop_string_free`].
#[no_mangle]
pub unsafe extern "C" fn spectop_ring_report_json(
    spec: *const c_char,
    cap: usize,
    seed: u64,
    out: *mut *mut c_char,
) -> SpectopStatus {
    guard(|| {
        let ring = FiniteRing::parse(str_arg(spec, "spec")?)?;
        let r = report::ring_report(&ring, cap, seed)?;
        write_out(out, into_c_string(r.to_json()), "out")
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn spectop_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread; empty if none. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn spectop_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn spectop_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
