//! C interface to `divcodes`.
//!
//! Codes live behind the opaque [`DcCode`] handle. Every fallible call
//! returns a [`DcStatus`] and writes its result through an out-pointer;
//! on failure [`dc_last_error_message`] describes what went wrong on the
//! calling thread. Strings returned to C are released with
//! [`dc_string_free`], handles with [`dc_code_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use divcodes::catalog::{self, CatalogEntry, Family};
use divcodes::classify::canonical_key;
use divcodes::codes::{is_projective, weight_distribution, LinearCode};
use divcodes::geometry::points_to_code;
use divcodes::textfmt::{format_code, parse_matrix};
use divcodes::Error;

/// Result codes shared by every function in this interface.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidParameter = 4,
    BudgetExceeded = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

/// Opaque handle to a binary linear code.
pub struct DcCode {
    code: LinearCode,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> DcStatus {
    match e {
        Error::Parse { .. } => DcStatus::ParseError,
        Error::BudgetExceeded { .. } => DcStatus::BudgetExceeded,
        _ => DcStatus::InvalidParameter,
    }
}

/// Runs `f`, recording errors and keeping panics on the Rust side.
fn guard(f: impl FnOnce() -> Result<(), (DcStatus, String)>) -> DcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            DcStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            DcStatus::Internal
        }
    }
}

fn lib(e: Error) -> (DcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (DcStatus, String) {
    (DcStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `p` is null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (DcStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (DcStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// # Safety
/// `code` is null or a live handle from this library.
unsafe fn code_ref<'a>(code: *const DcCode) -> Result<&'a LinearCode, (DcStatus, String)> {
    code.as_ref().map(|c| &c.code).ok_or_else(|| null("code"))
}

fn boxed(code: LinearCode) -> *mut DcCode {
    Box::into_raw(Box::new(DcCode { code }))
}

/// Parses the matrix text format (`n k` header, then `k` rows of `0`/`1`).
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dc_code_from_text(text: *const c_char, out: *mut *mut DcCode) -> DcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(text, "text")?;
        let parsed = parse_matrix(text).map_err(lib)?;
        let code = LinearCode::from_generator(&parsed.matrix).map_err(lib)?;
        *out = boxed(code);
        Ok(())
    })
}

/// Builds a catalog family member. `param` is `s` for `flat_plus_affine`
/// and `k` for `two_affine` and `three_flats`; it is ignored otherwise.
/// `variant` may be null. `r = 0` picks the family's default.
///
/// # Safety
/// `family` is a NUL-terminated string, `variant` is null or one, and `out`
/// is writable.
#[no_mangle]
pub unsafe extern "C" fn dc_construct(
    family: *const c_char,
    r: usize,
    param: usize,
    variant: *const c_char,
    out: *mut *mut DcCode,
) -> DcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let name = read_str(family, "family")?;
        let variant = if variant.is_null() { None } else { Some(read_str(variant, "variant")?) };
        let fam = Family::from_name(name, Some(param), Some(param), variant).map_err(lib)?;
        let r = if r == 0 { fam.default_r() } else { r };
        let entry = CatalogEntry::new(fam, r).map_err(lib)?;
        let pts = catalog::family(&entry).map_err(lib)?;
        *out = boxed(points_to_code(&pts).map_err(lib)?);
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `code` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dc_code_free(code: *mut DcCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Length of the code, 0 for a null handle.
///
/// # Safety
/// `code` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dc_code_length(code: *const DcCode) -> usize {
    code.as_ref().map_or(0, |c| c.code.n())
}

/// Dimension of the code, 0 for a null handle.
///
/// # Safety
/// `code` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dc_code_dimension(code: *const DcCode) -> usize {
    code.as_ref().map_or(0, |c| c.code.k())
}

/// # Safety
/// `code` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dc_code_is_projective(code: *const DcCode, out: *mut bool) -> DcStatus {
    guard(|| {
        let c = code_ref(code)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = is_projective(c);
        Ok(())
    })
}

/// # Safety
/// `code` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dc_code_is_divisible(code: *const DcCode, delta: usize, out: *mut bool) -> DcStatus {
    guard(|| {
        let c = code_ref(code)?;
        if out.is_null() {
            return Err(null("out"));
        }
        if delta == 0 {
            return Err((DcStatus::InvalidParameter, "delta must be positive".into()));
        }
        *out = weight_distribution(c).map_err(lib)?.is_divisible(delta);
        Ok(())
    })
}

/// Writes the `n + 1` weight counts into `counts`, which holds `len`
/// entries. Fails with `BufferTooSmall` when `len < n + 1`.
///
/// # Safety
/// `code` is a live handle; `counts` points to `len` writable `u64`.
#[no_mangle]
pub unsafe extern "C" fn dc_code_weight_distribution(code: *const DcCode, counts: *mut u64, len: usize) -> DcStatus {
    guard(|| {
        let c = code_ref(code)?;
        if counts.is_null() {
            return Err(null("counts"));
        }
        if len < c.n() + 1 {
            return Err((DcStatus::BufferTooSmall, format!("need {} entries, got {len}", c.n() + 1)));
        }
        let wd = weight_distribution(c).map_err(lib)?;
        let out = std::slice::from_raw_parts_mut(counts, len);
        for (slot, &v) in out.iter_mut().zip(&wd.counts) {
            *slot = u64::try_from(v).map_err(|_| (DcStatus::Internal, "count exceeds u64".to_string()))?;
        }
        Ok(())
    })
}

/// Canonical key as a hex string; equivalent codes give equal strings.
///
/// # Safety
/// `code` is a live handle; `out` is writable. Free the result with
/// [`dc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dc_code_canonical_key(code: *const DcCode, out: *mut *mut c_char) -> DcStatus {
    guard(|| {
        let c = code_ref(code)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let key = canonical_key(c).map_err(lib)?;
        *out = CString::new(key.to_hex()).expect("hex has no NUL").into_raw();
        Ok(())
    })
}

/// Generator matrix in the text format.
///
/// # Safety
/// `code` is a live handle; `out` is writable. Free the result with
/// [`dc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dc_code_to_text(code: *const DcCode, out: *mut *mut c_char) -> DcStatus {
    guard(|| {
        let c = code_ref(code)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = CString::new(format_code(c)).expect("matrix text has no NUL").into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Whether the moment LP rules out every projective `delta`-divisible code
/// of length `n`.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dc_exclude_length(n: usize, delta: usize, out: *mut bool) -> DcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if n == 0 || delta == 0 {
            return Err((DcStatus::InvalidParameter, "n and delta must be positive".into()));
        }
        *out = divcodes::bounds::exclude_length(n, delta);
        Ok(())
    })
}

/// Message for the last failed call on this thread, empty after a
/// success. Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn dc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Status code as a static string.
#[no_mangle]
pub extern "C" fn dc_status_name(status: DcStatus) -> *const c_char {
    let s: &'static CStr = match status {
        DcStatus::Ok => c"ok",
        DcStatus::NullPointer => c"null pointer",
        DcStatus::InvalidUtf8 => c"invalid UTF-8",
        DcStatus::ParseError => c"parse error",
        DcStatus::InvalidParameter => c"invalid parameter",
        DcStatus::BudgetExceeded => c"budget exceeded",
        DcStatus::BufferTooSmall => c"buffer too small",
        DcStatus::Internal => c"internal error",
    };
    s.as_ptr()
}
