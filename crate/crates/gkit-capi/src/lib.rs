//! C ABI for the gkit toolkit.
//!
//! Conventions:
//!
//! * big integers cross the boundary as decimal strings;
//! * returned strings are heap-allocated and must be released with
//!   [`gkit_string_free`];
//! * handles are opaque and released with their matching `_free` function;
//! * every fallible call returns a [`GkitStatus`]; on failure a
//!   human-readable message is available from [`gkit_last_error`] until the
//!   next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use num_bigint::BigInt;

use gkit::binomial::{expand, gotzmann_growth, green_bound, macaulay_bound, MacaulayExpansion};
use gkit::elimination::{gorf_test, gors_test, section_eliminate, SectionOptions, Verdict};
use gkit::perazzo::{self, PerazzoParams};
use gkit::sequences::HilbertCandidate;

/// Result codes shared by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GkitStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
}

/// Verdict of an elimination test.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GkitVerdict {
    Eliminated = 0,
    Pass = 1,
    Unknown = 2,
}

/// Opaque handle to a binomial expansion.
pub struct GkitExpansion(MacaulayExpansion);

/// Opaque handle to a candidate Hilbert function.
pub struct GkitCandidate(HilbertCandidate);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).ok();
    });
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| slot.borrow_mut().take());
}

fn fail(status: GkitStatus, message: impl Into<String>) -> GkitStatus {
    set_last_error(message.into());
    status
}

fn alloc_string(text: String) -> *mut c_char {
    CString::new(text.replace('\0', " "))
        .map(CString::into_raw)
        .unwrap_or(std::ptr::null_mut())
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, GkitStatus> {
    if ptr.is_null() {
        return Err(GkitStatus::NullPointer);
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| GkitStatus::InvalidUtf8)
}

fn parse_bigint(text: &str) -> Result<BigInt, String> {
    text.trim()
        .parse()
        .map_err(|_| format!("invalid integer `{text}`"))
}

/// Message describing the most recent failure on this thread, or NULL.
/// The pointer stays valid until the next failing call on the thread.
#[no_mangle]
pub extern "C" fn gkit_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn gkit_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be a pointer previously returned by a gkit function, not yet
/// freed, or NULL.
#[no_mangle]
pub unsafe extern "C" fn gkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Computes the unique binomial expansion of a nonnegative decimal integer
/// in the given degree.
///
/// # Safety
/// `value_decimal` must be a NUL-terminated string and `out` a valid
/// pointer; on success `*out` owns a handle to free with
/// [`gkit_expansion_free`].
#[no_mangle]
pub unsafe extern "C" fn gkit_expand(
    value_decimal: *const c_char,
    degree: u32,
    out: *mut *mut GkitExpansion,
) -> GkitStatus {
    clear_last_error();
    if out.is_null() {
        return fail(GkitStatus::NullPointer, "out pointer is NULL");
    }
    let text = match read_str(value_decimal) {
        Ok(t) => t,
        Err(s) => return fail(s, "value string unreadable"),
    };
    let value = match parse_bigint(text) {
        Ok(v) => v,
        Err(e) => return fail(GkitStatus::InvalidArgument, e),
    };
    match expand(value, degree) {
        Ok(e) => {
            *out = Box::into_raw(Box::new(GkitExpansion(e)));
            GkitStatus::Ok
        }
        Err(e) => fail(GkitStatus::InvalidArgument, e.to_string()),
    }
}

/// Releases an expansion handle.
///
/// # Safety
/// `e` must come from [`gkit_expand`] and not be freed twice; NULL is a
/// no-op.
#[no_mangle]
pub unsafe extern "C" fn gkit_expansion_free(e: *mut GkitExpansion) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Renders an expansion as `C(a,b)+C(c,d)+...` (or `0`).
///
/// # Safety
/// `e` must be a live expansion handle; `out` must be valid and receives an
/// owned string.
#[no_mangle]
pub unsafe extern "C" fn gkit_expansion_to_string(
    e: *const GkitExpansion,
    out: *mut *mut c_char,
) -> GkitStatus {
    clear_last_error();
    if e.is_null() || out.is_null() {
        return fail(GkitStatus::NullPointer, "NULL handle or out pointer");
    }
    *out = alloc_string((*e).0.to_string());
    GkitStatus::Ok
}

/// Evaluates the shifted expansion (adding `top_shift` to every top and
/// `bottom_shift` to every bottom, vanishing convention included) and
/// returns the decimal value.
///
/// # Safety
/// `e` must be a live expansion handle; `out` must be valid and receives an
/// owned string.
#[no_mangle]
pub unsafe extern "C" fn gkit_expansion_shift(
    e: *const GkitExpansion,
    top_shift: i64,
    bottom_shift: i64,
    out: *mut *mut c_char,
) -> GkitStatus {
    clear_last_error();
    if e.is_null() || out.is_null() {
        return fail(GkitStatus::NullPointer, "NULL handle or out pointer");
    }
    *out = alloc_string((*e).0.shift(top_shift, bottom_shift).to_string());
    GkitStatus::Ok
}

unsafe fn bound_impl(
    h: *const c_char,
    out: *mut *mut c_char,
    f: impl FnOnce(BigInt) -> gkit::Result<BigInt>,
) -> GkitStatus {
    clear_last_error();
    if out.is_null() {
        return fail(GkitStatus::NullPointer, "out pointer is NULL");
    }
    let text = match read_str(h) {
        Ok(t) => t,
        Err(s) => return fail(s, "entry string unreadable"),
    };
    let value = match parse_bigint(text) {
        Ok(v) => v,
        Err(e) => return fail(GkitStatus::InvalidArgument, e),
    };
    match f(value) {
        Ok(v) => {
            *out = alloc_string(v.to_string());
            GkitStatus::Ok
        }
        Err(e) => fail(GkitStatus::InvalidArgument, e.to_string()),
    }
}

/// Maximal next entry of an O-sequence after value `h` in degree `d`.
///
/// # Safety
/// `h` must be a NUL-terminated decimal string; `out` receives an owned
/// string.
#[no_mangle]
pub unsafe extern "C" fn gkit_macaulay_bound(
    h: *const c_char,
    d: u32,
    out: *mut *mut c_char,
) -> GkitStatus {
    bound_impl(h, out, |v| macaulay_bound(v, d))
}

/// Generic-linear-section bound for value `h` in degree `d`.
///
/// # Safety
/// As for [`gkit_macaulay_bound`].
#[no_mangle]
pub unsafe extern "C" fn gkit_green_bound(
    h: *const c_char,
    d: u32,
    out: *mut *mut c_char,
) -> GkitStatus {
    bound_impl(h, out, |v| green_bound(v, d))
}

/// Persistent growth value `((h)_(d))^s_s`.
///
/// # Safety
/// As for [`gkit_macaulay_bound`].
#[no_mangle]
pub unsafe extern "C" fn gkit_gotzmann_growth(
    h: *const c_char,
    d: u32,
    s: u32,
    out: *mut *mut c_char,
) -> GkitStatus {
    bound_impl(h, out, |v| gotzmann_growth(v, d, s))
}

/// Parses a comma- or space-separated candidate Hilbert function.
///
/// # Safety
/// `text` must be NUL-terminated; on success `*out` owns a handle to free
/// with [`gkit_candidate_free`].
#[no_mangle]
pub unsafe extern "C" fn gkit_candidate_parse(
    text: *const c_char,
    out: *mut *mut GkitCandidate,
) -> GkitStatus {
    clear_last_error();
    if out.is_null() {
        return fail(GkitStatus::NullPointer, "out pointer is NULL");
    }
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return fail(s, "candidate string unreadable"),
    };
    match HilbertCandidate::parse(text) {
        Ok(c) => {
            *out = Box::into_raw(Box::new(GkitCandidate(c)));
            GkitStatus::Ok
        }
        Err(e) => fail(GkitStatus::InvalidArgument, e.to_string()),
    }
}

/// Releases a candidate handle.
///
/// # Safety
/// `c` must come from a gkit constructor and not be freed twice; NULL is a
/// no-op.
#[no_mangle]
pub unsafe extern "C" fn gkit_candidate_free(c: *mut GkitCandidate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Renders a candidate as comma-separated entries.
///
/// # Safety
/// `c` must be a live candidate handle; `out` receives an owned string.
#[no_mangle]
pub unsafe extern "C" fn gkit_candidate_to_string(
    c: *const GkitCandidate,
    out: *mut *mut c_char,
) -> GkitStatus {
    clear_last_error();
    if c.is_null() || out.is_null() {
        return fail(GkitStatus::NullPointer, "NULL handle or out pointer");
    }
    *out = alloc_string((*c).0.to_string());
    GkitStatus::Ok
}

unsafe fn predicate_impl(
    c: *const GkitCandidate,
    out: *mut bool,
    f: impl FnOnce(&HilbertCandidate) -> bool,
) -> GkitStatus {
    clear_last_error();
    if c.is_null() || out.is_null() {
        return fail(GkitStatus::NullPointer, "NULL handle or out pointer");
    }
    *out = f(&(*c).0);
    GkitStatus::Ok
}

/// Macaulay growth condition in every degree.
///
/// # Safety
/// `c` must be a live candidate handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gkit_candidate_is_o_sequence(
    c: *const GkitCandidate,
    out: *mut bool,
) -> GkitStatus {
    predicate_impl(c, out, HilbertCandidate::is_o_sequence)
}

/// Symmetric Gorenstein shape (necessary conditions only).
///
/// # Safety
/// As for [`gkit_candidate_is_o_sequence`].
#[no_mangle]
pub unsafe extern "C" fn gkit_candidate_is_gorenstein_shape(
    c: *const GkitCandidate,
    out: *mut bool,
) -> GkitStatus {
    predicate_impl(c, out, HilbertCandidate::is_gorenstein_shape)
}

/// Strict decrease through the first half of the sequence.
///
/// # Safety
/// As for [`gkit_candidate_is_o_sequence`].
#[no_mangle]
pub unsafe extern "C" fn gkit_candidate_is_totally_nonunimodal(
    c: *const GkitCandidate,
    out: *mut bool,
) -> GkitStatus {
    predicate_impl(c, out, perazzo::is_totally_nonunimodal)
}

/// Full Perazzo Hilbert function of type `m`, socle degree `d`, extended by
/// `extend` power-sum variables (0 for the plain function).
///
/// # Safety
/// `out` must be valid; on success it owns a candidate handle.
#[no_mangle]
pub unsafe extern "C" fn gkit_perazzo_hilbert_function(
    m: u32,
    d: u32,
    extend: u64,
    out: *mut *mut GkitCandidate,
) -> GkitStatus {
    clear_last_error();
    if out.is_null() {
        return fail(GkitStatus::NullPointer, "out pointer is NULL");
    }
    match PerazzoParams::new(m, d) {
        Ok(p) => {
            let h = if extend == 0 {
                perazzo::hilbert_function(p)
            } else {
                perazzo::extend_with_powers(p, extend)
            };
            *out = Box::into_raw(Box::new(GkitCandidate(h)));
            GkitStatus::Ok
        }
        Err(e) => fail(GkitStatus::InvalidArgument, e.to_string()),
    }
}

fn verdict_code(v: Verdict) -> GkitVerdict {
    match v {
        Verdict::Eliminated => GkitVerdict::Eliminated,
        Verdict::Pass => GkitVerdict::Pass,
        Verdict::Unknown => GkitVerdict::Unknown,
    }
}

unsafe fn closed_form_impl(
    r: *const c_char,
    h: *const c_char,
    socle5: bool,
    out_verdict: *mut GkitVerdict,
    out_certificate_json: *mut *mut c_char,
) -> GkitStatus {
    clear_last_error();
    if out_verdict.is_null() {
        return fail(GkitStatus::NullPointer, "verdict pointer is NULL");
    }
    let (r_text, h_text) = match (read_str(r), read_str(h)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(s), _) | (_, Err(s)) => return fail(s, "argument string unreadable"),
    };
    let (rv, hv) = match (parse_bigint(r_text), parse_bigint(h_text)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return fail(GkitStatus::InvalidArgument, e),
    };
    let result = if socle5 {
        gorf_test(&rv, &hv)
    } else {
        gors_test(&rv, &hv)
    };
    match result {
        Ok(cert) => {
            *out_verdict = verdict_code(cert.verdict);
            if !out_certificate_json.is_null() {
                match cert.to_json() {
                    Ok(json) => *out_certificate_json = alloc_string(json),
                    Err(e) => return fail(GkitStatus::InvalidArgument, e.to_string()),
                }
            }
            GkitStatus::Ok
        }
        Err(e) => fail(GkitStatus::InvalidArgument, e.to_string()),
    }
}

/// Socle-degree-4 closed-form test on `(1, r, h, r, 1)`; requires `h <= r`.
/// `out_certificate_json` may be NULL when the certificate is not wanted.
///
/// # Safety
/// `r` and `h` must be NUL-terminated decimal strings; non-NULL out
/// pointers must be valid; a returned JSON string is owned by the caller.
#[no_mangle]
pub unsafe extern "C" fn gkit_gors_test(
    r: *const c_char,
    h: *const c_char,
    out_verdict: *mut GkitVerdict,
    out_certificate_json: *mut *mut c_char,
) -> GkitStatus {
    closed_form_impl(r, h, false, out_verdict, out_certificate_json)
}

/// Socle-degree-5 closed-form test on `(1, r, h, h, r, 1)`; requires
/// `h <= r`.
///
/// # Safety
/// As for [`gkit_gors_test`].
#[no_mangle]
pub unsafe extern "C" fn gkit_gorf_test(
    r: *const c_char,
    h: *const c_char,
    out_verdict: *mut GkitVerdict,
    out_certificate_json: *mut *mut c_char,
) -> GkitStatus {
    closed_form_impl(r, h, true, out_verdict, out_certificate_json)
}

/// Branch-and-prune section elimination on a symmetric candidate.
/// Sound-only: `ELIMINATED` certificates replay; `PASS`/`UNKNOWN` make no
/// existence claim.
///
/// # Safety
/// `c` must be a live candidate handle; out pointers as for
/// [`gkit_gors_test`].
#[no_mangle]
pub unsafe extern "C" fn gkit_section_eliminate(
    c: *const GkitCandidate,
    max_depth: u32,
    branch_cap: u64,
    out_verdict: *mut GkitVerdict,
    out_certificate_json: *mut *mut c_char,
) -> GkitStatus {
    clear_last_error();
    if c.is_null() || out_verdict.is_null() {
        return fail(GkitStatus::NullPointer, "NULL handle or verdict pointer");
    }
    let opts = SectionOptions {
        max_depth,
        branch_cap,
    };
    match section_eliminate(&(*c).0, opts) {
        Ok(cert) => {
            *out_verdict = verdict_code(cert.verdict);
            if !out_certificate_json.is_null() {
                match cert.to_json() {
                    Ok(json) => *out_certificate_json = alloc_string(json),
                    Err(e) => return fail(GkitStatus::InvalidArgument, e.to_string()),
                }
            }
            GkitStatus::Ok
        }
        Err(e) => fail(GkitStatus::InvalidArgument, e.to_string()),
    }
}

/// Ledger rows for `delta(r)` over an inclusive codimension range, rendered
/// as CSV with columns `r,lower,upper,status,provenance`.
///
/// # Safety
/// `out` must be valid and receives an owned string.
#[no_mangle]
pub unsafe extern "C" fn gkit_delta_csv(
    degree: u32,
    lo: u64,
    hi: u64,
    out: *mut *mut c_char,
) -> GkitStatus {
    clear_last_error();
    if out.is_null() {
        return fail(GkitStatus::NullPointer, "out pointer is NULL");
    }
    match gkit::delta::ledger_range(degree, lo, hi) {
        Ok(rows) => {
            let mut csv = String::from("r,lower,upper,status,provenance");
            for row in rows {
                let provenance = row
                    .provenance
                    .iter()
                    .map(|p| p.label())
                    .collect::<Vec<_>>()
                    .join(";");
                csv.push_str(&format!(
                    "\n{},{},{},{:?},\"{}\"",
                    row.r,
                    row.lower,
                    row.upper.map_or(String::new(), |u| u.to_string()),
                    row.status(),
                    provenance
                ));
            }
            *out = alloc_string(csv);
            GkitStatus::Ok
        }
        Err(e) => fail(GkitStatus::InvalidArgument, e.to_string()),
    }
}
