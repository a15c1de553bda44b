//! C ABI for `levisom`.
//!
//! Conventions:
//! * Every fallible function returns a [`LevStatus`]; on failure
//!   [`lev_last_error_message`] describes the error for the calling thread.
//! * Results are written through out-pointers. Strings returned this way are
//!   owned by the caller and released with [`lev_string_free`].
//! * Languages and groups are opaque handles released with their `_free`
//!   function. Passing NULL to a `_free` function is a no-op.
//! * Rationals cross the boundary as strings (`"3/2"`, `"2"`), so no
//!   precision is lost.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use levisom::constructs::{catalog_graph, prop4_language, theorem2_language, theorem6_language, TruncationSpec};
use levisom::editdist::{distance_matrix, lev, Weights};
use levisom::isomgroup::{isometries, PermutationGroup};
use levisom::langlib::{Language, Word};
use levisom::{Error, Rat};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevStatus {
    Ok = 0,
    /// A parameter was out of range or inconsistent.
    InvalidArgument = 1,
    /// A word, rational, language or graph failed to parse.
    ParseError = 2,
    /// The request exceeds a size limit of the library.
    CapabilityExceeded = 3,
    /// A required pointer argument was NULL.
    NullPointer = 4,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 5,
    /// An unexpected internal failure.
    Internal = 6,
}

/// Opaque handle to a finite language.
pub struct LevLanguage {
    inner: Language,
}

/// Opaque handle to a permutation group.
pub struct LevGroup {
    inner: PermutationGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LevStatus {
    match e {
        Error::DegreeTooLarge { .. } | Error::GroupTooLarge { .. } | Error::ParametersTooLarge(_) => {
            LevStatus::CapabilityExceeded
        }
        Error::Parse { .. }
        | Error::InvalidSymbol(_)
        | Error::InvalidRational(_)
        | Error::DuplicateWord(_)
        | Error::UnknownGraph(_)
        | Error::InvalidPermutation(_) => LevStatus::ParseError,
        _ => LevStatus::InvalidArgument,
    }
}

struct Failure(LevStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

type FfiResult<T> = Result<T, Failure>;

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> FfiResult<()>) -> LevStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            LevStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            LevStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(Failure(LevStatus::NullPointer, format!("`{name}` is NULL")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(LevStatus::InvalidUtf8, format!("`{name}` is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(Failure(LevStatus::NullPointer, "output pointer is NULL".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    let c = CString::new(s).map_err(|_| Failure(LevStatus::Internal, "string contains NUL".into()))?;
    if out.is_null() {
        return Err(Failure(LevStatus::NullPointer, "output pointer is NULL".into()));
    }
    out.write(c.into_raw());
    Ok(())
}

unsafe fn language_ref<'a>(lang: *const LevLanguage) -> FfiResult<&'a Language> {
    lang.as_ref().map(|l| &l.inner).ok_or_else(|| Failure(LevStatus::NullPointer, "language handle is NULL".into()))
}

unsafe fn group_ref<'a>(group: *const LevGroup) -> FfiResult<&'a PermutationGroup> {
    group.as_ref().map(|g| &g.inner).ok_or_else(|| Failure(LevStatus::NullPointer, "group handle is NULL".into()))
}

unsafe fn weights_arg(gamma: *const c_char, theta: *const c_char) -> FfiResult<Weights> {
    let gamma: Rat = str_arg(gamma, "gamma")?.parse()?;
    let theta: Rat = str_arg(theta, "theta")?.parse()?;
    Ok(Weights::new(gamma, theta)?)
}

/// Message describing the most recent failure on this thread, or NULL.
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn lev_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn lev_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a pointer obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lev_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Exact distance between two words, written as a rational string.
/// Weights are rational strings such as `"1"` or `"3/2"`; the empty word
/// is `"<eps>"`.
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lev_distance(
    u: *const c_char,
    v: *const c_char,
    gamma: *const c_char,
    theta: *const c_char,
    out: *mut *mut c_char,
) -> LevStatus {
    guard(|| {
        let (u, v) = (Word::parse(str_arg(u, "u")?)?, Word::parse(str_arg(v, "v")?)?);
        let d = lev(&u, &v, &weights_arg(gamma, theta)?);
        write_string(out, d.to_string())
    })
}

/// Distance with integer-fraction weights, returned as a double.
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lev_distance_f64(
    u: *const c_char,
    v: *const c_char,
    gamma_num: i64,
    gamma_den: i64,
    theta_num: i64,
    theta_den: i64,
    out: *mut f64,
) -> LevStatus {
    guard(|| {
        if gamma_den == 0 || theta_den == 0 {
            return Err(Failure(LevStatus::InvalidArgument, "zero denominator".into()));
        }
        let w = Weights::new(Rat::new(gamma_num, gamma_den), Rat::new(theta_num, theta_den))?;
        let (u, v) = (Word::parse(str_arg(u, "u")?)?, Word::parse(str_arg(v, "v")?)?);
        write_out(out, lev(&u, &v, &w).to_f64())
    })
}

/// Parses a language in the line-per-word text format.
///
/// # Safety
/// `text` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lev_language_parse(text: *const c_char, out: *mut *mut LevLanguage) -> LevStatus {
    guard(|| {
        let inner = Language::parse(str_arg(text, "text")?)?;
        write_out(out, Box::into_raw(Box::new(LevLanguage { inner })))
    })
}

/// Builds the stretched encoding of a bundled cubic graph (`"k4"`,
/// `"k33"`, `"petersen"`, `"frucht"`).
///
/// # Safety
/// `graph` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lev_construct_graph_language(graph: *const c_char, out: *mut *mut LevLanguage) -> LevStatus {
    guard(|| {
        let entry = catalog_graph(str_arg(graph, "graph")?)?;
        let inner = theorem2_language(&entry.graph)?;
        write_out(out, Box::into_raw(Box::new(LevLanguage { inner })))
    })
}

/// Builds the layered single-marker language with `depth` layers.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lev_construct_marker_layers(depth: usize, out: *mut *mut LevLanguage) -> LevStatus {
    guard(|| {
        let inner = theorem6_language(TruncationSpec::new(depth)?)?;
        write_out(out, Box::into_raw(Box::new(LevLanguage { inner })))
    })
}

/// Builds `{0^i, 1^i : i <= n}`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lev_construct_two_unary(n: usize, out: *mut *mut LevLanguage) -> LevStatus {
    guard(|| {
        let inner = prop4_language(n)?;
        write_out(out, Box::into_raw(Box::new(LevLanguage { inner })))
    })
}

/// Number of words, or 0 for a NULL handle.
///
/// # Safety
/// `lang` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lev_language_len(lang: *const LevLanguage) -> usize {
    lang.as_ref().map_or(0, |l| l.inner.len())
}

/// The `index`-th word as a new string.
///
/// # Safety
/// `lang` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lev_language_word(lang: *const LevLanguage, index: usize, out: *mut *mut c_char) -> LevStatus {
    guard(|| {
        let lang = language_ref(lang)?;
        let w = lang
            .get(index)
            .ok_or_else(|| Failure(LevStatus::InvalidArgument, format!("index {index} out of range")))?;
        write_string(out, w.to_string())
    })
}

/// Releases a language handle.
///
/// # Safety
/// `lang` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lev_language_free(lang: *mut LevLanguage) {
    if !lang.is_null() {
        drop(Box::from_raw(lang));
    }
}

/// Isometry group of a language under the given weights.
///
/// # Safety
/// `lang` must be a live handle; strings NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lev_isometry_group(
    lang: *const LevLanguage,
    gamma: *const c_char,
    theta: *const c_char,
    out: *mut *mut LevGroup,
) -> LevStatus {
    guard(|| {
        let lang = language_ref(lang)?;
        let inner = isometries(&distance_matrix(lang, &weights_arg(gamma, theta)?));
        write_out(out, Box::into_raw(Box::new(LevGroup { inner })))
    })
}

/// Degree of the group, or 0 for a NULL handle.
///
/// # Safety
/// `group` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lev_group_degree(group: *const LevGroup) -> usize {
    group.as_ref().map_or(0, |g| g.inner.degree())
}

/// Group order as a decimal string (orders may exceed 64 bits).
///
/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lev_group_order(group: *const LevGroup, out: *mut *mut c_char) -> LevStatus {
    guard(|| write_string(out, group_ref(group)?.order().to_string()))
}

/// JSON summary: degree, order, generators, orbit sizes.
///
/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lev_group_json(group: *const LevGroup, out: *mut *mut c_char) -> LevStatus {
    guard(|| {
        let summary = group_ref(group)?.summary();
        let json = serde_json::to_string(&summary).map_err(|e| Failure(LevStatus::Internal, e.to_string()))?;
        write_string(out, json)
    })
}

/// Releases a group handle.
///
/// # Safety
/// `group` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lev_group_free(group: *mut LevGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}
