//! C interface to `bijection-atlas`.
//!
//! Every fallible call returns a [`BaStatus`]. Results come back through out
//! pointers. Strings handed out by this library are NUL-terminated and must be
//! released with [`ba_string_free`]; permutation handles with [`ba_perm_free`].
//! The message of the last failure on the calling thread is available from
//! [`ba_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bijection_atlas::convert::{self, Kind, Object};
use bijection_atlas::counting::{distribution, numbers, EnumOptions, Family};
use bijection_atlas::perm::Statistic;
use bijection_atlas::{bij, AtlasError, Permutation};

/// Status codes. Values are stable across releases.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Invalid = 4,
    Unknown = 5,
    NotBiIncreasing = 6,
    Domain = 7,
    OutOfRange = 8,
    CapExceeded = 9,
    Panic = 10,
}

impl From<&AtlasError> for BaStatus {
    fn from(e: &AtlasError) -> Self {
        match e {
            AtlasError::Parse { .. } => BaStatus::Parse,
            AtlasError::Invalid { .. } => BaStatus::Invalid,
            AtlasError::Unknown { .. } => BaStatus::Unknown,
            AtlasError::NotBiIncreasing(_) => BaStatus::NotBiIncreasing,
            AtlasError::Domain(_) => BaStatus::Domain,
            AtlasError::OutOfRange(_) => BaStatus::OutOfRange,
            AtlasError::CapExceeded { .. } => BaStatus::CapExceeded,
        }
    }
}

/// Opaque permutation handle.
pub struct BaPermutation(Permutation);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(BaStatus, String);

impl From<AtlasError> for Fail {
    fn from(e: AtlasError) -> Self {
        Fail(BaStatus::from(&e), e.to_string())
    }
}

/// Runs `f`, records any failure message, and converts panics to `Panic`.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> BaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            BaStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            BaStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(BaStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Fail(BaStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a>(p: *const BaPermutation) -> Result<&'a Permutation, Fail> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| Fail(BaStatus::NullArgument, "permutation handle is null".into()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(BaStatus::NullArgument, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(BaStatus::Invalid, "interior NUL in output".into()))?;
    put(out, c.into_raw())
}

unsafe fn put_perm(out: *mut *mut BaPermutation, p: Permutation) -> Result<(), Fail> {
    put(out, Box::into_raw(Box::new(BaPermutation(p))))
}

/// Message for the last failed call on this thread, or null after a success.
/// The pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn ba_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ba_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses whitespace-separated 1-based values, e.g. `"2 3 1"`.
///
/// # Safety
/// `word` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ba_perm_parse(word: *const c_char, out: *mut *mut BaPermutation) -> BaStatus {
    guard(|| {
        let p: Permutation = text(word, "word")?.parse()?;
        put_perm(out, p)
    })
}

/// Builds a permutation from `len` 1-based values.
///
/// # Safety
/// `values` must point to `len` readable elements (may be null when `len` is 0).
#[no_mangle]
pub unsafe extern "C" fn ba_perm_from_values(values: *const usize, len: usize, out: *mut *mut BaPermutation) -> BaStatus {
    guard(|| {
        let word = if len == 0 {
            Vec::new()
        } else if values.is_null() {
            return Err(Fail(BaStatus::NullArgument, "values is null".into()));
        } else {
            std::slice::from_raw_parts(values, len).to_vec()
        };
        put_perm(out, Permutation::new(word)?)
    })
}

/// # Safety
/// `p` must be a handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn ba_perm_free(p: *mut BaPermutation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Length of the permutation; 0 for a null handle.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ba_perm_len(p: *const BaPermutation) -> usize {
    p.as_ref().map_or(0, |h| h.0.len())
}

/// Copies up to `cap` values into `buf`. `out_len` receives the full length,
/// so a call with `cap` 0 queries the size.
///
/// # Safety
/// `buf` must have room for `cap` elements; `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ba_perm_values(p: *const BaPermutation, buf: *mut usize, cap: usize, out_len: *mut usize) -> BaStatus {
    guard(|| {
        let w = handle(p)?.word();
        if cap > 0 && buf.is_null() {
            return Err(Fail(BaStatus::NullArgument, "buf is null".into()));
        }
        let k = cap.min(w.len());
        if k > 0 {
            ptr::copy_nonoverlapping(w.as_ptr(), buf, k);
        }
        put(out_len, w.len())
    })
}

/// Space-separated word.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ba_perm_to_string(p: *const BaPermutation, out: *mut *mut c_char) -> BaStatus {
    guard(|| put_string(out, handle(p)?.to_string()))
}

/// A named statistic: exc, des, inv, maj, dexc, ddes, den, fix, gexc.
///
/// # Safety
/// `p` must be a live handle; `name` NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ba_perm_stat(p: *const BaPermutation, name: *const c_char, out: *mut usize) -> BaStatus {
    guard(|| {
        let p = handle(p)?;
        let stats = Statistic::parse_list(text(name, "name")?)?;
        match stats.as_slice() {
            [s] => put(out, s.of(p)),
            _ => Err(Fail(BaStatus::Invalid, "expected exactly one statistic".into())),
        }
    })
}

/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ba_perm_is_bi_increasing(p: *const BaPermutation, out: *mut bool) -> BaStatus {
    guard(|| put(out, handle(p)?.is_bi_increasing()))
}

/// Descriptive JSON record with every statistic of the permutation.
///
/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ba_perm_stats_json(p: *const BaPermutation, out: *mut *mut c_char) -> BaStatus {
    guard(|| {
        let v = convert::describe(&Object::Perm(handle(p)?.clone()))?;
        put_string(out, v.to_string())
    })
}

unsafe fn map_perm(
    p: *const BaPermutation,
    out: *mut *mut BaPermutation,
    f: impl FnOnce(&Permutation) -> bijection_atlas::Result<Permutation>,
) -> BaStatus {
    guard(|| {
        let q = f(handle(p)?)?;
        put_perm(out, q)
    })
}

/// The exc- and fix-preserving involution on bi-increasing permutations.
///
/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ba_perm_psi(p: *const BaPermutation, out: *mut *mut BaPermutation) -> BaStatus {
    map_perm(p, out, bij::psi)
}

/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ba_perm_hat(p: *const BaPermutation, out: *mut *mut BaPermutation) -> BaStatus {
    map_perm(p, out, |p| Ok(bij::hat(p)))
}

/// Foata's first fundamental transformation.
///
/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ba_perm_foata(p: *const BaPermutation, out: *mut *mut BaPermutation) -> BaStatus {
    map_perm(p, out, |p| Ok(bij::foata_phi(p)))
}

/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ba_perm_foata_inverse(p: *const BaPermutation, out: *mut *mut BaPermutation) -> BaStatus {
    map_perm(p, out, |p| Ok(bij::foata_phi_inverse(p)))
}

/// Size of the equivalence class of a bi-increasing permutation, as a decimal string.
///
/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ba_perm_class_size(p: *const BaPermutation, out: *mut *mut c_char) -> BaStatus {
    guard(|| put_string(out, bij::class_size(handle(p)?)?.to_string()))
}

/// Catalan number C_n as a decimal string.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ba_catalan(n: u64, out: *mut *mut c_char) -> BaStatus {
    guard(|| put_string(out, numbers::catalan(n).to_string()))
}

/// Converts `payload` of kind `from` to kind `to`. `route` may be null for the
/// default route. The result is the target payload text.
///
/// # Safety
/// String arguments must be NUL-terminated (route may be null); `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ba_convert(
    from: *const c_char,
    payload: *const c_char,
    to: *const c_char,
    route: *const c_char,
    out: *mut *mut c_char,
) -> BaStatus {
    guard(|| {
        let kind: Kind = text(from, "from")?.parse()?;
        let obj = Object::parse(kind, text(payload, "payload")?)?;
        let target: Kind = text(to, "to")?.parse()?;
        let route = if route.is_null() { None } else { Some(text(route, "route")?) };
        let c = convert::convert(&obj, target, route)?;
        put_string(out, c.output.to_string())
    })
}

/// JSON description of any object kind.
///
/// # Safety
/// String arguments must be NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ba_describe_json(kind: *const c_char, payload: *const c_char, out: *mut *mut c_char) -> BaStatus {
    guard(|| {
        let kind: Kind = text(kind, "kind")?.parse()?;
        let obj = Object::parse(kind, text(payload, "payload")?)?;
        put_string(out, convert::describe(&obj)?.to_string())
    })
}

/// Exact distribution of one or two comma-separated statistics over family
/// `S` or `B` of size `n`, as JSON.
///
/// # Safety
/// String arguments must be NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ba_distribution_json(
    family: *const c_char,
    n: usize,
    stats: *const c_char,
    jobs: usize,
    force: bool,
    out: *mut *mut c_char,
) -> BaStatus {
    guard(|| {
        let family: Family = text(family, "family")?.parse()?;
        let stats = Statistic::parse_list(text(stats, "stats")?)?;
        if stats.len() > 2 {
            return Err(Fail(BaStatus::Invalid, "at most two statistics".into()));
        }
        let t = distribution(family, n, &stats, EnumOptions { jobs: jobs.max(1), force })?;
        put_string(out, t.to_json().to_string())
    })
}
