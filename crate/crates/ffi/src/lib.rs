//! C interface to `symx`.
//!
//! Data live behind an opaque [`SymxDatum`] handle created from JSON or from
//! raw arrays and released with [`symx_datum_free`]. Every fallible call
//! returns a [`SymxStatus`] and writes its result through an out-pointer;
//! on failure [`symx_last_error`] describes what went wrong on the calling
//! thread. Strings returned by the library are NUL-terminated UTF-8 and must
//! be released with [`symx_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use serde::Serialize;
use symx::extendability::candidate_types;
use symx::lens::{
    admits_genus3, admits_klein_bottle, admits_projective_plane, lens_homeomorphic, torsion_image, Tristate,
};
use symx::{
    are_conjugate, check, classify_all, conjugacy_invariant, enumerate_extendable, same_cyclic_group,
    ExtError, ExtType, LensSpace, SymmetryDatum,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidDatum = 4,
    TypeMismatch = 5,
    InvalidArgument = 6,
    Panic = 7,
}

/// Extension type of a map over `S^3`: whether the surface map and the
/// extension preserve orientation.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymxExtType {
    PP = 0,
    MM = 1,
    PM = 2,
    MP = 3,
}

impl From<SymxExtType> for ExtType {
    fn from(k: SymxExtType) -> Self {
        match k {
            SymxExtType::PP => ExtType::PP,
            SymxExtType::MM => ExtType::MM,
            SymxExtType::PM => ExtType::PM,
            SymxExtType::MP => ExtType::MP,
        }
    }
}

/// Answer of a query that can be left open.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymxTristate {
    Yes = 1,
    Unknown = 2,
}

/// Opaque periodic-map datum.
pub struct SymxDatum {
    inner: SymmetryDatum,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Failure(SymxStatus, String);

impl From<ExtError> for Failure {
    fn from(e: ExtError) -> Self {
        let status = match e {
            ExtError::InvalidDatum(_) => SymxStatus::InvalidDatum,
            ExtError::TypeMismatch { .. } => SymxStatus::TypeMismatch,
            _ => SymxStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn invalid(msg: impl ToString) -> Failure {
    Failure(SymxStatus::InvalidArgument, msg.to_string())
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> SymxStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            SymxStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SymxStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(SymxStatus::NullPointer, format!("`{name}` is null")))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(SymxStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(SymxStatus::NullPointer, format!("`{name}` is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(SymxStatus::InvalidUtf8, format!("`{name}`: {e}")))
}

unsafe fn read_slice<'a>(p: *const u64, len: usize, name: &str) -> Result<&'a [u64], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Failure(SymxStatus::NullPointer, format!("`{name}` is null")));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn put_json(out: *mut *mut c_char, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure(SymxStatus::Panic, e.to_string()))?;
    let c = CString::new(text).map_err(|e| Failure(SymxStatus::Panic, e.to_string()))?;
    put(out, c.into_raw())
}

fn valid(d: &SymxDatum) -> Result<&SymmetryDatum, Failure> {
    d.inner
        .validate()
        .map_err(|v| Failure::from(ExtError::InvalidDatum(v)))?;
    Ok(&d.inner)
}

fn lens(l: u64, m: i64) -> Result<LensSpace, Failure> {
    LensSpace::new(l, m).map_err(invalid)
}

/// Message describing the last failure on this thread, or an empty string.
/// The pointer stays valid until the next call into the library.
#[no_mangle]
pub extern "C" fn symx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn symx_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn symx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a datum from JSON with keys `n`, `orientable`, `h`, `handles`,
/// `boundary`, `cones`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn symx_datum_from_json(json: *const c_char, out: *mut *mut SymxDatum) -> SymxStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        let inner = symx::cli::parse_datum(text).map_err(|e| Failure(SymxStatus::ParseError, e))?;
        put(out, Box::into_raw(Box::new(SymxDatum { inner })))
    })
}

/// Builds a datum from arrays. Shape is checked here; validity is reported
/// by [`symx_datum_validate`].
///
/// # Safety
/// Each array pointer must address `*_len` readable values (or be null with
/// length 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symx_datum_new(
    n: u64,
    orientable: bool,
    h: u32,
    handles: *const u64,
    handles_len: usize,
    boundary: *const u64,
    boundary_len: usize,
    cones: *const u64,
    cones_len: usize,
    out: *mut *mut SymxDatum,
) -> SymxStatus {
    guard(|| {
        let inner = SymmetryDatum::new(
            n,
            orientable,
            h,
            read_slice(handles, handles_len, "handles")?.to_vec(),
            read_slice(boundary, boundary_len, "boundary")?.to_vec(),
            read_slice(cones, cones_len, "cones")?.to_vec(),
        )
        .map_err(invalid)?;
        put(out, Box::into_raw(Box::new(SymxDatum { inner })))
    })
}

/// Releases a datum. Null is ignored.
///
/// # Safety
/// `d` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn symx_datum_free(d: *mut SymxDatum) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Writes whether the datum satisfies the validity contract. When it does
/// not, the violations are available through [`symx_last_error`].
///
/// # Safety
/// `d` must be a live handle and `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn symx_datum_validate(d: *const SymxDatum, valid: *mut bool) -> SymxStatus {
    let mut message = String::new();
    let status = guard(|| {
        let d = deref(d, "d")?;
        let result = d.inner.validate();
        if let Err(v) = &result {
            message = v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ");
        }
        put(valid, result.is_ok())
    });
    if status == SymxStatus::Ok && !message.is_empty() {
        set_error(message);
    }
    status
}

/// Genus of the surface the map acts on.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn symx_datum_genus(d: *const SymxDatum, out: *mut u64) -> SymxStatus {
    guard(|| {
        let d = valid(deref(d, "d")?)?;
        put(out, d.euler_genus().map_err(invalid)?)
    })
}

/// Conjugacy invariant as JSON.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn symx_datum_invariant_json(d: *const SymxDatum, out: *mut *mut c_char) -> SymxStatus {
    guard(|| {
        let d = valid(deref(d, "d")?)?;
        put_json(out, &conjugacy_invariant(d))
    })
}

/// Whether two maps are conjugate.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn symx_are_conjugate(
    a: *const SymxDatum,
    b: *const SymxDatum,
    out: *mut bool,
) -> SymxStatus {
    guard(|| {
        let (a, b) = (valid(deref(a, "a")?)?, valid(deref(b, "b")?)?);
        put(out, are_conjugate(a, b))
    })
}

/// Whether the cyclic groups generated by two maps are conjugate.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn symx_same_cyclic_group(
    a: *const SymxDatum,
    b: *const SymxDatum,
    out: *mut bool,
) -> SymxStatus {
    guard(|| {
        let (a, b) = (valid(deref(a, "a")?)?, valid(deref(b, "b")?)?);
        put(out, same_cyclic_group(a, b))
    })
}

/// Runs one type's criterion. Asking for a type whose surface orientation
/// behaviour does not match the map gives [`SymxStatus::TypeMismatch`].
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn symx_check(d: *const SymxDatum, kind: SymxExtType, out: *mut bool) -> SymxStatus {
    guard(|| {
        let d = deref(d, "d")?;
        put(out, check(&d.inner, kind.into())?.extendable)
    })
}

/// Bit mask of the types the map extends in: bit `k` is set for
/// `SymxExtType` value `k`.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn symx_classify(d: *const SymxDatum, out: *mut u32) -> SymxStatus {
    guard(|| {
        let d = deref(d, "d")?;
        let mask = classify_all(&d.inner)?.into_iter().fold(0u32, |acc, k| {
            acc | 1 << ExtType::ALL.iter().position(|&x| x == k).unwrap_or(0)
        });
        put(out, mask)
    })
}

/// Verdicts with witnesses for both candidate types, as a JSON array.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn symx_verdicts_json(d: *const SymxDatum, out: *mut *mut c_char) -> SymxStatus {
    guard(|| {
        let d = valid(deref(d, "d")?)?;
        let verdicts = candidate_types(d)
            .into_iter()
            .map(|k| check(d, k))
            .collect::<Result<Vec<_>, _>>()?;
        put_json(out, &verdicts)
    })
}

/// Table of extendable classes at genus `g` as a JSON array of rows.
/// `max_order == 0` selects the default order bound, which exists only for
/// `g >= 2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symx_enumerate_json(
    g: u64,
    kind: SymxExtType,
    max_order: u64,
    out: *mut *mut c_char,
) -> SymxStatus {
    guard(|| {
        let range = (max_order > 0).then_some(1..=max_order);
        let rows = enumerate_extendable(g, kind.into(), range).map_err(invalid)?;
        put_json(out, &rows)
    })
}

/// Whether `L(l1, m1)` and `L(l2, m2)` are homeomorphic.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symx_lens_homeomorphic(
    l1: u64,
    m1: i64,
    l2: u64,
    m2: i64,
    out: *mut bool,
) -> SymxStatus {
    guard(|| put(out, lens_homeomorphic(lens(l1, m1)?, lens(l2, m2)?)))
}

/// Whether `L(l, m)` contains a one-sided projective plane.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symx_lens_admits_projective_plane(l: u64, m: i64, out: *mut bool) -> SymxStatus {
    guard(|| put(out, admits_projective_plane(lens(l, m)?)))
}

/// Whether `L(l, m)` contains a one-sided Klein bottle.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symx_lens_admits_klein_bottle(l: u64, m: i64, out: *mut bool) -> SymxStatus {
    guard(|| put(out, admits_klein_bottle(lens(l, m)?)))
}

/// Whether `L(l, m)` contains a one-sided closed surface of genus 3.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symx_lens_admits_genus3(l: u64, m: i64, out: *mut SymxTristate) -> SymxStatus {
    guard(|| {
        let answer = match admits_genus3(lens(l, m)?) {
            Tristate::Yes => SymxTristate::Yes,
            Tristate::Unknown => SymxTristate::Unknown,
        };
        put(out, answer)
    })
}

/// Image in `H_1(L(l, m))` of the torsion class of a one-sided surface.
/// Fails for odd `l`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symx_lens_torsion_image(l: u64, m: i64, out: *mut u64) -> SymxStatus {
    guard(|| put(out, torsion_image(lens(l, m)?).map_err(invalid)?.value()))
}
