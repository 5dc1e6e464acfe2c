//! C ABI over `ribbonmod`.
//!
//! Every entry point returns an [`RmStatus`]. On failure a message is kept
//! per thread and can be read with [`rm_last_error_message`]. Strings handed
//! out by this library are owned by the caller and released with
//! [`rm_string_free`]; vectors are opaque and released with
//! [`rm_vector_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ribbonmod::compositions::{Composition, PseudoComposition, RibbonIndex};
use ribbonmod::coxeter::{builtin_diagram, residue_histogram, ribbon_general};
use ribbonmod::cvec::{self, macdonald_mp, Method};
use ribbonmod::ribbon::{ribbon_a, ribbon_b, ribbon_d, ribbon_mod_p};
use ribbonmod::{Error, Family, Prime};

/// Outcome of a call. `RM_STATUS_OK` is zero.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RmStatus {
    Ok = 0,
    InvalidArgument = 1,
    NotPrime = 2,
    Capacity = 3,
    InvalidComposition = 4,
    UnknownGroup = 5,
    NoClosedForm = 6,
    NullPointer = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RmFamily {
    A = 0,
    B = 1,
    D = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RmMethod {
    Naive = 0,
    Theorem = 1,
    Closed = 2,
    Auto = 3,
}

/// Residue counts of one p-vector. Opaque to C.
pub struct RmVector {
    counts: Vec<String>,
    method: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(RmStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NotPrime(_) | Error::ModulusTooLarge(_) => RmStatus::NotPrime,
            Error::Capacity { .. } => RmStatus::Capacity,
            Error::InvalidComposition(_) | Error::DescentOutOfRange { .. } => {
                RmStatus::InvalidComposition
            }
            Error::UnknownGroup(_) | Error::Unclassifiable(_) => RmStatus::UnknownGroup,
            Error::InvalidInput(_) => RmStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(RmStatus::NullPointer, format!("{what} is null"))
}

fn set_error(msg: Option<String>) {
    let c = msg.map(|m| CString::new(m.replace('\0', " ")).expect("nul bytes removed"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

/// Runs `f`, records its error and turns panics into `RmStatus::Panic`.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> RmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(None);
            RmStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(Some(msg));
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(Some(format!("internal panic: {msg}")));
            RmStatus::Panic
        }
    }
}

fn family(f: RmFamily) -> Family {
    match f {
        RmFamily::A => Family::A,
        RmFamily::B => Family::B,
        RmFamily::D => Family::D,
    }
}

fn method(m: RmMethod) -> Method {
    match m {
        RmMethod::Naive => Method::Naive,
        RmMethod::Theorem => Method::Theorem,
        RmMethod::Closed => Method::Closed,
        RmMethod::Auto => Method::Auto,
    }
}

/// # Safety
/// `parts` must point to `len` readable values unless `len == 0`.
unsafe fn parts<'a>(parts: *const u64, len: usize) -> Result<&'a [u64], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if parts.is_null() {
        return Err(null("parts"));
    }
    Ok(std::slice::from_raw_parts(parts, len))
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(RmStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

/// # Safety
/// `out` must be null or valid for one write.
unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("decimal strings contain no nul").into_raw()
}

/// Exact ribbon number of the (pseudo)composition `parts[0..len]` as a
/// decimal string in `*out`.
///
/// # Safety
/// `parts` must hold `len` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_ribbon(
    fam: RmFamily,
    parts_ptr: *const u64,
    len: usize,
    out: *mut *mut c_char,
) -> RmStatus {
    guard(|| {
        let parts = parts(parts_ptr, len)?;
        let value = match family(fam) {
            Family::A => ribbon_a(&Composition::from_parts(parts)?),
            Family::B => ribbon_b(&PseudoComposition::from_parts(parts)?),
            Family::D => ribbon_d(&PseudoComposition::from_parts(parts)?)?,
        };
        write_out(out, owned_string(value.to_string()))
    })
}

/// Ribbon number of `parts[0..len]` reduced mod the prime `p`.
///
/// # Safety
/// `parts` must hold `len` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_ribbon_mod(
    fam: RmFamily,
    parts_ptr: *const u64,
    len: usize,
    p: u64,
    out: *mut u64,
) -> RmStatus {
    guard(|| {
        let parts = parts(parts_ptr, len)?;
        let p = Prime::new(p)?;
        let fam = family(fam);
        let set = match fam {
            Family::A => Composition::from_parts(parts)?.descent_set(),
            Family::B | Family::D => PseudoComposition::from_parts(parts)?.descent_set(),
        };
        write_out(out, ribbon_mod_p(fam, &set, p)?)
    })
}

/// Residue counts of all ribbon numbers of rank `n` mod `p`.
///
/// # Safety
/// `out` must be writable. The handle written there is freed with
/// [`rm_vector_free`].
#[no_mangle]
pub unsafe extern "C" fn rm_cvec(
    fam: RmFamily,
    n: u64,
    p: u64,
    how: RmMethod,
    out: *mut *mut RmVector,
) -> RmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = Prime::new(p)?;
        let fam = family(fam);
        let v = if how == RmMethod::Closed {
            cvec::cvec_closed_form(fam, n, p).ok_or_else(|| {
                Failure(
                    RmStatus::NoClosedForm,
                    format!("no closed form applies to type {fam} with n = {n}, p = {p}"),
                )
            })?
        } else {
            cvec::cvec(fam, n, p, method(how))?
        };
        let handle = RmVector {
            counts: v.counts.iter().map(|c| c.to_string()).collect(),
            method: CString::new(v.provenance.to_string()).expect("labels contain no nul"),
        };
        write_out(out, Box::into_raw(Box::new(handle)))
    })
}

/// Ribbon number of a built-in Coxeter group (`"E6"`, `"I2(5)"`, ...) for
/// the descent set given by the generator bitmask `mask`.
///
/// # Safety
/// `group` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rm_coxeter_ribbon(
    group: *const c_char,
    mask: u64,
    out: *mut *mut c_char,
) -> RmStatus {
    guard(|| {
        let diagram = builtin_diagram(text(group, "group")?)?;
        if mask & !diagram.full_mask() != 0 {
            return Err(Failure(
                RmStatus::InvalidArgument,
                format!("mask {mask:#x} has bits beyond rank {}", diagram.rank()),
            ));
        }
        let value = ribbon_general(&diagram, mask)?;
        write_out(out, owned_string(value.to_string()))
    })
}

/// Residue histogram of a built-in Coxeter group's descent classes mod `p`.
/// Writes `min(p, capacity)` counts into `counts`; `*len` receives `p`.
///
/// # Safety
/// `group` must be a NUL-terminated string, `counts` must hold `capacity`
/// values and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_coxeter_histogram(
    group: *const c_char,
    p: u64,
    counts: *mut u64,
    capacity: usize,
    len: *mut usize,
) -> RmStatus {
    guard(|| {
        let diagram = builtin_diagram(text(group, "group")?)?;
        let hist = residue_histogram(&diagram, Prime::new(p)?)?;
        if capacity > 0 && counts.is_null() {
            return Err(null("counts"));
        }
        for (i, &c) in hist.iter().take(capacity).enumerate() {
            counts.add(i).write(c);
        }
        write_out(len, hist.len())
    })
}

/// Number of irreducible characters of the symmetric group of degree `n`
/// whose degree is prime to `p`, as a decimal string.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_macdonald(n: u64, p: u64, out: *mut *mut c_char) -> RmStatus {
    guard(|| {
        let value = macdonald_mp(n, Prime::new(p)?)?;
        write_out(out, owned_string(value.to_string()))
    })
}

/// Number of residues in the vector, which is `p`. Zero for null.
///
/// # Safety
/// `v` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rm_vector_len(v: *const RmVector) -> usize {
    v.as_ref().map_or(0, |v| v.counts.len())
}

/// Count of residue `i` as a decimal string.
///
/// # Safety
/// `v` must be null or a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_vector_count(
    v: *const RmVector,
    i: usize,
    out: *mut *mut c_char,
) -> RmStatus {
    guard(|| {
        let v = v.as_ref().ok_or_else(|| null("vector"))?;
        let c = v.counts.get(i).ok_or_else(|| out_of_range(i, v.counts.len()))?;
        write_out(out, owned_string(c.clone()))
    })
}

/// Count of residue `i` when it fits in 64 bits, else `RmStatus::Capacity`.
///
/// # Safety
/// `v` must be null or a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_vector_count_u64(
    v: *const RmVector,
    i: usize,
    out: *mut u64,
) -> RmStatus {
    guard(|| {
        let v = v.as_ref().ok_or_else(|| null("vector"))?;
        let c = v.counts.get(i).ok_or_else(|| out_of_range(i, v.counts.len()))?;
        let c = c.parse::<u64>().map_err(|_| {
            Failure(RmStatus::Capacity, format!("count {c} does not fit in 64 bits"))
        })?;
        write_out(out, c)
    })
}

fn out_of_range(i: usize, len: usize) -> Failure {
    Failure(
        RmStatus::InvalidArgument,
        format!("residue {i} is out of range for {len} residues"),
    )
}

/// Which route produced the vector, e.g. `"closed-form (n = m p^d)"`.
/// Borrowed from the handle; null for a null handle.
///
/// # Safety
/// `v` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rm_vector_method(v: *const RmVector) -> *const c_char {
    v.as_ref().map_or(ptr::null(), |v| v.method.as_ptr())
}

/// # Safety
/// `v` must be null or a handle from [`rm_cvec`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rm_vector_free(v: *mut RmVector) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null after a
/// success. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn rm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, static.
#[no_mangle]
pub extern "C" fn rm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
