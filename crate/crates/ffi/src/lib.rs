//! C interface to `onemap`.
//!
//! A computation returns an opaque [`OnemapProfile`] owned by the caller and
//! released with [`onemap_profile_free`]. Every function reports failure
//! through [`OnemapStatus`]; panics never cross the boundary. Positions are
//! 1-based, as in the command-line tool.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use onemap::{compute, Algorithm, Error, MappabilityVector, Text};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnemapStatus {
    Ok = 0,
    NullPointer = 1,
    EmptyText = 2,
    BadWindowLength = 3,
    InputTooLarge = 4,
    InvalidArgument = 5,
    OutOfRange = 6,
    Internal = 7,
}

/// Values accepted by the `algorithm` argument of the compute functions.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnemapAlgorithm {
    Auto = 0,
    Nlogn = 1,
    LargeM = 2,
    Naive = 3,
}

/// Per-window counts of one computation.
pub struct OnemapProfile {
    counts: MappabilityVector,
}

fn status_of(e: &Error) -> OnemapStatus {
    match e {
        Error::EmptyText => OnemapStatus::EmptyText,
        Error::BadWindowLength { .. } => OnemapStatus::BadWindowLength,
        Error::InputTooLarge { .. } => OnemapStatus::InputTooLarge,
        _ => OnemapStatus::Internal,
    }
}

fn algorithm(code: u32) -> Option<Algorithm> {
    Some(match code {
        0 => Algorithm::Auto,
        1 => Algorithm::Nlogn,
        2 => Algorithm::LargeM,
        3 => Algorithm::Naive,
        _ => return None,
    })
}

fn guarded(f: impl FnOnce() -> OnemapStatus) -> OnemapStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(OnemapStatus::Internal)
}

fn finish(text: Text, m: usize, algorithm_code: u32, out: *mut *mut OnemapProfile) -> OnemapStatus {
    let Some(alg) = algorithm(algorithm_code) else {
        return OnemapStatus::InvalidArgument;
    };
    match compute(&text, m, alg) {
        Ok(counts) => {
            let p = Box::new(OnemapProfile { counts });
            // SAFETY: `out` was checked non-null by the caller of `finish`.
            unsafe { *out = Box::into_raw(p) };
            OnemapStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Computes the profile of a byte string for window length `m`.
///
/// # Safety
/// `text` must point to `len` readable bytes and `out` to writable storage
/// for one pointer. On failure `*out` is set to null.
#[no_mangle]
pub unsafe extern "C" fn onemap_compute(
    text: *const u8,
    len: usize,
    m: usize,
    algorithm: u32,
    out: *mut *mut OnemapProfile,
) -> OnemapStatus {
    if out.is_null() {
        return OnemapStatus::NullPointer;
    }
    *out = ptr::null_mut();
    if text.is_null() {
        return OnemapStatus::NullPointer;
    }
    let bytes = slice::from_raw_parts(text, len);
    guarded(|| finish(Text::from_bytes(bytes), m, algorithm, out))
}

/// Like [`onemap_compute`] over arbitrary 64-bit symbols.
///
/// # Safety
/// `symbols` must point to `len` readable values; `out` as in
/// [`onemap_compute`].
#[no_mangle]
pub unsafe extern "C" fn onemap_compute_symbols(
    symbols: *const u64,
    len: usize,
    m: usize,
    algorithm: u32,
    out: *mut *mut OnemapProfile,
) -> OnemapStatus {
    if out.is_null() {
        return OnemapStatus::NullPointer;
    }
    *out = ptr::null_mut();
    if symbols.is_null() {
        return OnemapStatus::NullPointer;
    }
    let values = slice::from_raw_parts(symbols, len);
    guarded(|| {
        finish(
            Text::from_symbols(values.iter().copied()),
            m,
            algorithm,
            out,
        )
    })
}

/// Number of windows, `n - m + 1`. Zero for a null profile.
///
/// # Safety
/// `profile` must be null or a live profile.
#[no_mangle]
pub unsafe extern "C" fn onemap_profile_len(profile: *const OnemapProfile) -> usize {
    profile.as_ref().map_or(0, |p| p.counts.len())
}

#[derive(Clone, Copy)]
enum Column {
    Exact,
    OneMismatch,
    Total,
}

unsafe fn read(
    profile: *const OnemapProfile,
    position: usize,
    col: Column,
    out: *mut u64,
) -> OnemapStatus {
    let (Some(p), false) = (profile.as_ref(), out.is_null()) else {
        return OnemapStatus::NullPointer;
    };
    if position == 0 || position > p.counts.len() {
        return OnemapStatus::OutOfRange;
    }
    let i = position - 1;
    *out = match col {
        Column::Exact => p.counts.exact()[i],
        Column::OneMismatch => p.counts.one_mismatch()[i],
        Column::Total => p.counts.total_le1(i),
    };
    OnemapStatus::Ok
}

/// Windows equal to the window at `position`, itself included.
///
/// # Safety
/// `profile` must be null or live; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn onemap_profile_exact(
    profile: *const OnemapProfile,
    position: usize,
    out: *mut u64,
) -> OnemapStatus {
    read(profile, position, Column::Exact, out)
}

/// Windows at Hamming distance exactly one.
///
/// # Safety
/// As [`onemap_profile_exact`].
#[no_mangle]
pub unsafe extern "C" fn onemap_profile_one_mismatch(
    profile: *const OnemapProfile,
    position: usize,
    out: *mut u64,
) -> OnemapStatus {
    read(profile, position, Column::OneMismatch, out)
}

/// Windows at Hamming distance at most one.
///
/// # Safety
/// As [`onemap_profile_exact`].
#[no_mangle]
pub unsafe extern "C" fn onemap_profile_total(
    profile: *const OnemapProfile,
    position: usize,
    out: *mut u64,
) -> OnemapStatus {
    read(profile, position, Column::Total, out)
}

/// Copies all `<= 1` totals into `buf`, which must hold at least
/// [`onemap_profile_len`] values.
///
/// # Safety
/// `buf` must point to `cap` writable values.
#[no_mangle]
pub unsafe extern "C" fn onemap_profile_copy_totals(
    profile: *const OnemapProfile,
    buf: *mut u64,
    cap: usize,
) -> OnemapStatus {
    let (Some(p), false) = (profile.as_ref(), buf.is_null()) else {
        return OnemapStatus::NullPointer;
    };
    if cap < p.counts.len() {
        return OnemapStatus::OutOfRange;
    }
    let dst = slice::from_raw_parts_mut(buf, p.counts.len());
    for (i, d) in dst.iter_mut().enumerate() {
        *d = p.counts.total_le1(i);
    }
    OnemapStatus::Ok
}

/// Releases a profile. Null is ignored.
///
/// # Safety
/// `profile` must come from a compute function and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn onemap_profile_free(profile: *mut OnemapProfile) {
    if !profile.is_null() {
        drop(Box::from_raw(profile));
    }
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn onemap_status_message(status: OnemapStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        OnemapStatus::Ok => b"ok\0",
        OnemapStatus::NullPointer => b"null pointer argument\0",
        OnemapStatus::EmptyText => b"text is empty\0",
        OnemapStatus::BadWindowLength => b"window length not valid for this text and algorithm\0",
        OnemapStatus::InputTooLarge => b"input exceeds the brute-force limit\0",
        OnemapStatus::InvalidArgument => b"unknown algorithm code\0",
        OnemapStatus::OutOfRange => b"position or buffer size out of range\0",
        OnemapStatus::Internal => b"internal error\0",
    };
    s.as_ptr().cast()
}
