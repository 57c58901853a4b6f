//! C ABI for the cwforest library.
//!
//! Rationals cross the boundary as opaque handles; every fallible entry
//! point returns a status code and writes results through out-pointers.
//! Strings returned by this library must be released with
//! [`cw_string_free`], handles with [`cw_rational_free`].
//!
//! Safety contract for the whole surface: pointer arguments must be null
//! or valid, and handles must come from this library and be freed once.

#![allow(clippy::missing_safety_doc)]

use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use cwforest::forest::{self, ForestConfig, TreeAddress};
use cwforest::matrix::Letter;
use cwforest::verify;
use cwforest::Rational;

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CwStatus {
    Ok = 0,
    /// A verification run completed and found a counterexample witness.
    Witness = 1,
    /// Malformed input: unparsable rational, zero parameter, bad index.
    InvalidArgument = 2,
    /// A resource cap (depth, height, word length) was breached.
    ResourceCap = 3,
    /// A required pointer argument was null.
    NullPointer = 4,
}

/// Opaque handle to a reduced positive rational.
pub struct CwRational(Rational);

unsafe fn box_out(q: Rational, out: *mut *mut CwRational) -> CwStatus {
    *out = Box::into_raw(Box::new(CwRational(q)));
    CwStatus::Ok
}

unsafe fn string_out(s: String, out: *mut *mut c_char) -> CwStatus {
    // interior NULs cannot occur in our renderings
    let c = CString::new(s).unwrap();
    *out = c.into_raw();
    CwStatus::Ok
}

unsafe fn rational_ref<'a>(handle: *const CwRational) -> Option<&'a Rational> {
    handle.as_ref().map(|h| &h.0)
}

/// Parses "a/b" or "a" into a new rational handle.
#[no_mangle]
pub unsafe extern "C" fn cw_rational_parse(
    text: *const c_char,
    out: *mut *mut CwRational,
) -> CwStatus {
    if text.is_null() || out.is_null() {
        return CwStatus::NullPointer;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return CwStatus::InvalidArgument;
    };
    match text.parse::<Rational>() {
        Ok(q) => box_out(q, out),
        Err(_) => CwStatus::InvalidArgument,
    }
}

/// Builds the reduced form of n/d. Rejects zero on either side.
#[no_mangle]
pub unsafe extern "C" fn cw_rational_new(
    n: u64,
    d: u64,
    out: *mut *mut CwRational,
) -> CwStatus {
    if out.is_null() {
        return CwStatus::NullPointer;
    }
    match Rational::from_u64(n, d) {
        Ok(q) => box_out(q, out),
        Err(_) => CwStatus::InvalidArgument,
    }
}

/// Renders "a/b", or plain "a" for integers. Free with cw_string_free.
#[no_mangle]
pub unsafe extern "C" fn cw_rational_to_string(
    q: *const CwRational,
    out: *mut *mut c_char,
) -> CwStatus {
    if out.is_null() {
        return CwStatus::NullPointer;
    }
    match rational_ref(q) {
        Some(q) => string_out(q.to_string(), out),
        None => CwStatus::NullPointer,
    }
}

#[no_mangle]
pub unsafe extern "C" fn cw_rational_free(q: *mut CwRational) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

#[no_mangle]
pub unsafe extern "C" fn cw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Left and right children of w in the (u,v) forest.
#[no_mangle]
pub unsafe extern "C" fn cw_children(
    u: u64,
    v: u64,
    w: *const CwRational,
    left: *mut *mut CwRational,
    right: *mut *mut CwRational,
) -> CwStatus {
    if left.is_null() || right.is_null() {
        return CwStatus::NullPointer;
    }
    let Some(w) = rational_ref(w) else {
        return CwStatus::NullPointer;
    };
    let Ok(cfg) = ForestConfig::new(u, v) else {
        return CwStatus::InvalidArgument;
    };
    let (l, r) = forest::children(cfg, w);
    box_out(l, left);
    box_out(r, right)
}

/// Writes 1 to `out` if q lies in the closed orphan interval [1/u, v].
#[no_mangle]
pub unsafe extern "C" fn cw_is_orphan(
    u: u64,
    v: u64,
    q: *const CwRational,
    out: *mut i32,
) -> CwStatus {
    if out.is_null() {
        return CwStatus::NullPointer;
    }
    let Some(q) = rational_ref(q) else {
        return CwStatus::NullPointer;
    };
    let Ok(cfg) = ForestConfig::new(u, v) else {
        return CwStatus::InvalidArgument;
    };
    *out = i32::from(forest::is_orphan(cfg, q));
    CwStatus::Ok
}

/// Parent of q and the side it hangs on ('L' or 'R'). For an orphan,
/// writes null to `parent` and 0 to `letter`.
#[no_mangle]
pub unsafe extern "C" fn cw_parent(
    u: u64,
    v: u64,
    q: *const CwRational,
    parent: *mut *mut CwRational,
    letter: *mut c_char,
) -> CwStatus {
    if parent.is_null() || letter.is_null() {
        return CwStatus::NullPointer;
    }
    let Some(q) = rational_ref(q) else {
        return CwStatus::NullPointer;
    };
    let Ok(cfg) = ForestConfig::new(u, v) else {
        return CwStatus::InvalidArgument;
    };
    match forest::parent(cfg, q) {
        Some((p, side)) => {
            *letter = match side {
                Letter::L => b'L' as c_char,
                Letter::R => b'R' as c_char,
            };
            box_out(p, parent)
        }
        None => {
            *parent = ptr::null_mut();
            *letter = 0;
            CwStatus::Ok
        }
    }
}

/// Decomposes q into its orphan root, root-to-q path word, and row number.
/// The path is returned as a string over 'L'/'R'; free it with
/// cw_string_free.
#[no_mangle]
pub unsafe extern "C" fn cw_locate(
    u: u64,
    v: u64,
    q: *const CwRational,
    root: *mut *mut CwRational,
    path: *mut *mut c_char,
    row: *mut u32,
) -> CwStatus {
    if root.is_null() || path.is_null() || row.is_null() {
        return CwStatus::NullPointer;
    }
    let Some(q) = rational_ref(q) else {
        return CwStatus::NullPointer;
    };
    let Ok(cfg) = ForestConfig::new(u, v) else {
        return CwStatus::InvalidArgument;
    };
    let (orphan, word, addr) = forest::decompose(cfg, q);
    *row = addr.row;
    string_out(word.to_string(), path);
    box_out(orphan, root)
}

/// Descends from `root` along a path word such as "RLR".
#[no_mangle]
pub unsafe extern "C" fn cw_descend(
    u: u64,
    v: u64,
    root: *const CwRational,
    path: *const c_char,
    out: *mut *mut CwRational,
) -> CwStatus {
    if path.is_null() || out.is_null() {
        return CwStatus::NullPointer;
    }
    let Some(root) = rational_ref(root) else {
        return CwStatus::NullPointer;
    };
    let Ok(cfg) = ForestConfig::new(u, v) else {
        return CwStatus::InvalidArgument;
    };
    let Ok(path) = CStr::from_ptr(path).to_str() else {
        return CwStatus::InvalidArgument;
    };
    let Ok(word) = path.parse::<cwforest::PathWord>() else {
        return CwStatus::InvalidArgument;
    };
    let addr = TreeAddress::from_word(&word);
    box_out(forest::vertex_at(cfg, root, &addr), out)
}

/// Renders row n of the (u,v) tree at `root` as a space-separated string.
#[no_mangle]
pub unsafe extern "C" fn cw_row(
    u: u64,
    v: u64,
    root: *const CwRational,
    n: u32,
    out: *mut *mut c_char,
) -> CwStatus {
    if out.is_null() {
        return CwStatus::NullPointer;
    }
    let Some(root) = rational_ref(root) else {
        return CwStatus::NullPointer;
    };
    let Ok(cfg) = ForestConfig::new(u, v) else {
        return CwStatus::InvalidArgument;
    };
    match forest::row(cfg, root, n) {
        Ok(entries) => {
            let text = entries
                .iter()
                .map(Rational::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            string_out(text, out)
        }
        Err(_) => CwStatus::ResourceCap,
    }
}

/// Newman successor 1/(2*floor(q) + 1 - q).
#[no_mangle]
pub unsafe extern "C" fn cw_newman_successor(
    q: *const CwRational,
    out: *mut *mut CwRational,
) -> CwStatus {
    if out.is_null() {
        return CwStatus::NullPointer;
    }
    match rational_ref(q) {
        Some(q) => box_out(cwforest::classical::newman_successor(q), out),
        None => CwStatus::NullPointer,
    }
}

/// Continued fraction of q as "[a0,a1,...,ak]". Free with cw_string_free.
#[no_mangle]
pub unsafe extern "C" fn cw_continued_fraction(
    q: *const CwRational,
    out: *mut *mut c_char,
) -> CwStatus {
    if out.is_null() {
        return CwStatus::NullPointer;
    }
    let Some(q) = rational_ref(q) else {
        return CwStatus::NullPointer;
    };
    let coeffs = q
        .continued_fraction()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",");
    string_out(format!("[{coeffs}]"), out)
}

unsafe fn verify_out(
    result: Result<verify::VerificationReport, verify::VerifyError>,
    report: *mut *mut c_char,
) -> CwStatus {
    match result {
        Ok(r) => {
            let passed = r.passed;
            let json = serde_json_string(&r);
            string_out(json, report);
            if passed {
                CwStatus::Ok
            } else {
                CwStatus::Witness
            }
        }
        Err(verify::VerifyError::HeightCap(_, _)) => CwStatus::ResourceCap,
        Err(verify::VerifyError::Forest(forest::ForestError::DepthCap(_, _))) => {
            CwStatus::ResourceCap
        }
        Err(verify::VerifyError::Matrix(cwforest::matrix::MatrixError::WordLengthCap(_, _))) => {
            CwStatus::ResourceCap
        }
        Err(_) => CwStatus::InvalidArgument,
    }
}

fn serde_json_string(report: &verify::VerificationReport) -> String {
    // report fields are plain scalars and strings; serialization cannot fail
    serde_json::to_string(report).unwrap()
}

/// Checks the symmetry identity up to `depth`; writes the JSON report.
#[no_mangle]
pub unsafe extern "C" fn cw_verify_symmetry(
    u: u64,
    v: u64,
    root: *const CwRational,
    depth: u32,
    report: *mut *mut c_char,
) -> CwStatus {
    if report.is_null() {
        return CwStatus::NullPointer;
    }
    let Some(root) = rational_ref(root) else {
        return CwStatus::NullPointer;
    };
    verify_out(verify::verify_symmetry(u, v, root, depth), report)
}

/// Decompose-and-replay sweep over heights up to `height_bound`.
#[no_mangle]
pub unsafe extern "C" fn cw_verify_partition(
    u: u64,
    v: u64,
    height_bound: u64,
    report: *mut *mut c_char,
) -> CwStatus {
    if report.is_null() {
        return CwStatus::NullPointer;
    }
    verify_out(verify::verify_partition(u, v, height_bound), report)
}

/// Child-range inequalities over heights up to `height_bound`.
#[no_mangle]
pub unsafe extern "C" fn cw_verify_range(
    u: u64,
    v: u64,
    height_bound: u64,
    report: *mut *mut c_char,
) -> CwStatus {
    if report.is_null() {
        return CwStatus::NullPointer;
    }
    verify_out(verify::verify_range(u, v, height_bound), report)
}

/// Bounded freeness certificate over words of length up to `maxlen`.
#[no_mangle]
pub unsafe extern "C" fn cw_verify_freeness(
    u: u64,
    v: u64,
    maxlen: usize,
    report: *mut *mut c_char,
) -> CwStatus {
    if report.is_null() {
        return CwStatus::NullPointer;
    }
    verify_out(verify::verify_freeness(u, v, maxlen), report)
}
