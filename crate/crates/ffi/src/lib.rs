//! C ABI over `nwg_core`.
//!
//! Settings and results are opaque heap handles created and released through this
//! interface. Every entry point returns an [`NwgStatus`]; on failure the message is
//! available from [`nwg_last_error`] on the same thread. Strings handed out by a result
//! stay valid until that result is freed.

#![deny(unsafe_op_in_unsafe_fn)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nwg_core::instance::{Instance, InstanceFile};
use nwg_core::report::ComputeReport;
use nwg_core::{analyze, DimensionVector, FramedSetting, NwgError, Quiver};

/// Status codes. The first four agree with the exit codes of the `nwg` tool.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NwgStatus {
    Ok = 0,
    InputError = 2,
    EmptyVariety = 3,
    Contradiction = 4,
    NullPointer = 10,
    InvalidUtf8 = 11,
    Panic = 12,
}

/// A validated framed quiver.
pub struct NwgSetting {
    instance: Instance,
}

/// The outcome of one computation.
pub struct NwgResult {
    label: CString,
    order: CString,
    json: CString,
    factor_types: Vec<CString>,
    factor_ranks: Vec<u32>,
    codim2_count: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: NwgStatus, msg: &str) -> NwgStatus {
    set_error(msg);
    status
}

fn from_core(e: NwgError) -> NwgStatus {
    let status = match e.exit_code() {
        2 => NwgStatus::InputError,
        3 => NwgStatus::EmptyVariety,
        _ => NwgStatus::Contradiction,
    };
    fail(status, &e.to_string())
}

fn guard(f: impl FnOnce() -> NwgStatus) -> NwgStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            fail(NwgStatus::Panic, &format!("internal panic: {msg}"))
        }
    }
}

/// # Safety
/// `p` must be valid for `len` reads unless `len` is 0.
unsafe fn slice<'a, T>(p: *const T, len: usize) -> &'a [T] {
    if len == 0 {
        &[]
    } else {
        // SAFETY: forwarded from the caller.
        unsafe { std::slice::from_raw_parts(p, len) }
    }
}

fn c_string(s: String) -> CString {
    CString::new(s).expect("reports contain no nul bytes")
}

/// Message of the last failed call on this thread, or null. Owned by the library; valid
/// until the next call on this thread.
#[no_mangle]
pub extern "C" fn nwg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn nwg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses an instance in the JSON file format.
///
/// # Safety
/// `json` must be null or a nul-terminated string; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn nwg_setting_from_json(json: *const c_char, out: *mut *mut NwgSetting) -> NwgStatus {
    guard(|| {
        if json.is_null() || out.is_null() {
            return fail(NwgStatus::NullPointer, "null argument");
        }
        // SAFETY: checked non-null; the caller promises nul termination.
        let text = match unsafe { CStr::from_ptr(json) }.to_str() {
            Ok(t) => t,
            Err(e) => return fail(NwgStatus::InvalidUtf8, &format!("instance text: {e}")),
        };
        match InstanceFile::parse(text).and_then(|f| f.validate()) {
            Ok(instance) => {
                // SAFETY: checked non-null; the caller promises it is writable.
                unsafe { *out = Box::into_raw(Box::new(NwgSetting { instance })) };
                NwgStatus::Ok
            }
            Err(e) => from_core(e),
        }
    })
}

/// Builds a setting from raw arrays on `n` vertices named `a0, a1, ...`.
///
/// `loops`, `v` and `w` have length `n`; `edges` is the symmetric `n * n` edge-count
/// matrix in row-major order with a zero diagonal.
///
/// # Safety
/// Each array pointer must be valid for reads of the stated length; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nwg_setting_from_arrays(
    n: usize,
    loops: *const u32,
    edges: *const u32,
    v: *const i64,
    w: *const i64,
    out: *mut *mut NwgSetting,
) -> NwgStatus {
    guard(|| {
        if out.is_null() || (n > 0 && (loops.is_null() || edges.is_null() || v.is_null() || w.is_null())) {
            return fail(NwgStatus::NullPointer, "null argument");
        }
        let Some(cells) = n.checked_mul(n) else {
            return fail(NwgStatus::InputError, "vertex count too large");
        };
        // SAFETY: non-null when n > 0; the caller promises the lengths.
        let (loops, flat, v, w) =
            unsafe { (slice(loops, n), slice(edges, cells), slice(v, n), slice(w, n)) };
        let matrix = flat.chunks(n.max(1)).map(<[u32]>::to_vec).collect();
        let built = Quiver::new(loops.to_vec(), matrix).and_then(|q| {
            FramedSetting::extend(&q, &DimensionVector(v.to_vec()), &DimensionVector(w.to_vec()))
        });
        match built {
            Ok(setting) => {
                let names = (0..n).map(|i| format!("a{i}")).collect();
                let instance = Instance { names, setting };
                // SAFETY: checked non-null.
                unsafe { *out = Box::into_raw(Box::new(NwgSetting { instance })) };
                NwgStatus::Ok
            }
            Err(e) => from_core(e),
        }
    })
}

/// Releases a setting. Null is ignored.
///
/// # Safety
/// `setting` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nwg_setting_free(setting: *mut NwgSetting) {
    if !setting.is_null() {
        // SAFETY: the caller hands back ownership of a live handle.
        drop(unsafe { Box::from_raw(setting) });
    }
}

/// Computes the Namikawa-Weyl group of a setting.
///
/// # Safety
/// `setting` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nwg_compute(setting: *const NwgSetting, out: *mut *mut NwgResult) -> NwgStatus {
    guard(|| {
        if setting.is_null() || out.is_null() {
            return fail(NwgStatus::NullPointer, "null argument");
        }
        // SAFETY: checked non-null; the caller promises a live handle.
        let inst = unsafe { &(*setting).instance };
        let a = match analyze(&inst.setting) {
            Ok(a) => a,
            Err(e) => return from_core(e),
        };
        let report = ComputeReport::new(inst, &a);
        let json = serde_json::to_string_pretty(&report).expect("reports serialize");
        let result = NwgResult {
            label: c_string(report.group.clone()),
            order: c_string(report.order.clone()),
            json: c_string(json),
            factor_types: a.group.factors.iter().map(|f| c_string(f.cartan_type.to_string())).collect(),
            factor_ranks: a.group.factors.iter().map(|f| f.cartan_type.rank as u32).collect(),
            codim2_count: a.roots.len(),
        };
        // SAFETY: checked non-null.
        unsafe { *out = Box::into_raw(Box::new(result)) };
        NwgStatus::Ok
    })
}

/// Number of irreducible factors; 0 for the trivial group or a null handle.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nwg_result_factor_count(result: *const NwgResult) -> usize {
    // SAFETY: the caller promises null or a live handle.
    unsafe { result.as_ref() }.map_or(0, |r| r.factor_types.len())
}

/// Cartan type of factor `index`, such as `"B2"`, or null when out of range.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nwg_result_factor_type(result: *const NwgResult, index: usize) -> *const c_char {
    // SAFETY: the caller promises null or a live handle.
    unsafe { result.as_ref() }
        .and_then(|r| r.factor_types.get(index))
        .map_or(ptr::null(), |s| s.as_ptr())
}

/// Rank of factor `index`, or 0 when out of range.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nwg_result_factor_rank(result: *const NwgResult, index: usize) -> u32 {
    // SAFETY: the caller promises null or a live handle.
    unsafe { result.as_ref() }.and_then(|r| r.factor_ranks.get(index).copied()).unwrap_or(0)
}

/// Number of codimension-2 roots found.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nwg_result_codim2_count(result: *const NwgResult) -> usize {
    // SAFETY: the caller promises null or a live handle.
    unsafe { result.as_ref() }.map_or(0, |r| r.codim2_count)
}

/// Group label such as `"A2 x A1"`, `"1"` when trivial.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nwg_result_label(result: *const NwgResult) -> *const c_char {
    // SAFETY: the caller promises null or a live handle.
    unsafe { result.as_ref() }.map_or(ptr::null(), |r| r.label.as_ptr())
}

/// Group order in decimal.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nwg_result_order(result: *const NwgResult) -> *const c_char {
    // SAFETY: the caller promises null or a live handle.
    unsafe { result.as_ref() }.map_or(ptr::null(), |r| r.order.as_ptr())
}

/// The full compute report as JSON, as printed by `nwg compute --format json`.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nwg_result_json(result: *const NwgResult) -> *const c_char {
    // SAFETY: the caller promises null or a live handle.
    unsafe { result.as_ref() }.map_or(ptr::null(), |r| r.json.as_ptr())
}

/// Releases a result. Null is ignored.
///
/// # Safety
/// `result` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nwg_result_free(result: *mut NwgResult) {
    if !result.is_null() {
        // SAFETY: the caller hands back ownership of a live handle.
        drop(unsafe { Box::from_raw(result) });
    }
}
