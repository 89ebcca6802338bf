use std::ffi::{CStr, CString};
use std::ptr;

use nwg_core::report::{ComputeReport, SCHEMA_VERSION};
use nwg_ffi::*;

fn fixture(name: &str) -> CString {
    let path = format!("{}/../../fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
    CString::new(std::fs::read_to_string(path).unwrap()).unwrap()
}

fn text(p: *const std::ffi::c_char) -> String {
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn compute(json: &CString) -> Result<*mut NwgResult, (NwgStatus, String)> {
    let mut setting = ptr::null_mut();
    let status = unsafe { nwg_setting_from_json(json.as_ptr(), &mut setting) };
    if status != NwgStatus::Ok {
        return Err((status, text(nwg_last_error())));
    }
    let mut result = ptr::null_mut();
    let status = unsafe { nwg_compute(setting, &mut result) };
    unsafe { nwg_setting_free(setting) };
    if status != NwgStatus::Ok {
        return Err((status, text(nwg_last_error())));
    }
    Ok(result)
}

#[test]
fn b2_through_the_handles() {
    let r = compute(&fixture("b2")).unwrap();
    unsafe {
        assert_eq!(text(nwg_result_label(r)), "B2 x A1");
        assert_eq!(text(nwg_result_order(r)), "16");
        assert_eq!(nwg_result_factor_count(r), 2);
        assert_eq!(text(nwg_result_factor_type(r, 0)), "B2");
        assert_eq!(nwg_result_factor_rank(r, 0), 2);
        assert_eq!(text(nwg_result_factor_type(r, 1)), "A1");
        assert!(nwg_result_factor_type(r, 2).is_null());
        assert_eq!(nwg_result_factor_rank(r, 2), 0);
        assert!(nwg_result_codim2_count(r) >= 3);
        let report: ComputeReport = serde_json::from_str(&text(nwg_result_json(r))).unwrap();
        assert_eq!(report.schema_version, SCHEMA_VERSION);
        assert_eq!(report.group, "B2 x A1");
        nwg_result_free(r);
    }
    assert!(nwg_last_error().is_null());
}

#[test]
fn json_matches_the_command_line() {
    let path = format!("{}/../../fixtures/g2.json", env!("CARGO_MANIFEST_DIR"));
    let cli = nwg_core::cli::run(["nwg", "compute", &path, "--format", "json"]);
    let r = compute(&fixture("g2")).unwrap();
    assert_eq!(text(unsafe { nwg_result_json(r) }) + "\n", cli.stdout);
    unsafe { nwg_result_free(r) };
}

#[test]
fn arrays_constructor() {
    // Affine A2 triangle, v = 2 delta, w = e_0.
    let loops = [0u32; 3];
    let edges = [0u32, 1, 1, 1, 0, 1, 1, 1, 0];
    let v = [2i64, 2, 2];
    let w = [1i64, 0, 0];
    let mut s = ptr::null_mut();
    let status =
        unsafe { nwg_setting_from_arrays(3, loops.as_ptr(), edges.as_ptr(), v.as_ptr(), w.as_ptr(), &mut s) };
    assert_eq!(status, NwgStatus::Ok);
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { nwg_compute(s, &mut r) }, NwgStatus::Ok);
    assert_eq!(text(unsafe { nwg_result_label(r) }), "A2 x A1");
    assert_eq!(text(unsafe { nwg_result_order(r) }), "12");
    unsafe {
        nwg_result_free(r);
        nwg_setting_free(s);
    }
}

#[test]
fn asymmetric_edge_matrix_is_an_input_error() {
    let loops = [0u32; 2];
    let edges = [0u32, 1, 0, 0];
    let v = [1i64, 1];
    let w = [1i64, 0];
    let mut s = ptr::null_mut();
    let status =
        unsafe { nwg_setting_from_arrays(2, loops.as_ptr(), edges.as_ptr(), v.as_ptr(), w.as_ptr(), &mut s) };
    assert_eq!(status, NwgStatus::InputError);
    assert!(s.is_null());
    assert!(!nwg_last_error().is_null());
}

#[test]
fn error_codes_match_exit_codes() {
    let (status, msg) = compute(&fixture("not_a_root")).unwrap_err();
    assert_eq!(status, NwgStatus::EmptyVariety);
    assert_eq!(status as i32, 3);
    assert!(msg.contains("empty variety"), "{msg}");

    let bad = CString::new(r#"{"vertices": ["a"], "edges": [["a", "z", 1]], "v": {"a": 1}}"#).unwrap();
    let (status, msg) = compute(&bad).unwrap_err();
    assert_eq!(status as i32, 2);
    assert!(msg.contains("edges[0]"), "{msg}");
}

#[test]
fn null_and_utf8_are_rejected() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { nwg_setting_from_json(ptr::null(), &mut s) }, NwgStatus::NullPointer);
    let json = fixture("a1");
    assert_eq!(unsafe { nwg_setting_from_json(json.as_ptr(), ptr::null_mut()) }, NwgStatus::NullPointer);
    assert_eq!(unsafe { nwg_compute(ptr::null(), ptr::null_mut()) }, NwgStatus::NullPointer);
    let invalid = CString::new(vec![0xffu8, 0xfe]).unwrap();
    assert_eq!(unsafe { nwg_setting_from_json(invalid.as_ptr(), &mut s) }, NwgStatus::InvalidUtf8);
    unsafe {
        nwg_setting_free(ptr::null_mut());
        nwg_result_free(ptr::null_mut());
        assert_eq!(nwg_result_factor_count(ptr::null()), 0);
        assert!(nwg_result_label(ptr::null()).is_null());
    }
}

#[test]
fn trivial_group_has_no_factors() {
    let json = CString::new(r#"{"vertices": ["a"], "v": {"a": 0}}"#).unwrap();
    let r = compute(&json).unwrap();
    unsafe {
        assert_eq!(nwg_result_factor_count(r), 0);
        assert_eq!(text(nwg_result_label(r)), "1");
        assert_eq!(text(nwg_result_order(r)), "1");
        nwg_result_free(r);
    }
}

#[test]
fn version_is_the_package_version() {
    assert_eq!(text(nwg_version()), env!("CARGO_PKG_VERSION"));
}
