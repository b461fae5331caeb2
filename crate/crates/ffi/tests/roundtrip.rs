//! Exercises the C ABI from Rust exactly the way a C caller would: through
//! raw pointers, status codes, and explicit frees.

use std::ffi::{CStr, CString};
use std::ptr;

use liealg_ffi::*;

fn last_error() -> String {
    unsafe {
        CStr::from_ptr(liealg_last_error_message())
            .to_string_lossy()
            .into_owned()
    }
}

fn build(name: &str, prime: u64) -> *mut LieAlgebraHandle {
    let cname = CString::new(name).unwrap();
    let mut handle: *mut LieAlgebraHandle = ptr::null_mut();
    let status = unsafe { liealg_catalog_build(cname.as_ptr(), prime, &mut handle) };
    assert_eq!(status, LieAlgStatus::Ok, "{name}: {}", last_error());
    assert!(!handle.is_null());
    handle
}

fn take_string(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s).to_string_lossy().into_owned() };
    unsafe { liealg_string_free(s) };
    owned
}

#[test]
fn catalog_build_and_dimensions() {
    let h = build("sl:2", 0);
    unsafe {
        assert_eq!(liealg_algebra_dim(h), 3);
        assert_eq!(liealg_algebra_center_dim(h), 0);
        assert_eq!(liealg_algebra_derived_dim(h), 3);

        let (mut der, mut inner) = (0usize, 0usize);
        assert_eq!(
            liealg_algebra_derivation_dims(h, &mut der, &mut inner),
            LieAlgStatus::Ok
        );
        assert_eq!((der, inner), (3, 3));

        let mut complete = false;
        assert_eq!(liealg_algebra_is_complete(h, &mut complete), LieAlgStatus::Ok);
        assert!(complete);
        liealg_algebra_free(h);
    }
}

#[test]
fn json_roundtrip_through_the_boundary() {
    let h = build("current_sl2:2", 0);
    unsafe {
        let mut text: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(liealg_algebra_to_json(h, &mut text), LieAlgStatus::Ok);
        let json = take_string(text);

        let cjson = CString::new(json).unwrap();
        let mut h2: *mut LieAlgebraHandle = ptr::null_mut();
        assert_eq!(
            liealg_algebra_from_json(cjson.as_ptr(), &mut h2),
            LieAlgStatus::Ok,
            "{}",
            last_error()
        );
        assert_eq!(liealg_algebra_dim(h2), 6);

        let mut complete = false;
        assert_eq!(liealg_algebra_is_complete(h2, &mut complete), LieAlgStatus::Ok);
        assert!(!complete, "current_sl2(2) has an outer derivation");

        liealg_algebra_free(h);
        liealg_algebra_free(h2);
    }
}

#[test]
fn verify_certificate_arrives_as_json() {
    let h = build("sl:3", 0);
    unsafe {
        let mut text: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(liealg_algebra_verify_json(h, &mut text), LieAlgStatus::Ok);
        let cert: serde_json::Value = serde_json::from_str(&take_string(text)).unwrap();
        assert_eq!(cert["overall"], "pass");
        assert_eq!(cert["claims"][0]["name"], "hypothesis_perfect");
        liealg_algebra_free(h);
    }
}

#[test]
fn status_codes_distinguish_failure_kinds() {
    unsafe {
        let mut h: *mut LieAlgebraHandle = ptr::null_mut();

        let garbage = CString::new("{not json").unwrap();
        assert_eq!(
            liealg_algebra_from_json(garbage.as_ptr(), &mut h),
            LieAlgStatus::ParseError
        );
        assert!(h.is_null());

        let broken = CString::new(
            r#"{"field":{"kind":"rational"},"dim":3,"table":[
                {"i":0,"j":1,"coeffs":[[2,"1"]]},
                {"i":0,"j":2,"coeffs":[[0,"-2"]]},
                {"i":1,"j":2,"coeffs":[[0,"2"]]}]}"#,
        )
        .unwrap();
        assert_eq!(
            liealg_algebra_from_json(broken.as_ptr(), &mut h),
            LieAlgStatus::AxiomError
        );
        assert!(last_error().contains("jacobi"), "got: {}", last_error());

        let name = CString::new("sl:2").unwrap();
        assert_eq!(
            liealg_catalog_build(name.as_ptr(), 4, &mut h),
            LieAlgStatus::InvalidArgument,
            "4 is not prime"
        );
        assert_eq!(
            liealg_catalog_build(name.as_ptr(), 2, &mut h),
            LieAlgStatus::InvalidArgument,
            "sl_2 over F_2 is refused"
        );

        assert_eq!(
            liealg_algebra_from_json(ptr::null(), &mut h),
            LieAlgStatus::InvalidArgument
        );
        assert_eq!(liealg_algebra_dim(ptr::null()), 0);
        liealg_algebra_free(ptr::null_mut());
        liealg_string_free(ptr::null_mut());
    }
}

#[test]
fn torus_radical_crosses_the_boundary() {
    unsafe {
        let exponents: [i64; 4] = [0, 1, -1, 0];
        let mut text: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(
            liealg_torus_radical_json(2, 5, exponents.as_ptr(), &mut text),
            LieAlgStatus::Ok
        );
        let rows: Vec<Vec<String>> = serde_json::from_str(&take_string(text)).unwrap();
        assert_eq!(rows, vec![vec!["5", "0"], vec!["0", "5"]]);

        // Order 0 means a parameter of infinite order: the radical is the
        // integer kernel of E, which is trivial here.
        assert_eq!(
            liealg_torus_radical_json(2, 0, exponents.as_ptr(), &mut text),
            LieAlgStatus::Ok
        );
        let rows: Vec<Vec<String>> = serde_json::from_str(&take_string(text)).unwrap();
        assert!(rows.is_empty());

        let skewed: [i64; 4] = [0, 1, 1, 0];
        assert_eq!(
            liealg_torus_radical_json(2, 5, skewed.as_ptr(), &mut text),
            LieAlgStatus::InvalidArgument,
            "non-antisymmetric exponent matrix is rejected"
        );
    }
}
