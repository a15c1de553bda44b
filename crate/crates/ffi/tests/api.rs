use std::ffi::{c_char, CStr, CString};
use std::ptr;

use levisom_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    lev_string_free(p);
    s
}

unsafe fn last_error() -> String {
    let p = lev_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_owned()
}

#[test]
fn distance_exact_and_float() {
    unsafe {
        let mut out = ptr::null_mut();
        let s = lev_distance(c("0").as_ptr(), c("1").as_ptr(), c("1").as_ptr(), c("1/2").as_ptr(), &mut out);
        assert_eq!(s, LevStatus::Ok);
        assert_eq!(take(out), "1/2");

        let s = lev_distance(c("<eps>").as_ptr(), c("abc").as_ptr(), c("3/2").as_ptr(), c("1").as_ptr(), &mut out);
        assert_eq!(s, LevStatus::Ok);
        assert_eq!(take(out), "9/2");

        let mut x = 0.0;
        assert_eq!(lev_distance_f64(c("000").as_ptr(), c("11").as_ptr(), 1, 1, 2, 1, &mut x), LevStatus::Ok);
        assert_eq!(x, 5.0);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut out = ptr::null_mut();
        let s = lev_distance(c("0#").as_ptr(), c("1").as_ptr(), c("1").as_ptr(), c("1").as_ptr(), &mut out);
        assert_eq!(s, LevStatus::ParseError);
        assert!(!last_error().is_empty());

        let s = lev_distance(c("0").as_ptr(), c("1").as_ptr(), c("0").as_ptr(), c("1").as_ptr(), &mut out);
        assert_eq!(s, LevStatus::InvalidArgument);

        let s = lev_distance(ptr::null(), c("1").as_ptr(), c("1").as_ptr(), c("1").as_ptr(), &mut out);
        assert_eq!(s, LevStatus::NullPointer);

        let s = lev_distance(c("0").as_ptr(), c("1").as_ptr(), c("1").as_ptr(), c("1").as_ptr(), ptr::null_mut());
        assert_eq!(s, LevStatus::NullPointer);

        let mut x = 0.0;
        assert_eq!(lev_distance_f64(c("0").as_ptr(), c("1").as_ptr(), 1, 0, 1, 1, &mut x), LevStatus::InvalidArgument);

        let mut lang = ptr::null_mut();
        assert_eq!(lev_construct_graph_language(c("cube").as_ptr(), &mut lang), LevStatus::ParseError);
        assert_eq!(lev_construct_marker_layers(0, &mut lang), LevStatus::InvalidArgument);

        assert_eq!(
            lev_distance(c("0").as_ptr(), c("1").as_ptr(), c("1").as_ptr(), c("1").as_ptr(), &mut out),
            LevStatus::Ok
        );
        lev_string_free(out);
        assert!(lev_last_error_message().is_null());
    }
}

#[test]
fn language_handles() {
    unsafe {
        let mut lang = ptr::null_mut();
        assert_eq!(lev_language_parse(c("# demo\n0\n01\n<eps>\n").as_ptr(), &mut lang), LevStatus::Ok);
        assert_eq!(lev_language_len(lang), 3);
        let mut w = ptr::null_mut();
        assert_eq!(lev_language_word(lang, 2, &mut w), LevStatus::Ok);
        assert_eq!(take(w), "<eps>");
        assert_eq!(lev_language_word(lang, 3, &mut w), LevStatus::InvalidArgument);
        lev_language_free(lang);

        assert_eq!(lev_language_parse(c("0\n0\n").as_ptr(), &mut lang), LevStatus::ParseError);
        assert_eq!(lev_language_len(ptr::null()), 0);
        lev_language_free(ptr::null_mut());
    }
}

#[test]
fn isometry_groups() {
    unsafe {
        let mut lang = ptr::null_mut();
        assert_eq!(lev_construct_graph_language(c("K4").as_ptr(), &mut lang), LevStatus::Ok);
        let mut group = ptr::null_mut();
        assert_eq!(lev_isometry_group(lang, c("1").as_ptr(), c("1").as_ptr(), &mut group), LevStatus::Ok);
        assert_eq!(lev_group_degree(group), 4);
        let mut s = ptr::null_mut();
        assert_eq!(lev_group_order(group, &mut s), LevStatus::Ok);
        assert_eq!(take(s), "24");
        assert_eq!(lev_group_json(group, &mut s), LevStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(json["order"], "24");
        assert_eq!(json["orbit_sizes"], serde_json::json!([4]));
        lev_group_free(group);
        lev_language_free(lang);

        assert_eq!(lev_construct_marker_layers(3, &mut lang), LevStatus::Ok);
        assert_eq!(lev_isometry_group(lang, c("1").as_ptr(), c("1").as_ptr(), &mut group), LevStatus::Ok);
        assert_eq!(lev_group_order(group, &mut s), LevStatus::Ok);
        assert_eq!(take(s), "34560");
        lev_group_free(group);
        lev_language_free(lang);

        assert_eq!(lev_construct_two_unary(5, &mut lang), LevStatus::Ok);
        assert_eq!(lev_language_len(lang), 11);
        lev_language_free(lang);

        assert_eq!(lev_group_order(ptr::null(), &mut s), LevStatus::NullPointer);
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(lev_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
