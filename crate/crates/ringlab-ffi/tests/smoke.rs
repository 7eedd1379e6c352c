//! Drives the C ABI the way a foreign binding would: through raw pointers,
//! status codes, and the string-ownership contract.

use ringlab_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

const Z4: &str = "ring Z4\norders 4\none 1\nmul 1 1 : 1\nend\n";

unsafe fn parse(text: &str) -> *mut RinglabRing {
    let c = CString::new(text).unwrap();
    let mut out: *mut RinglabRing = ptr::null_mut();
    let status = ringlab_ring_parse(c.as_ptr(), &mut out);
    assert_eq!(status, RinglabStatus::Ok);
    assert!(!out.is_null());
    out
}

unsafe fn take_string(p: *mut i8) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_string_lossy().into_owned();
    ringlab_string_free(p);
    s
}

#[test]
fn parse_query_free() {
    unsafe {
        let ring = parse(Z4);
        let mut order = 0u64;
        assert_eq!(ringlab_ring_order(ring, &mut order), RinglabStatus::Ok);
        assert_eq!(order, 4);

        let mut name: *mut i8 = ptr::null_mut();
        assert_eq!(ringlab_ring_name(ring, &mut name), RinglabStatus::Ok);
        assert_eq!(take_string(name), "Z4");

        let mut text: *mut i8 = ptr::null_mut();
        assert_eq!(ringlab_ring_serialize(ring, &mut text), RinglabStatus::Ok);
        assert_eq!(take_string(text), Z4);

        let mut radical: *mut i8 = ptr::null_mut();
        assert_eq!(ringlab_ring_radical(ring, &mut radical), RinglabStatus::Ok);
        assert_eq!(take_string(radical), "kind: ideal\n(0)\n(2)\n");

        ringlab_ring_free(ring);
    }
}

#[test]
fn predicates_and_witnesses() {
    unsafe {
        let ring = parse(Z4);
        let name = CString::new("commutative").unwrap();
        let mut holds = -1i32;
        let mut witness: *mut i8 = ptr::null_mut();
        assert_eq!(
            ringlab_ring_predicate(ring, name.as_ptr(), &mut holds, &mut witness),
            RinglabStatus::Ok
        );
        assert_eq!(holds, 1);
        assert!(witness.is_null());

        let name = CString::new("boolean").unwrap();
        assert_eq!(
            ringlab_ring_predicate(ring, name.as_ptr(), &mut holds, &mut witness),
            RinglabStatus::Ok
        );
        assert_eq!(holds, 0);
        assert_eq!(take_string(witness), "(2)");

        let bogus = CString::new("frobnitz").unwrap();
        assert_eq!(
            ringlab_ring_predicate(ring, bogus.as_ptr(), &mut holds, ptr::null_mut()),
            RinglabStatus::UnknownName
        );
        let msg = CStr::from_ptr(ringlab_last_error_message()).to_string_lossy();
        assert!(msg.contains("frobnitz"));

        ringlab_ring_free(ring);
    }
}

#[test]
fn construction_through_the_abi() {
    unsafe {
        let ring = parse(Z4);
        let spec = CString::new("matrix:2").unwrap();
        let mut m: *mut RinglabRing = ptr::null_mut();
        assert_eq!(
            ringlab_ring_construct(ring, spec.as_ptr(), &mut m),
            RinglabStatus::Ok
        );
        let mut order = 0u64;
        assert_eq!(ringlab_ring_order(m, &mut order), RinglabStatus::Ok);
        assert_eq!(order, 256);

        let name = CString::new("j-reversible").unwrap();
        let mut holds = -1i32;
        assert_eq!(
            ringlab_ring_predicate(m, name.as_ptr(), &mut holds, ptr::null_mut()),
            RinglabStatus::Ok
        );
        assert_eq!(holds, 0);

        // over the order cap
        let spec = CString::new("matrix:3").unwrap();
        let mut too_big: *mut RinglabRing = ptr::null_mut();
        assert_eq!(
            ringlab_ring_construct(ring, spec.as_ptr(), &mut too_big),
            RinglabStatus::LimitExceeded
        );

        let spec = CString::new("nonsense").unwrap();
        assert_eq!(
            ringlab_ring_construct(ring, spec.as_ptr(), &mut too_big),
            RinglabStatus::UnknownName
        );

        ringlab_ring_free(m);
        ringlab_ring_free(ring);
    }
}

#[test]
fn error_paths() {
    unsafe {
        let mut out: *mut RinglabRing = ptr::null_mut();
        assert_eq!(
            ringlab_ring_parse(ptr::null(), &mut out),
            RinglabStatus::NullArgument
        );

        let junk = CString::new("not a ring").unwrap();
        assert_eq!(
            ringlab_ring_parse(junk.as_ptr(), &mut out),
            RinglabStatus::ParseError
        );

        let invalid = CString::new("ring B\norders 4\none 1\nmul 1 1 : 2\nend\n").unwrap();
        assert_eq!(
            ringlab_ring_parse(invalid.as_ptr(), &mut out),
            RinglabStatus::ValidationFailed
        );
        let msg = CStr::from_ptr(ringlab_last_error_message()).to_string_lossy();
        assert!(msg.contains("identity"), "{msg}");

        let bad_utf8 = [0xffu8, 0xfe, 0x00];
        assert_eq!(
            ringlab_ring_parse(bad_utf8.as_ptr() as *const i8, &mut out),
            RinglabStatus::InvalidUtf8
        );

        let mut order = 0u64;
        assert_eq!(
            ringlab_ring_order(ptr::null(), &mut order),
            RinglabStatus::NullArgument
        );

        // frees of null are harmless
        ringlab_ring_free(ptr::null_mut());
        ringlab_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_through_the_abi() {
    unsafe {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
        let dir = CString::new(dir.to_str().unwrap()).unwrap();
        let id = CString::new("P2.3").unwrap();
        let mut report: *mut i8 = ptr::null_mut();
        let mut failures = u64::MAX;
        assert_eq!(
            ringlab_verify(
                dir.as_ptr(),
                id.as_ptr(),
                0,
                200,
                &mut report,
                &mut failures
            ),
            RinglabStatus::Ok
        );
        assert_eq!(failures, 0);
        let text = take_string(report);
        assert!(text.contains("CHECK P2.3"));
        assert!(text.contains("SUMMARY "));

        let bogus = CString::new("T9.9").unwrap();
        assert_eq!(
            ringlab_verify(
                dir.as_ptr(),
                bogus.as_ptr(),
                0,
                200,
                &mut report,
                ptr::null_mut()
            ),
            RinglabStatus::UnknownName
        );
    }
}

#[test]
fn header_is_generated_and_committed() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/ringlab.h");
    let text = std::fs::read_to_string(header).expect("header exists");
    for symbol in [
        "ringlab_ring_parse",
        "ringlab_ring_free",
        "ringlab_ring_order",
        "ringlab_ring_predicate",
        "ringlab_ring_construct",
        "ringlab_ring_radical",
        "ringlab_string_free",
        "ringlab_last_error_message",
        "RINGLAB_STATUS_OK",
    ] {
        assert!(text.contains(symbol), "header missing {symbol}");
    }
}
