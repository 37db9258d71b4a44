//! Exercises the C ABI from Rust: handle lifecycle, status codes, error
//! messages and output buffers.

use std::ffi::{CStr, CString};
use std::ptr;

use sg_ffi::*;

#[test]
fn parse_query_serialize_free() {
    let text = CString::new("p sg 3 2\ne 0 1 +\ne 1 2 -\n").unwrap();
    let mut g: *mut SgGraph = ptr::null_mut();
    unsafe {
        assert_eq!(sg_graph_parse(text.as_ptr(), &mut g), SgStatus::SgOk);
        assert_eq!(sg_graph_vertex_count(g), 3);
        assert_eq!(sg_graph_edge_count(g), 2);
        let s = sg_graph_to_text(g);
        assert!(!s.is_null());
        let round = CStr::from_ptr(s).to_str().unwrap().to_owned();
        sg_string_free(s);
        assert!(round.contains("p sg 3 2"));
        sg_graph_free(g);
    }
}

#[test]
fn parse_errors_set_message() {
    let text = CString::new("p sg 2 1\ne 0 5 +\n").unwrap();
    let mut g: *mut SgGraph = ptr::null_mut();
    unsafe {
        assert_eq!(sg_graph_parse(text.as_ptr(), &mut g), SgStatus::SgParseError);
        let mut buf = [0i8; 256];
        let len = sg_last_error_message(buf.as_mut_ptr(), buf.len());
        assert!(len > 0);
        let msg = CStr::from_ptr(buf.as_ptr()).to_str().unwrap();
        assert!(!msg.is_empty());
    }
}

#[test]
fn graph6_with_signs() {
    let g6 = CString::new("C~").unwrap(); // K4
    let signs = CString::new("++++++").unwrap();
    let mut g: *mut SgGraph = ptr::null_mut();
    unsafe {
        assert_eq!(sg_graph_from_graph6(g6.as_ptr(), signs.as_ptr(), &mut g), SgStatus::SgOk);
        assert_eq!(sg_graph_vertex_count(g), 4);
        assert_eq!(sg_graph_edge_count(g), 6);

        // an all-positive K4 is cubic and connected: ten_colouring applies
        let mut labels = [u32::MAX; 4];
        assert_eq!(sg_ten_colouring(g, labels.as_mut_ptr()), SgStatus::SgOk);
        assert!(labels.iter().all(|&l| l <= 9));

        let mut chi = 0u32;
        assert_eq!(sg_chromatic_number(g, &mut chi, ptr::null_mut()), SgStatus::SgOk);
        assert_eq!(chi, 4);
        sg_graph_free(g);
    }
}

#[test]
fn homomorphism_status_and_pins() {
    unsafe {
        let mut k4s: *mut SgGraph = ptr::null_mut();
        let mut sp9: *mut SgGraph = ptr::null_mut();
        let mut dagger: *mut SgGraph = ptr::null_mut();
        assert_eq!(sg_graph_target(SgTarget::SgTargetK4sPlus, &mut k4s), SgStatus::SgOk);
        assert_eq!(sg_graph_target(SgTarget::SgTargetSp9, &mut sp9), SgStatus::SgOk);
        assert_eq!(sg_graph_target(SgTarget::SgTargetSp9Dagger, &mut dagger), SgStatus::SgOk);

        // the obstruction never maps into SP_9 but does into the extension
        assert_eq!(
            sg_find_homomorphism(k4s, sp9, ptr::null(), ptr::null(), 0, ptr::null_mut()),
            SgStatus::SgNotFound
        );
        let mut images = [u32::MAX; 5];
        assert_eq!(
            sg_find_homomorphism(k4s, dagger, ptr::null(), ptr::null(), 0, images.as_mut_ptr()),
            SgStatus::SgOk
        );
        assert!(images.iter().all(|&i| i <= 9));

        // pin handling: vertex 4 forced onto the added vertex 9
        let sources = [4u32];
        let targets = [9u32];
        assert_eq!(
            sg_find_homomorphism(k4s, dagger, sources.as_ptr(), targets.as_ptr(), 1, images.as_mut_ptr()),
            SgStatus::SgOk
        );
        assert_eq!(images[4], 9);

        // duplicate pins are rejected
        let dup_s = [4u32, 4u32];
        let dup_t = [9u32, 8u32];
        assert_eq!(
            sg_find_homomorphism(k4s, dagger, dup_s.as_ptr(), dup_t.as_ptr(), 2, ptr::null_mut()),
            SgStatus::SgInvalidArgument
        );

        sg_graph_free(k4s);
        sg_graph_free(sp9);
        sg_graph_free(dagger);
    }
}

#[test]
fn ten_colouring_rejects_bad_input() {
    let text = CString::new("p sg 3 2\ne 0 1 +\ne 1 2 -\n").unwrap();
    let mut g: *mut SgGraph = ptr::null_mut();
    unsafe {
        assert_eq!(sg_graph_parse(text.as_ptr(), &mut g), SgStatus::SgOk);
        assert_eq!(sg_ten_colouring(g, ptr::null_mut()), SgStatus::SgNotCubic);
        sg_graph_free(g);
    }
}
