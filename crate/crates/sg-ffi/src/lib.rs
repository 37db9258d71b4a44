//! C ABI over the sg library.
//!
//! Graphs are opaque handles created and destroyed here; every fallible call
//! returns an `SgStatus` and leaves a message retrievable with
//! `sg_last_error_message`. Output buffers are caller-allocated with one
//! `uint32_t` per source vertex.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use sg::bound10::{ten_colouring, Bound10Error};
use sg::colouring::chromatic_number;
use sg::formats::{parse_graph6_with_signs, parse_signed_graph, serialize_signed_graph};
use sg::hom::{find_homomorphism, PinSet};
use sg::targets::catalog;
use sg::SignedGraph;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SgStatus {
    SgOk = 0,
    /// Search completed and no homomorphism exists.
    SgNotFound = 1,
    SgInvalidArgument = 2,
    SgParseError = 3,
    SgNotCubic = 4,
    SgNotConnected = 5,
    /// A step the case analysis promises to succeed failed.
    SgFalsified = 6,
}

/// Which fixed target graph to hand out.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SgTarget {
    SgTargetSp9 = 0,
    SgTargetSp9Dagger = 1,
    SgTargetSp9Star = 2,
    SgTargetK4sPlus = 3,
    SgTargetK4sMinus = 4,
}

/// Opaque signed-graph handle.
pub struct SgGraph {
    inner: SignedGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Copy the message of the last error on this thread into `buf` (always
/// NUL-terminated, truncated to `len`). Returns the full message length.
#[no_mangle]
pub unsafe extern "C" fn sg_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, SgStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(SgStatus::SgInvalidArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string is not valid UTF-8");
        SgStatus::SgInvalidArgument
    })
}

/// Parse the `.sg` text format into a new graph handle.
#[no_mangle]
pub unsafe extern "C" fn sg_graph_parse(text: *const c_char, out: *mut *mut SgGraph) -> SgStatus {
    if out.is_null() {
        set_error("null output pointer");
        return SgStatus::SgInvalidArgument;
    }
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match parse_signed_graph(text) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(SgGraph { inner: g }));
            SgStatus::SgOk
        }
        Err(e) => {
            set_error(&e.to_string());
            SgStatus::SgParseError
        }
    }
}

/// Combine a graph6 topology with a `+/-` sign string (sorted edge order).
#[no_mangle]
pub unsafe extern "C" fn sg_graph_from_graph6(
    g6: *const c_char,
    signs: *const c_char,
    out: *mut *mut SgGraph,
) -> SgStatus {
    if out.is_null() {
        set_error("null output pointer");
        return SgStatus::SgInvalidArgument;
    }
    let (g6, signs) = match (read_str(g6), read_str(signs)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(s), _) | (_, Err(s)) => return s,
    };
    match parse_graph6_with_signs(g6, signs) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(SgGraph { inner: g }));
            SgStatus::SgOk
        }
        Err(e) => {
            set_error(&e.to_string());
            SgStatus::SgParseError
        }
    }
}

/// A fresh handle to one of the fixed target graphs.
#[no_mangle]
pub unsafe extern "C" fn sg_graph_target(which: SgTarget, out: *mut *mut SgGraph) -> SgStatus {
    if out.is_null() {
        set_error("null output pointer");
        return SgStatus::SgInvalidArgument;
    }
    let cat = catalog();
    let g = match which {
        SgTarget::SgTargetSp9 => &cat.sp9,
        SgTarget::SgTargetSp9Dagger => &cat.sp9_dagger,
        SgTarget::SgTargetSp9Star => &cat.sp9_star,
        SgTarget::SgTargetK4sPlus => &cat.k4s_plus,
        SgTarget::SgTargetK4sMinus => &cat.k4s_minus,
    };
    *out = Box::into_raw(Box::new(SgGraph { inner: g.clone() }));
    SgStatus::SgOk
}

#[no_mangle]
pub unsafe extern "C" fn sg_graph_free(g: *mut SgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

#[no_mangle]
pub unsafe extern "C" fn sg_graph_vertex_count(g: *const SgGraph) -> u32 {
    g.as_ref().map_or(0, |g| g.inner.vertex_count() as u32)
}

#[no_mangle]
pub unsafe extern "C" fn sg_graph_edge_count(g: *const SgGraph) -> u32 {
    g.as_ref().map_or(0, |g| g.inner.edge_count() as u32)
}

/// Serialize to the `.sg` text format; free the result with `sg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn sg_graph_to_text(g: *const SgGraph) -> *mut c_char {
    match g.as_ref() {
        Some(g) => CString::new(serialize_signed_graph(&g.inner)).unwrap().into_raw(),
        None => ptr::null_mut(),
    }
}

#[no_mangle]
pub unsafe extern "C" fn sg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Decide a sign-preserving homomorphism of `g` to `h`, honouring `npins`
/// (source, target) pairs. On success writes one image per source vertex
/// into `images` (may be null to discard).
#[no_mangle]
pub unsafe extern "C" fn sg_find_homomorphism(
    g: *const SgGraph,
    h: *const SgGraph,
    pin_sources: *const u32,
    pin_targets: *const u32,
    npins: usize,
    images: *mut u32,
) -> SgStatus {
    let (Some(g), Some(h)) = (g.as_ref(), h.as_ref()) else {
        set_error("null graph handle");
        return SgStatus::SgInvalidArgument;
    };
    let mut pairs = Vec::with_capacity(npins);
    if npins > 0 {
        if pin_sources.is_null() || pin_targets.is_null() {
            set_error("null pin arrays");
            return SgStatus::SgInvalidArgument;
        }
        for i in 0..npins {
            pairs.push((*pin_sources.add(i) as usize, *pin_targets.add(i) as usize));
        }
    }
    let pins = match PinSet::from_pairs(&pairs) {
        Ok(p) => p,
        Err(e) => {
            set_error(&e.to_string());
            return SgStatus::SgInvalidArgument;
        }
    };
    match find_homomorphism(&g.inner, &h.inner, &pins) {
        Some(m) => {
            if !images.is_null() {
                for (i, &img) in m.images.iter().enumerate() {
                    *images.add(i) = img as u32;
                }
            }
            SgStatus::SgOk
        }
        None => SgStatus::SgNotFound,
    }
}

/// Exact chromatic number; on success writes a witness labelling into
/// `labels` (may be null) and the value into `chi`.
#[no_mangle]
pub unsafe extern "C" fn sg_chromatic_number(
    g: *const SgGraph,
    chi: *mut u32,
    labels: *mut u32,
) -> SgStatus {
    let Some(g) = g.as_ref() else {
        set_error("null graph handle");
        return SgStatus::SgInvalidArgument;
    };
    if g.inner.vertex_count() == 0 {
        set_error("chromatic number of the empty graph is undefined");
        return SgStatus::SgInvalidArgument;
    }
    let (k, witness) = chromatic_number(&g.inner);
    if !chi.is_null() {
        *chi = k as u32;
    }
    if !labels.is_null() {
        for (i, &l) in witness.labels.iter().enumerate() {
            *labels.add(i) = l as u32;
        }
    }
    SgStatus::SgOk
}

/// Constructive 10-colouring of a connected cubic graph; writes one label in
/// 0..=9 per vertex into `labels`.
#[no_mangle]
pub unsafe extern "C" fn sg_ten_colouring(g: *const SgGraph, labels: *mut u32) -> SgStatus {
    let Some(g) = g.as_ref() else {
        set_error("null graph handle");
        return SgStatus::SgInvalidArgument;
    };
    match ten_colouring(&g.inner) {
        Ok((c, _)) => {
            if !labels.is_null() {
                for (i, &l) in c.labels.iter().enumerate() {
                    *labels.add(i) = l as u32;
                }
            }
            SgStatus::SgOk
        }
        Err(Bound10Error::NotCubic) => {
            set_error("input graph is not 3-regular");
            SgStatus::SgNotCubic
        }
        Err(Bound10Error::NotConnected) => {
            set_error("input graph is not connected");
            SgStatus::SgNotConnected
        }
        Err(e @ Bound10Error::Falsification(_)) => {
            set_error(&e.to_string());
            SgStatus::SgFalsified
        }
    }
}
