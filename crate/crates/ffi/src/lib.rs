//! C ABI over `periscope-core`.
//!
//! Graphs cross the boundary as opaque `PeriGraph` handles owned by the
//! caller and released with [`peri_graph_free`]. Every fallible call returns a
//! [`PeriStatus`]; on failure a message is available from
//! [`peri_last_error_message`] on the same thread. Panics never unwind into C.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use periscope::constructions::{ConstructionSpec, Family};
use periscope::graph::{parse_graph6, to_graph6};
use periscope::{ClosenessCounts, Error, Graph, IndexReport};

/// Opaque graph handle.
pub struct PeriGraph(Graph);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeriStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidGraph6 = 3,
    InvalidGraph = 4,
    InvalidArgument = 5,
    Disconnected = 6,
    UnsupportedSize = 7,
    Overflow = 8,
    Panic = 9,
}

/// All indices of one graph.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PeriIndices {
    pub n: u64,
    pub peri: u64,
    pub eperi: u64,
    pub espr: u64,
    pub mo: u64,
    pub mo_star: u64,
    pub nt: u64,
    pub irr: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PeriStatus {
    match e {
        Error::Graph6(_) => PeriStatus::InvalidGraph6,
        Error::VertexOutOfRange { .. } | Error::SelfLoop(_) | Error::NotAnEdge(..) => PeriStatus::InvalidGraph,
        Error::Disconnected => PeriStatus::Disconnected,
        Error::UnsupportedSize(_) => PeriStatus::UnsupportedSize,
        Error::Overflow(_) => PeriStatus::Overflow,
        _ => PeriStatus::InvalidArgument,
    }
}

struct Fail(PeriStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(PeriStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PeriStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PeriStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            PeriStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(PeriStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn graph_ref<'a>(g: *const PeriGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn store(out: *mut *mut PeriGraph, g: Graph) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(PeriGraph(g)));
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn peri_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a NUL-terminated graph6 string into a new handle.
///
/// # Safety
/// `g6` must be NULL or a valid C string; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn peri_graph_from_graph6(g6: *const c_char, out: *mut *mut PeriGraph) -> PeriStatus {
    guard(|| {
        let s = read_str(g6, "g6")?;
        store(out, parse_graph6(s)?)
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (may be NULL when
/// `edge_count` is 0); `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn peri_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut PeriGraph,
) -> PeriStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            let len = edge_count
                .checked_mul(2)
                .ok_or_else(|| Fail(PeriStatus::InvalidArgument, "edge_count too large".into()))?;
            slice::from_raw_parts(edges, len)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        store(out, Graph::from_edge_list(n, &pairs)?)
    })
}

/// Builds a member of a named family (`path`, `spider`, `eperi_extremal`, ...).
///
/// # Safety
/// `family` must be a valid C string; `params` must point to `param_count`
/// values (may be NULL when `param_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn peri_generate(
    family: *const c_char,
    params: *const usize,
    param_count: usize,
    out: *mut *mut PeriGraph,
) -> PeriStatus {
    guard(|| {
        let family: Family = read_str(family, "family")?.parse()?;
        let params = if param_count == 0 {
            Vec::new()
        } else if params.is_null() {
            return Err(null("params"));
        } else {
            slice::from_raw_parts(params, param_count).to_vec()
        };
        store(out, ConstructionSpec::new(family, params).build()?)
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `g` must be NULL or a handle returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn peri_graph_free(g: *mut PeriGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn peri_graph_vertex_count(g: *const PeriGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Edge count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn peri_graph_edge_count(g: *const PeriGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Encodes the graph as graph6; release the string with [`peri_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn peri_graph_to_graph6(g: *const PeriGraph, out: *mut *mut c_char) -> PeriStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = CString::new(to_graph6(g)).expect("graph6 has no NUL").into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from [`peri_graph_to_graph6`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn peri_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Computes every index. Fails with `Disconnected` for disconnected graphs.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn peri_compute_indices(g: *const PeriGraph, out: *mut PeriIndices) -> PeriStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let r = IndexReport::compute(g, false)?;
        *out = PeriIndices {
            n: r.n as u64,
            peri: r.peri,
            eperi: r.eperi,
            espr: r.espr,
            mo: r.mo,
            mo_star: r.mo_star,
            nt: r.nt,
            irr: r.irr,
        };
        Ok(())
    })
}

/// Writes whether every vertex pair has a symmetric distance-difference
/// profile.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn peri_is_ultra_nt_balanced(g: *const PeriGraph, out: *mut bool) -> PeriStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = ClosenessCounts::new(g)?.is_ultra_nt_balanced();
        Ok(())
    })
}
