//! C ABI over `gonograph`.
//!
//! Every fallible function returns a [`GonoStatus`] and writes its result
//! through an out-pointer. On failure a message is available from
//! [`gono_last_error_message`] on the same thread. Handles are opaque and
//! must be released with the matching `*_free` function.
//!
//! Exact counts are `int64_t`; values that do not fit report
//! `GONO_STATUS_OVERFLOW`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gonograph::divisor::{gonality_dhar, rank, Divisor};
use gonograph::jacobian::cyclic_model;
use gonograph::{AdditiveSet, Error, Multigraph};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GonoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Overflow = 3,
    Disconnected = 4,
    SizeLimit = 5,
    VertexOutOfRange = 6,
    InvalidGraph = 7,
    NonCyclicModel = 8,
    CapExceeded = 9,
    Precondition = 10,
    Parse = 11,
    Io = 12,
    BufferTooSmall = 13,
    Panic = 99,
}

/// Opaque graph handle.
pub struct GonoGraph(Multigraph);

/// Opaque handle to a subset of Z/nZ.
pub struct GonoSet(AdditiveSet);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> GonoStatus {
    match e {
        Error::Overflow(_) => GonoStatus::Overflow,
        Error::Disconnected => GonoStatus::Disconnected,
        Error::SizeLimit { .. } => GonoStatus::SizeLimit,
        Error::VertexOutOfRange { .. } => GonoStatus::VertexOutOfRange,
        Error::InvalidGraph(_) => GonoStatus::InvalidGraph,
        Error::InvalidArgument(_) | Error::UnknownCheck(_) => GonoStatus::InvalidArgument,
        Error::NonCyclicModel { .. } => GonoStatus::NonCyclicModel,
        Error::CapExceeded(_) => GonoStatus::CapExceeded,
        Error::Precondition(_) => GonoStatus::Precondition,
        Error::Parse(_) => GonoStatus::Parse,
        Error::Io(_) => GonoStatus::Io,
    }
}

struct Fail(GonoStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(GonoStatus::NullPointer, format!("null pointer: {what}"))
}

fn to_i64(x: i128) -> Result<i64, Fail> {
    i64::try_from(x).map_err(|_| Fail(GonoStatus::Overflow, format!("{x} does not fit in int64_t")))
}

/// Runs `f`, records any error or panic, and converts it to a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> GonoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GonoStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            GonoStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const GonoGraph) -> Result<&'a Multigraph, Fail> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn set_ref<'a>(s: *const GonoSet) -> Result<&'a AdditiveSet, Fail> {
    s.as_ref().map(|s| &s.0).ok_or_else(|| null("set"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn slice<'a, T>(data: *const T, len: usize) -> Result<&'a [T], Fail> {
    if len == 0 {
        Ok(&[])
    } else if data.is_null() {
        Err(null("array"))
    } else {
        Ok(std::slice::from_raw_parts(data, len))
    }
}

fn boxed_graph(g: Multigraph) -> *mut GonoGraph {
    Box::into_raw(Box::new(GonoGraph(g)))
}

fn boxed_set(s: AdditiveSet) -> *mut GonoSet {
    Box::into_raw(Box::new(GonoSet(s)))
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gono_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gono_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `F_k` with `F_0 = 0`, `F_1 = 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gono_fib(k: u32, out: *mut i64) -> GonoStatus {
    guard(|| write(out, to_i64(gonograph::fibzeck::fib(k)?)?))
}

/// The strip graph with `n + 1` vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gono_graph_strip(n: usize, out: *mut *mut GonoGraph) -> GonoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, boxed_graph(gonograph::Family::Strip.build(n)?))
    })
}

/// The fan graph with `n + 1` vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gono_graph_fan(n: usize, out: *mut *mut GonoGraph) -> GonoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, boxed_graph(gonograph::Family::Fan.build(n)?))
    })
}

/// Builds a graph from `edge_count` triples `(u, v, multiplicity)` laid out
/// consecutively in `edges`.
///
/// # Safety
/// `edges` must hold `3 * edge_count` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gono_graph_from_edges(
    vertex_count: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut GonoGraph,
) -> GonoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let len = edge_count
            .checked_mul(3)
            .ok_or_else(|| Fail(GonoStatus::InvalidArgument, "edge_count too large".into()))?;
        let flat = slice(edges, len)?;
        let triples: Vec<(usize, usize, u32)> = flat
            .chunks_exact(3)
            .map(|t| (t[0] as usize, t[1] as usize, t[2]))
            .collect();
        write(
            out,
            boxed_graph(Multigraph::from_edges(vertex_count, &triples)?),
        )
    })
}

/// Parses the JSON graph format written by `gonograph gen`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gono_graph_from_json(
    json: *const c_char,
    out: *mut *mut GonoGraph,
) -> GonoStatus {
    guard(|| {
        if json.is_null() || out.is_null() {
            return Err(null("json/out"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| Fail(GonoStatus::Parse, e.to_string()))?;
        write(out, boxed_graph(Multigraph::from_json(text)?))
    })
}

/// JSON text for the graph; release with [`gono_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gono_graph_to_json(
    g: *const GonoGraph,
    out: *mut *mut c_char,
) -> GonoStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        write(
            out,
            CString::new(g.to_json())
                .expect("JSON has no NUL")
                .into_raw(),
        )
    })
}

/// # Safety
/// `g` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn gono_graph_free(g: *mut GonoGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gono_graph_vertex_count(g: *const GonoGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// `|E| - |V| + 1`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gono_graph_genus(g: *const GonoGraph, out: *mut i64) -> GonoStatus {
    guard(|| write(out, graph_ref(g)?.genus()))
}

/// Number of spanning trees, i.e. the order of the Jacobian.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gono_spanning_tree_count(
    g: *const GonoGraph,
    out: *mut i64,
) -> GonoStatus {
    guard(|| write(out, to_i64(graph_ref(g)?.spanning_tree_count()?)?))
}

/// Number of spanning two-forests separating `i` and `j` from vertex 0.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gono_two_forest_count(
    g: *const GonoGraph,
    i: usize,
    j: usize,
    out: *mut i64,
) -> GonoStatus {
    guard(|| write(out, to_i64(graph_ref(g)?.two_forest_count(i, j)?)?))
}

/// Baker–Norine rank of the divisor with one coefficient per vertex.
///
/// # Safety
/// `g` must be a live handle; `coefficients` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn gono_rank(
    g: *const GonoGraph,
    coefficients: *const i64,
    len: usize,
    out: *mut i64,
) -> GonoStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let c = slice(coefficients, len)?;
        if c.len() != g.vertex_count() {
            return Err(Fail(
                GonoStatus::InvalidArgument,
                format!(
                    "expected {} coefficients, got {}",
                    g.vertex_count(),
                    c.len()
                ),
            ));
        }
        write(out, rank(g, &Divisor::new(c.to_vec()))?)
    })
}

/// Least degree of a divisor of rank at least `r`, by exhaustive Dhar search.
/// If `witness` is not NULL it receives one coefficient per vertex.
///
/// # Safety
/// `g` must be a live handle; `witness` must be NULL or hold
/// `gono_graph_vertex_count(g)` values.
#[no_mangle]
pub unsafe extern "C" fn gono_gonality(
    g: *const GonoGraph,
    r: i64,
    degree: *mut i64,
    witness: *mut i64,
) -> GonoStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let w = gonality_dhar(g, r)?;
        write(degree, w.degree)?;
        if !witness.is_null() {
            let c = w.divisor.coefficients();
            ptr::copy_nonoverlapping(c.as_ptr(), witness, c.len());
        }
        Ok(())
    })
}

/// The generator images `{phi(v_j - v_0)}` in the cyclic model of the
/// Jacobian. Fails with `GONO_STATUS_NON_CYCLIC_MODEL` when there is none.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gono_set_from_graph(
    g: *const GonoGraph,
    out: *mut *mut GonoSet,
) -> GonoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, boxed_set(cyclic_model(graph_ref(g)?)?.additive_set()))
    })
}

/// A set of residues modulo `modulus`.
///
/// # Safety
/// `residues` must hold `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gono_set_new(
    modulus: u64,
    residues: *const u64,
    len: usize,
    out: *mut *mut GonoSet,
) -> GonoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let xs = slice(residues, len)?;
        let set = AdditiveSet::from_residues(modulus, xs.iter().map(|&x| i128::from(x)))?;
        write(out, boxed_set(set))
    })
}

/// # Safety
/// `s` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn gono_set_free(s: *mut GonoSet) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Modulus, or 0 for NULL.
///
/// # Safety
/// `s` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gono_set_modulus(s: *const GonoSet) -> u64 {
    s.as_ref().map_or(0, |s| s.0.modulus())
}

/// Number of elements, or 0 for NULL.
///
/// # Safety
/// `s` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gono_set_len(s: *const GonoSet) -> usize {
    s.as_ref().map_or(0, |s| s.0.len())
}

/// Copies the elements in increasing order. `written` always receives the
/// set size; if it exceeds `capacity` nothing is copied and
/// `GONO_STATUS_BUFFER_TOO_SMALL` is returned.
///
/// # Safety
/// `s` must be a live handle; `buf` must hold `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn gono_set_elements(
    s: *const GonoSet,
    buf: *mut u64,
    capacity: usize,
    written: *mut usize,
) -> GonoStatus {
    guard(|| {
        let s = set_ref(s)?;
        write(written, s.len())?;
        if s.len() > capacity {
            return Err(Fail(
                GonoStatus::BufferTooSmall,
                format!("need {} slots, have {capacity}", s.len()),
            ));
        }
        if s.is_empty() {
            return Ok(());
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        for (k, x) in s.iter().enumerate() {
            buf.add(k).write(x);
        }
        Ok(())
    })
}

/// The `m`-fold sumset `A + ... + A`, `m >= 1`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gono_set_sumset(
    s: *const GonoSet,
    m: u32,
    out: *mut *mut GonoSet,
) -> GonoStatus {
    guard(|| {
        let s = set_ref(s)?;
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, boxed_set(s.iterated_sumset(m)?))
    })
}

/// Least `m` with `mA` the whole group. `*found` is false when no such `m`
/// exists (the set does not generate).
///
/// # Safety
/// `s` must be a live handle; `m` and `found` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gono_set_covering_number(
    s: *const GonoSet,
    m: *mut u32,
    found: *mut bool,
) -> GonoStatus {
    guard(|| {
        let c = set_ref(s)?.covering_number()?;
        write(found, c.is_some())?;
        write(m, c.unwrap_or(0))
    })
}

/// Least `d >= r` for which some `D` satisfies `D - rA ⊆ (d - r)A`, with the
/// least such `D`. The set must contain 0; for a graph's cyclic model this
/// is its `r`-gonality.
///
/// # Safety
/// `s` must be a live handle; `degree` must be writable; `witness` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn gono_set_gonality(
    s: *const GonoSet,
    r: u32,
    degree: *mut u32,
    witness: *mut u64,
) -> GonoStatus {
    guard(|| {
        let g = set_ref(s)?.gonality(r)?;
        write(degree, g.degree)?;
        if !witness.is_null() {
            witness.write(g.witness);
        }
        Ok(())
    })
}
