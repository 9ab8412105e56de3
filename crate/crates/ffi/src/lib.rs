//! C ABI for the `sombor` crate.
//!
//! Graphs and exact index values are exposed as opaque handles created and
//! released through these functions; every fallible call returns a
//! [`SomborStatus`] and writes its result through an out pointer. Strings
//! returned through `char**` are NUL-terminated, UTF-8, and must be
//! released with [`sombor_string_free`].
//!
//! The matching header `include/sombor.h` is generated by cbindgen at
//! build time.

use sombor::{
    closed_form, generate, parse_edge_list, parse_graph6, render_edge_list, render_graph6,
    sombor_index, FamilySpec, Graph, GraphError, RadicalSum,
};
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Opaque graph handle.
pub struct SomborGraph(Graph);

/// Opaque exact-value handle (a sum of rational multiples of square roots).
pub struct SomborValue(RadicalSum);

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SomborStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer,
    /// A string argument was not valid UTF-8.
    InvalidUtf8,
    /// Text failed to parse (edge list, graph6, family spec, or value).
    ParseError,
    /// The edge would be a self-loop.
    SelfLoop,
    /// A vertex index is out of range.
    VertexOutOfRange,
    /// The edge is already present.
    DuplicateEdge,
    /// The edge is not present.
    MissingEdge,
    /// Parameters outside a formula's validity domain.
    OutOfDomain,
    /// The callee panicked; the out parameters are untouched.
    Panic,
}

fn graph_status(err: GraphError) -> SomborStatus {
    match err {
        GraphError::SelfLoop(_) => SomborStatus::SelfLoop,
        GraphError::VertexOutOfRange { .. } => SomborStatus::VertexOutOfRange,
        GraphError::DuplicateEdge(..) => SomborStatus::DuplicateEdge,
        GraphError::MissingEdge(..) => SomborStatus::MissingEdge,
    }
}

fn guarded(f: impl FnOnce() -> SomborStatus) -> SomborStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(SomborStatus::Panic)
}

/// # Safety
/// `ptr` must be NULL or a NUL-terminated string valid for reads.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, SomborStatus> {
    if ptr.is_null() {
        return Err(SomborStatus::NullPointer);
    }
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|_| SomborStatus::InvalidUtf8)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> SomborStatus {
    if out.is_null() {
        return SomborStatus::NullPointer;
    }
    unsafe { out.write(value) };
    SomborStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> SomborStatus {
    let c = match CString::new(text) {
        Ok(c) => c,
        Err(_) => return SomborStatus::ParseError,
    };
    unsafe { write_out(out, c.into_raw()) }
}

unsafe fn graph_ref<'a>(g: *const SomborGraph) -> Result<&'a Graph, SomborStatus> {
    if g.is_null() {
        Err(SomborStatus::NullPointer)
    } else {
        Ok(unsafe { &(*g).0 })
    }
}

/// Creates a graph with `n` isolated vertices.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_new(n: usize, out: *mut *mut SomborGraph) -> SomborStatus {
    guarded(|| unsafe { write_out(out, Box::into_raw(Box::new(SomborGraph(Graph::new(n))))) })
}

/// Deep copy of a graph handle.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_clone(
    g: *const SomborGraph,
    out: *mut *mut SomborGraph,
) -> SomborStatus {
    guarded(|| unsafe {
        match graph_ref(g) {
            Ok(graph) => write_out(out, Box::into_raw(Box::new(SomborGraph(graph.clone())))),
            Err(status) => status,
        }
    })
}

/// Releases a graph handle. NULL is ignored.
///
/// # Safety
/// `g` must be NULL or a handle not released before.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_free(g: *mut SomborGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_vertex_count(
    g: *const SomborGraph,
    out: *mut usize,
) -> SomborStatus {
    guarded(|| unsafe {
        match graph_ref(g) {
            Ok(graph) => write_out(out, graph.vertex_count()),
            Err(status) => status,
        }
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_edge_count(
    g: *const SomborGraph,
    out: *mut usize,
) -> SomborStatus {
    guarded(|| unsafe {
        match graph_ref(g) {
            Ok(graph) => write_out(out, graph.edge_count()),
            Err(status) => status,
        }
    })
}

/// Inserts the edge `uv` (0-based endpoints).
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_add_edge(
    g: *mut SomborGraph,
    u: usize,
    v: usize,
) -> SomborStatus {
    guarded(|| {
        if g.is_null() {
            return SomborStatus::NullPointer;
        }
        match unsafe { &mut (*g).0 }.add_edge(u, v) {
            Ok(()) => SomborStatus::Ok,
            Err(e) => graph_status(e),
        }
    })
}

/// Removes the edge `uv`.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_remove_edge(
    g: *mut SomborGraph,
    u: usize,
    v: usize,
) -> SomborStatus {
    guarded(|| {
        if g.is_null() {
            return SomborStatus::NullPointer;
        }
        match unsafe { &mut (*g).0 }.remove_edge(u, v) {
            Ok(()) => SomborStatus::Ok,
            Err(e) => graph_status(e),
        }
    })
}

/// Removes vertex `v`; later vertices shift down by one.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_remove_vertex(g: *mut SomborGraph, v: usize) -> SomborStatus {
    guarded(|| {
        if g.is_null() {
            return SomborStatus::NullPointer;
        }
        match unsafe { &mut (*g).0 }.remove_vertex(v) {
            Ok(()) => SomborStatus::Ok,
            Err(e) => graph_status(e),
        }
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_has_edge(
    g: *const SomborGraph,
    u: usize,
    v: usize,
    out: *mut bool,
) -> SomborStatus {
    guarded(|| unsafe {
        match graph_ref(g) {
            Ok(graph) => write_out(out, graph.has_edge(u, v)),
            Err(status) => status,
        }
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_degree(
    g: *const SomborGraph,
    v: usize,
    out: *mut usize,
) -> SomborStatus {
    guarded(|| unsafe {
        match graph_ref(g) {
            Ok(graph) => {
                if v >= graph.vertex_count() {
                    SomborStatus::VertexOutOfRange
                } else {
                    write_out(out, graph.degree(v))
                }
            }
            Err(status) => status,
        }
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_is_connected(
    g: *const SomborGraph,
    out: *mut bool,
) -> SomborStatus {
    guarded(|| unsafe {
        match graph_ref(g) {
            Ok(graph) => write_out(out, graph.is_connected()),
            Err(status) => status,
        }
    })
}

/// Complement graph as a new handle.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_complement(
    g: *const SomborGraph,
    out: *mut *mut SomborGraph,
) -> SomborStatus {
    guarded(|| unsafe {
        match graph_ref(g) {
            Ok(graph) => write_out(
                out,
                Box::into_raw(Box::new(SomborGraph(graph.complement()))),
            ),
            Err(status) => status,
        }
    })
}

/// Parses the DIMACS-flavored edge-list format (`p edge n m` / `e u v`).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut SomborGraph,
) -> SomborStatus {
    guarded(|| unsafe {
        let text = match read_str(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match parse_edge_list(text) {
            Ok(graph) => write_out(out, Box::into_raw(Box::new(SomborGraph(graph)))),
            Err(_) => SomborStatus::ParseError,
        }
    })
}

/// Parses a graph6 string.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut SomborGraph,
) -> SomborStatus {
    guarded(|| unsafe {
        let text = match read_str(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match parse_graph6(text) {
            Ok(graph) => write_out(out, Box::into_raw(Box::new(SomborGraph(graph)))),
            Err(_) => SomborStatus::ParseError,
        }
    })
}

/// Builds a named family member from its text form, e.g. `"grid:7,9"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_generate(
    spec: *const c_char,
    out: *mut *mut SomborGraph,
) -> SomborStatus {
    guarded(|| unsafe {
        let text = match read_str(spec) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match text.parse::<FamilySpec>() {
            Ok(spec) => write_out(out, Box::into_raw(Box::new(SomborGraph(generate(&spec))))),
            Err(_) => SomborStatus::ParseError,
        }
    })
}

/// Canonical edge-list rendering of the graph.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_to_edge_list(
    g: *const SomborGraph,
    out: *mut *mut c_char,
) -> SomborStatus {
    guarded(|| unsafe {
        match graph_ref(g) {
            Ok(graph) => write_string(out, render_edge_list(graph)),
            Err(status) => status,
        }
    })
}

/// graph6 rendering of the graph.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_to_graph6(
    g: *const SomborGraph,
    out: *mut *mut c_char,
) -> SomborStatus {
    guarded(|| unsafe {
        match graph_ref(g) {
            Ok(graph) => write_string(out, render_graph6(graph)),
            Err(status) => status,
        }
    })
}

/// The Sombor index of the graph as a new exact-value handle.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_index(
    g: *const SomborGraph,
    out: *mut *mut SomborValue,
) -> SomborStatus {
    guarded(|| unsafe {
        match graph_ref(g) {
            Ok(graph) => write_out(
                out,
                Box::into_raw(Box::new(SomborValue(sombor_index(graph)))),
            ),
            Err(status) => status,
        }
    })
}

/// The exact closed-form Sombor index for a family spec such as
/// `"dutchwindmill:5,3"`. Fails with `OutOfDomain` when the parameters are
/// outside the formula's validity range.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_closed_form(
    spec: *const c_char,
    out: *mut *mut SomborValue,
) -> SomborStatus {
    guarded(|| unsafe {
        let text = match read_str(spec) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let spec = match text.parse::<FamilySpec>() {
            Ok(spec) => spec,
            Err(_) => return SomborStatus::ParseError,
        };
        match closed_form(&spec) {
            Ok(value) => write_out(out, Box::into_raw(Box::new(SomborValue(value)))),
            Err(_) => SomborStatus::OutOfDomain,
        }
    })
}

/// Parses an exact value from its text rendering, e.g.
/// `"2*sqrt(2) + 3*sqrt(5) + 10"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_value_parse(
    text: *const c_char,
    out: *mut *mut SomborValue,
) -> SomborStatus {
    guarded(|| unsafe {
        let text = match read_str(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match text.parse::<RadicalSum>() {
            Ok(value) => write_out(out, Box::into_raw(Box::new(SomborValue(value)))),
            Err(_) => SomborStatus::ParseError,
        }
    })
}

/// Releases a value handle. NULL is ignored.
///
/// # Safety
/// `v` must be NULL or a handle not released before.
#[no_mangle]
pub unsafe extern "C" fn sombor_value_free(v: *mut SomborValue) {
    if !v.is_null() {
        drop(unsafe { Box::from_raw(v) });
    }
}

/// Exact text rendering, round-trippable through [`sombor_value_parse`].
///
/// # Safety
/// `v` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_value_to_string(
    v: *const SomborValue,
    out: *mut *mut c_char,
) -> SomborStatus {
    guarded(|| unsafe {
        if v.is_null() {
            return SomborStatus::NullPointer;
        }
        write_string(out, (*v).0.to_string())
    })
}

/// Decimal rendering with error below `10^-digits`.
///
/// # Safety
/// `v` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_value_to_decimal(
    v: *const SomborValue,
    digits: u32,
    out: *mut *mut c_char,
) -> SomborStatus {
    guarded(|| unsafe {
        if v.is_null() {
            return SomborStatus::NullPointer;
        }
        write_string(out, (*v).0.to_decimal(digits))
    })
}

/// Exact three-way comparison: writes -1, 0 or 1.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_value_compare(
    a: *const SomborValue,
    b: *const SomborValue,
    out: *mut c_int,
) -> SomborStatus {
    guarded(|| unsafe {
        if a.is_null() || b.is_null() {
            return SomborStatus::NullPointer;
        }
        let ordering = (*a).0.cmp(&(*b).0) as c_int;
        write_out(out, ordering)
    })
}

/// True when the value is a positive integer.
///
/// # Safety
/// `v` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sombor_value_is_positive_integer(
    v: *const SomborValue,
    out: *mut bool,
) -> SomborStatus {
    guarded(|| unsafe {
        if v.is_null() {
            return SomborStatus::NullPointer;
        }
        write_out(out, (*v).0.is_positive_integer())
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sombor_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
