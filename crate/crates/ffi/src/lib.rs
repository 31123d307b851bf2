//! C ABI over `netdist`.
//!
//! Graphs cross the boundary as opaque `NdGraph` handles owned by the caller
//! and released with [`nd_graph_free`]. Every fallible call returns an
//! [`NdStatus`]; the message for the most recent failure on the calling
//! thread is available from [`nd_last_error_message`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use netdist::majorization::{extended_majorizes, gini_geometric};
use netdist::stats::StatsReport;
use netdist::{AlphaArray, Error, Graph, Property, Rational, RealizabilityStatus};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NdStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    Disconnected = 3,
    BudgetExceeded = 4,
    InvalidInput = 5,
    BufferTooSmall = 6,
    Overflow = 7,
    Utf8 = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NdRealizability {
    Realizable = 0,
    NotRealizable = 1,
    Aborted = 2,
}

/// Exact fraction, lowest terms, positive denominator.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct NdRational {
    pub num: i64,
    pub den: i64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct NdStats {
    pub n: u64,
    pub average: NdRational,
    pub median: NdRational,
    pub gini: NdRational,
    pub beta_holds: bool,
    /// Bitmask of `ND_PROPERTY_*` values the array violates.
    pub violations: u32,
}

pub const ND_PROPERTY_TOTAL: u32 = 1 << 0;
pub const ND_PROPERTY_MIN_EDGES: u32 = 1 << 1;
pub const ND_PROPERTY_LAST_CELL: u32 = 1 << 2;
pub const ND_PROPERTY_ZERO_TAIL: u32 = 1 << 3;
pub const ND_PROPERTY_SECOND_CELL: u32 = 1 << 4;
pub const ND_PROPERTY_BETA_BOUND: u32 = 1 << 5;
pub const ND_PROPERTY_SANDWICH_UPPER: u32 = 1 << 6;
pub const ND_PROPERTY_SANDWICH_LOWER: u32 = 1 << 7;
pub const ND_PROPERTY_MEDIAN_BOUND: u32 = 1 << 8;
pub const ND_PROPERTY_AVERAGE_BOUND: u32 = 1 << 9;
pub const ND_PROPERTY_GINI_GEOMETRIC: u32 = 1 << 10;
pub const ND_PROPERTY_GINI_ROUND_TRIP: u32 = 1 << 11;

/// Opaque graph handle.
pub struct NdGraph(Graph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn fail(status: NdStatus, message: impl Into<String>) -> NdStatus {
    set_error(message.into());
    status
}

fn from_error(e: Error) -> NdStatus {
    let status = match e {
        Error::Parse { .. } | Error::AlphaSyntax { .. } => NdStatus::Parse,
        Error::Disconnected => NdStatus::Disconnected,
        Error::Overflow => NdStatus::Overflow,
        _ => NdStatus::InvalidInput,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> NdStatus) -> NdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(NdStatus::Panic, "internal panic"),
    }
}

fn property_bit(p: Property) -> u32 {
    match p {
        Property::Total => ND_PROPERTY_TOTAL,
        Property::MinEdges => ND_PROPERTY_MIN_EDGES,
        Property::LastCell => ND_PROPERTY_LAST_CELL,
        Property::ZeroTail => ND_PROPERTY_ZERO_TAIL,
        Property::SecondCell => ND_PROPERTY_SECOND_CELL,
        Property::BetaBound => ND_PROPERTY_BETA_BOUND,
        Property::SandwichUpper => ND_PROPERTY_SANDWICH_UPPER,
        Property::SandwichLower => ND_PROPERTY_SANDWICH_LOWER,
        Property::MedianBound => ND_PROPERTY_MEDIAN_BOUND,
        Property::AverageBound => ND_PROPERTY_AVERAGE_BOUND,
        Property::GiniGeometric => ND_PROPERTY_GINI_GEOMETRIC,
        Property::GiniRoundTrip => ND_PROPERTY_GINI_ROUND_TRIP,
        // pairwise properties never apply to a single array
        Property::AverageMonotone | Property::GiniOrder => 0,
    }
}

fn mask(props: &[Property]) -> u32 {
    props.iter().fold(0, |m, &p| m | property_bit(p))
}

fn to_c(r: Rational) -> Result<NdRational, NdStatus> {
    match (i64::try_from(r.numer()), i64::try_from(r.denom())) {
        (Ok(num), Ok(den)) => Ok(NdRational { num, den }),
        _ => Err(fail(
            NdStatus::Overflow,
            format!("{r} does not fit in 64 bits"),
        )),
    }
}

unsafe fn slice<'a>(data: *const u64, len: usize) -> Result<&'a [u64], NdStatus> {
    if data.is_null() {
        return Err(fail(NdStatus::NullPointer, "null array pointer"));
    }
    Ok(std::slice::from_raw_parts(data, len))
}

unsafe fn alpha_from(data: *const u64, len: usize) -> Result<AlphaArray, NdStatus> {
    let counts = slice(data, len)?.to_vec();
    AlphaArray::new(counts).map_err(from_error)
}

fn emit_graph(result: netdist::Result<Graph>, out: *mut *mut NdGraph) -> NdStatus {
    if out.is_null() {
        return fail(NdStatus::NullPointer, "null output handle");
    }
    match result {
        Ok(g) => {
            unsafe { *out = Box::into_raw(Box::new(NdGraph(g))) };
            NdStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Message for the most recent failed call on this thread, or NULL. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn nd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a NUL-terminated edge-list text into a new graph handle.
#[no_mangle]
pub unsafe extern "C" fn nd_graph_parse(text: *const c_char, out: *mut *mut NdGraph) -> NdStatus {
    guard(|| {
        if text.is_null() {
            return fail(NdStatus::NullPointer, "null text");
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(NdStatus::Utf8, "edge list is not valid UTF-8");
        };
        emit_graph(netdist::parse_edge_list(text), out)
    })
}

/// Builds a graph from `edge_count` pairs stored as `[u0, v0, u1, v1, ...]`.
#[no_mangle]
pub unsafe extern "C" fn nd_graph_from_edges(
    n: usize,
    endpoints: *const usize,
    edge_count: usize,
    out: *mut *mut NdGraph,
) -> NdStatus {
    guard(|| {
        if endpoints.is_null() && edge_count > 0 {
            return fail(NdStatus::NullPointer, "null endpoints");
        }
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(endpoints, edge_count * 2)
        };
        let edges = flat.chunks_exact(2).map(|p| (p[0], p[1]));
        emit_graph(Graph::new(n, edges), out)
    })
}

#[no_mangle]
pub extern "C" fn nd_graph_chain(n: usize, out: *mut *mut NdGraph) -> NdStatus {
    guard(|| emit_graph(netdist::generate_chain(n), out))
}

#[no_mangle]
pub extern "C" fn nd_graph_complete(n: usize, out: *mut *mut NdGraph) -> NdStatus {
    guard(|| emit_graph(netdist::generate_complete(n), out))
}

#[no_mangle]
pub extern "C" fn nd_graph_star(n: usize, out: *mut *mut NdGraph) -> NdStatus {
    guard(|| emit_graph(netdist::generate_star(n), out))
}

/// Random connected graph; extra edges appear with probability `p_num / p_den`.
#[no_mangle]
pub extern "C" fn nd_graph_random(
    n: usize,
    p_num: i64,
    p_den: i64,
    seed: u64,
    out: *mut *mut NdGraph,
) -> NdStatus {
    guard(|| {
        if p_den <= 0 || p_num < 0 || p_num > p_den {
            return fail(NdStatus::InvalidInput, "probability must lie in [0, 1]");
        }
        let p = Rational::new(p_num.into(), p_den.into());
        emit_graph(netdist::random_connected_graph(n, p, seed), out)
    })
}

/// Releases a handle. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn nd_graph_free(graph: *mut NdGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Node count, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn nd_graph_node_count(graph: *const NdGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.node_count())
}

#[no_mangle]
pub unsafe extern "C" fn nd_graph_edge_count(graph: *const NdGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.edge_count())
}

#[no_mangle]
pub unsafe extern "C" fn nd_graph_is_connected(graph: *const NdGraph, out: *mut bool) -> NdStatus {
    guard(|| match (graph.as_ref(), out.is_null()) {
        (Some(g), false) => {
            *out = g.0.is_connected();
            NdStatus::Ok
        }
        _ => fail(NdStatus::NullPointer, "null argument"),
    })
}

/// Writes the `N - 1` distance frequencies into `out`, which must hold at
/// least `N - 1` values.
#[no_mangle]
pub unsafe extern "C" fn nd_graph_alpha(
    graph: *const NdGraph,
    out: *mut u64,
    capacity: usize,
) -> NdStatus {
    guard(|| {
        let Some(g) = graph.as_ref() else {
            return fail(NdStatus::NullPointer, "null graph");
        };
        if out.is_null() {
            return fail(NdStatus::NullPointer, "null output buffer");
        }
        let need = g.0.node_count() - 1;
        if capacity < need {
            return fail(NdStatus::BufferTooSmall, format!("need {need} slots"));
        }
        match g.0.alpha_array() {
            Ok(a) => {
                ptr::copy_nonoverlapping(a.counts().as_ptr(), out, need);
                NdStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Edge-list text of the graph; free with [`nd_string_free`]. NULL on error.
#[no_mangle]
pub unsafe extern "C" fn nd_graph_to_edge_list(graph: *const NdGraph) -> *mut c_char {
    match graph.as_ref() {
        Some(g) => CString::new(g.0.to_edge_list()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

#[no_mangle]
pub unsafe extern "C" fn nd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Average, median, Gini index and validity of an array of `len` counts
/// (`N = len + 1`). The total must equal `N(N-1)/2`.
#[no_mangle]
pub unsafe extern "C" fn nd_alpha_stats(
    alpha: *const u64,
    len: usize,
    out: *mut NdStats,
) -> NdStatus {
    guard(|| {
        if out.is_null() {
            return fail(NdStatus::NullPointer, "null output");
        }
        let a = match alpha_from(alpha, len) {
            Ok(a) => a,
            Err(s) => return s,
        };
        let report = match StatsReport::from_alpha(&a) {
            Ok(r) => r,
            Err(e) => return from_error(e),
        };
        let convert = || -> Result<NdStats, NdStatus> {
            Ok(NdStats {
                n: report.n as u64,
                average: to_c(report.average)?,
                median: to_c(report.median)?,
                gini: to_c(report.gini)?,
                beta_holds: report.beta_holds,
                violations: mask(&report.violations),
            })
        };
        match convert() {
            Ok(stats) => {
                *out = stats;
                NdStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Bitmask of every single-array property the array violates.
#[no_mangle]
pub unsafe extern "C" fn nd_verify_alpha(
    alpha: *const u64,
    len: usize,
    out_mask: *mut u32,
) -> NdStatus {
    guard(|| {
        if out_mask.is_null() {
            return fail(NdStatus::NullPointer, "null output");
        }
        match alpha_from(alpha, len) {
            Ok(a) => {
                *out_mask = mask(&netdist::verify::verify_alpha(&a));
                NdStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Extended majorization `x ⊵ y` of two equal-length sequences.
#[no_mangle]
pub unsafe extern "C" fn nd_extended_majorizes(
    x: *const u64,
    x_len: usize,
    y: *const u64,
    y_len: usize,
    out: *mut bool,
) -> NdStatus {
    guard(|| {
        if out.is_null() {
            return fail(NdStatus::NullPointer, "null output");
        }
        let (x, y) = match (slice(x, x_len), slice(y, y_len)) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        match extended_majorizes(x, y) {
            Ok(v) => {
                *out = v;
                NdStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Twice the area under the extended Lorenz curve, minus one.
#[no_mangle]
pub unsafe extern "C" fn nd_gini_geometric(
    x: *const u64,
    len: usize,
    out: *mut NdRational,
) -> NdStatus {
    guard(|| {
        if out.is_null() {
            return fail(NdStatus::NullPointer, "null output");
        }
        let x = match slice(x, len) {
            Ok(x) => x,
            Err(s) => return s,
        };
        match gini_geometric(x).map_err(from_error).and_then(to_c) {
            Ok(r) => {
                *out = r;
                NdStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Searches for a connected graph with the given distance frequencies
/// (`N <= 8`). `budget == 0` means unlimited. On `ND_REALIZABILITY_REALIZABLE`
/// a new witness handle is stored in `*witness` when `witness` is non-NULL.
/// An exhausted budget returns `ND_STATUS_BUDGET_EXCEEDED` and still fills
/// `status` and `examined`.
#[no_mangle]
pub unsafe extern "C" fn nd_is_realizable(
    alpha: *const u64,
    len: usize,
    budget: u64,
    status: *mut NdRealizability,
    examined: *mut u64,
    witness: *mut *mut NdGraph,
) -> NdStatus {
    guard(|| {
        if status.is_null() {
            return fail(NdStatus::NullPointer, "null status output");
        }
        let a = match alpha_from(alpha, len) {
            Ok(a) => a,
            Err(s) => return s,
        };
        let result = match netdist::is_realizable(&a, (budget > 0).then_some(budget)) {
            Ok(r) => r,
            Err(e) => return from_error(e),
        };
        if !examined.is_null() {
            *examined = result.candidates_examined;
        }
        if !witness.is_null() {
            *witness = result
                .witness
                .map_or(ptr::null_mut(), |g| Box::into_raw(Box::new(NdGraph(g))));
        }
        match result.status {
            RealizabilityStatus::Realizable => {
                *status = NdRealizability::Realizable;
                NdStatus::Ok
            }
            RealizabilityStatus::NotRealizable => {
                *status = NdRealizability::NotRealizable;
                NdStatus::Ok
            }
            RealizabilityStatus::Aborted => {
                *status = NdRealizability::Aborted;
                fail(NdStatus::BudgetExceeded, "search budget exhausted")
            }
        }
    })
}
