//! C ABI over `edgegraph`.
//!
//! Objects cross the boundary as opaque handles (`EgTerm`, `EgFlow`,
//! `EgPathMap`) created by `eg_*` constructors and released with their
//! `*_free` function. Every fallible call returns an [`EgStatus`] and writes
//! its result through an out-pointer; on failure a description is available
//! from [`eg_last_error_message`] on the same thread. Strings returned to the
//! caller are owned by the caller and released with [`eg_string_free`].
//! Panics never unwind across the boundary; they surface as
//! `EgStatus_Panic`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use edgegraph::canon;
use edgegraph::cli::{
    self, flow_from_text, flow_to_doc, parse_expr, render_expr, DocumentError, WeightTable,
};
use edgegraph::paths::{End, SemiringKind};
use edgegraph::{BinOp, EdgeTerm, FlowError, FlowGraph};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EgStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    SyntaxError = 3,
    DocumentError = 4,
    Condition1Violation = 5,
    Condition2Violation = 6,
    Condition3Violation = 7,
    WeightError = 8,
    NonConvergence = 9,
    InvalidArgument = 10,
    Panic = 11,
}

/// Binary operations on flow graphs.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EgOp {
    Overlay = 0,
    Into = 1,
    Pits = 2,
    Tips = 3,
    Subtract = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EgSemiring {
    Tropical = 0,
    MinMax = 1,
    MaxMin = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EgEndKind {
    Pit = 0,
    Tip = 1,
}

/// An edge graph expression.
pub struct EgTerm(EdgeTerm<String>);

/// A graph in flow representation.
pub struct EgFlow(FlowGraph<String>);

struct PathEntry {
    from_kind: EgEndKind,
    from: CString,
    to_kind: EgEndKind,
    to: CString,
    weight: f64,
}

/// Path weights between edge ends, in key order.
pub struct EgPathMap(Vec<PathEntry>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(EgStatus, String);

impl Failure {
    fn null(what: &str) -> Self {
        Failure(
            EgStatus::NullArgument,
            format!("NullArgument: {what} is null"),
        )
    }
}

impl From<edgegraph::cli::SyntaxError> for Failure {
    fn from(e: edgegraph::cli::SyntaxError) -> Self {
        Failure(EgStatus::SyntaxError, e.to_string())
    }
}

fn flow_status<L: std::fmt::Debug>(e: &FlowError<L>) -> EgStatus {
    match e {
        FlowError::Condition1Violation { .. } => EgStatus::Condition1Violation,
        FlowError::Condition2Violation { .. } => EgStatus::Condition2Violation,
        FlowError::Condition3Violation { .. } => EgStatus::Condition3Violation,
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        let status = match &e {
            DocumentError::Malformed(_) => EgStatus::DocumentError,
            DocumentError::Invalid(f) => flow_status(f),
        };
        Failure(status, e.to_string())
    }
}

impl From<cli::CliError> for Failure {
    fn from(e: cli::CliError) -> Self {
        match e {
            cli::CliError::Syntax(e) => e.into(),
            cli::CliError::Document(e) => e.into(),
            cli::CliError::Weight(e) => Failure(EgStatus::WeightError, e.to_string()),
            cli::CliError::Path(e) => Failure(EgStatus::NonConvergence, e.to_string()),
            e @ cli::CliError::Io { .. } => Failure(EgStatus::InvalidArgument, e.to_string()),
        }
    }
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> EgStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            EgStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("Panic: internal error");
            EgStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(EgStatus::InvalidUtf8, format!("InvalidUtf8: {what}: {e}")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_box<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null("out"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| {
        Failure(
            EgStatus::InvalidArgument,
            "InvalidArgument: NUL in output".into(),
        )
    })?;
    put(out, c.into_raw())
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next `eg_*` call on the same thread.
#[no_mangle]
pub extern "C" fn eg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn eg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an expression such as `"1 >> 2 + 3"`.
///
/// # Safety
/// `expr` must be null or NUL-terminated; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn eg_term_parse(expr: *const c_char, out: *mut *mut EgTerm) -> EgStatus {
    guard(|| {
        let term = parse_expr(text(expr, "expr")?)?;
        put_box(out, EgTerm(term))
    })
}

/// # Safety
/// `term` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn eg_term_free(term: *mut EgTerm) {
    if !term.is_null() {
        drop(Box::from_raw(term));
    }
}

/// Renders a term in expression syntax.
///
/// # Safety
/// `term` must be null or live; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn eg_term_render(term: *const EgTerm, out: *mut *mut c_char) -> EgStatus {
    guard(|| put_string(out, render_expr(&handle(term, "term")?.0)))
}

/// The normal form of a term.
///
/// # Safety
/// `term` must be null or live; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn eg_term_normalize(term: *const EgTerm, out: *mut *mut EgTerm) -> EgStatus {
    guard(|| put_box(out, EgTerm(canon::normalize(&handle(term, "term")?.0))))
}

/// Whether two terms denote the same graph.
///
/// # Safety
/// `a`, `b` must be null or live; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn eg_term_equivalent(
    a: *const EgTerm,
    b: *const EgTerm,
    out: *mut bool,
) -> EgStatus {
    guard(|| {
        let (a, b) = (handle(a, "a")?, handle(b, "b")?);
        put(out, canon::equivalent(&a.0, &b.0))
    })
}

/// Evaluates a term to its flow representation.
///
/// # Safety
/// `term` must be null or live; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn eg_term_eval(term: *const EgTerm, out: *mut *mut EgFlow) -> EgStatus {
    guard(|| put_box(out, EgFlow(FlowGraph::eval(&handle(term, "term")?.0))))
}

/// # Safety
/// `flow` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn eg_flow_free(flow: *mut EgFlow) {
    if !flow.is_null() {
        drop(Box::from_raw(flow));
    }
}

/// Reads and validates a JSON flow document.
///
/// # Safety
/// `document` must be null or NUL-terminated; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn eg_flow_from_document(
    document: *const c_char,
    out: *mut *mut EgFlow,
) -> EgStatus {
    guard(|| {
        let g = flow_from_text(text(document, "document")?)?;
        put_box(out, EgFlow(g))
    })
}

/// Writes the JSON flow document of a graph.
///
/// # Safety
/// `flow` must be null or live; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn eg_flow_to_document(
    flow: *const EgFlow,
    out: *mut *mut c_char,
) -> EgStatus {
    guard(|| put_string(out, flow_to_doc(&handle(flow, "flow")?.0).to_text()))
}

/// Writes a Graphviz rendering of a graph.
///
/// # Safety
/// `flow` must be null or live; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn eg_flow_to_dot(flow: *const EgFlow, out: *mut *mut c_char) -> EgStatus {
    guard(|| put_string(out, cli::export_dot(&handle(flow, "flow")?.0)))
}

/// Number of nodes; 0 for a null handle.
///
/// # Safety
/// `flow` must be null or live.
#[no_mangle]
pub unsafe extern "C" fn eg_flow_node_count(flow: *const EgFlow) -> usize {
    flow.as_ref().map_or(0, |f| f.0.len())
}

/// Combines two graphs with `op`.
///
/// # Safety
/// `a`, `b` must be null or live; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn eg_flow_combine(
    a: *const EgFlow,
    op: EgOp,
    b: *const EgFlow,
    out: *mut *mut EgFlow,
) -> EgStatus {
    guard(|| {
        let (a, b) = (&handle(a, "a")?.0, &handle(b, "b")?.0);
        let g = match op {
            EgOp::Overlay => a.apply(BinOp::Overlay, b),
            EgOp::Into => a.apply(BinOp::Into, b),
            EgOp::Pits => a.apply(BinOp::Pits, b),
            EgOp::Tips => a.apply(BinOp::Tips, b),
            EgOp::Subtract => a.subtract(b),
        };
        put_box(out, EgFlow(g))
    })
}

/// Whether `a` is a subgraph of `b`.
///
/// # Safety
/// `a`, `b` must be null or live; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn eg_flow_precedes(
    a: *const EgFlow,
    b: *const EgFlow,
    out: *mut bool,
) -> EgStatus {
    guard(|| put(out, handle(a, "a")?.0.precedes(&handle(b, "b")?.0)))
}

/// Whether two graphs are equal.
///
/// # Safety
/// `a`, `b` must be null or live; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn eg_flow_equal(
    a: *const EgFlow,
    b: *const EgFlow,
    out: *mut bool,
) -> EgStatus {
    guard(|| put(out, handle(a, "a")?.0 == handle(b, "b")?.0))
}

/// The canonical term of a graph.
///
/// # Safety
/// `flow` must be null or live; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn eg_flow_canonical_term(
    flow: *const EgFlow,
    out: *mut *mut EgTerm,
) -> EgStatus {
    guard(|| put_box(out, EgTerm(canon::canonical_term(&handle(flow, "flow")?.0))))
}

fn end_parts(end: &End<String>) -> Result<(EgEndKind, CString), Failure> {
    let kind = match end {
        End::Pit(_) => EgEndKind::Pit,
        End::Tip(_) => EgEndKind::Tip,
    };
    let label = CString::new(end.label().as_str()).map_err(|_| {
        Failure(
            EgStatus::InvalidArgument,
            "InvalidArgument: NUL in label".into(),
        )
    })?;
    Ok((kind, label))
}

/// Closed path weights of `term`, with weights given as a weight table
/// (`LABEL NUMBER` lines, `* NUMBER` for a default).
///
/// # Safety
/// `term` must be null or live; `weights` null or NUL-terminated; `out`
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn eg_paths(
    term: *const EgTerm,
    weights: *const c_char,
    semiring: EgSemiring,
    out: *mut *mut EgPathMap,
) -> EgStatus {
    guard(|| {
        let term = &handle(term, "term")?.0;
        let table = WeightTable::parse(text(weights, "weights")?)
            .map_err(|e| Failure(EgStatus::WeightError, e.to_string()))?;
        let kind = match semiring {
            EgSemiring::Tropical => SemiringKind::Tropical,
            EgSemiring::MinMax => SemiringKind::MinMax,
            EgSemiring::MaxMin => SemiringKind::MaxMin,
        };
        let map = cli::paths_for(term, &table, kind)?;
        let mut entries = Vec::with_capacity(map.len());
        for (from, to, w) in map.iter() {
            let (from_kind, from) = end_parts(from)?;
            let (to_kind, to) = end_parts(to)?;
            entries.push(PathEntry {
                from_kind,
                from,
                to_kind,
                to,
                weight: *w,
            });
        }
        put_box(out, EgPathMap(entries))
    })
}

/// # Safety
/// `map` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn eg_path_map_free(map: *mut EgPathMap) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}

/// Number of entries; 0 for a null handle.
///
/// # Safety
/// `map` must be null or live.
#[no_mangle]
pub unsafe extern "C" fn eg_path_map_len(map: *const EgPathMap) -> usize {
    map.as_ref().map_or(0, |m| m.0.len())
}

/// Reads entry `index`. Label pointers are borrowed from the map and stay
/// valid until it is freed. Any out-pointer may be null.
///
/// # Safety
/// `map` must be null or live; non-null out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn eg_path_map_entry(
    map: *const EgPathMap,
    index: usize,
    from_kind: *mut EgEndKind,
    from_label: *mut *const c_char,
    to_kind: *mut EgEndKind,
    to_label: *mut *const c_char,
    weight: *mut f64,
) -> EgStatus {
    guard(|| {
        let map = handle(map, "map")?;
        let entry = map.0.get(index).ok_or_else(|| {
            Failure(
                EgStatus::InvalidArgument,
                format!(
                    "InvalidArgument: index {index} out of range for {} entries",
                    map.0.len()
                ),
            )
        })?;
        if !from_kind.is_null() {
            from_kind.write(entry.from_kind);
        }
        if !from_label.is_null() {
            from_label.write(entry.from.as_ptr());
        }
        if !to_kind.is_null() {
            to_kind.write(entry.to_kind);
        }
        if !to_label.is_null() {
            to_label.write(entry.to.as_ptr());
        }
        if !weight.is_null() {
            weight.write(entry.weight);
        }
        Ok(())
    })
}
