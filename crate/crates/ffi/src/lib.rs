//! C interface to the listcolor solvers.
//!
//! Instances and outcomes are opaque heap handles owned by the caller and
//! released with their `_free` function. Every fallible call returns an
//! [`LcError`]; on failure a message is available from
//! [`lc_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use listcolor::bench::{run_solver, RunConfig, RunRecord, SolverKind};
use listcolor::elc::BbLimits;
use listcolor::instance::{attach_lists, parse_instance, parse_list_file};
use listcolor::{Color, Graph, Instance, Status};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcError {
    Ok = 0,
    /// A required pointer argument was NULL.
    Null = 1,
    /// Input text failed to parse.
    Parse = 2,
    /// Arguments were well-formed but describe an invalid instance or request.
    Invalid = 3,
    Utf8 = 4,
    /// The library panicked; the handle state is unchanged.
    Panic = 5,
    /// The caller's output buffer is too small.
    Buffer = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcSolver {
    Kgl = 0,
    Lc = 1,
    Elc = 2,
    Dcc = 3,
    Oracle = 4,
}

impl From<LcSolver> for SolverKind {
    fn from(s: LcSolver) -> Self {
        match s {
            LcSolver::Kgl => SolverKind::Kgl,
            LcSolver::Lc => SolverKind::Lc,
            LcSolver::Elc => SolverKind::Elc,
            LcSolver::Dcc => SolverKind::Dcc,
            LcSolver::Oracle => SolverKind::Oracle,
        }
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcStatus {
    /// A coloring was found; optimality not proven.
    Feasible = 0,
    Optimal = 1,
    /// The search finished without finding a coloring.
    NoSolution = 2,
    /// Proven that no list coloring exists.
    Infeasible = 3,
    Timeout = 4,
    /// A greedy heuristic got stuck.
    HeurFail = 5,
}

impl From<Status> for LcStatus {
    fn from(s: Status) -> Self {
        match s {
            Status::Feasible => LcStatus::Feasible,
            Status::Optimal => LcStatus::Optimal,
            Status::NoSolution => LcStatus::NoSolution,
            Status::Infeasible => LcStatus::Infeasible,
            Status::Timeout => LcStatus::Timeout,
            Status::HeurFail => LcStatus::HeurFail,
        }
    }
}

/// Limits for one solve. Obtain defaults from [`lc_limits_default`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LcLimits {
    /// Wall-clock budget in seconds; zero or negative means unlimited.
    pub time_limit_s: f64,
    /// Node expansions per restart; zero means uncapped.
    pub iteration_cap: u64,
    /// Independent k-GL runs.
    pub kgl_runs: u32,
}

pub struct LcInstance {
    inner: Instance,
}

pub struct LcOutcome {
    record: RunRecord,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(code: LcError, msg: impl Into<String>) -> LcError {
    set_error(msg);
    code
}

fn guard(f: impl FnOnce() -> LcError) -> LcError {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(code) => code,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            fail(LcError::Panic, format!("panic: {msg}"))
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, LcError> {
    if p.is_null() {
        return Err(fail(LcError::Null, format!("{what} is NULL")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| fail(LcError::Utf8, format!("{what}: {e}")))
}

unsafe fn put<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn lc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn lc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[no_mangle]
pub extern "C" fn lc_limits_default() -> LcLimits {
    let d = RunConfig::default();
    LcLimits {
        time_limit_s: d.limits.wall_clock_seconds.unwrap_or(0.0),
        iteration_cap: d.limits.iteration_cap.unwrap_or(0),
        kgl_runs: d.kgl_runs as u32,
    }
}

/// Builds an instance from a list file and an optional DIMACS graph text.
/// When `dimacs` is NULL the list text must carry the edges as `e` lines.
///
/// # Safety
/// `dimacs` is NULL or a NUL-terminated string, `lists` is a NUL-terminated
/// string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lc_instance_from_text(
    dimacs: *const c_char,
    lists: *const c_char,
    out: *mut *mut LcInstance,
) -> LcError {
    guard(|| {
        if out.is_null() {
            return fail(LcError::Null, "out is NULL");
        }
        let lists = match text(lists, "lists") {
            Ok(s) => s,
            Err(code) => return code,
        };
        let parsed = if dimacs.is_null() {
            parse_instance(lists)
        } else {
            let g = match text(dimacs, "dimacs") {
                Ok(s) => s,
                Err(code) => return code,
            };
            listcolor::dimacs::parse_dimacs(g)
                .and_then(|g| parse_list_file(lists).and_then(|f| attach_lists(g, f)))
        };
        match parsed {
            Ok(inner) => {
                put(out, LcInstance { inner });
                LcError::Ok
            }
            Err(e) => fail(LcError::Parse, e.to_string()),
        }
    })
}

/// Builds an instance from arrays. `edges` holds `2 * m` zero-based vertex
/// ids. Vertex `v` has colors `colors[offsets[v] .. offsets[v + 1]]`, so
/// `offsets` holds `n + 1` entries. Colors are 1-based.
///
/// # Safety
/// Each pointer is valid for the number of elements described above; `edges`
/// may be NULL when `m == 0`, `colors` may be NULL when `offsets[n] == 0`.
#[no_mangle]
pub unsafe extern "C" fn lc_instance_from_arrays(
    n: usize,
    edges: *const u32,
    m: usize,
    offsets: *const usize,
    colors: *const u32,
    out: *mut *mut LcInstance,
) -> LcError {
    guard(|| {
        if out.is_null() || offsets.is_null() || (m > 0 && edges.is_null()) {
            return fail(LcError::Null, "required pointer is NULL");
        }
        let offsets = std::slice::from_raw_parts(offsets, n + 1);
        if offsets[0] != 0 || offsets.windows(2).any(|w| w[0] > w[1]) {
            return fail(
                LcError::Invalid,
                "offsets must start at 0 and be non-decreasing",
            );
        }
        let total = offsets[n];
        if total > 0 && colors.is_null() {
            return fail(LcError::Null, "colors is NULL");
        }
        let colors: &[u32] = if total == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(colors, total)
        };
        let edges: &[u32] = if m == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(edges, 2 * m)
        };
        let pairs: Vec<_> = edges
            .chunks_exact(2)
            .map(|e| (e[0] as usize, e[1] as usize))
            .collect();
        let lists = offsets
            .windows(2)
            .map(|w| colors[w[0]..w[1]].iter().map(|&c| Color(c)).collect())
            .collect();
        match Graph::new(n, pairs).and_then(|g| Instance::new(g, lists)) {
            Ok(inner) => {
                put(out, LcInstance { inner });
                LcError::Ok
            }
            Err(e) => fail(LcError::Invalid, e.to_string()),
        }
    })
}

/// # Safety
/// `inst` is NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn lc_instance_free(inst: *mut LcInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `inst` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lc_instance_vertex_count(inst: *const LcInstance) -> usize {
    inst.as_ref().map_or(0, |i| i.inner.n())
}

/// Runs one solver. `limits` may be NULL for the defaults. Every returned
/// coloring has been checked against the instance.
///
/// # Safety
/// `inst` is a live handle, `limits` is NULL or readable, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lc_solve(
    inst: *const LcInstance,
    solver: LcSolver,
    limits: *const LcLimits,
    seed: u64,
    out: *mut *mut LcOutcome,
) -> LcError {
    guard(|| {
        let Some(inst) = inst.as_ref() else {
            return fail(LcError::Null, "instance is NULL");
        };
        if out.is_null() {
            return fail(LcError::Null, "out is NULL");
        }
        let l = limits
            .as_ref()
            .copied()
            .unwrap_or_else(|| lc_limits_default());
        if l.time_limit_s.is_nan() {
            return fail(LcError::Invalid, "time limit is NaN");
        }
        let cfg = RunConfig {
            limits: BbLimits {
                iteration_cap: (l.iteration_cap > 0).then_some(l.iteration_cap),
                wall_clock_seconds: (l.time_limit_s > 0.0).then_some(l.time_limit_s),
                ..BbLimits::default()
            },
            kgl_runs: l.kgl_runs.max(1) as usize,
            seed,
        };
        match run_solver(&inst.inner, solver.into(), &cfg) {
            Ok(record) => {
                put(out, LcOutcome { record });
                LcError::Ok
            }
            Err(e) => fail(LcError::Invalid, e.to_string()),
        }
    })
}

/// # Safety
/// `outcome` is NULL or a handle from [`lc_solve`] that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn lc_outcome_free(outcome: *mut LcOutcome) {
    if !outcome.is_null() {
        drop(Box::from_raw(outcome));
    }
}

/// # Safety
/// `outcome` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn lc_outcome_status(outcome: *const LcOutcome) -> LcStatus {
    (*outcome).record.status.into()
}

/// Distinct colors of the returned coloring, or -1 when there is none.
/// For k-GL this is the best of its runs.
///
/// # Safety
/// `outcome` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn lc_outcome_colors(outcome: *const LcOutcome) -> i64 {
    (*outcome).record.colors.map_or(-1, |c| c as i64)
}

/// Search nodes expanded, or -1 for solvers that do not count them.
///
/// # Safety
/// `outcome` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn lc_outcome_nodes(outcome: *const LcOutcome) -> i64 {
    (*outcome).record.nodes.map_or(-1, |c| c as i64)
}

/// Wall-clock time of the solve in milliseconds.
///
/// # Safety
/// `outcome` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn lc_outcome_elapsed_ms(outcome: *const LcOutcome) -> f64 {
    (*outcome).record.elapsed_ms
}

/// Copies the coloring into `buf`, one color per vertex (0 for uncolored).
/// Writes the vertex count to `written` when it is non-NULL, even on
/// [`LcError::Buffer`], so callers can size a retry.
///
/// # Safety
/// `outcome` is a live handle, `buf` is writable for `len` elements (or NULL
/// when `len == 0`), and `written` is NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn lc_outcome_coloring(
    outcome: *const LcOutcome,
    buf: *mut u32,
    len: usize,
    written: *mut usize,
) -> LcError {
    guard(|| {
        let Some(outcome) = outcome.as_ref() else {
            return fail(LcError::Null, "outcome is NULL");
        };
        let Some(col) = &outcome.record.coloring else {
            return fail(LcError::Invalid, "outcome carries no coloring");
        };
        let n = col.len();
        if !written.is_null() {
            *written = n;
        }
        if len < n {
            return fail(LcError::Buffer, format!("buffer holds {len}, need {n}"));
        }
        if n > 0 {
            if buf.is_null() {
                return fail(LcError::Null, "buf is NULL");
            }
            let dst = std::slice::from_raw_parts_mut(buf, n);
            for (d, c) in dst.iter_mut().zip(col.as_slice()) {
                *d = c.map_or(0, |c| c.0);
            }
        }
        LcError::Ok
    })
}
