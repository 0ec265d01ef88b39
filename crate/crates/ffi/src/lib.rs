//! C ABI over `renner-core`.
//!
//! Every fallible function returns a [`RennerStatus`] and writes its result through an
//! out-pointer. Handles are opaque and must be released with their `_free` function;
//! strings returned by the library must be released with [`renner_string_free`].
//! After a failure, [`renner_last_error`] describes it on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use renner_core::hecke::rewriter::Rewriter;
use renner_core::io::artifact::{compute_table, DEFAULT_WORK_BOUND};
use renner_core::io::{TableArtifact, TableKind};
use renner_core::monoid::{MonoidContext, PartialPerm};
use renner_core::partition::MonoidKind;
use renner_core::Error;

/// Largest rank accepted by [`renner_context_new`].
pub const RENNER_MAX_CONTEXT_RANK: usize = 4;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RennerStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotInMonoid = 4,
    UnsupportedSize = 5,
    UnknownLabel = 6,
    IndexOutOfRange = 7,
    /// Division by zero, a singular matrix or a non-polynomial entry.
    Arithmetic = 8,
    /// An internal consistency check failed.
    Inconsistent = 9,
    Io = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RennerMonoidKind {
    Rook = 0,
    Symplectic = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RennerTableKind {
    M = 0,
    A = 1,
    B = 2,
    Y = 3,
    Mq = 4,
    Yq = 5,
    Aq = 6,
}

impl From<RennerMonoidKind> for MonoidKind {
    fn from(k: RennerMonoidKind) -> Self {
        match k {
            RennerMonoidKind::Rook => MonoidKind::Rook,
            RennerMonoidKind::Symplectic => MonoidKind::Symplectic,
        }
    }
}

impl From<RennerTableKind> for TableKind {
    fn from(k: RennerTableKind) -> Self {
        match k {
            RennerTableKind::M => TableKind::M,
            RennerTableKind::A => TableKind::A,
            RennerTableKind::B => TableKind::B,
            RennerTableKind::Y => TableKind::Y,
            RennerTableKind::Mq => TableKind::Mq,
            RennerTableKind::Yq => TableKind::Yq,
            RennerTableKind::Aq => TableKind::Aq,
        }
    }
}

fn status_of(e: &Error) -> RennerStatus {
    match e {
        Error::Parse(_) => RennerStatus::Parse,
        Error::NotInMonoid(_) => RennerStatus::NotInMonoid,
        Error::UnsupportedSize(_) => RennerStatus::UnsupportedSize,
        Error::UnknownLabel(_) => RennerStatus::UnknownLabel,
        Error::DivisionByZero | Error::PoleAtValue(_) | Error::Singular | Error::NonPolynomialEntry { .. } => {
            RennerStatus::Arithmetic
        }
        Error::Io(_) | Error::CorruptCache(_) => RennerStatus::Io,
        Error::DefinitionMismatch(_)
        | Error::InvalidK(_)
        | Error::DecompositionMismatch { .. }
        | Error::SupportViolation { .. } => RennerStatus::Inconsistent,
    }
}

/// Monoid context for element-level computations.
pub struct RennerContext {
    ctx: MonoidContext,
}

/// A computed table with its labels and exact entries.
pub struct RennerTable {
    artifact: TableArtifact,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(RennerStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(RennerStatus::NullArgument, format!("{what} is null"))
}

fn set_error(msg: Option<String>) {
    let c = msg.map(|m| CString::new(m.replace('\0', " ")).unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> RennerStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(None);
            RennerStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(Some(msg));
            status
        }
        Err(_) => {
            set_error(Some("internal panic".into()));
            RennerStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure(RennerStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|_| Failure(RennerStatus::Inconsistent, "string contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

/// Library version as a static NUL-terminated string; do not free.
#[no_mangle]
pub extern "C" fn renner_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the most recent failure on this thread, or null after a success.
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn renner_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn renner_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a context for the monoid of the given kind and rank `1..=RENNER_MAX_CONTEXT_RANK`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn renner_context_new(
    kind: RennerMonoidKind,
    n: usize,
    out: *mut *mut RennerContext,
) -> RennerStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        if n == 0 || n > RENNER_MAX_CONTEXT_RANK {
            return Err(Error::UnsupportedSize(format!("rank must be 1..={RENNER_MAX_CONTEXT_RANK}, got {n}")).into());
        }
        let ctx = MonoidContext::new(kind.into(), n);
        *out = Box::into_raw(Box::new(RennerContext { ctx }));
        Ok(())
    })
}

/// # Safety
/// `ctx` must be null or a handle from [`renner_context_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn renner_context_free(ctx: *mut RennerContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Number of monoid elements.
///
/// # Safety
/// `ctx` must be a live context handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn renner_context_element_count(ctx: *const RennerContext, out: *mut usize) -> RennerStatus {
    guard(|| {
        let c = handle(ctx, "context")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = c.ctx.elements().len();
        Ok(())
    })
}

/// Reduces `T_r` to standard elements. `element` is an image array such as `"0,3,0,0"`;
/// the result is a JSON object from class labels to coefficient polynomials.
///
/// # Safety
/// `ctx` must be a live context handle, `element` a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn renner_reduce(
    ctx: *const RennerContext,
    element: *const c_char,
    out: *mut *mut c_char,
) -> RennerStatus {
    guard(|| {
        let c = handle(ctx, "context")?;
        let r: PartialPerm = read_str(element, "element")?.parse()?;
        if r.degree() != c.ctx.degree() {
            return Err(Error::Parse(format!("expected {} image values, got {}", c.ctx.degree(), r.degree())).into());
        }
        let red = Rewriter::new(&c.ctx).reduce_to_standard(&r)?;
        let map: serde_json::Map<String, serde_json::Value> =
            red.coefficients.iter().map(|(l, v)| (l.to_string(), v.to_string().into())).collect();
        write_string(out, serde_json::Value::Object(map).to_string())
    })
}

/// Computes a table. `max_work` bounds the estimated operation count; 0 selects the default.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn renner_table_new(
    kind: RennerMonoidKind,
    n: usize,
    table: RennerTableKind,
    max_work: u64,
    out: *mut *mut RennerTable,
) -> RennerStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let bound = if max_work == 0 { DEFAULT_WORK_BOUND } else { u128::from(max_work) };
        let artifact = compute_table(kind.into(), n, table.into(), bound)?;
        *out = Box::into_raw(Box::new(RennerTable { artifact }));
        Ok(())
    })
}

/// # Safety
/// `table` must be null or a handle from [`renner_table_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn renner_table_free(table: *mut RennerTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Number of rows (classes); 0 for a null handle.
///
/// # Safety
/// `table` must be null or a live table handle.
#[no_mangle]
pub unsafe extern "C" fn renner_table_rows(table: *const RennerTable) -> usize {
    table.as_ref().map_or(0, |t| t.artifact.rows.len())
}

/// Number of columns (characters); 0 for a null handle.
///
/// # Safety
/// `table` must be null or a live table handle.
#[no_mangle]
pub unsafe extern "C" fn renner_table_cols(table: *const RennerTable) -> usize {
    table.as_ref().map_or(0, |t| t.artifact.cols.len())
}

fn index<T: ToString>(items: &[T], i: usize, what: &str) -> Result<String, Failure> {
    items
        .get(i)
        .map(T::to_string)
        .ok_or_else(|| Failure(RennerStatus::IndexOutOfRange, format!("{what} {i} of {}", items.len())))
}

/// Label of row `i`, such as `"(1^2,0)"`.
///
/// # Safety
/// `table` must be a live table handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn renner_table_row_label(
    table: *const RennerTable,
    i: usize,
    out: *mut *mut c_char,
) -> RennerStatus {
    guard(|| write_string(out, index(&handle(table, "table")?.artifact.rows, i, "row")?))
}

/// Label of column `j`.
///
/// # Safety
/// `table` must be a live table handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn renner_table_col_label(
    table: *const RennerTable,
    j: usize,
    out: *mut *mut c_char,
) -> RennerStatus {
    guard(|| write_string(out, index(&handle(table, "table")?.artifact.cols, j, "column")?))
}

/// Entry `(i, j)` as text, such as `"q^4-q^2"`.
///
/// # Safety
/// `table` must be a live table handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn renner_table_entry(
    table: *const RennerTable,
    i: usize,
    j: usize,
    out: *mut *mut c_char,
) -> RennerStatus {
    guard(|| {
        let t = handle(table, "table")?;
        let row = t
            .artifact
            .entries
            .get(i)
            .ok_or_else(|| Failure(RennerStatus::IndexOutOfRange, format!("row {i} of {}", t.artifact.rows.len())))?;
        write_string(out, index(row, j, "column")?)
    })
}

/// The table as the JSON artifact also written by the command-line tool.
///
/// # Safety
/// `table` must be a live table handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn renner_table_to_json(table: *const RennerTable, out: *mut *mut c_char) -> RennerStatus {
    guard(|| write_string(out, handle(table, "table")?.artifact.to_json()))
}
