//! C ABI over `cayley-core`.
//!
//! Tables and series are opaque handles created by `*_new`-style functions
//! and released with the matching `*_free`. Every fallible function returns a
//! [`CayleyStatus`] and writes its result through an out-pointer; big numbers
//! and rationals come back as NUL-terminated decimal strings (`"p/q"` for
//! rationals) that the caller releases with [`cayley_string_free`]. After a
//! non-OK status, [`cayley_last_error_message`] describes the failure on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cayley_core::cli::{run_suite, Suite};
use cayley_core::oracle::{self, Census};
use cayley_core::recurrence::{self, TreeCountTable};
use cayley_core::series::{self, FormalSeries};
use cayley_core::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CayleyStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    OracleLimit = 3,
    Invariant = 4,
    Panic = 5,
}

/// Verification suites, mirroring `cayley verify <suite>`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CayleySuite {
    ClosedForm = 0,
    EdgeSymmetry = 1,
    Oracle = 2,
    Split = 3,
    Series = 4,
}

/// Identities that [`cayley_series_residual`] can check.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CayleyResidual {
    /// `T^2` against the recurrence-weighted sum; needs a table.
    Square = 0,
    /// `T T' = T' - T/S`.
    Ode = 1,
    /// `T = log(T/S)`.
    LogForm = 2,
    /// `T = S exp(T)`.
    FunctionalEquation = 3,
}

/// Opaque memoized table of tree counts.
pub struct CayleyTable(TreeCountTable);

/// Opaque truncated power series with exact rational coefficients.
pub struct CayleySeries(FormalSeries);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c =
        CString::new(msg).unwrap_or_else(|_| CString::new("error message contained NUL").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> CayleyStatus {
    match err {
        Error::Domain(_) => CayleyStatus::Domain,
        Error::OracleLimit { .. } => CayleyStatus::OracleLimit,
        Error::Invariant(_) => CayleyStatus::Invariant,
    }
}

enum Fault {
    Null(&'static str),
    Core(Error),
}

impl From<Error> for Fault {
    fn from(e: Error) -> Self {
        Fault::Core(e)
    }
}

/// Runs `f`, mapping errors and panics onto a status and the last-error slot.
fn guard(f: impl FnOnce() -> Result<(), Fault>) -> CayleyStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CayleyStatus::Ok,
        Ok(Err(Fault::Null(what))) => {
            set_last_error(format!("null pointer: {what}"));
            CayleyStatus::NullPointer
        }
        Ok(Err(Fault::Core(e))) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_last_error("internal panic".into());
            CayleyStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Fault> {
    p.as_ref().ok_or(Fault::Null(what))
}

unsafe fn deref_mut<'a, T>(p: *mut T, what: &'static str) -> Result<&'a mut T, Fault> {
    p.as_mut().ok_or(Fault::Null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fault> {
    if out.is_null() {
        return Err(Fault::Null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fault> {
    if out.is_null() {
        return Err(Fault::Null("out"));
    }
    // decimal digits, '-' and '/' never contain NUL
    out.write(CString::new(s).expect("no interior NUL").into_raw());
    Ok(())
}

fn suite_of(s: CayleySuite) -> Suite {
    match s {
        CayleySuite::ClosedForm => Suite::ClosedForm,
        CayleySuite::EdgeSymmetry => Suite::EdgeSymmetry,
        CayleySuite::Oracle => Suite::Oracle,
        CayleySuite::Split => Suite::Split,
        CayleySuite::Series => Suite::Series,
    }
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn cayley_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn cayley_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a table filled through `max_n` (>= 1).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cayley_table_new(max_n: u64, out: *mut *mut CayleyTable) -> CayleyStatus {
    guard(|| {
        let table = TreeCountTable::with_max(max_n)?;
        write_out(out, Box::into_raw(Box::new(CayleyTable(table))))
    })
}

/// # Safety
/// `table` must come from [`cayley_table_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cayley_table_free(table: *mut CayleyTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// # Safety
/// `table` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cayley_table_max_n(
    table: *const CayleyTable,
    out: *mut u64,
) -> CayleyStatus {
    guard(|| write_out(out, deref(table, "table")?.0.max_n()))
}

/// `T_n` from the recurrence, extending the table as needed.
///
/// # Safety
/// `table` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cayley_tree_count(
    table: *mut CayleyTable,
    n: u64,
    out: *mut *mut c_char,
) -> CayleyStatus {
    guard(|| {
        let table = deref_mut(table, "table")?;
        let v = recurrence::tree_count_recursive(n, &mut table.0)?;
        write_string(out, v.to_string())
    })
}

/// `n^(n-2)` (1 at n = 1).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cayley_tree_count_closed(n: u64, out: *mut *mut c_char) -> CayleyStatus {
    guard(|| write_string(out, recurrence::tree_count_closed(n)?.to_string()))
}

/// Number of trees containing the edge `{1, 2}` (n >= 2).
///
/// # Safety
/// `table` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cayley_edge_rooted_count(
    table: *mut CayleyTable,
    n: u64,
    out: *mut *mut c_char,
) -> CayleyStatus {
    guard(|| {
        let table = deref_mut(table, "table")?;
        let v = recurrence::edge_rooted_count(n, &mut table.0)?;
        write_string(out, v.to_string())
    })
}

/// Checks `n * E_n = 2 * T_n`.
///
/// # Safety
/// `table` must be a live handle and `passed` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cayley_verify_edge_symmetry(
    table: *mut CayleyTable,
    n: u64,
    passed: *mut bool,
) -> CayleyStatus {
    guard(|| {
        let table = deref_mut(table, "table")?;
        let r = recurrence::verify_edge_symmetry(n, &mut table.0)?;
        write_out(passed, r.passed())
    })
}

/// `C(n, k)`, zero when `k > n`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cayley_binomial(n: u64, k: u64, out: *mut *mut c_char) -> CayleyStatus {
    guard(|| write_string(out, recurrence::binomial(n, k).to_string()))
}

/// Brute-force count of labeled trees on `n` vertices (1 <= n <= 8).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cayley_oracle_tree_count(n: u32, out: *mut u64) -> CayleyStatus {
    guard(|| {
        let trees = oracle::enumerate_labeled_trees(n as usize)?;
        write_out(out, trees.len() as u64)
    })
}

/// Brute-force count of trees on `n` vertices containing `{u, v}`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cayley_oracle_trees_with_edge(
    n: u32,
    u: u32,
    v: u32,
    out: *mut u64,
) -> CayleyStatus {
    guard(|| {
        let count = Census::new(n as usize)?.trees_with_edge(u, v)?;
        write_out(out, u64::try_from(count).expect("n <= 8 counts fit in u64"))
    })
}

/// Runs a verification suite up to `bound`; `all_passed` receives the verdict.
///
/// # Safety
/// `all_passed` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cayley_verify(
    suite: CayleySuite,
    bound: u64,
    all_passed: *mut bool,
) -> CayleyStatus {
    guard(|| {
        let reports = run_suite(suite_of(suite), bound, None)?;
        write_out(all_passed, reports.iter().all(|r| r.passed()))
    })
}

/// Generating function `sum T_n S^n / (n-1)!` through `order`.
///
/// # Safety
/// `table` must be a live handle covering `order`; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cayley_series_tree_egf(
    table: *const CayleyTable,
    order: usize,
    out: *mut *mut CayleySeries,
) -> CayleyStatus {
    guard(|| {
        let s = series::tree_egf(order, &deref(table, "table")?.0)?;
        write_out(out, Box::into_raw(Box::new(CayleySeries(s))))
    })
}

/// Solution of `T = S exp(T)` through `order` by Lagrange inversion.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cayley_series_lagrange_exp(
    order: usize,
    out: *mut *mut CayleySeries,
) -> CayleyStatus {
    guard(|| {
        if order == 0 {
            return Err(Error::Domain("inversion order must be >= 1".into()).into());
        }
        let s = series::lagrange_invert(&FormalSeries::exp_x(order - 1), order)?;
        write_out(out, Box::into_raw(Box::new(CayleySeries(s))))
    })
}

/// Builds a series from `len` coefficients given as `"p/q"` or `"p"` strings.
///
/// # Safety
/// `coeffs` must point to `len` valid NUL-terminated strings; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cayley_series_from_strings(
    coeffs: *const *const c_char,
    len: usize,
    out: *mut *mut CayleySeries,
) -> CayleyStatus {
    guard(|| {
        if coeffs.is_null() {
            return Err(Fault::Null("coeffs"));
        }
        let mut parsed = Vec::with_capacity(len);
        for i in 0..len {
            let p = *coeffs.add(i);
            if p.is_null() {
                return Err(Fault::Null("coefficient string"));
            }
            let text = CStr::from_ptr(p)
                .to_str()
                .map_err(|_| Error::Domain("coefficient is not UTF-8".into()))?;
            parsed.push(text.parse()?);
        }
        let s = FormalSeries::from_coeffs(parsed)?;
        write_out(out, Box::into_raw(Box::new(CayleySeries(s))))
    })
}

/// # Safety
/// `series` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cayley_series_free(series: *mut CayleySeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

/// # Safety
/// `series` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cayley_series_order(
    series: *const CayleySeries,
    out: *mut usize,
) -> CayleyStatus {
    guard(|| write_out(out, deref(series, "series")?.0.order()))
}

/// Coefficient of `S^power` as `"p/q"`.
///
/// # Safety
/// `series` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cayley_series_coeff(
    series: *const CayleySeries,
    power: usize,
    out: *mut *mut c_char,
) -> CayleyStatus {
    guard(|| {
        let s = &deref(series, "series")?.0;
        let c = s.coeff(power).ok_or_else(|| {
            Error::Domain(format!(
                "power {power} exceeds truncation order {}",
                s.order()
            ))
        })?;
        write_string(out, c.to_string())
    })
}

/// Checks one identity on `series`; `is_zero` is true when its residual
/// vanishes. `table` is only read for [`CayleyResidual::Square`] and may be
/// NULL otherwise.
///
/// # Safety
/// Handles must be live (or NULL where allowed) and `is_zero` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cayley_series_residual(
    series: *const CayleySeries,
    table: *const CayleyTable,
    kind: CayleyResidual,
    is_zero: *mut bool,
) -> CayleyStatus {
    guard(|| {
        let t = &deref(series, "series")?.0;
        let r = match kind {
            CayleyResidual::Square => {
                series::square_identity_residual(t, &deref(table, "table")?.0)?
            }
            CayleyResidual::Ode => series::ode_residual(t)?,
            CayleyResidual::LogForm => series::log_form_residual(t)?,
            CayleyResidual::FunctionalEquation => series::functional_equation_residual(t)?,
        };
        write_out(is_zero, r.is_zero())
    })
}
