//! C interface to `fillcurve`.
//!
//! Fields and polynomials cross the boundary as opaque handles that the
//! caller frees. Every fallible call returns an [`FcStatus`]; the message of
//! the most recent failure on the calling thread is available from
//! [`fc_last_error`]. Strings handed out by this library must be released
//! with [`fc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fillcurve::analysis::{certify_smooth, is_abs_irreducible, Verdict};
use fillcurve::bipoly::{parse_bipoly, BiPoly};
use fillcurve::bounds::homma_bound;
use fillcurve::families::{construct, Orientation};
use fillcurve::filling::{decompose, is_filling};
use fillcurve::geom::count_points;
use fillcurve::gf::FieldSpec;
use fillcurve::search::{census, CensusOptions};
use fillcurve::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FcStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Polynomial or field text could not be parsed.
    Parse = 3,
    /// Field parameters or operands were rejected.
    InvalidArgument = 4,
    /// The polynomial does not vanish on every rational point.
    NotFilling = 5,
    /// The work estimate exceeded the configured budget.
    Infeasible = 6,
    /// A Rust panic was caught at the boundary.
    Internal = 7,
}

/// Outcome of the smoothness certificate.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FcVerdict {
    Smooth = 0,
    Singular = 1,
    Inconclusive = 2,
}

/// A finite field. Create with [`fc_field_new`] or [`fc_field_parse`].
pub struct FcField {
    inner: FieldSpec,
}

/// A bihomogeneous polynomial over an [`FcField`].
pub struct FcPoly {
    inner: BiPoly,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn remember(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> FcStatus {
    match e {
        Error::Syntax { .. } | Error::MixedBidegree(..) | Error::BadCoefficient(_) => {
            FcStatus::Parse
        }
        Error::NotFilling | Error::BidegreeTooSmall { .. } => FcStatus::NotFilling,
        Error::Infeasible { .. } => FcStatus::Infeasible,
        _ => FcStatus::InvalidArgument,
    }
}

/// Runs `body`, turning errors and panics into a status plus a stored message.
fn guard(body: impl FnOnce() -> Result<(), (FcStatus, String)>) -> FcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => FcStatus::Ok,
        Ok(Err((status, message))) => {
            remember(message);
            status
        }
        Err(_) => {
            remember("internal panic".into());
            FcStatus::Internal
        }
    }
}

fn lib(e: Error) -> (FcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (FcStatus, String) {
    (FcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, (FcStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, (FcStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (FcStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), (FcStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn into_c(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn boxed_poly(p: BiPoly) -> *mut FcPoly {
    Box::into_raw(Box::new(FcPoly { inner: p }))
}

/// Copy of the last error message on this thread, or null if none.
/// Release it with [`fc_string_free`].
#[no_mangle]
pub extern "C" fn fc_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |c| c.clone().into_raw())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library that has not been
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn fc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `GF(q)` with its canonical modulus.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_field_new(q: u64, out: *mut *mut FcField) -> FcStatus {
    guard(|| {
        let inner = FieldSpec::from_order(q).map_err(lib)?;
        put(out, Box::into_raw(Box::new(FcField { inner })), "out")
    })
}

/// A field from its text form, e.g. `"p=3,e=2,mod=[1,0,1]"`.
///
/// # Safety
/// `spec` must be a nul-terminated string and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn fc_field_parse(spec: *const c_char, out: *mut *mut FcField) -> FcStatus {
    guard(|| {
        let inner = FieldSpec::parse(text(spec, "spec")?).map_err(lib)?;
        put(out, Box::into_raw(Box::new(FcField { inner })), "out")
    })
}

/// # Safety
/// `field` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fc_field_free(field: *mut FcField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Number of elements, or 0 when it does not fit in 64 bits.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_field_order(field: *const FcField) -> u64 {
    field.as_ref().and_then(|f| f.inner.order()).unwrap_or(0)
}

/// Parses polynomial text over `field`.
///
/// # Safety
/// `field` must be a live handle, `src` a nul-terminated string and `out`
/// valid for writing.
#[no_mangle]
pub unsafe extern "C" fn fc_poly_parse(
    field: *const FcField,
    src: *const c_char,
    out: *mut *mut FcPoly,
) -> FcStatus {
    guard(|| {
        let field = borrow(field, "field")?;
        let poly = parse_bipoly(text(src, "src")?, &field.inner).map_err(lib)?;
        put(out, boxed_poly(poly), "out")
    })
}

/// # Safety
/// `poly` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fc_poly_free(poly: *mut FcPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Canonical text of `poly`, or null if `poly` is null. Release with
/// [`fc_string_free`].
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_poly_to_string(poly: *const FcPoly) -> *mut c_char {
    poly.as_ref()
        .map_or(ptr::null_mut(), |p| into_c(p.inner.to_text()))
}

/// # Safety
/// `poly` must be a live handle; `a` and `b` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn fc_poly_bidegree(
    poly: *const FcPoly,
    a: *mut usize,
    b: *mut usize,
) -> FcStatus {
    guard(|| {
        let (da, db) = borrow(poly, "poly")?.inner.bidegree();
        put(a, da, "a")?;
        put(b, db, "b")
    })
}

/// The minimal filling curve for `q`; `transposed` swaps the factors.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_construct(q: u64, transposed: bool, out: *mut *mut FcPoly) -> FcStatus {
    guard(|| {
        let o = if transposed {
            Orientation::Transposed
        } else {
            Orientation::Standard
        };
        put(out, boxed_poly(construct(q, o).map_err(lib)?), "out")
    })
}

/// # Safety
/// `poly` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn fc_is_filling(poly: *const FcPoly, out: *mut bool) -> FcStatus {
    guard(|| {
        put(
            out,
            is_filling(&borrow(poly, "poly")?.inner).map_err(lib)?,
            "out",
        )
    })
}

/// Zeros on `P1 x P1` over the degree-`ext` extension.
///
/// # Safety
/// `poly` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn fc_count_points(
    poly: *const FcPoly,
    ext: usize,
    out: *mut u64,
) -> FcStatus {
    guard(|| {
        put(
            out,
            count_points(&borrow(poly, "poly")?.inner, ext).map_err(lib)?,
            "out",
        )
    })
}

/// # Safety
/// `poly` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn fc_certify_smooth(poly: *const FcPoly, out: *mut FcVerdict) -> FcStatus {
    guard(|| {
        let v = match certify_smooth(&borrow(poly, "poly")?.inner).verdict {
            Verdict::Smooth => FcVerdict::Smooth,
            Verdict::Singular => FcVerdict::Singular,
            Verdict::Inconclusive => FcVerdict::Inconclusive,
        };
        put(out, v, "out")
    })
}

/// # Safety
/// `poly` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn fc_is_abs_irreducible(poly: *const FcPoly, out: *mut bool) -> FcStatus {
    guard(|| {
        put(
            out,
            is_abs_irreducible(&borrow(poly, "poly")?.inner)
                .map_err(lib)?
                .irreducible,
            "out",
        )
    })
}

/// Writes `poly = f*K_X + g*K_Y`; both outputs are new handles.
///
/// # Safety
/// `poly` must be a live handle; `f` and `g` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn fc_decompose(
    poly: *const FcPoly,
    f: *mut *mut FcPoly,
    g: *mut *mut FcPoly,
) -> FcStatus {
    guard(|| {
        let poly = borrow(poly, "poly")?;
        if f.is_null() || g.is_null() {
            return Err(null("output"));
        }
        let d = decompose(&poly.inner).map_err(lib)?;
        put(f, boxed_poly(d.f), "f")?;
        put(g, boxed_poly(d.g), "g")
    })
}

/// Largest possible number of rational points on a nondegenerate
/// irreducible curve of degree `d` in `P^r` over `GF(q)`.
///
/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn fc_point_bound(q: u64, r: u32, d: u64, out: *mut u64) -> FcStatus {
    guard(|| {
        let n = homma_bound(q, r, d).map_err(lib)?;
        let n = u64::try_from(n)
            .map_err(|_| (FcStatus::InvalidArgument, "bound exceeds 64 bits".into()))?;
        put(out, n, "out")
    })
}

/// Census of bi-degree `(a, b)` over `field` as a JSON document. Release
/// the string with [`fc_string_free`].
///
/// # Safety
/// `field` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn fc_census_json(
    field: *const FcField,
    a: usize,
    b: usize,
    jobs: usize,
    out: *mut *mut c_char,
) -> FcStatus {
    guard(|| {
        let field = borrow(field, "field")?;
        let opts = CensusOptions {
            jobs: jobs.max(1),
            partitions: jobs.max(1),
            ..CensusOptions::default()
        };
        let report = census(&field.inner, a, b, &opts).map_err(lib)?;
        let doc =
            serde_json::to_string(&report).map_err(|e| (FcStatus::Internal, e.to_string()))?;
        put(out, into_c(doc), "out")
    })
}
