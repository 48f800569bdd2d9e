//! C ABI over `suborbit_lab`.
//!
//! Objects are opaque handles created by `*_new`/`*_from_expression` and
//! released by the matching `*_free`. Every fallible call returns an
//! [`SlStatus`]; on failure `sl_last_error_message` describes the error for
//! the calling thread. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use suborbit_lab::catalog::{build_expression, Built};
use suborbit_lab::census::c_of_r;
use suborbit_lab::gf2::two_generated_scan;
use suborbit_lab::group::GroupTable;
use suborbit_lab::perm::{PermGroup, Permutation};
use suborbit_lab::suborbit::{conjecture_form_check, suborbit_profile, SuborbitProfile};
use suborbit_lab::{Error, ExactRatio};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidPermutation = 3,
    NotTransitive = 4,
    ClosureCapExceeded = 5,
    OutOfRange = 6,
    Expression = 7,
    WrongKind = 8,
    Internal = 9,
    Panic = 10,
}

/// A permutation group.
pub struct SlPermGroup(PermGroup);

/// A group given by its multiplication table.
pub struct SlGroupTable(GroupTable);

/// Suborbit profile of a transitive group at a base point.
pub struct SlProfile(SuborbitProfile);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn status_of(e: &Error) -> SlStatus {
    match e {
        Error::InvalidPermutation(_) | Error::DegreeMismatch { .. } => SlStatus::InvalidPermutation,
        Error::NotTransitive => SlStatus::NotTransitive,
        Error::ClosureCapExceeded { .. } | Error::OrderTooLarge { .. } => SlStatus::ClosureCapExceeded,
        Error::PointOutOfRange { .. } => SlStatus::OutOfRange,
        Error::Expression(_) | Error::BadConstructorInput(_) | Error::InvalidTable(_) => SlStatus::Expression,
        Error::Invariant(_) => SlStatus::Internal,
        _ => SlStatus::InvalidArgument,
    }
}

struct Fail(SlStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(SlStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, records any failure and converts panics.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SlStatus::Ok
        }
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
            set_error(format!("panic: {msg}"));
            SlStatus::Panic
        }
    }
}

unsafe fn reference<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn expression<'a>(src: *const c_char) -> Result<&'a str, Fail> {
    if src.is_null() {
        return Err(null("expression"));
    }
    CStr::from_ptr(src)
        .to_str()
        .map_err(|_| Fail(SlStatus::InvalidArgument, "expression is not UTF-8".into()))
}

fn ratio_parts(r: ExactRatio) -> (u64, u64) {
    (r.numer(), r.denom())
}

/// Copies the calling thread's last error message, NUL-terminated and
/// truncated to `capacity`, into `buffer`. Returns the full message length
/// without the terminator. `buffer` may be null when `capacity` is 0.
///
/// # Safety
/// `buffer` must be valid for `capacity` bytes.
#[no_mangle]
pub unsafe extern "C" fn sl_last_error_message(buffer: *mut c_char, capacity: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buffer.is_null() && capacity > 0 {
            let n = msg.len().min(capacity - 1);
            ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buffer, n);
            *buffer.add(n) = 0;
        }
        msg.len()
    })
}

/// Group generated by `generator_count` permutations of `0..degree`, laid
/// out one after another in `images` (`generator_count * degree` entries).
///
/// # Safety
/// `images` must be valid for that many reads and `out` for one write.
#[no_mangle]
pub unsafe extern "C" fn sl_perm_group_new(
    degree: usize,
    images: *const u32,
    generator_count: usize,
    out: *mut *mut SlPermGroup,
) -> SlStatus {
    guard(|| {
        if degree == 0 {
            return Err(Fail(SlStatus::InvalidArgument, "degree must be positive".into()));
        }
        let total = generator_count
            .checked_mul(degree)
            .ok_or_else(|| Fail(SlStatus::InvalidArgument, "generator block too large".into()))?;
        let flat: &[u32] = if total == 0 {
            &[]
        } else if images.is_null() {
            return Err(null("images"));
        } else {
            std::slice::from_raw_parts(images, total)
        };
        let gens = flat
            .chunks(degree)
            .map(|c| Permutation::from_images(c.to_vec()))
            .collect::<Result<Vec<_>, _>>()?;
        let group = PermGroup::generate(degree, gens)?;
        write(out, Box::into_raw(Box::new(SlPermGroup(group))), "out")
    })
}

/// Permutation group of a constructor expression such as `cosets(h12)`;
/// table-valued expressions give their right regular action.
///
/// # Safety
/// `expr` must be a NUL-terminated string and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sl_perm_group_from_expression(
    expr: *const c_char,
    out: *mut *mut SlPermGroup,
) -> SlStatus {
    guard(|| {
        let group = match build_expression(expression(expr)?)? {
            Built::Perm { group, .. } => group,
            Built::Table(t) => {
                let gens = t.generating_set().into_iter().map(|a| t.right_regular(a)).collect();
                PermGroup::generate(t.order(), gens)?
            }
        };
        write(out, Box::into_raw(Box::new(SlPermGroup(group))), "out")
    })
}

/// # Safety
/// `group` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sl_perm_group_free(group: *mut SlPermGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_perm_group_order(group: *const SlPermGroup, out: *mut u64) -> SlStatus {
    guard(|| {
        let g = reference(group, "group")?;
        write(out, g.0.order() as u64, "out")
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_perm_group_degree(group: *const SlPermGroup, out: *mut usize) -> SlStatus {
    guard(|| {
        let g = reference(group, "group")?;
        write(out, g.0.degree(), "out")
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_perm_group_is_transitive(group: *const SlPermGroup, out: *mut bool) -> SlStatus {
    guard(|| {
        let g = reference(group, "group")?;
        write(out, g.0.is_transitive(), "out")
    })
}

/// Suborbit profile at `base`; fails with `NotTransitive` for intransitive
/// groups.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_suborbit_profile_new(
    group: *const SlPermGroup,
    base: usize,
    out: *mut *mut SlProfile,
) -> SlStatus {
    guard(|| {
        let g = reference(group, "group")?;
        let profile = suborbit_profile(&g.0, base)?;
        write(out, Box::into_raw(Box::new(SlProfile(profile))), "out")
    })
}

/// # Safety
/// `profile` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sl_suborbit_profile_free(profile: *mut SlProfile) {
    if !profile.is_null() {
        drop(Box::from_raw(profile));
    }
}

/// Share of points in suborbits of size at most 2, in lowest terms.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_suborbit_profile_ratio(
    profile: *const SlProfile,
    numerator: *mut u64,
    denominator: *mut u64,
) -> SlStatus {
    guard(|| {
        let p = reference(profile, "profile")?;
        let (a, b) = ratio_parts(p.0.ratio);
        write(numerator, a, "numerator")?;
        write(denominator, b, "denominator")
    })
}

/// Number of points fixed by the point stabilizer.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_suborbit_profile_fixed_points(profile: *const SlProfile, out: *mut usize) -> SlStatus {
    guard(|| {
        let p = reference(profile, "profile")?;
        write(out, p.0.d, "out")
    })
}

/// Number of points lying in suborbits of size exactly `size`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_suborbit_profile_part_count(
    profile: *const SlProfile,
    size: usize,
    out: *mut usize,
) -> SlStatus {
    guard(|| {
        let p = reference(profile, "profile")?;
        write(out, p.0.part(size).len(), "out")
    })
}

/// Writes the sorted points of part `size` into `buffer` (at most
/// `capacity`) and the part's full length into `length`.
///
/// # Safety
/// `buffer` must be valid for `capacity` writes; other pointers valid.
#[no_mangle]
pub unsafe extern "C" fn sl_suborbit_profile_part(
    profile: *const SlProfile,
    size: usize,
    buffer: *mut u32,
    capacity: usize,
    length: *mut usize,
) -> SlStatus {
    guard(|| {
        let p = reference(profile, "profile")?;
        let part = p.0.part(size);
        let points = part.points();
        if capacity > 0 {
            if buffer.is_null() {
                return Err(null("buffer"));
            }
            let n = points.len().min(capacity);
            ptr::copy_nonoverlapping(points.as_ptr(), buffer, n);
        }
        write(length, points.len(), "length")
    })
}

/// Multiplication table of a constructor expression such as
/// `central(dihedral(8),dihedral(8),2,2)`.
///
/// # Safety
/// `expr` must be a NUL-terminated string and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sl_group_table_construct(expr: *const c_char, out: *mut *mut SlGroupTable) -> SlStatus {
    guard(|| match build_expression(expression(expr)?)? {
        Built::Table(t) => write(out, Box::into_raw(Box::new(SlGroupTable(t))), "out"),
        Built::Perm { .. } => Err(Fail(
            SlStatus::WrongKind,
            "expression builds a permutation group, not a table".into(),
        )),
    })
}

/// # Safety
/// `table` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sl_group_table_free(table: *mut SlGroupTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_group_table_order(table: *const SlGroupTable, out: *mut usize) -> SlStatus {
    guard(|| {
        let t = reference(table, "table")?;
        write(out, t.0.order(), "out")
    })
}

/// Product `a b`; element 0 is the identity.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_group_table_mul(table: *const SlGroupTable, a: u32, b: u32, out: *mut u32) -> SlStatus {
    guard(|| {
        let t = reference(table, "table")?;
        let n = t.0.order();
        if a as usize >= n || b as usize >= n {
            return Err(Error::PointOutOfRange {
                point: a.max(b) as usize,
                degree: n,
            }
            .into());
        }
        write(out, t.0.mul(a, b), "out")
    })
}

/// `(|R| + |{x : x^2 = 1}|) / 2`: the base-2 logarithm of the number of
/// inverse-closed subsets.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_group_table_c_of_r(table: *const SlGroupTable, out: *mut usize) -> SlStatus {
    guard(|| {
        let t = reference(table, "table")?;
        write(out, c_of_r(&t.0), "out")
    })
}

/// Whether `numerator/denominator` is at most 1/2 or equals `(q + 1) / 2q`
/// with `2q` a positive integer. `q` is written as 0/0 for ratios at most
/// 1/2.
///
/// # Safety
/// Output pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_conjecture_check(
    numerator: u64,
    denominator: u64,
    conforms: *mut bool,
    q_numerator: *mut u64,
    q_denominator: *mut u64,
) -> SlStatus {
    guard(|| {
        let ratio = ExactRatio::new(numerator, denominator)
            .filter(|r| *r <= ExactRatio::one())
            .ok_or_else(|| Fail(SlStatus::InvalidArgument, format!("{numerator}/{denominator} is not in [0, 1]")))?;
        let form = conjecture_form_check(ratio);
        let (a, b) = form.q.map_or((0, 0), ratio_parts);
        write(conforms, form.conforms, "conforms")?;
        write(q_numerator, a, "q_numerator")?;
        write(q_denominator, b, "q_denominator")
    })
}

/// Runs the two-generated GL(4,2) subgroup scan. `passed` reports the
/// structural checks; `nonconforming` counts frame ratios above 1/2 not of
/// the form `(q + 1) / 2q` with `2q` integral.
///
/// # Safety
/// Output pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_verify_gl42(passed: *mut bool, nonconforming: *mut usize) -> SlStatus {
    guard(|| {
        let report = two_generated_scan();
        write(passed, report.passed(), "passed")?;
        write(nonconforming, report.nonconforming.len(), "nonconforming")
    })
}
