//! C ABI over the levelab library.
//!
//! Every function returns a [`LevelabStatus`]; results go through out-pointers.
//! Handles are opaque and must be released with the matching `_free`.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use levelab::brown::{brown_invariant, Enhancement};
use levelab::group_ring::quotient_structure;
use levelab::magnus::{boundary_preserved, in_lambda3, tau, EndoF};
use levelab::symplectic::{self, IntVector, SympElement};
use levelab::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotSymplectic = 3,
    NotInSubgroup = 4,
    Degenerate = 5,
    SizeLimit = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// An element of `Sp(2g; Z)`.
pub struct LevelabSymp(SympElement);

/// A `Z_4` quadratic enhancement.
pub struct LevelabEnhancement(Enhancement);

/// An endomorphism of the free group `F_{2g}` with a level `d`.
pub struct LevelabAutomorphism(EndoF);

fn status_of(e: &Error) -> LevelabStatus {
    match e {
        Error::NotSymplectic => LevelabStatus::NotSymplectic,
        Error::NotInLevel(_) | Error::NotInIgusa(..) | Error::NotInKernel(_) | Error::NotIa(_) => {
            LevelabStatus::NotInSubgroup
        }
        Error::DegenerateEnhancement { .. } => LevelabStatus::Degenerate,
        Error::SizeLimit(_) => LevelabStatus::SizeLimit,
        _ => LevelabStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), LevelabStatus>) -> LevelabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LevelabStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => LevelabStatus::Panic,
    }
}

fn lib<T>(r: levelab::Result<T>) -> Result<T, LevelabStatus> {
    r.map_err(|e| status_of(&e))
}

fn nonnull<T>(p: *const T) -> Result<(), LevelabStatus> {
    if p.is_null() {
        Err(LevelabStatus::NullPointer)
    } else {
        Ok(())
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn levelab_status_message(status: LevelabStatus) -> *const c_char {
    let s: &'static CStr = match status {
        LevelabStatus::Ok => c"ok",
        LevelabStatus::NullPointer => c"null pointer",
        LevelabStatus::InvalidArgument => c"invalid argument",
        LevelabStatus::NotSymplectic => c"matrix is not symplectic",
        LevelabStatus::NotInSubgroup => c"element is outside the required subgroup",
        LevelabStatus::Degenerate => c"degenerate enhancement",
        LevelabStatus::SizeLimit => c"size limit exceeded",
        LevelabStatus::BufferTooSmall => c"output buffer too small",
        LevelabStatus::Panic => c"internal error",
    };
    s.as_ptr()
}

/// Builds a `2g x 2g` symplectic matrix from row-major entries.
///
/// # Safety
/// `entries` must point to `4 g^2` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn levelab_symp_from_entries(
    g: usize,
    entries: *const i64,
    out: *mut *mut LevelabSymp,
) -> LevelabStatus {
    guard(|| {
        nonnull(entries)?;
        nonnull(out)?;
        if g == 0 || g > 64 {
            return Err(LevelabStatus::InvalidArgument);
        }
        let n = 2 * g;
        let flat = std::slice::from_raw_parts(entries, n * n);
        let rows: Vec<Vec<i64>> = flat.chunks(n).map(|r| r.to_vec()).collect();
        let m = lib(SympElement::from_i64(g, &rows))?;
        *out = Box::into_raw(Box::new(LevelabSymp(m)));
        Ok(())
    })
}

/// `T_y^k` for `y` given by `2g` coordinates.
///
/// # Safety
/// `y` must point to `2g` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn levelab_symp_transvection(
    g: usize,
    y: *const i64,
    k: i64,
    out: *mut *mut LevelabSymp,
) -> LevelabStatus {
    guard(|| {
        nonnull(y)?;
        nonnull(out)?;
        if g == 0 || g > 64 {
            return Err(LevelabStatus::InvalidArgument);
        }
        let v = lib(IntVector::from_i64(g, std::slice::from_raw_parts(y, 2 * g)))?;
        let t = symplectic::transvection_pow(&v, k);
        *out = Box::into_raw(Box::new(LevelabSymp(t)));
        Ok(())
    })
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn levelab_symp_mul(
    a: *const LevelabSymp,
    b: *const LevelabSymp,
    out: *mut *mut LevelabSymp,
) -> LevelabStatus {
    guard(|| {
        nonnull(a)?;
        nonnull(b)?;
        nonnull(out)?;
        let m = lib((*a).0.mul(&(*b).0))?;
        *out = Box::into_raw(Box::new(LevelabSymp(m)));
        Ok(())
    })
}

/// Writes `in_level(a, d)` and, for even `d`, `in_igusa(a, d)` (else false).
///
/// # Safety
/// `a` must be a live handle; out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn levelab_symp_membership(
    a: *const LevelabSymp,
    d: u64,
    in_level: *mut bool,
    in_igusa: *mut bool,
) -> LevelabStatus {
    guard(|| {
        nonnull(a)?;
        nonnull(in_level)?;
        nonnull(in_igusa)?;
        if d == 0 {
            return Err(LevelabStatus::InvalidArgument);
        }
        *in_level = symplectic::in_level(&(*a).0, d);
        *in_igusa = d.is_multiple_of(2) && lib(symplectic::in_igusa(&(*a).0, d))?;
        Ok(())
    })
}

/// Writes `m(a) mod d` (length `2g^2 + g`) into `buf`.
///
/// # Safety
/// `a` must be a live handle; `buf` must hold `cap` values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn levelab_symp_m_map(
    a: *const LevelabSymp,
    d: u64,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> LevelabStatus {
    guard(|| {
        nonnull(a)?;
        nonnull(len)?;
        if d == 0 {
            return Err(LevelabStatus::InvalidArgument);
        }
        let v = lib(symplectic::m_map(&(*a).0, d))?;
        *len = v.len();
        if cap < v.len() {
            return Err(LevelabStatus::BufferTooSmall);
        }
        nonnull(buf)?;
        ptr::copy_nonoverlapping(v.as_ptr(), buf, v.len());
        Ok(())
    })
}

/// # Safety
/// `a` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn levelab_symp_free(a: *mut LevelabSymp) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Builds an enhancement from a `dim x dim` 0/1 pairing (row-major) and basis values.
///
/// # Safety
/// `pairing` must hold `dim^2` bytes and `values` `dim` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn levelab_enhancement_new(
    dim: usize,
    pairing: *const u8,
    values: *const i64,
    out: *mut *mut LevelabEnhancement,
) -> LevelabStatus {
    guard(|| {
        nonnull(pairing)?;
        nonnull(values)?;
        nonnull(out)?;
        if dim == 0 || dim > levelab::brown::MAX_DIM {
            return Err(LevelabStatus::SizeLimit);
        }
        let p: Vec<Vec<u8>> = std::slice::from_raw_parts(pairing, dim * dim)
            .chunks(dim)
            .map(|r| r.to_vec())
            .collect();
        let v = std::slice::from_raw_parts(values, dim);
        let e = lib(Enhancement::new(&p, v))?;
        *out = Box::into_raw(Box::new(LevelabEnhancement(e)));
        Ok(())
    })
}

/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn levelab_brown_invariant(
    e: *const LevelabEnhancement,
    out: *mut u8,
) -> LevelabStatus {
    guard(|| {
        nonnull(e)?;
        nonnull(out)?;
        *out = lib(brown_invariant(&(*e).0))?;
        Ok(())
    })
}

/// # Safety
/// `e` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn levelab_enhancement_free(e: *mut LevelabEnhancement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Invariant factors of the `Z_8` group-ring quotient, ascending.
///
/// # Safety
/// `buf` must hold `cap` values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn levelab_quotient_structure(
    g: usize,
    closed: bool,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> LevelabStatus {
    guard(|| {
        nonnull(len)?;
        let f = lib(quotient_structure(g, closed))?.factors_u64();
        *len = f.len();
        if cap < f.len() {
            return Err(LevelabStatus::BufferTooSmall);
        }
        nonnull(buf)?;
        ptr::copy_nonoverlapping(f.as_ptr(), buf, f.len());
        Ok(())
    })
}

/// Parses `{"g": .., "d": .., "images": [..]}`.
///
/// # Safety
/// `json` must be a NUL-terminated UTF-8 string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn levelab_automorphism_from_json(
    json: *const c_char,
    out: *mut *mut LevelabAutomorphism,
) -> LevelabStatus {
    guard(|| {
        nonnull(json)?;
        nonnull(out)?;
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|_| LevelabStatus::InvalidArgument)?;
        let f = lib(EndoF::from_json(text))?;
        *out = Box::into_raw(Box::new(LevelabAutomorphism(f)));
        Ok(())
    })
}

/// Evaluates `tau_d` and reports whether it vanishes and, for odd `d`,
/// whether it lies in `Lambda^3 H` (false for even `d`).
///
/// # Safety
/// `f` must be a live handle; out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn levelab_automorphism_tau(
    f: *const LevelabAutomorphism,
    is_zero: *mut bool,
    in_lambda3_out: *mut bool,
) -> LevelabStatus {
    guard(|| {
        nonnull(f)?;
        nonnull(is_zero)?;
        nonnull(in_lambda3_out)?;
        let phi = &(*f).0;
        let t = lib(tau(phi))?;
        *is_zero = t.is_zero();
        *in_lambda3_out = phi.level() % 2 == 1 && lib(in_lambda3(&t))?;
        Ok(())
    })
}

/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn levelab_automorphism_boundary_preserved(
    f: *const LevelabAutomorphism,
    out: *mut bool,
) -> LevelabStatus {
    guard(|| {
        nonnull(f)?;
        nonnull(out)?;
        *out = boundary_preserved(&(*f).0);
        Ok(())
    })
}

/// # Safety
/// `f` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn levelab_automorphism_free(f: *mut LevelabAutomorphism) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}
