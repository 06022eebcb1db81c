//! C interface to the tt2 checker and generators.
//!
//! Strings crossing the boundary are NUL-terminated UTF-8. Strings returned
//! through `out` parameters are owned by the caller and released with
//! [`tt2_string_free`]. Sessions are opaque and released with
//! [`tt2_session_free`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tt2::delta::enumerate_mono;
use tt2::driver::{Session, SessionError};
use tt2::sstgen::{generate, Artifact, GenPlan};
use tt2::syntax::Universes;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tt2Status {
    Ok = 0,
    /// The input was processed and produced diagnostics.
    Diagnostics = 1,
    InvalidArgument = 2,
    NotFound = 3,
    Utf8 = 4,
    Panic = 5,
}

pub const TT2_ARTIFACT_SST: u32 = 0;
pub const TT2_ARTIFACT_SPINE: u32 = 1;
pub const TT2_ARTIFACT_SEGAL: u32 = 2;

/// A checking session with its own signature.
pub struct Tt2Session {
    inner: Session,
}

fn guard(f: impl FnOnce() -> Tt2Status) -> Tt2Status {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(Tt2Status::Panic)
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Tt2Status> {
    if p.is_null() {
        return Err(Tt2Status::InvalidArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| Tt2Status::Utf8)
}

unsafe fn write_out(out: *mut *mut c_char, s: String) -> Tt2Status {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            Tt2Status::Ok
        }
        Err(_) => Tt2Status::Utf8,
    }
}

/// Returns null if `universes` is zero.
#[no_mangle]
pub extern "C" fn tt2_session_new(universes: u32, collapse_fibrant: bool) -> *mut Tt2Session {
    catch_unwind(|| match Universes::new(universes, collapse_fibrant) {
        Ok(u) => Box::into_raw(Box::new(Tt2Session { inner: Session::new(u) })),
        Err(_) => ptr::null_mut(),
    })
    .unwrap_or(ptr::null_mut())
}

/// # Safety
/// `session` must come from [`tt2_session_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tt2_session_free(session: *mut Tt2Session) {
    if !session.is_null() {
        drop(Box::from_raw(session));
    }
}

/// Check `source` into the session, labelling diagnostics with `file`.
///
/// # Safety
/// Pointers must be valid; `session` must be live.
#[no_mangle]
pub unsafe extern "C" fn tt2_session_check(
    session: *mut Tt2Session,
    file: *const c_char,
    source: *const c_char,
) -> Tt2Status {
    guard(|| {
        let Some(s) = session.as_mut() else {
            return Tt2Status::InvalidArgument;
        };
        let (file, source) = match (read_str(file), read_str(source)) {
            (Ok(f), Ok(t)) => (f, t),
            (Err(e), _) | (_, Err(e)) => return e,
        };
        if s.inner.check_source(file, source) == 0 {
            Tt2Status::Ok
        } else {
            Tt2Status::Diagnostics
        }
    })
}

/// Total diagnostics so far; zero for a null session.
///
/// # Safety
/// `session` must be null or live.
#[no_mangle]
pub unsafe extern "C" fn tt2_session_diagnostic_count(session: *const Tt2Session) -> usize {
    session.as_ref().map_or(0, |s| s.inner.reports().len())
}

/// All diagnostics as a JSON array.
///
/// # Safety
/// `session` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tt2_session_diagnostics_json(session: *const Tt2Session, out: *mut *mut c_char) -> Tt2Status {
    guard(|| {
        let Some(s) = session.as_ref() else {
            return Tt2Status::InvalidArgument;
        };
        if out.is_null() {
            return Tt2Status::InvalidArgument;
        }
        let all: Vec<_> = s.inner.reports().iter().map(|r| r.to_json()).collect();
        write_out(out, serde_json::Value::Array(all).to_string())
    })
}

/// Normal form of the definition `name`.
///
/// # Safety
/// Pointers must be valid; `session` must be live.
#[no_mangle]
pub unsafe extern "C" fn tt2_session_normalize(
    session: *const Tt2Session,
    name: *const c_char,
    out: *mut *mut c_char,
) -> Tt2Status {
    guard(|| {
        let Some(s) = session.as_ref() else {
            return Tt2Status::InvalidArgument;
        };
        if out.is_null() {
            return Tt2Status::InvalidArgument;
        }
        let name = match read_str(name) {
            Ok(n) => n,
            Err(e) => return e,
        };
        match s.inner.normalize(name) {
            Ok(nf) => write_out(out, nf),
            Err(SessionError::Undefined(_)) => Tt2Status::NotFound,
            Err(_) => Tt2Status::InvalidArgument,
        }
    })
}

/// Generate scaffolding; `artifact` is one of the `TT2_ARTIFACT_*` values
/// and `prefix` may be null.
///
/// # Safety
/// `prefix` must be null or a valid string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tt2_generate(
    artifact: u32,
    levels: usize,
    literal_spine: bool,
    prefix: *const c_char,
    out: *mut *mut c_char,
) -> Tt2Status {
    guard(|| {
        let artifact = match artifact {
            TT2_ARTIFACT_SST => Artifact::Sst,
            TT2_ARTIFACT_SPINE => Artifact::Spine,
            TT2_ARTIFACT_SEGAL => Artifact::Segal,
            _ => return Tt2Status::InvalidArgument,
        };
        if out.is_null() {
            return Tt2Status::InvalidArgument;
        }
        let mut plan = GenPlan::new(levels, artifact);
        plan.literal_spine = literal_spine;
        if !prefix.is_null() {
            match read_str(prefix) {
                Ok(p) => plan.prefix = p.to_string(),
                Err(e) => return e,
            }
        }
        match generate(&plan) {
            Ok(text) => write_out(out, text),
            Err(_) => Tt2Status::InvalidArgument,
        }
    })
}

/// Every strictly monotone map `[k] -> [n]`, one per line.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tt2_delta_faces(k: usize, n: usize, out: *mut *mut c_char) -> Tt2Status {
    guard(|| {
        if out.is_null() {
            return Tt2Status::InvalidArgument;
        }
        let text: String = enumerate_mono(k, n).iter().map(|f| format!("{f}\n")).collect();
        write_out(out, text)
    })
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn tt2_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// A static description of `status`.
#[no_mangle]
pub extern "C" fn tt2_status_message(status: Tt2Status) -> *const c_char {
    let msg: &'static CStr = match status {
        Tt2Status::Ok => c"ok",
        Tt2Status::Diagnostics => c"input has diagnostics",
        Tt2Status::InvalidArgument => c"invalid argument",
        Tt2Status::NotFound => c"not found",
        Tt2Status::Utf8 => c"string is not valid UTF-8 or contains NUL",
        Tt2Status::Panic => c"internal error",
    };
    msg.as_ptr()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn panics_become_status() {
        assert_eq!(guard(|| panic!("boom")), Tt2Status::Panic);
        assert_eq!(guard(|| Tt2Status::Ok), Tt2Status::Ok);
    }
}
